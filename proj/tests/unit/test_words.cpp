#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "borel/quadruple.hpp"
#include "borel/words.hpp"

using namespace borel;

namespace {

MultiPoly rv(VarId v) { return MultiPoly::var(v); }

// n=2 point r=diag(1,2), s=0, i=(1,1), j=(1,1)
NumQuadruple base_point2() {
    NumQuadruple q;
    q.n = 2;
    q.r = Mat<Rational>(2, 2, Shape::Upper);
    q.r.at(1, 1) = Rational(1);
    q.r.at(2, 2) = Rational(2);
    q.s = Mat<Rational>(2, 2, Shape::LowerRep);
    q.i = Mat<Rational>::column({Rational(1), Rational(1)});
    q.j = Mat<Rational>::row({Rational(1), Rational(1)});
    return q;
}

GroupElement diag23() {
    Mat<Rational> b(2, 2, Shape::Upper);
    b.at(1, 1) = Rational(2);
    b.at(2, 2) = Rational(3);
    return GroupElement(b);
}

std::vector<WordSum> random_tuple(Rng& rng, int n, int max_len) {
    std::vector<WordSum> words;
    for (int k = 0; k < n; ++k) words.emplace_back(random_word(rng, n, max_len));
    return words;
}

// guard-free random words (ELL/LR atoms only), so every relabeling exists
Word random_free_word(Rng& rng, int n, int max_len) {
    int len = static_cast<int>(rng.next_int(0, max_len));
    Word w(n);
    for (int k = 0; k < len; ++k) {
        if (rng.next_int(0, 1) == 0) {
            unsigned mask = static_cast<unsigned>(rng.next_int(0, (1 << n) - 1));
            std::vector<int> elems;
            for (int m = 1; m <= n; ++m)
                if (mask & (1u << (m - 1))) elems.push_back(m);
            w.gens.push_back(Generator::ell(SubsetIndex(n, elems)));
        } else {
            w.gens.push_back(Generator::lr(n, static_cast<int>(rng.next_int(1, n))));
        }
    }
    return w;
}

std::vector<WordSum> random_free_tuple(Rng& rng, int n, int max_len) {
    std::vector<WordSum> words;
    for (int k = 0; k < n; ++k) words.emplace_back(random_free_word(rng, n, max_len));
    return words;
}

} // namespace

TEST_CASE("word specs parse and print") {
    Word w = Word::parse(3, "ELL{1,3}*GUARDN{2}");
    CHECK(w.gens.size() == 2);
    CHECK(w.gens[0].kind == GenKind::Ell);
    CHECK(w.gens[0].J == SubsetIndex(3, {1, 3}));
    CHECK(w.gens[1].kind == GenKind::GuardN);
    CHECK(w.str() == "ELL{1,3}*GUARDN{2}");
    CHECK(Word::parse(3, w.str()) == w);

    CHECK(Word::parse(2, "1") == Word(2));
    CHECK(Word::parse(2, "I") == Word(2));
    CHECK(Word(2).str() == "1");

    Word lr = Word::parse(3, "LR{2}");
    CHECK(lr.gens[0].kind == GenKind::LR);
    CHECK(lr.gens[0].iota == 2);
    CHECK(lr.gens[0].J == SubsetIndex::complement(3, 2));
    CHECK(lr.str() == "LR{2}");
    CHECK(Word::parse(2, "guard1{}").str() == "GUARD1{}");

    CHECK_THROWS_AS(Word::parse(2, ""), ParseError);
    CHECK_THROWS_AS(Word::parse(2, "ELL"), ParseError);
    CHECK_THROWS_AS(Word::parse(2, "FOO{1}"), ParseError);
    CHECK_THROWS_AS(Word::parse(2, "LR{}"), ParseError);
    CHECK_THROWS_AS(Word::parse(2, "LR{1,2}"), ParseError);
    CHECK_THROWS_AS(Word::parse(2, "ELL{1}*"), ParseError);
    CHECK_THROWS_AS(Word::parse(2, "ELL{3}"), ParseError);

    std::vector<WordSum> tup = parse_word_tuple(3, "1,ELL{1,3}*GUARDN{2},LR{1}");
    CHECK(tup.size() == 3);
    CHECK(tup[0].str() == "1");
    CHECK(tup[1].str() == "ELL{1,3}*GUARDN{2}");
    CHECK(tup[2].str() == "LR{1}");
    CHECK_THROWS_AS(parse_word_tuple(3, "ELL{1,3"), ParseError);

    // round trip over random words
    Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        Word rw = random_word(rng, 3, 3);
        CHECK(Word::parse(3, rw.str()) == rw);
    }
}

TEST_CASE("realization basics") {
    // empty word -> identity
    RealizedWord id = realize(Word(3));
    CHECK(id.num == Mat<MultiPoly>::identity(3));
    CHECK(id.den == MultiPoly(Rational(1)));

    // ELL{1} at n=2, r=[[1,1],[0,2]] -> [[0,1],[0,1]]
    RealizedWord e = realize(Word::parse(2, "ELL{1}"));
    std::map<VarId, Rational> pt{{VarId::r(1, 1), Rational(1)},
                                 {VarId::r(1, 2), Rational(1)},
                                 {VarId::r(2, 2), Rational(2)}};
    Mat<Rational> v = eval_matrix(e.num, pt);
    CHECK(v.at(1, 1) == Rational(0));
    CHECK(v.at(1, 2) == Rational(1));
    CHECK(v.at(2, 1) == Rational(0));
    CHECK(v.at(2, 2) == Rational(1));

    // LR carries its trace denominator
    RealizedWord lr = realize(Word::parse(2, "LR{1}"));
    CHECK(lr.den == tr_J(SubsetIndex::complement(2, 1)));
    CHECK(lr.num == ell_J(SubsetIndex::complement(2, 1)) * symbolic_r(2));
}

TEST_CASE("guarded generators see a single line of s") {
    for (int n = 2; n <= 4; ++n) {
        RealizedWord gn = realize(Word(n, {Generator::guard_n(SubsetIndex::empty(n))}));
        RealizedWord g1 = realize(Word(n, {Generator::guard_1(SubsetIndex::empty(n))}));
        bool gn_nonzero = false, g1_nonzero = false;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                for (VarId v : gn.num.at(a, b).support())
                    if (v.kind() == VarKind::S) {
                        CHECK(v.a() == n);
                        gn_nonzero = true;
                    }
                for (VarId v : g1.num.at(a, b).support())
                    if (v.kind() == VarKind::S) {
                        CHECK(v.b() == 1);
                        g1_nonzero = true;
                    }
            }
        CHECK(gn_nonzero);
        CHECK(g1_nonzero);
    }
    // realization certificate holds over random words
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        Word w = random_word(rng, 2 + t % 3, 2);
        CHECK_NOTHROW(realize(w));
    }
}

TEST_CASE("psi matches the determinant oracle and picks up det(b)") {
    std::vector<WordSum> f{Word(2), Word::parse(2, "ELL{1}")};
    SemiInvariant p = psi(f);
    CHECK(p.twist == Twist::Det);
    CHECK(p.den == MultiPoly(Rational(1)));

    NumQuadruple x = base_point2();
    CHECK(p.poly.eval(assignment(x)) == Rational(1));

    GroupElement b = diag23();
    CHECK(b.det() == Rational(6));
    CHECK(p.poly.eval(assignment(act(b, x))) == Rational(6));

    CHECK_THROWS_AS(psi(std::vector<WordSum>{Word(2)}), DimensionError);
}

TEST_CASE("phi matches the determinant oracle and picks up 1/det(b)") {
    std::vector<WordSum> g{Word(2), Word::parse(2, "ELL{1}")};
    SemiInvariant p = phi(g);
    CHECK(p.twist == Twist::DetInv);

    NumQuadruple x = base_point2();
    CHECK(p.poly.eval(assignment(x)) == Rational(1));
    CHECK(p.poly.eval(assignment(act(diag23(), x))) == Rational(1, 6));
}

TEST_CASE("psi is alternating and multilinear in its words") {
    Word w1(3), w2 = Word::parse(3, "ELL{1}"), w3 = Word::parse(3, "ELL{2,3}");
    Word w4 = Word::parse(3, "GUARDN{}");
    CHECK(psi({w1, w1, w2}).poly.is_zero());
    CHECK(psi({w1, w2, w3}).poly == -psi({w2, w1, w3}).poly);

    WordSum combo = WordSum(w2) + WordSum(Rational(2), w4);
    CHECK(psi({combo, w1, w3}).poly ==
          psi({w2, w1, w3}).poly + Rational(2) * psi({w4, w1, w3}).poly);
    // a repeated wedge factor hiding in a combination still dies
    CHECK(psi({WordSum(w2) + WordSum(Rational(5), w3), w1, w3}).poly ==
          psi({w2, w1, w3}).poly);

    CHECK(phi({w1, w1, w2}).poly.is_zero());
    CHECK(phi({w1, w2, w3}).poly == -phi({w2, w1, w3}).poly);
}

TEST_CASE("random word tuples are semi-invariant with the right twist") {
    for (int n = 2; n <= 3; ++n) {
        Rng rng(500 + n);
        for (int rep = 0; rep < 4; ++rep) {
            std::vector<WordSum> words = random_tuple(rng, n, 2);
            InvarianceCheck cp = is_semi_invariant(psi(words), 25, 900 + rep);
            INFO(cp.name);
            CHECK(cp.passed);
            InvarianceCheck cf = is_semi_invariant(phi(words), 25, 900 + rep);
            INFO(cf.name);
            CHECK(cf.passed);
        }
    }
    // tracked denominators: a tuple with an LR word still checks out
    std::vector<WordSum> lr_words{Word::parse(2, "LR{1}"), Word(2)};
    SemiInvariant p = psi(lr_words);
    CHECK(p.den == tr_J(SubsetIndex::complement(2, 1)));
    CHECK(is_semi_invariant(p, 25, 1234).passed);

    // non-example
    InvarianceCheck bad = is_semi_invariant(rv(VarId::i(1)), Twist::Det, "i_1", 2, 25, 77);
    CHECK(!bad.passed);
    CHECK(!bad.counterexample.is_null());
}

TEST_CASE("the det twist composes along the group law") {
    std::vector<WordSum> f{Word(2), Word::parse(2, "GUARDN{1}")};
    SemiInvariant p = psi(f);
    Rng rng(321);
    for (int t = 0; t < 10; ++t) {
        GroupElement b = random_group_element(rng, 2, 5);
        GroupElement b2 = random_group_element(rng, 2, 5);
        NumQuadruple x = random_quadruple(rng, 2, 5);
        Rational direct = p.poly.eval(assignment(act(b, act(b2, x))));
        CHECK(direct == b.det() * b2.det() * p.poly.eval(assignment(x)));
    }
}

TEST_CASE("restriction onto the torus") {
    // invariant-family sanity: f_{} dies, g_{} becomes sum of b_a
    CHECK(restrict_poly(family_f(SubsetIndex::empty(2)).poly, EpsMap::I0, 2).is_zero());
    MultiPoly gsum = restrict_poly(family_g(SubsetIndex::empty(3)).poly, EpsMap::I0, 3);
    CHECK(gsum == rv(VarId::torus_b(1)) + rv(VarId::torus_b(2)) + rv(VarId::torus_b(3)));

    // frozen 2x2 oracle: psi(1, ELL{1}) restricts to a_2 - a_1
    std::vector<WordSum> f{Word(2), Word::parse(2, "ELL{1}")};
    RestrictedValue rp = restrict_semi(psi(f), EpsMap::I0);
    CHECK(rp.num == rv(VarId::torus_a(2)) - rv(VarId::torus_a(1)));
    CHECK(rp.den == MultiPoly(Rational(1)));
    // the opposite imbedding kills psi (i -> 0)
    CHECK(restrict_semi(psi(f), EpsMap::J0).num.is_zero());
    // mirror for phi
    CHECK(restrict_semi(phi(f), EpsMap::J0).num ==
          rv(VarId::torus_a(2)) - rv(VarId::torus_a(1)));

    // LR denominators restrict to the nonzero torus trace
    std::vector<WordSum> lr_words{Word::parse(2, "LR{1}"), Word(2)};
    RestrictedValue lrv = restrict_semi(psi(lr_words), EpsMap::I0);
    CHECK(lrv.den == rv(VarId::torus_a(1)) - rv(VarId::torus_a(2)));

    // a denominator that dies raises
    SemiInvariant broken{2, Twist::Det, {}, rv(VarId::i(1)), rv(VarId::r(1, 2)), "broken"};
    CHECK_THROWS_AS(restrict_semi(broken, EpsMap::I0), RestrictionError);
    CHECK_THROWS_AS(restrict_poly(rv(VarId::t()), EpsMap::I0, 2), Error);
    CHECK_THROWS_AS(restrict_poly(rv(VarId::i(5)), EpsMap::I0, 2), Error);
}

TEST_CASE("alternation under adjacent swaps") {
    MultiPoly a1 = rv(VarId::torus_a(1)), a2 = rv(VarId::torus_a(2));
    CHECK(is_alternating(a2 - a1, 2));
    CHECK(!is_alternating(a1 + a2, 2));
    CHECK(is_alternating(MultiPoly(), 3));
    CHECK_THROWS_AS(is_alternating(rv(VarId::i(1)), 2), Error);

    // tracked values cross-multiply: (a_2-a_1)/(a_1+a_2) alternates, a_1a_2/(a_1+a_2) does not
    CHECK(is_alternating(RestrictedValue{a2 - a1, a1 + a2}, 2));
    CHECK(!is_alternating(RestrictedValue{a1 * a2, a1 + a2}, 2));
}

TEST_CASE("relabeling acts on subset labels and pins guard rows") {
    std::vector<int> tau{2, 1};
    CHECK(perm_sign(tau) == -1);
    CHECK(perm_sign({1, 2, 3}) == 1);
    CHECK(perm_sign({2, 3, 1}) == 1);
    CHECK_THROWS_AS(perm_sign({1, 1}), Error);

    CHECK(relabel(Word::parse(2, "ELL{1}*LR{2}"), tau).str() == "ELL{2}*LR{1}");
    CHECK(relabel(Word::parse(3, "ELL{1,3}"), {2, 3, 1}).str() == "ELL{1,2}");
    CHECK_THROWS_AS(relabel(Word::parse(2, "GUARDN{}"), tau), Error);
    CHECK_THROWS_AS(relabel(Word::parse(2, "GUARD1{}"), tau), Error);
    // pinned rows may stay put while the rest moves
    CHECK(relabel(Word::parse(3, "GUARDN{1}"), {2, 1, 3}).str() == "GUARDN{2}");
    CHECK(relabel(Word::parse(3, "GUARD1{2}"), {1, 3, 2}).str() == "GUARD1{3}");
    CHECK_THROWS_AS(relabel(Word::parse(3, "GUARDN{1}"), {1, 3, 2}), Error);

    MultiPoly a1 = rv(VarId::torus_a(1)), b2 = rv(VarId::torus_b(2));
    CHECK(permute_torus(a1 * b2, tau, 2) == rv(VarId::torus_a(2)) * rv(VarId::torus_b(1)));
    CHECK_THROWS_AS(permute_torus(rv(VarId::i(1)), tau, 2), Error);
}

TEST_CASE("restriction is label-equivariant, not label-invariant") {
    MultiPoly a1 = rv(VarId::torus_a(1)), a2 = rv(VarId::torus_a(2));

    // fixed labels break raw alternation: psi(1, ELL{1}^2) restricts to the
    // symmetric square (a_2-a_1)^2
    std::vector<WordSum> sq{Word(2), Word::parse(2, "ELL{1}*ELL{1}")};
    RestrictedValue rsq = restrict_semi(psi(sq), EpsMap::I0);
    CHECK(rsq.num == (a2 - a1) * (a2 - a1));
    CHECK(!is_alternating(rsq.num, 2));

    // permuting torus variables matches sign(sigma) times the relabeled
    // restriction; checked cross-multiplied over random guard-free tuples
    for (int n = 2; n <= 3; ++n) {
        Rng rng(6100 + n);
        std::vector<int> perm(n);
        for (int t = 0; t < 6; ++t) {
            std::vector<WordSum> words = random_free_tuple(rng, n, 2);
            RestrictedValue rp = restrict_semi(psi(words), EpsMap::I0);
            for (int m = 1; m <= n; ++m) perm[m - 1] = m;
            do {
                RestrictedValue rel = restrict_semi(psi(relabel(words, perm)), EpsMap::I0);
                MultiPoly lhs = permute_torus(rp.num, perm, n) * rel.den;
                MultiPoly rhs = rel.num * permute_torus(rp.den, perm, n);
                CHECK(lhs == (perm_sign(perm) == 1 ? rhs : -rhs));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

TEST_CASE("orbit sums over relabelings are alternating") {
    MultiPoly a1 = rv(VarId::torus_a(1)), a2 = rv(VarId::torus_a(2));

    // psi(1, ELL{1}) + psi(1, ELL{2}) restricts to 2(a_2 - a_1)
    RestrictedValue o1 =
        restrict_orbit_sum({Word(2), Word::parse(2, "ELL{1}")}, Twist::Det, EpsMap::I0);
    CHECK(o1.num == Rational(2) * (a2 - a1));
    CHECK(o1.den == MultiPoly(Rational(1)));

    // the symmetric-square counterexample antisymmetrizes to zero
    RestrictedValue o2 =
        restrict_orbit_sum({Word(2), Word::parse(2, "ELL{1}*ELL{1}")}, Twist::Det, EpsMap::I0);
    CHECK(o2.num.is_zero());

    for (int n = 2; n <= 3; ++n) {
        Rng rng(6200 + n);
        for (int t = 0; t < 6; ++t) {
            std::vector<WordSum> words = random_free_tuple(rng, n, 2);
            CHECK(is_alternating(restrict_orbit_sum(words, Twist::Det, EpsMap::I0), n));
            CHECK(is_alternating(restrict_orbit_sum(words, Twist::DetInv, EpsMap::J0), n));
        }
    }

    // guard atoms pin rows and admit no relabeling
    CHECK_THROWS_AS(
        restrict_orbit_sum({Word(2), Word::parse(2, "GUARDN{}")}, Twist::Det, EpsMap::I0), Error);
}

TEST_CASE("the Vandermonde tuple restricts to the lowest alternating value") {
    for (int n = 2; n <= 3; ++n) {
        std::vector<WordSum> f = vandermonde_tuple(n);
        MultiPoly vand{Rational(1)};
        for (int m = 1; m <= n; ++m)
            for (int mm = m + 1; mm <= n; ++mm)
                vand *= rv(VarId::torus_a(mm)) - rv(VarId::torus_a(m));

        RestrictedValue v = restrict_semi(psi(f), EpsMap::I0);
        CHECK(!v.num.is_zero());
        CHECK(v.num == vand * v.den);
        CHECK(is_alternating(v, n));

        RestrictedValue w = restrict_semi(phi(f), EpsMap::J0);
        CHECK(w.num == vand * w.den);
    }
    // f_3 at n=3 is LR{1}^2 + LR{2}^2 + LR{3}^2
    CHECK(vandermonde_tuple(3)[2].terms.size() == 3);
    CHECK(vandermonde_tuple(3)[2].str() == "LR{1}*LR{1} + LR{2}*LR{2} + LR{3}*LR{3}");
}

TEST_CASE("restriction factors through the torus matrix") {
    // every generator is diagonal on the torus; the wedge collapses to one det
    Rng rng(424242);
    for (int n = 2; n <= 3; ++n)
        for (int t = 0; t < 8; ++t) {
            std::vector<WordSum> words = random_tuple(rng, n, 2);
            Mat<MultiPoly> tm = torus_matrix(words);
            CHECK(restrict_semi(psi(words), EpsMap::I0).num == tm.det());
            CHECK(restrict_semi(phi(words), EpsMap::J0).num == tm.det());
        }
    // and with tracked denominators in play
    std::vector<WordSum> words{Word::parse(3, "LR{2}"), Word(3), Word::parse(3, "ELL{1}*LR{3}")};
    CHECK(restrict_semi(psi(words), EpsMap::I0).num == torus_matrix(words).det());
}
