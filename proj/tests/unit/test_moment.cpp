#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "borel/moment.hpp"

using namespace borel;

namespace {

MultiPoly rv(VarId v) { return MultiPoly::var(v); }

bool all_zero(const std::vector<Rational>& v) {
    for (const Rational& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Admissible unique-lift data: distinct r_diag, i_a j_a = 0 for each a.
struct LiftData {
    std::vector<Rational> r_diag, s_diag, i, j;
};

LiftData random_lift_data(Rng& rng, int n) {
    LiftData d;
    while (static_cast<int>(d.r_diag.size()) < n) {
        Rational c = rng.next_rational(9);
        bool fresh = true;
        for (const Rational& x : d.r_diag)
            if (x == c) fresh = false;
        if (fresh) d.r_diag.push_back(c);
    }
    for (int a = 0; a < n; ++a) {
        d.s_diag.push_back(rng.next_rational(9));
        switch (rng.next_int(0, 2)) {
            case 0:
                d.i.push_back(rng.next_rational(9));
                d.j.push_back(Rational(0));
                break;
            case 1:
                d.i.push_back(Rational(0));
                d.j.push_back(rng.next_rational(9));
                break;
            default:
                d.i.push_back(Rational(0));
                d.j.push_back(Rational(0));
        }
    }
    return d;
}

} // namespace

TEST_CASE("system sizes and n=1 content") {
    MomentSystem m1 = MomentSystem::build(1, MomentFlavor::Borel);
    CHECK(m1.polys().size() == 1);
    CHECK(m1.polys()[0] == rv(VarId::i(1)) * rv(VarId::j(1)));

    CHECK(MomentSystem::build(2, MomentFlavor::Borel).polys().size() == 3);
    CHECK(MomentSystem::build(3, MomentFlavor::Borel).polys().size() == 6);
    CHECK(MomentSystem::build(3, MomentFlavor::General).polys().size() == 9);
    CHECK(MomentSystem::build(4, MomentFlavor::Borel).polys().size() == 10);
    CHECK_THROWS_AS(MomentSystem::build(0, MomentFlavor::Borel), DimensionError);
    CHECK_THROWS_AS(MomentSystem::build(6, MomentFlavor::Borel), DimensionError);

    // ambient coordinates: n(n+1) + 2n for borel, n(n+1)/2 + n^2 + 2n general
    CHECK(MomentSystem::build(2, MomentFlavor::Borel).ambient_vars().size() == 10);
    CHECK(MomentSystem::build(2, MomentFlavor::General).ambient_vars().size() == 11);
}

TEST_CASE("n=2 generators expand to the hand-computed polynomials") {
    MomentSystem sys = MomentSystem::build(2, MomentFlavor::Borel);
    REQUIRE(sys.entries() ==
            std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}});
    MultiPoly r11 = rv(VarId::r(1, 1)), r12 = rv(VarId::r(1, 2)), r22 = rv(VarId::r(2, 2)),
              s21 = rv(VarId::s(2, 1)), i1 = rv(VarId::i(1)), i2 = rv(VarId::i(2)),
              j1 = rv(VarId::j(1)), j2 = rv(VarId::j(2));
    CHECK(sys.polys()[0] == r12 * s21 + i1 * j1);
    CHECK(sys.polys()[1] == (r22 - r11) * s21 + i2 * j1);
    CHECK(sys.polys()[2] == -(r12 * s21) + i2 * j2);
    // the diagonal entries sum to the trace of ij
    CHECK(sys.polys()[0] + sys.polys()[2] == i1 * j1 + i2 * j2);
}

TEST_CASE("borel generators are independent of the strict-upper lift") {
    for (int n = 2; n <= 4; ++n) {
        MomentSystem sys = MomentSystem::build(n, MomentFlavor::Borel);
        for (const MultiPoly& p : sys.polys())
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) {
                    CHECK(!p.depends_on(VarId::s_upper(a, b)));
                    CHECK(p.diff(VarId::s_upper(a, b)).is_zero());
                }
    }
}

TEST_CASE("trivial zeros of the moment system") {
    MomentSystem sys = MomentSystem::build(3, MomentFlavor::Borel);
    Rng rng(3);
    NumQuadruple q;
    q.n = 3;
    q.r = Mat<Rational>(3, 3, Shape::Diagonal);
    for (int a = 1; a <= 3; ++a) q.r.at(a, a) = rng.next_rational(5);
    q.s = Mat<Rational>(3, 3, Shape::LowerRep); // s = 0
    q.i = Mat<Rational>(3, 1);                  // i = 0
    q.j = Mat<Rational>(1, 3);
    for (int a = 1; a <= 3; ++a) q.j.at(1, a) = rng.next_rational(5);
    CHECK(sys.vanishes_at(q));
}

TEST_CASE("component witnesses vanish for all labels up to n=5") {
    for (int n = 2; n <= 5; ++n) {
        MomentSystem sys = MomentSystem::build(n, MomentFlavor::Borel);
        Rng rng(400 + n);
        for (unsigned ell = 0; ell < (1u << n); ++ell) {
            NumQuadruple w = sample_component_point(n, ell, rng, 7);
            CAPTURE(n);
            CAPTURE(ell);
            CHECK(sys.vanishes_at(w));
        }
    }
}

TEST_CASE("perturbing a witness breaks exactly the expected entry") {
    MomentSystem sys = MomentSystem::build(2, MomentFlavor::Borel);
    Rng rng(9);
    NumQuadruple w = sample_component_point(2, 1u, rng, 5);
    NumQuadruple broken = w;
    broken.s.at(2, 1) += Rational(1);
    std::vector<Rational> vals = sys.eval(broken);
    // entries are ordered (1,1), (2,1), (2,2); only (2,1) moves, by r22 - r11
    CHECK(vals[0].is_zero());
    CHECK(vals[1] == w.r.at(2, 2) - w.r.at(1, 1));
    CHECK(vals[2].is_zero());
}

TEST_CASE("zero locus is stable under the group action") {
    for (int n = 2; n <= 4; ++n) {
        MomentSystem sys = MomentSystem::build(n, MomentFlavor::Borel);
        Rng rng(500 + n);
        for (int trial = 0; trial < 25; ++trial) {
            unsigned ell = static_cast<unsigned>(rng.next_int(0, (1 << n) - 1));
            NumQuadruple w = sample_component_point(n, ell, rng, 5);
            REQUIRE(sys.vanishes_at(w));
            GroupElement b = random_group_element(rng, n, 4);
            CHECK(sys.vanishes_at(act(b, w)));
        }
    }
}

TEST_CASE("unique lift: frozen examples") {
    // i = 0 forces s = diag(s_diag)
    Mat<Rational> s0 = unique_lift({Rational(2), Rational(5)}, {Rational(3), Rational(-1)},
                                   {Rational(0), Rational(0)}, {Rational(1), Rational(4)});
    CHECK(s0.at(1, 1) == Rational(3));
    CHECK(s0.at(2, 2) == Rational(-1));
    CHECK(s0.at(1, 2) == Rational(0));
    CHECK(s0.at(2, 1) == Rational(0));

    Mat<Rational> s = unique_lift({Rational(1), Rational(3)}, {Rational(0), Rational(0)},
                                  {Rational(1), Rational(0)}, {Rational(0), Rational(1)});
    CHECK(s.at(1, 2) == Rational(1, 2));
    CHECK(s.at(2, 1) == Rational(0));

    CHECK_THROWS_AS(unique_lift({Rational(1), Rational(1)}, {Rational(0), Rational(0)},
                                {Rational(1), Rational(0)}, {Rational(0), Rational(1)}),
                    EigenvalueCollisionError);
    CHECK_THROWS_AS(unique_lift({Rational(1), Rational(2)}, {Rational(0), Rational(0)},
                                {Rational(1), Rational(1)}, {Rational(1), Rational(0)}),
                    DiagonalIncompatibilityError);
    CHECK_THROWS_AS(unique_lift({Rational(1)}, {Rational(0), Rational(0)},
                                {Rational(0), Rational(0)}, {Rational(0), Rational(0)}),
                    DimensionError);
}

TEST_CASE("unique lift: random admissible data satisfies the general system") {
    MomentSystem general = MomentSystem::build(3, MomentFlavor::General);
    Rng rng(64);
    for (int trial = 0; trial < 20; ++trial) {
        LiftData d = random_lift_data(rng, 3);
        Mat<Rational> s = unique_lift(d.r_diag, d.s_diag, d.i, d.j);
        // closed-form off-diagonal values
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                if (a == b) continue;
                CHECK(s.at(a, b) == -(d.i[a - 1] * d.j[b - 1]) /
                                        (d.r_diag[a - 1] - d.r_diag[b - 1]));
            }
        Mat<Rational> r(3, 3, Shape::Diagonal);
        for (int a = 1; a <= 3; ++a) r.at(a, a) = d.r_diag[a - 1];
        CHECK(all_zero(general.eval(full_assignment(r, s, Mat<Rational>::column(d.i),
                                                    Mat<Rational>::row(d.j)))));
    }
}
