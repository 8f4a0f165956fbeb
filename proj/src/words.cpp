#include "borel/words.hpp"

#include <algorithm>
#include <cctype>

#include "borel/quadruple.hpp"

namespace borel {

namespace {

SubsetIndex check_guard_arg(SubsetIndex J) {
    if (J.n() < 1) throw DimensionError("Generator: n >= 1 required");
    return J;
}

} // namespace

Generator Generator::ell(SubsetIndex J) {
    return Generator{GenKind::Ell, check_guard_arg(std::move(J)), 0};
}

Generator Generator::lr(int n, int iota) {
    return Generator{GenKind::LR, SubsetIndex::complement(n, iota), iota};
}

Generator Generator::guard_n(SubsetIndex J) {
    return Generator{GenKind::GuardN, check_guard_arg(std::move(J)), 0};
}

Generator Generator::guard_1(SubsetIndex J) {
    return Generator{GenKind::Guard1, check_guard_arg(std::move(J)), 0};
}

std::string Generator::str() const {
    switch (kind) {
        case GenKind::Ell: return "ELL" + J.str();
        case GenKind::LR: return "LR{" + std::to_string(iota) + "}";
        case GenKind::GuardN: return "GUARDN" + J.str();
        case GenKind::Guard1: return "GUARD1" + J.str();
    }
    throw Error("Generator::str: bad kind");
}

Word::Word(int n, std::vector<Generator> gens) : n(n), gens(std::move(gens)) {
    for (const Generator& g : this->gens)
        if (g.n() != n) throw DimensionError("Word: generator size mismatch");
}

std::string Word::str() const {
    if (gens.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k) out += "*";
        out += gens[k].str();
    }
    return out;
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

Generator parse_atom(int n, const std::string& atom) {
    std::size_t brace = atom.find('{');
    if (brace == std::string::npos || atom.back() != '}')
        throw ParseError("word atom '" + atom + "': expected NAME{...}");
    std::string head = atom.substr(0, brace);
    std::string arg = atom.substr(brace + 1, atom.size() - brace - 2);
    std::transform(head.begin(), head.end(), head.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (head == "ELL") return Generator::ell(SubsetIndex::parse(n, arg));
    if (head == "GUARDN") return Generator::guard_n(SubsetIndex::parse(n, arg));
    if (head == "GUARD1") return Generator::guard_1(SubsetIndex::parse(n, arg));
    if (head == "LR") {
        SubsetIndex single = SubsetIndex::parse(n, arg);
        if (single.size() != 1)
            throw ParseError("word atom '" + atom + "': LR takes one index");
        return Generator::lr(n, single.elems()[0]);
    }
    throw ParseError("word atom '" + atom + "': unknown generator '" + head + "'");
}

} // namespace

Word Word::parse(int n, const std::string& spec) {
    std::string body = strip(spec);
    if (body.empty()) throw ParseError("word: empty spec");
    if (body == "1" || body == "I") return Word(n);
    Word w(n);
    std::size_t pos = 0;
    while (true) {
        std::size_t star = body.find('*', pos);
        std::string atom = strip(body.substr(pos, star == std::string::npos ? star : star - pos));
        if (atom.empty()) throw ParseError("word '" + spec + "': empty atom");
        w.gens.push_back(parse_atom(n, atom));
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return w;
}

WordSum& WordSum::operator+=(const WordSum& o) {
    if (n != o.n) throw DimensionError("WordSum: size mismatch");
    for (const auto& t : o.terms) terms.push_back(t);
    return *this;
}

std::string WordSum::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k) out += " + ";
        if (!(terms[k].first == Rational(1))) out += terms[k].first.str() + "*";
        out += terms[k].second.str();
    }
    return out;
}

namespace {

void certify_realization(const Mat<MultiPoly>& m, const MultiPoly& den, const std::string& what) {
    auto no_lift = [&](const MultiPoly& p) {
        for (VarId v : p.support())
            if (v.is_strict_upper_s())
                throw CertificationError(what + " depends on lift variable " + v.name());
    };
    for (int a = 1; a <= m.rows(); ++a)
        for (int b = 1; b <= m.cols(); ++b) no_lift(m.at(a, b));
    no_lift(den);
}

/// Realized generator: matrix numerator and scalar denominator.
RealizedWord realize_gen(const Generator& g) {
    int n = g.n();
    Mat<MultiPoly> r = symbolic_r(n);
    Mat<MultiPoly> s = symbolic_s_full(n);
    MultiPoly one{Rational(1)};
    switch (g.kind) {
        case GenKind::Ell: return {ell_J(g.J, r), one};
        case GenKind::LR: return {ell_J(g.J, r) * r, tr_J(g.J)};
        case GenKind::GuardN:
            return {ell_J(SubsetIndex::complement(n, n), r) * s * ell_J(g.J, r), one};
        case GenKind::Guard1:
            return {ell_J(g.J, r) * s * ell_J(SubsetIndex::complement(n, 1), r), one};
    }
    throw Error("realize_gen: bad kind");
}

} // namespace

RealizedWord realize(const Word& w) {
    if (w.n < 1) throw DimensionError("realize: n >= 1 required");
    RealizedWord acc{Mat<MultiPoly>::identity(w.n), MultiPoly(Rational(1))};
    for (const Generator& g : w.gens) {
        RealizedWord part = realize_gen(g);
        acc.num = acc.num * part.num;
        acc.den = acc.den * part.den;
    }
    certify_realization(acc.num, acc.den, "word " + w.str());
    return acc;
}

RealizedWord realize(const WordSum& ws) {
    if (ws.n < 1) throw DimensionError("realize: n >= 1 required");
    RealizedWord acc{Mat<MultiPoly>(ws.n, ws.n), MultiPoly(Rational(1))};
    for (const auto& [c, w] : ws.terms) {
        RealizedWord part = realize(w);
        // (A, d) + c (B, e) = (A e + c B d, d e); denominators are scalars.
        Mat<MultiPoly> scaled = part.num.map<MultiPoly>(
            [&](const MultiPoly& p) { return c * (p * acc.den); });
        acc.num = acc.num.map<MultiPoly>([&](const MultiPoly& p) { return p * part.den; }) + scaled;
        acc.den = acc.den * part.den;
    }
    return acc;
}

std::string twist_name(Twist t) { return t == Twist::Det ? "det" : "det-inv"; }

namespace {

std::string tuple_name(const char* head, const std::vector<WordSum>& words) {
    std::string out = head;
    out += "[";
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (k) out += ", ";
        out += words[k].str();
    }
    return out + "]";
}

int tuple_n(const std::vector<WordSum>& words, const char* what) {
    if (words.empty()) throw DimensionError(std::string(what) + ": empty word tuple");
    int n = words[0].n;
    if (static_cast<int>(words.size()) != n)
        throw DimensionError(std::string(what) + ": expected exactly n words");
    for (const WordSum& w : words)
        if (w.n != n) throw DimensionError(std::string(what) + ": mixed word sizes");
    return n;
}

} // namespace

SemiInvariant psi(const std::vector<WordSum>& words) {
    int n = tuple_n(words, "psi");
    Mat<MultiPoly> i = symbolic_i(n);
    Mat<MultiPoly> m(n, n);
    MultiPoly den{Rational(1)};
    for (int k = 1; k <= n; ++k) {
        RealizedWord rw = realize(words[k - 1]);
        Mat<MultiPoly> col = rw.num * i;
        for (int a = 1; a <= n; ++a) m.at(a, k) = col.at(a, 1);
        den = den * rw.den;
    }
    return SemiInvariant{n, Twist::Det, words, m.det(), std::move(den), tuple_name("psi", words)};
}

SemiInvariant phi(const std::vector<WordSum>& words) {
    int n = tuple_n(words, "phi");
    Mat<MultiPoly> j = symbolic_j(n);
    Mat<MultiPoly> m(n, n);
    MultiPoly den{Rational(1)};
    for (int k = 1; k <= n; ++k) {
        RealizedWord rw = realize(words[k - 1]);
        Mat<MultiPoly> row = j * rw.num;
        for (int b = 1; b <= n; ++b) m.at(k, b) = row.at(1, b);
        den = den * rw.den;
    }
    return SemiInvariant{n, Twist::DetInv, words, m.det(), std::move(den),
                         tuple_name("phi", words)};
}

InvarianceCheck is_semi_invariant(const SemiInvariant& p, int trials, uint64_t seed) {
    InvarianceCheck out{p.name + " [" + twist_name(p.twist) + "]", p.n, trials, true, json()};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        GroupElement b = random_group_element(rng, p.n, 5);
        NumQuadruple x = random_quadruple(rng, p.n, 5);
        NumQuadruple bx = act(b, x);
        PointEval at_x(assignment(x));
        PointEval at_bx(assignment(bx));
        Rational detb = b.det();
        Rational lhs = at_bx(p.poly) * at_x(p.den);
        Rational rhs = at_x(p.poly) * at_bx(p.den);
        rhs = p.twist == Twist::Det ? detb * rhs : rhs;
        Rational scaled_lhs = p.twist == Twist::Det ? lhs : detb * lhs;
        if (scaled_lhs != rhs) {
            out.passed = false;
            out.counterexample = json{{"trial", t},
                                      {"b", rat_matrix_to_json(b.mat())},
                                      {"x", quadruple_to_json(x)},
                                      {"lhs", scaled_lhs.str()},
                                      {"rhs", rhs.str()}};
            break;
        }
    }
    return out;
}

InvarianceCheck is_semi_invariant(const MultiPoly& p, Twist twist, const std::string& name, int n,
                                  int trials, uint64_t seed) {
    SemiInvariant wrapped{n, twist, {}, p, MultiPoly(Rational(1)), name};
    return is_semi_invariant(wrapped, trials, seed);
}

Word random_word(Rng& rng, int n, int max_len) {
    int len = static_cast<int>(rng.next_int(0, max_len));
    Word w(n);
    for (int k = 0; k < len; ++k) {
        int kind = static_cast<int>(rng.next_int(0, 3));
        unsigned mask = static_cast<unsigned>(rng.next_int(0, (1 << n) - 1));
        std::vector<int> elems;
        for (int m = 1; m <= n; ++m)
            if (mask & (1u << (m - 1))) elems.push_back(m);
        SubsetIndex J(n, elems);
        switch (kind) {
            case 0: w.gens.push_back(Generator::ell(J)); break;
            case 1: w.gens.push_back(Generator::lr(n, static_cast<int>(rng.next_int(1, n)))); break;
            case 2: w.gens.push_back(Generator::guard_n(J)); break;
            default: w.gens.push_back(Generator::guard_1(J)); break;
        }
    }
    return w;
}

MultiPoly restrict_poly(const MultiPoly& p, EpsMap which, int n) {
    MultiPoly zero, one{Rational(1)};
    std::map<VarId, MultiPoly> repl;
    for (VarId v : p.support()) {
        int a = v.a(), b = v.b();
        switch (v.kind()) {
            case VarKind::R:
            case VarKind::S:
                if (a > n || b > n) throw Error("restrict: " + v.name() + " outside n = " +
                                                std::to_string(n));
                if (a == b)
                    repl.emplace(v, MultiPoly::var(v.kind() == VarKind::R ? VarId::torus_a(a)
                                                                          : VarId::torus_b(a)));
                else
                    repl.emplace(v, zero);
                break;
            case VarKind::I:
                if (a > n) throw Error("restrict: " + v.name() + " outside n = " + std::to_string(n));
                repl.emplace(v, which == EpsMap::I0 ? one : zero);
                break;
            case VarKind::J:
                if (a > n) throw Error("restrict: " + v.name() + " outside n = " + std::to_string(n));
                repl.emplace(v, which == EpsMap::I0 ? zero : one);
                break;
            default:
                throw Error("restrict: non-phase-space variable " + v.name());
        }
    }
    return p.subst_vars(repl);
}

RestrictedValue restrict_semi(const SemiInvariant& p, EpsMap which) {
    RestrictedValue out{restrict_poly(p.poly, which, p.n), restrict_poly(p.den, which, p.n)};
    if (out.den.is_zero())
        throw RestrictionError("restrict: denominator of " + p.name +
                               " vanishes under the substitution");
    return out;
}

namespace {

void ensure_torus_support(const MultiPoly& q, int n, const char* what) {
    for (VarId v : q.support()) {
        bool torus = false;
        for (int m = 1; m <= n; ++m)
            if (v == VarId::torus_a(m) || v == VarId::torus_b(m)) torus = true;
        if (!torus) throw Error(std::string(what) + ": " + v.name() + " is not a torus variable");
    }
}

std::map<VarId, MultiPoly> adjacent_swap(int m) {
    std::map<VarId, MultiPoly> swap;
    swap.emplace(VarId::torus_a(m), MultiPoly::var(VarId::torus_a(m + 1)));
    swap.emplace(VarId::torus_a(m + 1), MultiPoly::var(VarId::torus_a(m)));
    swap.emplace(VarId::torus_b(m), MultiPoly::var(VarId::torus_b(m + 1)));
    swap.emplace(VarId::torus_b(m + 1), MultiPoly::var(VarId::torus_b(m)));
    return swap;
}

void check_perm(const std::vector<int>& perm, int n, const char* what) {
    if (static_cast<int>(perm.size()) != n)
        throw DimensionError(std::string(what) + ": permutation of length " +
                             std::to_string(perm.size()) + ", expected " + std::to_string(n));
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int img : perm) {
        if (img < 1 || img > n || seen[img])
            throw Error(std::string(what) + ": images are not a permutation of [n]");
        seen[img] = true;
    }
}

} // namespace

bool is_alternating(const MultiPoly& q, int n) {
    ensure_torus_support(q, n, "is_alternating");
    for (int m = 1; m < n; ++m)
        if (q.subst_vars(adjacent_swap(m)) != -q) return false;
    return true;
}

bool is_alternating(const RestrictedValue& q, int n) {
    ensure_torus_support(q.num, n, "is_alternating");
    ensure_torus_support(q.den, n, "is_alternating");
    for (int m = 1; m < n; ++m) {
        auto swap = adjacent_swap(m);
        if (q.num.subst_vars(swap) * q.den != -(q.num * q.den.subst_vars(swap))) return false;
    }
    return true;
}

int perm_sign(const std::vector<int>& perm) {
    check_perm(perm, static_cast<int>(perm.size()), "perm_sign");
    int sign = 1;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) sign = -sign;
    return sign;
}

MultiPoly permute_torus(const MultiPoly& q, const std::vector<int>& perm, int n) {
    ensure_torus_support(q, n, "permute_torus");
    check_perm(perm, n, "permute_torus");
    std::map<VarId, MultiPoly> repl;
    for (int m = 1; m <= n; ++m) {
        repl.emplace(VarId::torus_a(m), MultiPoly::var(VarId::torus_a(perm[m - 1])));
        repl.emplace(VarId::torus_b(m), MultiPoly::var(VarId::torus_b(perm[m - 1])));
    }
    return q.subst_vars(repl);
}

Generator relabel(const Generator& g, const std::vector<int>& perm) {
    int n = g.n();
    check_perm(perm, n, "relabel");
    auto mapped = [&](const SubsetIndex& J) {
        std::vector<int> elems;
        for (int k : J.elems()) elems.push_back(perm[k - 1]);
        return SubsetIndex(n, std::move(elems));
    };
    switch (g.kind) {
        case GenKind::Ell: return Generator::ell(mapped(g.J));
        case GenKind::LR: return Generator::lr(n, perm[g.iota - 1]);
        case GenKind::GuardN:
            if (perm[n - 1] != n)
                throw Error("relabel: " + g.str() + " pins row n; relabeling moves it");
            return Generator::guard_n(mapped(g.J));
        case GenKind::Guard1:
            if (perm[0] != 1)
                throw Error("relabel: " + g.str() + " pins row 1; relabeling moves it");
            return Generator::guard_1(mapped(g.J));
    }
    throw Error("relabel: bad kind");
}

Word relabel(const Word& w, const std::vector<int>& perm) {
    Word out(w.n);
    for (const Generator& g : w.gens) out.gens.push_back(relabel(g, perm));
    return out;
}

WordSum relabel(const WordSum& ws, const std::vector<int>& perm) {
    if (ws.terms.empty()) throw Error("relabel: empty word sum");
    WordSum out{ws.terms[0].first, relabel(ws.terms[0].second, perm)};
    for (std::size_t t = 1; t < ws.terms.size(); ++t)
        out += WordSum(ws.terms[t].first, relabel(ws.terms[t].second, perm));
    return out;
}

std::vector<WordSum> relabel(const std::vector<WordSum>& words, const std::vector<int>& perm) {
    std::vector<WordSum> out;
    out.reserve(words.size());
    for (const WordSum& ws : words) out.push_back(relabel(ws, perm));
    return out;
}

RestrictedValue restrict_orbit_sum(const std::vector<WordSum>& words, Twist twist, EpsMap which) {
    int n = tuple_n(words, "restrict_orbit_sum");
    std::vector<int> perm(n);
    for (int m = 1; m <= n; ++m) perm[m - 1] = m;
    MultiPoly num, den{Rational(1)};
    do {
        std::vector<WordSum> rel = relabel(words, perm);
        SemiInvariant p = twist == Twist::Det ? psi(rel) : phi(rel);
        RestrictedValue rv = restrict_semi(p, which);
        num = num * rv.den + rv.num * den;
        den = den * rv.den;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {std::move(num), std::move(den)};
}

std::vector<WordSum> vandermonde_tuple(int n) {
    if (n < 1) throw DimensionError("vandermonde_tuple: n >= 1 required");
    std::vector<WordSum> out;
    out.emplace_back(Word(n));
    for (int k = 2; k <= n; ++k) {
        // LR{iota}^{k-1} restricts to diag entry a_iota^{k-1} at index iota and
        // zero elsewhere, so the sum over iota restricts to diag(a_m^{k-1})
        auto power = [&](int iota) {
            Word w(n);
            for (int t = 0; t < k - 1; ++t) w.gens.push_back(Generator::lr(n, iota));
            return w;
        };
        WordSum f(power(1));
        for (int iota = 2; iota <= n; ++iota) f += WordSum(power(iota));
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

MultiPoly torus_a_poly(int m) { return MultiPoly::var(VarId::torus_a(m)); }

/// Closed-form torus numerator of one generator at diagonal index m.
MultiPoly gen_torus_value(const Generator& g, int m) {
    int n = g.n();
    auto ell_at = [&](const SubsetIndex& J) {
        MultiPoly prod{Rational(1)};
        for (int k : J.elems()) prod *= torus_a_poly(m) - torus_a_poly(k);
        return prod;
    };
    MultiPoly b_m = MultiPoly::var(VarId::torus_b(m));
    switch (g.kind) {
        case GenKind::Ell: return ell_at(g.J);
        case GenKind::LR: return ell_at(g.J) * torus_a_poly(m);
        case GenKind::GuardN: return ell_at(SubsetIndex::complement(n, n)) * b_m * ell_at(g.J);
        case GenKind::Guard1: return ell_at(g.J) * b_m * ell_at(SubsetIndex::complement(n, 1));
    }
    throw Error("gen_torus_value: bad kind");
}

/// Torus numerator/denominator of a word sum at index m, combined exactly the
/// way realize() combines denominators.
std::pair<MultiPoly, MultiPoly> word_torus_value(const WordSum& ws, int m) {
    MultiPoly num, den{Rational(1)};
    for (const auto& [c, w] : ws.terms) {
        MultiPoly wnum{Rational(1)}, wden{Rational(1)};
        for (const Generator& g : w.gens) {
            wnum *= gen_torus_value(g, m);
            if (g.kind == GenKind::LR) {
                MultiPoly tr;
                for (int a = 1; a <= ws.n; ++a) {
                    MultiPoly prod{Rational(1)};
                    for (int k : g.J.elems())
                        prod *= torus_a_poly(a) - torus_a_poly(k);
                    tr += prod;
                }
                wden *= tr;
            }
        }
        num = num * wden + c * (wnum * den);
        den = den * wden;
    }
    return {num, den};
}

} // namespace

Mat<MultiPoly> torus_matrix(const std::vector<WordSum>& words) {
    int n = tuple_n(words, "torus_matrix");
    Mat<MultiPoly> t(n, n);
    for (int k = 1; k <= n; ++k)
        for (int m = 1; m <= n; ++m) t.at(m, k) = word_torus_value(words[k - 1], m).first;
    return t;
}

std::vector<WordSum> parse_word_tuple(int n, const std::string& spec) {
    std::vector<WordSum> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t p = 0; p <= spec.size(); ++p) {
        if (p < spec.size() && spec[p] == '{') ++depth;
        if (p < spec.size() && spec[p] == '}') --depth;
        if (p == spec.size() || (spec[p] == ',' && depth == 0)) {
            out.emplace_back(Word::parse(n, spec.substr(start, p - start)));
            start = p + 1;
        }
    }
    if (depth != 0) throw ParseError("word tuple '" + spec + "': unbalanced braces");
    return out;
}

} // namespace borel
