#include "borel/group.hpp"

#include "borel/errors.hpp"

namespace borel {

GroupElement::GroupElement(Mat<Rational> b) : b_(std::move(b)), binv_(upper_inverse(b_)) {
    b_.set_shape(Shape::Upper);
}

Rational GroupElement::det() const {
    Rational d(1);
    for (int a = 1; a <= n(); ++a) d *= b_.at(a, a);
    return d;
}

GroupElement random_group_element(Rng& rng, int n, long height) {
    if (height < 1) throw Error("random_group_element: height must be >= 1");
    Mat<Rational> b(n, n, Shape::Upper);
    for (int a = 1; a <= n; ++a) {
        b.at(a, a) = rng.next_nonzero_rational(height);
        for (int c = a + 1; c <= n; ++c) b.at(a, c) = rng.next_rational(height);
    }
    return GroupElement(std::move(b));
}

Mat<MultiPoly> symbolic_group(int n) {
    Mat<MultiPoly> g(n, n, Shape::Upper);
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) g.at(a, b) = MultiPoly::var(VarId::grp(a, b));
    return g;
}

namespace {

// Entries of the triangular inverse come out of back substitution as
// num / (c * prod g_{a,a}^e); rewrite the denominator with the formal gd_a.
MultiPoly with_formal_diag_inverses(const RatFun& f) {
    const MultiPoly& den = f.den();
    if (den.term_count() != 1)
        throw Error("symbolic_group_inverse: denominator is not a diagonal monomial");
    const auto& [mono, coeff] = *den.terms().begin();
    MultiPoly out = f.num();
    out *= coeff.inverse();
    for (const auto& [v, e] : mono.factors()) {
        if (v.kind() != VarKind::Aux) throw Error("symbolic_group_inverse: unexpected variable");
        VarId::GrpIndex gi = VarId::decode_grp(v);
        if (gi.a != gi.b) throw Error("symbolic_group_inverse: non-diagonal denominator");
        out *= MultiPoly::var(VarId::grp_dinv(gi.a), e);
    }
    return out;
}

} // namespace

Mat<MultiPoly> symbolic_group_inverse(int n) {
    Mat<RatFun> g = symbolic_group(n).map<RatFun>([](const MultiPoly& p) { return RatFun(p); });
    Mat<RatFun> inv = upper_inverse(g);
    Mat<MultiPoly> out =
        inv.map<MultiPoly>([](const RatFun& f) { return with_formal_diag_inverses(f); });
    out.set_shape(Shape::Upper);
    return normalize_group_units(out, n);
}

std::vector<std::pair<VarId, VarId>> group_unit_pairs(int n) {
    std::vector<std::pair<VarId, VarId>> pairs;
    for (int a = 1; a <= n; ++a) pairs.emplace_back(VarId::grp(a, a), VarId::grp_dinv(a));
    return pairs;
}

MultiPoly normalize_group_units(const MultiPoly& p, int n) {
    return p.cancel_unit_pairs(group_unit_pairs(n));
}

Mat<MultiPoly> normalize_group_units(const Mat<MultiPoly>& m, int n) {
    auto pairs = group_unit_pairs(n);
    Mat<MultiPoly> out = m.map<MultiPoly>(
        [&pairs](const MultiPoly& p) { return p.cancel_unit_pairs(pairs); });
    out.set_shape(m.shape());
    return out;
}

MultiPoly symbolic_group_det(int n) {
    MultiPoly d{Rational(1)};
    for (int a = 1; a <= n; ++a) d *= MultiPoly::var(VarId::grp(a, a));
    return d;
}

MultiPoly symbolic_group_det_inverse(int n) {
    MultiPoly d{Rational(1)};
    for (int a = 1; a <= n; ++a) d *= MultiPoly::var(VarId::grp_dinv(a));
    return d;
}

} // namespace borel
