#include "borel/moment.hpp"

#include <algorithm>

#include "borel/errors.hpp"

namespace borel {

MomentSystem MomentSystem::build(int n, MomentFlavor flavor) {
    if (n < 1 || n > 5)
        throw DimensionError("MomentSystem: n must be between 1 and 5");
    SymQuadruple q = symbolic_quadruple(n, /*full_s=*/true);
    Mat<MultiPoly> mu = commutator(q.r, q.s) + q.i * q.j;

    MomentSystem sys;
    sys.n_ = n;
    sys.flavor_ = flavor;
    for (int g = 1; g <= n; ++g) {
        int nu_max = flavor == MomentFlavor::Borel ? g : n;
        for (int v = 1; v <= nu_max; ++v) {
            sys.entries_.emplace_back(g, v);
            sys.polys_.push_back(mu.at(g, v));
        }
    }

    if (flavor == MomentFlavor::Borel) {
        // The gamma >= nu entries must not see the lift: [r, u] is strictly
        // upper for strictly upper u, so the lift variables cancel identically.
        for (size_t k = 0; k < sys.polys_.size(); ++k)
            for (VarId v : sys.polys_[k].support())
                if (v.is_strict_upper_s())
                    throw CertificationError(
                        "moment system: generator (" + std::to_string(sys.entries_[k].first) +
                        "," + std::to_string(sys.entries_[k].second) +
                        ") depends on lift variable " + v.name());
    }

    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) sys.ambient_.push_back(VarId::r(a, b));
    if (flavor == MomentFlavor::Borel) {
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= a; ++b) sys.ambient_.push_back(VarId::s(a, b));
    } else {
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                sys.ambient_.push_back(a >= b ? VarId::s(a, b) : VarId::s_upper(a, b));
    }
    for (int a = 1; a <= n; ++a) sys.ambient_.push_back(VarId::i(a));
    for (int a = 1; a <= n; ++a) sys.ambient_.push_back(VarId::j(a));
    std::sort(sys.ambient_.begin(), sys.ambient_.end());
    return sys;
}

std::vector<Rational> MomentSystem::eval(const std::map<VarId, Rational>& point) const {
    PointEval pe(point);
    std::vector<Rational> out;
    out.reserve(polys_.size());
    for (const MultiPoly& p : polys_) out.push_back(pe(p));
    return out;
}

std::vector<Rational> MomentSystem::eval(const NumQuadruple& q) const {
    if (q.n != n_) throw DimensionError("MomentSystem: quadruple dimension mismatch");
    if (flavor_ == MomentFlavor::General)
        throw Error("MomentSystem: general flavor needs a full s; pass an assignment");
    return eval(assignment(q));
}

bool MomentSystem::vanishes_at(const NumQuadruple& q) const {
    for (const Rational& v : eval(q))
        if (!v.is_zero()) return false;
    return true;
}

std::map<VarId, Rational> full_assignment(const Mat<Rational>& r, const Mat<Rational>& s_full,
                                          const Mat<Rational>& i, const Mat<Rational>& j) {
    int n = r.rows();
    std::map<VarId, Rational> a;
    for (int x = 1; x <= n; ++x) {
        for (int y = x; y <= n; ++y) a[VarId::r(x, y)] = r.at(x, y);
        for (int y = 1; y <= n; ++y)
            a[x >= y ? VarId::s(x, y) : VarId::s_upper(x, y)] = s_full.at(x, y);
        a[VarId::i(x)] = i.at(x, 1);
        a[VarId::j(x)] = j.at(1, x);
    }
    return a;
}

Mat<Rational> unique_lift(const std::vector<Rational>& r_diag,
                          const std::vector<Rational>& s_diag, const std::vector<Rational>& i,
                          const std::vector<Rational>& j) {
    int n = static_cast<int>(r_diag.size());
    if (static_cast<int>(s_diag.size()) != n || static_cast<int>(i.size()) != n ||
        static_cast<int>(j.size()) != n)
        throw DimensionError("unique_lift: input length mismatch");

    // With r diagonal, [r, s]_{aa} = 0, so the diagonal moment equations read
    // i_a j_a = 0: data violating that admits no lift at all.
    for (int a = 0; a < n; ++a)
        if (!(i[a] * j[a]).is_zero())
            throw DiagonalIncompatibilityError(
                "unique_lift: i_" + std::to_string(a + 1) + " j_" + std::to_string(a + 1) +
                " = " + (i[a] * j[a]).str() + " != 0, no lift exists");

    // Off-diagonal equations: (r_aa - r_bb) s_ab = -(ij)_ab, one unknown each,
    // i.e. a linear system with diagonal coefficient matrix. Uniqueness holds
    // iff every coefficient is nonzero.
    Mat<Rational> s(n, n);
    for (int a = 1; a <= n; ++a) {
        s.at(a, a) = s_diag[a - 1];
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            Rational coeff = r_diag[a - 1] - r_diag[b - 1];
            if (coeff.is_zero())
                throw EigenvalueCollisionError("unique_lift: r_diag entries " + std::to_string(a) +
                                               " and " + std::to_string(b) + " collide");
            s.at(a, b) = -(i[a - 1] * j[b - 1]) / coeff;
        }
    }

    // Certify by substituting back into the general-flavor system.
    Mat<Rational> r(n, n, Shape::Diagonal);
    for (int a = 1; a <= n; ++a) r.at(a, a) = r_diag[a - 1];
    MomentSystem general = MomentSystem::build(n, MomentFlavor::General);
    std::vector<Rational> values = general.eval(
        full_assignment(r, s, Mat<Rational>::column(i), Mat<Rational>::row(j)));
    for (const Rational& v : values)
        if (!v.is_zero()) throw CertificationError("unique_lift: certification failed");
    return s;
}

} // namespace borel
