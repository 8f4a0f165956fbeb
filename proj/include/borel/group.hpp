#pragma once

#include <utility>
#include <vector>

#include "borel/matrix.hpp"
#include "borel/rng.hpp"

namespace borel {

/// Invertible upper-triangular rational matrix with its exact inverse cached.
class GroupElement {
public:
    explicit GroupElement(Mat<Rational> b);
    static GroupElement identity(int n) { return GroupElement(Mat<Rational>::identity(n)); }

    int n() const { return b_.rows(); }
    const Mat<Rational>& mat() const { return b_; }
    const Mat<Rational>& inv() const { return binv_; }
    Rational det() const;

    friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
        return GroupElement(x.b_ * y.b_);
    }

private:
    Mat<Rational> b_, binv_;
};

/// Deterministic random element of B: bounded-height rational entries,
/// nonzero diagonal.
GroupElement random_group_element(Rng& rng, int n, long height = 5);

/// Generic symbolic element of B: entries g_{a,b} for a <= b. Its inverse is
/// polynomial once the formal diagonal inverses gd_a (gd_a * g_{a,a} = 1) are
/// adjoined, which keeps group calculations inside the polynomial ring.
Mat<MultiPoly> symbolic_group(int n);
Mat<MultiPoly> symbolic_group_inverse(int n);
/// The relations gd_a * g_{a,a} = 1 as cancellation pairs.
std::vector<std::pair<VarId, VarId>> group_unit_pairs(int n);
/// Normal form modulo those relations, applied entrywise / termwise.
MultiPoly normalize_group_units(const MultiPoly& p, int n);
Mat<MultiPoly> normalize_group_units(const Mat<MultiPoly>& m, int n);
/// det of the symbolic group element.
MultiPoly symbolic_group_det(int n);
/// Its formal inverse prod gd_a.
MultiPoly symbolic_group_det_inverse(int n);

} // namespace borel
