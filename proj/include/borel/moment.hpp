#pragma once

#include <vector>

#include "borel/quadruple.hpp"

namespace borel {

enum class MomentFlavor { Borel, General };

/// The polynomial system cut out by the moment map: entries (gamma, nu) of
/// [r, s] + ij, with gamma >= nu for the Borel flavor (n(n+1)/2 equations) and
/// all entries for the general flavor (n^2 equations). Entries are indexed
/// row-major; the Borel generators are certified at construction to be
/// independent of the strict-upper lift variables of s.
class MomentSystem {
public:
    static MomentSystem build(int n, MomentFlavor flavor);

    int n() const { return n_; }
    MomentFlavor flavor() const { return flavor_; }
    const std::vector<MultiPoly>& polys() const { return polys_; }
    /// (gamma, nu) of each generator, parallel to polys().
    const std::vector<std::pair<int, int>>& entries() const { return entries_; }
    /// Ambient coordinates in global order (full s lift for the general flavor).
    const std::vector<VarId>& ambient_vars() const { return ambient_; }

    std::vector<Rational> eval(const std::map<VarId, Rational>& point) const;
    /// Borel-flavor evaluation at a phase-space point.
    std::vector<Rational> eval(const NumQuadruple& q) const;
    bool vanishes_at(const NumQuadruple& q) const;

private:
    MomentSystem() = default;
    int n_ = 0;
    MomentFlavor flavor_ = MomentFlavor::Borel;
    std::vector<MultiPoly> polys_;
    std::vector<std::pair<int, int>> entries_;
    std::vector<VarId> ambient_;
};

/// Assignment covering a full (not lower-representative) s matrix.
std::map<VarId, Rational> full_assignment(const Mat<Rational>& r, const Mat<Rational>& s_full,
                                          const Mat<Rational>& i, const Mat<Rational>& j);

/// The unique full matrix s with the prescribed diagonal such that
/// [diag(r_diag), s] + ij = 0: off-diagonals are forced to
/// s_{ab} = -(ij)_{ab}/(r_aa - r_bb). Preconditions: r_diag pairwise distinct
/// (EigenvalueCollisionError) and i_a j_a = 0 for every a
/// (DiagonalIncompatibilityError), since a diagonal commutator has zero diagonal.
/// The defining linear system is solved explicitly and its (diagonal)
/// coefficient matrix checked invertible, certifying uniqueness; the result is
/// re-checked against the general-flavor moment system.
Mat<Rational> unique_lift(const std::vector<Rational>& r_diag,
                          const std::vector<Rational>& s_diag, const std::vector<Rational>& i,
                          const std::vector<Rational>& j);

} // namespace borel
