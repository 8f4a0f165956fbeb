#pragma once

#include <vector>

#include "borel/ideal.hpp"
#include "borel/moment.hpp"
#include "borel/rng.hpp"

namespace borel {

/// Symbolic Jacobian of the Borel moment system: one row per generator
/// (n(n+1)/2), one column per ambient phase-space variable (n^2 + 3n).
struct JacobianMatrix {
    int n = 0;
    std::vector<VarId> cols;
    Mat<MultiPoly> m;
};

/// Requires the borel flavor (the general flavor carries lift variables).
JacobianMatrix moment_jacobian(const MomentSystem& sys);

Mat<Rational> eval_jacobian(const JacobianMatrix& jm, const NumQuadruple& x);
/// Exact rank over Q at a point; x smooth on the complete intersection iff
/// the rank is n(n+1)/2.
int rank_at(const JacobianMatrix& jm, const NumQuadruple& x);

/// All k x k minors (k = row count) as polynomials, duplicates and zeros
/// dropped, sign-normalized. The count is C(n^2+3n, n(n+1)/2); refuses with
/// CapExceededError when it exceeds max_minors.
std::vector<MultiPoly> maximal_minors(const JacobianMatrix& jm, std::size_t max_minors = 200000);

/// Moment polynomials plus all maximal Jacobian minors; cuts out the singular
/// locus of the moment fiber by the Jacobian criterion.
Ideal singular_ideal(const MomentSystem& sys, OrderKind kind = OrderKind::Grevlex);

/// Rank of the Jacobian along a degeneration path that collides the last two
/// r eigenvalues of an i-only component witness (ell = all ones): parameter
/// u runs through 1, 1/2, ..., 1/2^(steps-1), 0; the collision sits at u = 0.
struct PathSample {
    Rational u;
    int rank;
};
struct CollisionProbe {
    int n = 0;
    int full_rank = 0; // n(n+1)/2
    std::vector<PathSample> path;
    bool drop_detected = false; // final rank < all previous ranks
};
CollisionProbe collision_probe(int n, uint64_t seed, int steps = 5);

/// Evidence probe at a common-closure point of two components: the witness
/// keeps i_k only where both labels do and j_k only where neither does, which
/// is the simultaneous one-parameter limit of both families. Reports the
/// moment residual and the Jacobian rank there.
struct TransversalityRecord {
    int n = 0;
    unsigned ell1 = 0, ell2 = 0;
    bool moment_vanishes = false;
    int rank = 0;
    int full_rank = 0;
};
TransversalityRecord transversality_probe(int n, unsigned ell1, unsigned ell2, uint64_t seed);

} // namespace borel
