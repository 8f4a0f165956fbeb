#pragma once

#include <map>
#include <vector>

#include "borel/group.hpp"
#include "borel/json_io.hpp"
#include "borel/matrix.hpp"
#include "borel/rng.hpp"

namespace borel {

/// Point (or symbolic point) of the phase space: r in the Borel subalgebra,
/// s a lower-triangular representative of its dual, i a column, j a row.
template <typename T>
struct Quadruple {
    int n = 0;
    Mat<T> r, s, i, j;
};

using NumQuadruple = Quadruple<Rational>;
using SymQuadruple = Quadruple<MultiPoly>;

/// Coordinate quadruple. With full_s the strict-upper lift variables of s are
/// included, which is how well-definedness of functionals gets certified.
SymQuadruple symbolic_quadruple(int n, bool full_s = false);

NumQuadruple random_quadruple(Rng& rng, int n, long height = 5);

/// b.(r,s,i,j) = (b r b^{-1}, proj(b s b^{-1}), b i, j b^{-1}); proj truncates
/// to the lower-triangular representative.
NumQuadruple act(const GroupElement& b, const NumQuadruple& q);

/// The same action on the coordinate quadruple by the generic symbolic group
/// element, entries normalized modulo gd_a g_{a,a} = 1. Used to certify
/// invariance as a polynomial identity rather than by sampling.
SymQuadruple act_symbolic(int n);

/// Variable assignment realizing the quadruple as a point.
std::map<VarId, Rational> assignment(const NumQuadruple& q);
/// Inverse of assignment(); missing variables default to 0.
NumQuadruple quadruple_from_assignment(int n, const std::map<VarId, Rational>& a);

/// Substitution map sending each coordinate variable to the matching entry of
/// a symbolic quadruple (e.g. an acted one).
std::map<VarId, MultiPoly> coordinate_images(const SymQuadruple& q);

/// Point of the irreducible-component family C_ell. The label ell is a bitmask
/// over {1,..,n}: i_k = ell(k), j_k = 1 - ell(k), r = diag(r_diag) with
/// pairwise distinct entries, s diagonal free and s_{ab} = -(ij)_{ab}/(r_aa - r_bb)
/// below the diagonal. Throws EigenvalueCollisionError on repeated r_diag.
NumQuadruple sample_component_point(int n, unsigned ell, const std::vector<Rational>& r_diag,
                                    const std::vector<Rational>& s_diag);
/// Same with random distinct r_diag and random s_diag.
NumQuadruple sample_component_point(int n, unsigned ell, Rng& rng, long height = 7);

json quadruple_to_json(const NumQuadruple& q);
NumQuadruple quadruple_from_json(const json& j);

} // namespace borel
