#pragma once

#include <string>
#include <vector>

#include "borel/moment.hpp"
#include "borel/quadruple.hpp"

namespace borel {

/// Subset J of {1,..,n}: sorted, duplicate-free, possibly empty.
class SubsetIndex {
public:
    SubsetIndex(int n, std::vector<int> elems);
    static SubsetIndex empty(int n) { return SubsetIndex(n, {}); }
    static SubsetIndex full(int n);
    /// [n] with iota removed.
    static SubsetIndex complement(int n, int iota);
    /// All 2^n subsets, by increasing bitmask.
    static std::vector<SubsetIndex> all_subsets(int n);

    int n() const { return n_; }
    const std::vector<int>& elems() const& { return elems_; }
    std::vector<int> elems() && { return std::move(elems_); }
    std::size_t size() const { return elems_.size(); }
    bool contains(int k) const;

    friend bool operator==(const SubsetIndex& a, const SubsetIndex& b) {
        return a.n_ == b.n_ && a.elems_ == b.elems_;
    }

    /// "{1,3}", "{}" for the empty set.
    std::string str() const;
    /// Accepts "1,3", "{1,3}", "" or "{}".
    static SubsetIndex parse(int n, const std::string& text);

private:
    int n_;
    std::vector<int> elems_;
};

/// ell^J(m) = prod_{k in J} (m - m_{kk} I), factors in ascending k. The factors
/// commute (they are polynomials in the one matrix m), so the order is a
/// determinism convention, not a mathematical choice.
template <typename T>
Mat<T> ell_J(const SubsetIndex& J, const Mat<T>& m) {
    if (m.rows() != J.n()) throw DimensionError("ell_J: matrix dimension mismatch");
    Mat<T> acc = Mat<T>::identity(J.n());
    for (int k : J.elems()) acc = acc * (m - Mat<T>::scalar(J.n(), m.at(k, k)));
    return acc;
}

template <typename T>
T tr_J(const SubsetIndex& J, const Mat<T>& m) {
    return ell_J(J, m).trace();
}

/// ell^J of the coordinate matrix r.
Mat<MultiPoly> ell_J(const SubsetIndex& J);
MultiPoly tr_J(const SubsetIndex& J);
/// L^J = (tr^J)^{-1} ell^J over the rational-function field.
Mat<RatFun> L_J(const SubsetIndex& J);

enum class FamilyKind { F, G, H, K, L };

/// One member of the invariant families
///   f_J = tr(j ell^J i)            g_J = tr(ell^J s)       h_iota = tr(L^{[n]-{iota}} r)
///   k_{n,J} = tr(j ell^{[n]-{n}} s ell^J i)    l_{J,1} = tr(j ell^J s ell^{[n]-{1}} i).
/// Values are built from the full lift of s and certified independent of the
/// strict-upper lift variables. h_iota is kept as a tracked numerator/denominator
/// pair (denominator tr^{[n]-{iota}}) and never cleared to a polynomial silently.
struct Invariant {
    FamilyKind kind;
    int n;
    SubsetIndex J;
    int iota = 0; // for kind H
    MultiPoly poly;
    MultiPoly den; // constant 1 except for H
    std::string name;

    bool is_rational() const { return kind == FamilyKind::H; }
    RatFun rat() const { return RatFun(poly, den); }
};

Invariant family_f(const SubsetIndex& J);
Invariant family_g(const SubsetIndex& J);
Invariant family_h(int n, int iota);
Invariant family_k(const SubsetIndex& J);
Invariant family_l(const SubsetIndex& J);
/// f_J, g_J, k_{n,J}, l_{J,1} over all J plus h_1..h_n, in a fixed order.
std::vector<Invariant> all_families(int n);

/// Well-definedness certificates for g_J = tr(ell^J s-hat), per subset.
struct GCertificate {
    SubsetIndex J;
    bool well_defined;
};
std::vector<GCertificate> certify_g_family(int n);

/// Randomized-exact invariance check: p(act(b,x)) = p(x) at `trials` random
/// (b, x) pairs. Rational values compare by cross-multiplication. A failure is
/// data, not an error: the witness (b, x, both values) is kept.
struct InvarianceCheck {
    std::string name;
    int n = 0;
    int trials = 0;
    bool passed = false;
    json counterexample; // null when passed
};

InvarianceCheck is_invariant(const MultiPoly& p, const std::string& name, int n, int trials,
                             uint64_t seed);
InvarianceCheck is_invariant(const RatFun& f, const std::string& name, int n, int trials,
                             uint64_t seed);
InvarianceCheck is_invariant(const Invariant& inv, int trials, uint64_t seed);

/// Polynomial-identity invariance: substitute the symbolically acted
/// coordinates and compare normal forms modulo gd_a g_{a,a} = 1. Exact but
/// degree-expensive; meant for n <= 3.
bool is_invariant_symbolic(const MultiPoly& p, int n);

} // namespace borel
