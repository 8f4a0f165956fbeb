#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "borel/rational.hpp"
#include "borel/varid.hpp"

namespace borel {

/// Total-degree cap for products and powers (default 64). Exceeding it raises
/// DegreeCapError: a runaway computation should fail loudly, not grind.
int degree_cap();
void set_degree_cap(int cap);

/// Power product in canonical form: factors sorted by VarId, exponents > 0.
class Monomial {
public:
    using Factor = std::pair<VarId, uint32_t>;

    Monomial() = default; // the monomial 1
    static Monomial var(VarId v, uint32_t e = 1);
    /// Factors may come unsorted and with repeats; they get merged.
    static Monomial of(std::vector<Factor> factors);

    bool trivial() const { return f_.empty(); }
    int total_degree() const;
    uint32_t degree_in(VarId v) const;
    bool depends_on(VarId v) const { return degree_in(v) > 0; }
    const std::vector<Factor>& factors() const { return f_; }

    Monomial operator*(const Monomial& o) const;
    /// Monomial with the factor of v removed entirely.
    Monomial without(VarId v) const;

    friend bool operator==(const Monomial& x, const Monomial& y) { return x.f_ == y.f_; }
    /// Deterministic storage order (not a monomial order in the Groebner sense).
    friend bool operator<(const Monomial& x, const Monomial& y);

    std::string str() const;

private:
    std::vector<Factor> f_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: no zero coefficients are stored and terms live in a map
/// with a fixed deterministic order, so structural equality is mathematical
/// equality. All values are immutable in practice: operations return fresh
/// polynomials.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default; // zero
    explicit MultiPoly(Rational c);
    explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}
    static MultiPoly var(VarId v, uint32_t e = 1);
    static MultiPoly term(Rational c, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the value if is_constant()).
    Rational constant_value() const;

    int total_degree() const; // -1 for the zero polynomial
    int degree_in(VarId v) const;
    int min_degree_in(VarId v) const;
    bool depends_on(VarId v) const;
    std::set<VarId> support() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    MultiPoly pow(uint32_t e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Exact evaluation; every variable occurring in the polynomial must be
    /// assigned, otherwise MissingAssignmentError.
    Rational eval(const std::map<VarId, Rational>& point) const;

    /// Formal partial derivative.
    MultiPoly diff(VarId v) const;

    /// Polynomial coefficient of v^k (a polynomial in the other variables).
    MultiPoly coefficient_of(VarId v, uint32_t k) const;

    /// Substitution homomorphism into any commutative ring T that supports
    /// T(Rational), +=, and *. Variables not covered by `leaf` map to themselves,
    /// which only makes sense for T = MultiPoly; pass total maps otherwise.
    template <typename T>
    T subst(const std::function<const T*(VarId)>& leaf) const;

    /// Convenience substitution of a subset of variables by polynomials.
    MultiPoly subst_vars(const std::map<VarId, MultiPoly>& repl) const;

    /// Normal form in the Laurent-style quotient where u*v = 1 for each listed
    /// pair: every term drops min(deg_u, deg_v) from both exponents. Used with
    /// the symbolic group diagonals g_{a,a} and their adjoined inverses gd_a.
    MultiPoly cancel_unit_pairs(const std::vector<std::pair<VarId, VarId>>& pairs) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    static void check_cap(const Monomial& m);

    TermMap terms_;

    friend class PointEval;
};

/// Power-caching evaluator for repeated evaluation at one point.
class PointEval {
public:
    explicit PointEval(const std::map<VarId, Rational>& point);
    Rational operator()(const MultiPoly& p) const;

private:
    const Rational& power(uint32_t code, uint32_t e) const;
    std::map<uint32_t, Rational> vals_;
    mutable std::map<uint32_t, std::vector<Rational>> powers_;
};

template <typename T>
T MultiPoly::subst(const std::function<const T*(VarId)>& leaf) const {
    T acc{};
    for (const auto& [m, c] : terms_) {
        T term{c};
        for (const auto& [v, e] : m.factors()) {
            const T* rep = leaf(v);
            if (rep == nullptr) throw MissingAssignmentError("subst: no image for " + v.name());
            T p = *rep;
            uint32_t k = e;
            T pw{Rational(1)};
            while (true) { // square-and-multiply
                if (k & 1u) pw = pw * p;
                k >>= 1u;
                if (!k) break;
                p = p * p;
            }
            term = term * pw;
        }
        acc += term;
    }
    return acc;
}

} // namespace borel
