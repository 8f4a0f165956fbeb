#pragma once

#include <map>

#include "borel/multipoly.hpp"

namespace borel {

/// Rational function num/den over the polynomial ring. No gcd reduction is
/// attempted (multivariate gcd is expensive and nothing here needs canonical
/// forms); equality is decided by cross-multiplication, which is exact.
class RatFun {
public:
    RatFun() : num_(), den_(Rational(1)) {} // zero
    explicit RatFun(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    explicit RatFun(MultiPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    RatFun(MultiPoly num, MultiPoly den);

    static RatFun var(VarId v) { return RatFun(MultiPoly::var(v)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Numerator scaled by the constant denominator; throws if not polynomial.
    MultiPoly as_polynomial() const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun inverse() const;

    /// Mathematical equality (cross-multiplication).
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    /// Exact evaluation; SingularityError if the denominator vanishes.
    Rational eval(const std::map<VarId, Rational>& point) const;

    std::string str() const;

private:
    MultiPoly num_, den_;
};

} // namespace borel
