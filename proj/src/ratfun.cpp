#include "borel/ratfun.hpp"

#include "borel/errors.hpp"

namespace borel {

RatFun::RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw SingularityError("RatFun: zero denominator");
    if (num_.is_zero()) den_ = MultiPoly(Rational(1));
}

MultiPoly RatFun::as_polynomial() const {
    if (!is_polynomial()) throw Error("RatFun: not a polynomial: " + str());
    MultiPoly p = num_;
    p *= den_.constant_value().inverse();
    return p;
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::inverse() const {
    if (num_.is_zero()) throw SingularityError("RatFun: inverse of zero");
    return RatFun(den_, num_);
}

Rational RatFun::eval(const std::map<VarId, Rational>& point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) throw SingularityError("RatFun: denominator vanishes at point");
    return num_.eval(point) / d;
}

std::string RatFun::str() const {
    if (is_polynomial()) return as_polynomial().str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace borel
