#include "borel/oneparam.hpp"

#include "borel/errors.hpp"

namespace borel {

namespace {

RatFun t_power(uint32_t e) { return RatFun(MultiPoly::var(VarId::t(), e)); }

Mat<RatFun> build(OneParamSubgroup::Label label, int n) {
    Mat<RatFun> g(n, n, Shape::Upper);
    switch (label) {
        case OneParamSubgroup::Label::Lambda:
            for (int a = 1; a <= n; ++a) g.at(a, a) = t_power(static_cast<uint32_t>(n - a));
            g.set_shape(Shape::Diagonal);
            break;
        case OneParamSubgroup::Label::Lambda1:
            for (int a = 1; a <= n; ++a) g.at(a, a) = t_power(static_cast<uint32_t>(a - 1));
            g.set_shape(Shape::Diagonal);
            break;
        case OneParamSubgroup::Label::Lambda2:
            for (int a = 1; a <= n; ++a)
                for (int b = a; b <= n; ++b) g.at(a, b) = t_power(static_cast<uint32_t>(a - 1));
            break;
    }
    return g;
}

} // namespace

OneParamSubgroup::OneParamSubgroup(Label label, int n)
    : label_(label), n_(n), g_(build(label, n)), ginv_(upper_inverse(g_)) {}

OneParamSubgroup::Label OneParamSubgroup::label_from_name(const std::string& name) {
    if (name == "lambda") return Label::Lambda;
    if (name == "lambda1") return Label::Lambda1;
    if (name == "lambda2") return Label::Lambda2;
    throw ParseError("unknown one-parameter subgroup '" + name +
                     "' (expected lambda, lambda1 or lambda2)");
}

std::string OneParamSubgroup::name() const {
    switch (label_) {
        case Label::Lambda: return "lambda";
        case Label::Lambda1: return "lambda1";
        default: return "lambda2";
    }
}

Mat<RatFun> conjugate_by(const OneParamSubgroup& g, const Mat<RatFun>& x) {
    if (x.rows() != g.n() || x.cols() != g.n())
        throw DimensionError("conjugate_by: dimension mismatch");
    return g.mat() * x * g.inv();
}

Mat<RatFun> to_ratfun(const Mat<MultiPoly>& m) {
    Mat<RatFun> out = m.map<RatFun>([](const MultiPoly& p) { return RatFun(p); });
    out.set_shape(m.shape());
    return out;
}

namespace {

RatFun entry_limit(const RatFun& f) {
    if (f.is_zero()) return RatFun();
    VarId t = VarId::t();
    int p = f.num().min_degree_in(t);
    int q = f.den().min_degree_in(t);
    if (p < q)
        throw LimitError("entry diverges as t -> 0: " + f.str());
    if (p > q) return RatFun();
    return RatFun(f.num().coefficient_of(t, static_cast<uint32_t>(p)),
                  f.den().coefficient_of(t, static_cast<uint32_t>(q)));
}

} // namespace

Mat<RatFun> limit_t0(const Mat<RatFun>& m) {
    Mat<RatFun> out = m.map<RatFun>(entry_limit);
    out.set_shape(m.shape());
    return out;
}

Mat<MultiPoly> limit_t0_poly(const Mat<RatFun>& m) {
    Mat<MultiPoly> out =
        limit_t0(m).map<MultiPoly>([](const RatFun& f) { return f.as_polynomial(); });
    out.set_shape(m.shape());
    return out;
}

Mat<MultiPoly> one_param_limit(const OneParamSubgroup& g, LimitTarget target) {
    int n = g.n();
    if (target == LimitTarget::RMode) {
        Mat<RatFun> conj = conjugate_by(g, to_ratfun(symbolic_r(n)));
        return limit_t0_poly(conj).set_shape(Shape::Upper);
    }
    // SMode: only the lower-representative entries are well-defined; limit those.
    Mat<RatFun> conj = conjugate_by(g, to_ratfun(symbolic_s_lower(n)));
    Mat<RatFun> lower(n, n, Shape::LowerRep);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= a; ++b) lower.at(a, b) = conj.at(a, b);
    return limit_t0_poly(lower);
}

} // namespace borel
