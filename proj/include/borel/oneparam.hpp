#pragma once

#include "borel/matrix.hpp"

namespace borel {

/// The three one-parameter subgroups of B used to cut invariants down to
/// diagonal data, as matrices over rational functions of the formal variable t.
///
///   Lambda:  diag(t^{n-a})          (flows r to its diagonal)
///   Lambda1: diag(t^{a-1})          (flows s to its diagonal)
///   Lambda2: entries t^{i-1} on and above the diagonal of row i
class OneParamSubgroup {
public:
    enum class Label { Lambda, Lambda1, Lambda2 };

    OneParamSubgroup(Label label, int n);

    Label label() const { return label_; }
    int n() const { return n_; }
    const Mat<RatFun>& mat() const { return g_; }
    /// Inverse computed symbolically by back substitution, not assumed.
    const Mat<RatFun>& inv() const { return ginv_; }

    static Label label_from_name(const std::string& name);
    std::string name() const;

private:
    Label label_;
    int n_;
    Mat<RatFun> g_, ginv_;
};

/// g(t) x g(t)^{-1} over the rational-function ring.
Mat<RatFun> conjugate_by(const OneParamSubgroup& g, const Mat<RatFun>& x);

Mat<RatFun> to_ratfun(const Mat<MultiPoly>& m);

/// Entrywise limit of m(t) as t -> 0. An entry t^p N / t^q D with N, D free of
/// t at order zero converges iff p >= q (value 0 for p > q, N0/D0 for p = q);
/// otherwise LimitError.
Mat<RatFun> limit_t0(const Mat<RatFun>& m);

/// Limit specialized to polynomial entries; throws if an entry stays rational.
Mat<MultiPoly> limit_t0_poly(const Mat<RatFun>& m);

enum class LimitTarget { RMode, SMode };

/// Limit of the action of g on the symbolic r (RMode: plain conjugation) or on
/// the symbolic lower-representative s (SMode: conjugation followed by
/// truncation to the lower triangle, whose entries are the well-defined ones).
Mat<MultiPoly> one_param_limit(const OneParamSubgroup& g, LimitTarget target);

} // namespace borel
