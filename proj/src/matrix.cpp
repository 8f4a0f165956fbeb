#include "borel/matrix.hpp"

namespace borel {

Mat<MultiPoly> symbolic_r(int n) {
    Mat<MultiPoly> m(n, n, Shape::Upper);
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) m.at(a, b) = MultiPoly::var(VarId::r(a, b));
    return m;
}

Mat<MultiPoly> symbolic_s_lower(int n) {
    Mat<MultiPoly> m(n, n, Shape::LowerRep);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= a; ++b) m.at(a, b) = MultiPoly::var(VarId::s(a, b));
    return m;
}

Mat<MultiPoly> symbolic_s_full(int n) {
    Mat<MultiPoly> m(n, n, Shape::Full);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            m.at(a, b) = MultiPoly::var(a >= b ? VarId::s(a, b) : VarId::s_upper(a, b));
    return m;
}

Mat<MultiPoly> symbolic_i(int n) {
    Mat<MultiPoly> m(n, 1);
    for (int a = 1; a <= n; ++a) m.at(a, 1) = MultiPoly::var(VarId::i(a));
    return m;
}

Mat<MultiPoly> symbolic_j(int n) {
    Mat<MultiPoly> m(1, n);
    for (int a = 1; a <= n; ++a) m.at(1, a) = MultiPoly::var(VarId::j(a));
    return m;
}

Mat<Rational> eval_matrix(const Mat<MultiPoly>& m, const std::map<VarId, Rational>& point) {
    PointEval pe(point);
    Mat<Rational> out(m.rows(), m.cols(), m.shape());
    for (int a = 1; a <= m.rows(); ++a)
        for (int b = 1; b <= m.cols(); ++b) out.at(a, b) = pe(m.at(a, b));
    return out;
}

int rank(Mat<Rational> m) {
    int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 1; c <= cols && r < rows; ++c) {
        int piv = 0;
        for (int a = r + 1; a <= rows; ++a)
            if (!m.at(a, c).is_zero()) {
                piv = a;
                break;
            }
        if (piv == 0) continue;
        ++r;
        if (piv != r)
            for (int b = c; b <= cols; ++b) std::swap(m.at(r, b), m.at(piv, b));
        Rational inv = m.at(r, c).inverse();
        for (int a = r + 1; a <= rows; ++a) {
            if (m.at(a, c).is_zero()) continue;
            Rational f = m.at(a, c) * inv;
            for (int b = c; b <= cols; ++b) m.at(a, b) -= f * m.at(r, b);
        }
    }
    return r;
}

} // namespace borel
