#pragma once

#include <functional>
#include <string>
#include <vector>

#include "borel/errors.hpp"
#include "borel/multipoly.hpp"
#include "borel/ratfun.hpp"

namespace borel {

/// Structural tag carried by a matrix. Diagonal <= Upper, Diagonal <= LowerRep,
/// everything <= Full. LowerRep is the lower-triangular copy used to represent
/// elements of the dual of the Borel subalgebra.
enum class Shape { Diagonal, Upper, LowerRep, Full };

inline Shape shape_join(Shape a, Shape b) {
    if (a == b) return a;
    if (a == Shape::Diagonal) return b;
    if (b == Shape::Diagonal) return a;
    return Shape::Full;
}

inline std::string shape_name(Shape s) {
    switch (s) {
        case Shape::Diagonal: return "diagonal";
        case Shape::Upper: return "upper";
        case Shape::LowerRep: return "lower";
        default: return "full";
    }
}

/// Dense matrix over an exact ring T (Rational, MultiPoly or RatFun).
/// Indices are 1-based throughout, matching the formulas this code implements.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, Shape shape = Shape::Full)
        : rows_(rows), cols_(cols), shape_(shape), e_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw DimensionError("Mat: negative dimension");
    }

    static Mat identity(int n) {
        Mat m(n, n, Shape::Diagonal);
        for (int a = 1; a <= n; ++a) m.at(a, a) = T(Rational(1));
        return m;
    }
    static Mat scalar(int n, const T& c) {
        Mat m(n, n, Shape::Diagonal);
        for (int a = 1; a <= n; ++a) m.at(a, a) = c;
        return m;
    }
    /// n x 1 column.
    static Mat column(std::vector<T> entries) {
        Mat m(static_cast<int>(entries.size()), 1);
        for (int a = 1; a <= m.rows_; ++a) m.at(a, 1) = std::move(entries[a - 1]);
        return m;
    }
    /// 1 x n row.
    static Mat row(std::vector<T> entries) {
        Mat m(1, static_cast<int>(entries.size()));
        for (int b = 1; b <= m.cols_; ++b) m.at(1, b) = std::move(entries[b - 1]);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    Shape shape() const { return shape_; }
    Mat& set_shape(Shape s) {
        shape_ = s;
        return *this;
    }

    T& at(int a, int b) {
        check_index(a, b);
        return e_[static_cast<size_t>(a - 1) * cols_ + (b - 1)];
    }
    const T& at(int a, int b) const {
        check_index(a, b);
        return e_[static_cast<size_t>(a - 1) * cols_ + (b - 1)];
    }

    bool is_zero() const {
        for (const T& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Mat operator-() const {
        Mat m(rows_, cols_, shape_);
        for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
        return m;
    }
    friend Mat operator+(const Mat& x, const Mat& y) {
        x.check_same_dims(y, "+");
        Mat m(x.rows_, x.cols_, shape_join(x.shape_, y.shape_));
        for (size_t k = 0; k < x.e_.size(); ++k) m.e_[k] = x.e_[k] + y.e_[k];
        return m;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        x.check_same_dims(y, "-");
        Mat m(x.rows_, x.cols_, shape_join(x.shape_, y.shape_));
        for (size_t k = 0; k < x.e_.size(); ++k) m.e_[k] = x.e_[k] - y.e_[k];
        return m;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_)
            throw DimensionError("Mat: product of " + x.dims_str() + " by " + y.dims_str());
        Shape s = Shape::Full;
        if (x.is_square() && y.is_square()) {
            Shape j = shape_join(x.shape_, y.shape_);
            if (j != Shape::Full) s = j; // triangular * triangular keeps the flag
        }
        Mat m(x.rows_, y.cols_, s);
        for (int a = 1; a <= x.rows_; ++a)
            for (int k = 1; k <= x.cols_; ++k) {
                const T& xak = x.at(a, k);
                if (xak.is_zero()) continue;
                for (int b = 1; b <= y.cols_; ++b) {
                    const T& ykb = y.at(k, b);
                    if (ykb.is_zero()) continue;
                    m.at(a, b) += xak * ykb;
                }
            }
        return m;
    }
    friend Mat operator*(const T& c, const Mat& x) {
        Mat m(x.rows_, x.cols_, x.shape_);
        for (size_t k = 0; k < x.e_.size(); ++k) m.e_[k] = c * x.e_[k];
        return m;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    Mat transpose() const {
        Shape s = shape_;
        if (s == Shape::Upper) s = Shape::LowerRep;
        else if (s == Shape::LowerRep) s = Shape::Upper;
        Mat m(cols_, rows_, s);
        for (int a = 1; a <= rows_; ++a)
            for (int b = 1; b <= cols_; ++b) m.at(b, a) = at(a, b);
        return m;
    }

    T trace() const {
        check_square("trace");
        T t{};
        for (int a = 1; a <= rows_; ++a) t += at(a, a);
        return t;
    }

    /// Entry of a 1x1 matrix.
    const T& scalar_value() const {
        if (rows_ != 1 || cols_ != 1) throw DimensionError("Mat: not 1x1: " + dims_str());
        return e_[0];
    }

    /// Lower-triangular copy (entries with row >= col), the representative of a
    /// Borel-dual element.
    Mat lower_part() const {
        check_square("lower_part");
        Mat m(rows_, cols_, Shape::LowerRep);
        for (int a = 1; a <= rows_; ++a)
            for (int b = 1; b <= a; ++b) m.at(a, b) = at(a, b);
        return m;
    }

    Mat submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
        Mat m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
        for (size_t a = 0; a < row_idx.size(); ++a)
            for (size_t b = 0; b < col_idx.size(); ++b)
                m.at(static_cast<int>(a) + 1, static_cast<int>(b) + 1) =
                    at(row_idx[a], col_idx[b]);
        return m;
    }

    /// Determinant by cofactor expansion along the sparsest row, which is fine
    /// at the fixed small sizes used here and needs no division in T.
    T det() const {
        check_square("det");
        return det_rec(*this);
    }

    template <typename U>
    Mat<U> map(const std::function<U(const T&)>& f) const {
        Mat<U> m(rows_, cols_, shape_);
        for (int a = 1; a <= rows_; ++a)
            for (int b = 1; b <= cols_; ++b) m.at(a, b) = f(at(a, b));
        return m;
    }

    std::string str() const {
        std::string out = "[";
        for (int a = 1; a <= rows_; ++a) {
            out += a == 1 ? "[" : " [";
            for (int b = 1; b <= cols_; ++b) {
                out += at(a, b).str();
                if (b < cols_) out += ", ";
            }
            out += "]";
            if (a < rows_) out += "\n";
        }
        return out + "]";
    }

private:
    void check_index(int a, int b) const {
        if (a < 1 || a > rows_ || b < 1 || b > cols_)
            throw DimensionError("Mat: index (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") out of " + dims_str());
    }
    void check_square(const char* op) const {
        if (!is_square()) throw DimensionError(std::string("Mat: ") + op + " of non-square " + dims_str());
    }
    void check_same_dims(const Mat& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionError(std::string("Mat: ") + op + " of " + dims_str() + " and " +
                                 o.dims_str());
    }
    std::string dims_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    static T det_rec(const Mat& m) {
        int n = m.rows_;
        if (n == 0) return T(Rational(1));
        if (n == 1) return m.at(1, 1);
        if (n == 2) return m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
        // pick the row with the most zero entries
        int best = 1, best_zeros = -1;
        for (int a = 1; a <= n; ++a) {
            int z = 0;
            for (int b = 1; b <= n; ++b)
                if (m.at(a, b).is_zero()) ++z;
            if (z > best_zeros) {
                best_zeros = z;
                best = a;
            }
        }
        T acc{};
        std::vector<int> rows;
        for (int a = 1; a <= n; ++a)
            if (a != best) rows.push_back(a);
        for (int b = 1; b <= n; ++b) {
            const T& piv = m.at(best, b);
            if (piv.is_zero()) continue;
            std::vector<int> cols;
            for (int c = 1; c <= n; ++c)
                if (c != b) cols.push_back(c);
            T minor = det_rec(m.submatrix(rows, cols));
            T contrib = piv * minor;
            if ((best + b) % 2 == 0)
                acc += contrib;
            else
                acc -= contrib;
        }
        return acc;
    }

    int rows_, cols_;
    Shape shape_ = Shape::Full;
    std::vector<T> e_;
};

/// Inverse of an invertible upper-triangular matrix by back substitution.
/// T must support division (Rational or RatFun).
template <typename T>
Mat<T> upper_inverse(const Mat<T>& u) {
    if (!u.is_square()) throw DimensionError("upper_inverse: non-square matrix");
    int n = u.rows();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b < a; ++b)
            if (!u.at(a, b).is_zero()) throw Error("upper_inverse: matrix is not upper triangular");
    for (int a = 1; a <= n; ++a)
        if (u.at(a, a).is_zero())
            throw SingularityError("upper_inverse: zero diagonal entry at " + std::to_string(a));
    Mat<T> v(n, n, Shape::Upper);
    for (int a = n; a >= 1; --a) {
        v.at(a, a) = T(Rational(1)) / u.at(a, a);
        for (int b = a + 1; b <= n; ++b) {
            T s{};
            for (int k = a + 1; k <= b; ++k) s += u.at(a, k) * v.at(k, b);
            v.at(a, b) = -(s / u.at(a, a));
        }
    }
    return v;
}

/// Commutator [x, y] = xy - yx.
template <typename T>
Mat<T> commutator(const Mat<T>& x, const Mat<T>& y) {
    return x * y - y * x;
}

// Symbolic matrices of coordinate variables.

/// Upper-triangular r with entries r_{a,b}, a <= b.
Mat<MultiPoly> symbolic_r(int n);
/// Lower-triangular representative s with entries s_{a,b}, a >= b.
Mat<MultiPoly> symbolic_s_lower(int n);
/// Full s: lower entries s_{a,b} plus strict-upper lift entries.
Mat<MultiPoly> symbolic_s_full(int n);
/// Column i with entries i_a.
Mat<MultiPoly> symbolic_i(int n);
/// Row j with entries j_a.
Mat<MultiPoly> symbolic_j(int n);

/// Evaluate a polynomial matrix entrywise at a rational point.
Mat<Rational> eval_matrix(const Mat<MultiPoly>& m, const std::map<VarId, Rational>& point);

/// Rank of a rational matrix by exact Gaussian elimination.
int rank(Mat<Rational> m);

} // namespace borel
