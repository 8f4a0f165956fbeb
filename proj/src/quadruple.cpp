#include "borel/quadruple.hpp"

#include "borel/errors.hpp"

namespace borel {

SymQuadruple symbolic_quadruple(int n, bool full_s) {
    SymQuadruple q;
    q.n = n;
    q.r = symbolic_r(n);
    q.s = full_s ? symbolic_s_full(n) : symbolic_s_lower(n);
    q.i = symbolic_i(n);
    q.j = symbolic_j(n);
    return q;
}

NumQuadruple random_quadruple(Rng& rng, int n, long height) {
    NumQuadruple q;
    q.n = n;
    q.r = Mat<Rational>(n, n, Shape::Upper);
    q.s = Mat<Rational>(n, n, Shape::LowerRep);
    q.i = Mat<Rational>(n, 1);
    q.j = Mat<Rational>(1, n);
    for (int a = 1; a <= n; ++a) {
        for (int b = a; b <= n; ++b) q.r.at(a, b) = rng.next_rational(height);
        for (int b = 1; b <= a; ++b) q.s.at(a, b) = rng.next_rational(height);
        q.i.at(a, 1) = rng.next_rational(height);
        q.j.at(1, a) = rng.next_rational(height);
    }
    return q;
}

NumQuadruple act(const GroupElement& b, const NumQuadruple& q) {
    if (b.n() != q.n) throw DimensionError("act: group element and quadruple dimensions differ");
    NumQuadruple out;
    out.n = q.n;
    out.r = (b.mat() * q.r * b.inv()).set_shape(Shape::Upper);
    out.s = (b.mat() * q.s * b.inv()).lower_part();
    out.i = b.mat() * q.i;
    out.j = q.j * b.inv();
    return out;
}

SymQuadruple act_symbolic(int n) {
    Mat<MultiPoly> g = symbolic_group(n);
    Mat<MultiPoly> ginv = symbolic_group_inverse(n);
    SymQuadruple q = symbolic_quadruple(n);
    SymQuadruple out;
    out.n = n;
    out.r = normalize_group_units(g * q.r * ginv, n).set_shape(Shape::Upper);
    out.s = normalize_group_units((g * q.s * ginv).lower_part(), n);
    out.i = normalize_group_units(g * q.i, n);
    out.j = normalize_group_units(q.j * ginv, n);
    return out;
}

std::map<VarId, Rational> assignment(const NumQuadruple& q) {
    std::map<VarId, Rational> a;
    for (int x = 1; x <= q.n; ++x) {
        for (int y = x; y <= q.n; ++y) a[VarId::r(x, y)] = q.r.at(x, y);
        for (int y = 1; y <= x; ++y) a[VarId::s(x, y)] = q.s.at(x, y);
        a[VarId::i(x)] = q.i.at(x, 1);
        a[VarId::j(x)] = q.j.at(1, x);
    }
    return a;
}

NumQuadruple quadruple_from_assignment(int n, const std::map<VarId, Rational>& a) {
    NumQuadruple q;
    q.n = n;
    q.r = Mat<Rational>(n, n, Shape::Upper);
    q.s = Mat<Rational>(n, n, Shape::LowerRep);
    q.i = Mat<Rational>(n, 1);
    q.j = Mat<Rational>(1, n);
    auto get = [&a](VarId v) {
        auto it = a.find(v);
        return it == a.end() ? Rational(0) : it->second;
    };
    for (int x = 1; x <= n; ++x) {
        for (int y = x; y <= n; ++y) q.r.at(x, y) = get(VarId::r(x, y));
        for (int y = 1; y <= x; ++y) q.s.at(x, y) = get(VarId::s(x, y));
        q.i.at(x, 1) = get(VarId::i(x));
        q.j.at(1, x) = get(VarId::j(x));
    }
    return q;
}

std::map<VarId, MultiPoly> coordinate_images(const SymQuadruple& q) {
    std::map<VarId, MultiPoly> img;
    for (int x = 1; x <= q.n; ++x) {
        for (int y = x; y <= q.n; ++y) img[VarId::r(x, y)] = q.r.at(x, y);
        for (int y = 1; y <= x; ++y) img[VarId::s(x, y)] = q.s.at(x, y);
        img[VarId::i(x)] = q.i.at(x, 1);
        img[VarId::j(x)] = q.j.at(1, x);
    }
    return img;
}

NumQuadruple sample_component_point(int n, unsigned ell, const std::vector<Rational>& r_diag,
                                    const std::vector<Rational>& s_diag) {
    if (static_cast<int>(r_diag.size()) != n || static_cast<int>(s_diag.size()) != n)
        throw DimensionError("sample_component_point: diagonal length mismatch");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (r_diag[a] == r_diag[b])
                throw EigenvalueCollisionError(
                    "sample_component_point: r diagonal entries must be pairwise distinct");
    NumQuadruple q;
    q.n = n;
    q.r = Mat<Rational>(n, n, Shape::Diagonal);
    q.s = Mat<Rational>(n, n, Shape::LowerRep);
    q.i = Mat<Rational>(n, 1);
    q.j = Mat<Rational>(1, n);
    for (int k = 1; k <= n; ++k) {
        q.r.at(k, k) = r_diag[k - 1];
        q.s.at(k, k) = s_diag[k - 1];
        bool sel = (ell >> (k - 1)) & 1u;
        q.i.at(k, 1) = Rational(sel ? 1 : 0);
        q.j.at(1, k) = Rational(sel ? 0 : 1);
    }
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b < a; ++b) {
            Rational num = q.i.at(a, 1) * q.j.at(1, b);
            q.s.at(a, b) = -(num / (q.r.at(a, a) - q.r.at(b, b)));
        }
    return q;
}

NumQuadruple sample_component_point(int n, unsigned ell, Rng& rng, long height) {
    std::vector<Rational> r_diag, s_diag;
    while (static_cast<int>(r_diag.size()) < n) {
        Rational c = rng.next_rational(height);
        bool fresh = true;
        for (const Rational& x : r_diag)
            if (x == c) fresh = false;
        if (fresh) r_diag.push_back(c);
    }
    for (int k = 0; k < n; ++k) s_diag.push_back(rng.next_rational(height));
    return sample_component_point(n, ell, r_diag, s_diag);
}

json quadruple_to_json(const NumQuadruple& q) {
    std::vector<Rational> iv, jv;
    for (int a = 1; a <= q.n; ++a) {
        iv.push_back(q.i.at(a, 1));
        jv.push_back(q.j.at(1, a));
    }
    return json{{"n", q.n},
                {"r", rat_matrix_to_json(q.r)},
                {"s", rat_matrix_to_json(q.s)},
                {"i", rat_list_to_json(iv)},
                {"j", rat_list_to_json(jv)}};
}

NumQuadruple quadruple_from_json(const json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("s") || !j.contains("i") ||
        !j.contains("j"))
        throw ParseError("quadruple json needs fields r, s, i, j");
    NumQuadruple q;
    q.r = rat_matrix_from_json(j.at("r"));
    q.n = q.r.rows();
    if (!q.r.is_square()) throw ParseError("quadruple: r must be square");
    q.r.set_shape(Shape::Upper);
    q.s = rat_matrix_from_json(j.at("s")).set_shape(Shape::LowerRep);
    std::vector<Rational> iv = rat_list_from_json(j.at("i"));
    std::vector<Rational> jv = rat_list_from_json(j.at("j"));
    if (q.s.rows() != q.n || q.s.cols() != q.n || static_cast<int>(iv.size()) != q.n ||
        static_cast<int>(jv.size()) != q.n)
        throw ParseError("quadruple: dimension mismatch across r, s, i, j");
    for (int a = 1; a <= q.n; ++a) {
        for (int b = 1; b < a; ++b)
            if (!q.r.at(a, b).is_zero()) throw ParseError("quadruple: r must be upper triangular");
        for (int b = a + 1; b <= q.n; ++b)
            if (!q.s.at(a, b).is_zero())
                throw ParseError("quadruple: s must be lower triangular");
    }
    q.i = Mat<Rational>::column(iv);
    q.j = Mat<Rational>::row(jv);
    return q;
}

} // namespace borel
