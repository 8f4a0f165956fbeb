#include "borel/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "borel/errors.hpp"
#include "borel/oneparam.hpp"

namespace borel {

SubsetIndex::SubsetIndex(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
    if (n < 0) throw DimensionError("SubsetIndex: negative n");
    std::sort(elems_.begin(), elems_.end());
    for (size_t k = 0; k < elems_.size(); ++k) {
        if (elems_[k] < 1 || elems_[k] > n_)
            throw Error("SubsetIndex: element " + std::to_string(elems_[k]) + " outside [1," +
                        std::to_string(n_) + "]");
        if (k > 0 && elems_[k] == elems_[k - 1])
            throw Error("SubsetIndex: duplicate element " + std::to_string(elems_[k]));
    }
}

SubsetIndex SubsetIndex::full(int n) {
    std::vector<int> e(n);
    for (int k = 1; k <= n; ++k) e[k - 1] = k;
    return SubsetIndex(n, std::move(e));
}

SubsetIndex SubsetIndex::complement(int n, int iota) {
    if (iota < 1 || iota > n) throw Error("SubsetIndex: iota outside [1,n]");
    std::vector<int> e;
    for (int k = 1; k <= n; ++k)
        if (k != iota) e.push_back(k);
    return SubsetIndex(n, std::move(e));
}

std::vector<SubsetIndex> SubsetIndex::all_subsets(int n) {
    std::vector<SubsetIndex> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> e;
        for (int k = 1; k <= n; ++k)
            if ((mask >> (k - 1)) & 1u) e.push_back(k);
        out.emplace_back(n, std::move(e));
    }
    return out;
}

bool SubsetIndex::contains(int k) const {
    return std::binary_search(elems_.begin(), elems_.end(), k);
}

std::string SubsetIndex::str() const {
    std::string out = "{";
    for (size_t k = 0; k < elems_.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(elems_[k]);
    }
    return out + "}";
}

SubsetIndex SubsetIndex::parse(int n, const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}') throw ParseError("SubsetIndex: unbalanced braces in '" + text + "'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> elems;
    std::string tok;
    std::istringstream is(body);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw ParseError("SubsetIndex: empty element in '" + text + "'");
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("SubsetIndex: bad element '" + tok + "'");
        }
        if (pos != tok.size()) throw ParseError("SubsetIndex: bad element '" + tok + "'");
        elems.push_back(v);
    }
    try {
        return SubsetIndex(n, std::move(elems));
    } catch (const Error& e) {
        throw ParseError(std::string("SubsetIndex: ") + e.what());
    }
}

Mat<MultiPoly> ell_J(const SubsetIndex& J) { return ell_J(J, symbolic_r(J.n())); }

MultiPoly tr_J(const SubsetIndex& J) { return ell_J(J).trace(); }

Mat<RatFun> L_J(const SubsetIndex& J) {
    MultiPoly t = tr_J(J);
    if (t.is_zero()) throw SingularityError("L_J: tr^J is identically zero");
    RatFun scale(MultiPoly(Rational(1)), t);
    Mat<RatFun> out = to_ratfun(ell_J(J)); // defined in oneparam.hpp; reuse here
    return scale * out;
}

namespace {

void certify_no_lift_vars(const MultiPoly& p, const std::string& name) {
    for (VarId v : p.support())
        if (v.is_strict_upper_s())
            throw CertificationError(name + " depends on lift variable " + v.name());
}

Invariant make_poly_invariant(FamilyKind kind, const SubsetIndex& J, MultiPoly value,
                              std::string name) {
    certify_no_lift_vars(value, name);
    return Invariant{kind, J.n(), J, 0, std::move(value), MultiPoly(Rational(1)),
                     std::move(name)};
}

} // namespace

Invariant family_f(const SubsetIndex& J) {
    SymQuadruple q = symbolic_quadruple(J.n(), /*full_s=*/true);
    MultiPoly value = (q.j * ell_J(J, q.r) * q.i).scalar_value();
    return make_poly_invariant(FamilyKind::F, J, std::move(value), "f_" + J.str());
}

Invariant family_g(const SubsetIndex& J) {
    SymQuadruple q = symbolic_quadruple(J.n(), /*full_s=*/true);
    MultiPoly value = (ell_J(J, q.r) * q.s).trace();
    return make_poly_invariant(FamilyKind::G, J, std::move(value), "g_" + J.str());
}

Invariant family_h(int n, int iota) {
    SubsetIndex J = SubsetIndex::complement(n, iota);
    MultiPoly num = (ell_J(J) * symbolic_r(n)).trace();
    MultiPoly den = tr_J(J);
    std::string name = "h_" + std::to_string(iota);
    certify_no_lift_vars(num, name);
    certify_no_lift_vars(den, name);
    return Invariant{FamilyKind::H, n, J, iota, std::move(num), std::move(den), std::move(name)};
}

Invariant family_k(const SubsetIndex& J) {
    int n = J.n();
    SymQuadruple q = symbolic_quadruple(n, /*full_s=*/true);
    Mat<MultiPoly> guard = ell_J(SubsetIndex::complement(n, n), q.r);
    MultiPoly value = (q.j * guard * q.s * ell_J(J, q.r) * q.i).scalar_value();
    return make_poly_invariant(FamilyKind::K, J, std::move(value),
                               "k_{" + std::to_string(n) + "," + J.str() + "}");
}

Invariant family_l(const SubsetIndex& J) {
    int n = J.n();
    SymQuadruple q = symbolic_quadruple(n, /*full_s=*/true);
    Mat<MultiPoly> guard = ell_J(SubsetIndex::complement(n, 1), q.r);
    MultiPoly value = (q.j * ell_J(J, q.r) * q.s * guard * q.i).scalar_value();
    return make_poly_invariant(FamilyKind::L, J, std::move(value),
                               "l_{" + J.str() + ",1}");
}

std::vector<Invariant> all_families(int n) {
    std::vector<Invariant> out;
    for (const SubsetIndex& J : SubsetIndex::all_subsets(n)) out.push_back(family_f(J));
    for (const SubsetIndex& J : SubsetIndex::all_subsets(n)) out.push_back(family_g(J));
    for (int iota = 1; iota <= n; ++iota) out.push_back(family_h(n, iota));
    for (const SubsetIndex& J : SubsetIndex::all_subsets(n)) out.push_back(family_k(J));
    for (const SubsetIndex& J : SubsetIndex::all_subsets(n)) out.push_back(family_l(J));
    return out;
}

std::vector<GCertificate> certify_g_family(int n) {
    std::vector<GCertificate> out;
    for (const SubsetIndex& J : SubsetIndex::all_subsets(n)) {
        SymQuadruple q = symbolic_quadruple(n, /*full_s=*/true);
        MultiPoly value = (ell_J(J, q.r) * q.s).trace();
        bool ok = true;
        for (VarId v : value.support())
            if (v.is_strict_upper_s()) ok = false;
        out.push_back(GCertificate{J, ok});
    }
    return out;
}

namespace {

InvarianceCheck run_invariance(const MultiPoly& num, const MultiPoly& den,
                               const std::string& name, int n, int trials, uint64_t seed) {
    InvarianceCheck check;
    check.name = name;
    check.n = n;
    check.trials = trials;
    check.passed = true;
    check.counterexample = nullptr;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        NumQuadruple x = random_quadruple(rng, n, 5);
        GroupElement b = random_group_element(rng, n, 5);
        NumQuadruple bx = act(b, x);
        PointEval ex(assignment(x)), ebx(assignment(bx));
        // cross-multiplied equality num(bx) den(x) = num(x) den(bx)
        Rational lhs = ebx(num) * ex(den);
        Rational rhs = ex(num) * ebx(den);
        if (lhs != rhs) {
            bool is_poly = den.is_constant() && den.constant_value().is_one();
            auto show = [is_poly](const Rational& nv, const Rational& dv) {
                return is_poly ? nv.str() : nv.str() + " / " + dv.str();
            };
            check.passed = false;
            check.counterexample = json{{"trial", t},
                                        {"b", rat_matrix_to_json(b.mat())},
                                        {"x", quadruple_to_json(x)},
                                        {"value_at_x", show(ex(num), ex(den))},
                                        {"value_at_bx", show(ebx(num), ebx(den))}};
            break;
        }
    }
    return check;
}

} // namespace

InvarianceCheck is_invariant(const MultiPoly& p, const std::string& name, int n, int trials,
                             uint64_t seed) {
    return run_invariance(p, MultiPoly(Rational(1)), name, n, trials, seed);
}

InvarianceCheck is_invariant(const RatFun& f, const std::string& name, int n, int trials,
                             uint64_t seed) {
    return run_invariance(f.num(), f.den(), name, n, trials, seed);
}

InvarianceCheck is_invariant(const Invariant& inv, int trials, uint64_t seed) {
    return run_invariance(inv.poly, inv.den, inv.name, inv.n, trials, seed);
}

bool is_invariant_symbolic(const MultiPoly& p, int n) {
    SymQuadruple acted = act_symbolic(n);
    std::map<VarId, MultiPoly> img = coordinate_images(acted);
    MultiPoly moved = normalize_group_units(p.subst_vars(img), n);
    return moved == p;
}

} // namespace borel
