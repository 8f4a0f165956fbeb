#include <pybind11/pybind11.h>

#include <json.hpp>

#include "borel/errors.hpp"
#include "borel/ideal.hpp"
#include "borel/invariants.hpp"
#include "borel/jacobian.hpp"
#include "borel/json_io.hpp"
#include "borel/moment.hpp"
#include "borel/oneparam.hpp"
#include "borel/quadruple.hpp"
#include "borel/words.hpp"

namespace py = pybind11;
using namespace borel;
using nlohmann::json;

namespace {

// The module speaks JSON strings: scalars in, one serialized document out.
// The Python package turns them back into dicts/lists. Keeping the boundary
// textual avoids binding the whole exact-arithmetic type zoo.

std::string dump(const json& j) { return j.dump(); }

MomentFlavor flavor_from(const std::string& name) {
    if (name == "borel") return MomentFlavor::Borel;
    if (name == "general") return MomentFlavor::General;
    throw Error("flavor must be 'borel' or 'general', got '" + name + "'");
}

Twist twist_from(const std::string& name) {
    if (name == "det") return Twist::Det;
    if (name == "det-inv") return Twist::DetInv;
    throw Error("twist must be 'det' or 'det-inv', got '" + name + "'");
}

OrderKind order_from(const std::string& name) {
    if (name == "grevlex") return OrderKind::Grevlex;
    if (name == "lex") return OrderKind::Lex;
    throw Error("order must be 'grevlex' or 'lex', got '" + name + "'");
}

std::vector<Rational> rat_list_arg(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(std::string(what) + ": not valid JSON");
    return rat_list_from_json(j);
}

std::string moment_system_doc(int n, const std::string& flavor) {
    MomentSystem sys = MomentSystem::build(n, flavor_from(flavor));
    json doc;
    doc["n"] = n;
    doc["flavor"] = flavor;
    json vars = json::array();
    for (const VarId& v : sys.ambient_vars()) vars.push_back(v.str());
    doc["ambient_vars"] = vars;
    json entries = json::array();
    for (size_t k = 0; k < sys.polys().size(); ++k) {
        json e;
        e["gamma"] = sys.entries()[k].first;
        e["nu"] = sys.entries()[k].second;
        e["poly"] = poly_to_json(sys.polys()[k]);
        entries.push_back(std::move(e));
    }
    doc["entries"] = entries;
    return dump(doc);
}

std::string families_doc(int n) {
    std::map<std::string, bool> certified;
    for (const GCertificate& c : certify_g_family(n)) certified["g_" + c.J.str()] = c.well_defined;
    json out = json::array();
    for (const Invariant& inv : all_families(n)) {
        json e;
        e["name"] = inv.name;
        switch (inv.kind) {
        case FamilyKind::F: e["kind"] = "f"; break;
        case FamilyKind::G: e["kind"] = "g"; break;
        case FamilyKind::H: e["kind"] = "h"; break;
        case FamilyKind::K: e["kind"] = "k"; break;
        case FamilyKind::L: e["kind"] = "l"; break;
        }
        e["poly"] = poly_to_json(inv.poly);
        e["den"] = poly_to_json(inv.den);
        auto it = certified.find(inv.name);
        e["certified"] = it == certified.end() ? true : it->second;
        out.push_back(std::move(e));
    }
    return dump(out);
}

std::string verify_invariants_doc(int n, int trials, uint64_t seed) {
    std::map<std::string, bool> certified;
    for (const GCertificate& c : certify_g_family(n)) certified["g_" + c.J.str()] = c.well_defined;
    json out = json::array();
    uint64_t salt = 0;
    for (const Invariant& inv : all_families(n)) {
        json e;
        e["name"] = inv.name;
        uint64_t member_seed = seed + 1000 * ++salt;
        auto it = certified.find(inv.name);
        if (it != certified.end() && !it->second) {
            e["status"] = "skipped";
            e["reason"] = "depends on the lift; not well-defined on the quotient";
        } else {
            InvarianceCheck c = is_invariant(inv, trials, member_seed);
            e["status"] = c.passed ? "pass" : "fail";
            if (!c.passed) e["counterexample"] = c.counterexample;
        }
        out.push_back(std::move(e));
    }
    return dump(out);
}

std::string unique_lift_doc(const std::string& r_diag, const std::string& s_diag,
                            const std::string& i, const std::string& j) {
    Mat<Rational> s = unique_lift(rat_list_arg(r_diag, "r_diag"), rat_list_arg(s_diag, "s_diag"),
                                  rat_list_arg(i, "i"), rat_list_arg(j, "j"));
    return dump(rat_matrix_to_json(s));
}

std::string sample_component_doc(int n, unsigned ell, uint64_t seed) {
    Rng rng(seed);
    NumQuadruple q = sample_component_point(n, ell, rng);
    MomentSystem sys = MomentSystem::build(n, MomentFlavor::Borel);
    json doc;
    doc["n"] = n;
    doc["ell"] = ell;
    doc["point"] = quadruple_to_json(q);
    doc["moment_values"] = rat_list_to_json(sys.eval(q));
    doc["on_fiber"] = sys.vanishes_at(q);
    return dump(doc);
}

std::string semi_invariant_doc(int n, const std::string& words_spec, const std::string& twist_arg) {
    Twist twist = twist_from(twist_arg);
    std::vector<WordSum> words = parse_word_tuple(n, words_spec);
    SemiInvariant p = twist == Twist::Det ? psi(words) : phi(words);
    json doc;
    doc["name"] = p.name;
    doc["twist"] = twist_arg;
    doc["num"] = poly_to_json(p.poly);
    doc["den"] = poly_to_json(p.den);
    return dump(doc);
}

std::string check_semi_invariant_doc(int n, const std::string& words_spec,
                                     const std::string& twist_arg, int trials, uint64_t seed) {
    Twist twist = twist_from(twist_arg);
    std::vector<WordSum> words = parse_word_tuple(n, words_spec);
    SemiInvariant p = twist == Twist::Det ? psi(words) : phi(words);
    InvarianceCheck c = is_semi_invariant(p, trials, seed);
    json doc;
    doc["name"] = c.name;
    doc["trials"] = c.trials;
    doc["passed"] = c.passed;
    doc["counterexample"] = c.counterexample;
    return dump(doc);
}

std::string restrict_doc(int n, const std::string& words_spec, const std::string& twist_arg) {
    Twist twist = twist_from(twist_arg);
    std::vector<WordSum> words = parse_word_tuple(n, words_spec);
    SemiInvariant p = twist == Twist::Det ? psi(words) : phi(words);
    EpsMap which = twist == Twist::Det ? EpsMap::I0 : EpsMap::J0;
    RestrictedValue rv = restrict_semi(p, which);
    json doc;
    doc["name"] = p.name;
    doc["num"] = poly_to_json(rv.num);
    doc["den"] = poly_to_json(rv.den);
    doc["alternating"] = is_alternating(rv, n);
    doc["torus_factorization"] = rv.num == torus_matrix(words).det();
    bool guarded = false;
    for (const WordSum& ws : words)
        for (const auto& term : ws.terms)
            for (const Generator& g : term.second.gens)
                if (g.kind == GenKind::GuardN || g.kind == GenKind::Guard1)
                    guarded = true;
    if (guarded) {
        doc["orbit"] = nullptr; // guard atoms pin rows n/1 and admit no relabeling
    } else {
        RestrictedValue orbit = restrict_orbit_sum(words, twist, which);
        json o;
        o["num"] = poly_to_json(orbit.num);
        o["den"] = poly_to_json(orbit.den);
        o["alternating"] = is_alternating(orbit, n);
        doc["orbit"] = std::move(o);
    }
    return dump(doc);
}

std::string groebner_doc(int n, const std::string& order, int max_degree, double timeout_sec,
                         int max_basis) {
    MomentSystem sys = MomentSystem::build(n, MomentFlavor::Borel);
    Ideal ideal(sys.polys(), MonomialOrder(order_from(order), sys.ambient_vars()));
    GroebnerCaps caps;
    if (max_degree > 0) caps.max_degree = max_degree;
    if (timeout_sec > 0) caps.timeout_sec = timeout_sec;
    if (max_basis > 0) caps.max_basis = max_basis;
    CompleteIntersectionReport ci = ideal.complete_intersection(caps);
    json doc;
    doc["n"] = n;
    doc["order"] = order;
    doc["ambient_dim"] = ci.ambient_dim;
    doc["dimension"] = ci.dimension;
    doc["codimension"] = ci.codimension;
    doc["complete_intersection"] = ci.complete_intersection;
    doc["generators"] = ci.generators;
    doc["basis_size"] = static_cast<int>(ideal.groebner(caps).size());
    return dump(doc);
}

int singular_dimension_py(int n, const std::string& order) {
    MomentSystem sys = MomentSystem::build(n, MomentFlavor::Borel);
    Ideal sing = singular_ideal(sys, order_from(order));
    return sing.dimension();
}

std::string one_param_limit_doc(int n, const std::string& label, const std::string& target) {
    OneParamSubgroup g(OneParamSubgroup::label_from_name(label), n);
    LimitTarget t;
    if (target == "r")
        t = LimitTarget::RMode;
    else if (target == "s")
        t = LimitTarget::SMode;
    else
        throw Error("target must be 'r' or 's', got '" + target + "'");
    json doc;
    doc["subgroup"] = g.name();
    doc["target"] = target;
    doc["limit"] = poly_matrix_to_json(one_param_limit(g, t));
    return dump(doc);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact kernels for the Borel moment map; all payloads are JSON strings";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const CapExceededError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("moment_system", &moment_system_doc, py::arg("n"), py::arg("flavor") = "borel",
          "Moment-map entries (gamma, nu) with their polynomials and the ambient coordinates.");
    m.def("families", &families_doc, py::arg("n"),
          "All invariant family members with polynomials and g-family certificates.");
    m.def("verify_invariants", &verify_invariants_doc, py::arg("n"), py::arg("trials") = 24,
          py::arg("seed") = 2026,
          "Randomized-exact invariance check per family member; uncertified g_J are skipped.");
    m.def("unique_lift", &unique_lift_doc, py::arg("r_diag"), py::arg("s_diag"), py::arg("i"),
          py::arg("j"),
          "The unique s with prescribed diagonal solving [diag(r), s] + ij = 0; lists are JSON "
          "arrays of 'p/q' strings.");
    m.def("sample_component", &sample_component_doc, py::arg("n"), py::arg("ell"),
          py::arg("seed") = 2026,
          "Random point of the ell-th fiber component, with moment values and membership flag.");
    m.def("semi_invariant", &semi_invariant_doc, py::arg("n"), py::arg("words"),
          py::arg("twist") = "det",
          "psi_f (det twist) or phi_g (det-inv twist) for a comma-separated word tuple.");
    m.def("check_semi_invariant", &check_semi_invariant_doc, py::arg("n"), py::arg("words"),
          py::arg("twist") = "det", py::arg("trials") = 24, py::arg("seed") = 2026,
          "Randomized-exact semi-invariance check of the det/det-inv twist law.");
    m.def("restrict", &restrict_doc, py::arg("n"), py::arg("words"), py::arg("twist") = "det",
          "Torus restriction of psi/phi: tracked value, raw alternation, determinant "
          "factorization, and the relabeling orbit sum (null when guard atoms pin a row).");
    m.def("groebner", &groebner_doc, py::arg("n"), py::arg("order") = "grevlex",
          py::arg("max_degree") = 0, py::arg("timeout_sec") = 0.0, py::arg("max_basis") = 0,
          "Groebner basis of the moment ideal with dimension and complete-intersection report; "
          "zero caps keep the defaults.");
    m.def("singular_dimension", &singular_dimension_py, py::arg("n"),
          py::arg("order") = "grevlex",
          "Dimension of the singular locus cut out by moment entries plus maximal minors.");
    m.def("one_param_limit", &one_param_limit_doc, py::arg("n"), py::arg("label"),
          py::arg("target"),
          "Limit at t -> 0 of the one-parameter subgroup action on symbolic r or s.");
}
