#include "borel/json_io.hpp"

#include <algorithm>

#include "borel/errors.hpp"

namespace borel {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("json: " + what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

Shape shape_from_name(const std::string& s) {
    if (s == "diagonal") return Shape::Diagonal;
    if (s == "upper") return Shape::Upper;
    if (s == "lower") return Shape::LowerRep;
    if (s == "full") return Shape::Full;
    bad("unknown shape '" + s + "'");
}

} // namespace

json poly_to_json(const MultiPoly& p) {
    json vars = json::array();
    for (VarId v : p.support()) vars.push_back(v.name());
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::object();
        for (const auto& [v, e] : m.factors()) exps[v.name()] = e;
        terms.push_back(json{{"coeff", c.str()}, {"exps", exps}});
    }
    return json{{"vars", vars}, {"terms", terms}};
}

MultiPoly poly_from_json(const json& j) {
    const json& terms = field(j, "terms");
    if (!terms.is_array()) bad("'terms' must be an array");
    MultiPoly p;
    for (const json& t : terms) {
        const json& cj = field(t, "coeff");
        if (!cj.is_string()) bad("'coeff' must be a string fraction");
        Rational c = Rational::from_string(cj.get<std::string>());
        const json& ej = field(t, "exps");
        if (!ej.is_object()) bad("'exps' must be an object");
        std::vector<Monomial::Factor> fs;
        for (auto it = ej.begin(); it != ej.end(); ++it) {
            if (!it.value().is_number_unsigned() || it.value().get<uint64_t>() == 0)
                bad("exponent of '" + it.key() + "' must be a positive integer");
            fs.emplace_back(VarId::parse(it.key()), it.value().get<uint32_t>());
        }
        p += MultiPoly::term(c, Monomial::of(std::move(fs)));
    }
    return p;
}

json ratfun_to_json(const RatFun& f) {
    return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RatFun ratfun_from_json(const json& j) {
    return RatFun(poly_from_json(field(j, "num")), poly_from_json(field(j, "den")));
}

json poly_matrix_to_json(const Mat<MultiPoly>& m) {
    json rows = json::array();
    for (int a = 1; a <= m.rows(); ++a) {
        json row = json::array();
        for (int b = 1; b <= m.cols(); ++b) row.push_back(poly_to_json(m.at(a, b)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()},
                {"cols", m.cols()},
                {"shape", shape_name(m.shape())},
                {"entries", rows}};
}

Mat<MultiPoly> poly_matrix_from_json(const json& j) {
    int rows = field(j, "rows").get<int>();
    int cols = field(j, "cols").get<int>();
    Mat<MultiPoly> m(rows, cols, shape_from_name(field(j, "shape").get<std::string>()));
    const json& entries = field(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows) bad("bad entry grid");
    for (int a = 1; a <= rows; ++a) {
        const json& row = entries[a - 1];
        if (!row.is_array() || static_cast<int>(row.size()) != cols) bad("bad entry row");
        for (int b = 1; b <= cols; ++b) m.at(a, b) = poly_from_json(row[b - 1]);
    }
    return m;
}

json rat_matrix_to_json(const Mat<Rational>& m) {
    json rows = json::array();
    for (int a = 1; a <= m.rows(); ++a) {
        json row = json::array();
        for (int b = 1; b <= m.cols(); ++b) row.push_back(m.at(a, b).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat<Rational> rat_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) bad("rational grid must be a nonempty array");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    Mat<Rational> m(rows, cols);
    for (int a = 1; a <= rows; ++a) {
        const json& row = j[a - 1];
        if (!row.is_array() || static_cast<int>(row.size()) != cols) bad("ragged rational grid");
        for (int b = 1; b <= cols; ++b)
            m.at(a, b) = Rational::from_string(row[b - 1].get<std::string>());
    }
    return m;
}

json rat_list_to_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const Rational& c : v) out.push_back(c.str());
    return out;
}

std::vector<Rational> rat_list_from_json(const json& j) {
    if (!j.is_array()) bad("rational list must be an array");
    std::vector<Rational> v;
    for (const json& c : j) v.push_back(Rational::from_string(c.get<std::string>()));
    return v;
}

json assignment_to_json(const std::map<VarId, Rational>& a) {
    json out = json::object();
    for (const auto& [v, c] : a) out[v.name()] = c.str();
    return out;
}

std::map<VarId, Rational> assignment_from_json(const json& j) {
    if (!j.is_object()) bad("assignment must be an object");
    std::map<VarId, Rational> a;
    for (auto it = j.begin(); it != j.end(); ++it)
        a.emplace(VarId::parse(it.key()), Rational::from_string(it.value().get<std::string>()));
    return a;
}

} // namespace borel
