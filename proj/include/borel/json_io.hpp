#pragma once

#include <map>

#include <json.hpp>

#include "borel/matrix.hpp"
#include "borel/multipoly.hpp"
#include "borel/ratfun.hpp"

namespace borel {

using nlohmann::json;

// Polynomials: {"vars":[...], "terms":[{"coeff":"p/q","exps":{"r_1_2":1,...}}]}.
// Round-trips are bit-exact; terms appear in canonical storage order.
json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);

json ratfun_to_json(const RatFun& f);
RatFun ratfun_from_json(const json& j);

json poly_matrix_to_json(const Mat<MultiPoly>& m);
Mat<MultiPoly> poly_matrix_from_json(const json& j);

// Rational grids/lists with entries as "p/q" strings.
json rat_matrix_to_json(const Mat<Rational>& m);
Mat<Rational> rat_matrix_from_json(const json& j);
json rat_list_to_json(const std::vector<Rational>& v);
std::vector<Rational> rat_list_from_json(const json& j);

// Variable assignments: {"i_1":"2", "r_1_1":"-1/3", ...}.
json assignment_to_json(const std::map<VarId, Rational>& a);
std::map<VarId, Rational> assignment_from_json(const json& j);

} // namespace borel
