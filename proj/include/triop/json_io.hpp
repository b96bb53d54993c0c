#pragma once

#include <string>

#include <json.hpp>

#include "triop/cybe.hpp"
#include "triop/ooperator.hpp"
#include "triop/prelie.hpp"
#include "triop/trialgebra.hpp"

namespace triop {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Document schemas (1-based indices, omitted entries zero):
//   algebra:  { "dim": n, "basis": [names], "d": 3,
//               "brackets": [ {"i":1,"j":2,"k":3,"coeffs":["expr",...]} ] }
//   operator: { "dim": 3, "entries": [["expr",...],...],
//               "sideConditions": ["a13", "a33 - 1"] }
//   pre-Lie:  { "dim": n, "basis": [names], "d": 3,
//               "products": [ {"i":..,"j":..,"k":..,"coeffs":[...]} ] }  (i<j, k free)
//   tensor:   { "dim": 6, "coeffs": [["expr",...],...] }
// A document "d" that disagrees with the session's field parameter is an
// input error.

TriAlgebra algebra_from_json(const nlohmann::json& doc);
nlohmann::json algebra_to_json(const TriAlgebra& A);

ParamOperator operator_from_json(const nlohmann::json& doc);
nlohmann::json operator_to_json(const ParamOperator& T);

PreLieAlgebra prelie_from_json(const nlohmann::json& doc);
nlohmann::json prelie_to_json(const PreLieAlgebra& P);

TwoTensor tensor_from_json(const nlohmann::json& doc);
nlohmann::json tensor_to_json(const TwoTensor& r);

// 3x3 scalar matrix for classify: accepts an operator document whose entries
// are constant expressions, or { "entries": [["1","0",...],...] }.
std::vector<std::vector<Scalar>> scalar_matrix_from_json(const nlohmann::json& doc);

nlohmann::json load_json_file(const std::string& path);

}  // namespace triop
