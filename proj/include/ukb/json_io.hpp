#pragma once

#include <string>

#include "json.hpp"
#include "ukb/states.hpp"

namespace ukb {

using Json = nlohmann::json;

// Complex numbers as [re, im]; matrices as row-major nested arrays.
Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

// { "ambient_dim": N, "generators": [matrix, ...] }
AlgebraPtr algebra_from_json(const Json& j, const ToleranceConfig& tol = {});

// { "values": [...] } or { "ray": { "fiber": i, "vector": [...] } }
State state_from_json(const AlgebraPtr& algebra, const Json& j);
Json state_to_json(const State& s);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace ukb
