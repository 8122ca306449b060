#include "ukb/json_io.hpp"

#include <fstream>

namespace ukb {

Json complex_to_json(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) {
    return Complex(j.get<double>(), 0.0);
  }
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw InputError("complex numbers must be [re, im]");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(complex_to_json(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw InputError("matrix must be a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) {
    throw InputError("matrix rows must be non-empty arrays");
  }
  const std::size_t cols = j[0].size();
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw InputError("matrix has ragged rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_from_json(j[r][c]);
    }
  }
  check_finite(m);
  return m;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    out.push_back(complex_to_json(v(k)));
  }
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw InputError("vector must be a non-empty array");
  }
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    v(static_cast<Eigen::Index>(k)) = complex_from_json(j[k]);
  }
  return v;
}

AlgebraPtr algebra_from_json(const Json& j, const ToleranceConfig& tol) {
  if (!j.is_object() || !j.contains("ambient_dim") ||
      !j.contains("generators")) {
    throw InputError("algebra spec needs ambient_dim and generators");
  }
  if (!j["ambient_dim"].is_number_integer()) {
    throw InputError("ambient_dim must be an integer");
  }
  const Eigen::Index n = j["ambient_dim"].get<Eigen::Index>();
  if (n < 1) {
    throw InputError("ambient_dim must be positive");
  }
  if (!j["generators"].is_array() || j["generators"].empty()) {
    throw InputError("generators must be a non-empty array of matrices");
  }
  std::vector<Matrix> gens;
  for (const Json& g : j["generators"]) {
    Matrix m = matrix_from_json(g);
    if (m.rows() != n || m.cols() != n) {
      throw InputError("generator dimensions differ from ambient_dim");
    }
    gens.push_back(std::move(m));
  }
  try {
    return generate_algebra(n, gens, tol);
  } catch (const AmbientTooLarge&) {
    throw;
  }
}

State state_from_json(const AlgebraPtr& algebra, const Json& j) {
  if (j.is_object() && j.contains("values")) {
    return make_state(algebra, vector_from_json(j["values"]));
  }
  if (j.is_object() && j.contains("ray")) {
    const Json& r = j["ray"];
    if (!r.is_object() || !r.contains("fiber") || !r.contains("vector")) {
      throw InputError("ray spec needs fiber and vector");
    }
    ProjectivePoint pt;
    pt.fiber = r["fiber"].get<int>();
    pt.ray = gauge_fix(vector_from_json(r["vector"]).normalized());
    return state_from_ray(algebra, pt);
  }
  throw InputError("state spec needs either values or ray");
}

Json state_to_json(const State& s) {
  Json j;
  j["values"] = vector_to_json(s.values);
  j["is_pure"] = s.is_pure;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open input file: " + path);
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot open output file: " + path);
  }
  out << j.dump(2) << "\n";
}

}  // namespace ukb
