#include "ukb/catalog.hpp"

namespace ukb {

namespace {

Matrix unit_matrix(Eigen::Index n, Eigen::Index r, Eigen::Index c) {
  Matrix m = Matrix::Zero(n, n);
  m(r, c) = 1.0;
  return m;
}

std::vector<Matrix> full_units(Eigen::Index ambient, Eigen::Index lo,
                               Eigen::Index hi) {
  std::vector<Matrix> out;
  for (Eigen::Index r = lo; r < hi; ++r) {
    for (Eigen::Index c = lo; c < hi; ++c) {
      out.push_back(unit_matrix(ambient, r, c));
    }
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> builtin_catalog(const ToleranceConfig& tol) {
  std::vector<CatalogEntry> catalog;

  catalog.push_back({"m2", generate_algebra(2, full_units(2, 0, 2), tol)});
  catalog.push_back({"m3", generate_algebra(3, full_units(3, 0, 3), tol)});

  std::vector<Matrix> two_blocks = full_units(5, 0, 2);
  for (Matrix& m : full_units(5, 2, 5)) {
    two_blocks.push_back(std::move(m));
  }
  catalog.push_back({"m2_plus_m3", generate_algebra(5, two_blocks, tol)});

  catalog.push_back(
      {"scalars_in_m2",
       generate_algebra(2, {Matrix::Identity(2, 2)}, tol)});

  // doubled copy of M_2: a -> a + a inside M_4
  std::vector<Matrix> doubled;
  for (Eigen::Index r = 0; r < 2; ++r) {
    for (Eigen::Index c = 0; c < 2; ++c) {
      Matrix m = Matrix::Zero(4, 4);
      m(r, c) = 1.0;
      m(r + 2, c + 2) = 1.0;
      doubled.push_back(std::move(m));
    }
  }
  catalog.push_back({"doubled_m2", generate_algebra(4, doubled, tol)});

  catalog.push_back(
      {"diagonal_d3",
       generate_algebra(3, {unit_matrix(3, 0, 0), unit_matrix(3, 1, 1),
                            unit_matrix(3, 2, 2)},
                        tol)});
  return catalog;
}

}  // namespace ukb
