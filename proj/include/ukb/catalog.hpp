#pragma once

#include <string>
#include <vector>

#include "ukb/algebra.hpp"

namespace ukb {

struct CatalogEntry {
  std::string name;
  AlgebraPtr algebra;
};

// Built-in instances covering simple, multi-block, abelian, and
// multiplicity > 1 cases: M_2; M_3; M_2+M_3; C I_2 in M_2; {a + a} in M_4;
// the diagonal D_3.
std::vector<CatalogEntry> builtin_catalog(const ToleranceConfig& tol = {});

}  // namespace ukb
