#pragma once

// Small instances of every named family, shared by the unit and acceptance
// suites.

#include <vector>

#include "acfu/hash_family.hpp"

namespace testing {

inline std::vector<acfu::FamilyDescriptor> small_builtins() {
  using namespace acfu;
  return {
      AffineSpec{2, 2},
      AffineSpec{3, 2},
      AffineSpec{2, 3},
      AffineSpec{4, 2},
      DualAffineSpec{2, 2},
      DualAffineSpec{3, 2},
      HyperplaneSpec{2, 2},
      HyperplaneSpec{3, 2},
      HyperplaneSpec{2, 3},
      TransversalSpec{2, {0, 1}, false},
      TransversalSpec{3, {0, 1, 2}, false},
      TransversalSpec{3, {0, 2}, false},
      TransversalSpec{3, {0, 1, 2}, true},
      TransversalSpec{4, {0, 1, 2, 3}, false},
      ToeplitzSpec{2, 1, 2},
      ToeplitzSpec{2, 2, 3},
      ToeplitzSpec{3, 1, 2},
      FieldMultiplySpec{2, 3, 1, true},
      FieldMultiplySpec{2, 3, 1, false},
      FieldMultiplySpec{2, 3, 2, true},
      FieldMultiplySpec{3, 2, 1, true},
  };
}

}  // namespace testing
