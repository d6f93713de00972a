#ifndef FREL_TEST_SUPPORT_HPP
#define FREL_TEST_SUPPORT_HPP

#include <cmath>
#include <vector>

#include "frel/system.hpp"

namespace frel::testing {

/// 4x4 system that is consistent under min and slightly off under product
/// and Lukasiewicz; the second equation carries the whole defect.
inline System dense4x4(TNorm kind) {
  return System(kind,
                UnitMatrix::from_rows({{1.0, 0.4, 0.5, 0.7},
                                       {0.7, 0.5, 0.3, 0.5},
                                       {0.2, 1.0, 1.0, 0.6},
                                       {0.4, 0.5, 0.5, 0.8}}),
                {0.8, 0.7, 0.4, 0.4});
}

/// 4x3 min system with an ascending right-hand side; its consistent
/// subsystems split into two maximal camps.
inline System stair4x3() {
  return System(TNorm::Min,
                UnitMatrix::from_rows({{0.98, 0.02, 0.10},
                                       {0.80, 0.31, 0.18},
                                       {0.78, 0.38, 0.26},
                                       {0.77, 0.20, 0.85}}),
                {0.13, 0.28, 0.54, 0.70});
}

inline bool close_all(const std::vector<double>& got, const std::vector<double>& want,
                      double tol) {
  if (got.size() != want.size()) return false;
  for (size_t i = 0; i < got.size(); ++i) {
    if (std::abs(got[i] - want[i]) > tol) return false;
  }
  return true;
}

}  // namespace frel::testing

#endif  // FREL_TEST_SUPPORT_HPP
