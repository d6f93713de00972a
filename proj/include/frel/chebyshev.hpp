#ifndef FREL_CHEBYSHEV_HPP
#define FREL_CHEBYSHEV_HPP

#include <optional>
#include <span>
#include <vector>

#include "frel/system.hpp"

namespace frel {

// Scalar kernels behind the per-equation defect. Each one measures how far
// a single pair of equations forces the right-hand side to move before a
// common solution component can exist. Arguments are unit-interval scalars.

/// Kernel for the min t-norm: min((x - z)^+ / 2, (y - z)^+).
double sigma_godel(double x, double y, double z);

/// Auxiliary ratio for the product t-norm: (x*y - u*z)^+ / (u + y) when
/// u + y > 0, and x when u = y = 0.
double goguen_phi(double u, double x, double y, double z);

/// Kernel for the product t-norm:
/// max((x - u)^+, min(phi(u,x,y,z), (y - z)^+)).
double sigma_goguen(double u, double x, double y, double z);

/// Kernel for the Lukasiewicz t-norm, with v = x + u - 1:
/// min(x, max(v^+, (v + y - z)^+ / 2)).
double sigma_lukasiewicz(double u, double x, double y, double z);

/// delta_ijk: contribution of column j and opposing row k to the defect of
/// row i, specialised to the system's t-norm. Indices are 0-based.
double delta_ijk(const System& s, int i, int j, int k);

struct ChebyshevWitness {
  // table[i][j] = max_k delta_ijk, the defect row i incurs through column j.
  std::vector<std::vector<double>> table;
  // Smallest column attaining the row defect, and for that column the
  // smallest row index attaining the inner maximum. 0-based.
  std::vector<int> argmin_col;
  std::vector<int> argmax_row;
};

struct ChebyshevReport {
  TNorm kind;
  double delta = 0.0;                // max_i row_defects[i]
  std::vector<double> row_defects;   // delta_i = min_j max_k delta_ijk
  std::vector<int> nc;               // rows with delta_i <= eps, ascending
  std::optional<ChebyshevWitness> witness;
};

/// Chebyshev distance from b to the set of right-hand sides that make the
/// system consistent, computed in closed form, together with the defect of
/// every equation. O(n^2 m) time.
ChebyshevReport chebyshev_report(const System& s, double eps = kDefaultEpsilon,
                                 bool with_witness = false);

/// F(c): image of the greatest potential solution for right-hand side c.
/// This is the greatest consistent right-hand side below c.
std::vector<double> greatest_consistent_image(const System& s, std::span<const double> c);

struct ApproxResult {
  double delta = 0.0;                 // Chebyshev distance of b
  std::vector<double> approx;         // F(b + delta), the greatest best approximation
  std::vector<double> solution;       // greatest solution of A x = approx
  std::vector<double> row_defects;    // per-equation defects of the original b
};

/// Greatest Chebyshev-best approximation of the right-hand side: replaces b
/// by the largest consistent vector within distance delta of it. The result
/// is checked to be consistent and at the announced distance; a failed check
/// throws InternalCheckFailure.
ApproxResult greatest_approximation(const System& s, double eps = kDefaultEpsilon);

}  // namespace frel

#endif  // FREL_CHEBYSHEV_HPP
