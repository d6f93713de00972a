#ifndef FREL_SYSTEM_HPP
#define FREL_SYSTEM_HPP

#include <span>
#include <vector>

#include "frel/algebra.hpp"

namespace frel {

/// Dense row-major matrix with entries in [0,1].
/// Validates on construction; entries outside the unit interval are
/// rejected, not clamped.
class UnitMatrix {
public:
  UnitMatrix(int rows, int cols, std::vector<double> entries);

  static UnitMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  std::span<const double> row(int i) const {
    return {entries_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)};
  }

  UnitMatrix transposed() const;

  const std::vector<double>& entries() const { return entries_; }

private:
  int rows_;
  int cols_;
  std::vector<double> entries_;  // row-major, rows_*cols_ values
};

/// A system of relational equations  A x = b  interpreted under the
/// max-T composition, together with the t-norm that gives it meaning.
/// Invariant: A is n x m, b has n entries, everything lies in [0,1].
class System {
public:
  System(TNorm kind, UnitMatrix a, std::vector<double> b);

  TNorm kind() const { return kind_; }
  const UnitMatrix& matrix() const { return a_; }
  const std::vector<double>& rhs() const { return b_; }
  int rows() const { return a_.rows(); }
  int cols() const { return a_.cols(); }

private:
  TNorm kind_;
  UnitMatrix a_;
  std::vector<double> b_;
};

/// y_i = max_j T(a_ij, x_j).  The image of x under the system's matrix.
std::vector<double> max_t_compose(TNorm kind, const UnitMatrix& a, std::span<const double> x);

/// y_j = min_i I(a_ij, x_i) where I is the residuum. Applied to A^t this
/// yields the greatest candidate solution of A x = b.
std::vector<double> min_residuum_compose(TNorm kind, const UnitMatrix& a, std::span<const double> x);

/// Greatest potential solution e(A, b) = A^t applied to b through the
/// min-residuum composition. The system is consistent iff e reproduces b.
std::vector<double> greatest_potential_solution(const System& s);

struct ConsistencyCheck {
  bool consistent;
  std::vector<double> greatest;  // e(A, b)
  std::vector<double> image;     // A applied to e
};

/// Decides consistency by composing the greatest potential solution back
/// through the system and comparing with b to within eps.
ConsistencyCheck check_consistency(const System& s, double eps = kDefaultEpsilon);

struct ShiftedBounds {
  std::vector<double> lower;  // (b_i - delta)^+
  std::vector<double> upper;  // min(b_i + delta, 1)
};

/// The band of admissible right-hand sides at Chebyshev radius delta.
ShiftedBounds shifted_bounds(std::span<const double> b, double delta);

}  // namespace frel

#endif  // FREL_SYSTEM_HPP
