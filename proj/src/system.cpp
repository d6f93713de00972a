#include "frel/system.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frel/errors.hpp"

namespace frel {
namespace {

bool in_unit(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

void require_unit(double v, const std::string& where) {
  if (!in_unit(v)) {
    throw InvalidInput(where + " = " + std::to_string(v) + " is outside [0, 1]");
  }
}

}  // namespace

UnitMatrix::UnitMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ <= 0 || cols_ <= 0) throw InvalidInput("matrix dimensions must be positive");
  if (entries_.size() != static_cast<size_t>(rows_) * cols_) {
    throw InvalidInput("matrix entry count does not match dimensions");
  }
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      require_unit(at(i, j), "A[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
    }
  }
}

UnitMatrix UnitMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw InvalidInput("matrix has no rows");
  const size_t cols = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw InvalidInput("row " + std::to_string(i + 1) + " of A has " +
                         std::to_string(rows[i].size()) + " entries, expected " +
                         std::to_string(cols));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return UnitMatrix(static_cast<int>(rows.size()), static_cast<int>(cols), std::move(flat));
}

UnitMatrix UnitMatrix::transposed() const {
  std::vector<double> flat(entries_.size());
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      flat[static_cast<size_t>(j) * rows_ + i] = at(i, j);
    }
  }
  return UnitMatrix(cols_, rows_, std::move(flat));
}

System::System(TNorm kind, UnitMatrix a, std::vector<double> b)
    : kind_(kind), a_(std::move(a)), b_(std::move(b)) {
  if (b_.size() != static_cast<size_t>(a_.rows())) {
    throw InvalidInput("b has " + std::to_string(b_.size()) + " entries, expected " +
                       std::to_string(a_.rows()));
  }
  for (size_t i = 0; i < b_.size(); ++i) {
    require_unit(b_[i], "b[" + std::to_string(i + 1) + "]");
  }
}

std::vector<double> max_t_compose(TNorm kind, const UnitMatrix& a, std::span<const double> x) {
  if (x.size() != static_cast<size_t>(a.cols())) {
    throw InvalidInput("vector length does not match matrix columns");
  }
  std::vector<double> y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    double best = 0.0;
    for (int j = 0; j < a.cols(); ++j) {
      best = std::max(best, t_norm(kind, a.at(i, j), x[j]));
    }
    y[i] = best;
  }
  return y;
}

std::vector<double> min_residuum_compose(TNorm kind, const UnitMatrix& a, std::span<const double> x) {
  if (x.size() != static_cast<size_t>(a.cols())) {
    throw InvalidInput("vector length does not match matrix columns");
  }
  std::vector<double> y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    double worst = 1.0;
    for (int j = 0; j < a.cols(); ++j) {
      worst = std::min(worst, residuum(kind, a.at(i, j), x[j]));
    }
    y[i] = worst;
  }
  return y;
}

std::vector<double> greatest_potential_solution(const System& s) {
  return min_residuum_compose(s.kind(), s.matrix().transposed(), s.rhs());
}

ConsistencyCheck check_consistency(const System& s, double eps) {
  ConsistencyCheck r;
  r.greatest = greatest_potential_solution(s);
  r.image = max_t_compose(s.kind(), s.matrix(), r.greatest);
  r.consistent = true;
  for (int i = 0; i < s.rows(); ++i) {
    if (std::abs(r.image[i] - s.rhs()[i]) > eps) {
      r.consistent = false;
      break;
    }
  }
  return r;
}

ShiftedBounds shifted_bounds(std::span<const double> b, double delta) {
  if (!(delta >= 0.0)) throw InvalidInput("delta must be nonnegative");
  ShiftedBounds out;
  out.lower.reserve(b.size());
  out.upper.reserve(b.size());
  for (double v : b) {
    out.lower.push_back(std::max(v - delta, 0.0));
    out.upper.push_back(std::min(v + delta, 1.0));
  }
  return out;
}

}  // namespace frel
