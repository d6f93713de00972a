#include "frel/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frel/errors.hpp"

namespace frel {
namespace {

double pos(double v) { return v > 0.0 ? v : 0.0; }

}  // namespace

double sigma_godel(double x, double y, double z) {
  return std::min(pos(x - z) / 2.0, pos(y - z));
}

double goguen_phi(double u, double x, double y, double z) {
  // u + y = 0 forces u = y = 0; the pair constrains nothing beyond row i
  // itself and the kernel degenerates to x.
  if (u + y <= 0.0) return x;
  return pos(x * y - u * z) / (u + y);
}

double sigma_goguen(double u, double x, double y, double z) {
  const double lift = pos(x - u);
  const double balanced = std::min(goguen_phi(u, x, y, z), pos(y - z));
  return std::max(lift, balanced);
}

double sigma_lukasiewicz(double u, double x, double y, double z) {
  const double v = x + u - 1.0;
  return std::min(x, std::max(pos(v), pos(v + y - z) / 2.0));
}

double delta_ijk(const System& s, int i, int j, int k) {
  const double aij = s.matrix().at(i, j);
  const double akj = s.matrix().at(k, j);
  const double bi = s.rhs()[i];
  const double bk = s.rhs()[k];
  switch (s.kind()) {
    case TNorm::Min:
      return std::max(pos(bi - aij), sigma_godel(bi, akj, bk));
    case TNorm::Product:
      return sigma_goguen(aij, bi, akj, bk);
    case TNorm::Lukasiewicz:
      return sigma_lukasiewicz(1.0 - aij, bi, akj, bk);
  }
  throw InvalidInput("unknown t-norm kind");
}

ChebyshevReport chebyshev_report(const System& s, double eps, bool with_witness) {
  const int n = s.rows();
  const int m = s.cols();

  ChebyshevReport rep;
  rep.kind = s.kind();
  rep.row_defects.assign(n, 0.0);
  if (with_witness) {
    rep.witness.emplace();
    rep.witness->table.assign(n, std::vector<double>(m, 0.0));
    rep.witness->argmin_col.assign(n, 0);
    rep.witness->argmax_row.assign(n, 0);
  }

  for (int i = 0; i < n; ++i) {
    double row_defect = 2.0;  // above any admissible value
    int best_j = 0;
    int best_k = 0;
    for (int j = 0; j < m; ++j) {
      // Defect row i incurs if column j is made to carry it: the worst
      // conflict with any row k, row i itself included.
      double col_defect = 0.0;
      int worst_k = 0;
      for (int k = 0; k < n; ++k) {
        const double d = delta_ijk(s, i, j, k);
        if (d > col_defect) {
          col_defect = d;
          worst_k = k;
        }
      }
      if (with_witness) rep.witness->table[i][j] = col_defect;
      if (col_defect < row_defect) {
        row_defect = col_defect;
        best_j = j;
        best_k = worst_k;
      }
    }
    rep.row_defects[i] = row_defect;
    if (with_witness) {
      rep.witness->argmin_col[i] = best_j;
      rep.witness->argmax_row[i] = best_k;
    }
    rep.delta = std::max(rep.delta, row_defect);
    if (row_defect <= eps) rep.nc.push_back(i);
  }
  return rep;
}

std::vector<double> greatest_consistent_image(const System& s, std::span<const double> c) {
  const UnitMatrix at = s.matrix().transposed();
  const std::vector<double> e = min_residuum_compose(s.kind(), at, c);
  return max_t_compose(s.kind(), s.matrix(), e);
}

ApproxResult greatest_approximation(const System& s, double eps) {
  const ChebyshevReport rep = chebyshev_report(s, eps);

  ApproxResult out;
  out.delta = rep.delta;
  out.row_defects = rep.row_defects;

  const ShiftedBounds band = shifted_bounds(s.rhs(), rep.delta);
  out.approx = greatest_consistent_image(s, band.upper);
  out.solution = min_residuum_compose(s.kind(), s.matrix().transposed(), band.upper);

  // Cross-checks. The replacement right-hand side must be attainable and no
  // further from b than the announced distance (allowing round-off slack).
  const double slack = eps + 1e-12;
  System replaced(s.kind(), s.matrix(), out.approx);
  if (!check_consistency(replaced, eps).consistent) {
    throw InternalCheckFailure("best approximation is not a consistent right-hand side");
  }
  double dist = 0.0;
  for (int i = 0; i < s.rows(); ++i) {
    dist = std::max(dist, std::abs(out.approx[i] - s.rhs()[i]));
  }
  if (dist > rep.delta + slack) {
    throw InternalCheckFailure("best approximation lies " + std::to_string(dist) +
                               " from b, announced distance " + std::to_string(rep.delta));
  }
  return out;
}

}  // namespace frel
