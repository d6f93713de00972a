#include "frel/subsystems.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

#include "frel/errors.hpp"

namespace frel {
namespace {

void require_rows_in_range(const System& s, const IndexSet& rows) {
  if (rows.empty()) throw InvalidInput("subsystem needs at least one row");
  if (rows.rows().back() >= s.rows()) {
    throw InvalidInput("row index " + std::to_string(rows.rows().back() + 1) +
                       " exceeds system size " + std::to_string(s.rows()));
  }
}

/// (b_i - max_j a_ij)^+, the defect of equation i taken alone.
double singleton_defect(const System& s, int i) {
  double amax = 0.0;
  for (int j = 0; j < s.cols(); ++j) amax = std::max(amax, s.matrix().at(i, j));
  return std::max(s.rhs()[i] - amax, 0.0);
}

}  // namespace

System subsystem(const System& s, const IndexSet& rows) {
  require_rows_in_range(s, rows);
  std::vector<double> entries;
  entries.reserve(static_cast<size_t>(rows.size()) * s.cols());
  std::vector<double> b;
  b.reserve(rows.size());
  for (int i : rows) {
    const auto row = s.matrix().row(i);
    entries.insert(entries.end(), row.begin(), row.end());
    b.push_back(s.rhs()[i]);
  }
  return System(s.kind(), UnitMatrix(rows.size(), s.cols(), std::move(entries)), std::move(b));
}

double subsystem_distance(const System& s, const IndexSet& rows) {
  require_rows_in_range(s, rows);
  double dist = 0.0;
  for (int i : rows) {
    double row_defect = 2.0;
    for (int j = 0; j < s.cols(); ++j) {
      double col_defect = 0.0;
      for (int k : rows) {
        col_defect = std::max(col_defect, delta_ijk(s, i, j, k));
      }
      row_defect = std::min(row_defect, col_defect);
    }
    dist = std::max(dist, row_defect);
  }
  return dist;
}

McsCertificate canonical_mcs(const System& s, double eps) {
  bool any_solvable = false;
  for (int i = 0; i < s.rows() && !any_solvable; ++i) {
    any_solvable = singleton_defect(s, i) <= eps;
  }
  if (!any_solvable) {
    throw NoSolvableEquation(
        "no equation is solvable on its own; every right-hand side exceeds its row of A");
  }

  const ChebyshevReport rep = chebyshev_report(s, eps);
  if (rep.nc.empty()) {
    throw InternalCheckFailure("a solvable equation exists but no row has zero defect");
  }

  McsCertificate cert;
  cert.nc = IndexSet(rep.nc);
  cert.delta_nc = subsystem_distance(s, cert.nc);
  for (int i = 0; i < s.rows(); ++i) {
    if (cert.nc.contains(i)) continue;
    cert.augmented.push_back({i, subsystem_distance(s, cert.nc.with(i))});
  }
  return cert;
}

double incremental_row_delta(const System& s, const IndexSet& r, int row, double eps) {
  if (s.kind() != TNorm::Min) {
    throw UnsupportedTNorm("incremental row defects are only valid for min systems");
  }
  if (!std::is_sorted(s.rhs().begin(), s.rhs().end())) {
    throw InvalidInput("incremental row defects need a non-decreasing right-hand side");
  }
  if (row < 0 || row >= s.rows()) {
    throw InvalidInput("row index " + std::to_string(row + 1) + " out of range");
  }
  if (!r.empty()) {
    if (r.rows().back() >= row) {
      throw InvalidInput("every row of the base set must precede the adjoined row");
    }
    if (subsystem_distance(s, r) > eps) {
      throw InvalidInput("base set is not consistent");
    }
  }

  // Defect of the adjoined row inside the extended subsystem. The rows of
  // the base set cannot lose consistency: their right-hand sides are below
  // the new one, so only the new row's defect needs computing.
  double row_defect = 2.0;
  for (int j = 0; j < s.cols(); ++j) {
    double col_defect = delta_ijk(s, row, j, row);
    for (int k : r) {
      col_defect = std::max(col_defect, delta_ijk(s, row, j, k));
    }
    row_defect = std::min(row_defect, col_defect);
  }
  return row_defect;
}

ConsistentFamily enumerate_consistent_maxmin(const System& s, double eps) {
  if (s.kind() != TNorm::Min) {
    throw UnsupportedTNorm("subsystem enumeration is only valid for min systems");
  }

  const int n = s.rows();
  const int m = s.cols();

  // Process equations by ascending right-hand side, ties by original index.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return s.rhs()[a] < s.rhs()[b]; });

  ConsistentFamily fam;
  std::vector<int> kept;  // original indices, in processing order
  for (int i : order) {
    if (singleton_defect(s, i) > eps) {
      fam.excluded.push_back(i);
    } else {
      kept.push_back(i);
    }
  }
  std::sort(fam.excluded.begin(), fam.excluded.end());
  fam.permutation = kept;

  const int stages = static_cast<int>(kept.size());
  // Members in positional coordinates (indices into kept), kept parallel to
  // fam.sets so later stages can extend earlier members cheaply.
  std::vector<std::vector<int>> members_pos;

  for (int p = 0; p < stages; ++p) {
    // defect[j][q]: conflict the new row suffers through column j against
    // the row at position q. Row q = p covers the singleton case.
    std::vector<std::vector<double>> defect(m, std::vector<double>(p + 1));
    for (int j = 0; j < m; ++j) {
      for (int q = 0; q <= p; ++q) {
        defect[j][q] = delta_ijk(s, kept[p], j, kept[q]);
      }
    }

    std::vector<std::vector<int>> fresh;
    fresh.push_back({p});  // kept rows are solvable alone
    const size_t known = members_pos.size();
    for (size_t t = 0; t < known; ++t) {
      const std::vector<int>& base = members_pos[t];
      double row_defect = 2.0;
      for (int j = 0; j < m && row_defect > eps; ++j) {
        double col_defect = defect[j][p];
        for (int q : base) {
          col_defect = std::max(col_defect, defect[j][q]);
        }
        row_defect = std::min(row_defect, col_defect);
      }
      if (row_defect <= eps) {
        std::vector<int> extended = base;
        extended.push_back(p);
        fresh.push_back(std::move(extended));
      }
    }

    // Deterministic order: within the stage, sort by the sets' original
    // row indices.
    std::vector<std::pair<IndexSet, std::vector<int>>> labelled;
    labelled.reserve(fresh.size());
    for (std::vector<int>& pos : fresh) {
      std::vector<int> original;
      original.reserve(pos.size());
      for (int q : pos) original.push_back(kept[q]);
      labelled.emplace_back(IndexSet(std::move(original)), std::move(pos));
    }
    std::sort(labelled.begin(), labelled.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [set, pos] : labelled) {
      fam.sets.push_back(std::move(set));
      fam.stage.push_back(p + 1);
      members_pos.push_back(std::move(pos));
    }
  }
  return fam;
}

std::vector<IndexSet> maximal_consistent_maxmin(const System& s, double eps) {
  const ConsistentFamily fam = enumerate_consistent_maxmin(s, eps);
  if (fam.sets.empty()) return {};

  std::unordered_set<IndexSet, IndexSetHash> family(fam.sets.begin(), fam.sets.end());
  const std::vector<int>& kept = fam.permutation;

  // The recursion orders rows by right-hand side; rebuild that sorted view
  // once so the incremental defect check below sees a sorted system.
  std::vector<int> order(s.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return s.rhs()[a] < s.rhs()[b]; });
  std::vector<int> sorted_pos(s.rows());
  for (int p = 0; p < s.rows(); ++p) sorted_pos[order[p]] = p;

  std::vector<double> entries;
  entries.reserve(s.matrix().entries().size());
  std::vector<double> b;
  b.reserve(s.rows());
  for (int i : order) {
    const auto row = s.matrix().row(i);
    entries.insert(entries.end(), row.begin(), row.end());
    b.push_back(s.rhs()[i]);
  }
  const System sorted_sys(s.kind(), UnitMatrix(s.rows(), s.cols(), std::move(entries)),
                          std::move(b));

  std::vector<IndexSet> maximal;
  for (const IndexSet& set : fam.sets) {
    bool max_by_family = true;    // no one-row extension is in the family
    bool max_by_distance = true;  // every one-row extension has positive defect
    for (int row : kept) {
      if (set.contains(row)) continue;
      if (family.contains(set.with(row))) max_by_family = false;

      std::vector<int> pos;
      pos.reserve(set.size());
      int highest = sorted_pos[row];
      for (int i : set) {
        pos.push_back(sorted_pos[i]);
        highest = std::max(highest, sorted_pos[i]);
      }
      const IndexSet sorted_set{std::vector<int>(pos)};
      bool extension_consistent;
      if (sorted_pos[row] == highest) {
        extension_consistent =
            incremental_row_delta(sorted_sys, sorted_set, sorted_pos[row], eps) <= eps;
      } else {
        extension_consistent = subsystem_distance(sorted_sys, sorted_set.with(sorted_pos[row])) <= eps;
      }
      if (extension_consistent) max_by_distance = false;
      if (!max_by_family && !max_by_distance) break;
    }
    if (max_by_family != max_by_distance) {
      throw InternalCheckFailure("family membership and defect tests disagree on maximality");
    }
    if (max_by_family) maximal.push_back(set);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

}  // namespace frel
