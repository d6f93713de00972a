#include "frel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frel/errors.hpp"

namespace frel::oracle {
namespace {

/// Greatest consistent right-hand side below c, from first principles.
std::vector<double> image_of_greatest(const System& s, const std::vector<double>& c) {
  const UnitMatrix at = s.matrix().transposed();
  return max_t_compose(s.kind(), s.matrix(), min_residuum_compose(s.kind(), at, c));
}

/// True when some right-hand side within delta of b is attainable: the
/// greatest attainable vector below the band's ceiling must reach its floor.
bool band_reachable(const System& s, double delta) {
  const ShiftedBounds band = shifted_bounds(s.rhs(), delta);
  const std::vector<double> reached = image_of_greatest(s, band.upper);
  for (size_t i = 0; i < reached.size(); ++i) {
    if (reached[i] < band.lower[i]) return false;
  }
  return true;
}

}  // namespace

double bisection_distance(const System& s, const OracleConfig& cfg) {
  if (band_reachable(s, 0.0)) return 0.0;
  double lo = 0.0;  // unreachable
  double hi = 1.0;  // always reachable: the floor collapses to zero
  for (int iter = 0; iter < 60 && hi - lo > cfg.tolerance; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (band_reachable(s, mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<IndexSet> enumerate_all(const System& s, const OracleConfig& cfg) {
  const int n = s.rows();
  if (n > 20) throw InvalidInput("exhaustive enumeration is capped at 20 rows");
  if (n > cfg.max_exhaustive_n) {
    throw InvalidInput("exhaustive enumeration over " + std::to_string(n) +
                       " rows exceeds the configured cap of " +
                       std::to_string(cfg.max_exhaustive_n));
  }

  std::vector<IndexSet> family;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> rows;
    std::vector<double> entries;
    std::vector<double> b;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      rows.push_back(i);
      const auto row = s.matrix().row(i);
      entries.insert(entries.end(), row.begin(), row.end());
      b.push_back(s.rhs()[i]);
    }
    const System sub(s.kind(), UnitMatrix(static_cast<int>(rows.size()), s.cols(),
                                          std::move(entries)),
                     std::move(b));
    if (check_consistency(sub, cfg.tolerance).consistent) {
      family.emplace_back(std::move(rows));
    }
  }
  std::sort(family.begin(), family.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return family;
}

std::vector<IndexSet> maximal_of(const std::vector<IndexSet>& family) {
  std::vector<IndexSet> maximal;
  for (const IndexSet& a : family) {
    bool dominated = false;
    for (const IndexSet& b : family) {
      if (a.size() < b.size() && a.is_subset_of(b)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(a);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

System random_system(uint64_t seed, int n, int m, TNorm kind, double grid_step) {
  if (n <= 0 || m <= 0) throw InvalidInput("system dimensions must be positive");
  if (!(grid_step > 0.0 && grid_step <= 1.0)) {
    throw InvalidInput("grid step must lie in (0, 1]");
  }
  const double levels_real = 1.0 / grid_step;
  const auto denom = static_cast<uint64_t>(std::llround(levels_real));
  if (std::abs(levels_real - static_cast<double>(denom)) > 1e-9) {
    throw InvalidInput("grid step must divide 1 evenly");
  }
  const uint64_t levels = denom + 1;  // k/denom for k = 0..denom

  constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ull;
  const auto draw = [&](uint64_t t) {
    const uint64_t k = mix64(seed + (t + 1) * kGolden) % levels;
    return static_cast<double>(k) / static_cast<double>(denom);
  };

  std::vector<double> entries(static_cast<size_t>(n) * m);
  for (size_t t = 0; t < entries.size(); ++t) entries[t] = draw(t);
  std::vector<double> b(n);
  for (int i = 0; i < n; ++i) b[i] = draw(static_cast<uint64_t>(n) * m + i);

  return System(kind, UnitMatrix(n, m, std::move(entries)), std::move(b));
}

}  // namespace frel::oracle
