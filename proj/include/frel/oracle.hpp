#ifndef FREL_ORACLE_HPP
#define FREL_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "frel/index_set.hpp"
#include "frel/system.hpp"

namespace frel::oracle {

/// Slow, independent reference implementations used to validate the
/// closed-form algorithms. Nothing here shares code with the analytical
/// paths beyond the basic compositions.
struct OracleConfig {
  double tolerance = 1e-9;   // bisection stops below this interval width
  int max_exhaustive_n = 12; // refuse exhaustive enumeration above this
};

/// Chebyshev distance by bisection on the predicate "some vector within
/// delta of b is a consistent right-hand side", which is monotone in
/// delta. Exact zero is reported when b itself is consistent.
double bisection_distance(const System& s, const OracleConfig& cfg = {});

/// Family of all nonempty consistent subsystems, found by testing every
/// subset directly. Any t-norm. Sets are emitted in ascending size, then
/// lexicographically. Throws InvalidInput when the system has more rows
/// than cfg.max_exhaustive_n.
std::vector<IndexSet> enumerate_all(const System& s, const OracleConfig& cfg = {});

/// Maximal members of enumerate_all, lexicographically sorted.
std::vector<IndexSet> maximal_of(const std::vector<IndexSet>& family);

/// Deterministic random system on a value grid. Entry t of the stream is
/// mix64(seed + (t+1) * golden) reduced mod the number of grid levels; A is
/// drawn row-major first, then b. grid_step must divide 1 evenly.
System random_system(uint64_t seed, int n, int m, TNorm kind, double grid_step);

/// The raw generator behind random_system, exposed for reproducibility
/// tests: splitmix64 finalizer over a counter stream.
uint64_t mix64(uint64_t z);

}  // namespace frel::oracle

#endif  // FREL_ORACLE_HPP
