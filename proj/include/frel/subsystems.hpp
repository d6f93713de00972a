#ifndef FREL_SUBSYSTEMS_HPP
#define FREL_SUBSYSTEMS_HPP

#include <vector>

#include "frel/chebyshev.hpp"
#include "frel/index_set.hpp"
#include "frel/system.hpp"

namespace frel {

/// The subsystem keeping only the equations named by `rows` (0-based,
/// nonempty, within range). Columns are untouched.
System subsystem(const System& s, const IndexSet& rows);

/// Chebyshev distance of the subsystem, computed from the full system's
/// pairwise defects: max over i in rows of min_j max_{k in rows} delta_ijk.
/// Agrees with chebyshev_report(subsystem(s, rows)).delta.
double subsystem_distance(const System& s, const IndexSet& rows);

struct AugmentedDefect {
  int row;       // row outside nc, 0-based
  double delta;  // subsystem distance of nc plus that row; positive
};

/// Certificate that the zero-defect rows form a maximal consistent
/// subsystem: their own distance vanishes and adjoining any other row
/// makes the distance positive.
struct McsCertificate {
  IndexSet nc;
  double delta_nc = 0.0;
  std::vector<AugmentedDefect> augmented;  // ascending by row
};

/// Canonical maximal consistent subsystem: the rows whose defect delta_i
/// vanishes. Requires at least one equation to be solvable on its own
/// (b_i <= max_j a_ij), otherwise throws NoSolvableEquation.
McsCertificate canonical_mcs(const System& s, double eps = kDefaultEpsilon);

/// Defect of row `row` inside the subsystem R + {row}, for a min system
/// whose right-hand side is non-decreasing. Preconditions (checked):
/// the t-norm is min, b is non-decreasing, every member of R is below
/// `row`, and R itself is consistent. Under these the subsystem
/// R + {row} is consistent iff the returned value vanishes: adjoining a
/// larger right-hand side cannot disturb the rows already present.
double incremental_row_delta(const System& s, const IndexSet& r, int row,
                             double eps = kDefaultEpsilon);

/// All nonempty consistent subsystems of a min system, in the insertion
/// order of the stage recursion.
struct ConsistentFamily {
  /// Members in original row indices. Ordered by the stage that created
  /// them; within a stage, lexicographically.
  std::vector<IndexSet> sets;
  /// stage[t] is the 1-based stage at which sets[t] appeared. Stage p
  /// handles the p-th kept row in right-hand-side order.
  std::vector<int> stage;
  /// permutation[p] = original index of the row handled at stage p+1.
  /// Rows are ordered by ascending b, ties by original index; excluded
  /// rows are skipped.
  std::vector<int> permutation;
  /// Rows that are inconsistent on their own (b_i exceeds every a_ij).
  /// They belong to no consistent subsystem. Ascending.
  std::vector<int> excluded;
};

/// Enumerates every consistent subsystem of a min system by processing
/// equations in ascending right-hand-side order: each stage adds the new
/// singleton plus every previous member that tolerates the new row.
/// Throws UnsupportedTNorm for product or Lukasiewicz systems, whose
/// consistent families do not admit this recursion.
ConsistentFamily enumerate_consistent_maxmin(const System& s, double eps = kDefaultEpsilon);

/// Maximal consistent subsystems of a min system, lexicographically
/// sorted. Computed from the full family and verified against a direct
/// augmentation test; disagreement throws InternalCheckFailure.
std::vector<IndexSet> maximal_consistent_maxmin(const System& s, double eps = kDefaultEpsilon);

}  // namespace frel

#endif  // FREL_SUBSYSTEMS_HPP
