// Acceptance gate: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any line
// fails. Details for failed sub-checks are printed beneath the line.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <unordered_set>
#include <vector>

#include "frel/chebyshev.hpp"
#include "frel/errors.hpp"
#include "frel/io.hpp"
#include "frel/oracle.hpp"
#include "frel/subsystems.hpp"
#include "frel/system.hpp"
#include "test_support.hpp"

using namespace frel;

namespace {

int g_failures = 0;
std::vector<std::string> g_details;

void detail(const std::string& line) {
  // Keep the report readable when a property fails systematically.
  if (g_details.size() == 25) {
    g_details.push_back("(further detail lines suppressed)");
  }
  if (g_details.size() < 25) g_details.push_back(line);
}

void criterion(int id, const std::string& label, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, label.c_str());
  for (const std::string& line : g_details) std::printf("    %s\n", line.c_str());
  g_details.clear();
  if (!ok) ++g_failures;
}

bool expect(bool ok, const std::string& what) {
  if (!ok) detail("failed: " + what);
  return ok;
}

bool near(double got, double want, double tol, const std::string& what) {
  const bool ok = std::abs(got - want) <= tol;
  if (!ok) {
    detail("failed: " + what + " (got " + format_number(got) + ", want " + format_number(want) +
           " within " + format_number(tol) + ", off by " + format_number(std::abs(got - want)) +
           ")");
  }
  return ok;
}

std::vector<IndexSet> sorted(std::vector<IndexSet> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

std::string set_text(const IndexSet& s) {
  std::string t = "{";
  for (size_t i = 0; i < s.rows().size(); ++i) {
    if (i) t += ",";
    t += std::to_string(s.rows()[i] + 1);
  }
  return t + "}";
}

// Sizes are drawn from the same counter stream as the system entries,
// offset so they do not collide with them.
int size_draw(uint64_t seed, uint64_t slot, int cap) {
  return 1 + static_cast<int>(oracle::mix64(0x5151515151515151ull + seed * 2654435761ull + slot) %
                              static_cast<uint64_t>(cap));
}

void criterion1() {
  const System s = testing::dense4x4(TNorm::Min);
  const ConsistencyCheck r = check_consistency(s, 1e-9);
  const ChebyshevReport rep = chebyshev_report(s, 1e-9);
  bool ok = true;
  ok &= expect(r.consistent, "system consistent under min");
  const std::vector<double> want_e = {0.8, 0.4, 0.4, 0.4};
  for (int j = 0; j < 4; ++j) {
    ok &= near(r.greatest[j], want_e[j], 1e-9, "greatest[" + std::to_string(j + 1) + "]");
  }
  ok &= near(rep.delta, 0.0, 1e-9, "distance");
  ok &= expect(rep.nc == std::vector<int>{0, 1, 2, 3}, "zero-defect rows = {1,2,3,4}");
  criterion(1, "min variant solves exactly (e, distance 0, all rows kept)", ok);
}

void criterion2() {
  const System s = testing::dense4x4(TNorm::Product);
  const ChebyshevReport rep = chebyshev_report(s, 1e-9);
  bool ok = true;

  // The bisection oracle pins the distance before the closed form is
  // trusted: both must sit on 0.14/1.7.
  const double bisected = oracle::bisection_distance(s);
  ok &= near(bisected, 0.14 / 1.7, 1e-9, "bisected distance = 0.14/1.7");
  ok &= near(rep.delta, 0.14 / 1.7, 1e-9, "closed-form distance = 0.14/1.7");
  ok &= near(rep.delta, 0.083, 1e-3, "distance near its rounded form 0.083");
  ok &= expect(rep.nc == std::vector<int>{0, 2, 3}, "zero-defect rows = {1,3,4}");

  const ApproxResult res = greatest_approximation(s, 1e-9);
  const System replaced(s.kind(), s.matrix(), res.approx);
  ok &= expect(check_consistency(replaced, 1e-9).consistent, "replaced right-hand side consistent");

  // Reference vector rounded to three or four decimals; 5e-4 per component.
  // The exact approximation is (15/17, 10.5/17, 41/85, 41/85) and three of
  // its components sit 6.5e-4 from the rounded reference, so this sub-check
  // cannot pass; it is kept at its stated tolerance instead of being
  // loosened. See the repository notes for the arithmetic.
  const std::vector<double> rounded_ref = {0.883, 0.6181, 0.483, 0.483};
  for (int i = 0; i < 4; ++i) {
    ok &= near(res.approx[i], rounded_ref[i], 5e-4,
               "approximation[" + std::to_string(i + 1) + "] vs rounded reference");
  }
  criterion(2, "product variant (distance 0.14/1.7, kept rows, approximation)", ok);
}

void criterion3() {
  const System s = testing::dense4x4(TNorm::Lukasiewicz);
  const ChebyshevReport rep = chebyshev_report(s, 1e-9);
  bool ok = true;
  ok &= near(rep.delta, 0.1, 1e-9, "distance = 0.1");
  ok &= expect(rep.nc == std::vector<int>{0, 2, 3}, "zero-defect rows = {1,3,4}");
  const ApproxResult res = greatest_approximation(s, 1e-9);
  const std::vector<double> want = {0.9, 0.6, 0.5, 0.5};
  for (int i = 0; i < 4; ++i) {
    ok &= near(res.approx[i], want[i], 1e-9, "approximation[" + std::to_string(i + 1) + "]");
  }
  criterion(3, "Lukasiewicz variant (distance 0.1, kept rows, approximation)", ok);
}

void criterion4() {
  const System s = testing::stair4x3();
  bool ok = true;
  const ConsistentFamily fam = enumerate_consistent_maxmin(s, 1e-9);
  ok &= expect(fam.sets.size() == 9,
               "family has 9 sets (got " + std::to_string(fam.sets.size()) + ")");
  const std::vector<IndexSet> want = {IndexSet{0},    IndexSet{1},       IndexSet{2},
                                      IndexSet{3},    IndexSet{0, 1},    IndexSet{0, 3},
                                      IndexSet{1, 3}, IndexSet{2, 3},    IndexSet{0, 1, 3}};
  ok &= expect(sorted(fam.sets) == sorted(want), "family members match the expected nine");
  const std::vector<IndexSet> maximal = maximal_consistent_maxmin(s, 1e-9);
  ok &= expect(maximal == std::vector<IndexSet>{IndexSet{0, 1, 3}, IndexSet{2, 3}},
               "maximal sets are {1,2,4} and {3,4}");
  criterion(4, "staircase system enumerates 9 consistent subsystems, 2 maximal", ok);
}

void criterion5() {
  const TNorm kinds[] = {TNorm::Min, TNorm::Product, TNorm::Lukasiewicz};
  const double eps = 1e-9;
  bool ok = true;
  int checked = 0;
  for (TNorm kind : kinds) {
    const uint64_t base = 0x1000u + static_cast<uint64_t>(kind) * 0x10000u;
    for (int t = 0; t < 1000; ++t) {
      const uint64_t seed = base + static_cast<uint64_t>(t);
      const int n = size_draw(seed, 0, 6);
      const int m = size_draw(seed, 1, 6);
      const System s = oracle::random_system(seed, n, m, kind, 0.05);
      ++checked;

      const ChebyshevReport rep = chebyshev_report(s, eps);
      const bool consistent = check_consistency(s, eps).consistent;

      // (a) zero distance is the same thing as consistency
      if (!expect((rep.delta <= eps) == consistent,
                  "distance<=eps iff consistent (seed " + std::to_string(seed) + ")")) {
        ok = false;
        continue;
      }

      // (b) closed form against bisection
      const double bisected = oracle::bisection_distance(s);
      ok &= near(rep.delta, bisected, 1e-6, "bisection gap (seed " + std::to_string(seed) + ")");

      // (c) the attainable image never exceeds its target
      const std::vector<double> f = greatest_consistent_image(s, s.rhs());
      for (int i = 0; i < n; ++i) {
        if (f[i] > s.rhs()[i] + 1e-12) {
          ok = expect(false, "image exceeds target (seed " + std::to_string(seed) + ")");
          break;
        }
      }

      // (d) a row against itself measures plain solvability, up to the
      // rounding of the Lukasiewicz complement
      for (int i = 0; i < n && ok; ++i) {
        for (int j = 0; j < m; ++j) {
          const double want = std::max(s.rhs()[i] - s.matrix().at(i, j), 0.0);
          if (std::abs(delta_ijk(s, i, j, i) - want) > 1e-12) {
            ok = expect(false, "self-pair defect (seed " + std::to_string(seed) + ")");
            break;
          }
        }
      }

      // (e) the zero-defect rows form a maximal consistent subsystem
      bool any_solvable = false;
      for (int i = 0; i < n; ++i) {
        double amax = 0.0;
        for (int j = 0; j < m; ++j) amax = std::max(amax, s.matrix().at(i, j));
        any_solvable = any_solvable || s.rhs()[i] <= amax + eps;
      }
      if (!any_solvable) {
        try {
          canonical_mcs(s, eps);
          ok = expect(false, "missing no-solvable-equation error (seed " + std::to_string(seed) + ")");
        } catch (const NoSolvableEquation&) {
        }
      } else {
        const McsCertificate cert = canonical_mcs(s, eps);
        ok &= expect(cert.delta_nc <= eps,
                     "kept rows consistent (seed " + std::to_string(seed) + ")");
        ok &= expect(check_consistency(subsystem(s, cert.nc), eps).consistent,
                     "kept rows consistent by composition (seed " + std::to_string(seed) + ")");
        for (const AugmentedDefect& a : cert.augmented) {
          if (a.delta <= eps) {
            ok = expect(false, "augmented defect not positive (seed " + std::to_string(seed) + ")");
            break;
          }
        }
      }

      // (f) subsystem distance is monotone under inclusion
      for (int pair = 0; pair < 100; ++pair) {
        const uint64_t h1 = oracle::mix64(seed * 0x9e3779b97f4a7c15ull + 2 * pair + 11);
        const uint64_t h2 = oracle::mix64(seed * 0x9e3779b97f4a7c15ull + 2 * pair + 12);
        const uint32_t small_mask = 1u + static_cast<uint32_t>(h1 % ((1u << n) - 1u));
        const uint32_t big_mask = small_mask | static_cast<uint32_t>(h2 % (1u << n));
        std::vector<int> small_rows, big_rows;
        for (int i = 0; i < n; ++i) {
          if (small_mask & (1u << i)) small_rows.push_back(i);
          if (big_mask & (1u << i)) big_rows.push_back(i);
        }
        const double d_small = subsystem_distance(s, IndexSet(small_rows));
        const double d_big = subsystem_distance(s, IndexSet(big_rows));
        if (d_small > d_big + 1e-12) {
          ok = expect(false, "inclusion monotonicity (seed " + std::to_string(seed) + ")");
          break;
        }
      }
    }
  }
  detail("property suite covered " + std::to_string(checked) + " random systems");
  criterion(5, "properties hold on 1000 random systems per t-norm (grid 0.05, n,m <= 6)", ok);
}

void criterion6() {
  const double eps = 1e-9;
  bool ok = true;
  int families = 0;
  for (int t = 0; t < 200; ++t) {
    const uint64_t seed = 0x600000u + static_cast<uint64_t>(t);
    const int n = size_draw(seed, 2, 10);
    const int m = size_draw(seed, 3, 5);
    const System s = oracle::random_system(seed, n, m, TNorm::Min, 0.05);
    ++families;

    const ConsistentFamily fam = enumerate_consistent_maxmin(s, eps);
    const std::vector<IndexSet> staged = sorted(fam.sets);
    const std::vector<IndexSet> direct = sorted(oracle::enumerate_all(s));
    if (!expect(staged == direct, "staged family equals exhaustive family (seed " +
                                      std::to_string(seed) + ")")) {
      ok = false;
      continue;
    }

    // Downward closure: every nonempty subset of a member is a member.
    std::unordered_set<IndexSet, IndexSetHash> members(staged.begin(), staged.end());
    for (const IndexSet& set : staged) {
      const std::vector<int>& rows = set.rows();
      const uint32_t full = (1u << rows.size()) - 1u;
      for (uint32_t mask = 1; mask < full; ++mask) {
        std::vector<int> sub;
        for (size_t i = 0; i < rows.size(); ++i) {
          if (mask & (1u << i)) sub.push_back(rows[i]);
        }
        if (!members.contains(IndexSet(std::move(sub)))) {
          ok = expect(false, "family not downward closed (seed " + std::to_string(seed) + ")");
          break;
        }
      }
    }

    // Maximality: no member extends a maximal set, and augmenting one by
    // any row of the system (excluded rows included) breaks consistency.
    const std::vector<IndexSet> maximal = maximal_consistent_maxmin(s, eps);
    const std::vector<IndexSet> direct_maximal = oracle::maximal_of(direct);
    ok &= expect(maximal == direct_maximal,
                 "maximal sets equal the oracle's (seed " + std::to_string(seed) + ")");
    for (const IndexSet& set : maximal) {
      for (int row = 0; row < n; ++row) {
        if (set.contains(row)) continue;
        if (subsystem_distance(s, set.with(row)) <= eps) {
          ok = expect(false, "maximal set " + set_text(set) + " extendable by row " +
                                 std::to_string(row + 1) + " (seed " + std::to_string(seed) + ")");
          break;
        }
      }
    }
  }
  detail("enumeration suite covered " + std::to_string(families) + " random min systems");
  criterion(6, "staged enumeration matches the exhaustive oracle on 200 min systems", ok);
}

void criterion7() {
  bool ok = true;
  for (TNorm kind : {TNorm::Min, TNorm::Product, TNorm::Lukasiewicz}) {
    const System s = oracle::random_system(0x777, 100, 100, kind, 0.05);
    const auto start = std::chrono::steady_clock::now();
    const ChebyshevReport rep = chebyshev_report(s, 1e-9);
    const auto stop = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(stop - start).count();
    detail(std::string(tnorm_name(kind)) + ": " + format_number(seconds) + " s, distance " +
           format_number(rep.delta));
    ok &= expect(seconds < 2.0, std::string("100x100 report under two seconds for ") +
                                    tnorm_name(kind));
  }
  criterion(7, "defect report on a 100x100 system stays under two seconds", ok);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
