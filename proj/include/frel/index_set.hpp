#ifndef FREL_INDEX_SET_HPP
#define FREL_INDEX_SET_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace frel {

/// Immutable sorted set of 0-based row indices. Comparison is
/// lexicographic on the sorted element sequence, which gives families of
/// sets a deterministic order.
class IndexSet {
public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> rows);
  explicit IndexSet(std::vector<int> rows);  // sorts, rejects duplicates/negatives

  bool empty() const { return rows_.empty(); }
  int size() const { return static_cast<int>(rows_.size()); }
  bool contains(int row) const;
  bool is_subset_of(const IndexSet& other) const;

  /// Copy of this set with one more row.
  IndexSet with(int row) const;

  const std::vector<int>& rows() const { return rows_; }
  auto begin() const { return rows_.begin(); }
  auto end() const { return rows_.end(); }

  bool operator==(const IndexSet& other) const { return rows_ == other.rows_; }
  bool operator<(const IndexSet& other) const { return rows_ < other.rows_; }

private:
  std::vector<int> rows_;
};

struct IndexSetHash {
  size_t operator()(const IndexSet& s) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : s.rows()) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace frel

#endif  // FREL_INDEX_SET_HPP
