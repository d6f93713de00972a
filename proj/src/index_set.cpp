#include "frel/index_set.hpp"

#include <algorithm>
#include <string>

#include "frel/errors.hpp"

namespace frel {

IndexSet::IndexSet(std::initializer_list<int> rows) : IndexSet(std::vector<int>(rows)) {}

IndexSet::IndexSet(std::vector<int> rows) : rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end());
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) throw InvalidInput("negative row index in set");
    if (i > 0 && rows_[i] == rows_[i - 1]) {
      throw InvalidInput("duplicate row index " + std::to_string(rows_[i] + 1) + " in set");
    }
  }
}

bool IndexSet::contains(int row) const {
  return std::binary_search(rows_.begin(), rows_.end(), row);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.rows_.begin(), other.rows_.end(), rows_.begin(), rows_.end());
}

IndexSet IndexSet::with(int row) const {
  std::vector<int> rows = rows_;
  rows.push_back(row);
  return IndexSet(std::move(rows));
}

}  // namespace frel
