#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "logder/poly.hpp"

namespace logder {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Basis of the right nullspace {x : A x = 0} of a dense rational matrix
/// with `ncols` columns, in reduced form (one free variable set to 1 per vector).
std::vector<std::vector<Rational>> nullspace(RationalMatrix rows, std::size_t ncols);

/// Incremental row echelon form over sparse rational rows. Each stored row is
/// keyed by its first (pivot) coordinate under Compare.
template <class Key, class Compare = std::less<Key>>
class SparseEchelon {
 public:
  using Row = std::map<Key, Rational, Compare>;

  /// Reduces `row` against the stored rows; stores it and returns true when
  /// it is independent of them.
  bool insert(Row row) {
    reduce(row);
    if (row.empty()) return false;
    const Key pivot = row.begin()->first;
    pivots_.emplace(pivot, std::move(row));
    return true;
  }

  bool in_span(Row row) const {
    reduce(row);
    return row.empty();
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  void reduce(Row& row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.begin()->first);
      if (it == pivots_.end()) return;
      const Rational factor = row.begin()->second / it->second.begin()->second;
      for (const auto& [key, value] : it->second) {
        auto [pos, inserted] = row.try_emplace(key, 0);
        pos->second -= factor * value;
        if (pos->second == 0) row.erase(pos);
      }
    }
  }

  std::map<Key, Row, Compare> pivots_;
};

}  // namespace logder
