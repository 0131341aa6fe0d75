#pragma once

// Internal enumeration helpers: iterate all fillings of a grid's free cells
// in row-major lexicographic order, and merge several such streams into one
// canonically ordered visit.

#include <cstddef>
#include <utility>
#include <vector>

#include "bibifix/common.hpp"

namespace bibifix::detail {

using Cell = std::pair<std::size_t, std::size_t>;

/// Stateful odometer over the free cells of a template grid.  The free-cell
/// list must be in row-major order so that successive grids ascend
/// lexicographically; fixed cells are never touched.
template <typename Grid>
class FreeCellStream {
 public:
  FreeCellStream(Grid base, std::vector<Cell> cells)
      : current_(std::move(base)), cells_(std::move(cells)) {
    for (const auto& [row, col] : cells_) {
      current_.set(row, col, 0);
    }
  }

  const Grid& current() const noexcept { return current_; }

  /// Steps to the next filling; false once the odometer has wrapped.
  bool advance() {
    Symbol top = static_cast<Symbol>(current_.q() - 1);
    for (std::size_t i = cells_.size(); i-- > 0;) {
      const auto& [row, col] = cells_[i];
      Symbol v = current_.at(row, col);
      if (v < top) {
        current_.set(row, col, static_cast<Symbol>(v + 1));
        return true;
      }
      current_.set(row, col, 0);
    }
    return false;
  }

 private:
  Grid current_;
  std::vector<Cell> cells_;
};

template <typename Grid, typename Fn>
void for_each_filling(Grid base, std::vector<Cell> cells, Fn&& fn) {
  FreeCellStream<Grid> stream(std::move(base), std::move(cells));
  do {
    fn(stream.current());
  } while (stream.advance());
}

/// Visits the union of several lexicographic streams in global
/// lexicographic order (a k-way merge; the streams never emit equal
/// grids).  Stops early when fn returns false.
template <typename Grid, typename Fn>
void merge_streams(std::vector<FreeCellStream<Grid>> streams, Fn&& fn) {
  std::vector<bool> alive(streams.size(), !streams.empty());
  std::size_t remaining = streams.size();
  while (remaining > 0) {
    std::size_t best = streams.size();
    for (std::size_t i = 0; i < streams.size(); ++i) {
      if (alive[i] &&
          (best == streams.size() ||
           streams[i].current() < streams[best].current())) {
        best = i;
      }
    }
    if (!fn(streams[best].current())) {
      return;
    }
    if (!streams[best].advance()) {
      alive[best] = false;
      --remaining;
    }
  }
}

}  // namespace bibifix::detail
