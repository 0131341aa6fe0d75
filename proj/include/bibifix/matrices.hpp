#pragma once

#include <cstddef>
#include <vector>

#include "bibifix/matrix.hpp"
#include "bibifix/word.hpp"

namespace bibifix {

/// An r x r corner block together with its (0-based) source position.
struct SubmatrixView {
  std::size_t row = 0;
  std::size_t col = 0;
  SquareMatrix block;
};

/// Top-left r x r block, 1 <= r <= n.
SubmatrixView biprefix(const SquareMatrix& t, std::size_t r);

/// Bottom-right r x r block, 1 <= r <= n.
SubmatrixView bisuffix(const SquareMatrix& t, std::size_t r);

/// True iff no r x r biprefix equals the r x r bisuffix.  Checks
/// r = 1..floor(n/2); the deeper dimensions are redundant (bibifix_dims is
/// the full-depth scan).
bool is_bibifix_free(const SquareMatrix& t);

/// All r in 1..n-1 with biprefix == bisuffix, ascending.
std::vector<std::size_t> bibifix_dims(const SquareMatrix& t);

/// True iff for every r in 1..n-1 no r x r biprefix of one matrix equals
/// the r x r bisuffix of the other.  The matrices must be distinct and
/// share dimension and alphabet.
bool is_cross_bibifix_free_pair(const SquareMatrix& a, const SquareMatrix& b);

/// The word t[1,1] t[2,2] ... t[n,n].
Word main_diagonal(const SquareMatrix& t);

namespace detail {

/// biprefix(a, r) == bisuffix(b, r), compared cell by cell.
inline bool corner_blocks_equal(const SquareMatrix& a, const SquareMatrix& b,
                                std::size_t r) noexcept {
  std::size_t off = b.dim() - r;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (a.at(i, j) != b.at(off + i, off + j)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

}  // namespace bibifix
