#include "bibifix/matrices.hpp"

#include <stdexcept>
#include <string>

namespace bibifix {

namespace {

void require_block_size(const SquareMatrix& t, std::size_t r) {
  if (r < 1 || r > t.dim()) {
    throw std::invalid_argument("block size " + std::to_string(r) +
                                " outside [1, " + std::to_string(t.dim()) +
                                "]");
  }
}

SquareMatrix copy_block(const SquareMatrix& t, std::size_t row,
                        std::size_t col, std::size_t r) {
  SquareMatrix block(r, t.q());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      block.set(i, j, t.at(row + i, col + j));
    }
  }
  return block;
}

}  // namespace

SubmatrixView biprefix(const SquareMatrix& t, std::size_t r) {
  require_block_size(t, r);
  return {0, 0, copy_block(t, 0, 0, r)};
}

SubmatrixView bisuffix(const SquareMatrix& t, std::size_t r) {
  require_block_size(t, r);
  std::size_t off = t.dim() - r;
  return {off, off, copy_block(t, off, off, r)};
}

bool is_bibifix_free(const SquareMatrix& t) {
  for (std::size_t r = 1; r <= t.dim() / 2; ++r) {
    if (detail::corner_blocks_equal(t, t, r)) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> bibifix_dims(const SquareMatrix& t) {
  std::vector<std::size_t> dims;
  for (std::size_t r = 1; r < t.dim(); ++r) {
    if (detail::corner_blocks_equal(t, t, r)) {
      dims.push_back(r);
    }
  }
  return dims;
}

bool is_cross_bibifix_free_pair(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("cross check requires equal dimensions");
  }
  if (a.q() != b.q()) {
    throw std::invalid_argument("cross check requires one alphabet");
  }
  if (a == b) {
    throw std::invalid_argument("cross check requires distinct matrices");
  }
  for (std::size_t r = 1; r < a.dim(); ++r) {
    if (detail::corner_blocks_equal(a, b, r) ||
        detail::corner_blocks_equal(b, a, r)) {
      return false;
    }
  }
  return true;
}

Word main_diagonal(const SquareMatrix& t) {
  std::vector<Symbol> symbols(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) {
    symbols[i] = t.at(i, i);
  }
  return Word(std::move(symbols), t.q());
}

}  // namespace bibifix
