#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bibifix/common.hpp"
#include "bibifix/word.hpp"

namespace bibifix {

/// An n x n grid of symbols with value semantics.  Entries live row-major in
/// a fixed inline buffer (no heap), which caps the dimension at kMaxDim.
/// Compact serialization joins the row digit-strings with '/' ("10/00");
/// comparison and hashing follow that row-major form.
class SquareMatrix {
 public:
  static constexpr std::size_t kMaxDim = 8;

  /// Zero-filled n x n matrix.
  SquareMatrix(std::size_t n, int q);

  /// Parses the compact "row/row/..." form.
  static SquareMatrix parse(std::string_view text, int q);
  static SquareMatrix from_rows(const std::vector<std::string>& rows, int q);

  std::size_t dim() const noexcept { return n_; }
  int q() const noexcept { return q_; }

  Symbol at(std::size_t row, std::size_t col) const noexcept {
    assert(row < n_ && col < n_);
    return cells_[row * n_ + col];
  }
  void set(std::size_t row, std::size_t col, Symbol value) noexcept {
    assert(row < n_ && col < n_ && value < q_);
    cells_[row * n_ + col] = value;
  }

  std::string str() const;
  std::vector<std::string> rows() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
  friend auto operator<=>(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::uint8_t n_;
  std::uint8_t q_;
  std::array<Symbol, kMaxDim * kMaxDim> cells_;  // zero beyond n_ * n_

  friend struct std::hash<SquareMatrix>;
};

/// An n x m grid with n < m, same storage and serialization scheme as
/// SquareMatrix.  Total cell count is capped by the inline buffer.
class RectMatrix {
 public:
  static constexpr std::size_t kMaxCells = 64;

  /// Zero-filled n x m matrix; requires 1 <= n < m and n*m <= kMaxCells.
  RectMatrix(std::size_t n, std::size_t m, int q);

  static RectMatrix parse(std::string_view text, int q);

  std::size_t row_count() const noexcept { return n_; }
  std::size_t col_count() const noexcept { return m_; }
  int q() const noexcept { return q_; }

  Symbol at(std::size_t row, std::size_t col) const noexcept {
    assert(row < n_ && col < m_);
    return cells_[row * m_ + col];
  }
  void set(std::size_t row, std::size_t col, Symbol value) noexcept {
    assert(row < n_ && col < m_ && value < q_);
    cells_[row * m_ + col] = value;
  }

  std::string str() const;

  friend bool operator==(const RectMatrix&, const RectMatrix&) = default;
  friend auto operator<=>(const RectMatrix&, const RectMatrix&) = default;

 private:
  std::uint8_t n_;
  std::uint8_t m_;
  std::uint8_t q_;
  std::array<Symbol, kMaxCells> cells_;

  friend struct std::hash<RectMatrix>;
};

/// Number of entries where two same-shape matrices differ.
std::size_t hamming_distance(const SquareMatrix& a, const SquareMatrix& b);

}  // namespace bibifix

template <>
struct std::hash<bibifix::SquareMatrix> {
  std::size_t operator()(const bibifix::SquareMatrix& t) const noexcept {
    auto n = t.dim();
    auto h = bibifix::detail::hash_bytes(t.cells_.data(), n * n);
    return h ^ (n << 3) ^ (static_cast<std::size_t>(t.q()) << 11);
  }
};

template <>
struct std::hash<bibifix::RectMatrix> {
  std::size_t operator()(const bibifix::RectMatrix& t) const noexcept {
    auto cells = t.row_count() * t.col_count();
    auto h = bibifix::detail::hash_bytes(t.cells_.data(), cells);
    return h ^ (t.row_count() << 3) ^ (t.col_count() << 7) ^
           (static_cast<std::size_t>(t.q()) << 11);
  }
};
