#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bibifix/common.hpp"

namespace bibifix {

/// A word over the alphabet {0, ..., q-1}, serialized as a digit string
/// ("1000").  The empty word is representable; operations that need a
/// nonempty word validate that themselves.
class Word {
 public:
  Word(std::vector<Symbol> symbols, int q);

  /// Parses a digit string.  Throws std::invalid_argument on a non-digit
  /// character or a digit outside [0, q-1].
  static Word parse(std::string_view digits, int q);

  std::size_t length() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  int q() const noexcept { return q_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  Word prefix(std::size_t len) const;
  Word suffix(std::size_t len) const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
  std::uint8_t q_;
};

/// Number of positions where two equal-length words differ.
std::size_t hamming_distance(const Word& a, const Word& b);

}  // namespace bibifix

template <>
struct std::hash<bibifix::Word> {
  std::size_t operator()(const bibifix::Word& w) const noexcept {
    auto s = w.symbols();
    auto h = bibifix::detail::hash_bytes(s.data(), s.size());
    return h ^ (static_cast<std::size_t>(w.q()) << 1);
  }
};
