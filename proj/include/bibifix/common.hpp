#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bibifix {

/// Exact integer type for cardinalities that outgrow 64 bits.
using BigInt = boost::multiprecision::cpp_int;

/// One alphabet symbol, a value in [0, q-1].
using Symbol = std::uint8_t;

inline constexpr int kMinAlphabet = 2;
/// Symbols serialize as decimal digits, which caps the alphabet at 10.
inline constexpr int kMaxAlphabet = 10;

/// Default ceiling on the number of candidates an enumeration may visit
/// (or items it may produce).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

/// Thrown when an enumeration would exceed its candidate budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a set admits no Hamming-distance-1 ordering.
class NoGrayOrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_alphabet(int q) {
  if (q < kMinAlphabet || q > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must be between " +
                                std::to_string(kMinAlphabet) + " and " +
                                std::to_string(kMaxAlphabet) + ", got " +
                                std::to_string(q));
  }
}

inline void require_budget(const BigInt& candidates, std::uint64_t budget,
                           const char* what) {
  if (candidates > BigInt(budget)) {
    throw BudgetError(std::string(what) + " needs " + candidates.str() +
                      " candidates, over the budget of " +
                      std::to_string(budget));
  }
}

namespace detail {

inline std::size_t hash_bytes(const unsigned char* data, std::size_t len,
                              std::size_t seed = 14695981039346656037ull) {
  std::size_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h = (h ^ data[i]) * 1099511628211ull;
  }
  return h;
}

}  // namespace detail

}  // namespace bibifix
