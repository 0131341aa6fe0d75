#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bibifix/common.hpp"
#include "bibifix/word.hpp"

namespace bibifix {

/// A set of pairwise-distinct words of uniform length over one alphabet,
/// kept in lexicographic order.
class WordCode {
 public:
  WordCode(std::size_t word_length, int q, std::vector<Word> words);

  std::size_t word_length() const noexcept { return word_length_; }
  int q() const noexcept { return q_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::vector<Word>& words() const noexcept { return words_; }
  bool contains(const Word& w) const;

  friend bool operator==(const WordCode&, const WordCode&) = default;

 private:
  std::size_t word_length_;
  int q_;
  std::vector<Word> words_;  // sorted
};

/// True iff no proper prefix of w equals the same-length suffix of w.
/// Checks depths 1..floor(n/2) only; the deeper depths are redundant
/// (see bifix_lengths for the full-depth scan).
bool is_bifix_free(const Word& w);

/// All lengths i in 1..n-1 whose prefix equals the same-length suffix,
/// ascending.  Empty exactly when the word is bifix-free.
std::vector<std::size_t> bifix_lengths(const Word& w);

/// Number of bifix-free words of length n over a q-ary alphabet, by the
/// halving recurrence.  Exact at any size.
BigInt count_bf(std::size_t n, int q);

/// All bifix-free words of length n, lexicographic.  Visits q^n candidates,
/// so the budget applies.
WordCode enumerate_bf(std::size_t n, int q,
                      std::uint64_t budget = kDefaultBudget);

/// True iff no proper prefix of either word equals the same-length proper
/// suffix of the other.  The two words must be distinct.
bool is_cross_bifix_free_pair(const Word& a, const Word& b);

/// The cross-bifix-free set S_{n,q}^(k): words starting with exactly k ones
/// (position k+1 and the last position differ from 1) whose interior window
/// avoids k consecutive ones.  Requires n >= 3 and 1 <= k <= n-2.
WordCode build_s(std::size_t n, int q, std::size_t k);

/// The k in 1..n-2 maximizing |S_{n,q}^(k)|, smallest k on ties.
std::size_t select_k(std::size_t n, int q);

struct WordSetExpansion {
  bool nonexpandable = false;
  /// A word that could be added while keeping the set cross-bifix-free,
  /// present exactly when nonexpandable is false.
  std::optional<Word> witness;
};

/// Checks that no bifix-free word outside the code can be added without
/// breaking the cross-bifix-free property.  The code itself must be a
/// cross-bifix-free subset of the bifix-free words (validated, throws
/// std::invalid_argument otherwise).
WordSetExpansion is_nonexpandable_word_set(
    const WordCode& code, std::uint64_t budget = kDefaultBudget);

}  // namespace bibifix
