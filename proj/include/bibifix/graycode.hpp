#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "bibifix/codes.hpp"
#include "bibifix/common.hpp"
#include "bibifix/matrix.hpp"
#include "bibifix/word.hpp"
#include "bibifix/words.hpp"

namespace bibifix {

/// An ordered listing whose successive items differ in exactly one position.
/// n is the word length (or matrix dimension) of the items.
template <typename Item>
struct GrayListing {
  std::size_t n = 0;
  int q = 0;
  std::vector<Item> items;
};

/// The reflected q-ary Gray code over all words of the given length:
/// q^length words, first 0...0, successive Hamming distance 1.
GrayListing<Word> reflected_gray(std::size_t length, int q,
                                 std::uint64_t budget = kDefaultBudget);

/// The word at a given position of the reflected q-ary Gray code, without
/// materializing the list.
Word reflected_gray_at(std::uint64_t rank, std::size_t length, int q);

/// Maps an off-diagonal cell (1-based i, j; i != j) of an n x n matrix to
/// its position in 1..n^2-n: the lower triangle first, column by column,
/// top to bottom, then the upper triangle the same way.
std::size_t f_index(std::size_t i, std::size_t j, std::size_t n);

/// Rebuilds a matrix from its diagonal and the linearized word of its
/// n^2-n off-diagonal entries (the f_index layout).
SquareMatrix offdiag_decode(const Word& offdiag, const Word& diagonal);

/// The linearized word of a matrix's off-diagonal entries; inverse of
/// offdiag_decode for a fixed diagonal.
Word offdiag_encode(const SquareMatrix& t);

/// A Hamming-distance-1 ordering of the code, by deterministic
/// Hamiltonian-path backtracking over the distance-1 graph: starts are
/// tried in lexicographic order (the lexicographic minimum first),
/// neighbors are explored in lexicographic order, and the first complete
/// path wins.  Throws NoGrayOrderError when no such path exists.
GrayListing<Word> diagonal_gray(const WordCode& code);

/// The Gray listing of the cross-bibifix-free code: one block per diagonal
/// word (in diagonal_gray order), the off-diagonal word following the
/// reflected Gray code, forward in even blocks and reversed in odd ones.
/// Successive matrices differ in exactly one entry, across block seams too.
GrayListing<SquareMatrix> build_cbbf_gray(std::size_t n, int q,
                                          const CbbfOptions& options = {});

/// Streams the same listing without materializing it.  Stops early when
/// visit returns false.
void for_each_cbbf_gray(std::size_t n, int q, const CbbfOptions& options,
                        const std::function<bool(const SquareMatrix&)>& visit);

struct GrayCheck {
  bool ok = false;
  /// Index of the first item that repeats an earlier one or sits at
  /// Hamming distance != 1 from its predecessor.
  std::optional<std::size_t> offending_index;
};

/// Incremental Gray verification over a streamed listing: keeps the
/// previous item plus serialized fingerprints for the distinctness check.
template <typename Item>
class GrayStreamChecker {
 public:
  void feed(const Item& item) {
    if (!offending_) {
      if (previous_ && hamming_distance(*previous_, item) != 1) {
        offending_ = count_;
      } else if (!seen_.insert(item.str()).second) {
        offending_ = count_;
      }
    }
    previous_ = item;
    ++count_;
  }

  bool ok() const noexcept { return !offending_.has_value(); }
  std::optional<std::size_t> offending_index() const noexcept {
    return offending_;
  }
  std::size_t count() const noexcept { return count_; }

 private:
  std::optional<Item> previous_;
  std::unordered_set<std::string> seen_;
  std::size_t count_ = 0;
  std::optional<std::size_t> offending_;
};

/// True iff successive items sit at Hamming distance exactly 1 and no item
/// repeats; reports the first offending index otherwise.
template <typename Item>
GrayCheck verify_gray(const GrayListing<Item>& listing) {
  GrayStreamChecker<Item> checker;
  for (const Item& item : listing.items) {
    checker.feed(item);
  }
  return {checker.ok(), checker.offending_index()};
}

}  // namespace bibifix
