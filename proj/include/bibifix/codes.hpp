#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bibifix/common.hpp"
#include "bibifix/generation.hpp"
#include "bibifix/matrix.hpp"
#include "bibifix/words.hpp"

namespace bibifix {

/// The complete family of n x n matrices whose main diagonal runs over a
/// fixed word set, all other entries free.  Members are materialized in
/// canonical order; completeness (exactly |diagonal| * q^(n^2-n) members)
/// is enforced, as is bibifix-freeness of every member.
class MatrixCode {
 public:
  MatrixCode(MatrixSet members, WordCode diagonal_code,
             std::optional<std::size_t> k);

  std::size_t dim() const noexcept { return members_.dim(); }
  int q() const noexcept { return members_.q(); }
  const MatrixSet& members() const noexcept { return members_; }
  const WordCode& diagonal_code() const noexcept { return diagonal_code_; }
  /// The k of S_{n,q}^(k) when the diagonal set came from it; empty for an
  /// explicitly supplied diagonal set.
  std::optional<std::size_t> k() const noexcept { return k_; }

 private:
  MatrixSet members_;
  WordCode diagonal_code_;
  std::optional<std::size_t> k_;
};

struct CbbfOptions {
  /// Force S_{n,q}^(k) for this k instead of picking the k of maximum
  /// cardinality.
  std::optional<std::size_t> k;
  /// Explicit diagonal words (each must be bifix-free); overrides k.
  std::optional<std::vector<Word>> diagonal_words;
  std::uint64_t budget = kDefaultBudget;
};

/// The cross-bibifix-free code: all n x n matrices whose main diagonal is a
/// word of S_{n,q}^(k) (k from select_k unless forced).  Requires n >= 3.
MatrixCode build_cbbf(std::size_t n, int q, const CbbfOptions& options = {});

/// Streams the members of the diagonal-determined family in canonical order
/// without materializing them.  Stops early when visit returns false.
void for_each_cbbf_member(
    const WordCode& diagonal_code,
    const std::function<bool(const SquareMatrix&)>& visit);

struct CrossCheck {
  bool cross_free = false;
  /// An offending pair, present exactly when cross_free is false.
  std::optional<std::pair<SquareMatrix, SquareMatrix>> conflict;
};

/// Direct pairwise oracle over all distinct pairs.
CrossCheck verify_cross_set(const MatrixSet& set);

/// Same verdict via the diagonal-level reduction: because a code carries
/// every off-diagonal filling, an r x r biprefix of one member equals an
/// r x r bisuffix of another iff the corresponding diagonal prefix and
/// suffix words collide.  Agrees with the direct oracle on any code.
CrossCheck verify_cross_set(const MatrixCode& code);

struct ExpansionCheck {
  bool nonexpandable = false;
  /// A bibifix-free matrix that could join the code, present exactly when
  /// nonexpandable is false.
  std::optional<SquareMatrix> witness;
};

/// Checks that every bibifix-free matrix outside the code conflicts with
/// some member.  Scans the full BBF set, so the generation budget applies.
ExpansionCheck verify_nonexpandable(const MatrixCode& code,
                                    std::uint64_t budget = kDefaultBudget);

/// True iff candidate is bibifix-free, outside the code, and
/// cross-bibifix-free against every member.
bool is_expanding_witness(const MatrixCode& code,
                          const SquareMatrix& candidate);

/// The rectangular analogue of MatrixCode: n x m matrices (n < m) carrying
/// one diagonal word on the left n x n block and one on the right.
struct RectCode {
  std::size_t n = 0;
  std::size_t m = 0;
  int q = 0;
  std::optional<std::size_t> k;
  WordCode diagonal_code;
  std::vector<RectMatrix> members;  // canonical order
};

/// All n x m matrices with some w in S_n^q on the left-block diagonal
/// (cells [k,k]) and some independently chosen w' on the right-block
/// diagonal (cells [k, m-n+k]); the two diagonals never share a cell.
/// Requires 3 <= n < m.
RectCode build_cbbf_rect(std::size_t n, std::size_t m, int q,
                         const CbbfOptions& options = {});

/// Streams the rectangular family in canonical order without materializing
/// it.  Stops early when visit returns false.
void for_each_rect_member(std::size_t n, std::size_t m,
                          const WordCode& diagonal_code,
                          const std::function<bool(const RectMatrix&)>& visit);

/// True iff for every r in 1..n-1 the top-left r x r block of each matrix
/// differs from the bottom-right r x r block of the other.
bool is_cross_bibifix_free_rect_pair(const RectMatrix& a, const RectMatrix& b);

struct RectCrossCheck {
  bool cross_free = false;
  std::optional<std::pair<RectMatrix, RectMatrix>> conflict;
};

/// Direct pairwise oracle over all distinct pairs of rectangular matrices.
RectCrossCheck verify_cross_rect(const std::vector<RectMatrix>& members);

namespace detail {

/// Diagonal word set for a code build: explicit words (validated
/// bifix-free), a forced k, or the k of maximum cardinality; paired with
/// the k actually used (empty for explicit words).
std::pair<WordCode, std::optional<std::size_t>> resolve_diagonal(
    std::size_t n, int q, const CbbfOptions& options);

}  // namespace detail

}  // namespace bibifix
