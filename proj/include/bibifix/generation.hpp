#pragma once

#include <cstddef>
#include <vector>

#include "bibifix/common.hpp"
#include "bibifix/matrix.hpp"

namespace bibifix {

/// A set of pairwise-distinct square matrices of uniform dimension and
/// alphabet, kept in canonical (lexicographic row-major) order.
class MatrixSet {
 public:
  MatrixSet(std::size_t n, int q, std::vector<SquareMatrix> members);

  std::size_t dim() const noexcept { return n_; }
  int q() const noexcept { return q_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<SquareMatrix>& members() const noexcept {
    return members_;
  }
  bool contains(const SquareMatrix& t) const;

  friend bool operator==(const MatrixSet&, const MatrixSet&) = default;

 private:
  std::size_t n_;
  int q_;
  std::vector<SquareMatrix> members_;  // sorted
};

/// All 2n x 2n matrices whose two diagonal n x n blocks equal m, the 2n^2
/// off-block entries ranging over the alphabet.
MatrixSet apply_phi(const SquareMatrix& m,
                    std::uint64_t budget = kDefaultBudget);

/// All (n+1) x (n+1) matrices obtained from m by inserting one free row and
/// one free column at index floor(n/2)+1; the four corner blocks are
/// inherited.  At n = 1 the top-left inherited block is empty, so m lands in
/// the bottom-right corner and the free row and column sit at index 1.
MatrixSet apply_psi(const SquareMatrix& m,
                    std::uint64_t budget = kDefaultBudget);

enum class GenerateMethod {
  kRecursive,  // psi/phi construction, the default
  kBrute,      // filter all q^(n^2) matrices, for cross-validation
};

/// The set of all bibifix-free n x n matrices over a q-ary alphabet.
MatrixSet generate_bbf(std::size_t n, int q,
                       GenerateMethod method = GenerateMethod::kRecursive,
                       std::uint64_t budget = kDefaultBudget);

/// |BBF_n^q| by the recurrence: q for n = 1, then q^(2n-1) times the
/// previous count, minus q^(n^2/2) |BBF_(n/2)| when n is even.
BigInt count_bbf(std::size_t n, int q);

/// Brute-force oracle: every q^(n^2) matrix, kept iff the full-depth
/// bibifix scan finds nothing.
MatrixSet brute_bbf(std::size_t n, int q,
                    std::uint64_t budget = kDefaultBudget);

}  // namespace bibifix
