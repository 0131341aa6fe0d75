#include "bibifix/graycode.hpp"

#include <algorithm>
#include <stdexcept>

namespace bibifix {

namespace {

BigInt pow_q(int q, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(exp));
}

/// Backtracking extension of a partial Hamiltonian path; neighbors are
/// listed ascending, so the first completed path is the lexicographically
/// earliest greedy one.
bool extend_path(const std::vector<std::vector<std::size_t>>& neighbors,
                 std::vector<std::size_t>& path, std::vector<bool>& visited) {
  if (path.size() == neighbors.size()) {
    return true;
  }
  for (std::size_t next : neighbors[path.back()]) {
    if (visited[next]) {
      continue;
    }
    visited[next] = true;
    path.push_back(next);
    if (extend_path(neighbors, path, visited)) {
      return true;
    }
    path.pop_back();
    visited[next] = false;
  }
  return false;
}

}  // namespace

Word reflected_gray_at(std::uint64_t rank, std::size_t length, int q) {
  require_alphabet(q);
  std::vector<Symbol> digits(length);
  for (std::size_t i = length; i-- > 0;) {
    digits[i] = static_cast<Symbol>(rank % q);
    rank /= q;
  }
  if (rank != 0) {
    throw std::invalid_argument("rank outside the q^length Gray positions");
  }
  // a digit is reflected when the symbols emitted so far sum to an odd
  // value, which tracks the alternating sublist directions of the recursion
  std::vector<Symbol> symbols(length);
  std::uint64_t emitted = 0;
  for (std::size_t i = 0; i < length; ++i) {
    symbols[i] = (emitted % 2 == 0)
                     ? digits[i]
                     : static_cast<Symbol>(q - 1 - digits[i]);
    emitted += symbols[i];
  }
  return Word(std::move(symbols), q);
}

GrayListing<Word> reflected_gray(std::size_t length, int q,
                                 std::uint64_t budget) {
  require_alphabet(q);
  BigInt total = pow_q(q, length);
  require_budget(total, budget, "reflected_gray");
  std::uint64_t count = total.convert_to<std::uint64_t>();
  GrayListing<Word> listing{length, q, {}};
  listing.items.reserve(count);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    listing.items.push_back(reflected_gray_at(rank, length, q));
  }
  return listing;
}

std::size_t f_index(std::size_t i, std::size_t j, std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("f_index requires n >= 2");
  }
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::invalid_argument("f_index cell outside the matrix");
  }
  if (i == j) {
    throw std::invalid_argument("f_index is defined off the diagonal only");
  }
  if (i > j) {
    // column j of the lower triangle holds rows j+1..n
    return (j - 1) * n - j * (j - 1) / 2 + (i - j);
  }
  // upper triangle, after the n(n-1)/2 lower cells
  return n * (n - 1) / 2 + (j - 1) * (j - 2) / 2 + i;
}

SquareMatrix offdiag_decode(const Word& offdiag, const Word& diagonal) {
  if (diagonal.empty()) {
    throw std::invalid_argument("offdiag_decode requires a nonempty diagonal");
  }
  if (offdiag.q() != diagonal.q()) {
    throw std::invalid_argument("offdiag_decode requires one alphabet");
  }
  std::size_t n = diagonal.length();
  if (offdiag.length() != n * n - n) {
    throw std::invalid_argument(
        "off-diagonal word must have length n^2-n = " +
        std::to_string(n * n - n) + ", got " +
        std::to_string(offdiag.length()));
  }
  SquareMatrix t(n, diagonal.q());
  for (std::size_t i = 0; i < n; ++i) {
    t.set(i, i, diagonal[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        t.set(i, j, offdiag[f_index(i + 1, j + 1, n) - 1]);
      }
    }
  }
  return t;
}

Word offdiag_encode(const SquareMatrix& t) {
  std::size_t n = t.dim();
  std::vector<Symbol> symbols(n * n - n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        symbols[f_index(i + 1, j + 1, n) - 1] = t.at(i, j);
      }
    }
  }
  return Word(std::move(symbols), t.q());
}

GrayListing<Word> diagonal_gray(const WordCode& code) {
  if (code.empty()) {
    throw std::invalid_argument("diagonal_gray requires a nonempty code");
  }
  const auto& words = code.words();  // sorted, so indices follow lex order
  std::size_t count = words.size();
  std::vector<std::vector<std::size_t>> neighbors(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j && hamming_distance(words[i], words[j]) == 1) {
        neighbors[i].push_back(j);
      }
    }
  }
  for (std::size_t start = 0; start < count; ++start) {
    std::vector<std::size_t> path{start};
    std::vector<bool> visited(count, false);
    visited[start] = true;
    if (extend_path(neighbors, path, visited)) {
      GrayListing<Word> listing{code.word_length(), code.q(), {}};
      listing.items.reserve(count);
      for (std::size_t index : path) {
        listing.items.push_back(words[index]);
      }
      return listing;
    }
  }
  throw NoGrayOrderError(
      "no Hamming-distance-1 ordering of the " + std::to_string(count) +
      " code words exists");
}

void for_each_cbbf_gray(
    std::size_t n, int q, const CbbfOptions& options,
    const std::function<bool(const SquareMatrix&)>& visit) {
  require_alphabet(q);
  if (n < 3) {
    throw std::invalid_argument("cbbf gray listing requires n >= 3");
  }
  if (n > SquareMatrix::kMaxDim) {
    throw std::invalid_argument("cbbf gray listing requires n <= " +
                                std::to_string(SquareMatrix::kMaxDim));
  }
  WordCode diagonal = detail::resolve_diagonal(n, q, options).first;
  BigInt total = BigInt(diagonal.size()) * pow_q(q, n * n - n);
  require_budget(total, options.budget, "cbbf gray listing");

  GrayListing<Word> diag_order = diagonal_gray(diagonal);
  std::uint64_t block_len = pow_q(q, n * n - n).convert_to<std::uint64_t>();
  for (std::size_t block = 0; block < diag_order.items.size(); ++block) {
    const Word& diag = diag_order.items[block];
    for (std::uint64_t step = 0; step < block_len; ++step) {
      std::uint64_t rank = (block % 2 == 0) ? step : block_len - 1 - step;
      Word offdiag = reflected_gray_at(rank, n * n - n, q);
      if (!visit(offdiag_decode(offdiag, diag))) {
        return;
      }
    }
  }
}

GrayListing<SquareMatrix> build_cbbf_gray(std::size_t n, int q,
                                          const CbbfOptions& options) {
  GrayListing<SquareMatrix> listing{n, q, {}};
  for_each_cbbf_gray(n, q, options, [&](const SquareMatrix& t) {
    listing.items.push_back(t);
    return true;
  });
  return listing;
}

}  // namespace bibifix
