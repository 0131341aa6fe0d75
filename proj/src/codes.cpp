#include "bibifix/codes.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "bibifix/matrices.hpp"
#include "free_cells.hpp"

namespace bibifix {

namespace {

using detail::Cell;
using detail::FreeCellStream;

BigInt pow_q(int q, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(exp));
}

std::vector<Cell> offdiag_cells(std::size_t n) {
  std::vector<Cell> cells;
  cells.reserve(n * n - n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        cells.emplace_back(i, j);
      }
    }
  }
  return cells;
}

bool word_prefix_equals_suffix(const Word& a, const Word& b,
                               std::size_t len) {
  std::size_t off = b.length() - len;
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != b[off + i]) {
      return false;
    }
  }
  return true;
}

}  // namespace

namespace detail {

std::pair<WordCode, std::optional<std::size_t>> resolve_diagonal(
    std::size_t n, int q, const CbbfOptions& options) {
  if (options.diagonal_words) {
    for (const Word& w : *options.diagonal_words) {
      // a diagonal with a bifix would admit non-bibifix-free members
      if (!bifix_lengths(w).empty()) {
        throw std::invalid_argument("diagonal word " + w.str() +
                                    " is not bifix-free");
      }
    }
    return {WordCode(n, q, *options.diagonal_words), std::nullopt};
  }
  std::size_t k = options.k ? *options.k : select_k(n, q);
  return {build_s(n, q, k), k};
}

}  // namespace detail

MatrixCode::MatrixCode(MatrixSet members, WordCode diagonal_code,
                       std::optional<std::size_t> k)
    : members_(std::move(members)),
      diagonal_code_(std::move(diagonal_code)),
      k_(k) {
  std::size_t n = members_.dim();
  if (diagonal_code_.word_length() != n || diagonal_code_.q() != members_.q()) {
    throw std::invalid_argument(
        "diagonal code must match the members' dimension and alphabet");
  }
  BigInt expected =
      BigInt(diagonal_code_.size()) * pow_q(members_.q(), n * n - n);
  if (BigInt(members_.size()) != expected) {
    throw std::invalid_argument(
        "matrix code must carry every off-diagonal filling of its diagonal "
        "words (expected " +
        expected.str() + " members, got " +
        std::to_string(members_.size()) + ")");
  }
  for (const SquareMatrix& t : members_.members()) {
    if (!diagonal_code_.contains(main_diagonal(t))) {
      throw std::invalid_argument("member " + t.str() +
                                  " carries a diagonal outside the code");
    }
    if (!is_bibifix_free(t)) {
      throw std::invalid_argument("member " + t.str() +
                                  " is not bibifix-free");
    }
  }
}

void for_each_cbbf_member(
    const WordCode& diagonal_code,
    const std::function<bool(const SquareMatrix&)>& visit) {
  std::size_t n = diagonal_code.word_length();
  std::vector<FreeCellStream<SquareMatrix>> streams;
  streams.reserve(diagonal_code.size());
  for (const Word& w : diagonal_code.words()) {
    SquareMatrix base(n, diagonal_code.q());
    for (std::size_t i = 0; i < n; ++i) {
      base.set(i, i, w[i]);
    }
    streams.emplace_back(std::move(base), offdiag_cells(n));
  }
  detail::merge_streams(std::move(streams), visit);
}

MatrixCode build_cbbf(std::size_t n, int q, const CbbfOptions& options) {
  require_alphabet(q);
  if (n < 3) {
    throw std::invalid_argument("build_cbbf requires n >= 3");
  }
  if (n > SquareMatrix::kMaxDim) {
    throw std::invalid_argument("build_cbbf requires n <= " +
                                std::to_string(SquareMatrix::kMaxDim));
  }
  auto [diagonal, k] = detail::resolve_diagonal(n, q, options);
  BigInt total = BigInt(diagonal.size()) * pow_q(q, n * n - n);
  require_budget(total, options.budget, "build_cbbf");

  std::vector<SquareMatrix> members;
  members.reserve(total.convert_to<std::size_t>());
  for_each_cbbf_member(diagonal, [&](const SquareMatrix& t) {
    members.push_back(t);
    return true;
  });
  return MatrixCode(MatrixSet(n, q, std::move(members)), std::move(diagonal),
                    k);
}

CrossCheck verify_cross_set(const MatrixSet& set) {
  const auto& members = set.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!is_cross_bibifix_free_pair(members[i], members[j])) {
        return {false, std::make_pair(members[i], members[j])};
      }
    }
  }
  return {true, std::nullopt};
}

CrossCheck verify_cross_set(const MatrixCode& code) {
  std::size_t n = code.dim();
  const auto& words = code.diagonal_code().words();
  for (const Word& wi : words) {
    for (const Word& wj : words) {
      for (std::size_t r = 1; r < n; ++r) {
        if (!word_prefix_equals_suffix(wi, wj, r)) {
          continue;
        }
        // Materialize one conflicting member pair: a matrix with diagonal
        // wi whose biprefix block is copied into the bisuffix of a matrix
        // with diagonal wj.
        SquareMatrix first(n, code.q());
        for (std::size_t i = 0; i < n; ++i) {
          first.set(i, i, wi[i]);
        }
        SquareMatrix second(n, code.q());
        for (std::size_t i = 0; i < n; ++i) {
          second.set(i, i, wj[i]);
        }
        std::size_t off = n - r;
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) {
            if (off + i != off + j) {
              second.set(off + i, off + j, first.at(i, j));
            }
          }
        }
        if (second == first) {
          // same filling of the same diagonal; any cell outside the
          // bisuffix separates them without breaking the collision
          second.set(0, 1, 1);
        }
        return {false, std::make_pair(first, second)};
      }
    }
  }
  return {true, std::nullopt};
}

ExpansionCheck verify_nonexpandable(const MatrixCode& code,
                                    std::uint64_t budget) {
  MatrixSet universe =
      generate_bbf(code.dim(), code.q(), GenerateMethod::kRecursive, budget);
  const auto& members = code.members().members();
  for (const SquareMatrix& candidate : universe.members()) {
    if (code.diagonal_code().contains(main_diagonal(candidate))) {
      continue;  // a member: the code holds every filling of its diagonals
    }
    bool conflicts = false;
    for (const SquareMatrix& member : members) {
      if (!is_cross_bibifix_free_pair(candidate, member)) {
        conflicts = true;
        break;
      }
    }
    if (!conflicts) {
      return {false, candidate};
    }
  }
  return {true, std::nullopt};
}

bool is_expanding_witness(const MatrixCode& code,
                          const SquareMatrix& candidate) {
  if (candidate.dim() != code.dim() || candidate.q() != code.q()) {
    throw std::invalid_argument(
        "witness candidate must match the code's dimension and alphabet");
  }
  if (!is_bibifix_free(candidate)) {
    return false;
  }
  if (code.diagonal_code().contains(main_diagonal(candidate))) {
    return false;  // already a member
  }
  for (const SquareMatrix& member : code.members().members()) {
    if (!is_cross_bibifix_free_pair(candidate, member)) {
      return false;
    }
  }
  return true;
}

void for_each_rect_member(
    std::size_t n, std::size_t m, const WordCode& diagonal_code,
    const std::function<bool(const RectMatrix&)>& visit) {
  int q = diagonal_code.q();

  // The left diagonal occupies cells (i, i), the right one (i, m-n+i);
  // they can never coincide since m > n.
  for (std::size_t i = 0; i < n; ++i) {
    assert(m - n + i != i);
  }

  std::vector<Cell> free_cells;
  free_cells.reserve(n * m - 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i && j != m - n + i) {
        free_cells.emplace_back(i, j);
      }
    }
  }

  std::vector<FreeCellStream<RectMatrix>> streams;
  streams.reserve(diagonal_code.size() * diagonal_code.size());
  for (const Word& wi : diagonal_code.words()) {
    for (const Word& wj : diagonal_code.words()) {
      RectMatrix base(n, m, q);
      for (std::size_t i = 0; i < n; ++i) {
        base.set(i, i, wi[i]);
        base.set(i, m - n + i, wj[i]);
      }
      streams.emplace_back(std::move(base), free_cells);
    }
  }
  detail::merge_streams(std::move(streams), visit);
}

RectCode build_cbbf_rect(std::size_t n, std::size_t m, int q,
                         const CbbfOptions& options) {
  require_alphabet(q);
  if (n < 3 || n >= m) {
    throw std::invalid_argument("build_cbbf_rect requires 3 <= n < m");
  }
  [[maybe_unused]] RectMatrix shape_check(n, m, q);  // cell-count cap first
  auto [diagonal, k] = detail::resolve_diagonal(n, q, options);
  BigInt total =
      BigInt(diagonal.size()) * BigInt(diagonal.size()) * pow_q(q, n * m - 2 * n);
  require_budget(total, options.budget, "build_cbbf_rect");

  std::vector<RectMatrix> members;
  members.reserve(total.convert_to<std::size_t>());
  for_each_rect_member(n, m, diagonal, [&](const RectMatrix& t) {
    members.push_back(t);
    return true;
  });
  return RectCode{n, m, q, k, std::move(diagonal), std::move(members)};
}

bool is_cross_bibifix_free_rect_pair(const RectMatrix& a,
                                     const RectMatrix& b) {
  if (a.row_count() != b.row_count() || a.col_count() != b.col_count()) {
    throw std::invalid_argument("cross check requires equal shapes");
  }
  if (a.q() != b.q()) {
    throw std::invalid_argument("cross check requires one alphabet");
  }
  if (a == b) {
    throw std::invalid_argument("cross check requires distinct matrices");
  }
  std::size_t n = a.row_count();
  std::size_t m = a.col_count();
  for (std::size_t r = 1; r < n; ++r) {
    bool ab = true;
    bool ba = true;
    for (std::size_t i = 0; i < r && (ab || ba); ++i) {
      for (std::size_t j = 0; j < r && (ab || ba); ++j) {
        ab = ab && a.at(i, j) == b.at(n - r + i, m - r + j);
        ba = ba && b.at(i, j) == a.at(n - r + i, m - r + j);
      }
    }
    if (ab || ba) {
      return false;
    }
  }
  return true;
}

RectCrossCheck verify_cross_rect(const std::vector<RectMatrix>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!is_cross_bibifix_free_rect_pair(members[i], members[j])) {
        return {false, std::make_pair(members[i], members[j])};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace bibifix
