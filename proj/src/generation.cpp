#include "bibifix/generation.hpp"

#include <algorithm>
#include <stdexcept>

#include "bibifix/matrices.hpp"
#include "free_cells.hpp"

namespace bibifix {

namespace {

using detail::Cell;

BigInt pow_q(int q, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(exp));
}

void require_dim(std::size_t n, const char* what) {
  if (n < 1 || n > SquareMatrix::kMaxDim) {
    throw std::invalid_argument(std::string(what) + " requires 1 <= n <= " +
                                std::to_string(SquareMatrix::kMaxDim));
  }
}

/// phi target layout: both diagonal n x n blocks inherit m, the rest free.
void expand_phi(const SquareMatrix& m, std::vector<SquareMatrix>& out) {
  std::size_t n = m.dim();
  std::size_t d = 2 * n;
  SquareMatrix base(d, m.q());
  std::vector<Cell> free_cells;
  free_cells.reserve(2 * n * n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i < n && j < n) {
        base.set(i, j, m.at(i, j));
      } else if (i >= n && j >= n) {
        base.set(i, j, m.at(i - n, j - n));
      } else {
        free_cells.emplace_back(i, j);
      }
    }
  }
  detail::for_each_filling(base, std::move(free_cells),
                           [&](const SquareMatrix& t) { out.push_back(t); });
}

/// psi target layout: one free row and one free column at index floor(n/2),
/// remaining cells inherited from m with the row/column gap skipped.
void expand_psi(const SquareMatrix& m, std::vector<SquareMatrix>& out) {
  std::size_t n = m.dim();
  std::size_t d = n + 1;
  std::size_t h = n / 2;
  SquareMatrix base(d, m.q());
  std::vector<Cell> free_cells;
  free_cells.reserve(2 * n + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i == h || j == h) {
        free_cells.emplace_back(i, j);
      } else {
        base.set(i, j, m.at(i - (i > h ? 1 : 0), j - (j > h ? 1 : 0)));
      }
    }
  }
  detail::for_each_filling(base, std::move(free_cells),
                           [&](const SquareMatrix& t) { out.push_back(t); });
}

}  // namespace

MatrixSet::MatrixSet(std::size_t n, int q, std::vector<SquareMatrix> members)
    : n_(n), q_(q), members_(std::move(members)) {
  require_alphabet(q);
  require_dim(n, "matrix set");
  for (const SquareMatrix& t : members_) {
    if (t.dim() != n || t.q() != q) {
      throw std::invalid_argument(
          "matrix set members must share one dimension and alphabet");
    }
  }
  if (!std::is_sorted(members_.begin(), members_.end())) {
    std::sort(members_.begin(), members_.end());
  }
  if (std::adjacent_find(members_.begin(), members_.end()) !=
      members_.end()) {
    throw std::invalid_argument("matrix set members must be distinct");
  }
}

bool MatrixSet::contains(const SquareMatrix& t) const {
  return std::binary_search(members_.begin(), members_.end(), t);
}

MatrixSet apply_phi(const SquareMatrix& m, std::uint64_t budget) {
  std::size_t n = m.dim();
  require_dim(2 * n, "apply_phi result");
  require_budget(pow_q(m.q(), 2 * n * n), budget, "apply_phi");
  std::vector<SquareMatrix> out;
  expand_phi(m, out);
  return MatrixSet(2 * n, m.q(), std::move(out));
}

MatrixSet apply_psi(const SquareMatrix& m, std::uint64_t budget) {
  std::size_t n = m.dim();
  require_dim(n + 1, "apply_psi result");
  require_budget(pow_q(m.q(), 2 * n + 1), budget, "apply_psi");
  std::vector<SquareMatrix> out;
  expand_psi(m, out);
  return MatrixSet(n + 1, m.q(), std::move(out));
}

MatrixSet generate_bbf(std::size_t n, int q, GenerateMethod method,
                       std::uint64_t budget) {
  require_alphabet(q);
  require_dim(n, "generate_bbf");
  if (method == GenerateMethod::kBrute) {
    return brute_bbf(n, q, budget);
  }

  // check every level before expanding any, so an over-budget target fails
  // without first materializing the (possibly huge) intermediate levels
  for (std::size_t m = 2; m <= n; ++m) {
    BigInt psi_size = count_bbf(m - 1, q) * pow_q(q, 2 * m - 1);
    BigInt phi_size =
        (m % 2 == 0) ? count_bbf(m / 2, q) * pow_q(q, m * m / 2) : BigInt(0);
    require_budget(psi_size + phi_size, budget, "generate_bbf");
  }

  std::vector<std::vector<SquareMatrix>> levels(n + 1);
  levels[1].reserve(q);
  for (int s = 0; s < q; ++s) {
    SquareMatrix t(1, q);
    t.set(0, 0, static_cast<Symbol>(s));
    levels[1].push_back(t);
  }

  for (std::size_t m = 2; m <= n; ++m) {
    BigInt psi_size = count_bbf(m - 1, q) * pow_q(q, 2 * m - 1);

    std::vector<SquareMatrix> image;
    image.reserve(psi_size.convert_to<std::size_t>());
    for (const SquareMatrix& t : levels[m - 1]) {
      expand_psi(t, image);
    }
    std::sort(image.begin(), image.end());

    if (m % 2 == 0) {
      // Every non-bibifix-free psi image is a phi image of the half-size
      // set; remove those instead of re-testing bibifix-freeness.
      BigInt phi_size = count_bbf(m / 2, q) * pow_q(q, m * m / 2);
      std::vector<SquareMatrix> removed;
      removed.reserve(phi_size.convert_to<std::size_t>());
      for (const SquareMatrix& d : levels[m / 2]) {
        expand_phi(d, removed);
      }
      std::sort(removed.begin(), removed.end());
      std::vector<SquareMatrix> kept;
      kept.reserve(image.size() - removed.size());
      std::set_difference(image.begin(), image.end(), removed.begin(),
                          removed.end(), std::back_inserter(kept));
      levels[m] = std::move(kept);
    } else {
      levels[m] = std::move(image);
    }
  }
  return MatrixSet(n, q, std::move(levels[n]));
}

BigInt count_bbf(std::size_t n, int q) {
  require_alphabet(q);
  if (n < 1) {
    throw std::invalid_argument("count_bbf requires n >= 1");
  }
  std::vector<BigInt> bbf(n + 1);
  bbf[1] = q;
  for (std::size_t m = 2; m <= n; ++m) {
    bbf[m] = pow_q(q, 2 * m - 1) * bbf[m - 1];
    if (m % 2 == 0) {
      bbf[m] -= pow_q(q, m * m / 2) * bbf[m / 2];
    }
  }
  return bbf[n];
}

MatrixSet brute_bbf(std::size_t n, int q, std::uint64_t budget) {
  require_alphabet(q);
  require_dim(n, "brute_bbf");
  require_budget(pow_q(q, n * n), budget, "brute_bbf");
  std::vector<Cell> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cells.emplace_back(i, j);
    }
  }
  std::vector<SquareMatrix> out;
  detail::for_each_filling(SquareMatrix(n, q), std::move(cells),
                           [&](const SquareMatrix& t) {
                             if (bibifix_dims(t).empty()) {
                               out.push_back(t);
                             }
                           });
  return MatrixSet(n, q, std::move(out));
}

}  // namespace bibifix
