#include "bibifix/matrix.hpp"

#include <stdexcept>

namespace bibifix {

namespace {

Symbol parse_digit(char c, int q, const char* what) {
  if (c < '0' || c > '9') {
    throw std::invalid_argument(std::string(what) + " rows must be digits");
  }
  int v = c - '0';
  if (v >= q) {
    throw std::invalid_argument(std::string(what) + " entry " +
                                std::to_string(v) +
                                " outside alphabet of size " +
                                std::to_string(q));
  }
  return static_cast<Symbol>(v);
}

std::vector<std::string> split_rows(std::string_view text) {
  std::vector<std::string> rows;
  std::size_t start = 0;
  while (true) {
    std::size_t slash = text.find('/', start);
    if (slash == std::string_view::npos) {
      rows.emplace_back(text.substr(start));
      return rows;
    }
    rows.emplace_back(text.substr(start, slash - start));
    start = slash + 1;
  }
}

}  // namespace

SquareMatrix::SquareMatrix(std::size_t n, int q)
    : n_(static_cast<std::uint8_t>(n)), q_(static_cast<std::uint8_t>(q)) {
  require_alphabet(q);
  if (n < 1 || n > kMaxDim) {
    throw std::invalid_argument("matrix dimension must be in [1, " +
                                std::to_string(kMaxDim) + "], got " +
                                std::to_string(n));
  }
  cells_.fill(0);
}

SquareMatrix SquareMatrix::parse(std::string_view text, int q) {
  return from_rows(split_rows(text), q);
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::string>& rows,
                                     int q) {
  std::size_t n = rows.size();
  if (n < 1 || n > kMaxDim) {
    throw std::invalid_argument("square matrix must have 1 to " +
                                std::to_string(kMaxDim) + " rows");
  }
  SquareMatrix t(n, q);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw std::invalid_argument("matrix is not square: row " +
                                  std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      t.set(i, j, parse_digit(rows[i][j], q, "matrix"));
    }
  }
  return t;
}

std::string SquareMatrix::str() const {
  std::string out;
  out.reserve(n_ * (n_ + 1));
  for (std::size_t i = 0; i < n_; ++i) {
    if (i > 0) {
      out.push_back('/');
    }
    for (std::size_t j = 0; j < n_; ++j) {
      out.push_back(static_cast<char>('0' + at(i, j)));
    }
  }
  return out;
}

std::vector<std::string> SquareMatrix::rows() const {
  std::vector<std::string> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i].reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      out[i].push_back(static_cast<char>('0' + at(i, j)));
    }
  }
  return out;
}

RectMatrix::RectMatrix(std::size_t n, std::size_t m, int q)
    : n_(static_cast<std::uint8_t>(n)),
      m_(static_cast<std::uint8_t>(m)),
      q_(static_cast<std::uint8_t>(q)) {
  require_alphabet(q);
  if (n < 1 || n >= m) {
    throw std::invalid_argument(
        "rectangular matrix needs 1 <= rows < columns, got " +
        std::to_string(n) + "x" + std::to_string(m));
  }
  if (n * m > kMaxCells) {
    throw std::invalid_argument("rectangular matrix exceeds " +
                                std::to_string(kMaxCells) + " cells");
  }
  cells_.fill(0);
}

RectMatrix RectMatrix::parse(std::string_view text, int q) {
  auto rows = split_rows(text);
  std::size_t n = rows.size();
  if (n < 1) {
    throw std::invalid_argument("empty matrix");
  }
  std::size_t m = rows[0].size();
  RectMatrix t(n, m, q);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m) {
      throw std::invalid_argument("ragged rows in rectangular matrix");
    }
    for (std::size_t j = 0; j < m; ++j) {
      t.set(i, j, parse_digit(rows[i][j], q, "matrix"));
    }
  }
  return t;
}

std::string RectMatrix::str() const {
  std::string out;
  out.reserve(n_ * (m_ + 1));
  for (std::size_t i = 0; i < n_; ++i) {
    if (i > 0) {
      out.push_back('/');
    }
    for (std::size_t j = 0; j < m_; ++j) {
      out.push_back(static_cast<char>('0' + at(i, j)));
    }
  }
  return out;
}

std::size_t hamming_distance(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("hamming distance needs equal dimensions");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      d += a.at(i, j) != b.at(i, j);
    }
  }
  return d;
}

}  // namespace bibifix
