#include "bibifix/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace bibifix {

Word::Word(std::vector<Symbol> symbols, int q)
    : symbols_(std::move(symbols)), q_(static_cast<std::uint8_t>(q)) {
  require_alphabet(q);
  for (Symbol s : symbols_) {
    if (s >= q) {
      throw std::invalid_argument("symbol " + std::to_string(int(s)) +
                                  " outside alphabet of size " +
                                  std::to_string(q));
    }
  }
}

Word Word::parse(std::string_view digits, int q) {
  require_alphabet(q);
  std::vector<Symbol> symbols;
  symbols.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("word must consist of digits, got '" +
                                  std::string(digits) + "'");
    }
    symbols.push_back(static_cast<Symbol>(c - '0'));
  }
  return Word(std::move(symbols), q);
}

Word Word::prefix(std::size_t len) const {
  if (len > length()) {
    throw std::invalid_argument("prefix length exceeds word length");
  }
  return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + len),
              q_);
}

Word Word::suffix(std::size_t len) const {
  if (len > length()) {
    throw std::invalid_argument("suffix length exceeds word length");
  }
  return Word(std::vector<Symbol>(symbols_.end() - len, symbols_.end()), q_);
}

std::string Word::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) {
    out.push_back(static_cast<char>('0' + s));
  }
  return out;
}

std::size_t hamming_distance(const Word& a, const Word& b) {
  if (a.length() != b.length()) {
    throw std::invalid_argument("hamming distance needs equal-length words");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.length(); ++i) {
    d += a[i] != b[i];
  }
  return d;
}

}  // namespace bibifix
