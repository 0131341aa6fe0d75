#include "bibifix/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace bibifix {

namespace {

void require_nonempty(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("operation requires a nonempty word");
  }
}

bool prefix_equals_suffix(const Word& a, const Word& b, std::size_t len) {
  // length-len prefix of a vs length-len suffix of b
  std::size_t off = b.length() - len;
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != b[off + i]) {
      return false;
    }
  }
  return true;
}

/// Runs fn on every word of length n whose position i draws from
/// allowed[i] (ascending), in lexicographic order.
template <typename Fn>
void for_each_assignment(const std::vector<std::vector<Symbol>>& allowed,
                         int q, Fn&& fn) {
  std::size_t n = allowed.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<Symbol> symbols(n);
  for (std::size_t i = 0; i < n; ++i) {
    symbols[i] = allowed[i][0];
  }
  while (true) {
    fn(Word(symbols, q));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (idx[pos] + 1 < allowed[pos].size()) {
        ++idx[pos];
        symbols[pos] = allowed[pos][idx[pos]];
        break;
      }
      idx[pos] = 0;
      symbols[pos] = allowed[pos][0];
      if (pos == 0) {
        return;
      }
    }
    if (n == 0) {
      return;
    }
  }
}

}  // namespace

WordCode::WordCode(std::size_t word_length, int q, std::vector<Word> words)
    : word_length_(word_length), q_(q), words_(std::move(words)) {
  require_alphabet(q);
  if (word_length < 1) {
    throw std::invalid_argument("word length must be at least 1");
  }
  for (const Word& w : words_) {
    if (w.length() != word_length || w.q() != q) {
      throw std::invalid_argument(
          "word code members must share one length and alphabet");
    }
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    throw std::invalid_argument("word code members must be distinct");
  }
}

bool WordCode::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

bool is_bifix_free(const Word& w) {
  require_nonempty(w);
  std::size_t n = w.length();
  for (std::size_t i = 1; i <= n / 2; ++i) {
    if (prefix_equals_suffix(w, w, i)) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> bifix_lengths(const Word& w) {
  require_nonempty(w);
  std::size_t n = w.length();
  std::vector<std::size_t> lengths;
  for (std::size_t i = 1; i < n; ++i) {
    if (prefix_equals_suffix(w, w, i)) {
      lengths.push_back(i);
    }
  }
  return lengths;
}

BigInt count_bf(std::size_t n, int q) {
  require_alphabet(q);
  if (n < 1) {
    throw std::invalid_argument("count_bf requires n >= 1");
  }
  std::vector<BigInt> bf(n + 1);
  bf[1] = q;
  for (std::size_t m = 2; m <= n; ++m) {
    bf[m] = q * bf[m - 1];
    if (m % 2 == 0) {
      bf[m] -= bf[m / 2];
    }
  }
  return bf[n];
}

WordCode enumerate_bf(std::size_t n, int q, std::uint64_t budget) {
  require_alphabet(q);
  if (n < 1) {
    throw std::invalid_argument("enumerate_bf requires n >= 1");
  }
  require_budget(boost::multiprecision::pow(BigInt(q), unsigned(n)), budget,
                 "enumerate_bf");
  std::vector<Symbol> all(q);
  for (int s = 0; s < q; ++s) {
    all[s] = static_cast<Symbol>(s);
  }
  std::vector<std::vector<Symbol>> allowed(n, all);
  std::vector<Word> out;
  for_each_assignment(allowed, q, [&](const Word& w) {
    // full-depth scan; keeps this enumeration an oracle for count_bf
    if (bifix_lengths(w).empty()) {
      out.push_back(w);
    }
  });
  return WordCode(n, q, std::move(out));
}

bool is_cross_bifix_free_pair(const Word& a, const Word& b) {
  require_nonempty(a);
  require_nonempty(b);
  if (a.length() != b.length()) {
    throw std::invalid_argument("cross check requires equal-length words");
  }
  if (a.q() != b.q()) {
    throw std::invalid_argument("cross check requires one alphabet");
  }
  if (a == b) {
    throw std::invalid_argument("cross check requires distinct words");
  }
  std::size_t n = a.length();
  for (std::size_t i = 1; i < n; ++i) {
    if (prefix_equals_suffix(a, b, i) || prefix_equals_suffix(b, a, i)) {
      return false;
    }
  }
  return true;
}

WordCode build_s(std::size_t n, int q, std::size_t k) {
  require_alphabet(q);
  if (n < 3) {
    throw std::invalid_argument("build_s requires n >= 3");
  }
  if (k < 1 || k > n - 2) {
    throw std::invalid_argument("build_s requires 1 <= k <= n-2");
  }
  std::vector<Symbol> not_one;
  for (int s = 0; s < q; ++s) {
    if (s != 1) {
      not_one.push_back(static_cast<Symbol>(s));
    }
  }
  std::vector<Symbol> all(q);
  for (int s = 0; s < q; ++s) {
    all[s] = static_cast<Symbol>(s);
  }
  // positions (0-based): [0, k) forced to 1; k and n-1 differ from 1;
  // the window [k+1, n-2] is free but must avoid a run of k ones.
  std::vector<std::vector<Symbol>> allowed(n, all);
  for (std::size_t i = 0; i < k; ++i) {
    allowed[i] = {Symbol{1}};
  }
  allowed[k] = not_one;
  allowed[n - 1] = not_one;

  std::vector<Word> out;
  for_each_assignment(allowed, q, [&](const Word& w) {
    std::size_t run = 0;
    for (std::size_t i = k + 1; i + 1 < n; ++i) {
      run = (w[i] == 1) ? run + 1 : 0;
      if (run >= k) {
        return;
      }
    }
    out.push_back(w);
  });
  return WordCode(n, q, std::move(out));
}

std::size_t select_k(std::size_t n, int q) {
  require_alphabet(q);
  if (n < 3) {
    throw std::invalid_argument("select_k requires n >= 3");
  }
  std::size_t best_k = 1;
  std::size_t best_size = build_s(n, q, 1).size();
  for (std::size_t k = 2; k <= n - 2; ++k) {
    std::size_t size = build_s(n, q, k).size();
    if (size > best_size) {
      best_size = size;
      best_k = k;
    }
  }
  return best_k;
}

WordSetExpansion is_nonexpandable_word_set(const WordCode& code,
                                           std::uint64_t budget) {
  const auto& members = code.words();
  for (const Word& w : members) {
    if (!bifix_lengths(w).empty()) {
      throw std::invalid_argument("code member " + w.str() +
                                  " is not bifix-free");
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!is_cross_bifix_free_pair(members[i], members[j])) {
        throw std::invalid_argument("code is not cross-bifix-free: " +
                                    members[i].str() + " vs " +
                                    members[j].str());
      }
    }
  }
  WordCode universe = enumerate_bf(code.word_length(), code.q(), budget);
  for (const Word& w : universe.words()) {
    if (code.contains(w)) {
      continue;
    }
    bool conflicts = false;
    for (const Word& member : members) {
      if (!is_cross_bifix_free_pair(w, member)) {
        conflicts = true;
        break;
      }
    }
    if (!conflicts) {
      return {false, w};
    }
  }
  return {true, std::nullopt};
}

}  // namespace bibifix
