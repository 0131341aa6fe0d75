#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "bibifix/words.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bibifix;

namespace {

Word w2(const std::string& digits) { return Word::parse(digits, 2); }
Word w3(const std::string& digits) { return Word::parse(digits, 3); }

std::vector<std::string> strs(const WordCode& code) {
  std::vector<std::string> out;
  for (const Word& w : code.words()) {
    out.push_back(w.str());
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("words");

TEST_CASE("bifix detection on the known examples") {
  CHECK(is_bifix_free(w2("111010100")));
  CHECK_FALSE(is_bifix_free(w2("100100100")));
  CHECK(bifix_lengths(w2("100100100")) == std::vector<std::size_t>{3, 6});
  CHECK(bifix_lengths(w2("111010100")).empty());
  CHECK(is_bifix_free(w2("0")));
  CHECK_FALSE(is_bifix_free(w2("00")));
  CHECK(bifix_lengths(w2("00")) == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(is_bifix_free(Word({}, 2)), std::invalid_argument);
  CHECK_THROWS_AS(bifix_lengths(Word({}, 2)), std::invalid_argument);
}

TEST_CASE("half-depth check is equivalent to the full-depth scan") {
  for (int q : {2, 3}) {
    std::size_t max_len = q == 2 ? 12 : 8;
    for (std::size_t n = 1; n <= max_len; ++n) {
      for (const std::string& s : oracle::all_strings(n, q)) {
        Word w = Word::parse(s, q);
        bool fast = is_bifix_free(w);
        auto lengths = bifix_lengths(w);
        CAPTURE(s);
        CHECK(fast == lengths.empty());
        CHECK(fast == oracle::is_bifix_free(s));
        CHECK(lengths == oracle::bifix_lengths(s));
      }
    }
  }
}

TEST_CASE("count_bf follows the recurrence and the brute count") {
  CHECK(count_bf(1, 2) == 2);
  CHECK(count_bf(4, 2) == 6);  // brute force over the 16 binary words
  CHECK(count_bf(9, 2) == 148);
  for (int q : {2, 3}) {
    std::size_t max_len = q == 2 ? 12 : 8;
    for (std::size_t n = 1; n <= max_len; ++n) {
      BigInt counted = count_bf(n, q);
      CHECK(counted == BigInt(oracle::enumerate_bf(n, q).size()));
      CHECK(counted == BigInt(enumerate_bf(n, q).size()));
    }
  }
  CHECK_THROWS_AS(count_bf(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(count_bf(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(count_bf(4, 11), std::invalid_argument);
}

TEST_CASE("enumerate_bf yields the expected sets in lexicographic order") {
  CHECK(strs(enumerate_bf(2, 2)) == std::vector<std::string>{"01", "10"});
  CHECK(strs(enumerate_bf(4, 2)) ==
        std::vector<std::string>{"0001", "0011", "0111", "1000", "1100",
                                 "1110"});
  CHECK(strs(enumerate_bf(1, 3)) == std::vector<std::string>{"0", "1", "2"});
  CHECK_THROWS_AS(enumerate_bf(30, 2), BudgetError);
  CHECK_THROWS_AS(enumerate_bf(0, 2), std::invalid_argument);
}

TEST_CASE("cross-bifix-free pair checks") {
  CHECK(is_cross_bifix_free_pair(w2("111010100"), w2("110101010")));
  // these two share the cross-bifix 1100
  CHECK_FALSE(is_cross_bifix_free_pair(w2("111001100"), w2("110011010")));
  CHECK_FALSE(is_cross_bifix_free_pair(w2("10"), w2("01")));
  CHECK_THROWS_AS(is_cross_bifix_free_pair(w2("10"), w2("10")),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_cross_bifix_free_pair(w2("10"), w2("100")),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_cross_bifix_free_pair(w2("10"), w3("10")),
                  std::invalid_argument);
}

TEST_CASE("cross pair check is symmetric and matches the oracle") {
  auto words = enumerate_bf(5, 2).words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      bool ab = is_cross_bifix_free_pair(words[i], words[j]);
      CHECK(ab == is_cross_bifix_free_pair(words[j], words[i]));
      CHECK(ab == oracle::cross_bifix_free(words[i].str(), words[j].str()));
    }
  }
}

TEST_CASE("build_s reproduces the anchored sets") {
  CHECK(strs(build_s(3, 3, 1)) ==
        std::vector<std::string>{"100", "102", "120", "122"});
  CHECK(strs(build_s(4, 2, 1)) == std::vector<std::string>{"1000"});
  CHECK(strs(build_s(4, 2, 2)) == std::vector<std::string>{"1100"});
  CHECK_THROWS_AS(build_s(4, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_s(4, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_s(2, 2, 1), std::invalid_argument);
}

TEST_CASE("every S set is a cross-bifix-free subset of the bifix-free words") {
  for (int q : {2, 3}) {
    for (std::size_t n = 3; n <= 8; ++n) {
      auto universe = oracle::enumerate_bf(n, q);
      for (std::size_t k = 1; k + 2 <= n; ++k) {
        WordCode s = build_s(n, q, k);
        CHECK(!s.empty());
        auto members = strs(s);
        for (const std::string& w : members) {
          CAPTURE(n);
          CAPTURE(q);
          CAPTURE(k);
          CAPTURE(w);
          CHECK(std::binary_search(universe.begin(), universe.end(), w));
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (std::size_t j = i + 1; j < members.size(); ++j) {
            CHECK(oracle::cross_bifix_free(members[i], members[j]));
          }
        }
      }
    }
  }
}

TEST_CASE("select_k maximizes cardinality, smallest k on ties") {
  CHECK(select_k(3, 3) == 1);
  CHECK(select_k(4, 2) == 1);  // both k give one word; break toward k=1

  // derive the k=2 answer at n=8 from the enumerated cardinalities
  std::size_t best_k = 1;
  std::size_t best = build_s(8, 2, 1).size();
  for (std::size_t k = 2; k <= 6; ++k) {
    std::size_t size = build_s(8, 2, k).size();
    if (size > best) {
      best = size;
      best_k = k;
    }
  }
  CHECK(best_k == 2);
  CHECK(best == 8);
  CHECK(select_k(8, 2) == best_k);
  CHECK_THROWS_AS(select_k(2, 2), std::invalid_argument);
}

TEST_CASE("word set non-expandability") {
  WordCode s1000(4, 2, {w2("1000")});
  WordCode s1100(4, 2, {w2("1100")});

  // independent derivation: every other bifix-free word must conflict
  for (const auto& code : {s1000, s1100}) {
    const std::string member = code.words()[0].str();
    for (const std::string& w : oracle::enumerate_bf(4, 2)) {
      if (w != member) {
        CAPTURE(member);
        CAPTURE(w);
        CHECK_FALSE(oracle::cross_bifix_free(w, member));
      }
    }
  }

  CHECK(is_nonexpandable_word_set(s1000).nonexpandable);
  CHECK(is_nonexpandable_word_set(s1100).nonexpandable);

  auto empty = is_nonexpandable_word_set(WordCode(4, 2, {}));
  CHECK_FALSE(empty.nonexpandable);
  REQUIRE(empty.witness.has_value());
  CHECK(oracle::is_bifix_free(empty.witness->str()));

  auto s33 = is_nonexpandable_word_set(build_s(3, 3, 1));
  CHECK(s33.nonexpandable);

  // a cross violation in the input is an input error, not a verdict
  CHECK_THROWS_AS(
      is_nonexpandable_word_set(WordCode(4, 2, {w2("0001"), w2("0111")})),
      std::invalid_argument);
  // so is a member that is not bifix-free
  CHECK_THROWS_AS(
      is_nonexpandable_word_set(WordCode(4, 2, {w2("0101")})),
      std::invalid_argument);
}

TEST_CASE("word parsing and invariants") {
  CHECK(Word::parse("102", 3).str() == "102");
  CHECK_THROWS_AS(Word::parse("102", 2), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1a2", 3), std::invalid_argument);
  CHECK_THROWS_AS(Word({0, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Word({0, 1}, 11), std::invalid_argument);
  CHECK(hamming_distance(w2("100"), w2("101")) == 1);
  CHECK_THROWS_AS(hamming_distance(w2("100"), w2("10")),
                  std::invalid_argument);
  CHECK_THROWS_AS(WordCode(3, 2, {w2("100"), w2("100")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WordCode(3, 2, {w2("10")}), std::invalid_argument);
}

TEST_SUITE_END();
