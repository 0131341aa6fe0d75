#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "bibifix/graycode.hpp"
#include "bibifix/matrices.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bibifix;

namespace {

std::vector<std::string> strs(const GrayListing<Word>& listing) {
  std::vector<std::string> out;
  for (const Word& w : listing.items) {
    out.push_back(w.str());
  }
  return out;
}

Word random_word(std::size_t len, int q, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, q - 1);
  std::vector<Symbol> symbols(len);
  for (auto& s : symbols) {
    s = static_cast<Symbol>(dist(rng));
  }
  return Word(std::move(symbols), q);
}

}  // namespace

TEST_SUITE_BEGIN("graycode");

TEST_CASE("reflected_gray matches the recursive definition") {
  CHECK(strs(reflected_gray(1, 2)) == std::vector<std::string>{"0", "1"});
  CHECK(strs(reflected_gray(2, 2)) ==
        std::vector<std::string>{"00", "01", "11", "10"});
  for (int q : {2, 3}) {
    std::size_t max_len = q == 2 ? 8 : 5;
    for (std::size_t n = 0; n <= max_len; ++n) {
      CAPTURE(n);
      CAPTURE(q);
      CHECK(strs(reflected_gray(n, q)) == oracle::reflected_gray(n, q));
    }
  }
  CHECK_THROWS_AS(reflected_gray(30, 2), BudgetError);
}

TEST_CASE("the 729-word ternary list is a Gray code") {
  GrayListing<Word> listing = reflected_gray(6, 3);
  REQUIRE(listing.items.size() == 729);
  CHECK(listing.items[0].str() == "000000");
  CHECK(listing.items[1].str() == "000001");
  CHECK(listing.items[2].str() == "000002");
  CHECK(listing.items.back().str() == "222222");
  CHECK(verify_gray(listing).ok);
}

TEST_CASE("f_index reproduces the 4x4 linearization layout") {
  // lower triangle first, column by column, then the upper triangle
  CHECK(f_index(2, 1, 4) == 1);
  CHECK(f_index(3, 1, 4) == 2);
  CHECK(f_index(4, 1, 4) == 3);
  CHECK(f_index(3, 2, 4) == 4);
  CHECK(f_index(4, 2, 4) == 5);
  CHECK(f_index(4, 3, 4) == 6);
  CHECK(f_index(1, 2, 4) == 7);
  CHECK(f_index(1, 3, 4) == 8);
  CHECK(f_index(2, 3, 4) == 9);
  CHECK(f_index(1, 4, 4) == 10);
  CHECK(f_index(2, 4, 4) == 11);
  CHECK(f_index(3, 4, 4) == 12);
  CHECK_THROWS_AS(f_index(2, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(f_index(0, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(f_index(2, 5, 4), std::invalid_argument);
}

TEST_CASE("f_index is a bijection onto 1..n^2-n") {
  for (std::size_t n = 2; n <= 8; ++n) {
    std::set<std::size_t> seen;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (i != j) {
          auto f = f_index(i, j, n);
          CHECK(f >= 1);
          CHECK(f <= n * n - n);
          CHECK(seen.insert(f).second);
        }
      }
    }
    CHECK(seen.size() == n * n - n);
  }
}

TEST_CASE("offdiag_decode rebuilds the worked 4x4 ternary example") {
  Word w = Word::parse("121201100020", 3);
  Word diag = Word::parse("0120", 3);
  SquareMatrix t = offdiag_decode(w, diag);
  CHECK(t.str() == "0100/1102/2220/1010");
  CHECK(offdiag_encode(t) == w);
  CHECK(main_diagonal(t) == diag);

  SquareMatrix zero = offdiag_decode(Word::parse("000000000000", 3),
                                     Word::parse("0000", 3));
  CHECK(zero == SquareMatrix(4, 3));

  CHECK_THROWS_AS(offdiag_decode(Word::parse("0", 2), Word::parse("01", 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(offdiag_decode(Word::parse("01", 2), Word::parse("01", 3)),
                  std::invalid_argument);
}

TEST_CASE("encode and decode are mutually inverse") {
  std::mt19937 rng(424242);
  for (int sample = 0; sample < 100; ++sample) {
    std::size_t n = 2 + sample % 5;
    int q = 2 + sample % 3;
    Word offdiag = random_word(n * n - n, q, rng);
    Word diag = random_word(n, q, rng);
    SquareMatrix t = offdiag_decode(offdiag, diag);
    CHECK(offdiag_encode(t) == offdiag);
    CHECK(main_diagonal(t) == diag);
  }
}

TEST_CASE("diagonal_gray orders S_3^3 the known way") {
  GrayListing<Word> order = diagonal_gray(build_s(3, 3, 1));
  CHECK(strs(order) ==
        std::vector<std::string>{"100", "102", "122", "120"});
  CHECK(verify_gray(order).ok);

  GrayListing<Word> single =
      diagonal_gray(WordCode(4, 2, {Word::parse("1000", 2)}));
  CHECK(strs(single) == std::vector<std::string>{"1000"});

  // 1000 and 0111 sit at Hamming distance 4: no ordering exists
  CHECK_THROWS_AS(diagonal_gray(WordCode(
                      4, 2, {Word::parse("1000", 2), Word::parse("0111", 2)})),
                  NoGrayOrderError);
  CHECK_THROWS_AS(diagonal_gray(WordCode(3, 2, {})), std::invalid_argument);
}

TEST_CASE("build_cbbf_gray lists the 3x3 ternary code") {
  GrayListing<SquareMatrix> listing = build_cbbf_gray(3, 3);
  REQUIRE(listing.items.size() == 2916);
  CHECK(listing.items.front().str() == "100/000/000");
  CHECK(listing.items[1].str() == "100/001/000");
  CHECK(listing.items.back().str() == "100/020/000");

  auto check = verify_gray(listing);
  CHECK(check.ok);

  // the listing is a permutation of the constructed code
  std::vector<SquareMatrix> sorted = listing.items;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == build_cbbf(3, 3).members().members());
}

TEST_CASE("block seams change one diagonal entry and keep the rest") {
  GrayListing<SquareMatrix> listing = build_cbbf_gray(3, 3);
  std::size_t block = 729;  // q^(n^2-n)
  for (std::size_t seam = block; seam < listing.items.size(); seam += block) {
    const SquareMatrix& before = listing.items[seam - 1];
    const SquareMatrix& after = listing.items[seam];
    CHECK(offdiag_encode(before) == offdiag_encode(after));
    CHECK(hamming_distance(main_diagonal(before), main_diagonal(after)) == 1);
  }
}

TEST_CASE("build_cbbf_gray covers the binary case and streams lazily") {
  GrayListing<SquareMatrix> listing = build_cbbf_gray(3, 2);
  CHECK(listing.items.size() == 64);
  CHECK(verify_gray(listing).ok);

  std::size_t visited = 0;
  for_each_cbbf_gray(3, 2, {}, [&](const SquareMatrix&) {
    return ++visited < 5;
  });
  CHECK(visited == 5);
}

TEST_CASE("verify_gray flags violations with their index") {
  GrayListing<Word> listing = reflected_gray(2, 2);

  GrayListing<Word> repeated = listing;
  repeated.items.push_back(Word::parse("11", 2));  // revisits index 2
  auto rep = verify_gray(repeated);
  CHECK_FALSE(rep.ok);
  CHECK(rep.offending_index == 4);

  GrayListing<Word> jump = listing;
  jump.items[2] = Word::parse("10", 2);  // distance 2 from 01, repeats too
  auto verdict = verify_gray(jump);
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.offending_index == 2);
}

TEST_SUITE_END();
