#pragma once

// JSONL framing for sets, codes, and listings: one header record carrying
// kind/dimensions/count, then one record per item, canonical order.  Every
// stream written here re-parses into the identical in-memory object.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "bibifix/codes.hpp"
#include "bibifix/generation.hpp"
#include "bibifix/graycode.hpp"
#include "bibifix/words.hpp"

namespace bibifix::jsonl {

// ---- line builders (used by the streaming CLI paths) ----

std::string word_set_header(std::string_view kind, const WordCode& code);
std::string matrix_set_header(std::string_view kind, std::size_t n, int q,
                              std::uint64_t count);
std::string matrix_code_header(std::size_t n, int q,
                               std::optional<std::size_t> k,
                               const WordCode& diagonal, std::uint64_t count);
std::string rect_code_header(std::size_t n, std::size_t m, int q,
                             std::optional<std::size_t> k,
                             const WordCode& diagonal, std::uint64_t count);
std::string listing_header(std::string_view kind, std::size_t n, int q,
                           std::optional<std::size_t> k,
                           std::uint64_t count);

std::string item_line(const Word& w);
std::string item_line(const SquareMatrix& t);
std::string item_line(const RectMatrix& t);
std::string listing_item_line(std::size_t seq, const Word& w);
std::string listing_item_line(std::size_t seq, const SquareMatrix& t);

std::string witness_line(std::string_view reason, const SquareMatrix& t);
std::string conflict_line(std::string_view reason, const SquareMatrix& a,
                          const SquareMatrix& b);
std::string conflict_line(std::string_view reason, const RectMatrix& a,
                          const RectMatrix& b);
std::string verdict_line(bool ok, std::optional<std::size_t> index,
                         std::uint64_t count);

// ---- whole-object writers ----

void write_word_code(std::ostream& out, std::string_view kind,
                     const WordCode& code);
void write_matrix_set(std::ostream& out, std::string_view kind,
                      const MatrixSet& set);
void write_matrix_code(std::ostream& out, const MatrixCode& code);
void write_rect_code(std::ostream& out, const RectCode& code);
void write_matrix_listing(std::ostream& out, std::string_view kind,
                          std::optional<std::size_t> k,
                          const GrayListing<SquareMatrix>& listing);
void write_word_listing(std::ostream& out, std::string_view kind,
                        const GrayListing<Word>& listing);

// ---- readers (inverse of the writers above) ----

WordCode read_word_code(std::istream& in);
MatrixSet read_matrix_set(std::istream& in);
MatrixCode read_matrix_code(std::istream& in);
RectCode read_rect_code(std::istream& in);
GrayListing<SquareMatrix> read_matrix_listing(std::istream& in);
GrayListing<Word> read_word_listing(std::istream& in);

}  // namespace bibifix::jsonl
