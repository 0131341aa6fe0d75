#include "bibifix/jsonl.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace bibifix::jsonl {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(); }

Json base_header(std::string_view kind, std::size_t n, int q,
                 std::uint64_t count) {
  Json j;
  j["kind"] = kind;
  j["n"] = n;
  j["q"] = q;
  j["count"] = count;
  return j;
}

Json parse_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument(std::string("unexpected end of ") + what);
  }
  return Json::parse(line);  // throws nlohmann's parse_error on bad input
}

Json read_header(std::istream& in, std::string_view expected_kind) {
  Json header = parse_line(in, "stream (missing header)");
  if (header.value("kind", std::string()) != expected_kind) {
    throw std::invalid_argument("expected a \"" +
                                std::string(expected_kind) +
                                "\" header, got: " + header.dump());
  }
  return header;
}

std::optional<std::size_t> header_k(const Json& header) {
  if (!header.contains("k") || header["k"].is_null()) {
    return std::nullopt;
  }
  return header["k"].get<std::size_t>();
}

}  // namespace

std::string word_set_header(std::string_view kind, const WordCode& code) {
  return dump(
      base_header(kind, code.word_length(), code.q(), code.size()));
}

std::string matrix_set_header(std::string_view kind, std::size_t n, int q,
                              std::uint64_t count) {
  return dump(base_header(kind, n, q, count));
}

std::string matrix_code_header(std::size_t n, int q,
                               std::optional<std::size_t> k,
                               const WordCode& diagonal,
                               std::uint64_t count) {
  Json j = base_header("cbbf", n, q, count);
  j["k"] = k ? Json(*k) : Json(nullptr);
  Json words = Json::array();
  for (const Word& w : diagonal.words()) {
    words.push_back(w.str());
  }
  j["diagonal"] = std::move(words);
  return dump(j);
}

std::string rect_code_header(std::size_t n, std::size_t m, int q,
                             std::optional<std::size_t> k,
                             const WordCode& diagonal, std::uint64_t count) {
  Json j = base_header("cbbf-rect", n, q, count);
  j["m"] = m;
  j["k"] = k ? Json(*k) : Json(nullptr);
  Json words = Json::array();
  for (const Word& w : diagonal.words()) {
    words.push_back(w.str());
  }
  j["diagonal"] = std::move(words);
  return dump(j);
}

std::string listing_header(std::string_view kind, std::size_t n, int q,
                           std::optional<std::size_t> k,
                           std::uint64_t count) {
  Json j = base_header(kind, n, q, count);
  if (k) {
    j["k"] = *k;
  }
  return dump(j);
}

std::string item_line(const Word& w) {
  return dump(Json{{"word", w.str()}});
}

std::string item_line(const SquareMatrix& t) {
  return dump(Json{{"matrix", t.str()}});
}

std::string item_line(const RectMatrix& t) {
  return dump(Json{{"matrix", t.str()}});
}

std::string listing_item_line(std::size_t seq, const Word& w) {
  return dump(Json{{"seq", seq}, {"word", w.str()}});
}

std::string listing_item_line(std::size_t seq, const SquareMatrix& t) {
  return dump(Json{{"seq", seq}, {"matrix", t.str()}});
}

std::string witness_line(std::string_view reason, const SquareMatrix& t) {
  return dump(Json{{"reason", reason}, {"matrix", t.str()}});
}

std::string conflict_line(std::string_view reason, const SquareMatrix& a,
                          const SquareMatrix& b) {
  return dump(Json{{"reason", reason}, {"first", a.str()},
                   {"second", b.str()}});
}

std::string conflict_line(std::string_view reason, const RectMatrix& a,
                          const RectMatrix& b) {
  return dump(Json{{"reason", reason}, {"first", a.str()},
                   {"second", b.str()}});
}

std::string verdict_line(bool ok, std::optional<std::size_t> index,
                         std::uint64_t count) {
  Json j;
  j["kind"] = "verdict";
  j["ok"] = ok;
  if (index) {
    j["index"] = *index;
  }
  j["count"] = count;
  return dump(j);
}

void write_word_code(std::ostream& out, std::string_view kind,
                     const WordCode& code) {
  out << word_set_header(kind, code) << '\n';
  for (const Word& w : code.words()) {
    out << item_line(w) << '\n';
  }
}

void write_matrix_set(std::ostream& out, std::string_view kind,
                      const MatrixSet& set) {
  out << matrix_set_header(kind, set.dim(), set.q(), set.size()) << '\n';
  for (const SquareMatrix& t : set.members()) {
    out << item_line(t) << '\n';
  }
}

void write_matrix_code(std::ostream& out, const MatrixCode& code) {
  out << matrix_code_header(code.dim(), code.q(), code.k(),
                            code.diagonal_code(), code.members().size())
      << '\n';
  for (const SquareMatrix& t : code.members().members()) {
    out << item_line(t) << '\n';
  }
}

void write_rect_code(std::ostream& out, const RectCode& code) {
  out << rect_code_header(code.n, code.m, code.q, code.k, code.diagonal_code,
                          code.members.size())
      << '\n';
  for (const RectMatrix& t : code.members) {
    out << item_line(t) << '\n';
  }
}

void write_matrix_listing(std::ostream& out, std::string_view kind,
                          std::optional<std::size_t> k,
                          const GrayListing<SquareMatrix>& listing) {
  out << listing_header(kind, listing.n, listing.q, k, listing.items.size())
      << '\n';
  for (std::size_t i = 0; i < listing.items.size(); ++i) {
    out << listing_item_line(i, listing.items[i]) << '\n';
  }
}

void write_word_listing(std::ostream& out, std::string_view kind,
                        const GrayListing<Word>& listing) {
  out << listing_header(kind, listing.n, listing.q, std::nullopt,
                        listing.items.size())
      << '\n';
  for (std::size_t i = 0; i < listing.items.size(); ++i) {
    out << listing_item_line(i, listing.items[i]) << '\n';
  }
}

WordCode read_word_code(std::istream& in) {
  Json header = parse_line(in, "word code stream");
  std::size_t n = header.at("n").get<std::size_t>();
  int q = header.at("q").get<int>();
  std::uint64_t count = header.at("count").get<std::uint64_t>();
  std::vector<Word> words;
  words.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Json item = parse_line(in, "word code stream");
    words.push_back(Word::parse(item.at("word").get<std::string>(), q));
  }
  return WordCode(n, q, std::move(words));
}

MatrixSet read_matrix_set(std::istream& in) {
  Json header = parse_line(in, "matrix set stream");
  std::size_t n = header.at("n").get<std::size_t>();
  int q = header.at("q").get<int>();
  std::uint64_t count = header.at("count").get<std::uint64_t>();
  std::vector<SquareMatrix> members;
  members.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Json item = parse_line(in, "matrix set stream");
    members.push_back(
        SquareMatrix::parse(item.at("matrix").get<std::string>(), q));
  }
  return MatrixSet(n, q, std::move(members));
}

MatrixCode read_matrix_code(std::istream& in) {
  Json header = read_header(in, "cbbf");
  std::size_t n = header.at("n").get<std::size_t>();
  int q = header.at("q").get<int>();
  std::uint64_t count = header.at("count").get<std::uint64_t>();
  std::vector<Word> words;
  for (const auto& w : header.at("diagonal")) {
    words.push_back(Word::parse(w.get<std::string>(), q));
  }
  std::vector<SquareMatrix> members;
  members.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Json item = parse_line(in, "matrix code stream");
    members.push_back(
        SquareMatrix::parse(item.at("matrix").get<std::string>(), q));
  }
  return MatrixCode(MatrixSet(n, q, std::move(members)),
                    WordCode(n, q, std::move(words)), header_k(header));
}

RectCode read_rect_code(std::istream& in) {
  Json header = read_header(in, "cbbf-rect");
  std::size_t n = header.at("n").get<std::size_t>();
  std::size_t m = header.at("m").get<std::size_t>();
  int q = header.at("q").get<int>();
  std::uint64_t count = header.at("count").get<std::uint64_t>();
  std::vector<Word> words;
  for (const auto& w : header.at("diagonal")) {
    words.push_back(Word::parse(w.get<std::string>(), q));
  }
  std::vector<RectMatrix> members;
  members.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Json item = parse_line(in, "rect code stream");
    members.push_back(
        RectMatrix::parse(item.at("matrix").get<std::string>(), q));
  }
  return RectCode{n,
                  m,
                  q,
                  header_k(header),
                  WordCode(n, q, std::move(words)),
                  std::move(members)};
}

GrayListing<SquareMatrix> read_matrix_listing(std::istream& in) {
  Json header = parse_line(in, "matrix listing stream");
  std::size_t n = header.at("n").get<std::size_t>();
  int q = header.at("q").get<int>();
  std::uint64_t count = header.at("count").get<std::uint64_t>();
  GrayListing<SquareMatrix> listing{n, q, {}};
  listing.items.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Json item = parse_line(in, "matrix listing stream");
    if (item.at("seq").get<std::uint64_t>() != i) {
      throw std::invalid_argument("listing sequence numbers out of order");
    }
    listing.items.push_back(
        SquareMatrix::parse(item.at("matrix").get<std::string>(), q));
  }
  return listing;
}

GrayListing<Word> read_word_listing(std::istream& in) {
  Json header = parse_line(in, "word listing stream");
  std::size_t n = header.at("n").get<std::size_t>();
  int q = header.at("q").get<int>();
  std::uint64_t count = header.at("count").get<std::uint64_t>();
  GrayListing<Word> listing{n, q, {}};
  listing.items.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Json item = parse_line(in, "word listing stream");
    if (item.at("seq").get<std::uint64_t>() != i) {
      throw std::invalid_argument("listing sequence numbers out of order");
    }
    listing.items.push_back(
        Word::parse(item.at("word").get<std::string>(), q));
  }
  return listing;
}

}  // namespace bibifix::jsonl
