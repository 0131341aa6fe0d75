// Command-line front end: checking words and matrices, counting, exhaustive
// generation, code construction, verification, and Gray listings.  Streams
// JSONL with a header record; exit codes: 0 pass, 1 verified false (or input
// not free), 2 usage or input error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bibifix/codes.hpp"
#include "bibifix/generation.hpp"
#include "bibifix/graycode.hpp"
#include "bibifix/jsonl.hpp"
#include "bibifix/matrices.hpp"
#include "bibifix/words.hpp"

namespace {

using namespace bibifix;

constexpr int kExitPass = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

/// Results larger than this need --stress: they are materialized (or
/// scanned against a materialized set) in memory.
constexpr std::uint64_t kStressThreshold = std::uint64_t{1} << 20;

struct Config {
  std::size_t n = 0;
  std::size_t m = 0;
  int q = 2;
  std::optional<std::size_t> k;
  std::vector<std::string> diagonal;
  std::string method = "recursive";
  std::string out_path;
  std::string format = "jsonl";
  std::uint64_t budget = kDefaultBudget;
  bool check_only = false;
  bool stress = false;
  std::string input;  // word or matrix text for `check`
};

std::ostream& open_sink(const Config& config, std::ofstream& file) {
  if (config.out_path.empty()) {
    return std::cout;
  }
  file.open(config.out_path);
  if (!file) {
    throw std::invalid_argument("cannot open output file " + config.out_path);
  }
  return file;
}

bool jsonl_format(const Config& config) {
  if (config.format != "jsonl" && config.format != "text") {
    throw std::invalid_argument("format must be jsonl or text");
  }
  return config.format == "jsonl";
}

CbbfOptions code_options(const Config& config) {
  CbbfOptions options;
  options.k = config.k;
  options.budget = config.budget;
  if (!config.diagonal.empty()) {
    std::vector<Word> words;
    words.reserve(config.diagonal.size());
    for (const std::string& text : config.diagonal) {
      words.push_back(Word::parse(text, config.q));
    }
    options.diagonal_words = std::move(words);
  }
  return options;
}

void require_stress_opt_in(const Config& config, const BigInt& projected) {
  if (projected > BigInt(kStressThreshold) && !config.stress) {
    throw BudgetError("result holds " + projected.str() +
                      " items and must be materialized; pass --stress "
                      "to allow runs over " +
                      std::to_string(kStressThreshold) + " items");
  }
}

int infer_q(const std::string& digits, const CLI::Option* q_option,
            int given_q) {
  if (q_option->count() > 0) {
    return given_q;
  }
  int max_digit = 1;
  for (char c : digits) {
    if (c >= '0' && c <= '9') {
      max_digit = std::max(max_digit, c - '0');
    }
  }
  return max_digit + 1;
}

int cmd_check_word(const Config& config) {
  Word w = Word::parse(config.input, config.q);
  if (w.empty()) {
    throw std::invalid_argument("empty word");
  }
  auto lengths = bifix_lengths(w);
  bool free = lengths.empty();
  std::cout << "word " << w.str() << " over q=" << config.q << ": "
            << (free ? "bifix-free" : "not bifix-free");
  if (!free) {
    std::cout << " (bifix lengths:";
    for (std::size_t len : lengths) {
      std::cout << ' ' << len;
    }
    std::cout << ')';
  }
  std::cout << '\n';
  return free ? kExitPass : kExitFalse;
}

int cmd_check_matrix(const Config& config) {
  SquareMatrix t = SquareMatrix::parse(config.input, config.q);
  auto dims = bibifix_dims(t);
  bool free = dims.empty();
  std::cout << "matrix " << t.dim() << "x" << t.dim() << " over q="
            << config.q << ": "
            << (free ? "bibifix-free" : "not bibifix-free");
  if (!free) {
    std::cout << " (bibifix dimensions:";
    for (std::size_t r : dims) {
      std::cout << ' ' << r;
    }
    std::cout << ')';
  }
  std::cout << " diagonal=" << main_diagonal(t).str() << '\n';
  return free ? kExitPass : kExitFalse;
}

int cmd_count(const std::string& what, const Config& config) {
  BigInt count = what == "bf" ? count_bf(config.n, config.q)
                              : count_bbf(config.n, config.q);
  std::cout << count.str() << '\n';
  return kExitPass;
}

int cmd_generate_bbf(const Config& config) {
  GenerateMethod method;
  if (config.method == "recursive") {
    method = GenerateMethod::kRecursive;
  } else if (config.method == "brute") {
    method = GenerateMethod::kBrute;
  } else {
    throw std::invalid_argument("method must be recursive or brute");
  }
  require_stress_opt_in(config, count_bbf(config.n, config.q));
  MatrixSet set = generate_bbf(config.n, config.q, method, config.budget);
  std::ofstream file;
  std::ostream& out = open_sink(config, file);
  if (jsonl_format(config)) {
    jsonl::write_matrix_set(out, "bbf", set);
  } else {
    for (const SquareMatrix& t : set.members()) {
      out << t.str() << '\n';
    }
  }
  return kExitPass;
}

int cmd_build_cbbf(const Config& config) {
  if (config.n < 3 || config.n > SquareMatrix::kMaxDim) {
    throw std::invalid_argument("build cbbf requires 3 <= n <= " +
                                std::to_string(SquareMatrix::kMaxDim));
  }
  CbbfOptions options = code_options(config);
  auto [diagonal, k] = detail::resolve_diagonal(config.n, config.q, options);
  BigInt total = BigInt(diagonal.size()) *
                 boost::multiprecision::pow(BigInt(config.q),
                                            unsigned(config.n * config.n -
                                                     config.n));
  require_budget(total, config.budget, "build cbbf");

  std::ofstream file;
  std::ostream& out = open_sink(config, file);
  bool jsonl_out = jsonl_format(config);
  if (jsonl_out) {
    out << jsonl::matrix_code_header(config.n, config.q, k, diagonal,
                                     total.convert_to<std::uint64_t>())
        << '\n';
  }
  for_each_cbbf_member(diagonal, [&](const SquareMatrix& t) {
    out << (jsonl_out ? jsonl::item_line(t) : t.str()) << '\n';
    return true;
  });
  return kExitPass;
}

int cmd_build_rect(const Config& config) {
  if (config.n < 3 || config.n >= config.m) {
    throw std::invalid_argument("build rect requires 3 <= n < m");
  }
  CbbfOptions options = code_options(config);
  auto [diagonal, k] = detail::resolve_diagonal(config.n, config.q, options);
  BigInt total =
      BigInt(diagonal.size()) * BigInt(diagonal.size()) *
      boost::multiprecision::pow(
          BigInt(config.q), unsigned(config.n * config.m - 2 * config.n));
  require_budget(total, config.budget, "build rect");

  std::ofstream file;
  std::ostream& out = open_sink(config, file);
  bool jsonl_out = jsonl_format(config);
  if (jsonl_out) {
    out << jsonl::rect_code_header(config.n, config.m, config.q, k, diagonal,
                                   total.convert_to<std::uint64_t>())
        << '\n';
  }
  for_each_rect_member(config.n, config.m, diagonal,
                       [&](const RectMatrix& t) {
                         out << (jsonl_out ? jsonl::item_line(t) : t.str())
                             << '\n';
                         return true;
                       });
  return kExitPass;
}

int cmd_verify_cross(const Config& config) {
  CbbfOptions options = code_options(config);
  auto [diagonal, k] = detail::resolve_diagonal(config.n, config.q, options);
  require_stress_opt_in(
      config, BigInt(diagonal.size()) *
                  boost::multiprecision::pow(
                      BigInt(config.q),
                      unsigned(config.n * config.n - config.n)));
  MatrixCode code = build_cbbf(config.n, config.q, options);
  CrossCheck report = verify_cross_set(code);
  if (report.cross_free) {
    std::cout << jsonl::verdict_line(true, std::nullopt,
                                     code.members().size())
              << '\n';
    return kExitPass;
  }
  std::cout << jsonl::conflict_line("cross-conflict-pair",
                                    report.conflict->first,
                                    report.conflict->second)
            << '\n';
  return kExitFalse;
}

int cmd_verify_nonexpandable(const Config& config) {
  CbbfOptions options = code_options(config);
  require_stress_opt_in(config, count_bbf(config.n, config.q));
  MatrixCode code = build_cbbf(config.n, config.q, options);
  ExpansionCheck report = verify_nonexpandable(code, config.budget);
  if (report.nonexpandable) {
    std::cout << jsonl::verdict_line(true, std::nullopt,
                                     code.members().size())
              << '\n';
    return kExitPass;
  }
  std::cout << jsonl::witness_line("expanding-witness", *report.witness)
            << '\n';
  return kExitFalse;
}

int cmd_verify_rect(const Config& config) {
  CbbfOptions options = code_options(config);
  RectCode code = build_cbbf_rect(config.n, config.m, config.q, options);
  require_stress_opt_in(config, BigInt(code.members.size()));
  RectCrossCheck report = verify_cross_rect(code.members);
  if (report.cross_free) {
    std::cout << jsonl::verdict_line(true, std::nullopt, code.members.size())
              << '\n';
    return kExitPass;
  }
  std::cout << jsonl::conflict_line("cross-conflict-pair",
                                    report.conflict->first,
                                    report.conflict->second)
            << '\n';
  return kExitFalse;
}

int cmd_gray(const Config& config) {
  CbbfOptions options = code_options(config);
  auto [diagonal, k] = detail::resolve_diagonal(config.n, config.q, options);
  BigInt total = BigInt(diagonal.size()) *
                 boost::multiprecision::pow(BigInt(config.q),
                                            unsigned(config.n * config.n -
                                                     config.n));
  require_budget(total, config.budget, "gray listing");

  if (config.check_only) {
    // the distinctness scan keeps one fingerprint per item
    require_stress_opt_in(config, total);
    GrayStreamChecker<SquareMatrix> checker;
    for_each_cbbf_gray(config.n, config.q, options,
                       [&](const SquareMatrix& t) {
                         checker.feed(t);
                         return true;
                       });
    std::cout << jsonl::verdict_line(checker.ok(), checker.offending_index(),
                                     checker.count())
              << '\n';
    return checker.ok() ? kExitPass : kExitFalse;
  }

  std::ofstream file;
  std::ostream& out = open_sink(config, file);
  bool jsonl_out = jsonl_format(config);
  if (jsonl_out) {
    out << jsonl::listing_header("cbbf-gray", config.n, config.q, k,
                                 total.convert_to<std::uint64_t>())
        << '\n';
  }
  std::size_t seq = 0;
  for_each_cbbf_gray(config.n, config.q, options, [&](const SquareMatrix& t) {
    out << (jsonl_out ? jsonl::listing_item_line(seq, t) : t.str()) << '\n';
    ++seq;
    return true;
  });
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bifix-free words, bibifix-free matrices, cross-bibifix-free "
               "codes, and their Gray listings"};
  app.require_subcommand(1);
  Config config;

  auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("--budget", config.budget,
                    "enumeration candidate budget");
    if (with_format) {
      cmd->add_option("--out", config.out_path, "write to file");
      cmd->add_option("--format", config.format, "jsonl or text");
      cmd->add_flag("--stress", config.stress,
                    "allow results over 2^20 items");
    }
  };

  // check
  CLI::App* check = app.add_subcommand("check", "test one word or matrix");
  check->require_subcommand(1);
  CLI::App* check_word = check->add_subcommand("word", "bifix check");
  check_word->add_option("input", config.input, "digit string")->required();
  CLI::Option* cw_q = check_word->add_option("--q", config.q, "alphabet size");
  CLI::App* check_matrix =
      check->add_subcommand("matrix", "bibifix check, rows joined by /");
  check_matrix->add_option("input", config.input, "row/row/... digits")
      ->required();
  CLI::Option* cm_q =
      check_matrix->add_option("--q", config.q, "alphabet size");

  // count
  CLI::App* count = app.add_subcommand("count", "cardinalities");
  count->require_subcommand(1);
  for (const char* what : {"bf", "bbf"}) {
    CLI::App* sub = count->add_subcommand(
        what, what == std::string("bf") ? "bifix-free words"
                                        : "bibifix-free matrices");
    sub->add_option("--n", config.n, "length / dimension")->required();
    sub->add_option("--q", config.q, "alphabet size")->required();
  }

  // generate
  CLI::App* generate = app.add_subcommand("generate", "exhaustive sets");
  generate->require_subcommand(1);
  CLI::App* generate_bbf_cmd =
      generate->add_subcommand("bbf", "all bibifix-free matrices");
  generate_bbf_cmd->add_option("--n", config.n, "dimension")->required();
  generate_bbf_cmd->add_option("--q", config.q, "alphabet size")->required();
  generate_bbf_cmd->add_option("--method", config.method,
                               "recursive or brute");
  add_common(generate_bbf_cmd, true);

  // build
  CLI::App* build = app.add_subcommand("build", "code construction");
  build->require_subcommand(1);
  CLI::App* build_cbbf_cmd =
      build->add_subcommand("cbbf", "square cross-bibifix-free code");
  build_cbbf_cmd->add_option("--n", config.n, "dimension")->required();
  build_cbbf_cmd->add_option("--q", config.q, "alphabet size")->required();
  build_cbbf_cmd->add_option("--k", config.k, "force S_{n,q}^(k)");
  build_cbbf_cmd
      ->add_option("--diagonal", config.diagonal, "explicit diagonal words")
      ->delimiter(',');
  add_common(build_cbbf_cmd, true);
  CLI::App* build_rect_cmd =
      build->add_subcommand("rect", "rectangular extension");
  build_rect_cmd->add_option("--n", config.n, "rows")->required();
  build_rect_cmd->add_option("--m", config.m, "columns")->required();
  build_rect_cmd->add_option("--q", config.q, "alphabet size")->required();
  build_rect_cmd->add_option("--k", config.k, "force S_{n,q}^(k)");
  build_rect_cmd
      ->add_option("--diagonal", config.diagonal, "explicit diagonal words")
      ->delimiter(',');
  add_common(build_rect_cmd, true);

  // verify
  CLI::App* verify = app.add_subcommand("verify", "code verification");
  verify->require_subcommand(1);
  CLI::App* verify_cross_cmd =
      verify->add_subcommand("cross", "pairwise cross-bibifix-freeness");
  CLI::App* verify_nonexp_cmd =
      verify->add_subcommand("nonexpandable", "non-expandability");
  for (CLI::App* sub : {verify_cross_cmd, verify_nonexp_cmd}) {
    sub->add_option("--n", config.n, "dimension")->required();
    sub->add_option("--q", config.q, "alphabet size")->required();
    sub->add_option("--k", config.k, "force S_{n,q}^(k)");
    sub->add_option("--diagonal", config.diagonal, "explicit diagonal words")
        ->delimiter(',');
    sub->add_option("--budget", config.budget, "candidate budget");
    sub->add_flag("--stress", config.stress, "allow over 2^20 items");
  }
  CLI::App* verify_rect_cmd =
      verify->add_subcommand("rect", "rectangular pairwise check");
  verify_rect_cmd->add_option("--n", config.n, "rows")->required();
  verify_rect_cmd->add_option("--m", config.m, "columns")->required();
  verify_rect_cmd->add_option("--q", config.q, "alphabet size")->required();
  verify_rect_cmd->add_option("--k", config.k, "force S_{n,q}^(k)");
  verify_rect_cmd
      ->add_option("--diagonal", config.diagonal, "explicit diagonal words")
      ->delimiter(',');
  verify_rect_cmd->add_option("--budget", config.budget, "candidate budget");
  verify_rect_cmd->add_flag("--stress", config.stress,
                            "allow over 2^20 items");

  // gray
  CLI::App* gray = app.add_subcommand("gray", "Gray listing of the code");
  gray->add_option("--n", config.n, "dimension")->required();
  gray->add_option("--q", config.q, "alphabet size")->required();
  gray->add_option("--k", config.k, "force S_{n,q}^(k)");
  gray->add_option("--diagonal", config.diagonal, "explicit diagonal words")
      ->delimiter(',');
  gray->add_flag("--check", config.check_only,
                 "emit only the verification verdict");
  add_common(gray, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check_word->parsed()) {
      config.q = infer_q(config.input, cw_q, config.q);
      return cmd_check_word(config);
    }
    if (check_matrix->parsed()) {
      config.q = infer_q(config.input, cm_q, config.q);
      return cmd_check_matrix(config);
    }
    if (count->parsed()) {
      return cmd_count(count->got_subcommand("bf") ? "bf" : "bbf", config);
    }
    if (generate_bbf_cmd->parsed()) {
      return cmd_generate_bbf(config);
    }
    if (build_cbbf_cmd->parsed()) {
      return cmd_build_cbbf(config);
    }
    if (build_rect_cmd->parsed()) {
      return cmd_build_rect(config);
    }
    if (verify_cross_cmd->parsed()) {
      return cmd_verify_cross(config);
    }
    if (verify_nonexp_cmd->parsed()) {
      return cmd_verify_nonexpandable(config);
    }
    if (verify_rect_cmd->parsed()) {
      return cmd_verify_rect(config);
    }
    if (gray->parsed()) {
      return cmd_gray(config);
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kExitBudget;
  } catch (const NoGrayOrderError& e) {
    std::cerr << "no gray order: " << e.what() << '\n';
    return kExitFalse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::cerr << "error: no command selected\n";
  return kExitUsage;
}
