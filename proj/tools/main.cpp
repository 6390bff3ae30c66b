// permpat: pattern containment on finite permutations, the antichain family
// a_i, and the machinery that checks the family pairwise.
//
// Exit status contract (scriptable predicates):
//   0  affirmative answer / success
//   1  negative answer (not contained, not an antichain, failing checks)
//   2  usage or parse error
//   3  resource refusal (oracle budget exceeded)

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "permpat/antichain.hpp"
#include "permpat/contain.hpp"
#include "permpat/diagram.hpp"
#include "permpat/permutation.hpp"
#include "permpat/random.hpp"
#include "permpat/verify.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefusal = 3;

using permpat::Permutation;
using permpat::PosetRelation;
namespace antichain = permpat::antichain;
namespace verify = permpat::verify;

verify::Algorithm to_algorithm(const std::string& name) {
  if (name == "fast") return verify::Algorithm::Fast;
  if (name == "oracle") return verify::Algorithm::Oracle;
  return verify::Algorithm::Both;
}

Permutation read_stdin_permutation(const char* what) {
  std::string line;
  if (!std::getline(std::cin, line)) {
    throw std::invalid_argument(std::string("expected ") + what +
                                " on standard input");
  }
  return Permutation::parse(line);
}

std::vector<Permutation> read_stdin_permutations() {
  std::vector<Permutation> out;
  std::string line;
  while (std::getline(std::cin, line)) {
    bool blank = true;
    for (const char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    }
    if (blank) continue;
    out.push_back(Permutation::parse(line));
  }
  return out;
}

struct GenOptions {
  std::int64_t index = 0;
  std::string format = "oneline";
};

int run_gen(const GenOptions& opt) {
  const antichain::AntichainElement element =
      antichain::element_closed_form(opt.index);
  if (opt.format == "json-lines") {
    std::cout << antichain::element_record_json(
                     element, antichain::structural_checks(element))
              << '\n';
  } else {
    std::cout << element.perm.to_oneline() << '\n';
  }
  return kExitYes;
}

struct ContainsOptions {
  std::vector<std::string> inputs;
  std::string algorithm = "fast";
  std::string format = "oneline";
  bool witness = false;
  std::uint64_t oracle_budget = permpat::kDefaultOracleBudget;
};

int run_contains(const ContainsOptions& opt) {
  Permutation pattern = opt.inputs.size() >= 1
                            ? Permutation::parse(opt.inputs[0])
                            : read_stdin_permutation("a pattern");
  Permutation text = opt.inputs.size() >= 2
                         ? Permutation::parse(opt.inputs[1])
                         : read_stdin_permutation("a text permutation");

  bool contained = false;
  if (opt.algorithm == "fast") {
    contained = permpat::is_contained(pattern, text);
  } else if (opt.algorithm == "oracle") {
    contained = permpat::contains_oracle(pattern, text, opt.oracle_budget);
  } else {
    const bool fast = permpat::is_contained(pattern, text);
    const bool oracle =
        permpat::contains_oracle(pattern, text, opt.oracle_budget);
    if (fast != oracle) {
      std::cerr << "DISAGREEMENT: matcher says " << (fast ? "yes" : "no")
                << ", oracle says " << (oracle ? "yes" : "no") << '\n';
      return kExitNo;
    }
    contained = fast;
  }

  std::optional<permpat::Embedding> witness;
  if (opt.witness && contained) {
    witness = permpat::find_embedding(pattern, text);
    if (!witness || !permpat::is_valid_witness(pattern, text, *witness)) {
      std::cerr << "internal error: containment reported without a valid "
                   "witness\n";
      return kExitNo;
    }
  }

  if (opt.format == "json-lines") {
    std::cout << "{\"v\":1,\"record\":\"containment\",\"pattern\":\""
              << pattern.to_oneline() << "\",\"text\":\"" << text.to_oneline()
              << "\",\"algorithm\":\"" << opt.algorithm
              << "\",\"contained\":" << (contained ? "true" : "false");
    if (witness) {
      std::cout << ",\"witness\":[";
      for (std::size_t k = 0; k < witness->positions.size(); ++k) {
        if (k > 0) std::cout << ',';
        std::cout << witness->positions[k];
      }
      std::cout << ']';
    }
    std::cout << "}\n";
  } else {
    std::cout << (contained ? "contained" : "not contained") << '\n';
    if (witness) {
      std::cout << "witness:";
      for (const std::size_t pos : witness->positions) std::cout << ' ' << pos;
      std::cout << '\n';
    }
  }
  return contained ? kExitYes : kExitNo;
}

struct CompareOptions {
  std::vector<std::string> inputs;
  std::string algorithm = "fast";
  std::uint64_t oracle_budget = permpat::kDefaultOracleBudget;
};

int run_compare(const CompareOptions& opt) {
  Permutation p = opt.inputs.size() >= 1 ? Permutation::parse(opt.inputs[0])
                                         : read_stdin_permutation("p");
  Permutation q = opt.inputs.size() >= 2 ? Permutation::parse(opt.inputs[1])
                                         : read_stdin_permutation("q");
  PosetRelation relation;
  if (opt.algorithm == "fast") {
    relation = permpat::compare(p, q);
  } else if (opt.algorithm == "oracle") {
    relation = permpat::compare_oracle(p, q, opt.oracle_budget);
  } else {
    relation = permpat::compare(p, q);
    const PosetRelation oracle =
        permpat::compare_oracle(p, q, opt.oracle_budget);
    if (oracle != relation) {
      std::cerr << "DISAGREEMENT: matcher says "
                << permpat::relation_name(relation) << ", oracle says "
                << permpat::relation_name(oracle) << '\n';
      return kExitNo;
    }
  }
  std::cout << permpat::relation_name(relation) << '\n';
  return kExitYes;
}

struct VerifyOptions {
  std::int64_t up_to = 0;
  bool from_stdin = false;
  std::string algorithm = "fast";
  std::string format = "oneline";
  unsigned jobs = 1;
  bool timings = false;
  std::uint64_t oracle_budget = permpat::kDefaultOracleBudget;
};

int run_verify(const VerifyOptions& opt) {
  const verify::Algorithm algorithm = to_algorithm(opt.algorithm);
  verify::IncomparabilityReport report;
  if (opt.from_stdin) {
    const std::vector<Permutation> elements = read_stdin_permutations();
    report = verify::incomparability_over(elements, algorithm, opt.jobs,
                                          opt.oracle_budget);
  } else {
    report = verify::incomparability_matrix(opt.up_to, algorithm, opt.jobs,
                                            opt.oracle_budget);
  }
  if (opt.format == "json-lines") {
    std::cout << verify::render_json_lines(report);
  } else {
    std::cout << verify::render_table(report, opt.timings);
  }
  if (!report.antichain()) return kExitNo;
  if (algorithm == verify::Algorithm::Oracle &&
      report.oracle_skipped_pairs() > 0) {
    std::cerr << "oracle budget exceeded on " << report.oracle_skipped_pairs()
              << " pair(s); their results are matcher-only\n";
    return kExitRefusal;
  }
  return kExitYes;
}

struct LemmasOptions {
  std::int64_t index = 0;
  bool from_stdin = false;
  std::string format = "oneline";
};

int run_lemmas(const LemmasOptions& opt) {
  const verify::LemmaReport report =
      opt.from_stdin
          ? verify::lemma_checks_on(read_stdin_permutation("an element"))
          : verify::lemma_checks(opt.index);
  if (opt.format == "json-lines") {
    std::cout << verify::render_json_lines(report);
  } else {
    std::cout << verify::render_table(report);
  }
  return report.all_passed() ? kExitYes : kExitNo;
}

struct CrosscheckOptions {
  std::size_t max_pattern_len = 4;
  std::size_t max_text_len = 7;
  std::size_t random_trials = 0;
  std::uint64_t seed = 0;
  std::string format = "oneline";
  std::uint64_t oracle_budget = permpat::kDefaultOracleBudget;
};

int run_crosscheck(const CrosscheckOptions& opt) {
  const verify::CrossValidationReport report =
      verify::cross_validate(opt.max_pattern_len, opt.max_text_len,
                             opt.random_trials, opt.seed, opt.oracle_budget);
  if (opt.format == "json-lines") {
    std::cout << verify::render_json_lines(report);
  } else {
    std::cout << verify::render_table(report);
  }
  return report.all_agree() ? kExitYes : kExitNo;
}

struct PlotOptions {
  std::int64_t index = 0;
  std::string format = "ascii";
};

int run_plot(const PlotOptions& opt) {
  const antichain::AntichainElement element =
      antichain::element_closed_form(opt.index);
  if (opt.format == "svg") {
    std::cout << antichain::diagram_svg(element);
  } else {
    std::cout << antichain::diagram_ascii(element);
  }
  return kExitYes;
}

struct BenchOptions {
  std::int64_t base = 1;
  std::int64_t up_to = 6;
  unsigned repetitions = 3;
  std::uint64_t seed = 42;
  std::size_t random_trials = 0;
  std::size_t random_pattern_len = 6;
  std::size_t random_text_len = 12;
  std::uint64_t oracle_budget = permpat::kDefaultOracleBudget;
};

double best_of_ms(unsigned reps, const std::function<void()>& work) {
  double best = -1.0;
  for (unsigned r = 0; r < std::max(1u, reps); ++r) {
    const auto start = std::chrono::steady_clock::now();
    work();
    const auto stop = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    if (best < 0 || ms < best) best = ms;
  }
  return best;
}

int run_bench(const BenchOptions& opt) {
  if (opt.up_to <= opt.base) {
    throw std::invalid_argument("bench needs --up-to greater than --base");
  }
  std::cout << "workload          pattern  text  relation      fast_ms    "
               "oracle_ms\n";
  bool side_check_ok = true;
  const auto row = [&](const std::string& label, const Permutation& pattern,
                       const Permutation& text, bool expect_incomparable) {
    PosetRelation relation = PosetRelation::Incomparable;
    const double fast_ms = best_of_ms(opt.repetitions, [&] {
      relation = permpat::compare(pattern, text);
    });
    std::string oracle_ms = "-";
    if (permpat::binomial_capped(text.size(), pattern.size(),
                                 opt.oracle_budget) <= opt.oracle_budget) {
      const double ms = best_of_ms(1, [&] {
        (void)permpat::compare_oracle(pattern, text, opt.oracle_budget);
      });
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", ms);
      oracle_ms = buf;
    }
    if (expect_incomparable && relation != PosetRelation::Incomparable) {
      side_check_ok = false;
    }
    char fast_buf[32];
    std::snprintf(fast_buf, sizeof fast_buf, "%.3f", fast_ms);
    std::printf("%-17s %7zu %5zu  %-12s %9s %12s\n", label.c_str(),
                pattern.size(), text.size(),
                std::string(permpat::relation_name(relation)).c_str(),
                fast_buf, oracle_ms.c_str());
  };

  for (std::int64_t j = opt.base + 1; j <= opt.up_to; ++j) {
    const Permutation a = antichain::element_closed_form(opt.base).perm;
    const Permutation b = antichain::element_closed_form(j).perm;
    row("a_" + std::to_string(opt.base) + " vs a_" + std::to_string(j), a, b,
        true);
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t t = 0; t < opt.random_trials; ++t) {
    const auto plen = static_cast<std::size_t>(
        1 + permpat::uniform_below(rng, opt.random_pattern_len));
    const auto tlen =
        plen + static_cast<std::size_t>(permpat::uniform_below(
                   rng, opt.random_text_len - std::min(plen, opt.random_text_len) + 1));
    const Permutation pattern = permpat::random_permutation(rng, plen);
    const Permutation text = permpat::random_permutation(rng, tlen);
    row("random_" + std::to_string(t + 1), pattern, text, false);
  }
  if (!side_check_ok) {
    std::cerr << "side check failed: an antichain pair was comparable\n";
    return kExitNo;
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pattern containment on finite permutations and the antichain family "
      "a_i"};
  app.require_subcommand(1);

  int exit_code = kExitYes;
  const auto run = [&exit_code](auto fn, const auto& options) {
    return [fn, &options, &exit_code] { exit_code = fn(options); };
  };

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "print the antichain element a_i");
  gen->add_option("index", gen_opt.index, "element index i (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--format", gen_opt.format, "output format")
      ->check(CLI::IsMember({"oneline", "json-lines"}));
  gen->callback(run(run_gen, gen_opt));

  ContainsOptions contains_opt;
  auto* contains = app.add_subcommand(
      "contains", "decide whether a pattern embeds in a text permutation "
                  "(exit 0 yes, 1 no)");
  contains->add_option("inputs", contains_opt.inputs,
                       "PATTERN and TEXT; read from stdin when omitted")
      ->expected(0, 2);
  contains->add_option("--algorithm", contains_opt.algorithm, "decider")
      ->check(CLI::IsMember({"fast", "oracle", "both"}));
  contains->add_flag("--witness", contains_opt.witness,
                     "print the leftmost embedding positions");
  contains->add_option("--format", contains_opt.format, "output format")
      ->check(CLI::IsMember({"oneline", "json-lines"}));
  contains->add_option("--oracle-budget", contains_opt.oracle_budget,
                       "max subsequence checks for the oracle");
  contains->callback(run(run_contains, contains_opt));

  CompareOptions compare_opt;
  auto* cmp = app.add_subcommand(
      "compare", "print the containment-order relation of two permutations");
  cmp->add_option("inputs", compare_opt.inputs,
                  "P and Q; read from stdin when omitted")
      ->expected(0, 2);
  cmp->add_option("--algorithm", compare_opt.algorithm, "decider")
      ->check(CLI::IsMember({"fast", "oracle", "both"}));
  cmp->add_option("--oracle-budget", compare_opt.oracle_budget,
                  "max subsequence checks for the oracle");
  cmp->callback(run(run_compare, compare_opt));

  VerifyOptions verify_opt;
  auto* ver = app.add_subcommand(
      "verify", "check pairwise incomparability of a_1..a_N (exit 0 iff "
                "antichain)");
  auto* up_to = ver->add_option("--up-to", verify_opt.up_to,
                                "largest index N (>= 2)");
  auto* vstdin = ver->add_flag("--stdin", verify_opt.from_stdin,
                               "read the elements from stdin, one per line");
  up_to->excludes(vstdin);
  ver->add_option("--algorithm", verify_opt.algorithm, "decider")
      ->check(CLI::IsMember({"fast", "oracle", "both"}));
  ver->add_option("--jobs", verify_opt.jobs, "parallel pair evaluations")
      ->check(CLI::PositiveNumber);
  ver->add_option("--format", verify_opt.format, "output format")
      ->check(CLI::IsMember({"oneline", "json-lines"}));
  ver->add_flag("--timings", verify_opt.timings,
                "include per-pair timings in the table");
  ver->add_option("--oracle-budget", verify_opt.oracle_budget,
                  "max subsequence checks per oracle pair");
  ver->callback([&] {
    if (!verify_opt.from_stdin && verify_opt.up_to < 2) {
      throw CLI::ValidationError("verify", "--up-to must be at least 2");
    }
    exit_code = run_verify(verify_opt);
  });

  LemmasOptions lemmas_opt;
  auto* lem = app.add_subcommand(
      "lemmas", "replay the structural lemma checks on a_i (exit 0 iff all "
                "pass)");
  auto* lidx = lem->add_option("index", lemmas_opt.index,
                               "element index i (>= 1)")
                   ->check(CLI::PositiveNumber);
  auto* lstdin = lem->add_flag("--stdin", lemmas_opt.from_stdin,
                               "read the element from stdin");
  lidx->excludes(lstdin);
  lem->add_option("--format", lemmas_opt.format, "output format")
      ->check(CLI::IsMember({"oneline", "json-lines"}));
  lem->callback([&] {
    if (!lemmas_opt.from_stdin && lemmas_opt.index < 1) {
      throw CLI::ValidationError("lemmas", "an index or --stdin is required");
    }
    exit_code = run_lemmas(lemmas_opt);
  });

  CrosscheckOptions cross_opt;
  auto* cross = app.add_subcommand(
      "crosscheck", "matcher vs oracle agreement sweep (exit 0 iff 100%)");
  cross->add_option("--max-pattern-len", cross_opt.max_pattern_len,
                    "bound for random patterns (exhaustive grid caps at 4)");
  cross->add_option("--max-text-len", cross_opt.max_text_len,
                    "bound for random texts (exhaustive grid caps at 7)");
  cross->add_option("--random-trials", cross_opt.random_trials,
                    "seeded random pairs on top of the grid");
  cross->add_option("--seed", cross_opt.seed, "random seed");
  cross->add_option("--format", cross_opt.format, "output format")
      ->check(CLI::IsMember({"oneline", "json-lines"}));
  cross->add_option("--oracle-budget", cross_opt.oracle_budget,
                    "max subsequence checks per oracle query");
  cross->callback(run(run_crosscheck, cross_opt));

  PlotOptions plot_opt;
  auto* plot = app.add_subcommand(
      "plot", "matrix diagram of a_i with the three regions marked");
  plot->add_option("index", plot_opt.index, "element index i (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  plot->add_option("--format", plot_opt.format, "diagram format")
      ->check(CLI::IsMember({"ascii", "svg"}));
  plot->callback(run(run_plot, plot_opt));

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand(
      "bench", "time the matcher (and oracle, where affordable) on element "
               "and random pairs");
  bench->add_option("--base", bench_opt.base, "first element of each pair")
      ->check(CLI::PositiveNumber);
  bench->add_option("--up-to", bench_opt.up_to, "largest second index");
  bench->add_option("--reps", bench_opt.repetitions, "repetitions per row")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_opt.seed, "seed for the random workload");
  bench->add_option("--random-trials", bench_opt.random_trials,
                    "number of random pairs");
  bench->add_option("--random-pattern-len", bench_opt.random_pattern_len,
                    "max random pattern length");
  bench->add_option("--random-text-len", bench_opt.random_text_len,
                    "max random text length");
  bench->add_option("--oracle-budget", bench_opt.oracle_budget,
                    "max subsequence checks per oracle row");
  bench->callback(run(run_bench, bench_opt));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const permpat::OracleBudgetExceeded& e) {
    std::cerr << e.what() << '\n';
    return kExitRefusal;
  } catch (const verify::AlgorithmDisagreement& e) {
    std::cerr << "DISAGREEMENT: " << e.what() << '\n';
    return kExitNo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return exit_code;
}
