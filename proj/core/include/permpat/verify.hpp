#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "permpat/antichain.hpp"
#include "permpat/contain.hpp"
#include "permpat/permutation.hpp"
#include "permpat/report.hpp"

namespace permpat::verify {

enum class Algorithm { Fast, Oracle, Both };

std::string_view algorithm_name(Algorithm a);

/// Thrown when the matcher and the oracle disagree on a pair. This is the
/// loud-failure path: a disagreement means one of the two deciders is wrong
/// and no verdict can be trusted.
class AlgorithmDisagreement : public std::runtime_error {
public:
  AlgorithmDisagreement(std::int64_t i, std::int64_t j, PosetRelation fast,
                        PosetRelation oracle);

  std::int64_t lhs_index() const noexcept { return i_; }
  std::int64_t rhs_index() const noexcept { return j_; }
  PosetRelation fast_relation() const noexcept { return fast_; }
  PosetRelation oracle_relation() const noexcept { return oracle_; }

private:
  std::int64_t i_;
  std::int64_t j_;
  PosetRelation fast_;
  PosetRelation oracle_;
};

struct PairOutcome {
  std::int64_t i = 0;
  std::int64_t j = 0;
  PosetRelation relation = PosetRelation::Incomparable;
  bool fast_ran = false;
  bool oracle_ran = false;
  bool oracle_skipped = false;  // oracle budget exceeded for this pair
  double elapsed_ms = 0.0;

  bool dual_verified() const { return fast_ran && oracle_ran; }
};

struct IncomparabilityReport {
  std::int64_t max_index = 0;
  Algorithm algorithm = Algorithm::Fast;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  std::vector<PairOutcome> pairs;  // ordered by (i, j)

  bool antichain() const;
  std::size_t dual_verified_pairs() const;
  std::size_t oracle_skipped_pairs() const;
};

/// Compares a_i and a_j for every 1 <= i < j <= N. In Both mode the matcher
/// and the oracle must agree on every pair they both decide, otherwise
/// AlgorithmDisagreement is thrown. A pair whose subsequence count exceeds
/// the oracle budget is marked skipped-by-oracle and carries the matcher's
/// result instead of failing the run. jobs > 1 evaluates pairs concurrently;
/// the report is merged in (i, j) order either way, so single-threaded and
/// parallel runs render identically.
IncomparabilityReport incomparability_matrix(
    std::int64_t max_index, Algorithm algorithm, unsigned jobs = 1,
    std::uint64_t oracle_budget = kDefaultOracleBudget);

/// Same pairwise check over caller-supplied elements (1-based list order
/// stands in for the antichain index). Lets a deliberately broken generator
/// be fed through the identical machinery.
IncomparabilityReport incomparability_over(
    std::span<const Permutation> elements, Algorithm algorithm,
    unsigned jobs = 1, std::uint64_t oracle_budget = kDefaultOracleBudget);

struct LemmaReport {
  std::int64_t index = 0;
  std::size_t length = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const { return permpat::all_passed(checks); }
  const CheckResult* find(std::string_view name) const {
    return find_check(checks, name);
  }
};

/// Replays the structural lemmas on a_i:
///   rightmost_unique, max_unique, no_dominating_split,
///   no_three_consecutive_decreasing_in_middle, odd_two_smaller_preds,
///   deletion_pair_parity.
LemmaReport lemma_checks(std::int64_t i);

/// Same checks on a caller-supplied permutation of antichain-element length,
/// so mutated elements can be examined. Boundaries are taken positionally
/// (prefix 1..3, middle 4..n-4, suffix n-3..n) without further validation.
LemmaReport lemma_checks_on(const Permutation& p);

struct Disagreement {
  Permutation pattern;
  Permutation text;
  bool fast_result = false;
  bool oracle_result = false;
};

struct CrossValidationReport {
  std::size_t exhaustive_pairs = 0;
  std::size_t random_pairs = 0;
  std::size_t agreements = 0;
  std::vector<Disagreement> disagreements;
  std::size_t exhaustive_pattern_cap = 0;  // grid bound actually used (<= 4)
  std::size_t exhaustive_text_cap = 0;     // grid bound actually used (<= 7)
  std::size_t max_pattern_len = 0;
  std::size_t max_text_len = 0;
  std::size_t requested_trials = 0;
  std::uint64_t seed = 0;

  std::size_t total_pairs() const { return exhaustive_pairs + random_pairs; }
  bool all_agree() const { return disagreements.empty(); }
};

/// Agreement harness for the matcher against the oracle: an exhaustive grid
/// over every (pattern, text) pair with pattern length <= min(4,
/// max_pattern_len) and text length <= min(7, max_text_len), plus
/// random_trials seeded random pairs drawn up to the given bounds.
CrossValidationReport cross_validate(
    std::size_t max_pattern_len, std::size_t max_text_len,
    std::size_t random_trials, std::uint64_t seed = 0,
    std::uint64_t oracle_budget = kDefaultOracleBudget);

// Human-readable tables and line-delimited structured records. The
// structured form never carries timings, so reports are byte-identical for
// identical arguments and seed regardless of job count.
std::string render_table(const IncomparabilityReport& report,
                         bool include_timings = false);
std::string render_json_lines(const IncomparabilityReport& report);
std::string render_table(const LemmaReport& report);
std::string render_json_lines(const LemmaReport& report);
std::string render_table(const CrossValidationReport& report);
std::string render_json_lines(const CrossValidationReport& report);

}  // namespace permpat::verify
