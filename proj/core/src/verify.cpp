#include "permpat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "internal/text_util.hpp"
#include "permpat/random.hpp"

namespace permpat::verify {

namespace {

constexpr std::size_t kMiddleBegin = 4;  // position of the maximum

std::vector<std::size_t> predecessor_counts(const std::vector<Value>& v) {
  std::vector<std::size_t> counts(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (v[j] < v[i]) ++counts[i];
    }
  }
  return counts;
}

CheckResult check_rightmost_unique(const std::vector<Value>& v,
                                   const std::vector<std::size_t>& counts) {
  CheckResult r{"rightmost_unique", true, ""};
  const std::size_t n = v.size();
  if (counts[n - 1] < 4) {
    r.passed = false;
    std::ostringstream d;
    d << "rightmost entry " << v[n - 1] << " has only " << counts[n - 1]
      << " smaller predecessors";
    r.detail = d.str();
    return r;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (counts[i] >= 4) {
      r.passed = false;
      std::ostringstream d;
      d << "entry " << v[i] << " at position " << (i + 1)
        << " also has >= 4 smaller predecessors";
      r.detail = d.str();
      return r;
    }
  }
  std::ostringstream d;
  d << "rightmost entry " << v[n - 1]
    << " is the unique entry with >= 4 smaller predecessors";
  r.detail = d.str();
  return r;
}

CheckResult check_max_unique(const std::vector<Value>& v,
                             const std::vector<std::size_t>& counts) {
  CheckResult r{"max_unique", true, ""};
  const std::size_t n = v.size();
  const std::size_t max_at =
      static_cast<std::size_t>(std::max_element(v.begin(), v.end()) -
                               v.begin());
  if (counts[max_at] != 3) {
    r.passed = false;
    std::ostringstream d;
    d << "maximum " << v[max_at] << " has " << counts[max_at]
      << " smaller predecessors, expected 3";
    r.detail = d.str();
    return r;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (i != max_at && counts[i] == 3) {
      r.passed = false;
      std::ostringstream d;
      d << "entry " << v[i] << " at position " << (i + 1)
        << " also has 3 smaller predecessors";
      r.detail = d.str();
      return r;
    }
  }
  r.detail = "maximum is the unique non-rightmost entry with 3 smaller "
             "predecessors";
  return r;
}

CheckResult check_no_dominating_split(const std::vector<Value>& v) {
  CheckResult r{"no_dominating_split", true, ""};
  const std::size_t n = v.size();
  // prefix_min[t] = min of v[0..t], suffix_max[t] = max of v[t..n-1]
  std::vector<Value> suffix_max(n);
  suffix_max[n - 1] = v[n - 1];
  for (std::size_t i = n - 1; i > 0; --i) {
    suffix_max[i - 1] = std::max(v[i - 1], suffix_max[i]);
  }
  Value prefix_min = v[0];
  for (std::size_t t = 1; t < n; ++t) {
    prefix_min = std::min(prefix_min, v[t - 1]);
    if (prefix_min > suffix_max[t]) {
      r.passed = false;
      std::ostringstream d;
      d << "every entry at positions 1.." << t
        << " exceeds every entry at positions " << (t + 1) << ".." << n;
      r.detail = d.str();
      return r;
    }
  }
  return r;
}

CheckResult check_no_triple_descent_in_middle(const std::vector<Value>& v) {
  CheckResult r{"no_three_consecutive_decreasing_in_middle", true, ""};
  const std::size_t n = v.size();
  for (std::size_t pos = kMiddleBegin; pos + 2 <= n - 4; ++pos) {
    if (v[pos - 1] > v[pos] && v[pos] > v[pos + 1]) {
      r.passed = false;
      std::ostringstream d;
      d << "middle entries " << v[pos - 1] << ", " << v[pos] << ", "
        << v[pos + 1] << " at positions " << pos << ".." << (pos + 2)
        << " decrease";
      r.detail = d.str();
      return r;
    }
  }
  return r;
}

CheckResult check_odd_two_smaller_preds(const std::vector<Value>& v,
                                        const std::vector<std::size_t>& counts) {
  CheckResult r{"odd_two_smaller_preds", true, ""};
  const std::size_t n = v.size();
  for (std::size_t pos = kMiddleBegin; pos <= n - 4; ++pos) {
    const Value x = v[pos - 1];
    if (x % 2 == 0) continue;
    if (counts[pos - 1] < 2) {
      r.passed = false;
      std::ostringstream d;
      d << "odd middle entry " << x << " at position " << pos << " has only "
        << counts[pos - 1] << " smaller predecessors";
      r.detail = d.str();
      return r;
    }
  }
  return r;
}

// For every adjacent middle pair whose first entry is even, deleting the
// pair must leave some former-middle odd entry with fewer than two smaller
// predecessors among the remaining middle entries. This replays the proof's
// deletion argument constructively per pair (heuristic replay: the source
// argument states the consequence without a formal statement).
CheckResult check_deletion_pair_parity(const std::vector<Value>& v) {
  CheckResult r{"deletion_pair_parity", true, ""};
  const std::size_t n = v.size();
  std::size_t pairs_tested = 0;
  for (std::size_t pos = kMiddleBegin; pos + 1 <= n - 4; ++pos) {
    if (v[pos - 1] % 2 != 0) continue;
    ++pairs_tested;
    // Middle entries that survive deleting positions pos, pos+1.
    std::vector<Value> remaining;
    for (std::size_t q = kMiddleBegin; q <= n - 4; ++q) {
      if (q == pos || q == pos + 1) continue;
      remaining.push_back(v[q - 1]);
    }
    bool starved_odd_found = false;
    for (std::size_t t = 0; t < remaining.size(); ++t) {
      if (remaining[t] % 2 == 0) continue;
      std::size_t smaller = 0;
      for (std::size_t s = 0; s < t; ++s) {
        if (remaining[s] < remaining[t]) ++smaller;
      }
      if (smaller < 2) {
        starved_odd_found = true;
        break;
      }
    }
    if (!starved_odd_found) {
      r.passed = false;
      std::ostringstream d;
      d << "deleting the pair (" << v[pos - 1] << ", " << v[pos]
        << ") at positions " << pos << ", " << (pos + 1)
        << " leaves every middle odd entry with >= 2 smaller middle "
           "predecessors (heuristic replay)";
      r.detail = d.str();
      return r;
    }
  }
  std::ostringstream d;
  d << pairs_tested << " even-first pairs tested (heuristic replay)";
  r.detail = d.str();
  return r;
}

PairOutcome evaluate_pair(std::int64_t i, std::int64_t j,
                          const Permutation& a, const Permutation& b,
                          Algorithm algorithm, std::uint64_t budget) {
  PairOutcome out;
  out.i = i;
  out.j = j;
  const auto start = std::chrono::steady_clock::now();
  switch (algorithm) {
    case Algorithm::Fast:
      out.relation = compare(a, b);
      out.fast_ran = true;
      break;
    case Algorithm::Oracle:
      try {
        out.relation = compare_oracle(a, b, budget);
        out.oracle_ran = true;
      } catch (const OracleBudgetExceeded&) {
        out.oracle_skipped = true;
        out.relation = compare(a, b);
        out.fast_ran = true;
      }
      break;
    case Algorithm::Both: {
      const PosetRelation fast = compare(a, b);
      out.fast_ran = true;
      out.relation = fast;
      try {
        const PosetRelation oracle = compare_oracle(a, b, budget);
        out.oracle_ran = true;
        if (oracle != fast) throw AlgorithmDisagreement(i, j, fast, oracle);
      } catch (const OracleBudgetExceeded&) {
        out.oracle_skipped = true;
      }
      break;
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return out;
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Fast:
      return "fast";
    case Algorithm::Oracle:
      return "oracle";
    case Algorithm::Both:
      return "both";
  }
  return "unknown";
}

AlgorithmDisagreement::AlgorithmDisagreement(std::int64_t i, std::int64_t j,
                                             PosetRelation fast,
                                             PosetRelation oracle)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg << "matcher and oracle disagree on pair (" << i << ", " << j
            << "): fast says " << relation_name(fast) << ", oracle says "
            << relation_name(oracle);
        return msg.str();
      }()),
      i_(i),
      j_(j),
      fast_(fast),
      oracle_(oracle) {}

bool IncomparabilityReport::antichain() const {
  if (pairs.empty()) return false;
  return std::all_of(pairs.begin(), pairs.end(), [](const PairOutcome& p) {
    return p.relation == PosetRelation::Incomparable;
  });
}

std::size_t IncomparabilityReport::dual_verified_pairs() const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(),
                    [](const PairOutcome& p) { return p.dual_verified(); }));
}

std::size_t IncomparabilityReport::oracle_skipped_pairs() const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(),
                    [](const PairOutcome& p) { return p.oracle_skipped; }));
}

IncomparabilityReport incomparability_over(std::span<const Permutation> elements,
                                           Algorithm algorithm, unsigned jobs,
                                           std::uint64_t oracle_budget) {
  if (elements.size() < 2) {
    throw std::invalid_argument(
        "incomparability check needs at least two elements");
  }
  struct Pair {
    std::int64_t i, j;
  };
  std::vector<Pair> work;
  for (std::size_t i = 1; i <= elements.size(); ++i) {
    for (std::size_t j = i + 1; j <= elements.size(); ++j) {
      work.push_back({static_cast<std::int64_t>(i),
                      static_cast<std::int64_t>(j)});
    }
  }
  std::vector<PairOutcome> outcomes(work.size());
  const auto evaluate_at = [&](std::size_t idx) {
    const auto [i, j] = work[idx];
    outcomes[idx] =
        evaluate_pair(i, j, elements[static_cast<std::size_t>(i - 1)],
                      elements[static_cast<std::size_t>(j - 1)], algorithm,
                      oracle_budget);
  };

  if (jobs <= 1 || work.size() <= 1) {
    for (std::size_t idx = 0; idx < work.size(); ++idx) evaluate_at(idx);
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const unsigned worker_count =
        std::min<unsigned>(jobs, static_cast<unsigned>(work.size()));
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
      workers.emplace_back([&] {
        while (!stop.load(std::memory_order_relaxed)) {
          const std::size_t idx = next.fetch_add(1);
          if (idx >= work.size()) break;
          try {
            evaluate_at(idx);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            stop.store(true, std::memory_order_relaxed);
          }
        }
      });
    }
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  IncomparabilityReport report;
  report.max_index = static_cast<std::int64_t>(elements.size());
  report.algorithm = algorithm;
  report.oracle_budget = oracle_budget;
  report.pairs = std::move(outcomes);  // already ordered by (i, j)
  return report;
}

IncomparabilityReport incomparability_matrix(std::int64_t max_index,
                                             Algorithm algorithm,
                                             unsigned jobs,
                                             std::uint64_t oracle_budget) {
  if (max_index < 2) {
    throw std::invalid_argument("incomparability check needs max index >= 2");
  }
  std::vector<Permutation> elements;
  elements.reserve(static_cast<std::size_t>(max_index));
  for (std::int64_t i = 1; i <= max_index; ++i) {
    elements.push_back(antichain::element_closed_form(i).perm);
  }
  return incomparability_over(elements, algorithm, jobs, oracle_budget);
}

LemmaReport lemma_checks_on(const Permutation& p) {
  const std::size_t n = p.size();
  if (n < 14 || n % 2 != 0) {
    std::ostringstream msg;
    msg << "lemma checks need a permutation of length 12 + 2i, got length "
        << n;
    throw std::invalid_argument(msg.str());
  }
  const auto& v = p.values();
  const auto counts = predecessor_counts(v);
  LemmaReport report;
  report.index = (static_cast<std::int64_t>(n) - 12) / 2;
  report.length = n;
  report.checks.push_back(check_rightmost_unique(v, counts));
  report.checks.push_back(check_max_unique(v, counts));
  report.checks.push_back(check_no_dominating_split(v));
  report.checks.push_back(check_no_triple_descent_in_middle(v));
  report.checks.push_back(check_odd_two_smaller_preds(v, counts));
  report.checks.push_back(check_deletion_pair_parity(v));
  return report;
}

LemmaReport lemma_checks(std::int64_t i) {
  return lemma_checks_on(antichain::element_closed_form(i).perm);
}

CrossValidationReport cross_validate(std::size_t max_pattern_len,
                                     std::size_t max_text_len,
                                     std::size_t random_trials,
                                     std::uint64_t seed,
                                     std::uint64_t oracle_budget) {
  if (max_pattern_len < 1 || max_text_len < 1) {
    throw std::invalid_argument("length bounds must be at least 1");
  }
  if (random_trials > 0 && max_pattern_len > max_text_len) {
    throw std::invalid_argument(
        "random trials need max_pattern_len <= max_text_len");
  }
  CrossValidationReport report;
  report.max_pattern_len = max_pattern_len;
  report.max_text_len = max_text_len;
  report.requested_trials = random_trials;
  report.seed = seed;
  report.exhaustive_pattern_cap = std::min<std::size_t>(max_pattern_len, 4);
  report.exhaustive_text_cap = std::min<std::size_t>(max_text_len, 7);

  const auto record = [&](const Permutation& pattern, const Permutation& text) {
    const bool fast = is_contained(pattern, text);
    const bool oracle = contains_oracle(pattern, text, oracle_budget);
    if (fast == oracle) {
      ++report.agreements;
    } else {
      report.disagreements.push_back({pattern, text, fast, oracle});
    }
  };

  // Every permutation of each length, in lexicographic order.
  const auto all_of_length = [](std::size_t len) {
    std::vector<Permutation> out;
    std::vector<Value> v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = static_cast<Value>(i) + 1;
    do {
      out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  };

  std::vector<Permutation> patterns;
  for (std::size_t len = 1; len <= report.exhaustive_pattern_cap; ++len) {
    const auto batch = all_of_length(len);
    patterns.insert(patterns.end(), batch.begin(), batch.end());
  }
  for (std::size_t len = 1; len <= report.exhaustive_text_cap; ++len) {
    for (const auto& text : all_of_length(len)) {
      for (const auto& pattern : patterns) {
        record(pattern, text);
        ++report.exhaustive_pairs;
      }
    }
  }

  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < random_trials; ++trial) {
    const std::size_t plen =
        1 + static_cast<std::size_t>(uniform_below(rng, max_pattern_len));
    const std::size_t tlen =
        plen + static_cast<std::size_t>(
                   uniform_below(rng, max_text_len - plen + 1));
    const Permutation pattern = random_permutation(rng, plen);
    const Permutation text = random_permutation(rng, tlen);
    record(pattern, text);
    ++report.random_pairs;
  }
  return report;
}

std::string render_table(const IncomparabilityReport& report,
                         bool include_timings) {
  std::ostringstream out;
  out << "   i    j  relation      checked-by";
  if (include_timings) out << "            ms";
  out << '\n';
  for (const auto& p : report.pairs) {
    std::string checked;
    if (p.fast_ran && p.oracle_ran) {
      checked = "fast+oracle";
    } else if (p.oracle_ran) {
      checked = "oracle";
    } else if (p.oracle_skipped) {
      checked = "fast (oracle skipped)";
    } else {
      checked = "fast";
    }
    out << std::setw(4) << p.i << ' ' << std::setw(4) << p.j << "  "
        << std::left << std::setw(14) << relation_name(p.relation)
        << std::setw(22) << checked << std::right;
    if (include_timings) {
      out << std::fixed << std::setprecision(3) << std::setw(10)
          << p.elapsed_ms;
    }
    out << '\n';
  }
  const std::size_t incomparable = static_cast<std::size_t>(std::count_if(
      report.pairs.begin(), report.pairs.end(), [](const PairOutcome& p) {
        return p.relation == PosetRelation::Incomparable;
      }));
  out << "verdict: " << (report.antichain() ? "antichain" : "not an antichain")
      << " (" << incomparable << "/" << report.pairs.size()
      << " pairs incomparable; " << report.dual_verified_pairs()
      << " dual-verified, " << report.oracle_skipped_pairs()
      << " oracle-skipped)\n";
  return out.str();
}

std::string render_json_lines(const IncomparabilityReport& report) {
  std::ostringstream out;
  for (const auto& p : report.pairs) {
    out << "{\"v\":1,\"record\":\"pair\",\"i\":" << p.i << ",\"j\":" << p.j
        << ",\"relation\":\"" << relation_name(p.relation)
        << "\",\"fast_ran\":" << (p.fast_ran ? "true" : "false")
        << ",\"oracle_ran\":" << (p.oracle_ran ? "true" : "false")
        << ",\"oracle_skipped\":" << (p.oracle_skipped ? "true" : "false")
        << ",\"dual\":" << (p.dual_verified() ? "true" : "false") << "}\n";
  }
  out << "{\"v\":1,\"record\":\"verdict\",\"max_index\":" << report.max_index
      << ",\"algorithm\":\"" << algorithm_name(report.algorithm)
      << "\",\"pairs\":" << report.pairs.size()
      << ",\"dual_verified\":" << report.dual_verified_pairs()
      << ",\"oracle_skipped\":" << report.oracle_skipped_pairs()
      << ",\"antichain\":" << (report.antichain() ? "true" : "false") << "}\n";
  return out.str();
}

std::string render_table(const LemmaReport& report) {
  std::ostringstream out;
  out << "lemma checks for element " << report.index << " (length "
      << report.length << ")\n";
  for (const auto& c : report.checks) {
    out << "  " << std::left << std::setw(44) << c.name
        << (c.passed ? "pass" : "FAIL");
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  const auto failed = static_cast<std::size_t>(
      std::count_if(report.checks.begin(), report.checks.end(),
                    [](const CheckResult& c) { return !c.passed; }));
  if (failed == 0) {
    out << "result: all checks passed\n";
  } else {
    out << "result: " << failed << " check(s) failed\n";
  }
  return out.str();
}

std::string render_json_lines(const LemmaReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << "{\"v\":1,\"record\":\"lemma\",\"index\":" << report.index
        << ",\"name\":\"" << internal::json_escape(c.name) << "\",\"pass\":"
        << (c.passed ? "true" : "false") << ",\"detail\":\""
        << internal::json_escape(c.detail) << "\"}\n";
  }
  out << "{\"v\":1,\"record\":\"lemma_summary\",\"index\":" << report.index
      << ",\"length\":" << report.length
      << ",\"all_pass\":" << (report.all_passed() ? "true" : "false") << "}\n";
  return out.str();
}

std::string render_table(const CrossValidationReport& report) {
  std::ostringstream out;
  out << "matcher vs oracle agreement\n"
      << "  exhaustive grid: patterns <= " << report.exhaustive_pattern_cap
      << ", texts <= " << report.exhaustive_text_cap << ": "
      << report.exhaustive_pairs << " pairs\n"
      << "  random trials:   " << report.random_pairs
      << " pairs (pattern <= " << report.max_pattern_len << ", text <= "
      << report.max_text_len << ", seed " << report.seed << ")\n"
      << "  agreements: " << report.agreements << "/" << report.total_pairs()
      << "\n";
  for (const auto& d : report.disagreements) {
    out << "  DISAGREEMENT pattern [" << d.pattern << "] text [" << d.text
        << "]: fast=" << (d.fast_result ? "true" : "false")
        << " oracle=" << (d.oracle_result ? "true" : "false") << '\n';
  }
  out << "result: "
      << (report.all_agree() ? "100% agreement" : "DISAGREEMENTS FOUND")
      << '\n';
  return out.str();
}

std::string render_json_lines(const CrossValidationReport& report) {
  std::ostringstream out;
  for (const auto& d : report.disagreements) {
    out << "{\"v\":1,\"record\":\"crosscheck_disagreement\",\"pattern\":\""
        << d.pattern.to_oneline() << "\",\"text\":\"" << d.text.to_oneline()
        << "\",\"fast\":" << (d.fast_result ? "true" : "false")
        << ",\"oracle\":" << (d.oracle_result ? "true" : "false") << "}\n";
  }
  out << "{\"v\":1,\"record\":\"crosscheck_summary\",\"exhaustive_pairs\":"
      << report.exhaustive_pairs << ",\"random_pairs\":" << report.random_pairs
      << ",\"agreements\":" << report.agreements
      << ",\"disagreements\":" << report.disagreements.size()
      << ",\"pattern_cap\":" << report.exhaustive_pattern_cap
      << ",\"text_cap\":" << report.exhaustive_text_cap
      << ",\"max_pattern_len\":" << report.max_pattern_len
      << ",\"max_text_len\":" << report.max_text_len
      << ",\"seed\":" << report.seed
      << ",\"all_agree\":" << (report.all_agree() ? "true" : "false") << "}\n";
  return out.str();
}

}  // namespace permpat::verify
