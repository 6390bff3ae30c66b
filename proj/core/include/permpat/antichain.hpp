#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permpat/permutation.hpp"
#include "permpat/report.hpp"

namespace permpat::antichain {

/// One element a_i of the antichain family, together with its three-part
/// decomposition: a decreasing prefix at positions 1..3, a middle running
/// from the maximum at position 4 to the entry 7 at position n-4, and the
/// fixed suffix 3 2 1 5 at positions n-3..n.
struct AntichainElement {
  std::int64_t index = 0;  // i, with length(perm) = 12 + 2i
  Permutation perm;
  std::size_t prefix_end = 3;
  std::size_t max_pos = 4;
  std::size_t middle_end = 0;  // n - 4

  std::vector<Value> prefix_values() const;
  std::vector<Value> middle_values() const;
  std::vector<Value> suffix_values() const;
};

/// Builds a_i directly: with n = 12 + 2i, emit (n-1, n-2, n-4, n), then the
/// pairs (m, m+3) for m = n-6 down to 4 in steps of 2, then (3, 2, 1, 5).
/// Equals element_recursive(i) for every i; the test suite pins that down.
AntichainElement element_closed_form(std::int64_t i);

/// One application of the growth rule: insert the values (m-4, m-1), where m
/// is the maximum of a, immediately after the maximum, incrementing every
/// entry at or left of the maximum by two and leaving the rest unchanged.
/// Requires m >= 5.
Permutation insert_step(const Permutation& a);

/// a_1 as a literal for i = 1; otherwise insert_step applied i-1 times.
Permutation element_recursive(std::int64_t i);

/// Validates that p has the antichain-element shape and returns it with its
/// decomposition boundaries. Throws std::invalid_argument naming the first
/// failing invariant otherwise.
AntichainElement decompose(const Permutation& p);

/// Named pass/fail results for the construction invariants of an element.
struct StructureReport {
  std::vector<CheckResult> checks;

  bool all_passed() const { return permpat::all_passed(checks); }
  const CheckResult* find(std::string_view name) const {
    return find_check(checks, name);
  }
};

/// Runs every structural check on a candidate element and reports each by
/// name. p must have length 12 + 2i for some i >= 1; beyond that nothing is
/// assumed, so deliberately broken inputs produce failing entries rather
/// than errors.
StructureReport structural_checks(const Permutation& p);
StructureReport structural_checks(const AntichainElement& e);

/// Structured one-line record (key-value document) for an element: index,
/// length, decomposition boundaries, values, and the check report.
std::string element_record_json(const AntichainElement& e,
                                const StructureReport& report);

}  // namespace permpat::antichain
