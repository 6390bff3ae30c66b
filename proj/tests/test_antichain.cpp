#include "permpat/antichain.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "doctest.h"

using namespace permpat::antichain;
using permpat::Permutation;
using permpat::Value;

namespace {

const Permutation kA1 =
    Permutation::parse("13 12 10 14 8 11 6 9 4 7 3 2 1 5");
const Permutation kA2 =
    Permutation::parse("15 14 12 16 10 13 8 11 6 9 4 7 3 2 1 5");

}  // namespace

TEST_CASE("closed form reproduces the base element") {
  const AntichainElement e1 = element_closed_form(1);
  CHECK(e1.perm == kA1);
  CHECK(e1.index == 1);
  CHECK(e1.prefix_end == 3);
  CHECK(e1.max_pos == 4);
  CHECK(e1.middle_end == 10);
  CHECK(e1.perm.to_oneline() == "13 12 10 14 8 11 6 9 4 7 3 2 1 5");
}

TEST_CASE("closed form matches one hand application of the insertion rule") {
  CHECK(element_closed_form(2).perm == kA2);
}

TEST_CASE("insert_step grows one element into the next") {
  CHECK(insert_step(kA1) == kA2);
  CHECK(insert_step(kA2) == element_closed_form(3).perm);
}

TEST_CASE("insert_step rejects maxima below 5") {
  CHECK_THROWS_AS(insert_step(Permutation::parse("2 1 4 3")),
                  std::invalid_argument);
  CHECK_THROWS_AS(insert_step(Permutation::parse("1")), std::invalid_argument);
}

TEST_CASE("recursive and closed-form generators agree") {
  for (std::int64_t i = 1; i <= 30; ++i) {
    const AntichainElement e = element_closed_form(i);
    CHECK(element_recursive(i) == e.perm);
    CHECK(e.perm.size() == static_cast<std::size_t>(12 + 2 * i));
  }
}

TEST_CASE("prefix law and suffix stability") {
  for (std::int64_t i = 1; i <= 20; ++i) {
    const AntichainElement e = element_closed_form(i);
    const auto& v = e.perm.values();
    const auto n = static_cast<Value>(v.size());
    CHECK(v[0] == n - 1);
    CHECK(v[1] == n - 2);
    CHECK(v[2] == n - 4);
    CHECK(v[3] == n);
    const std::vector<Value> suffix(v.end() - 4, v.end());
    CHECK(suffix == std::vector<Value>{3, 2, 1, 5});
  }
  // The last ten entries survive the growth step unchanged.
  for (std::int64_t i = 1; i <= 20; ++i) {
    const AntichainElement ea = element_closed_form(i);
    const AntichainElement eb = element_closed_form(i + 1);
    const auto& a = ea.perm.values();
    const auto& b = eb.perm.values();
    CHECK(std::vector<Value>(a.end() - 10, a.end()) ==
          std::vector<Value>(b.end() - 10, b.end()));
  }
}

TEST_CASE("generator argument validation") {
  CHECK_THROWS_AS(element_closed_form(0), std::invalid_argument);
  CHECK_THROWS_AS(element_closed_form(-3), std::invalid_argument);
  CHECK_THROWS_AS(element_recursive(0), std::invalid_argument);
  // Index so large that the length would overflow: refused, never wrapped.
  CHECK_THROWS_AS(element_closed_form(std::numeric_limits<std::int64_t>::max()),
                  std::overflow_error);
}

TEST_CASE("decompose exposes the three parts") {
  const AntichainElement e1 = decompose(kA1);
  CHECK(e1.prefix_values() == std::vector<Value>{13, 12, 10});
  CHECK(e1.middle_values() == std::vector<Value>{14, 8, 11, 6, 9, 4, 7});
  CHECK(e1.suffix_values() == std::vector<Value>{3, 2, 1, 5});

  const AntichainElement e2 = decompose(kA2);
  CHECK(e2.middle_values() ==
        std::vector<Value>{16, 10, 13, 8, 11, 6, 9, 4, 7});
  CHECK(e2.index == 2);
}

TEST_CASE("decompose rejects non-elements with the first failing check") {
  CHECK_THROWS_AS(decompose(Permutation::parse("1 2 3")),
                  std::invalid_argument);

  // Right length, wrong shape: the maximum is not at position 4.
  std::vector<Value> v(14);
  for (std::size_t i = 0; i < 14; ++i) v[i] = static_cast<Value>(i) + 1;
  try {
    decompose(Permutation(v));
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("max_at_position_4") !=
          std::string::npos);
  }
}

TEST_CASE("structural checks pass for generated elements") {
  for (std::int64_t i = 1; i <= 100; ++i) {
    const StructureReport report = structural_checks(element_closed_form(i));
    CAPTURE(i);
    for (const auto& check : report.checks) {
      CAPTURE(check.name);
      CAPTURE(check.detail);
      CHECK(check.passed);
    }
    CHECK(report.all_passed());
  }
}

TEST_CASE("structural check report carries the expected names") {
  const StructureReport report = structural_checks(element_closed_form(1));
  const std::vector<std::string> expected{
      "prefix_decreasing",        "max_at_position_4",
      "suffix_is_3215",           "middle_parity_alternates",
      "middle_evens_decreasing",  "middle_odds_decreasing",
      "even_between_rule",        "seven_fifth_from_right",
      "rightmost_unique_four_smaller", "max_unique_three_smaller"};
  REQUIRE(report.checks.size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CHECK(report.checks[k].name == expected[k]);
  }
}

TEST_CASE("swapping the entries 5 and 1 breaks the predecessor fingerprint") {
  std::vector<Value> v = kA1.values();
  std::swap(v[12], v[13]);  // entries 1 and 5
  const StructureReport report = structural_checks(Permutation(std::move(v)));
  CHECK_FALSE(report.all_passed());
  const auto* rightmost = report.find("rightmost_unique_four_smaller");
  REQUIRE(rightmost != nullptr);
  CHECK_FALSE(rightmost->passed);
}

TEST_CASE("structural checks refuse lengths that cannot be elements") {
  CHECK_THROWS_AS(structural_checks(Permutation::parse("1 2 3")),
                  std::invalid_argument);
}

TEST_CASE("element json record carries boundaries and checks") {
  const AntichainElement e = element_closed_form(2);
  const std::string json = element_record_json(e, structural_checks(e));
  CHECK(json.find("\"record\":\"element\"") != std::string::npos);
  CHECK(json.find("\"index\":2") != std::string::npos);
  CHECK(json.find("\"length\":16") != std::string::npos);
  CHECK(json.find("\"middle_end\":12") != std::string::npos);
  CHECK(json.find("\"all_checks_pass\":true") != std::string::npos);
  CHECK(json.find('\n') == std::string::npos);  // one line per record
}
