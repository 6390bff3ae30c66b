#include "permpat/antichain.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "internal/text_util.hpp"

namespace permpat::antichain {

namespace {

constexpr std::size_t kPrefixEnd = 3;
constexpr std::size_t kMaxPos = 4;
constexpr Value kSuffix[4] = {3, 2, 1, 5};

bool shaped_length(std::size_t n) { return n >= 14 && n % 2 == 0; }

std::int64_t index_from_length(std::size_t n) {
  return (static_cast<std::int64_t>(n) - 12) / 2;
}

AntichainElement wrap(Permutation perm) {
  const std::size_t n = perm.size();
  return AntichainElement{index_from_length(n), std::move(perm), kPrefixEnd,
                          kMaxPos, n - 4};
}

// Smaller-predecessor count for every position, 0-based vector.
std::vector<std::size_t> predecessor_counts(const std::vector<Value>& v) {
  std::vector<std::size_t> counts(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (v[j] < v[i]) ++counts[i];
    }
  }
  return counts;
}

std::vector<std::size_t> position_of_value(const std::vector<Value>& v) {
  std::vector<std::size_t> pos(v.size() + 1, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    pos[static_cast<std::size_t>(v[i])] = i + 1;
  }
  return pos;
}

bool is_even(Value v) { return v % 2 == 0; }

CheckResult check_prefix_decreasing(const std::vector<Value>& v) {
  CheckResult r{"prefix_decreasing", true, ""};
  for (std::size_t i = 0; i + 1 < kPrefixEnd; ++i) {
    if (v[i] <= v[i + 1]) {
      r.passed = false;
      std::ostringstream d;
      d << "entries " << v[i] << ", " << v[i + 1] << " at positions "
        << (i + 1) << ", " << (i + 2) << " do not decrease";
      r.detail = d.str();
      return r;
    }
  }
  return r;
}

CheckResult check_max_at_position_4(const std::vector<Value>& v) {
  CheckResult r{"max_at_position_4", true, ""};
  const auto n = static_cast<Value>(v.size());
  if (v[kMaxPos - 1] != n) {
    r.passed = false;
    std::ostringstream d;
    d << "position 4 holds " << v[kMaxPos - 1] << ", expected the maximum "
      << n;
    r.detail = d.str();
  }
  return r;
}

CheckResult check_suffix(const std::vector<Value>& v) {
  CheckResult r{"suffix_is_3215", true, ""};
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < 4; ++i) {
    if (v[n - 4 + i] != kSuffix[i]) {
      r.passed = false;
      std::ostringstream d;
      d << "position " << (n - 3 + i) << " holds " << v[n - 4 + i]
        << ", expected " << kSuffix[i];
      r.detail = d.str();
      return r;
    }
  }
  return r;
}

// Adjacent middle entries must alternate parity. The pair touching the
// maximum slot at position 4 is the boundary of the alternating part and is
// exempt: the maximum stands in for the missing larger neighbor.
CheckResult check_parity_alternates(const std::vector<Value>& v) {
  CheckResult r{"middle_parity_alternates", true, ""};
  const std::size_t n = v.size();
  for (std::size_t pos = kMaxPos + 1; pos + 1 <= n - 4; ++pos) {
    if (is_even(v[pos - 1]) == is_even(v[pos])) {
      r.passed = false;
      std::ostringstream d;
      d << "entries " << v[pos - 1] << ", " << v[pos] << " at positions "
        << pos << ", " << (pos + 1) << " share parity";
      r.detail = d.str();
      return r;
    }
  }
  return r;
}

CheckResult check_monotone_subset(const std::vector<Value>& v, bool even,
                                  std::string name) {
  CheckResult r{std::move(name), true, ""};
  const std::size_t n = v.size();
  Value prev = std::numeric_limits<Value>::max();
  for (std::size_t pos = kMaxPos; pos <= n - 4; ++pos) {
    const Value x = v[pos - 1];
    if (is_even(x) != even) continue;
    if (x >= prev) {
      r.passed = false;
      std::ostringstream d;
      d << "middle " << (even ? "even" : "odd") << " entries stop decreasing at "
        << x << " (position " << pos << ")";
      r.detail = d.str();
      return r;
    }
    prev = x;
  }
  return r;
}

// Every middle even entry 2k sits positionally between 2k+5 and 2k+3. The
// even entry adjacent to the maximum is exempt: the maximum occupies the
// place its 2k+5 would take inside the middle.
CheckResult check_even_between(const std::vector<Value>& v) {
  CheckResult r{"even_between_rule", true, ""};
  const std::size_t n = v.size();
  const auto pos_of = position_of_value(v);
  for (std::size_t pos = kMaxPos + 2; pos <= n - 4; ++pos) {
    const Value x = v[pos - 1];
    if (!is_even(x)) continue;
    const Value above5 = x + 5;
    const Value above3 = x + 3;
    if (above5 > static_cast<Value>(n) || above3 > static_cast<Value>(n)) {
      r.passed = false;
      std::ostringstream d;
      d << "even entry " << x << " at position " << pos << " has no entries "
        << above5 << " and " << above3 << " to sit between";
      r.detail = d.str();
      return r;
    }
    const std::size_t p5 = pos_of[static_cast<std::size_t>(above5)];
    const std::size_t p3 = pos_of[static_cast<std::size_t>(above3)];
    if (!(p5 < pos && pos < p3)) {
      r.passed = false;
      std::ostringstream d;
      d << "even entry " << x << " at position " << pos
        << " is not between " << above5 << " (position " << p5 << ") and "
        << above3 << " (position " << p3 << ")";
      r.detail = d.str();
      return r;
    }
  }
  return r;
}

CheckResult check_seven_fifth_from_right(const std::vector<Value>& v) {
  CheckResult r{"seven_fifth_from_right", true, ""};
  const std::size_t n = v.size();
  if (v[n - 5] != 7) {
    r.passed = false;
    std::ostringstream d;
    d << "position " << (n - 4) << " holds " << v[n - 5] << ", expected 7";
    r.detail = d.str();
  }
  return r;
}

CheckResult check_rightmost_four_smaller(const std::vector<Value>& v,
                                         const std::vector<std::size_t>& counts) {
  CheckResult r{"rightmost_unique_four_smaller", true, ""};
  const std::size_t n = v.size();
  if (counts[n - 1] != 4) {
    r.passed = false;
    std::ostringstream d;
    d << "rightmost entry " << v[n - 1] << " has " << counts[n - 1]
      << " smaller predecessors, expected 4";
    r.detail = d.str();
    return r;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (counts[i] >= 4) {
      r.passed = false;
      std::ostringstream d;
      d << "entry " << v[i] << " at position " << (i + 1) << " also has "
        << counts[i] << " smaller predecessors";
      r.detail = d.str();
      return r;
    }
  }
  r.detail = "rightmost entry is the unique one with 4 smaller predecessors";
  return r;
}

CheckResult check_max_three_smaller(const std::vector<Value>& v,
                                    const std::vector<std::size_t>& counts) {
  CheckResult r{"max_unique_three_smaller", true, ""};
  const std::size_t n = v.size();
  const std::size_t max_pos =
      static_cast<std::size_t>(std::max_element(v.begin(), v.end()) -
                               v.begin());
  if (counts[max_pos] != 3) {
    r.passed = false;
    std::ostringstream d;
    d << "maximum at position " << (max_pos + 1) << " has "
      << counts[max_pos] << " smaller predecessors, expected 3";
    r.detail = d.str();
    return r;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (i != max_pos && counts[i] == 3) {
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

// The middle must not contain three consecutive decreasing entries. Used by
// decompose as a shape invariant; the verifier reruns it as a lemma check.
CheckResult check_no_triple_descent(const std::vector<Value>& v) {
  CheckResult r{"no_three_consecutive_decreasing_in_middle", true, ""};
  const std::size_t n = v.size();
  for (std::size_t pos = kMaxPos; pos + 2 <= n - 4; ++pos) {
    if (v[pos - 1] > v[pos] && v[pos] > v[pos + 1]) {
      r.passed = false;
      std::ostringstream d;
      d << "entries " << v[pos - 1] << ", " << v[pos] << ", " << v[pos + 1]
        << " at positions " << pos << ".." << (pos + 2) << " decrease";
      r.detail = d.str();
      return r;
    }
  }
  return r;
}

void require_shaped_length(const Permutation& p) {
  if (!shaped_length(p.size())) {
    std::ostringstream msg;
    msg << "not an antichain element: length " << p.size()
        << " is not of the form 12 + 2i with i >= 1";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

std::vector<Value> AntichainElement::prefix_values() const {
  const auto& v = perm.values();
  return {v.begin(), v.begin() + kPrefixEnd};
}

std::vector<Value> AntichainElement::middle_values() const {
  const auto& v = perm.values();
  return {v.begin() + (max_pos - 1), v.begin() + middle_end};
}

std::vector<Value> AntichainElement::suffix_values() const {
  const auto& v = perm.values();
  return {v.end() - 4, v.end()};
}

AntichainElement element_closed_form(std::int64_t i) {
  if (i < 1) {
    throw std::invalid_argument("antichain index must be at least 1");
  }
  constexpr auto kMaxIndex = (std::numeric_limits<Value>::max() - 12) / 2;
  if (i > kMaxIndex) {
    throw std::overflow_error(
        "antichain index too large: element length would overflow");
  }
  const Value n = 12 + 2 * static_cast<Value>(i);
  std::vector<Value> v;
  v.reserve(static_cast<std::size_t>(n));
  v.push_back(n - 1);
  v.push_back(n - 2);
  v.push_back(n - 4);
  v.push_back(n);
  for (Value m = n - 6; m >= 4; m -= 2) {
    v.push_back(m);
    v.push_back(m + 3);
  }
  v.insert(v.end(), std::begin(kSuffix), std::end(kSuffix));
  return wrap(Permutation(std::move(v)));
}

Permutation insert_step(const Permutation& a) {
  const auto& v = a.values();
  const Value m = static_cast<Value>(v.size());
  if (m < 5) {
    throw std::invalid_argument(
        "insert_step needs a maximum of at least 5: the inserted values are "
        "m-4 and m-1");
  }
  const std::size_t max_at =
      static_cast<std::size_t>(std::max_element(v.begin(), v.end()) -
                               v.begin());
  std::vector<Value> out;
  out.reserve(v.size() + 2);
  for (std::size_t i = 0; i <= max_at; ++i) out.push_back(v[i] + 2);
  out.push_back(m - 4);
  out.push_back(m - 1);
  for (std::size_t i = max_at + 1; i < v.size(); ++i) out.push_back(v[i]);
  return Permutation(std::move(out));
}

Permutation element_recursive(std::int64_t i) {
  if (i < 1) {
    throw std::invalid_argument("antichain index must be at least 1");
  }
  Permutation a({13, 12, 10, 14, 8, 11, 6, 9, 4, 7, 3, 2, 1, 5});
  for (std::int64_t step = 1; step < i; ++step) {
    a = insert_step(a);
  }
  return a;
}

AntichainElement decompose(const Permutation& p) {
  require_shaped_length(p);
  const auto& v = p.values();
  const CheckResult invariants[] = {
      check_max_at_position_4(v),    check_prefix_decreasing(v),
      check_suffix(v),               check_parity_alternates(v),
      check_no_triple_descent(v),
  };
  for (const auto& c : invariants) {
    if (!c.passed) {
      std::ostringstream msg;
      msg << "not an antichain element: " << c.name << " fails (" << c.detail
          << ")";
      throw std::invalid_argument(msg.str());
    }
  }
  return wrap(p);
}

StructureReport structural_checks(const Permutation& p) {
  require_shaped_length(p);
  const auto& v = p.values();
  const auto counts = predecessor_counts(v);
  StructureReport report;
  report.checks.push_back(check_prefix_decreasing(v));
  report.checks.push_back(check_max_at_position_4(v));
  report.checks.push_back(check_suffix(v));
  report.checks.push_back(check_parity_alternates(v));
  report.checks.push_back(
      check_monotone_subset(v, true, "middle_evens_decreasing"));
  report.checks.push_back(
      check_monotone_subset(v, false, "middle_odds_decreasing"));
  report.checks.push_back(check_even_between(v));
  report.checks.push_back(check_seven_fifth_from_right(v));
  report.checks.push_back(check_rightmost_four_smaller(v, counts));
  report.checks.push_back(check_max_three_smaller(v, counts));
  return report;
}

StructureReport structural_checks(const AntichainElement& e) {
  return structural_checks(e.perm);
}

std::string element_record_json(const AntichainElement& e,
                                const StructureReport& report) {
  std::ostringstream out;
  out << "{\"v\":1,\"record\":\"element\",\"index\":" << e.index
      << ",\"length\":" << e.perm.size() << ",\"prefix_end\":" << e.prefix_end
      << ",\"max_pos\":" << e.max_pos << ",\"middle_end\":" << e.middle_end
      << ",\"values\":[";
  const auto& v = e.perm.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ',';
    out << v[i];
  }
  out << "],\"checks\":[";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto& c = report.checks[i];
    if (i > 0) out << ',';
    out << "{\"name\":\"" << internal::json_escape(c.name) << "\",\"pass\":"
        << (c.passed ? "true" : "false") << ",\"detail\":\""
        << internal::json_escape(c.detail) << "\"}";
  }
  out << "],\"all_checks_pass\":" << (report.all_passed() ? "true" : "false")
      << "}";
  return out.str();
}

}  // namespace permpat::antichain
