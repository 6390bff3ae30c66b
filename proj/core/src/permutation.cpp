#include "permpat/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

namespace permpat {

namespace {

void validate_one_line(const std::vector<Value>& values) {
  if (values.empty()) {
    throw std::invalid_argument("permutation must have at least one entry");
  }
  const auto n = static_cast<Value>(values.size());
  std::vector<bool> seen(values.size(), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Value v = values[i];
    if (v < 1 || v > n) {
      std::ostringstream msg;
      msg << "entry " << v << " at position " << (i + 1)
          << " is outside 1.." << n;
      throw std::invalid_argument(msg.str());
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      std::ostringstream msg;
      msg << "duplicate entry " << v << " at position " << (i + 1);
      throw std::invalid_argument(msg.str());
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

}  // namespace

ParseError::ParseError(std::size_t token_index, const std::string& message)
    : std::invalid_argument(message), token_index_(token_index) {}

Permutation::Permutation(std::vector<Value> values)
    : values_(std::move(values)) {
  validate_one_line(values_);
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<Value> values;
  std::size_t token_index = 0;
  std::size_t i = 0;
  const auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',';
  };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    const std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    const std::string_view token = text.substr(start, i - start);
    ++token_index;
    Value v = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      std::ostringstream msg;
      msg << "token " << token_index << " ('" << token
          << "') is not an integer";
      throw ParseError(token_index, msg.str());
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw ParseError(0, "empty input: expected at least one integer");
  }
  // Re-check range/duplicates here so the error can name the token.
  const auto n = static_cast<Value>(values.size());
  std::vector<bool> seen(values.size(), false);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const Value v = values[k];
    if (v < 1 || v > n) {
      std::ostringstream msg;
      msg << "token " << (k + 1) << " (value " << v << ") is outside 1.." << n;
      throw ParseError(k + 1, msg.str());
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      std::ostringstream msg;
      msg << "token " << (k + 1) << " (value " << v << ") is a duplicate";
      throw ParseError(k + 1, msg.str());
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Value> values(n);
  std::iota(values.begin(), values.end(), Value{1});
  return Permutation(std::move(values));
}

Value Permutation::value_at(std::size_t pos) const {
  if (pos < 1 || pos > values_.size()) {
    std::ostringstream msg;
    msg << "position " << pos << " is outside 1.." << values_.size();
    throw std::out_of_range(msg.str());
  }
  return values_[pos - 1];
}

std::string Permutation::to_oneline() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out << ' ';
    out << values_[i];
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_oneline();
}

Permutation standardize(std::span<const Value> seq) {
  if (seq.empty()) {
    throw std::invalid_argument("cannot standardize an empty sequence");
  }
  std::vector<Value> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cannot standardize: entries are not distinct");
  }
  std::vector<Value> ranks;
  ranks.reserve(seq.size());
  for (const Value v : seq) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    ranks.push_back(static_cast<Value>(it - sorted.begin()) + 1);
  }
  return Permutation(std::move(ranks));
}

Permutation delete_positions(const Permutation& p,
                             std::span<const std::size_t> positions) {
  const std::size_t n = p.size();
  std::vector<bool> remove(n, false);
  std::size_t removed = 0;
  for (const std::size_t pos : positions) {
    if (pos < 1 || pos > n) {
      std::ostringstream msg;
      msg << "deletion position " << pos << " is outside 1.." << n;
      throw std::out_of_range(msg.str());
    }
    if (!remove[pos - 1]) {
      remove[pos - 1] = true;
      ++removed;
    }
  }
  if (removed == n) {
    throw std::invalid_argument("cannot delete every entry");
  }
  std::vector<Value> kept;
  kept.reserve(n - removed);
  for (std::size_t i = 0; i < n; ++i) {
    if (!remove[i]) kept.push_back(p.values()[i]);
  }
  return standardize(kept);
}

std::size_t smaller_predecessor_count(const Permutation& p, std::size_t pos) {
  const Value v = p.value_at(pos);  // validates pos
  std::size_t count = 0;
  for (std::size_t j = 0; j + 1 < pos; ++j) {
    if (p.values()[j] < v) ++count;
  }
  return count;
}

}  // namespace permpat
