#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permpat {

using Value = std::int64_t;

/// Raised by Permutation::parse; carries the 1-based index of the offending
/// token so callers can point at the exact spot in the input.
class ParseError : public std::invalid_argument {
public:
  ParseError(std::size_t token_index, const std::string& message);

  std::size_t token_index() const noexcept { return token_index_; }

private:
  std::size_t token_index_;
};

/// A permutation of {1..n} in one-line notation.
///
/// Immutable after construction. The constructor rejects anything that is
/// not a bijection on {1..n} with n >= 1, so a Permutation value is always
/// well formed and safe to share across threads.
class Permutation {
public:
  explicit Permutation(std::vector<Value> values);

  /// Parses a whitespace- or comma-separated list of integers.
  /// Throws ParseError naming the first bad token (non-integer, duplicate,
  /// out of range, or empty input).
  static Permutation parse(std::string_view text);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }

  const std::vector<Value>& values() const noexcept { return values_; }

  /// Entry at 1-based position pos. Throws std::out_of_range.
  Value value_at(std::size_t pos) const;

  /// Space-separated one-line notation, e.g. "1 3 2". parse() inverts this.
  std::string to_oneline() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<Value> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Rank-relabels a sequence of distinct integers: entry i is replaced by its
/// rank within the sequence, yielding the unique order-isomorphic
/// permutation. Throws std::invalid_argument on duplicates or empty input.
Permutation standardize(std::span<const Value> seq);

/// Deletes the given 1-based positions (treated as a set) and standardizes
/// what remains. Deleting every entry or naming an out-of-range position is
/// an error.
Permutation delete_positions(const Permutation& p,
                             std::span<const std::size_t> positions);

/// Number of positions j < pos whose entry is smaller than the entry at pos
/// (1-based). Throws std::out_of_range.
std::size_t smaller_predecessor_count(const Permutation& p, std::size_t pos);

}  // namespace permpat
