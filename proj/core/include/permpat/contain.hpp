#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "permpat/permutation.hpp"

namespace permpat {

/// One occurrence of a pattern inside a text permutation: a strictly
/// increasing list of 1-based text positions whose entries standardize to
/// the pattern.
struct Embedding {
  std::vector<std::size_t> positions;

  std::size_t pattern_length() const noexcept { return positions.size(); }

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// True iff standardize(text restricted to e.positions) equals pattern.
bool is_valid_witness(const Permutation& pattern, const Permutation& text,
                      const Embedding& e);

/// Default cap on the number of subsequences the exhaustive oracle may test.
inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000ULL;

/// The oracle refuses to answer rather than approximate: thrown when the
/// subsequence count of a query exceeds the budget.
class OracleBudgetExceeded : public std::runtime_error {
public:
  OracleBudgetExceeded(std::uint64_t required, std::uint64_t budget);

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Decides pattern containment with a backtracking search that assigns text
/// positions to pattern positions left to right, keeping an open value
/// interval for every unassigned pattern entry and pruning as soon as an
/// interval empties or the remaining text is too short. Exponential in the
/// worst case, exact always.
bool is_contained(const Permutation& pattern, const Permutation& text);

/// First embedding in lexicographic position order, or nullopt. Candidate
/// text positions are tried in increasing order, so the returned witness is
/// the lexicographically least one.
std::optional<Embedding> find_embedding(const Permutation& pattern,
                                        const Permutation& text);

struct EnumerationResult {
  std::vector<Embedding> embeddings;  // lexicographic position order
  bool truncated = false;             // true when more than cap exist
};

/// All embeddings in lexicographic position order, truncated at cap (>= 1).
EnumerationResult enumerate_embeddings(const Permutation& pattern,
                                       const Permutation& text,
                                       std::size_t cap);

/// Ground-truth containment by exhaustive enumeration: tests every
/// length-k subsequence of text for order-isomorphism with the pattern.
/// Independent of is_contained by construction. Throws OracleBudgetExceeded
/// when C(n, k) exceeds the budget.
bool contains_oracle(const Permutation& pattern, const Permutation& text,
                     std::uint64_t budget = kDefaultOracleBudget);

/// Outcome of comparing two permutations under the containment order.
enum class PosetRelation { Less, Greater, Equal, Incomparable };

std::string_view relation_name(PosetRelation r);

/// Containment-order comparison using the backtracking matcher. Equal-length
/// comparison short-circuits to sequence equality: containment at equal
/// length forces equality, so distinct equal-length permutations are always
/// Incomparable.
PosetRelation compare(const Permutation& p, const Permutation& q);

/// Same relation, decided by the exhaustive oracle instead of the matcher.
PosetRelation compare_oracle(const Permutation& p, const Permutation& q,
                             std::uint64_t budget = kDefaultOracleBudget);

/// min(C(n, k), cap + 1): binomial coefficient with saturation, used for
/// oracle budget checks.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                              std::uint64_t cap);

}  // namespace permpat
