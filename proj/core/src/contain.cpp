#include "permpat/contain.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace permpat {

namespace {

// Backtracking embedding search. Pattern positions are assigned text
// positions strictly left to right. For every still-unassigned pattern
// entry we keep an open value interval (lo, hi): its text value must fall
// strictly between the text values already assigned to its nearest pattern
// neighbors in value order. A branch dies when any interval holds no
// integer or the remaining text is shorter than the remaining pattern.
//
// Candidates are tried in increasing position order, so embeddings are
// produced in lexicographic position order.
class EmbeddingSearch {
public:
  EmbeddingSearch(const Permutation& pattern, const Permutation& text)
      : p_(pattern.values()),
        t_(text.values()),
        m_(p_.size()),
        n_(t_.size()),
        chosen_(m_, 0),
        lo_((m_ + 1) * m_, 0),
        hi_((m_ + 1) * m_, static_cast<Value>(n_) + 1) {}

  // visit receives 0-based text positions and returns true to keep
  // searching, false to stop.
  void run(const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (m_ > n_) return;
    visit_ = &visit;
    descend(0, 0);
  }

private:
  // Returns false when the visitor asked to stop the whole search.
  bool descend(std::size_t k, std::size_t start) {
    if (k == m_) return (*visit_)(chosen_);
    const Value* lo = row(lo_, k);
    const Value* hi = row(hi_, k);
    // Leave room for the m_-k entries still to be placed.
    for (std::size_t pos = start; pos + (m_ - k) <= n_; ++pos) {
      const Value v = t_[pos];
      if (v <= lo[k] || v >= hi[k]) continue;
      Value* nlo = row(lo_, k + 1);
      Value* nhi = row(hi_, k + 1);
      bool feasible = true;
      for (std::size_t j = k + 1; j < m_; ++j) {
        nlo[j] = lo[j];
        nhi[j] = hi[j];
        if (p_[j] > p_[k]) {
          nlo[j] = std::max(nlo[j], v);
        } else {
          nhi[j] = std::min(nhi[j], v);
        }
        if (nhi[j] - nlo[j] <= 1) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      chosen_[k] = pos;
      if (!descend(k + 1, pos + 1)) return false;
    }
    return true;
  }

  Value* row(std::vector<Value>& bounds, std::size_t depth) {
    return bounds.data() + depth * m_;
  }

  const std::vector<Value>& p_;
  const std::vector<Value>& t_;
  std::size_t m_;
  std::size_t n_;
  std::vector<std::size_t> chosen_;
  std::vector<Value> lo_;
  std::vector<Value> hi_;
  const std::function<bool(const std::vector<std::size_t>&)>* visit_ = nullptr;
};

Embedding to_embedding(const std::vector<std::size_t>& zero_based) {
  Embedding e;
  e.positions.reserve(zero_based.size());
  for (const std::size_t pos : zero_based) e.positions.push_back(pos + 1);
  return e;
}

// Order-isomorphism of the text entries at the chosen positions against the
// pattern, checked pairwise straight from the definition.
bool order_isomorphic(const std::vector<Value>& pattern,
                      const std::vector<Value>& text,
                      const std::vector<std::size_t>& positions) {
  const std::size_t k = pattern.size();
  for (std::size_t j = 1; j < k; ++j) {
    const Value tj = text[positions[j]];
    const Value pj = pattern[j];
    for (std::size_t i = 0; i < j; ++i) {
      if ((text[positions[i]] < tj) != (pattern[i] < pj)) return false;
    }
  }
  return true;
}

template <typename F>
PosetRelation compare_impl(const Permutation& p, const Permutation& q,
                           F&& contained) {
  if (p.size() == q.size()) {
    // Containment at equal length forces equality, so no search is needed.
    return p == q ? PosetRelation::Equal : PosetRelation::Incomparable;
  }
  if (p.size() < q.size()) {
    return contained(p, q) ? PosetRelation::Less : PosetRelation::Incomparable;
  }
  return contained(q, p) ? PosetRelation::Greater : PosetRelation::Incomparable;
}

}  // namespace

bool is_valid_witness(const Permutation& pattern, const Permutation& text,
                      const Embedding& e) {
  if (e.positions.size() != pattern.size()) return false;
  std::vector<Value> picked;
  picked.reserve(e.positions.size());
  std::size_t prev = 0;
  for (const std::size_t pos : e.positions) {
    if (pos < 1 || pos > text.size() || pos <= prev) return false;
    picked.push_back(text.values()[pos - 1]);
    prev = pos;
  }
  return standardize(picked) == pattern;
}

OracleBudgetExceeded::OracleBudgetExceeded(std::uint64_t required,
                                           std::uint64_t budget)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg << "oracle refuses: " << required
            << " subsequence checks exceed the budget of " << budget;
        return msg.str();
      }()),
      required_(required),
      budget_(budget) {}

bool is_contained(const Permutation& pattern, const Permutation& text) {
  bool found = false;
  EmbeddingSearch search(pattern, text);
  search.run([&](const std::vector<std::size_t>&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<Embedding> find_embedding(const Permutation& pattern,
                                        const Permutation& text) {
  std::optional<Embedding> result;
  EmbeddingSearch search(pattern, text);
  search.run([&](const std::vector<std::size_t>& positions) {
    result = to_embedding(positions);
    return false;
  });
  return result;
}

EnumerationResult enumerate_embeddings(const Permutation& pattern,
                                       const Permutation& text,
                                       std::size_t cap) {
  if (cap < 1) {
    throw std::invalid_argument("enumeration cap must be at least 1");
  }
  EnumerationResult result;
  EmbeddingSearch search(pattern, text);
  search.run([&](const std::vector<std::size_t>& positions) {
    if (result.embeddings.size() == cap) {
      result.truncated = true;
      return false;
    }
    result.embeddings.push_back(to_embedding(positions));
    return true;
  });
  return result;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                              std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

bool contains_oracle(const Permutation& pattern, const Permutation& text,
                     std::uint64_t budget) {
  const std::size_t k = pattern.size();
  const std::size_t n = text.size();
  if (k > n) return false;
  const std::uint64_t total = binomial_capped(n, k, budget);
  if (total > budget) {
    throw OracleBudgetExceeded(
        binomial_capped(n, k, std::numeric_limits<std::uint64_t>::max() - 1),
        budget);
  }
  std::vector<std::size_t> combo(k);
  for (std::size_t i = 0; i < k; ++i) combo[i] = i;
  while (true) {
    if (order_isomorphic(pattern.values(), text.values(), combo)) return true;
    // Advance to the next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  return false;
}

std::string_view relation_name(PosetRelation r) {
  switch (r) {
    case PosetRelation::Less:
      return "less";
    case PosetRelation::Greater:
      return "greater";
    case PosetRelation::Equal:
      return "equal";
    case PosetRelation::Incomparable:
      return "incomparable";
  }
  return "unknown";
}

PosetRelation compare(const Permutation& p, const Permutation& q) {
  return compare_impl(p, q, [](const Permutation& a, const Permutation& b) {
    return is_contained(a, b);
  });
}

PosetRelation compare_oracle(const Permutation& p, const Permutation& q,
                             std::uint64_t budget) {
  return compare_impl(p, q, [budget](const Permutation& a, const Permutation& b) {
    return contains_oracle(a, b, budget);
  });
}

}  // namespace permpat
