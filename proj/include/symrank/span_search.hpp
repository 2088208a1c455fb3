#pragma once

/**
 * @file span_search.hpp
 * @brief Smallest subsets of a candidate list whose F_q-span contains a target space.
 *
 * Vectors have entries in the base field F_q of a Field. Subsets of size R
 * are visited in lexicographic order of index tuples. A budget limits the
 * lexicographic rank that may be reached, so results never depend on the
 * number of worker threads.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "symrank/field.hpp"

namespace symrank {

using Vec = std::vector<Elem>;

struct SpanProblem {
  Field field;
  std::vector<Vec> candidates;
  std::vector<Vec> targets;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };
const char* to_string(SearchStatus s) noexcept;

struct SpanSearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  /// Indices into the candidate list, increasing.
  std::vector<std::size_t> chosen;
  /// Lexicographic rank of the result (Found) or of the first unexplored subset.
  std::uint64_t rank = 0;
};

/// Echelon form used by the search, exposed for tests.
class Echelon {
 public:
  explicit Echelon(const Field* field = nullptr) : field_(field) {}
  /// Reduces v in place; returns true when it was independent and got added.
  bool insert(Vec v);
  /// True when v lies in the span.
  bool contains(Vec v) const;
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  void reduce(Vec& v) const;
  const Field* field_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept;

/// Dimension of span(targets) over F_q.
std::size_t target_dimension(const SpanProblem& p);

/// Deterministic lexicographic search for the first R-subset (by rank) whose
/// span contains every target, restricted to ranks below `budget`.
SpanSearchResult span_search_lex(const SpanProblem& p, std::size_t R, std::uint64_t budget, unsigned workers = 1);

/// Trial k draws R distinct candidates from a generator seeded by (seed, k);
/// returns the smallest successful k below `trials`. Never Exhausted.
SpanSearchResult span_search_random(const SpanProblem& p, std::size_t R, std::uint64_t trials, std::uint64_t seed,
                                    unsigned workers = 1);

/// True when the span of the chosen candidates contains every target.
bool spans_targets(const SpanProblem& p, const std::vector<std::size_t>& chosen);

}  // namespace symrank
