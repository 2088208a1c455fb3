#pragma once

/**
 * @file search.hpp
 * @brief Searching for symmetric decompositions of the multiplication map.
 *
 * A decomposition with R terms is an R-set of rank-one symmetric polynomials
 * alpha Tr(alpha x) whose F_q-span contains every a x. Since alpha and
 * lambda alpha (lambda in F_q^*) span the same line, only one alpha per
 * F_q^*-class is considered.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symrank/multtensor.hpp"
#include "symrank/span_search.hpp"

namespace symrank {

enum class Strategy { Powers, Random, Exhaustive };
Strategy parse_strategy(const std::string& s);
const char* to_string(Strategy s) noexcept;

struct SearchOptions {
  std::size_t R = 0;
  Strategy strategy = Strategy::Exhaustive;
  std::uint64_t budget = std::uint64_t{1} << 32;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  /// Powers strategy: exponents of `base` tried first, in this order.
  std::vector<std::uint32_t> hint;
  /// Powers strategy: the element whose powers are used; primitive when unset.
  std::optional<Elem> base;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<DecompositionCertificate> certificate;
  /// Candidate classes in search order.
  std::vector<Elem> candidates;
};

/// One alpha per F_q^*-class, in the order the strategy visits them.
std::vector<Elem> alpha_classes(const Field& field, const SearchOptions& opts);

SearchOutcome search(const Field& field, const SearchOptions& opts);

}  // namespace symrank
