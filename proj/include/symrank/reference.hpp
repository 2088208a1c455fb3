#pragma once

/**
 * @file reference.hpp
 * @brief Embedded reference values for mu_q^sym(m) and the m = 3 leading terms.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symrank {

struct KnownInterval {
  std::size_t lo = 0;
  /// Unset when no upper bound is known.
  std::optional<std::size_t> hi;
  /// Which rules contributed, in the order they were applied.
  std::vector<std::string> rules;

  bool exact() const noexcept { return hi && *hi == lo; }
  bool contains(std::size_t r) const noexcept { return r >= lo && (!hi || r <= *hi); }
};

struct Table1Entry {
  std::uint32_t q, m;
  std::size_t lo, hi;
};

/// Known values and intervals for q in {2,3,4}, m in 2..10.
const std::vector<Table1Entry>& table1();
std::optional<Table1Entry> table1_entry(std::uint32_t q, std::uint32_t m);

struct LeadingTerm {
  std::uint32_t q;
  std::uint32_t coeff;
  std::uint64_t exponent;
};

/// Leading term of f(T) mod (T^{q^3} - T) for q = 2..17.
const std::vector<LeadingTerm>& table2();

/// Greatest integer <= 2 sqrt(q) prime to q, or 2 sqrt(q) when q is a square.
std::uint32_t epsilon(std::uint32_t q);

/// Tightest interval for mu_q^sym(m) from the table and the closed-form rules.
KnownInterval cmd_known(std::uint32_t q, std::uint32_t m);

std::string format(const KnownInterval& k);

}  // namespace symrank
