#pragma once

/**
 * @file reproduce.hpp
 * @brief Recomputes the reference tables and worked examples from scratch and
 * compares them cell by cell with the embedded expected values.
 */

#include <string>
#include <vector>

namespace symrank {

struct ReproCell {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct ReproReport {
  std::string target;
  std::vector<ReproCell> cells;
  std::vector<std::string> notes;

  bool ok() const;
  /// First failing cell, or nullptr.
  const ReproCell* first_failure() const;
};

const std::vector<std::string>& reproduce_targets();
/// Throws ParseError for an unknown target.
ReproReport reproduce(const std::string& target);

}  // namespace symrank
