#pragma once

/**
 * @file commands.hpp
 * @brief The subcommands behind the command-line tool. Each writes its report
 * to `out` and returns the process exit code.
 */

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "symrank/field.hpp"

namespace symrank {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNo = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitMismatch = 4;

struct GlobalOptions {
  bool json = false;
  unsigned workers = 1;
  std::uint64_t cap = kDefaultCap;
  std::uint64_t seed = 0;
};

struct SearchArgs {
  std::uint32_t q = 2, m = 2;
  std::size_t R = 0;
  std::string strategy = "exhaustive";
  std::uint64_t budget = std::uint64_t{1} << 32;
  std::vector<std::uint32_t> hint;
  std::optional<std::string> poly_file;
  std::optional<std::string> output;
};

int cmd_construct(const GlobalOptions& g, std::uint32_t q, std::uint32_t m, const std::optional<std::string>& poly_file,
                  const std::optional<std::string>& output, std::ostream& out);
int cmd_search(const GlobalOptions& g, const SearchArgs& a, std::ostream& out);
int cmd_verify(const GlobalOptions& g, const std::string& path, std::ostream& out);
int cmd_ftable(const GlobalOptions& g, std::uint32_t m, std::uint32_t qmax, std::ostream& out);
/// Exports a certificate file, or the default construction for (q, m) when no file is given.
int cmd_export(const GlobalOptions& g, const std::string& format, const std::optional<std::string>& cert_path,
               std::uint32_t q, std::uint32_t m, std::ostream& out);
int cmd_known(const GlobalOptions& g, std::uint32_t q, std::uint32_t m, std::ostream& out);
int cmd_reproduce(const GlobalOptions& g, const std::string& target, std::ostream& out);

int cmd_code_build_sqmd(const GlobalOptions& g, std::uint32_t q, std::uint32_t m, std::size_t d,
                        const std::optional<std::string>& output, std::ostream& out);
int cmd_code_mindist(const GlobalOptions& g, const std::string& path, std::ostream& out);
int cmd_code_mrd(const GlobalOptions& g, const std::string& path, std::ostream& out);
int cmd_code_strk(const GlobalOptions& g, const std::string& path, std::size_t rmax, std::uint64_t budget,
                  std::ostream& out);

}  // namespace symrank
