#include "symrank/reference.hpp"

#include <numeric>

#include "symrank/field.hpp"

namespace symrank {

const std::vector<Table1Entry>& table1() {
  static const std::vector<Table1Entry> rows = [] {
    const std::size_t raw[3][9][2] = {
        {{3, 3}, {6, 6}, {9, 9}, {10, 13}, {15, 15}, {14, 22}, {16, 24}, {18, 30}, {20, 33}},
        {{3, 3}, {6, 6}, {8, 9}, {10, 11}, {12, 15}, {14, 19}, {16, 21}, {18, 26}, {20, 27}},
        {{3, 3}, {5, 5}, {8, 8}, {10, 11}, {12, 14}, {14, 17}, {16, 20}, {18, 23}, {20, 27}},
    };
    std::vector<Table1Entry> out;
    for (std::uint32_t qi = 0; qi < 3; ++qi)
      for (std::uint32_t mi = 0; mi < 9; ++mi) out.push_back({qi + 2, mi + 2, raw[qi][mi][0], raw[qi][mi][1]});
    return out;
  }();
  return rows;
}

std::optional<Table1Entry> table1_entry(std::uint32_t q, std::uint32_t m) {
  for (const auto& e : table1())
    if (e.q == q && e.m == m) return e;
  return std::nullopt;
}

const std::vector<LeadingTerm>& table2() {
  static const std::vector<LeadingTerm> rows = {
      {2, 1, 6},     {3, 2, 24},     {4, 1, 63},      {5, 1, 122},  {7, 2, 336},   {8, 1, 485},
      {9, 1, 718},   {11, 10, 1280}, {13, 12, 2178},  {16, 1, 4035}, {17, 1, 4814},
  };
  return rows;
}

std::uint32_t epsilon(std::uint32_t q) {
  std::uint32_t s = 0;
  while ((s + 1) * (s + 1) <= q) ++s;
  if (s * s == q) return 2 * s;
  // Greatest e with e^2 <= 4q.
  std::uint32_t e = 0;
  while ((e + 1) * (e + 1) <= 4 * q) ++e;
  while (std::gcd(e, q) != 1) --e;
  return e;
}

KnownInterval cmd_known(std::uint32_t q, std::uint32_t m) {
  prime_power(q);
  KnownInterval k;
  const std::size_t lower = 2 * std::size_t{m} - 1;
  k.lo = lower;
  k.rules.push_back("lower bound 2m-1");
  if (std::size_t{q} + 2 >= 2 * std::size_t{m}) {
    k.hi = lower;
    k.rules.push_back("q >= 2m-2: exactly 2m-1");
  } else {
    k.lo = lower + 1;
    k.rules.push_back("q < 2m-2: at least 2m");
  }
  // q/2 + 1 < m <= (q + 1 + eps(q))/2, doubled to stay in integers.
  if (q + 2 < 2 * m && 2 * m <= q + 1 + epsilon(q)) {
    k.lo = 2 * std::size_t{m};
    k.hi = 2 * std::size_t{m};
    k.rules.push_back("elliptic range: exactly 2m");
  }
  if (auto e = table1_entry(q, m)) {
    k.lo = std::max(k.lo, e->lo);
    k.hi = k.hi ? std::min(*k.hi, e->hi) : e->hi;
    k.rules.push_back("table");
  }
  return k;
}

std::string format(const KnownInterval& k) {
  if (k.exact()) return std::to_string(k.lo);
  return std::to_string(k.lo) + "--" + (k.hi ? std::to_string(*k.hi) : std::string("inf"));
}

}  // namespace symrank
