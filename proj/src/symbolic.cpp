#include <algorithm>
#include <array>
#include <numeric>

#include "symrank/decomp.hpp"

namespace symrank {

std::int64_t UniPoly::degree() const noexcept {
  for (std::size_t k = coeffs.size(); k-- > 0;)
    if (coeffs[k] % p != 0) return static_cast<std::int64_t>(k);
  return -1;
}

std::uint32_t UniPoly::leading() const noexcept {
  const auto d = degree();
  return d < 0 ? 0 : coeffs[static_cast<std::size_t>(d)];
}

Elem UniPoly::evaluate(const Field& field, Elem x) const {
  // Horner from the top.
  Elem acc{0};
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = field.add(field.mul(acc, x), field.from_int(coeffs[k]));
  return acc;
}

namespace {

UniPoly trimmed(UniPoly f) {
  while (!f.coeffs.empty() && f.coeffs.back() == 0) f.coeffs.pop_back();
  return f;
}

}  // namespace

UniPoly m3_fT(std::uint32_t q) {
  const auto [p, e] = prime_power(q);
  (void)e;
  const std::uint64_t Q = q;
  const std::array<std::uint64_t, 6> rowexp = {2, 2 * Q, 2 * Q * Q, Q + 1, Q * Q + Q, Q * Q + 1};
  // Entry (r, c) is T^{c * rowexp[r]}; each permutation contributes one signed monomial.
  std::uint64_t maxdeg = 0;
  for (auto r : rowexp) maxdeg += 5 * r;
  std::vector<std::int64_t> acc(maxdeg + 1, 0);

  std::array<int, 6> perm;
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::uint64_t deg = 0;
    for (int r = 0; r < 6; ++r) deg += static_cast<std::uint64_t>(perm[r]) * rowexp[r];
    int inversions = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) inversions += perm[a] > perm[b];
    acc[deg] += inversions % 2 ? -1 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));

  UniPoly f{p, std::vector<std::uint32_t>(acc.size())};
  const std::int64_t P = p;
  for (std::size_t k = 0; k < acc.size(); ++k) f.coeffs[k] = static_cast<std::uint32_t>(((acc[k] % P) + P) % P);
  return trimmed(std::move(f));
}

UniPoly reduce_mod_field_poly(const UniPoly& f, std::uint32_t q, std::uint32_t m) {
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < m; ++i) order *= q;
  const std::uint64_t period = order - 1;
  UniPoly out{f.p, std::vector<std::uint32_t>(std::min<std::uint64_t>(f.coeffs.size(), order), 0)};
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    if (f.coeffs[k] == 0) continue;
    const std::size_t target = k == 0 ? 0 : static_cast<std::size_t>((k - 1) % period + 1);
    out.coeffs[target] = (out.coeffs[target] + f.coeffs[k]) % f.p;
  }
  return trimmed(std::move(out));
}

}  // namespace symrank
