#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "symrank/field.hpp"
#include "symrank/linpoly.hpp"
#include "symrank/matrix.hpp"

namespace testing {

using namespace symrank;

inline FieldSpec f4_spec() { return {2, {{1, 1, 1}}, 0}; }
inline FieldSpec f8_spec() { return {2, {{1, 1, 0, 1}}, 0}; }
// alpha root of x^2 + 2x + 2, as in the worked F_9 example
inline FieldSpec f9_spec() { return {3, {{2, 2, 1}}, 0}; }
// alpha root of x^4 + x + 1
inline FieldSpec f16_spec() { return {2, {{1, 1, 0, 0, 1}}, 0}; }
inline FieldSpec f81_spec() { return default_spec(3, 4); }

inline Elem random_elem(const Field& F, std::mt19937_64& rng) {
  return Elem{static_cast<std::uint32_t>(rng() % F.size())};
}

inline Elem random_nonzero(const Field& F, std::mt19937_64& rng) {
  return Elem{static_cast<std::uint32_t>(1 + rng() % (F.size() - 1))};
}

inline LinearizedPoly random_poly(const Field& F, std::mt19937_64& rng) {
  std::vector<Elem> c(F.m());
  for (auto& e : c) e = random_elem(F, rng);
  return LinearizedPoly(F, c);
}

/// Polynomial number n: its coefficients are the base-|F| digits of n.
inline LinearizedPoly poly_number(const Field& F, std::uint64_t n) {
  std::vector<Elem> c(F.m());
  for (auto& e : c) {
    e = Elem{static_cast<std::uint32_t>(n % F.size())};
    n /= F.size();
  }
  return LinearizedPoly(F, c);
}

inline std::uint64_t poly_count(const Field& F) {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < F.m(); ++i) n *= F.size();
  return n;
}

inline Matrix random_invertible(const Field& F, std::size_t m, std::mt19937_64& rng) {
  for (;;) {
    Matrix P(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) P(i, j) = Elem{static_cast<std::uint32_t>(rng() % F.q())};
    if (determinant(F, P).v != 0) return P;
  }
}

inline OrderedBasis random_basis(const Field& F, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Elem> b(F.m());
    for (auto& e : b) e = random_nonzero(F, rng);
    try {
      return OrderedBasis(F, b);
    } catch (const Error&) {
    }
  }
}

/// Plain O(m^3) rank over a prime field Z/p, written without the library's elimination.
inline std::size_t naive_rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] % p == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    std::int64_t inv = 1;
    for (std::int64_t t = 1; t < p; ++t)
      if ((a[r][c] * t) % p == 1) inv = t;
    for (auto& x : a[r]) x = (x * inv) % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] % p == 0) continue;
      const std::int64_t f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = ((a[i][k] - f * a[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace testing
