#pragma once

/**
 * @file decomp.hpp
 * @brief Linear systems whose F_q-solvability certifies a symmetric
 * decomposition, and the closed-form constructions for m = 2, 3, 4.
 *
 * For alphas (alpha_1..alpha_R) and a generator xi of F_{q^m}, the system for
 * target i has one row per exponent q^a + q^b, entries alpha_j^{q^a + q^b},
 * and asks for X in F_q^R with A X = (xi^i, 0, ..., 0). The enlarged system
 * closes the rows under the q-Frobenius.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symrank/field.hpp"
#include "symrank/matrix.hpp"
#include "symrank/multtensor.hpp"

namespace symrank {

/// Row exponent q^a + q^b (unordered; stored with a >= b).
struct ExponentPair {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend bool operator==(ExponentPair, ExponentPair) = default;
};

struct ConstrainedSystem {
  Field field;
  Matrix matrix;  // over F_{q^m}
  std::vector<Elem> rhs;
  std::size_t target = 0;
  std::vector<ExponentPair> rows;
};

ConstrainedSystem build_sigma(const Field& field, std::span<const Elem> alphas, Elem xi, std::size_t i);
ConstrainedSystem build_sigma_star(const Field& field, std::span<const Elem> alphas, Elem xi, std::size_t i);

/// Row exponents of the enlarged system, in construction order.
std::vector<ExponentPair> sigma_star_rows(std::uint32_t m);

/// Expands every equation into m equations over F_q and eliminates; the
/// returned X has free variables set to zero.
std::optional<std::vector<Elem>> solve_fq_constrained(const ConstrainedSystem& sys);

/// Square, nonsingular, Frobenius-stable systems: solve over F_{q^m} and
/// confirm that the unique solution lies in F_q. Nullopt when singular.
std::optional<std::vector<Elem>> frobenius_unique_criterion(const ConstrainedSystem& sys);

/// Solves the systems for every target i < m and packages a certificate.
std::optional<DecompositionCertificate> certificate_from_alphas(const Field& field, Elem xi,
                                                                std::span<const Elem> alphas);

// --- m = 2 -----------------------------------------------------------------

/// eta^{2q} - eta^{2q-1} - eta^{q+1} + eta^{q-1} + eta - 1
Elem m2_condition(const Field& field, Elem eta);
DecompositionCertificate m2_construct(const Field& field);

// --- m = 3 -----------------------------------------------------------------

/// Univariate polynomial with coefficients in the prime field F_p, constant first.
struct UniPoly {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> coeffs;

  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept;
  std::uint32_t leading() const noexcept;
  Elem evaluate(const Field& field, Elem x) const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

/// Determinant of the 6 x 6 matrix with row exponents 2, 2q, 2q^2, q+1, q^2+q, q^2+1.
Elem m3_det(const Field& field, std::span<const Elem> alphas);
/// The same determinant for alpha_j = T^{j-1}, expanded symbolically over F_p.
UniPoly m3_fT(std::uint32_t q);
/// T^e -> T^{((e-1) mod (q^m - 1)) + 1} for e >= 1.
UniPoly reduce_mod_field_poly(const UniPoly& f, std::uint32_t q, std::uint32_t m);
DecompositionCertificate m3_construct(const Field& field);

// --- m = 4 -----------------------------------------------------------------

struct Table4Row {
  std::uint32_t q;
  FieldSpec spec;
  /// Exponents i_j with alpha_j = xi^{i_j}, xi the root of the top polynomial.
  std::vector<std::uint32_t> exponents;
  /// The sequence as originally tabulated.
  std::vector<std::uint32_t> tabulated;
  std::size_t R;
};

const std::vector<Table4Row>& table4();
DecompositionCertificate m4_construct_from_table(std::uint32_t q);
/// Same construction with explicit exponents; nullopt when a system has no F_q solution.
std::optional<DecompositionCertificate> m4_certificate(const Field& field, Elem xi,
                                                       std::span<const std::uint32_t> exponents);

/// Trivial m = 1 certificate: x = 1 * Tr(1 x).
DecompositionCertificate m1_construct(const Field& field);

}  // namespace symrank
