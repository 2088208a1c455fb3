#pragma once

/**
 * @file multtensor.hpp
 * @brief The first-slice space of the multiplication tensor of F_{q^m} over F_q.
 *
 * The tensor itself is never materialised. Its first slice is the
 * one-dimensional Gabidulin code <x>_{F_{q^m}}, represented by the Gram
 * matrices of xi^i x, i < m, in a chosen basis and its trace-dual basis.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symrank/field.hpp"
#include "symrank/linpoly.hpp"
#include "symrank/matrix.hpp"

namespace symrank {

struct SliceSpace {
  Field field;
  OrderedBasis basis;
  OrderedBasis dual;
  Elem xi;
  std::vector<Matrix> generators;
};

SliceSpace slice_space(const Field& field, const OrderedBasis& basis, Elem xi);

struct KruskalBound {
  std::size_t value = 0;
  std::size_t dimension = 0;
  std::size_t min_rank = 0;
  /// True when the span was too large to enumerate and the analytic minimum
  /// rank m of the Gabidulin code was used instead.
  bool analytic = false;
};

inline constexpr std::uint64_t kKruskalCap = std::uint64_t{1} << 20;

KruskalBound kruskal_bound(const SliceSpace& s, std::uint64_t cap = kKruskalCap);

/// Coefficients expressing each target as an F_q-combination of `spanning`
/// (row i = target i), or nullopt when some target is outside the span.
std::optional<Matrix> span_coefficients(const Field& field, std::span<const Matrix> targets,
                                        std::span<const Matrix> spanning);

/// Checks that every supplied matrix has rank one (and is symmetric when
/// `require_symmetric`), then returns the m x R coefficient matrix when the
/// slice space lies in their span.
std::optional<Matrix> verify_spanning(const SliceSpace& s, std::span<const Matrix> rank_ones,
                                      bool require_symmetric = true);

/// Certificate that xi^i x = sum_j X_ij c_j alpha_j Tr(alpha_j x) for all i < m.
struct DecompositionCertificate {
  Field field;
  Elem xi;
  std::vector<Elem> alphas;
  std::vector<Elem> scalars;
  Matrix coefficients;  // m x R over F_q

  std::size_t R() const noexcept { return alphas.size(); }
  /// The rank-one symmetric polynomials c_j alpha_j Tr(alpha_j x).
  std::vector<LinearizedPoly> terms() const;
};

struct CertificateCheck {
  bool valid = false;
  /// First generator index i whose identity fails.
  std::optional<std::size_t> failing_generator;
  std::string reason;

  explicit operator bool() const noexcept { return valid; }
};

CertificateCheck verify_certificate(const DecompositionCertificate& cert);

}  // namespace symrank
