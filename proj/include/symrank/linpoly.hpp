#pragma once

/**
 * @file linpoly.hpp
 * @brief Linearized polynomials sum a_i x^{q^i} over F_{q^m}, reduced mod x^{q^m} - x.
 *
 * A polynomial is stored as its m coefficients. Symmetry is taken with
 * respect to the trace form <x, y> = Tr(xy). Matrix models use the
 * convention "column j = coordinates of f(b*_j) in B", which makes the entry
 * (i, j) equal to Tr(b*_i f(b*_j)).
 */

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symrank/field.hpp"
#include "symrank/matrix.hpp"

namespace symrank {

class LinearizedPoly {
 public:
  LinearizedPoly() = default;
  LinearizedPoly(Field field, std::vector<Elem> coeffs);

  static LinearizedPoly zero(const Field& field);
  /// a * x^{q^i}
  static LinearizedPoly monomial(const Field& field, Elem a, std::size_t i);
  static LinearizedPoly identity(const Field& field) { return monomial(field, field.one(), 0); }
  /// The trace polynomial: every coefficient 1.
  static LinearizedPoly trace_poly(const Field& field);
  /// Interpolates the unique polynomial with f(domain_j) = images_j.
  static LinearizedPoly from_map(const Field& field, const OrderedBasis& domain, std::span<const Elem> images);

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Elem coeff(std::size_t i) const { return coeffs_.at(i); }
  bool is_zero() const;

  Elem operator()(Elem x) const;

  LinearizedPoly operator+(const LinearizedPoly& o) const;
  LinearizedPoly operator-(const LinearizedPoly& o) const;
  /// Scalar multiple s * f.
  LinearizedPoly scaled(Elem s) const;
  /// (*this) o g, i.e. x -> f(g(x)).
  LinearizedPoly compose(const LinearizedPoly& g) const;

  friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const LinearizedPoly& a, const LinearizedPoly& b) { return a.coeffs_ < b.coeffs_; }

 private:
  Field field_;
  std::vector<Elem> coeffs_;
};

Elem eval(const LinearizedPoly& f, Elem x);
LinearizedPoly adjoint(const LinearizedPoly& f);
bool is_symmetric(const LinearizedPoly& f);
/// m - dim ker f, via Gaussian elimination on the evaluation matrix.
std::size_t rank(const LinearizedPoly& f);

/// Matrix of f with column j = coords(f(domain_j), codomain).
Matrix matrix_of(const LinearizedPoly& f, const OrderedBasis& domain, const OrderedBasis& codomain);

/// c * alpha * Tr(alpha x); coefficient i is c * alpha^{1 + q^i}.
LinearizedPoly rank_one_symmetric(const Field& field, Elem alpha, Elem c);

struct GramMatrix {
  Matrix matrix;
  OrderedBasis basis;
  OrderedBasis dual;
};

GramMatrix to_gram(const LinearizedPoly& f, const OrderedBasis& basis);
GramMatrix to_gram(const LinearizedPoly& f, const OrderedBasis& basis, const OrderedBasis& dual);
/// Inverse of to_gram for the same basis.
LinearizedPoly from_gram(const Field& field, const Matrix& gram, const OrderedBasis& basis);

/// Visits every rank-one symmetric polynomial exactly once, in order of first
/// appearance when (alpha, c) runs through enumeration order.
void for_each_rank_one_symmetric(const Field& field, const std::function<void(const LinearizedPoly&)>& visit,
                                 std::uint64_t cap = kDefaultCap);
std::vector<LinearizedPoly> enumerate_rank_one_symmetric(const Field& field, std::uint64_t cap = kDefaultCap);

/// "a0 + a1*x^q + a2*x^q2 + ..." with elements in the field's text format.
std::string format(const LinearizedPoly& f);
LinearizedPoly parse_linpoly(const Field& field, std::string_view text);

}  // namespace symrank
