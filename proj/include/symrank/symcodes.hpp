#pragma once

/**
 * @file symcodes.hpp
 * @brief F_q-linear symmetric rank-metric codes in Sym_q(m).
 *
 * A code keeps each generator both as a symmetric linearized polynomial and
 * as its Gram matrix in a fixed basis B (with the trace-dual basis), so that
 * construction happens on the polynomial side and rank questions on the
 * matrix side.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "symrank/linpoly.hpp"
#include "symrank/multtensor.hpp"
#include "symrank/span_search.hpp"

namespace symrank {

struct CodeParams {
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t d = 0;
};

class SymCode {
 public:
  SymCode() = default;
  /// Throws NotSymmetric for a non-symmetric generator and BadCode for dependent generators.
  static SymCode from_polys(const Field& field, const OrderedBasis& basis, std::vector<LinearizedPoly> polys);
  static SymCode from_grams(const Field& field, const OrderedBasis& basis, std::vector<Matrix> grams);

  const Field& field() const noexcept { return field_; }
  const OrderedBasis& basis() const noexcept { return basis_; }
  std::size_t m() const noexcept { return field_.m(); }
  std::size_t dimension() const noexcept { return polys_.size(); }
  const std::vector<LinearizedPoly>& polys() const noexcept { return polys_; }
  const std::vector<Matrix>& grams() const noexcept { return grams_; }

 private:
  Field field_;
  OrderedBasis basis_;
  std::vector<LinearizedPoly> polys_;
  std::vector<Matrix> grams_;
};

/// m(m-d+2)/2 when m-d is even, (m+1)(m-d+1)/2 otherwise.
std::size_t singleton_bound(std::size_t m, std::size_t d);

/// The code of b_0 x + sum_{j=1}^{(m-d)/2} (b_j x^{q^j} + (b_j x)^{q^{m-j}}), in the native basis.
SymCode build_sqmd(const Field& field, std::size_t d);
/// The one-dimensional Gabidulin code <x>_{F_{q^m}} (equal to build_sqmd(field, m)).
SymCode gabidulin_code(const Field& field);

std::size_t min_distance(const SymCode& code, std::uint64_t cap = kDefaultCap, unsigned workers = 1);
CodeParams params(const SymCode& code, std::uint64_t cap = kDefaultCap, unsigned workers = 1);
bool is_mrd(const SymCode& code, std::uint64_t cap = kDefaultCap, unsigned workers = 1);

/// A -> P^T A P on every generator; the polynomial model is recomputed.
SymCode congruence_transform(const SymCode& code, const Matrix& P);
/// The same map on a list of matrices (e.g. a spanning witness).
std::vector<Matrix> congruence_transform(const Field& field, const std::vector<Matrix>& mats, const Matrix& P);

enum class StrkStatus { Exact, ExceedsRmax, Indeterminate };
const char* to_string(StrkStatus s) noexcept;

struct StrkResult {
  StrkStatus status = StrkStatus::Indeterminate;
  /// Exact: the value. Indeterminate: the best upper bound found, if any.
  std::optional<std::size_t> value;
  /// Every R below this has been ruled out.
  std::size_t lower = 0;
  std::vector<Matrix> witness;
};

/// One representative v v^T per line of rank-one symmetric matrices
/// (v with first nonzero entry 1), in enumeration order of v.
std::vector<Matrix> rank_one_symmetric_matrices(const Field& field, std::size_t m);

/// Smallest R <= rmax such that R rank-one symmetric matrices span a space containing the code.
StrkResult strk_exact(const SymCode& code, std::size_t rmax, std::uint64_t budget = std::uint64_t{1} << 32,
                      unsigned workers = 1);
/// The same with arbitrary rank-one matrices u v^T.
StrkResult trk_exact(const SymCode& code, std::size_t rmax, std::uint64_t budget = std::uint64_t{1} << 32,
                     unsigned workers = 1);

/// Checks that every witness matrix is rank-one (and symmetric when asked) and that the code lies in their span.
bool verify_witness(const SymCode& code, const std::vector<Matrix>& witness, bool require_symmetric = true);

/// R of a valid certificate: an upper bound for strk of <x>_{F_{q^m}}. Throws InvalidCertificate.
std::size_t strk_upper_from_cert(const DecompositionCertificate& cert);

}  // namespace symrank
