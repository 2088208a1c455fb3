#include "symrank/multtensor.hpp"

#include <algorithm>
#include <limits>

namespace symrank {

SliceSpace slice_space(const Field& field, const OrderedBasis& basis, Elem xi) {
  const std::size_t m = field.m();
  if (field.degree_over_base(xi) != m) {
    throw Error(ErrorKind::DegenerateGenerator, "xi = " + field.format(xi) + " does not have degree m over F_q");
  }
  SliceSpace s{field, basis, field.trace_dual_basis(basis), xi, {}};
  Elem power = field.one();
  for (std::size_t i = 0; i < m; ++i) {
    s.generators.push_back(to_gram(LinearizedPoly::monomial(field, power, 0), s.basis, s.dual).matrix);
    power = field.mul(power, xi);
  }
  return s;
}

namespace {

/// Stacks matrices as columns of a (rows*cols) x n matrix.
Matrix stack_columns(std::span<const Matrix> mats, std::size_t entries) {
  Matrix out(entries, mats.size());
  for (std::size_t j = 0; j < mats.size(); ++j) {
    const auto& d = mats[j].data();
    for (std::size_t i = 0; i < entries; ++i) out(i, j) = d[i];
  }
  return out;
}

}  // namespace

KruskalBound kruskal_bound(const SliceSpace& s, std::uint64_t cap) {
  const Field& F = s.field;
  const std::size_t m = F.m();
  const std::size_t k = s.generators.size();
  KruskalBound out;
  out.dimension = rank(F, stack_columns(s.generators, m * m));

  std::uint64_t words = 1;
  for (std::size_t i = 0; i < k && words <= cap; ++i) words *= F.q();
  if (words > cap) {
    out.min_rank = m;
    out.analytic = true;
  } else {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<std::uint32_t> digits(k, 0);
    Matrix acc(m, m);
    for (std::uint64_t w = 1; w < words; ++w) {
      // Step the coefficient vector in base q and update the running sum.
      for (std::size_t i = 0; i < k; ++i) {
        const std::uint32_t old = digits[i];
        const std::uint32_t next = old + 1 < F.q() ? old + 1 : 0;
        digits[i] = next;
        acc = add(F, acc, scale(F, F.sub(Elem{next}, Elem{old}), s.generators[i]));
        if (next != 0) break;
      }
      if (acc.is_zero()) continue;
      best = std::min(best, rank(F, acc));
    }
    out.min_rank = best == std::numeric_limits<std::size_t>::max() ? 0 : best;
  }
  out.value = out.dimension + out.min_rank - 1;
  return out;
}

std::optional<Matrix> span_coefficients(const Field& field, std::span<const Matrix> targets,
                                        std::span<const Matrix> spanning) {
  const std::size_t R = spanning.size();
  Matrix out(targets.size(), R);
  if (targets.empty()) return out;
  const std::size_t entries = targets.front().data().size();
  const Matrix system = stack_columns(spanning, entries);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& t = targets[i].data();
    if (R == 0) {
      if (!targets[i].is_zero()) return std::nullopt;
      continue;
    }
    auto x = solve(field, system, t);
    if (!x) return std::nullopt;
    for (std::size_t j = 0; j < R; ++j) out(i, j) = (*x)[j];
  }
  return out;
}

std::optional<Matrix> verify_spanning(const SliceSpace& s, std::span<const Matrix> rank_ones, bool require_symmetric) {
  for (std::size_t j = 0; j < rank_ones.size(); ++j) {
    if (require_symmetric && !rank_ones[j].is_symmetric()) {
      throw Error(ErrorKind::NotSymmetric, "matrix " + std::to_string(j) + " is not symmetric", j);
    }
    if (rank(s.field, rank_ones[j]) != 1) {
      throw Error(ErrorKind::NotRankOne, "matrix " + std::to_string(j) + " does not have rank one", j);
    }
  }
  return span_coefficients(s.field, s.generators, rank_ones);
}

std::vector<LinearizedPoly> DecompositionCertificate::terms() const {
  std::vector<LinearizedPoly> out;
  out.reserve(alphas.size());
  for (std::size_t j = 0; j < alphas.size(); ++j) out.push_back(rank_one_symmetric(field, alphas[j], scalars.at(j)));
  return out;
}

CertificateCheck verify_certificate(const DecompositionCertificate& cert) {
  const Field& F = cert.field;
  const std::size_t m = F.m();
  const std::size_t R = cert.alphas.size();
  if (cert.scalars.size() != R) return {false, std::nullopt, "scalar list length differs from alpha list"};
  if (cert.coefficients.rows() != m || cert.coefficients.cols() != R) {
    return {false, std::nullopt, "coefficient matrix must be m x R"};
  }
  for (std::size_t j = 0; j < R; ++j) {
    if (cert.alphas[j].v == 0 || cert.alphas[j].v >= F.size()) return {false, std::nullopt, "alpha_" + std::to_string(j) + " invalid"};
    if (cert.scalars[j].v == 0 || !F.in_base(cert.scalars[j])) {
      return {false, std::nullopt, "c_" + std::to_string(j) + " not in F_q^*"};
    }
  }
  for (auto e : cert.coefficients.data())
    if (!F.in_base(e)) return {false, std::nullopt, "coefficient outside F_q"};
  if (F.degree_over_base(cert.xi) != m) return {false, std::nullopt, "xi does not generate F_{q^m} over F_q"};

  const auto terms = cert.terms();
  Elem power = F.one();
  for (std::size_t i = 0; i < m; ++i) {
    LinearizedPoly acc = LinearizedPoly::zero(F);
    for (std::size_t j = 0; j < R; ++j) {
      const Elem x = cert.coefficients(i, j);
      if (x.v != 0) acc = acc + terms[j].scaled(x);
    }
    if (acc != LinearizedPoly::monomial(F, power, 0)) {
      return {false, i, "identity for xi^" + std::to_string(i) + " x fails"};
    }
    power = F.mul(power, cert.xi);
  }
  return {true, std::nullopt, {}};
}

}  // namespace symrank
