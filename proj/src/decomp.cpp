#include "symrank/decomp.hpp"

#include <utility>

namespace symrank {

namespace {

void require_nonzero(std::span<const Elem> alphas) {
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    if (alphas[j].v == 0) throw Error(ErrorKind::ZeroAlpha, "alpha_" + std::to_string(j + 1) + " is zero", j);
  }
}

ExponentPair normalised(std::uint32_t a, std::uint32_t b) { return a >= b ? ExponentPair{a, b} : ExponentPair{b, a}; }

Elem power_entry(const Field& F, Elem alpha, ExponentPair e) {
  return F.mul(F.frobenius(alpha, e.a), F.frobenius(alpha, e.b));
}

ConstrainedSystem assemble(const Field& F, std::span<const Elem> alphas, std::vector<ExponentPair> rows,
                           std::vector<Elem> rhs, std::size_t i) {
  Matrix a(rows.size(), alphas.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < alphas.size(); ++j) a(r, j) = power_entry(F, alphas[j], rows[r]);
  return ConstrainedSystem{F, std::move(a), std::move(rhs), i, std::move(rows)};
}

}  // namespace

ConstrainedSystem build_sigma(const Field& field, std::span<const Elem> alphas, Elem xi, std::size_t i) {
  require_nonzero(alphas);
  const std::uint32_t m = field.m();
  std::vector<ExponentPair> rows;
  for (std::uint32_t k = 0; k < m; ++k) rows.push_back({k, 0});
  std::vector<Elem> rhs(m, Elem{0});
  rhs[0] = field.pow(xi, static_cast<std::int64_t>(i));
  return assemble(field, alphas, std::move(rows), std::move(rhs), i);
}

std::vector<ExponentPair> sigma_star_rows(std::uint32_t m) {
  std::vector<ExponentPair> rows;
  for (std::uint32_t k = 0; k < m; ++k) {
    for (std::uint32_t j = 0; j < m; ++j) {
      const ExponentPair e = normalised((k + j) % m, j);
      bool dup = false;
      for (auto r : rows) dup = dup || r == e;
      if (!dup) rows.push_back(e);
    }
  }
  return rows;
}

ConstrainedSystem build_sigma_star(const Field& field, std::span<const Elem> alphas, Elem xi, std::size_t i) {
  require_nonzero(alphas);
  const std::uint32_t m = field.m();
  auto rows = sigma_star_rows(m);
  std::vector<Elem> rhs(rows.size(), Elem{0});
  const Elem xi_i = field.pow(xi, static_cast<std::int64_t>(i));
  // The orbit of (0,0) is exactly the diagonal pairs (j,j).
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].a == rows[r].b) rhs[r] = field.frobenius(xi_i, rows[r].a);
  }
  return assemble(field, alphas, std::move(rows), std::move(rhs), i);
}

std::optional<std::vector<Elem>> solve_fq_constrained(const ConstrainedSystem& sys) {
  const Field& F = sys.field;
  const std::size_t m = F.m();
  const std::size_t R = sys.matrix.cols();
  const std::size_t rows = sys.matrix.rows();
  if (R == 0) {
    for (auto b : sys.rhs)
      if (b.v != 0) return std::nullopt;
    return std::vector<Elem>{};
  }
  Matrix expanded(rows * m, R);
  std::vector<Elem> rhs(rows * m);
  std::vector<Elem> digits(m);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < R; ++j) {
      F.native_coords(sys.matrix(r, j), digits);
      for (std::size_t k = 0; k < m; ++k) expanded(r * m + k, j) = digits[k];
    }
    F.native_coords(sys.rhs.at(r), digits);
    for (std::size_t k = 0; k < m; ++k) rhs[r * m + k] = digits[k];
  }
  return solve(F, expanded, rhs);
}

std::optional<std::vector<Elem>> frobenius_unique_criterion(const ConstrainedSystem& sys) {
  const Field& F = sys.field;
  if (sys.matrix.rows() != sys.matrix.cols()) {
    throw Error(ErrorKind::MalformedSpec, "the enlarged system is not square");
  }
  if (determinant(F, sys.matrix).v == 0) return std::nullopt;
  auto x = solve(F, sys.matrix, sys.rhs);
  for (std::size_t j = 0; j < x->size(); ++j) {
    if (!F.in_base((*x)[j])) {
      throw Error(ErrorKind::SolutionNotInBase, "unique solution has x_" + std::to_string(j + 1) + " outside F_q", j);
    }
  }
  return x;
}

namespace {

template <class Builder>
std::optional<DecompositionCertificate> certify(const Field& field, Elem xi, std::span<const Elem> alphas,
                                                Builder build) {
  const std::size_t m = field.m();
  DecompositionCertificate cert{field, xi, {alphas.begin(), alphas.end()},
                                std::vector<Elem>(alphas.size(), field.one()), Matrix(m, alphas.size())};
  for (std::size_t i = 0; i < m; ++i) {
    auto x = solve_fq_constrained(build(field, alphas, xi, i));
    if (!x) return std::nullopt;
    for (std::size_t j = 0; j < alphas.size(); ++j) cert.coefficients(i, j) = (*x)[j];
  }
  return cert;
}

DecompositionCertificate checked(std::optional<DecompositionCertificate> cert, const char* what) {
  if (!cert) throw Error(ErrorKind::InvalidCertificate, std::string(what) + ": system has no F_q solution");
  auto check = verify_certificate(*cert);
  if (!check) throw Error(ErrorKind::InvalidCertificate, std::string(what) + ": " + check.reason);
  return std::move(*cert);
}

}  // namespace

std::optional<DecompositionCertificate> certificate_from_alphas(const Field& field, Elem xi,
                                                                std::span<const Elem> alphas) {
  return certify(field, xi, alphas, build_sigma);
}

Elem m2_condition(const Field& F, Elem eta) {
  if (eta.v == 0) throw Error(ErrorKind::ZeroEta, "eta must be nonzero");
  const std::int64_t q = F.q();
  Elem v = F.pow(eta, 2 * q);
  v = F.sub(v, F.pow(eta, 2 * q - 1));
  v = F.sub(v, F.pow(eta, q + 1));
  v = F.add(v, F.pow(eta, q - 1));
  v = F.add(v, eta);
  return F.sub(v, F.one());
}

DecompositionCertificate m2_construct(const Field& field) {
  if (field.m() != 2) throw Error(ErrorKind::MalformedSpec, "m2_construct needs m = 2");
  for (std::uint32_t v = field.q(); v < field.size(); ++v) {
    const Elem eta{v};
    if (m2_condition(field, eta).v == 0) continue;
    const Elem alphas[] = {field.one(), eta, field.mul(eta, eta)};
    // The condition alone does not rule out eta^{q-1} = -1, where the 3 x 3 matrix is singular.
    if (determinant(field, build_sigma_star(field, alphas, eta, 0).matrix).v == 0) continue;
    return checked(certificate_from_alphas(field, field.find_generator(), alphas), "m2_construct");
  }
  throw Error(ErrorKind::InvalidCertificate, "no admissible eta");
}

Elem m3_det(const Field& field, std::span<const Elem> alphas) {
  if (alphas.size() != 6) throw Error(ErrorKind::MalformedSpec, "m3_det needs six elements");
  require_nonzero(alphas);
  const auto rows = sigma_star_rows(3);
  Matrix a(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t j = 0; j < 6; ++j) a(r, j) = power_entry(field, alphas[j], rows[r]);
  return determinant(field, std::move(a));
}

DecompositionCertificate m3_construct(const Field& field) {
  if (field.m() != 3) throw Error(ErrorKind::MalformedSpec, "m3_construct needs m = 3");
  for (std::uint32_t v = field.q(); v < field.size(); ++v) {
    const Elem xi{v};
    std::vector<Elem> alphas{field.one()};
    for (int k = 1; k < 6; ++k) alphas.push_back(field.mul(alphas.back(), xi));
    if (m3_det(field, alphas).v == 0) continue;
    return checked(certificate_from_alphas(field, xi, alphas), "m3_construct");
  }
  throw Error(ErrorKind::InvalidCertificate, "every xi is a root of f");
}

const std::vector<Table4Row>& table4() {
  static const std::vector<Table4Row> rows = {
      {2, FieldSpec{2, {{1, 1, 0, 0, 1}}, 0}, {0, 1, 4, 5, 6, 9, 10, 11, 14}, {0, 1, 4, 5, 6, 9, 10, 11, 14}, 9},
      {3, FieldSpec{3, {{2, 0, 0, 2, 1}}, 0}, {0, 9, 15, 33, 36, 42, 52, 54, 70}, {0, 9, 15, 33, 36, 42, 52, 54, 70}, 9},
      // The listed q = 4 sequence repeats the q = 3 row and does not solve the systems.
      {4, FieldSpec{2, {{1, 1, 1}, {2, 2, 2, 1, 1}}, 1}, {0, 1, 2, 5, 24, 27, 28, 37},
       {0, 9, 15, 33, 36, 42, 52, 54, 70}, 8},
      {5, FieldSpec{5, {{2, 4, 4, 0, 1}}, 0}, {9, 63, 104, 170, 419, 487, 500, 542}, {9, 63, 104, 170, 419, 487, 500, 542}, 8},
  };
  return rows;
}

std::optional<DecompositionCertificate> m4_certificate(const Field& field, Elem xi,
                                                       std::span<const std::uint32_t> exponents) {
  std::vector<Elem> alphas;
  for (auto e : exponents) alphas.push_back(field.pow(xi, e));
  return certify(field, xi, alphas, build_sigma_star);
}

DecompositionCertificate m4_construct_from_table(std::uint32_t q) {
  for (const auto& row : table4()) {
    if (row.q != q) continue;
    const Field field(row.spec);
    const Elem xi{q};  // the root of the top defining polynomial
    return checked(m4_certificate(field, xi, row.exponents), "m4_construct_from_table");
  }
  throw Error(ErrorKind::UnsupportedQ, "no tabulated m = 4 construction for q = " + std::to_string(q));
}

DecompositionCertificate m1_construct(const Field& field) {
  if (field.m() != 1) throw Error(ErrorKind::MalformedSpec, "m1_construct needs m = 1");
  const Elem alphas[] = {field.one()};
  return checked(certificate_from_alphas(field, field.find_generator(), alphas), "m1_construct");
}

}  // namespace symrank
