#include "symrank/linpoly.hpp"

#include <set>

namespace symrank {

LinearizedPoly::LinearizedPoly(Field field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_.m()) {
    throw Error(ErrorKind::MalformedSpec,
                "linearized polynomial needs " + std::to_string(field_.m()) + " coefficients");
  }
  for (auto c : coeffs_)
    if (c.v >= field_.size()) throw Error(ErrorKind::MalformedSpec, "coefficient outside the field");
}

LinearizedPoly LinearizedPoly::zero(const Field& field) {
  return LinearizedPoly(field, std::vector<Elem>(field.m(), Elem{0}));
}

LinearizedPoly LinearizedPoly::monomial(const Field& field, Elem a, std::size_t i) {
  std::vector<Elem> c(field.m(), Elem{0});
  c.at(i % field.m()) = a;
  return LinearizedPoly(field, std::move(c));
}

LinearizedPoly LinearizedPoly::trace_poly(const Field& field) {
  return LinearizedPoly(field, std::vector<Elem>(field.m(), field.one()));
}

LinearizedPoly LinearizedPoly::from_map(const Field& field, const OrderedBasis& domain,
                                        std::span<const Elem> images) {
  const std::size_t m = field.m();
  Matrix moore(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) moore(j, k) = field.frobenius(domain[j], static_cast<std::int64_t>(k));
  auto sol = solve(field, moore, images);
  // A Moore matrix of independent elements is invertible.
  return LinearizedPoly(field, std::move(*sol));
}

bool LinearizedPoly::is_zero() const {
  for (auto c : coeffs_)
    if (c.v != 0) return false;
  return true;
}

Elem LinearizedPoly::operator()(Elem x) const {
  Elem acc{0};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].v == 0) continue;
    acc = field_.add(acc, field_.mul(coeffs_[i], field_.frobenius(x, static_cast<std::int64_t>(i))));
  }
  return acc;
}

LinearizedPoly LinearizedPoly::operator+(const LinearizedPoly& o) const {
  std::vector<Elem> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.add(coeffs_[i], o.coeffs_.at(i));
  return LinearizedPoly(field_, std::move(c));
}

LinearizedPoly LinearizedPoly::operator-(const LinearizedPoly& o) const {
  std::vector<Elem> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.sub(coeffs_[i], o.coeffs_.at(i));
  return LinearizedPoly(field_, std::move(c));
}

LinearizedPoly LinearizedPoly::scaled(Elem s) const {
  std::vector<Elem> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.mul(s, coeffs_[i]);
  return LinearizedPoly(field_, std::move(c));
}

LinearizedPoly LinearizedPoly::compose(const LinearizedPoly& g) const {
  const std::size_t m = coeffs_.size();
  std::vector<Elem> c(m, Elem{0});
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs_[i].v == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      const Elem twisted = field_.frobenius(g.coeffs_[j], static_cast<std::int64_t>(i));
      c[(i + j) % m] = field_.add(c[(i + j) % m], field_.mul(coeffs_[i], twisted));
    }
  }
  return LinearizedPoly(field_, std::move(c));
}

Elem eval(const LinearizedPoly& f, Elem x) { return f(x); }

LinearizedPoly adjoint(const LinearizedPoly& f) {
  const Field& F = f.field();
  const std::size_t m = f.size();
  std::vector<Elem> c(m, Elem{0});
  c[0] = f.coeff(0);
  for (std::size_t i = 1; i < m; ++i) {
    c[m - i] = F.frobenius(f.coeff(i), static_cast<std::int64_t>(m - i));
  }
  return LinearizedPoly(F, std::move(c));
}

bool is_symmetric(const LinearizedPoly& f) {
  const Field& F = f.field();
  const std::size_t m = f.size();
  for (std::size_t i = 1; i < m; ++i) {
    if (f.coeff(m - i) != F.frobenius(f.coeff(i), static_cast<std::int64_t>(m - i))) return false;
  }
  return true;
}

Matrix matrix_of(const LinearizedPoly& f, const OrderedBasis& domain, const OrderedBasis& codomain) {
  const Field& F = f.field();
  const std::size_t m = f.size();
  Matrix out(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto c = F.coords(f(domain[j]), codomain);
    for (std::size_t i = 0; i < m; ++i) out(i, j) = c[i];
  }
  return out;
}

std::size_t rank(const LinearizedPoly& f) {
  const Field& F = f.field();
  const std::size_t m = f.size();
  Matrix a(m, m);
  std::uint32_t basis_elem = 1;
  std::vector<Elem> digits(m);
  for (std::size_t j = 0; j < m; ++j, basis_elem *= F.q()) {
    F.native_coords(f(Elem{basis_elem}), digits);
    for (std::size_t i = 0; i < m; ++i) a(i, j) = digits[i];
  }
  return symrank::rank(F, std::move(a));
}

LinearizedPoly rank_one_symmetric(const Field& field, Elem alpha, Elem c) {
  if (alpha.v == 0 || c.v == 0) throw Error(ErrorKind::ZeroArgument, "alpha and c must be nonzero");
  if (!field.in_base(c)) throw Error(ErrorKind::ScalarNotInBase, "c = " + field.format(c) + " is not in F_q");
  const Elem ca = field.mul(c, alpha);
  std::vector<Elem> coeffs(field.m());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i] = field.mul(ca, field.frobenius(alpha, static_cast<std::int64_t>(i)));
  }
  return LinearizedPoly(field, std::move(coeffs));
}

GramMatrix to_gram(const LinearizedPoly& f, const OrderedBasis& basis, const OrderedBasis& dual) {
  return GramMatrix{matrix_of(f, dual, basis), basis, dual};
}

GramMatrix to_gram(const LinearizedPoly& f, const OrderedBasis& basis) {
  return to_gram(f, basis, f.field().trace_dual_basis(basis));
}

LinearizedPoly from_gram(const Field& field, const Matrix& gram, const OrderedBasis& basis) {
  const auto dual = field.trace_dual_basis(basis);
  const std::size_t m = field.m();
  std::vector<Elem> images(m, Elem{0});
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) images[j] = field.add(images[j], field.mul(gram(i, j), basis[i]));
  return LinearizedPoly::from_map(field, dual, images);
}

void for_each_rank_one_symmetric(const Field& field, const std::function<void(const LinearizedPoly&)>& visit,
                                 std::uint64_t cap) {
  const std::uint64_t work = std::uint64_t{field.size() - 1} * (field.q() - 1);
  if (work > cap) throw Error(ErrorKind::CapExceeded, "rank-one enumeration exceeds cap");
  std::set<std::vector<Elem>> seen;
  for (std::uint32_t a = 1; a < field.size(); ++a) {
    for (std::uint32_t c = 1; c < field.q(); ++c) {
      auto f = rank_one_symmetric(field, Elem{a}, Elem{c});
      if (seen.insert(f.coeffs()).second) visit(f);
    }
  }
}

std::vector<LinearizedPoly> enumerate_rank_one_symmetric(const Field& field, std::uint64_t cap) {
  std::vector<LinearizedPoly> out;
  for_each_rank_one_symmetric(field, [&](const LinearizedPoly& f) { out.push_back(f); }, cap);
  return out;
}

std::string format(const LinearizedPoly& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += " + ";
    out += f.field().format(f.coeff(i));
    if (i == 1) out += "*x^q";
    if (i > 1) out += "*x^q" + std::to_string(i);
  }
  return out;
}

LinearizedPoly parse_linpoly(const Field& field, std::string_view text) {
  std::vector<Elem> coeffs(field.m(), Elem{0});
  std::vector<std::string_view> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == '+' && depth == 0)) {
      terms.push_back(text.substr(start, i - start));
      start = i + 1;
    } else if (text[i] == '[') {
      ++depth;
    } else if (text[i] == ']') {
      --depth;
    }
  }
  for (auto term : terms) {
    std::size_t power = 0;
    std::string_view coef = term;
    if (auto star = term.find('*'); star != std::string_view::npos) {
      coef = term.substr(0, star);
      std::string_view mono = term.substr(star + 1);
      while (!mono.empty() && mono.front() == ' ') mono.remove_prefix(1);
      while (!mono.empty() && mono.back() == ' ') mono.remove_suffix(1);
      if (mono == "x") {
        power = 0;
      } else if (mono == "x^q") {
        power = 1;
      } else if (mono.starts_with("x^q")) {
        power = std::stoul(std::string(mono.substr(3)));
      } else {
        throw Error(ErrorKind::ParseError, "bad monomial \"" + std::string(mono) + "\"");
      }
    }
    if (power >= field.m()) throw Error(ErrorKind::ParseError, "exponent q^" + std::to_string(power) + " >= q^m");
    coeffs[power] = field.add(coeffs[power], field.parse(coef));
  }
  return LinearizedPoly(field, std::move(coeffs));
}

}  // namespace symrank
