#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace symrank;
using namespace testing;

namespace {

std::vector<Field> small_fields() { return {Field(f4_spec()), Field(f8_spec()), Field(f9_spec())}; }

// Rank of x -> f(x) from its values on all of F, counted as log_q |image|.
std::size_t rank_by_image(const LinearizedPoly& f) {
  const Field& F = f.field();
  std::set<std::uint32_t> image;
  for (std::uint32_t x = 0; x < F.size(); ++x) image.insert(f(Elem{x}).v);
  std::size_t r = 0;
  for (std::size_t n = 1; n < image.size(); n *= F.q()) ++r;
  return r;
}

// Number of rank-one symmetric m x m matrices over a prime field, by enumeration.
std::size_t count_rank_one_symmetric_matrices(std::uint32_t p, std::size_t m) {
  const std::size_t free = m * (m + 1) / 2;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free; ++i) total *= p;
  std::size_t count = 0;
  for (std::uint64_t n = 0; n < total; ++n) {
    std::vector<std::vector<std::int64_t>> a(m, std::vector<std::int64_t>(m));
    std::uint64_t r = n;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j, r /= p) a[i][j] = a[j][i] = static_cast<std::int64_t>(r % p);
    if (naive_rank_mod_p(a, p) == 1) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("linpoly") {
  TEST_CASE("evaluation") {
    const Field F4(f4_spec());
    const Elem w{2};
    CHECK(LinearizedPoly::identity(F4)(w) == w);
    CHECK(LinearizedPoly::monomial(F4, F4.one(), 1)(w) == F4.add(w, F4.one()));
    const Field F16(f16_spec());
    const auto tr = LinearizedPoly::trace_poly(F16);
    for (std::uint32_t x = 0; x < 16; ++x) CHECK(tr(Elem{x}) == F16.trace(Elem{x}));
  }

  TEST_CASE("adjoint examples") {
    const Field F9(f9_spec());
    CHECK(adjoint(LinearizedPoly::identity(F9)) == LinearizedPoly::identity(F9));
    for (std::uint32_t a = 0; a < 9; ++a) {
      const auto f = LinearizedPoly::monomial(F9, Elem{a}, 1);
      CHECK(adjoint(f) == LinearizedPoly::monomial(F9, F9.frobenius(Elem{a}, 1), 1));
    }
  }

  TEST_CASE("symmetry examples") {
    const Field F16(f16_spec());
    for (std::uint32_t a = 0; a < 16; ++a) CHECK(is_symmetric(LinearizedPoly::monomial(F16, Elem{a}, 0)));
    CHECK(is_symmetric(LinearizedPoly::zero(F16)));
    // alpha Tr(beta x) with alpha / beta outside F_q
    const Elem al{2}, be{3};
    const auto f = LinearizedPoly::trace_poly(F16).compose(LinearizedPoly::monomial(F16, be, 0));
    CHECK_FALSE(is_symmetric(LinearizedPoly::monomial(F16, al, 0).compose(f)));
  }

  TEST_CASE("rank examples") {
    for (const auto& spec : {f9_spec(), f16_spec(), f81_spec()}) {
      const Field F(spec);
      CHECK(rank(LinearizedPoly::identity(F)) == F.m());
      CHECK(rank(LinearizedPoly::trace_poly(F)) == 1);
      const auto f = LinearizedPoly::monomial(F, F.one(), 1) - LinearizedPoly::identity(F);
      CHECK(rank(f) == F.m() - 1);
      CHECK(rank(LinearizedPoly::zero(F)) == 0);
    }
  }

  TEST_CASE("rank-one symmetric constructor") {
    const Field F9(f9_spec());
    CHECK(rank_one_symmetric(F9, F9.one(), F9.one()) == LinearizedPoly::trace_poly(F9));
    for (std::uint32_t e = 1; e < 9; ++e) {
      const Elem eta{e};
      const auto f = rank_one_symmetric(F9, eta, F9.one());
      CHECK(f.coeffs() == std::vector<Elem>{F9.mul(eta, eta), F9.pow(eta, 4)});
      CHECK(is_symmetric(f));
      CHECK(rank(f) == 1);
    }
    CHECK_THROWS_AS(rank_one_symmetric(F9, F9.zero(), F9.one()), Error);
    try {
      rank_one_symmetric(F9, F9.one(), Elem{3});
      FAIL("scalar outside F_q accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ScalarNotInBase);
    }
  }

  TEST_CASE("Gram matrices of the F_16 example") {
    const Field F(f16_spec());
    const OrderedBasis B = F.native_basis();
    const Elem a{2};
    const std::vector<Matrix> want = {
        Matrix::from_ints(F, {{1, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}),
        Matrix::from_ints(F, {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}}),
        Matrix::from_ints(F, {{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}),
        Matrix::from_ints(F, {{0, 0, 1, 0}, {0, 1, 1, 0}, {1, 1, 0, 0}, {0, 0, 0, 1}}),
    };
    for (int i = 0; i < 4; ++i) CHECK(to_gram(LinearizedPoly::monomial(F, F.pow(a, i), 0), B).matrix == want[i]);
    CHECK(to_gram(LinearizedPoly::zero(F), B).matrix.is_zero());
  }

  TEST_CASE("Gram entries are trace pairings") {
    std::mt19937_64 rng(11);
    const Field F(f81_spec());
    for (int t = 0; t < 20; ++t) {
      const OrderedBasis B = random_basis(F, rng);
      const OrderedBasis D = F.trace_dual_basis(B);
      const auto f = random_poly(F, rng);
      const Matrix g = to_gram(f, B).matrix;
      for (std::size_t i = 0; i < F.m(); ++i)
        for (std::size_t j = 0; j < F.m(); ++j) CHECK(g(i, j) == F.trace(F.mul(D[i], f(D[j]))));
      CHECK(from_gram(F, g, B) == f);
    }
  }

  TEST_CASE("rank-one symmetric enumeration") {
    const Field F4(f4_spec());
    std::size_t brute = 0;
    for (std::uint64_t n = 0; n < poly_count(F4); ++n) {
      const auto f = poly_number(F4, n);
      if (is_symmetric(f) && rank(f) == 1) ++brute;
    }
    CHECK(brute == 3);
    CHECK(enumerate_rank_one_symmetric(F4).size() == 3);
    CHECK(enumerate_rank_one_symmetric(Field(default_spec(3, 1))).size() == 2);
    CHECK(enumerate_rank_one_symmetric(Field(f8_spec())).size() == count_rank_one_symmetric_matrices(2, 3));
    CHECK(enumerate_rank_one_symmetric(Field(f9_spec())).size() == count_rank_one_symmetric_matrices(3, 2));
    CHECK(enumerate_rank_one_symmetric(Field(f81_spec())).size() == count_rank_one_symmetric_matrices(3, 4));
    CHECK_THROWS_AS(enumerate_rank_one_symmetric(Field(f81_spec()), 10), Error);
  }

  TEST_CASE("adjoint identity and involution, exhaustive on F_4, F_8, F_9") {
    for (const Field& F : small_fields()) {
      bool ok = true;
      for (std::uint64_t n = 0; n < poly_count(F); ++n) {
        const auto f = poly_number(F, n);
        const auto ft = adjoint(f);
        if (adjoint(ft) != f) ok = false;
        for (std::uint32_t y = 0; y < F.size(); ++y)
          for (std::uint32_t z = 0; z < F.size(); ++z)
            if (F.trace(F.mul(Elem{y}, f(Elem{z}))) != F.trace(F.mul(Elem{z}, ft(Elem{y})))) ok = false;
      }
      CHECK(ok);
    }
  }

  TEST_CASE("adjoint identity, randomized on F_16 and F_81") {
    std::mt19937_64 rng(3);
    for (const auto& spec : {f16_spec(), f81_spec()}) {
      const Field F(spec);
      bool ok = true;
      for (int t = 0; t < 10000; ++t) {
        const auto f = random_poly(F, rng);
        const Elem y = random_elem(F, rng), z = random_elem(F, rng);
        if (adjoint(adjoint(f)) != f) ok = false;
        if (F.trace(F.mul(y, f(z))) != F.trace(F.mul(z, adjoint(f)(y)))) ok = false;
      }
      CHECK(ok);
    }
  }

  TEST_CASE("adjoint reverses composition") {
    std::mt19937_64 rng(5);
    const Field F(f81_spec());
    for (int t = 0; t < 200; ++t) {
      const auto f = random_poly(F, rng), g = random_poly(F, rng);
      CHECK(adjoint(f.compose(g)) == adjoint(g).compose(adjoint(f)));
      const Elem x = random_elem(F, rng);
      CHECK(f.compose(g)(x) == f(g(x)));
    }
  }

  TEST_CASE("isometry: rank of f equals rank of its Gram matrix") {
    std::mt19937_64 rng(13);
    for (const Field& F : small_fields()) {
      const OrderedBasis B = random_basis(F, rng);
      bool ok = true;
      for (std::uint64_t n = 0; n < poly_count(F); ++n) {
        const auto f = poly_number(F, n);
        const std::size_t r = rank(f);
        if (r != rank_by_image(f) || r != rank(F, to_gram(f, B).matrix)) ok = false;
      }
      CHECK(ok);
    }
    for (const auto& spec : {f16_spec(), f81_spec()}) {
      const Field F(spec);
      for (int t = 0; t < 300; ++t) {
        const auto f = random_poly(F, rng);
        const OrderedBasis B = random_basis(F, rng);
        CHECK(rank(f) == rank(F, to_gram(f, B).matrix));
      }
    }
  }

  TEST_CASE("Gram map is linear and preserves symmetry both ways") {
    std::mt19937_64 rng(17);
    for (const Field& F : small_fields()) {
      const OrderedBasis B = random_basis(F, rng);
      bool ok = true;
      for (std::uint64_t n = 0; n < poly_count(F); ++n) {
        const auto f = poly_number(F, n);
        const Matrix g = to_gram(f, B).matrix;
        if (g.is_symmetric() != is_symmetric(f)) ok = false;
        const auto h = random_poly(F, rng);
        const Elem c{static_cast<std::uint32_t>(rng() % F.q())};
        const Matrix lhs = to_gram(f.scaled(c) + h, B).matrix;
        if (lhs != add(F, scale(F, c, g), to_gram(h, B).matrix)) ok = false;
      }
      CHECK(ok);
    }
  }

  TEST_CASE("classification of rank-one symmetric polynomials, double enumeration") {
    for (const auto& spec : {f4_spec(), f8_spec(), f9_spec(), f16_spec()}) {
      const Field F(spec);
      std::set<std::vector<Elem>> by_filter, by_formula;
      for (std::uint64_t n = 0; n < poly_count(F); ++n) {
        const auto f = poly_number(F, n);
        if (is_symmetric(f) && rank(f) == 1) by_filter.insert(f.coeffs());
      }
      for (std::uint32_t a = 1; a < F.size(); ++a)
        for (std::uint32_t c = 1; c < F.q(); ++c) by_formula.insert(rank_one_symmetric(F, Elem{a}, Elem{c}).coeffs());
      CHECK(by_filter == by_formula);
      std::set<std::vector<Elem>> enumerated;
      for (const auto& f : enumerate_rank_one_symmetric(F)) enumerated.insert(f.coeffs());
      CHECK(enumerated == by_formula);
    }
  }

  TEST_CASE("text form round trip") {
    std::mt19937_64 rng(19);
    for (const auto& spec : {f9_spec(), f16_spec(), FieldSpec{2, {{1, 1, 1}, {2, 2, 2, 1, 1}}, 1}}) {
      const Field F(spec);
      for (int t = 0; t < 50; ++t) {
        const auto f = random_poly(F, rng);
        CHECK(parse_linpoly(F, format(f)) == f);
      }
    }
    CHECK_THROWS_AS(parse_linpoly(Field(f9_spec()), "1*x^q7"), Error);
  }
}
