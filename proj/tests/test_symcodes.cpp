#include <doctest.h>

#include "support.hpp"
#include "symrank/decomp.hpp"
#include "symrank/symcodes.hpp"

using namespace symrank;
using namespace testing;

namespace {

SymCode rank_one_code(const Field& F) {
  return SymCode::from_polys(F, F.native_basis(), {rank_one_symmetric(F, F.find_generator(), F.one())});
}

struct Case {
  std::uint32_t q, m;
  std::size_t d;
};

}  // namespace

TEST_SUITE("symcodes") {
  TEST_CASE("Singleton-type bound") {
    CHECK(singleton_bound(4, 2) == 8);
    CHECK(singleton_bound(3, 3) == 3);
    CHECK(singleton_bound(4, 3) == 5);
    CHECK(singleton_bound(4, 1) == 10);
    CHECK_THROWS_AS(singleton_bound(4, 0), Error);
    CHECK_THROWS_AS(singleton_bound(3, 4), Error);
  }

  TEST_CASE("construction") {
    const Field F(default_spec(2, 4));
    const auto g = build_sqmd(F, 4);
    CHECK(g.dimension() == 4);
    CHECK(g.grams() == gabidulin_code(F).grams());
    const auto c = build_sqmd(F, 2);
    CHECK(c.dimension() == 8);
    for (const auto& f : c.polys()) CHECK(is_symmetric(f));
    for (const auto& a : c.grams()) CHECK(a.is_symmetric());
    try {
      build_sqmd(F, 3);
      FAIL("odd defect accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OddDefect);
    }
    CHECK_THROWS_AS(build_sqmd(F, 5), Error);
  }

  TEST_CASE("code validation") {
    const Field F(default_spec(3, 2));
    const OrderedBasis B = F.native_basis();
    CHECK_THROWS_AS(SymCode::from_polys(F, B, {LinearizedPoly::monomial(F, F.find_generator(), 1)}), Error);
    CHECK_THROWS_AS(SymCode::from_polys(F, B, {LinearizedPoly::identity(F), LinearizedPoly::identity(F).scaled(Elem{2})}),
                    Error);
    CHECK_THROWS_AS(SymCode::from_grams(F, B, {Matrix::from_ints(F, {{1, 1}, {0, 1}})}), Error);
    CHECK_THROWS_AS(SymCode::from_grams(F, B, {Matrix(3, 3)}), Error);
    Matrix outside(2, 2);
    outside(0, 0) = Elem{5};
    CHECK_THROWS_AS(SymCode::from_grams(F, B, {outside}), Error);

    const auto c = build_sqmd(Field(default_spec(3, 3)), 1);
    const auto back = SymCode::from_grams(c.field(), c.basis(), c.grams());
    CHECK(back.polys() == c.polys());
  }

  TEST_CASE("minimum distance") {
    CHECK(min_distance(gabidulin_code(Field(default_spec(2, 3)))) == 3);
    CHECK(min_distance(build_sqmd(Field(default_spec(2, 4)), 2), kDefaultCap, 3) == 2);
    const Field F(default_spec(2, 3));
    try {
      min_distance(SymCode::from_polys(F, F.native_basis(), {}));
      FAIL("empty code accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadCode);
    }
    CHECK_THROWS_AS(min_distance(build_sqmd(Field(default_spec(2, 4)), 2), 100), Error);
  }

  TEST_CASE("MRD property") {
    CHECK(is_mrd(build_sqmd(Field(default_spec(2, 4)), 2)));
    CHECK(is_mrd(gabidulin_code(Field(default_spec(3, 3)))));
    CHECK_FALSE(is_mrd(rank_one_code(Field(default_spec(2, 3)))));
    CHECK(params(rank_one_code(Field(default_spec(2, 3)))).d == 1);
  }

  TEST_CASE("dimension and distance on the small grid") {
    for (auto c : {Case{2, 1, 1}, Case{2, 2, 2}, Case{2, 3, 1}, Case{2, 3, 3}, Case{2, 4, 2}, Case{2, 4, 4},
                   Case{3, 1, 1}, Case{3, 2, 2}, Case{3, 3, 1}, Case{3, 3, 3}, Case{3, 4, 2}, Case{3, 4, 4}}) {
      CAPTURE(c.q);
      CAPTURE(c.m);
      CAPTURE(c.d);
      const auto code = build_sqmd(Field(default_spec(c.q, c.m)), c.d);
      CHECK(code.dimension() == singleton_bound(c.m, c.d));
      CHECK(min_distance(code, kDefaultCap, 2) == c.d);
    }
  }

  TEST_CASE("congruence transforms") {
    std::mt19937_64 rng(43);
    const Field F(default_spec(2, 3));
    const auto code = gabidulin_code(F);
    CHECK(congruence_transform(code, Matrix::identity(3)).grams() == code.grams());
    CHECK_THROWS_AS(congruence_transform(code, Matrix(3, 3)), Error);
    CHECK_THROWS_AS(congruence_transform(code, Matrix::identity(2)), Error);

    for (auto c : {Case{2, 3, 3}, Case{2, 3, 1}, Case{3, 3, 3}, Case{2, 4, 2}}) {
      const auto sq = build_sqmd(Field(default_spec(c.q, c.m)), c.d);
      const Field& G = sq.field();
      for (int t = 0; t < 20; ++t) {
        const Matrix P = random_invertible(G, c.m, rng);
        const auto moved = congruence_transform(sq, P);
        CHECK(min_distance(moved) == c.d);
        for (const auto& f : moved.polys()) CHECK(is_symmetric(f));
      }
    }
  }

  TEST_CASE("strk witnesses move with congruence, both ways") {
    std::mt19937_64 rng(47);
    for (auto [q, m, R] : {std::tuple{2u, 2u, 3u}, {2u, 3u, 6u}, {3u, 2u, 3u}}) {
      const auto code = gabidulin_code(Field(default_spec(q, m)));
      const Field& F = code.field();
      const auto s = strk_exact(code, R);
      REQUIRE(s.status == StrkStatus::Exact);
      CHECK(verify_witness(code, s.witness));
      for (int t = 0; t < 20; ++t) {
        const Matrix P = random_invertible(F, m, rng);
        const Matrix Pinv = *inverse(F, P);
        const auto moved = congruence_transform(code, P);
        const auto w = congruence_transform(F, s.witness, P);
        CHECK(verify_witness(moved, w));
        CHECK(verify_witness(code, congruence_transform(F, w, Pinv)));
        CHECK(congruence_transform(moved, Pinv).grams() == code.grams());
      }
    }
  }

  TEST_CASE("exact symmetric tensor rank") {
    const auto g4 = gabidulin_code(Field(default_spec(2, 2)));
    const auto s4 = strk_exact(g4, 4);
    CHECK(s4.status == StrkStatus::Exact);
    CHECK(s4.value == std::optional<std::size_t>{3});
    CHECK(s4.lower == 3);

    const auto one = strk_exact(rank_one_code(Field(default_spec(3, 3))), 3);
    CHECK(one.status == StrkStatus::Exact);
    CHECK(one.value == std::optional<std::size_t>{1});

    const auto g8 = gabidulin_code(Field(default_spec(2, 3)));
    const auto at5 = strk_exact(g8, 5);
    CHECK(at5.status == StrkStatus::ExceedsRmax);
    CHECK(at5.lower == 6);
    const auto at6 = strk_exact(g8, 6);
    CHECK(at6.status == StrkStatus::Exact);
    CHECK(at6.value == std::optional<std::size_t>{6});
    CHECK(verify_witness(g8, at6.witness));

    const auto g27 = gabidulin_code(Field(default_spec(3, 3)));
    CHECK(strk_exact(g27, 6).value == std::optional<std::size_t>{6});

    const auto tight = strk_exact(g8, 6, 3);
    CHECK(tight.status == StrkStatus::Indeterminate);
  }

  TEST_CASE("rank-one symmetric lines") {
    for (auto [q, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 3u}}) {
      const Field F(default_spec(q, m));
      const auto ones = rank_one_symmetric_matrices(F, m);
      std::size_t lines = 1, qm = 1;
      for (std::uint32_t i = 0; i < m; ++i) qm *= q;
      lines = (qm - 1) / (q - 1);
      CHECK(ones.size() == lines);
      for (const auto& a : ones) {
        CHECK(a.is_symmetric());
        CHECK(rank(F, a) == 1);
      }
    }
  }

  TEST_CASE("trk never exceeds strk") {
    std::mt19937_64 rng(53);
    std::vector<SymCode> codes = {gabidulin_code(Field(default_spec(2, 2))), gabidulin_code(Field(default_spec(2, 3))),
                                  gabidulin_code(Field(default_spec(3, 2))), build_sqmd(Field(default_spec(2, 3)), 1)};
    const Field F(default_spec(2, 3));
    for (int t = 0; t < 6; ++t) {
      const auto all = build_sqmd(F, 1).polys();
      std::vector<LinearizedPoly> pick = {all[rng() % all.size()]};
      const auto other = all[rng() % all.size()];
      if (other != pick[0]) pick.push_back(other);
      codes.push_back(SymCode::from_polys(F, F.native_basis(), pick));
    }
    for (const auto& c : codes) {
      const auto s = strk_exact(c, 7);
      const auto t = trk_exact(c, 7);
      REQUIRE(s.status == StrkStatus::Exact);
      REQUIRE(t.status == StrkStatus::Exact);
      CHECK(*t.value <= *s.value);
      CHECK(verify_witness(c, t.witness, false));
    }
  }

  TEST_CASE("upper bounds from certificates") {
    CHECK(strk_upper_from_cert(m2_construct(Field(default_spec(3, 2)))) == 3);
    CHECK(strk_upper_from_cert(m4_construct_from_table(2)) == 9);
    CHECK(strk_upper_from_cert(m3_construct(Field(default_spec(4, 3)))) == 6);
    auto bad = m2_construct(Field(default_spec(3, 2)));
    bad.coefficients(0, 0) = bad.field.add(bad.coefficients(0, 0), bad.field.one());
    try {
      strk_upper_from_cert(bad);
      FAIL("invalid certificate accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidCertificate);
    }
  }
}
