// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"
#include "symrank/decomp.hpp"
#include "symrank/reference.hpp"
#include "symrank/reproduce.hpp"
#include "symrank/search.hpp"
#include "symrank/symcodes.hpp"

using namespace symrank;
using namespace testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

std::string leading(const UniPoly& f) {
  return (f.leading() == 1 ? "" : std::to_string(f.leading())) + "T^" + std::to_string(f.degree());
}

void leading_terms(Outcome& o) {
  for (const auto& row : table2()) {
    const UniPoly f = reduce_mod_field_poly(m3_fT(row.q), row.q, 3);
    const std::string want = (row.coeff == 1 ? "" : std::to_string(row.coeff)) + "T^" + std::to_string(row.exponent);
    o.require(leading(f) == want, "q=" + std::to_string(row.q) + " gave " + leading(f) + ", expected " + want);
  }
  if (o.pass) o.detail << table2().size() << " leading terms match";
}

void degree_formula(Outcome& o) {
  for (std::uint32_t q : {19u, 23u}) {
    const UniPoly f = m3_fT(q);
    const std::int64_t want = 17 * q * q + 9 * q + 4;
    o.require(f.degree() == want && f.leading() == q - 1, "q=" + std::to_string(q) + " gave " + leading(f));
    if (o.pass) o.detail << "q=" << q << ": -T^" << f.degree() << "  ";
  }
}

void table4_rows(Outcome& o) {
  for (const auto& row : table4()) {
    const auto c = m4_construct_from_table(row.q);
    o.require(verify_certificate(c) && c.R() == row.R, "q=" + std::to_string(row.q));
    if (o.pass) o.detail << "q=" << row.q << " R=" << c.R() << "  ";
    if (row.tabulated != row.exponents) {
      const bool solves = m4_certificate(Field(row.spec), Elem{row.q}, row.tabulated).has_value();
      o.detail << "(q=" << row.q << " uses a searched exponent sequence; the tabulated one "
               << (solves ? "also solves" : "does not solve") << " the systems)  ";
    }
  }
}

void worked_examples(Outcome& o) {
  std::size_t cells = 0;
  for (const std::string t : {"example-f16", "example-f9", "example-strk-f16"}) {
    const auto r = reproduce(t);
    cells += r.cells.size();
    if (const auto* f = r.first_failure()) o.require(false, t + ": " + f->name);
  }
  if (o.pass) o.detail << cells << " cells reproduced";
}

void small_optimality(Outcome& o) {
  const auto g4 = gabidulin_code(Field(default_spec(2, 2)));
  const auto s = strk_exact(g4, 4);
  o.require(s.status == StrkStatus::Exact && s.value == std::optional<std::size_t>{3}, "strk over F_4");
  SearchOptions opts;
  opts.R = 2;
  o.require(search(Field(default_spec(2, 2)), opts).status == SearchStatus::Exhausted, "(2,2) R=2 not excluded");
  opts.R = 5;
  const Field F8(default_spec(2, 3));
  const auto no = search(F8, opts);
  o.require(no.status == SearchStatus::Exhausted, "(2,3) R=5 not excluded");
  const auto c = m3_construct(F8);
  o.require(verify_certificate(c) && c.R() == 6, "(2,3) construction");
  const auto known = cmd_known(2, 3);
  o.require(known.exact() && known.lo == 6, "known value at (2,3)");
  if (o.pass)
    o.detail << "strk(F_4)=3, no R=2 cover; (2,3): " << no.candidates.size() << " classes, no R=5 cover, R=6 built";
}

void totality(Outcome& o) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    const auto c = m2_construct(Field(default_spec(q, 2)));
    o.require(verify_certificate(c) && c.R() == 3 && cmd_known(q, 2).contains(c.R()), "m=2 q=" + std::to_string(q));
  }
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field F(default_spec(q, 3));
    const auto c = m3_construct(F);
    const auto k = cmd_known(q, 3);
    o.require(verify_certificate(c) && c.R() == 6 && c.R() >= k.lo, "m=3 q=" + std::to_string(q));
    if (!k.contains(c.R())) {
      // The closed form gives 6; the known value is smaller, so look for a witness inside the interval.
      SearchOptions opts;
      opts.R = k.lo;
      const auto r = search(F, opts);
      o.require(r.certificate && verify_certificate(*r.certificate), "no R=" + std::to_string(k.lo) + " witness for q=" + std::to_string(q));
      if (o.pass) o.detail << "m=3 q=" << q << ": R=6 built, R=" << k.lo << " found by search  ";
    }
  }
  if (o.pass) o.detail << "m=2 for 9 values of q, m=3 for q=2..5";
}

void mrd_suite(Outcome& o) {
  struct C { std::uint32_t q, m; std::size_t d; };
  for (auto c : {C{2, 2, 2}, C{2, 3, 3}, C{2, 4, 2}, C{2, 4, 4}, C{3, 3, 3}, C{3, 4, 2}}) {
    const auto code = build_sqmd(Field(default_spec(c.q, c.m)), c.d);
    const auto p = params(code, kDefaultCap, 4);
    const std::string tag = "(" + std::to_string(c.q) + "," + std::to_string(c.m) + "," + std::to_string(c.d) + ")";
    o.require(p.k == singleton_bound(c.m, c.d) && p.d == c.d && is_mrd(code, kDefaultCap, 4), tag);
    if (o.pass) o.detail << tag << " k=" << p.k << "  ";
  }
}

bool adjoint_exhaustive(const Field& F) {
  for (std::uint64_t n = 0; n < poly_count(F); ++n) {
    const auto f = poly_number(F, n);
    const auto ft = adjoint(f);
    if (adjoint(ft) != f) return false;
    for (std::uint32_t y = 0; y < F.size(); ++y)
      for (std::uint32_t z = 0; z < F.size(); ++z)
        if (F.trace(F.mul(Elem{y}, f(Elem{z}))) != F.trace(F.mul(Elem{z}, ft(Elem{y})))) return false;
  }
  return true;
}

void properties(Outcome& o) {
  std::mt19937_64 rng(2024);
  const std::vector<FieldSpec> exhaustive = {f4_spec(), f8_spec(), f9_spec()};
  for (const auto& spec : exhaustive) {
    const Field F(spec);
    o.require(adjoint_exhaustive(F), "adjoint identity on F_" + std::to_string(F.size()));
    const OrderedBasis B = random_basis(F, rng);
    for (std::uint64_t n = 0; n < poly_count(F); ++n) {
      const auto f = poly_number(F, n);
      if (rank(f) != rank(F, to_gram(f, B).matrix)) {
        o.require(false, "isometry on F_" + std::to_string(F.size()));
        break;
      }
    }
  }
  for (const auto& spec : {f16_spec(), f81_spec()}) {
    const Field F(spec);
    bool ok = true;
    for (int t = 0; t < 10000 && ok; ++t) {
      const auto f = random_poly(F, rng);
      const Elem y = random_elem(F, rng), z = random_elem(F, rng);
      ok = adjoint(adjoint(f)) == f && F.trace(F.mul(y, f(z))) == F.trace(F.mul(z, adjoint(f)(y)));
      if (t % 20 == 0) ok = ok && rank(f) == rank(F, to_gram(f, random_basis(F, rng)).matrix);
    }
    o.require(ok, "randomized adjoint/isometry on F_" + std::to_string(F.size()));
  }
  o.detail << "adjoint+isometry ok  ";

  for (const auto& spec : {f4_spec(), f8_spec(), f9_spec(), f16_spec()}) {
    const Field F(spec);
    std::set<std::vector<Elem>> by_filter, by_formula;
    for (std::uint64_t n = 0; n < poly_count(F); ++n) {
      const auto f = poly_number(F, n);
      if (is_symmetric(f) && rank(f) == 1) by_filter.insert(f.coeffs());
    }
    for (std::uint32_t a = 1; a < F.size(); ++a)
      for (std::uint32_t c = 1; c < F.q(); ++c) by_formula.insert(rank_one_symmetric(F, Elem{a}, Elem{c}).coeffs());
    o.require(by_filter == by_formula, "classification on F_" + std::to_string(F.size()));
  }
  o.detail << "classification ok  ";

  std::vector<DecompositionCertificate> certs;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) certs.push_back(m2_construct(Field(default_spec(q, 2))));
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) certs.push_back(m3_construct(Field(default_spec(q, 3))));
  for (const auto& c : certs) {
    const Field& F = c.field;
    const std::string tag = "q=" + std::to_string(F.q()) + " m=" + std::to_string(F.m());
    for (std::size_t i = 0; i < F.m(); ++i) {
      const auto s = build_sigma_star(F, c.alphas, c.xi, i);
      // Row set and right-hand side are closed under the Frobenius.
      for (std::size_t r = 0; r < s.rows.size(); ++r) {
        const auto [a, b] = s.rows[r];
        ExponentPair img{(a + 1) % F.m(), (b + 1) % F.m()};
        if (img.a < img.b) std::swap(img.a, img.b);
        std::size_t t = 0;
        while (t < s.rows.size() && !(s.rows[t] == img)) ++t;
        bool ok = t < s.rows.size() && s.rhs[t] == F.frobenius(s.rhs[r], 1);
        for (std::size_t j = 0; ok && j < c.R(); ++j) ok = s.matrix(t, j) == F.frobenius(s.matrix(r, j), 1);
        o.require(ok, "Frobenius stability " + tag);
      }
      const auto fast = frobenius_unique_criterion(s);
      o.require(fast && fast == solve_fq_constrained(s), "solver equivalence " + tag);
    }
  }
  o.detail << "Frobenius stability+solvers ok on " << certs.size() << " constructions  ";

  struct C { std::uint32_t q, m; std::size_t d; };
  for (auto c : {C{2, 3, 3}, C{2, 3, 1}, C{3, 3, 3}, C{2, 4, 2}, C{3, 2, 2}}) {
    const auto code = build_sqmd(Field(default_spec(c.q, c.m)), c.d);
    const Field& F = code.field();
    const std::size_t d0 = min_distance(code);
    const auto s = c.m <= 3 && code.dimension() <= 3 ? strk_exact(code, 6) : StrkResult{};
    for (int t = 0; t < 20; ++t) {
      const Matrix P = random_invertible(F, c.m, rng);
      const auto moved = congruence_transform(code, P);
      o.require(min_distance(moved) == d0, "min distance under congruence");
      if (!s.witness.empty()) {
        const auto w = congruence_transform(F, s.witness, P);
        o.require(verify_witness(moved, w), "witness under congruence");
        o.require(verify_witness(code, congruence_transform(F, w, *inverse(F, P))), "witness back");
      }
    }
  }
  o.detail << "congruence ok";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"leading terms of the m = 3 determinant", leading_terms},
      {"degree formula for q = 19, 23", degree_formula},
      {"m = 4 tabulated constructions", table4_rows},
      {"worked examples bit-exact", worked_examples},
      {"small-case optimality by exhaustion", small_optimality},
      {"construction totality for m = 2, 3", totality},
      {"symmetric MRD suite", mrd_suite},
      {"property suites", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << i + 1 << ' ' << criteria[i].first << " [" << std::fixed
              << std::setprecision(2) << secs << "s] " << o.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
