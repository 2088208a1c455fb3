#include "symrank/symcodes.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace symrank {

namespace {

Matrix stack_flat(const std::vector<Matrix>& mats, std::size_t entries) {
  Matrix out(mats.size(), entries);
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t e = 0; e < entries; ++e) out(i, e) = mats[i].data()[e];
  return out;
}

void require_independent(const Field& F, const std::vector<Matrix>& grams) {
  if (grams.empty()) return;
  const std::size_t entries = grams.front().data().size();
  if (rank(F, stack_flat(grams, entries)) != grams.size()) {
    throw Error(ErrorKind::BadCode, "generators are linearly dependent over F_q");
  }
}

Vec upper(const Matrix& a) {
  Vec v;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) v.push_back(a(i, j));
  return v;
}

/// Nonzero vectors of F_q^m with first nonzero entry 1, first coordinate most significant.
std::vector<Vec> normalised_vectors(const Field& F, std::size_t m) {
  const std::uint32_t q = F.q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= q;
  std::vector<Vec> out;
  Vec v(m);
  for (std::uint64_t n = 1; n < total; ++n) {
    std::uint64_t r = n;
    for (std::size_t i = m; i-- > 0; r /= q) v[i] = Elem{static_cast<std::uint32_t>(r % q)};
    const auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e.v != 0; });
    if (lead->v == 1) out.push_back(v);
  }
  return out;
}

Matrix outer(const Field& F, const Vec& u, const Vec& v) {
  Matrix a(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) a(i, j) = F.mul(u[i], v[j]);
  return a;
}

StrkResult cover_search(const SymCode& code, const std::vector<Matrix>& candidates, bool symmetric, std::size_t rmax,
                        std::uint64_t budget, unsigned workers) {
  const Field& F = code.field();
  auto flat = [&](const Matrix& a) { return symmetric ? upper(a) : a.data(); };
  SpanProblem problem{F, {}, {}};
  for (const auto& c : candidates) problem.candidates.push_back(flat(c));
  for (const auto& g : code.grams()) problem.targets.push_back(flat(g));

  StrkResult out;
  const std::size_t k = code.dimension();
  out.lower = k;
  if (k == 0) {
    out.status = StrkStatus::Exact;
    out.value = 0;
    return out;
  }
  for (std::size_t R = k; R <= rmax; ++R) {
    const auto r = span_search_lex(problem, R, budget, workers);
    if (r.status == SearchStatus::Exhausted) {
      // A cover of size < R would extend to one of size R.
      out.lower = R + 1;
    } else if (r.status == SearchStatus::Found) {
      out.value = R;
      for (auto j : r.chosen) out.witness.push_back(candidates[j]);
      out.status = out.lower == R ? StrkStatus::Exact : StrkStatus::Indeterminate;
      return out;
    }
  }
  out.status = out.lower > rmax ? StrkStatus::ExceedsRmax : StrkStatus::Indeterminate;
  return out;
}

}  // namespace

SymCode SymCode::from_polys(const Field& field, const OrderedBasis& basis, std::vector<LinearizedPoly> polys) {
  SymCode c;
  c.field_ = field;
  c.basis_ = basis;
  const auto dual = field.trace_dual_basis(basis);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!is_symmetric(polys[i])) throw Error(ErrorKind::NotSymmetric, "generator " + std::to_string(i) + " is not symmetric", i);
    c.grams_.push_back(to_gram(polys[i], basis, dual).matrix);
  }
  require_independent(field, c.grams_);
  c.polys_ = std::move(polys);
  return c;
}

SymCode SymCode::from_grams(const Field& field, const OrderedBasis& basis, std::vector<Matrix> grams) {
  SymCode c;
  c.field_ = field;
  c.basis_ = basis;
  const std::size_t m = field.m();
  for (std::size_t i = 0; i < grams.size(); ++i) {
    const Matrix& g = grams[i];
    if (g.rows() != m || g.cols() != m) throw Error(ErrorKind::BadCode, "generator " + std::to_string(i) + " is not m x m", i);
    for (auto e : g.data())
      if (!field.in_base(e)) throw Error(ErrorKind::BadCode, "generator " + std::to_string(i) + " has entries outside F_q", i);
    if (!g.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "generator " + std::to_string(i) + " is not symmetric", i);
    c.polys_.push_back(from_gram(field, g, basis));
  }
  require_independent(field, grams);
  c.grams_ = std::move(grams);
  return c;
}

std::size_t singleton_bound(std::size_t m, std::size_t d) {
  if (d < 1 || d > m) throw Error(ErrorKind::BadDistance, "need 1 <= d <= m, got d = " + std::to_string(d));
  return (m - d) % 2 == 0 ? m * (m - d + 2) / 2 : (m + 1) * (m - d + 1) / 2;
}

SymCode build_sqmd(const Field& field, std::size_t d) {
  const std::size_t m = field.m();
  if (d < 1 || d > m) throw Error(ErrorKind::BadDistance, "need 1 <= d <= m, got d = " + std::to_string(d));
  if ((m - d) % 2 != 0) {
    throw Error(ErrorKind::OddDefect, "m - d odd: the punctured construction is not supported");
  }
  const OrderedBasis B = field.native_basis();
  std::vector<LinearizedPoly> gens;
  for (std::size_t t = 0; t < m; ++t) gens.push_back(LinearizedPoly::monomial(field, B[t], 0));
  for (std::size_t j = 1; j <= (m - d) / 2; ++j) {
    for (std::size_t t = 0; t < m; ++t) {
      const Elem b = B[t];
      gens.push_back(LinearizedPoly::monomial(field, b, j) +
                     LinearizedPoly::monomial(field, field.frobenius(b, static_cast<std::int64_t>(m - j)), m - j));
    }
  }
  return SymCode::from_polys(field, B, std::move(gens));
}

SymCode gabidulin_code(const Field& field) { return build_sqmd(field, field.m()); }

std::size_t min_distance(const SymCode& code, std::uint64_t cap, unsigned workers) {
  const Field& F = code.field();
  const std::size_t k = code.dimension();
  if (k == 0) throw Error(ErrorKind::BadCode, "the zero code has no nonzero codewords");
  const std::uint32_t q = F.q();
  std::uint64_t words = 1;
  for (std::size_t i = 0; i < k; ++i) {
    words *= q;
    if (words > cap) throw Error(ErrorKind::CapExceeded, "q^k exceeds the enumeration cap");
  }
  const auto& G = code.grams();
  const std::size_t m = code.m();
  workers = std::max(1u, workers);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, (words + workers - 1) / workers);
  std::vector<std::size_t> best(workers, std::numeric_limits<std::size_t>::max());
  auto run = [&](unsigned w) {
    const std::uint64_t lo = std::max<std::uint64_t>(1, w * chunk), hi = std::min(words, (w + 1) * chunk);
    for (std::uint64_t n = lo; n < hi; ++n) {
      Matrix acc(m, m);
      std::uint64_t r = n;
      for (std::size_t i = 0; i < k && r; ++i, r /= q) {
        const Elem c{static_cast<std::uint32_t>(r % q)};
        if (c.v != 0) acc = add(F, acc, scale(F, c, G[i]));
      }
      best[w] = std::min(best[w], rank(F, std::move(acc)));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  return *std::min_element(best.begin(), best.end());
}

CodeParams params(const SymCode& code, std::uint64_t cap, unsigned workers) {
  return {code.m(), code.dimension(), min_distance(code, cap, workers)};
}

bool is_mrd(const SymCode& code, std::uint64_t cap, unsigned workers) {
  const auto p = params(code, cap, workers);
  return p.k == singleton_bound(p.m, p.d);
}

std::vector<Matrix> congruence_transform(const Field& F, const std::vector<Matrix>& mats, const Matrix& P) {
  const std::size_t m = P.rows();
  if (P.cols() != m) throw Error(ErrorKind::SingularP, "P is not square");
  for (auto e : P.data())
    if (!F.in_base(e)) throw Error(ErrorKind::SingularP, "P has entries outside F_q");
  if (determinant(F, P).v == 0) throw Error(ErrorKind::SingularP, "P is singular");
  const Matrix Pt = P.transpose();
  std::vector<Matrix> out;
  for (const auto& a : mats) out.push_back(multiply(F, multiply(F, Pt, a), P));
  return out;
}

SymCode congruence_transform(const SymCode& code, const Matrix& P) {
  if (P.rows() != code.m()) throw Error(ErrorKind::SingularP, "P has the wrong size");
  return SymCode::from_grams(code.field(), code.basis(), congruence_transform(code.field(), code.grams(), P));
}

const char* to_string(StrkStatus s) noexcept {
  switch (s) {
    case StrkStatus::Exact: return "exact";
    case StrkStatus::ExceedsRmax: return "exceeds-rmax";
    case StrkStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::vector<Matrix> rank_one_symmetric_matrices(const Field& field, std::size_t m) {
  std::vector<Matrix> out;
  for (const auto& v : normalised_vectors(field, m)) out.push_back(outer(field, v, v));
  return out;
}

StrkResult strk_exact(const SymCode& code, std::size_t rmax, std::uint64_t budget, unsigned workers) {
  return cover_search(code, rank_one_symmetric_matrices(code.field(), code.m()), true, rmax, budget, workers);
}

StrkResult trk_exact(const SymCode& code, std::size_t rmax, std::uint64_t budget, unsigned workers) {
  const auto vs = normalised_vectors(code.field(), code.m());
  std::vector<Matrix> candidates;
  for (const auto& u : vs)
    for (const auto& v : vs) candidates.push_back(outer(code.field(), u, v));
  return cover_search(code, candidates, false, rmax, budget, workers);
}

bool verify_witness(const SymCode& code, const std::vector<Matrix>& witness, bool require_symmetric) {
  const Field& F = code.field();
  for (const auto& w : witness) {
    if (w.rows() != code.m() || w.cols() != code.m()) return false;
    if (require_symmetric && !w.is_symmetric()) return false;
    if (rank(F, w) != 1) return false;
    for (auto e : w.data())
      if (!F.in_base(e)) return false;
  }
  return span_coefficients(F, code.grams(), witness).has_value();
}

std::size_t strk_upper_from_cert(const DecompositionCertificate& cert) {
  const auto check = verify_certificate(cert);
  if (!check) throw Error(ErrorKind::InvalidCertificate, check.reason);
  return cert.R();
}

}  // namespace symrank
