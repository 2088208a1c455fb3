#include "symrank/search.hpp"

#include <unordered_set>

namespace symrank {

Strategy parse_strategy(const std::string& s) {
  if (s == "powers") return Strategy::Powers;
  if (s == "random") return Strategy::Random;
  if (s == "exhaustive") return Strategy::Exhaustive;
  throw Error(ErrorKind::ParseError, "unknown strategy \"" + s + "\"");
}

const char* to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Powers: return "powers";
    case Strategy::Random: return "random";
    case Strategy::Exhaustive: return "exhaustive";
  }
  return "?";
}

std::vector<Elem> alpha_classes(const Field& F, const SearchOptions& opts) {
  const std::uint32_t order = F.size() - 1;
  const std::uint32_t classes = order / (F.q() - 1);
  std::unordered_set<std::uint32_t> seen;
  std::vector<Elem> out;
  auto offer = [&](Elem a) {
    if (a.v != 0 && seen.insert(F.log(a) % classes).second) out.push_back(a);
  };
  if (opts.strategy == Strategy::Powers) {
    const Elem b = opts.base.value_or(F.primitive());
    if (b.v == 0) throw Error(ErrorKind::ZeroArgument, "powers of zero");
    for (auto e : opts.hint) offer(F.pow(b, e));
    Elem x = F.one();
    for (std::uint32_t k = 0; k < order; ++k, x = F.mul(x, b)) offer(x);
  } else {
    for (std::uint32_t v = 1; v <= order; ++v) offer(Elem{v});
  }
  return out;
}

namespace {

Vec upper_triangle(const Matrix& a) {
  Vec v;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) v.push_back(a(i, j));
  return v;
}

}  // namespace

SearchOutcome search(const Field& F, const SearchOptions& opts) {
  SearchOutcome out;
  out.candidates = alpha_classes(F, opts);
  const Elem xi = F.find_generator();
  const SliceSpace s = slice_space(F, F.native_basis(), xi);

  std::vector<Matrix> grams;
  SpanProblem problem{F, {}, {}};
  for (auto a : out.candidates) {
    grams.push_back(to_gram(rank_one_symmetric(F, a, F.one()), s.basis, s.dual).matrix);
    problem.candidates.push_back(upper_triangle(grams.back()));
  }
  for (const auto& g : s.generators) problem.targets.push_back(upper_triangle(g));

  const SpanSearchResult r = opts.strategy == Strategy::Random
                                 ? span_search_random(problem, opts.R, opts.budget, opts.seed, opts.workers)
                                 : span_search_lex(problem, opts.R, opts.budget, opts.workers);
  out.status = r.status;
  // A sweep over an incomplete candidate set proves nothing.
  const std::uint32_t classes = (F.size() - 1) / (F.q() - 1);
  if (out.status == SearchStatus::Exhausted && out.candidates.size() < classes) {
    out.status = SearchStatus::BudgetExceeded;
  }
  if (r.status != SearchStatus::Found) return out;

  DecompositionCertificate cert{F, xi, {}, {}, Matrix()};
  std::vector<Matrix> chosen;
  for (auto j : r.chosen) {
    cert.alphas.push_back(out.candidates[j]);
    cert.scalars.push_back(F.one());
    chosen.push_back(grams[j]);
  }
  auto coeffs = span_coefficients(F, s.generators, chosen);
  if (!coeffs) throw Error(ErrorKind::InvalidCertificate, "search result does not span the slice space");
  cert.coefficients = std::move(*coeffs);
  const auto check = verify_certificate(cert);
  if (!check) throw Error(ErrorKind::InvalidCertificate, "search result: " + check.reason);
  out.certificate = std::move(cert);
  return out;
}

}  // namespace symrank
