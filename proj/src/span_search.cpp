#include "symrank/span_search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace symrank {

const char* to_string(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

void Echelon::reduce(Vec& v) const {
  const Field& F = *field_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Elem c = v[pivots_[r]];
    if (c.v == 0) continue;
    const Vec& row = rows_[r];
    for (std::size_t k = pivots_[r]; k < v.size(); ++k) {
      if (row[k].v != 0) v[k] = F.sub(v[k], F.mul(c, row[k]));
    }
  }
}

bool Echelon::insert(Vec v) {
  reduce(v);
  std::size_t p = 0;
  while (p < v.size() && v[p].v == 0) ++p;
  if (p == v.size()) return false;
  const Field& F = *field_;
  const Elem inv = F.inv(v[p]);
  for (std::size_t k = p; k < v.size(); ++k) v[k] = F.mul(inv, v[k]);
  // Keep the basis fully reduced so that reduce() can work in one pass.
  for (auto& row : rows_) {
    const Elem c = row[p];
    if (c.v == 0) continue;
    for (std::size_t k = p; k < row.size(); ++k) row[k] = F.sub(row[k], F.mul(c, v[k]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool Echelon::contains(Vec v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e.v == 0; });
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

Echelon target_echelon(const SpanProblem& p) {
  Echelon e(&p.field);
  for (const auto& t : p.targets) e.insert(t);
  return e;
}

struct Dfs {
  const SpanProblem& p;
  std::size_t R, N, dimG;
  std::uint64_t budget;
  const std::atomic<std::size_t>* best_first;
  std::size_t first = 0;
  std::vector<std::size_t> prefix;
  bool budget_hit = false;
  std::uint64_t rank = 0;

  bool feasible(const Echelon& Q, const Echelon& S, std::size_t depth) const {
    const std::size_t rank_q = Q.rank() - dimG;
    if (rank_q + dimG > R) return false;
    const std::size_t inter = S.rank() - rank_q;
    return R - depth >= dimG - inter;
  }

  bool run(std::size_t depth, std::size_t start, std::uint64_t base, const Echelon& Q, const Echelon& S) {
    if (best_first->load(std::memory_order_relaxed) < first) return false;
    const std::size_t inter = S.rank() - (Q.rank() - dimG);
    if (inter == dimG) {
      for (std::size_t x = start; prefix.size() < R; ++x) prefix.push_back(x);
      rank = base;
      return true;
    }
    if (depth == R) return false;
    for (std::size_t x = start; x + (R - depth) <= N; ++x) {
      if (base >= budget) {
        budget_hit = true;
        return false;
      }
      const std::uint64_t size = binomial_saturating(N - 1 - x, R - 1 - depth);
      Echelon Q2 = Q, S2 = S;
      Q2.insert(p.candidates[x]);
      S2.insert(p.candidates[x]);
      if (feasible(Q2, S2, depth + 1)) {
        prefix.push_back(x);
        if (run(depth + 1, x + 1, base, Q2, S2)) return true;
        prefix.pop_back();
      }
      base = sat_add(base, size);
    }
    return false;
  }
};

template <class Task>
void run_parallel(unsigned workers, std::size_t tasks, Task task) {
  workers = std::max(1u, workers);
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks;) task(t);
  };
  if (workers == 1 || tasks <= 1) {
    loop();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(workers, tasks); ++w) pool.emplace_back(loop);
  for (auto& th : pool) th.join();
}

void atomic_min(std::atomic<std::size_t>& a, std::size_t v) {
  std::size_t cur = a.load();
  while (v < cur && !a.compare_exchange_weak(cur, v)) {
  }
}

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::size_t target_dimension(const SpanProblem& p) { return target_echelon(p).rank(); }

bool spans_targets(const SpanProblem& p, const std::vector<std::size_t>& chosen) {
  Echelon S(&p.field);
  for (auto j : chosen) S.insert(p.candidates.at(j));
  return std::all_of(p.targets.begin(), p.targets.end(), [&](const Vec& t) { return S.contains(t); });
}

SpanSearchResult span_search_lex(const SpanProblem& p, std::size_t R, std::uint64_t budget, unsigned workers) {
  const std::size_t N = p.candidates.size();
  const Echelon G = target_echelon(p);
  const std::size_t dimG = G.rank();
  const std::uint64_t total = binomial_saturating(N, R);
  SpanSearchResult out;

  if (R > N || dimG > R) return out;  // nothing to visit, definitively
  if (budget == 0) {
    out.status = SearchStatus::BudgetExceeded;
    return out;
  }
  if (dimG == 0) {
    out.status = SearchStatus::Found;
    out.chosen.resize(R);
    std::iota(out.chosen.begin(), out.chosen.end(), std::size_t{0});
    return out;
  }

  // Task x0 covers every subset whose smallest index is x0.
  const std::size_t tasks = N - R + 1;
  std::vector<std::uint64_t> base(tasks);
  std::uint64_t acc = 0;
  for (std::size_t x = 0; x < tasks; ++x) {
    base[x] = acc;
    acc = sat_add(acc, binomial_saturating(N - 1 - x, R - 1));
  }

  std::atomic<std::size_t> best_first{std::numeric_limits<std::size_t>::max()};
  std::vector<std::optional<SpanSearchResult>> found(tasks);
  std::vector<char> hit(tasks, 0);
  run_parallel(workers, tasks, [&](std::size_t x0) {
    if (best_first.load() < x0) return;
    if (base[x0] >= budget) {
      hit[x0] = 1;
      return;
    }
    Dfs dfs{p, R, N, dimG, budget, &best_first, x0, {}, false, 0};
    Echelon Q = G, S(&p.field);
    Q.insert(p.candidates[x0]);
    S.insert(p.candidates[x0]);
    if (!dfs.feasible(Q, S, 1)) return;
    dfs.prefix.push_back(x0);
    if (dfs.run(1, x0 + 1, base[x0], Q, S)) {
      found[x0] = SpanSearchResult{SearchStatus::Found, dfs.prefix, dfs.rank};
      atomic_min(best_first, x0);
    }
    hit[x0] = dfs.budget_hit;
  });

  for (std::size_t x = 0; x < tasks; ++x)
    if (found[x]) return *found[x];
  const bool budget_hit = std::any_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  out.status = budget_hit && total > budget ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
  out.rank = std::min(total, budget);
  return out;
}

SpanSearchResult span_search_random(const SpanProblem& p, std::size_t R, std::uint64_t trials, std::uint64_t seed,
                                    unsigned workers) {
  const std::size_t N = p.candidates.size();
  SpanSearchResult out;
  out.status = SearchStatus::BudgetExceeded;
  out.rank = trials;
  if (R > N) return out;

  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  std::vector<std::size_t> best_choice;
  auto worker = [&] {
    std::vector<std::size_t> idx(N);
    for (std::uint64_t k; (k = next.fetch_add(1)) < trials && k < best.load();) {
      std::uint64_t state = seed * 0xD1B54A32D192ED03ULL ^ k;
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      for (std::size_t i = 0; i < R; ++i) {
        const std::size_t j = i + splitmix(state) % (N - i);
        std::swap(idx[i], idx[j]);
      }
      std::vector<std::size_t> choice(idx.begin(), idx.begin() + R);
      std::sort(choice.begin(), choice.end());
      if (!spans_targets(p, choice)) continue;
      std::lock_guard lock(mu);
      if (k < best.load()) {
        best = k;
        best_choice = std::move(choice);
      }
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (best.load() != std::numeric_limits<std::size_t>::max()) {
    out.status = SearchStatus::Found;
    out.chosen = best_choice;
    out.rank = best.load();
  }
  return out;
}

}  // namespace symrank
