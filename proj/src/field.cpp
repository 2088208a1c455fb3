#include "symrank/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace symrank {

namespace {

using Poly = std::vector<std::uint32_t>;  // element indices of a level, constant first

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void trim(const Level& /*lvl*/, Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// a mod f, f monic.
Poly poly_mod(const Level& lvl, Poly a, const Poly& f) {
  const std::size_t d = f.size() - 1;
  trim(lvl, a);
  while (a.size() > d) {
    const Elem c{a.back()};
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i < d; ++i) {
      a[shift + i] = lvl.sub(Elem{a[shift + i]}, lvl.mul(c, Elem{f[i]})).v;
    }
    a.pop_back();
    trim(lvl, a);
  }
  return a;
}

Poly poly_mulmod(const Level& lvl, const Poly& a, const Poly& b, const Poly& f) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = lvl.add(Elem{r[i + j]}, lvl.mul(Elem{a[i]}, Elem{b[j]})).v;
    }
  }
  return poly_mod(lvl, std::move(r), f);
}

Poly poly_powmod(const Level& lvl, Poly base, std::uint64_t e, const Poly& f) {
  Poly result{1};
  base = poly_mod(lvl, std::move(base), f);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(lvl, result, base, f);
    e >>= 1;
    if (e) base = poly_mulmod(lvl, base, base, f);
  }
  return result;
}

Poly poly_monic(const Level& lvl, Poly a) {
  trim(lvl, a);
  if (a.empty()) return a;
  const Elem lead_inv = lvl.inv(Elem{a.back()});
  for (auto& c : a) c = lvl.mul(Elem{c}, lead_inv).v;
  return a;
}

/// Remainder of a by b for arbitrary nonzero b.
Poly poly_rem(const Level& lvl, Poly a, const Poly& b) {
  trim(lvl, a);
  const std::size_t db = b.size() - 1;
  const Elem lead_inv = lvl.inv(Elem{b.back()});
  while (a.size() > db && !a.empty()) {
    const Elem c = lvl.mul(Elem{a.back()}, lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = lvl.sub(Elem{a[shift + i]}, lvl.mul(c, Elem{b[i]})).v;
    }
    trim(lvl, a);
  }
  return a;
}

Poly poly_gcd(const Level& lvl, Poly a, Poly b) {
  trim(lvl, a);
  trim(lvl, b);
  while (!b.empty()) {
    Poly r = poly_rem(lvl, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(lvl, std::move(a));
}

Elem poly_eval(const Level& lvl, const Poly& f, Elem x) {
  Elem acc{0};
  for (std::size_t i = f.size(); i-- > 0;) acc = lvl.add(lvl.mul(acc, x), Elem{f[i]});
  return acc;
}

/// Returns a nontrivial factor when f is reducible, nullopt when irreducible.
/// An empty factor means "reducible, no proper factor isolated".
std::optional<Poly> find_factor(const Level& base, const Poly& f) {
  const std::size_t d = f.size() - 1;
  if (d <= 1) return std::nullopt;
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t k = 1; k <= d / 2; ++k) {
    h = poly_powmod(base, h, base.size(), f);
    Poly hx = h;
    hx.resize(std::max<std::size_t>(hx.size(), 2), 0);
    hx[1] = base.sub(Elem{hx[1]}, Elem{1}).v;
    Poly g = poly_gcd(base, hx, f);
    if (g.size() > 1) {
      if (g.size() - 1 < d) return g;
      for (std::uint32_t c = 0; c < base.size(); ++c) {
        if (poly_eval(base, f, Elem{c}).v == 0) return Poly{base.neg(Elem{c}).v, 1};
      }
      return Poly{};
    }
  }
  return std::nullopt;
}

std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > cap / b) return cap + 1;
    r *= b;
  }
  return r;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::NonPrimeCharacteristic, "q must be a prime power >= 2, got " + std::to_string(q));
  const auto factors = prime_factors(q);
  if (factors.size() != 1) {
    throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
  }
  std::uint32_t e = 0;
  for (std::uint64_t r = q; r > 1; r /= factors[0]) ++e;
  return {static_cast<std::uint32_t>(factors[0]), e};
}

// ---------------------------------------------------------------------------
// Level

Elem Level::inv(Elem a) const {
  if (a.v == 0) throw Error(ErrorKind::ZeroArgument, "inverse of zero");
  return Elem{exp_[(order_ - log_[a.v]) % order_]};
}

Elem Level::div(Elem a, Elem b) const {
  if (b.v == 0) throw Error(ErrorKind::ZeroArgument, "division by zero");
  if (a.v == 0) return a;
  return Elem{exp_[log_[a.v] + order_ - log_[b.v]]};
}

Elem Level::pow(Elem a, std::int64_t e) const {
  if (e == 0) return Elem{1};
  if (a.v == 0) {
    if (e < 0) throw Error(ErrorKind::ZeroArgument, "negative power of zero");
    return a;
  }
  std::int64_t r = e % static_cast<std::int64_t>(order_);
  if (r < 0) r += order_;
  const std::uint64_t k = (static_cast<std::uint64_t>(log_[a.v]) * static_cast<std::uint64_t>(r)) % order_;
  return Elem{exp_[k]};
}

std::uint32_t Level::log(Elem a) const {
  if (a.v == 0) throw Error(ErrorKind::ZeroArgument, "log of zero");
  return log_[a.v];
}

// ---------------------------------------------------------------------------
// Tower

std::shared_ptr<const Tower> Tower::build(const FieldSpec& spec, std::uint64_t cap) {
  if (!is_prime(spec.p)) {
    throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(spec.p) + " is not prime");
  }
  if (spec.p > cap) throw Error(ErrorKind::CapExceeded, "characteristic exceeds element cap");

  auto tower = std::make_shared<Tower>();
  tower->spec_ = spec;

  auto fill_tables = [](Level& lvl, auto&& slow_mul_by_primitive) {
    lvl.order_ = lvl.size_ - 1;
    lvl.log_.assign(lvl.size_, 0);
    lvl.exp_.assign(2 * static_cast<std::size_t>(std::max<std::uint32_t>(lvl.order_, 1)), 0);
    std::uint32_t cur = 1;
    for (std::uint32_t k = 0; k < lvl.order_; ++k) {
      lvl.exp_[k] = cur;
      lvl.log_[cur] = k;
      cur = slow_mul_by_primitive(cur);
    }
    for (std::uint32_t k = 0; k < lvl.order_; ++k) lvl.exp_[k + lvl.order_] = lvl.exp_[k];
    if (lvl.order_ == 1) lvl.exp_[1] = 1;
    lvl.plus_one_.resize(lvl.size_);
    for (std::uint32_t v = 0; v < lvl.size_; ++v) {
      lvl.plus_one_[v] = v - v % lvl.p_ + (v % lvl.p_ + 1) % lvl.p_;
    }
    lvl.log_minus_one_ = lvl.p_ == 2 ? 0 : lvl.log_[lvl.p_ - 1];
  };

  // Prime level.
  {
    Level lvl;
    lvl.size_ = spec.p;
    lvl.p_ = spec.p;
    lvl.degree_ = 1;
    const std::uint64_t p = spec.p;
    const auto factors = prime_factors(p - 1);
    std::uint64_t g = 1;
    for (std::uint64_t cand = 1; cand < p; ++cand) {
      bool ok = true;
      for (auto r : factors) {
        std::uint64_t acc = 1, b = cand, e = (p - 1) / r;
        while (e) {
          if (e & 1) acc = acc * b % p;
          b = b * b % p;
          e >>= 1;
        }
        if (acc == 1) { ok = false; break; }
      }
      if (ok) { g = cand; break; }
    }
    lvl.primitive_ = static_cast<std::uint32_t>(g);
    fill_tables(lvl, [&](std::uint32_t v) { return static_cast<std::uint32_t>(std::uint64_t{v} * g % p); });
    tower->levels_.push_back(std::move(lvl));
  }

  for (std::size_t step = 0; step < spec.tower.size(); ++step) {
    const Level& base = tower->levels_.back();
    const Poly& f = spec.tower[step];
    if (f.size() < 2) throw Error(ErrorKind::MalformedSpec, "step " + std::to_string(step) + " has degree < 1");
    for (auto c : f) {
      if (c >= base.size()) {
        throw Error(ErrorKind::MalformedSpec, "step " + std::to_string(step) + " coefficient out of range");
      }
    }
    if (f.back() != 1) throw Error(ErrorKind::MalformedSpec, "step " + std::to_string(step) + " is not monic");
    if (auto factor = find_factor(base, f)) {
      throw ReducibleError("step " + std::to_string(step) + " polynomial is reducible", *factor);
    }
    const std::uint32_t d = static_cast<std::uint32_t>(f.size() - 1);
    const std::uint64_t size = checked_pow(base.size(), d, cap);
    if (size > cap || size > std::numeric_limits<std::uint32_t>::max() / 2) {
      throw Error(ErrorKind::CapExceeded, "field size exceeds cap of " + std::to_string(cap) + " elements");
    }

    Level lvl;
    lvl.size_ = static_cast<std::uint32_t>(size);
    lvl.p_ = spec.p;
    lvl.degree_ = d;
    lvl.modulus_ = f;
    const std::uint32_t Q = base.size();

    auto to_coords = [&](std::uint32_t v) {
      Poly c(d);
      for (std::uint32_t i = 0; i < d; ++i, v /= Q) c[i] = v % Q;
      return c;
    };
    auto from_coords = [&](const Poly& c) {
      std::uint64_t v = 0;
      for (std::size_t i = c.size(); i-- > 0;) v = v * Q + c[i];
      return static_cast<std::uint32_t>(v);
    };
    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
      Poly r = poly_mulmod(base, to_coords(a), to_coords(b), f);
      r.resize(d, 0);
      return from_coords(r);
    };
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
      std::uint32_t r = 1;
      while (e) {
        if (e & 1) r = slow_mul(r, a);
        a = slow_mul(a, a);
        e >>= 1;
      }
      return r;
    };

    const auto factors = prime_factors(size - 1);
    std::uint32_t g = 0;
    for (std::uint32_t cand = 1; cand < size; ++cand) {
      bool ok = true;
      for (auto r : factors) {
        if (slow_pow(cand, (size - 1) / r) == 1) { ok = false; break; }
      }
      if (ok) { g = cand; break; }
    }
    lvl.primitive_ = g;

    // Multiplication by g touches only its nonzero coordinates.
    const Poly gc = to_coords(g);
    std::vector<std::pair<std::uint32_t, Elem>> g_terms;
    for (std::uint32_t i = 0; i < d; ++i)
      if (gc[i] != 0) g_terms.emplace_back(i, Elem{gc[i]});
    Poly scratch(2 * d, 0);
    fill_tables(lvl, [&](std::uint32_t v) {
      std::fill(scratch.begin(), scratch.end(), 0);
      const Poly c = to_coords(v);
      for (auto [shift, coef] : g_terms) {
        for (std::uint32_t i = 0; i < d; ++i) {
          if (c[i] == 0) continue;
          scratch[i + shift] = base.add(Elem{scratch[i + shift]}, base.mul(Elem{c[i]}, coef)).v;
        }
      }
      for (std::size_t k = 2 * d - 1; k >= d; --k) {
        const Elem top{scratch[k]};
        if (top.v == 0) continue;
        for (std::uint32_t i = 0; i < d; ++i) {
          scratch[k - d + i] = base.sub(Elem{scratch[k - d + i]}, base.mul(top, Elem{f[i]})).v;
        }
        scratch[k] = 0;
      }
      std::uint64_t out = 0;
      for (std::size_t i = d; i-- > 0;) out = out * Q + scratch[i];
      return static_cast<std::uint32_t>(out);
    });
    tower->levels_.push_back(std::move(lvl));
  }
  return tower;
}

bool is_irreducible(const Level& base, std::span<const std::uint32_t> monic) {
  return !find_factor(base, Poly(monic.begin(), monic.end())).has_value();
}

// ---------------------------------------------------------------------------
// Field

Field::Field(const FieldSpec& spec, std::uint64_t cap) : Field(Tower::build(spec, cap), spec.base_level) {}

Field::Field(std::shared_ptr<const Tower> tower, int base_level) : tower_(std::move(tower)) {
  const int top = static_cast<int>(tower_->levels()) - 1;
  base_level_ = base_level < 0 ? std::max(top - 1, 0) : base_level;
  if (base_level_ > top) throw Error(ErrorKind::MalformedSpec, "base level above top of tower");
  top_ = &tower_->top();
  q_ = tower_->level(base_level_).size();
  m_ = 1;
  for (int k = base_level_ + 1; k <= top; ++k) m_ *= tower_->level(k).degree();
  const std::uint64_t order = top_->size() - 1;
  qpow_log_.resize(m_);
  std::uint64_t acc = order == 0 ? 0 : 1 % order;
  for (std::uint32_t j = 0; j < m_; ++j) {
    qpow_log_[j] = acc;
    if (order) acc = acc * q_ % order;
  }
}

Elem Field::from_int(std::int64_t n) const noexcept {
  const std::int64_t p = characteristic();
  return Elem{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Elem Field::element(std::uint32_t index) const {
  if (index >= size()) throw Error(ErrorKind::ParseError, "element index out of range");
  return Elem{index};
}

Elem Field::frobenius(Elem x, std::int64_t j) const noexcept {
  if (x.v == 0 || size() == 2) return x;
  std::int64_t r = j % static_cast<std::int64_t>(m_);
  if (r < 0) r += m_;
  const std::uint64_t order = size() - 1;
  return top_->exp(static_cast<std::uint64_t>(top_->log(x)) * qpow_log_[r] % order);
}

Elem Field::trace(Elem x) const noexcept {
  Elem acc{0};
  for (std::uint32_t j = 0; j < m_; ++j) acc = add(acc, frobenius(x, j));
  return acc;
}

std::uint32_t Field::degree_over_base(Elem x) const noexcept {
  for (std::uint32_t d = 1; d < m_; ++d) {
    if (m_ % d == 0 && frobenius(x, d) == x) return d;
  }
  return m_;
}

void Field::native_coords(Elem x, std::span<Elem> out) const {
  std::uint32_t v = x.v;
  for (std::uint32_t i = 0; i < m_; ++i, v /= q_) out[i] = Elem{v % q_};
}

std::vector<Elem> Field::native_coords(Elem x) const {
  std::vector<Elem> out(m_);
  native_coords(x, out);
  return out;
}

Elem Field::from_native(std::span<const Elem> digits) const {
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * q_ + digits[i].v;
  return Elem{static_cast<std::uint32_t>(v)};
}

OrderedBasis Field::native_basis() const {
  std::vector<Elem> elems(m_);
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < m_; ++i, v *= q_) elems[i] = Elem{v};
  return OrderedBasis(*this, std::move(elems));
}

std::vector<Elem> Field::coords(Elem x, const OrderedBasis& basis) const {
  const auto digits = native_coords(x);
  std::vector<Elem> out(m_, Elem{0});
  const auto& inv = basis.inverse();
  for (std::uint32_t i = 0; i < m_; ++i) {
    Elem acc{0};
    for (std::uint32_t k = 0; k < m_; ++k) acc = add(acc, mul(inv[i * m_ + k], digits[k]));
    out[i] = acc;
  }
  return out;
}

namespace {

/// Gauss-Jordan inverse of a row-major n x n matrix; empty when singular.
std::vector<Elem> invert(const Field& F, std::vector<Elem> a, std::size_t n) {
  std::vector<Elem> inv(n * n, Elem{0});
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = Elem{1};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col].v == 0) ++piv;
    if (piv == n) return {};
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a[piv * n + k], a[col * n + k]);
        std::swap(inv[piv * n + k], inv[col * n + k]);
      }
    }
    const Elem s = F.inv(a[col * n + col]);
    for (std::size_t k = 0; k < n; ++k) {
      a[col * n + k] = F.mul(a[col * n + k], s);
      inv[col * n + k] = F.mul(inv[col * n + k], s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col].v == 0) continue;
      const Elem t = a[r * n + col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r * n + k] = F.sub(a[r * n + k], F.mul(t, a[col * n + k]));
        inv[r * n + k] = F.sub(inv[r * n + k], F.mul(t, inv[col * n + k]));
      }
    }
  }
  return inv;
}

}  // namespace

OrderedBasis::OrderedBasis(const Field& field, std::vector<Elem> elems) : elems_(std::move(elems)) {
  const std::size_t m = field.m();
  if (elems_.size() != m) {
    throw Error(ErrorKind::DegenerateGenerator, "basis needs exactly " + std::to_string(m) + " elements");
  }
  std::vector<Elem> cols(m * m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto d = field.native_coords(elems_[j]);
    for (std::size_t i = 0; i < m; ++i) cols[i * m + j] = d[i];
  }
  inverse_ = invert(field, std::move(cols), m);
  if (inverse_.empty()) throw Error(ErrorKind::DegenerateGenerator, "basis elements are linearly dependent over F_q");
}

OrderedBasis Field::trace_dual_basis(const OrderedBasis& basis) const {
  const std::size_t m = m_;
  std::vector<Elem> gram(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram[i * m + j] = trace(mul(basis[i], basis[j]));
  const auto ginv = invert(*this, std::move(gram), m);
  std::vector<Elem> dual(m, Elem{0});
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) dual[j] = add(dual[j], mul(ginv[k * m + j], basis[k]));
  return OrderedBasis(*this, std::move(dual));
}

Elem Field::find_generator() const {
  for (std::uint32_t v = 1; v < size(); ++v) {
    if (degree_over_base(Elem{v}) == m_) return Elem{v};
  }
  return one();
}

namespace {

void format_at(const Tower& tower, std::size_t level, std::uint32_t v, std::string& out) {
  if (level == 0) {
    out += std::to_string(v);
    return;
  }
  const std::uint32_t Q = tower.level(level - 1).size();
  const std::uint32_t d = tower.level(level).degree();
  std::vector<std::uint32_t> digits(d);
  for (std::uint32_t i = 0; i < d; ++i, v /= Q) digits[i] = v % Q;
  out += '[';
  for (std::uint32_t i = d; i-- > 0;) {
    format_at(tower, level - 1, digits[i], out);
    if (i) out += ',';
  }
  out += ']';
}

struct Parser {
  const Tower& tower;
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, why + " in \"" + std::string(s) + "\"");
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  std::uint64_t integer() {
    skip_ws();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc{}) fail("expected integer");
    pos = static_cast<std::size_t>(ptr - s.data());
    return v;
  }
  std::uint32_t element(std::size_t level) {
    skip_ws();
    if (pos < s.size() && s[pos] == '[') {
      if (level == 0) fail("coordinate list given for a prime field element");
      ++pos;
      const std::uint32_t Q = tower.level(level - 1).size();
      const std::uint32_t d = tower.level(level).degree();
      std::vector<std::uint32_t> items;
      for (;;) {
        items.push_back(element(level - 1));
        skip_ws();
        if (pos < s.size() && s[pos] == ',') { ++pos; continue; }
        if (pos < s.size() && s[pos] == ']') { ++pos; break; }
        fail("expected ',' or ']'");
      }
      if (items.size() != d) fail("expected " + std::to_string(d) + " coordinates");
      std::uint64_t v = 0;
      for (auto c : items) v = v * Q + c;
      return static_cast<std::uint32_t>(v);
    }
    const std::uint64_t v = integer();
    if (v >= tower.level(0).size()) fail("integer outside the prime field");
    return static_cast<std::uint32_t>(v);
  }
};

}  // namespace

std::string Field::format(Elem x) const {
  std::string out;
  format_at(*tower_, tower_->levels() - 1, x.v, out);
  return out;
}

Elem Field::parse(std::string_view text) const {
  const std::string_view t = strip(text);
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty element");
  if (t.front() == 'g') {
    std::string_view rest = strip(t.substr(1));
    if (rest.empty()) return primitive();
    if (rest.front() != '^') throw Error(ErrorKind::ParseError, "expected g^k in \"" + std::string(t) + "\"");
    rest = strip(rest.substr(1));
    std::int64_t k = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
      throw Error(ErrorKind::ParseError, "bad exponent in \"" + std::string(t) + "\"");
    }
    return pow(primitive(), k);
  }
  Parser parser{*tower_, t};
  const std::uint32_t v = parser.element(tower_->levels() - 1);
  parser.skip_ws();
  if (parser.pos != t.size()) parser.fail("trailing characters");
  return Elem{v};
}

// ---------------------------------------------------------------------------

FieldSpec default_spec(std::uint32_t q, std::uint32_t m) {
  const auto [p, e] = prime_power(q);
  FieldSpec spec;
  spec.p = p;
  auto first_irreducible = [](const Level& base, std::uint32_t d) {
    const std::uint64_t Q = base.size();
    const std::uint64_t count = checked_pow(Q, d, std::numeric_limits<std::uint32_t>::max());
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly f(d + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < d; ++i, c /= Q) f[i] = static_cast<std::uint32_t>(c % Q);
      f[d] = 1;
      if (d > 1 && f[0] == 0) continue;
      if (is_irreducible(base, f)) return f;
    }
    throw Error(ErrorKind::MalformedSpec, "no irreducible polynomial found");
  };
  if (e > 1) {
    auto t = Tower::build(spec, std::uint64_t{1} << 31);
    spec.tower.push_back(first_irreducible(t->top(), e));
  }
  if (m > 1) {
    auto t = Tower::build(spec, std::uint64_t{1} << 31);
    spec.tower.push_back(first_irreducible(t->top(), m));
  }
  spec.base_level = e > 1 ? 1 : 0;
  return spec;
}

}  // namespace symrank
