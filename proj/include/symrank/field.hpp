#pragma once

/**
 * @file field.hpp
 * @brief Finite field towers F_p -> F_q -> F_{q^m} with a designated relative base.
 *
 * Elements are stored as indices into the field. The index of an element is
 * the mixed-radix number formed by its coordinate list over the immediate
 * base, most significant coordinate first, applied recursively down to F_p.
 * Consequences used throughout the library:
 *
 * - enumeration order (0, 1, 2, ...) is lexicographic over coordinate lists;
 * - every subfield of the tower occupies the indices [0, |subfield|);
 * - the base-q digits of an index are F_q-linear coordinates of the element.
 *
 * Multiplication goes through log/exp tables, addition through a Zech-style
 * "plus one" table (plain XOR in characteristic 2).
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symrank/error.hpp"

namespace symrank {

/// Default upper bound on field sizes and on exhaustive enumerations.
inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;

struct Elem {
  std::uint32_t v = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Description of a tower: characteristic plus one monic polynomial per
/// extension step. Coefficients are element indices in the field built so far,
/// constant term first, leading coefficient included (must be 1).
struct FieldSpec {
  std::uint32_t p = 2;
  std::vector<std::vector<std::uint32_t>> tower;
  /// Level used as the relative base F_q; level 0 is F_p, level k the field
  /// after k steps. Negative means "the level just below the top".
  int base_level = -1;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Raised when a step polynomial factors; `witness` is a proper factor when one
/// was isolated (constant term first, monic), empty otherwise.
class ReducibleError : public Error {
 public:
  ReducibleError(const std::string& what, std::vector<std::uint32_t> witness)
      : Error(ErrorKind::ReduciblePolynomial, what), witness_(std::move(witness)) {}
  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::uint32_t> witness_;
};

/// One level of a tower with its own arithmetic tables.
class Level {
 public:
  std::uint32_t size() const noexcept { return size_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return degree_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Elem primitive() const noexcept { return Elem{primitive_}; }

  Elem add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return Elem{a.v ^ b.v};
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    // a + b = a * (1 + b/a)
    const std::uint32_t ratio = exp_[log_[b.v] + order_ - log_[a.v]];
    const std::uint32_t s = plus_one_[ratio];
    if (s == 0) return Elem{0};
    return Elem{exp_[log_[a.v] + log_[s]]};
  }
  Elem neg(Elem a) const noexcept {
    if (p_ == 2 || a.v == 0) return a;
    return Elem{exp_[log_[a.v] + log_minus_one_]};
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a.v == 0 || b.v == 0) return Elem{0};
    return Elem{exp_[log_[a.v] + log_[b.v]]};
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::int64_t e) const;
  /// Discrete log to the level's primitive element; a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const noexcept { return Elem{exp_[k % order_]}; }

 private:
  friend class Tower;
  std::uint32_t size_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t degree_ = 1;
  std::uint32_t order_ = 0;  // size - 1
  std::uint32_t log_minus_one_ = 0;
  std::uint32_t primitive_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // 2 * order entries
  std::vector<std::uint32_t> plus_one_;
};

/// Immutable tower of levels; shared by every Field handle built on it.
class Tower {
 public:
  static std::shared_ptr<const Tower> build(const FieldSpec& spec, std::uint64_t cap = kDefaultCap);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::size_t levels() const noexcept { return levels_.size(); }
  const Level& level(std::size_t k) const { return levels_.at(k); }
  const Level& top() const noexcept { return levels_.back(); }

 private:
  FieldSpec spec_;
  std::vector<Level> levels_;
};

/// An ordered basis of F_{q^m} over F_q with its cached coordinate inverse.
class Field;
class OrderedBasis {
 public:
  OrderedBasis() = default;
  OrderedBasis(const Field& field, std::vector<Elem> elems);

  const std::vector<Elem>& elems() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  Elem operator[](std::size_t i) const { return elems_.at(i); }
  /// Row-major m x m matrix over F_q mapping native digits to B-coordinates.
  const std::vector<Elem>& inverse() const noexcept { return inverse_; }

  friend bool operator==(const OrderedBasis& a, const OrderedBasis& b) { return a.elems_ == b.elems_; }

 private:
  std::vector<Elem> elems_;
  std::vector<Elem> inverse_;
};

/// Handle on a tower with a designated relative base F_q. Cheap to copy.
class Field {
 public:
  Field() = default;
  explicit Field(const FieldSpec& spec, std::uint64_t cap = kDefaultCap);
  Field(std::shared_ptr<const Tower> tower, int base_level);

  /// Same tower, different relative base.
  Field with_base_level(int level) const { return Field(tower_, level); }

  const FieldSpec& spec() const noexcept { return tower_->spec(); }
  std::shared_ptr<const Tower> tower() const noexcept { return tower_; }
  int base_level() const noexcept { return base_level_; }

  std::uint32_t size() const noexcept { return top_->size(); }
  std::uint32_t characteristic() const noexcept { return top_->characteristic(); }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t m() const noexcept { return m_; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  Elem minus_one() const noexcept { return neg(one()); }
  /// Image of the integer n under Z -> F_p.
  Elem from_int(std::int64_t n) const noexcept;
  /// The designated multiplicative generator ("g" in the text format).
  Elem primitive() const noexcept { return top_->primitive(); }
  Elem element(std::uint32_t index) const;

  Elem add(Elem a, Elem b) const noexcept { return top_->add(a, b); }
  Elem sub(Elem a, Elem b) const noexcept { return top_->sub(a, b); }
  Elem neg(Elem a) const noexcept { return top_->neg(a); }
  Elem mul(Elem a, Elem b) const noexcept { return top_->mul(a, b); }
  Elem inv(Elem a) const { return top_->inv(a); }
  Elem div(Elem a, Elem b) const { return top_->div(a, b); }
  Elem pow(Elem a, std::int64_t e) const { return top_->pow(a, e); }
  std::uint32_t log(Elem a) const { return top_->log(a); }

  /// x^{q^j}; j is reduced mod m.
  Elem frobenius(Elem x, std::int64_t j) const noexcept;
  /// Tr_{q^m/q}(x) = sum_{i<m} x^{q^i}.
  Elem trace(Elem x) const noexcept;
  bool in_base(Elem x) const noexcept { return x.v < q_; }
  /// Degree of x over F_q (smallest d with x^{q^d} = x).
  std::uint32_t degree_over_base(Elem x) const noexcept;

  /// Base-q digits of the index: F_q-linear coordinates, least significant first.
  std::vector<Elem> native_coords(Elem x) const;
  void native_coords(Elem x, std::span<Elem> out) const;
  Elem from_native(std::span<const Elem> digits) const;
  /// The basis whose coordinates are the native digits (index q^k).
  OrderedBasis native_basis() const;

  /// Unique c with x = sum c_i b_i.
  std::vector<Elem> coords(Elem x, const OrderedBasis& basis) const;
  OrderedBasis trace_dual_basis(const OrderedBasis& basis) const;

  /// First element in enumeration order of degree m over F_q (nonzero).
  Elem find_generator() const;
  /// First multiplicative generator in enumeration order.
  Elem find_primitive() const { return primitive(); }

  /// Canonical coordinate form "[c_{d-1},...,c_0]" over the immediate base,
  /// nested for towers; plain integers for F_p.
  std::string format(Elem x) const;
  /// Accepts "0", "1", small integers (prime subfield), "g^k" and coordinate form.
  Elem parse(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.tower_ == b.tower_ && a.base_level_ == b.base_level_;
  }

 private:
  std::shared_ptr<const Tower> tower_;
  const Level* top_ = nullptr;
  int base_level_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t m_ = 0;
  std::vector<std::uint64_t> qpow_log_;  // q^j mod (N-1), j < m
};

/// Parses/validates a prime power q = p^e; returns {p, e} or throws.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);
bool is_prime(std::uint64_t n);

/// Deterministic default tower for F_{q^m}: F_p -> F_q -> F_{q^m}, each step
/// the first monic irreducible polynomial in lexicographic coefficient order.
FieldSpec default_spec(std::uint32_t q, std::uint32_t m);

/// Monic irreducibility test over a level of a partially built tower.
bool is_irreducible(const Level& base, std::span<const std::uint32_t> monic);

}  // namespace symrank
