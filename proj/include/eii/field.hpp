#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eii/binary_polynomial.hpp"
#include "eii/error.hpp"

namespace eii {

enum class Representation { table, polynomial };

// GF(2^b) with b <= 63; elements are the coefficient bit-vectors.
class BinaryField {
 public:
  using value_type = std::uint64_t;
  static constexpr int kMaxDegree = 63;
  static constexpr int kMaxTableDegree = 16;

  // Throws Errc::reducible_modulus. The default representation is table for b <= 16.
  BinaryField(int degree, std::uint64_t modulus,
              std::optional<Representation> representation = std::nullopt);

  int degree() const { return degree_; }
  BinaryPolynomial modulus() const { return BinaryPolynomial(modulus_); }
  std::uint64_t modulus_bits() const { return modulus_; }
  Representation representation() const {
    return tables_ ? Representation::table : Representation::polynomial;
  }
  std::uint64_t group_order() const { return group_order_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type x() const { return degree_ == 1 ? 0 : 2; }
  value_type alpha() const { return alpha_; }
  value_type alpha_inverse() const { return alpha_inv_; }
  std::uint64_t alpha_order() const { return alpha_order_; }
  bool alpha_order_at_least(std::uint64_t n) const { return alpha_order_ >= n; }

  bool is_zero(value_type a) const { return a == 0; }
  bool contains(value_type a) const { return (a >> degree_) == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  value_type add(value_type a, value_type b) const { return a ^ b; }

  value_type mul(value_type a, value_type b) const {
    if (tables_) {
      if (a == 0 || b == 0) return 0;
      return tables_->exp[tables_->log[a] + tables_->log[b]];
    }
    return poly_mul(a, b);
  }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type pow(value_type a, std::int64_t e) const;
  // Negative k goes through the cached inverse of alpha.
  value_type alpha_pow(std::int64_t k) const {
    return k < 0 ? pow(alpha_inv_, -k) : pow(alpha_, k);
  }
  std::uint64_t order(value_type a) const;

  std::string to_hex(value_type a) const;
  value_type from_hex(std::string_view hex) const;

  bool same_as(const BinaryField& other) const {
    return degree_ == other.degree_ && modulus_ == other.modulus_ && alpha_ == other.alpha_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;
    std::vector<std::uint64_t> exp;  // doubled so log sums need no reduction
  };

  value_type poly_mul(value_type a, value_type b) const;
  value_type pow_unsigned(value_type a, std::uint64_t e) const;

  int degree_;
  std::uint64_t modulus_;
  std::uint64_t group_order_;
  std::shared_ptr<const std::vector<std::uint64_t>> group_primes_;
  std::shared_ptr<const Tables> tables_;
  value_type alpha_ = 0;
  value_type alpha_inv_ = 0;
  std::uint64_t alpha_order_ = 0;
};

// GF(2^b) for any b, elements held as reduced polynomials; alpha = x.
class WideBinaryField {
 public:
  using value_type = BinaryPolynomial;

  // Throws Errc::reducible_modulus. alpha_order may be supplied when known.
  explicit WideBinaryField(BinaryPolynomial modulus,
                           std::optional<std::uint64_t> alpha_order = std::nullopt);

  int degree() const { return modulus_->degree(); }
  const BinaryPolynomial& modulus() const { return *modulus_; }
  Representation representation() const { return Representation::polynomial; }

  value_type zero() const { return {}; }
  value_type one() const { return BinaryPolynomial(1); }
  value_type x() const { return BinaryPolynomial::monomial(1) % *modulus_; }
  value_type alpha() const { return x(); }
  value_type alpha_inverse() const { return alpha_inv_; }
  std::optional<std::uint64_t> alpha_order() const { return alpha_order_; }
  bool alpha_order_at_least(std::uint64_t n) const;

  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool contains(const value_type& a) const { return a.degree() < degree(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return (a * b) % *modulus_; }
  value_type inv(const value_type& a) const;
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  value_type pow(const value_type& a, std::int64_t e) const;
  value_type alpha_pow(std::int64_t k) const {
    return k < 0 ? pow(alpha_inv_, -k) : pow(alpha(), k);
  }

  std::string to_hex(const value_type& a) const { return a.to_hex(); }
  value_type from_hex(std::string_view hex) const;

  bool same_as(const WideBinaryField& other) const {
    return modulus_ == other.modulus_ || *modulus_ == *other.modulus_;
  }

 private:
  std::shared_ptr<const BinaryPolynomial> modulus_;
  value_type alpha_inv_;
  std::optional<std::uint64_t> alpha_order_;
};

template <class F>
concept GaloisField = requires(const F& f, const typename F::value_type& a, std::int64_t k,
                               std::uint64_t n, std::string_view s) {
  { f.degree() } -> std::convertible_to<int>;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.alpha() } -> std::same_as<typename F::value_type>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.pow(a, k) } -> std::same_as<typename F::value_type>;
  { f.alpha_pow(k) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, a) } -> std::same_as<bool>;
  { f.contains(a) } -> std::same_as<bool>;
  { f.alpha_order_at_least(n) } -> std::same_as<bool>;
  { f.to_hex(a) } -> std::same_as<std::string>;
  { f.from_hex(s) } -> std::same_as<typename F::value_type>;
  { f.same_as(f) } -> std::same_as<bool>;
};

static_assert(GaloisField<BinaryField>);
static_assert(GaloisField<WideBinaryField>);

class MpReducible : public Error {
 public:
  MpReducible(std::uint64_t p, BinaryPolynomial factor);
  const BinaryPolynomial& factor() const { return factor_; }

 private:
  BinaryPolynomial factor_;
};

BinaryField build_field(int degree, std::uint64_t modulus);
// Throws MpReducible with the smallest irreducible factor.
WideBinaryField build_mp_field(std::uint64_t p);
// Smallest prime p >= p_min whose M_p is irreducible.
WideBinaryField find_mp_field(std::uint64_t p_min);
// Lowest primitive polynomial of the degree, as used for default code fields.
BinaryField default_field(int degree);
// Smallest default field whose alpha has order >= n.
BinaryField field_for_length(std::uint64_t n);

// Checked element bound to one context; mixing contexts throws Errc::context_mismatch.
template <GaloisField F>
class Element {
 public:
  using value_type = typename F::value_type;

  Element(const F& field, value_type value) : field_(&field), value_(std::move(value)) {}

  const F& field() const { return *field_; }
  const value_type& value() const { return value_; }

  friend Element operator+(const Element& a, const Element& b) {
    a.check(b);
    return Element(*a.field_, a.field_->add(a.value_, b.value_));
  }
  friend Element operator*(const Element& a, const Element& b) {
    a.check(b);
    return Element(*a.field_, a.field_->mul(a.value_, b.value_));
  }
  friend Element operator/(const Element& a, const Element& b) {
    a.check(b);
    return Element(*a.field_, a.field_->div(a.value_, b.value_));
  }
  friend bool operator==(const Element& a, const Element& b) {
    a.check(b);
    return a.field_->equal(a.value_, b.value_);
  }
  Element inv() const { return Element(*field_, field_->inv(value_)); }
  Element pow(std::int64_t e) const { return Element(*field_, field_->pow(value_, e)); }

 private:
  void check(const Element& other) const {
    if (field_ != other.field_ && !field_->same_as(*other.field_)) {
      throw Error(Errc::context_mismatch, "operands belong to different fields");
    }
  }

  const F* field_;
  value_type value_;
};

}  // namespace eii
