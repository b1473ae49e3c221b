#include "eii/field.hpp"

#include <bit>
#include <numeric>

#include "number_theory.hpp"

namespace eii {

namespace {

std::uint64_t reduce128(std::uint64_t lo, std::uint64_t hi, int degree, std::uint64_t modulus) {
  // Bits at positions >= degree are folded down from the top.
  for (int i = 127; i >= degree; --i) {
    const bool set = i >= 64 ? ((hi >> (i - 64)) & 1U) : ((lo >> i) & 1U);
    if (!set) continue;
    const int shift = i - degree;
    if (shift >= 64) {
      hi ^= modulus << (shift - 64);
    } else {
      lo ^= modulus << shift;
      if (shift != 0) hi ^= modulus >> (64 - shift);
    }
  }
  return lo;
}

}  // namespace

BinaryField::BinaryField(int degree, std::uint64_t modulus,
                         std::optional<Representation> representation)
    : degree_(degree), modulus_(modulus) {
  if (degree < 1 || degree > kMaxDegree) {
    throw Error(Errc::parameter_out_of_range,
                "degree " + std::to_string(degree) + " outside 1.." + std::to_string(kMaxDegree));
  }
  const BinaryPolynomial f(modulus);
  if (f.degree() != degree) {
    throw Error(Errc::parameter_out_of_range, "modulus degree does not match field degree");
  }
  if (!is_irreducible(f)) {
    throw Error(Errc::reducible_modulus,
                "modulus " + f.to_string() + " is reducible, factor " + smallest_factor(f).to_string());
  }
  group_order_ = (std::uint64_t{1} << degree) - 1;
  group_primes_ = std::make_shared<const std::vector<std::uint64_t>>(prime_factors(group_order_));

  const Representation rep = representation.value_or(
      degree <= kMaxTableDegree ? Representation::table : Representation::polynomial);
  if (rep == Representation::table && degree > kMaxTableDegree) {
    throw Error(Errc::parameter_out_of_range, "table representation limited to degree 16");
  }

  // Generator policy: x when primitive, otherwise the smallest primitive element.
  value_type generator = 0;
  for (value_type cand = x(); cand <= group_order_; ++cand) {
    if (cand != 0 && order(cand) == group_order_) {
      generator = cand;
      break;
    }
  }
  alpha_ = generator;
  alpha_order_ = group_order_;
  alpha_inv_ = pow_unsigned(alpha_, group_order_ - 1);

  if (rep == Representation::table) {
    auto tables = std::make_shared<Tables>();
    const std::size_t q = static_cast<std::size_t>(group_order_);
    tables->log.assign(q + 1, 0);
    tables->exp.assign(2 * q, 0);
    value_type v = 1;
    for (std::size_t i = 0; i < q; ++i) {
      tables->exp[i] = v;
      tables->exp[i + q] = v;
      tables->log[v] = static_cast<std::uint32_t>(i);
      v = poly_mul(v, generator);
    }
    tables_ = std::move(tables);
  }
}

BinaryField::value_type BinaryField::poly_mul(value_type a, value_type b) const {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  while (b != 0) {
    const int i = std::countr_zero(b);
    lo ^= a << i;
    if (i != 0) hi ^= a >> (64 - i);
    b &= b - 1;
  }
  return reduce128(lo, hi, degree_, modulus_);
}

BinaryField::value_type BinaryField::pow_unsigned(value_type a, std::uint64_t e) const {
  value_type r = 1;
  for (; e != 0; e >>= 1) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
  }
  return r;
}

BinaryField::value_type BinaryField::inv(value_type a) const {
  if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero");
  if (tables_) {
    const std::uint32_t l = tables_->log[a];
    return tables_->exp[l == 0 ? 0 : group_order_ - l];
  }
  return pow_unsigned(a, group_order_ - 1);
}

BinaryField::value_type BinaryField::pow(value_type a, std::int64_t e) const {
  if (e == 0) return 1;
  if (a == 0) {
    if (e < 0) throw Error(Errc::division_by_zero, "negative power of zero");
    return 0;
  }
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  const std::uint64_t k = static_cast<std::uint64_t>(e) % group_order_;
  if (tables_) {
    const auto l = static_cast<std::uint64_t>(tables_->log[a]);
    return tables_->exp[static_cast<std::size_t>(
        static_cast<unsigned __int128>(l) * k % group_order_)];
  }
  return pow_unsigned(a, k);
}

std::uint64_t BinaryField::order(value_type a) const {
  if (a == 0) throw Error(Errc::division_by_zero, "order of zero");
  std::uint64_t ord = group_order_;
  for (const std::uint64_t p : *group_primes_) {
    while (ord % p == 0 && pow_unsigned(a, ord / p) == 1) ord /= p;
  }
  return ord;
}

std::string BinaryField::to_hex(value_type a) const { return BinaryPolynomial(a).to_hex(); }

BinaryField::value_type BinaryField::from_hex(std::string_view hex) const {
  const BinaryPolynomial p = BinaryPolynomial::from_hex(hex);
  if (p.degree() >= degree_) {
    throw Error(Errc::parse_error, "symbol " + std::string(hex) + " outside the field");
  }
  return p.low_word();
}

WideBinaryField::WideBinaryField(BinaryPolynomial modulus, std::optional<std::uint64_t> alpha_order)
    : alpha_order_(alpha_order) {
  if (modulus.degree() < 1) throw Error(Errc::parameter_out_of_range, "modulus must have degree >= 1");
  if (!is_irreducible(modulus)) {
    throw Error(Errc::reducible_modulus, "modulus " + modulus.to_string() +
                                             " is reducible, factor " +
                                             smallest_factor(modulus).to_string());
  }
  modulus_ = std::make_shared<const BinaryPolynomial>(std::move(modulus));
  alpha_inv_ = inv(alpha());
}

bool WideBinaryField::alpha_order_at_least(std::uint64_t n) const {
  if (alpha_order_) return *alpha_order_ >= n;
  // x^k is a nonconstant monomial for k < degree, so only larger k need work.
  value_type acc = one();
  const value_type a = alpha();
  for (std::uint64_t k = 1; k < n; ++k) {
    acc = mul(acc, a);
    if (acc == one()) return false;
  }
  return true;
}

WideBinaryField::value_type WideBinaryField::inv(const value_type& a) const {
  if (a.is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  // Extended Euclid: track s with s*a = r mod f.
  BinaryPolynomial r0 = *modulus_;
  BinaryPolynomial r1 = a % *modulus_;
  BinaryPolynomial s0;
  BinaryPolynomial s1(1);
  while (r1.degree() > 0) {
    const DivMod qr = divmod(r0, r1);
    BinaryPolynomial s2 = s0 + qr.quotient * s1;
    r0 = std::move(r1);
    r1 = qr.remainder;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return s1 % *modulus_;
}

WideBinaryField::value_type WideBinaryField::pow(const value_type& a, std::int64_t e) const {
  if (e == 0) return one();
  value_type base = a;
  if (e < 0) {
    base = inv(a);
    e = -e;
  }
  auto k = static_cast<std::uint64_t>(e);
  if (alpha_order_ && a == alpha()) k %= *alpha_order_;
  value_type r = one();
  for (; k != 0; k >>= 1) {
    if (k & 1U) r = mul(r, base);
    base = mul(base, base);
  }
  return r;
}

WideBinaryField::value_type WideBinaryField::from_hex(std::string_view hex) const {
  BinaryPolynomial p = BinaryPolynomial::from_hex(hex);
  if (p.degree() >= degree()) {
    throw Error(Errc::parse_error, "symbol " + std::string(hex) + " outside the field");
  }
  return p;
}

MpReducible::MpReducible(std::uint64_t p, BinaryPolynomial factor)
    : Error(Errc::mp_reducible,
            "M_" + std::to_string(p) + " is reducible, factor " + factor.to_string()),
      factor_(std::move(factor)) {}

BinaryField build_field(int degree, std::uint64_t modulus) { return BinaryField(degree, modulus); }

WideBinaryField build_mp_field(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::parameter_out_of_range, std::to_string(p) + " is not prime");
  BinaryPolynomial mp = BinaryPolynomial::all_ones(p);
  if (!is_irreducible(mp)) throw MpReducible(p, smallest_factor(mp));
  return WideBinaryField(std::move(mp), p);
}

WideBinaryField find_mp_field(std::uint64_t p_min) {
  for (std::uint64_t p = std::max<std::uint64_t>(p_min, 3);; ++p) {
    if (!is_prime(p)) continue;
    // M_p is irreducible iff 2 generates the units mod p.
    bool primitive_root = true;
    for (const std::uint64_t q : prime_factors(p - 1)) {
      std::uint64_t r = 1;
      for (std::uint64_t i = 0; i < (p - 1) / q; ++i) r = r * 2 % p;
      if (r == 1) {
        primitive_root = false;
        break;
      }
    }
    if (primitive_root) return build_mp_field(p);
  }
}

BinaryField default_field(int degree) {
  return BinaryField(degree, find_irreducible(degree, true).low_word());
}

BinaryField field_for_length(std::uint64_t n) {
  for (int b = 2; b <= BinaryField::kMaxDegree; ++b) {
    if ((std::uint64_t{1} << b) - 1 >= n) return default_field(b);
  }
  throw Error(Errc::parameter_out_of_range, "length too large for a 64-bit field");
}

}  // namespace eii
