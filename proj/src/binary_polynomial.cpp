#include "eii/binary_polynomial.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "eii/error.hpp"
#include "number_theory.hpp"

namespace eii {

namespace {

constexpr std::size_t kWordBits = 64;

void xor_shifted(std::vector<std::uint64_t>& acc, std::span<const std::uint64_t> src,
                 std::size_t shift) {
  const std::size_t word = shift / kWordBits;
  const std::size_t bit = shift % kWordBits;
  const std::size_t need = src.size() + word + 1;
  if (acc.size() < need) acc.resize(need, 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    acc[i + word] ^= src[i] << bit;
    if (bit != 0) acc[i + word + 1] ^= src[i] >> (kWordBits - bit);
  }
}

// 64x64 -> 128 carry-less product.
void clmul(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
  lo = 0;
  hi = 0;
  while (b != 0) {
    const int i = std::countr_zero(b);
    lo ^= a << i;
    if (i != 0) hi ^= a >> (64 - i);
    b &= b - 1;
  }
}

}  // namespace

BinaryPolynomial::BinaryPolynomial(std::uint64_t bits) {
  if (bits != 0) words_.push_back(bits);
}

BinaryPolynomial::BinaryPolynomial(std::vector<std::uint64_t> words) : words_(std::move(words)) {
  trim();
}

BinaryPolynomial BinaryPolynomial::monomial(std::size_t k) {
  BinaryPolynomial p;
  p.set_coeff(k, true);
  return p;
}

BinaryPolynomial BinaryPolynomial::all_ones(std::size_t p) {
  BinaryPolynomial out;
  for (std::size_t i = 0; i < p; ++i) out.set_coeff(i, true);
  return out;
}

BinaryPolynomial BinaryPolynomial::from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw Error(Errc::parse_error, "empty hex string");
  BinaryPolynomial out;
  std::size_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    const char c = *it;
    unsigned v = 0;
    if (c >= '0' && c <= '9') {
      v = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      v = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw Error(Errc::parse_error, "invalid hex digit '" + std::string(1, c) + "'");
    }
    for (unsigned k = 0; k < 4; ++k) {
      if ((v >> k) & 1U) out.set_coeff(bit + k, true);
    }
  }
  return out;
}

int BinaryPolynomial::degree() const {
  if (words_.empty()) return -1;
  return static_cast<int>((words_.size() - 1) * kWordBits) + 63 - std::countl_zero(words_.back());
}

bool BinaryPolynomial::coeff(std::size_t i) const {
  const std::size_t w = i / kWordBits;
  return w < words_.size() && ((words_[w] >> (i % kWordBits)) & 1U);
}

void BinaryPolynomial::set_coeff(std::size_t i, bool value) {
  const std::size_t w = i / kWordBits;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[w] |= mask;
  } else {
    words_[w] &= ~mask;
    trim();
  }
}

std::string BinaryPolynomial::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int deg = degree();
  const std::size_t bytes = deg < 0 ? 1 : static_cast<std::size_t>(deg) / 8 + 1;
  std::string out;
  out.reserve(bytes * 2);
  for (std::size_t b = bytes; b-- > 0;) {
    const std::size_t w = b / 8;
    const unsigned byte = w < words_.size() ? (words_[w] >> ((b % 8) * 8)) & 0xffU : 0U;
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 0xf]);
  }
  return out;
}

std::string BinaryPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    if (!coeff(static_cast<std::size_t>(i))) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "x";
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& rhs) {
  if (words_.size() < rhs.words_.size()) words_.resize(rhs.words_.size(), 0);
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  trim();
  return *this;
}

BinaryPolynomial operator*(const BinaryPolynomial& lhs, const BinaryPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<std::uint64_t> out(lhs.words_.size() + rhs.words_.size(), 0);
  for (std::size_t i = 0; i < lhs.words_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.words_.size(); ++j) {
      std::uint64_t lo = 0;
      std::uint64_t hi = 0;
      clmul(lhs.words_[i], rhs.words_[j], lo, hi);
      out[i + j] ^= lo;
      out[i + j + 1] ^= hi;
    }
  }
  return BinaryPolynomial(std::move(out));
}

BinaryPolynomial operator%(const BinaryPolynomial& lhs, const BinaryPolynomial& rhs) {
  return divmod(lhs, rhs).remainder;
}

BinaryPolynomial operator/(const BinaryPolynomial& lhs, const BinaryPolynomial& rhs) {
  return divmod(lhs, rhs).quotient;
}

BinaryPolynomial BinaryPolynomial::shifted(std::size_t k) const {
  std::vector<std::uint64_t> out;
  xor_shifted(out, words_, k);
  return BinaryPolynomial(std::move(out));
}

void BinaryPolynomial::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

DivMod divmod(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  const int db = b.degree();
  if (db < 0) throw Error(Errc::division_by_zero, "polynomial division by zero");
  std::vector<std::uint64_t> rem(a.words().begin(), a.words().end());
  std::vector<std::uint64_t> quo;
  auto deg_of = [&]() {
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty()) return -1;
    return static_cast<int>((rem.size() - 1) * kWordBits) + 63 - std::countl_zero(rem.back());
  };
  for (int d = deg_of(); d >= db; d = deg_of()) {
    const auto shift = static_cast<std::size_t>(d - db);
    xor_shifted(rem, b.words(), shift);
    const std::size_t w = shift / kWordBits;
    if (quo.size() <= w) quo.resize(w + 1, 0);
    quo[w] |= std::uint64_t{1} << (shift % kWordBits);
  }
  return {BinaryPolynomial(std::move(quo)), BinaryPolynomial(std::move(rem))};
}

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
  while (!b.is_zero()) {
    BinaryPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BinaryPolynomial mulmod(const BinaryPolynomial& a, const BinaryPolynomial& b,
                        const BinaryPolynomial& f) {
  return (a * b) % f;
}

BinaryPolynomial frobenius_power(std::size_t k, const BinaryPolynomial& f) {
  BinaryPolynomial x = BinaryPolynomial::monomial(1) % f;
  for (std::size_t i = 0; i < k; ++i) x = mulmod(x, x, f);
  return x;
}

bool is_irreducible(const BinaryPolynomial& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const BinaryPolynomial x = BinaryPolynomial::monomial(1);
  // Rabin: x^(2^n) = x mod f and gcd(x^(2^(n/q)) - x, f) = 1 for each prime q | n.
  if (frobenius_power(static_cast<std::size_t>(n), f) != x % f) return false;
  for (const std::uint64_t q : prime_factors(static_cast<std::uint64_t>(n))) {
    const auto k = static_cast<std::size_t>(n / static_cast<int>(q));
    if (gcd(f, frobenius_power(k, f) + x).degree() != 0) return false;
  }
  return true;
}

namespace {

// f is a product of distinct irreducibles of degree d.
void equal_degree_split(const BinaryPolynomial& f, int d, std::mt19937_64& rng,
                        std::vector<BinaryPolynomial>& out) {
  const int n = f.degree();
  if (n == d) {
    out.push_back(f);
    return;
  }
  std::vector<std::uint64_t> words(static_cast<std::size_t>(n) / 64 + 1);
  while (true) {
    for (auto& w : words) w = rng();
    BinaryPolynomial a = BinaryPolynomial(words) % f;
    if (a.degree() < 1) continue;
    // Trace map a + a^2 + ... + a^(2^(d-1)).
    BinaryPolynomial t = a;
    BinaryPolynomial p = a;
    for (int i = 1; i < d; ++i) {
      p = mulmod(p, p, f);
      t += p;
    }
    BinaryPolynomial g = gcd(f, t);
    const int dg = g.degree();
    if (dg > 0 && dg < n) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

bool factor_less(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = wa.size(); i-- > 0;) {
    if (wa[i] != wb[i]) return wa[i] < wb[i];
  }
  return false;
}

}  // namespace

std::vector<BinaryPolynomial> factor(const BinaryPolynomial& f) {
  std::vector<BinaryPolynomial> out;
  if (f.degree() < 1) return out;
  std::mt19937_64 rng(0x5eedULL);
  BinaryPolynomial rest = f;
  const BinaryPolynomial x = BinaryPolynomial::monomial(1);
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    const BinaryPolynomial h = gcd(rest, frobenius_power(static_cast<std::size_t>(d), rest) + x);
    if (h.degree() < 1) continue;
    std::vector<BinaryPolynomial> parts;
    equal_degree_split(h, d, rng, parts);
    for (const auto& p : parts) {
      while (true) {
        const DivMod qr = divmod(rest, p);
        if (!qr.remainder.is_zero()) break;
        out.push_back(p);
        rest = qr.quotient;
      }
    }
  }
  if (rest.degree() >= 1) out.push_back(rest);
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

BinaryPolynomial smallest_factor(const BinaryPolynomial& f) {
  auto parts = factor(f);
  if (parts.empty()) throw Error(Errc::parameter_out_of_range, "constant polynomial has no factor");
  return parts.front();
}

BinaryPolynomial find_irreducible(int degree, bool primitive) {
  if (degree < 1) throw Error(Errc::parameter_out_of_range, "degree must be positive");
  if (primitive && degree > 63) {
    throw Error(Errc::parameter_out_of_range, "primitive search limited to degree <= 63");
  }
  const BinaryPolynomial top = BinaryPolynomial::monomial(static_cast<std::size_t>(degree));
  std::vector<std::uint64_t> group_primes;
  std::uint64_t group_order = 0;
  if (primitive) {
    group_order = degree == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << degree) - 1;
    group_primes = prime_factors(group_order);
  }
  // Enumerate the low part in increasing value; the constant term must be 1.
  for (std::uint64_t low = 1;; low += 2) {
    BinaryPolynomial f = top + BinaryPolynomial(low);
    if (!is_irreducible(f)) continue;
    if (!primitive) return f;
    bool generates = true;
    for (const std::uint64_t q : group_primes) {
      // x^((2^b-1)/q) computed by repeated squaring on the exponent bits.
      const std::uint64_t e = group_order / q;
      BinaryPolynomial acc(1);
      BinaryPolynomial base = BinaryPolynomial::monomial(1) % f;
      for (std::uint64_t k = e; k != 0; k >>= 1) {
        if (k & 1U) acc = mulmod(acc, base, f);
        base = mulmod(base, base, f);
      }
      if (acc == BinaryPolynomial(1)) {
        generates = false;
        break;
      }
    }
    if (generates) return f;
  }
}

}  // namespace eii
