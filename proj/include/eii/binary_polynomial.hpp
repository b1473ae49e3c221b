#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eii {

// Polynomial over GF(2); bit i of the word array is the coefficient of x^i.
class BinaryPolynomial {
 public:
  BinaryPolynomial() = default;
  explicit BinaryPolynomial(std::uint64_t bits);
  explicit BinaryPolynomial(std::vector<std::uint64_t> words);

  static BinaryPolynomial monomial(std::size_t k);
  // 1 + x + ... + x^(p-1)
  static BinaryPolynomial all_ones(std::size_t p);
  static BinaryPolynomial from_hex(std::string_view hex);

  int degree() const;
  bool is_zero() const { return words_.empty(); }
  bool coeff(std::size_t i) const;
  void set_coeff(std::size_t i, bool value);
  std::span<const std::uint64_t> words() const { return words_; }
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  // Lowercase, whole bytes, most significant byte first.
  std::string to_hex() const;
  // Human form such as "1+x+x^3".
  std::string to_string() const;

  BinaryPolynomial& operator+=(const BinaryPolynomial& rhs);
  friend BinaryPolynomial operator+(BinaryPolynomial lhs, const BinaryPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BinaryPolynomial operator*(const BinaryPolynomial& lhs, const BinaryPolynomial& rhs);
  friend BinaryPolynomial operator%(const BinaryPolynomial& lhs, const BinaryPolynomial& rhs);
  friend BinaryPolynomial operator/(const BinaryPolynomial& lhs, const BinaryPolynomial& rhs);
  friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

  BinaryPolynomial shifted(std::size_t k) const;

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

struct DivMod {
  BinaryPolynomial quotient;
  BinaryPolynomial remainder;
};

DivMod divmod(const BinaryPolynomial& a, const BinaryPolynomial& b);
BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);
BinaryPolynomial mulmod(const BinaryPolynomial& a, const BinaryPolynomial& b,
                        const BinaryPolynomial& f);
// x^(2^k) mod f
BinaryPolynomial frobenius_power(std::size_t k, const BinaryPolynomial& f);

bool is_irreducible(const BinaryPolynomial& f);
// Irreducible factors with multiplicity, sorted by (degree, value).
std::vector<BinaryPolynomial> factor(const BinaryPolynomial& f);
BinaryPolynomial smallest_factor(const BinaryPolynomial& f);

// Lowest-valued irreducible polynomial of the given degree for which x has
// order 2^degree - 1 (degree <= 63), or just irreducible when primitive is false.
BinaryPolynomial find_irreducible(int degree, bool primitive);

}  // namespace eii
