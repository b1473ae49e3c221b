#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eii/field.hpp"
#include "eii/matrix.hpp"

namespace eii {

template <GaloisField F>
struct ErrorErasureResult {
  std::vector<typename F::value_type> word;
  std::size_t errors = 0;
};

// [n, n-u, u+1] code with parity checks H(r, j) = alpha^(r*j), r < u.
template <GaloisField F>
class RsCode {
 public:
  using value_type = typename F::value_type;

  RsCode(F field, std::size_t n, std::size_t u) : field_(std::move(field)), n_(n), u_(u) {
    if (u > n) throw Error(Errc::parameter_out_of_range, "redundancy exceeds length");
    if (!field_.alpha_order_at_least(n)) {
      throw Error(Errc::length_exceeds_order,
                  "length " + std::to_string(n) + " exceeds the order of alpha");
    }
    locators_.reserve(n);
    for (std::size_t j = 0; j < n; ++j) locators_.push_back(field_.alpha_pow(static_cast<std::int64_t>(j)));
    check_ = zeros(field_, u, n);
    for (std::size_t j = 0; j < n; ++j) {
      auto v = field_.one();
      for (std::size_t r = 0; r < u; ++r) {
        check_(r, j) = v;
        v = field_.mul(v, locators_[j]);
      }
    }
  }

  const F& field() const { return field_; }
  std::size_t length() const { return n_; }
  std::size_t redundancy() const { return u_; }
  std::size_t dimension() const { return n_ - u_; }
  const FieldMatrix<F>& parity_check() const { return check_; }
  const value_type& locator(std::size_t j) const { return locators_[j]; }

  std::vector<value_type> syndromes(std::span<const value_type> word) const {
    return multiply(field_, check_, word);
  }

  bool contains(std::span<const value_type> word) const {
    for (const auto& s : syndromes(word)) {
      if (!field_.is_zero(s)) return false;
    }
    return true;
  }

  // Fills the erased positions; values there on input are ignored.
  std::optional<std::vector<value_type>> erasure_decode(std::span<const value_type> word,
                                                        std::span<const std::size_t> erasures) const {
    std::vector<value_type> out(word.begin(), word.end());
    if (erasures.size() > u_) return std::nullopt;
    std::vector<bool> erased(n_, false);
    for (const std::size_t e : erasures) {
      erased[e] = true;
      out[e] = field_.zero();
    }
    const auto syn = syndromes(out);
    if (erasures.empty()) {
      for (const auto& s : syn) {
        if (!field_.is_zero(s)) return std::nullopt;
      }
      return out;
    }
    FieldMatrix<F> rhs = zeros(field_, u_, 1);
    for (std::size_t r = 0; r < u_; ++r) rhs(r, 0) = syn[r];
    const auto x = solve(field_, select_columns(field_, check_, erasures), rhs);
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < erasures.size(); ++i) out[erasures[i]] = (*x)(i, 0);
    return out;
  }

  // Corrects i errors and j erasures with 2i + j <= u; nullopt beyond that.
  std::optional<ErrorErasureResult<F>> error_erasure_decode(
      std::span<const value_type> word, std::span<const std::size_t> erasures) const;

 private:
  F field_;
  std::size_t n_;
  std::size_t u_;
  std::vector<value_type> locators_;
  FieldMatrix<F> check_;
};

template <GaloisField F>
std::optional<ErrorErasureResult<F>> RsCode<F>::error_erasure_decode(
    std::span<const value_type> word, std::span<const std::size_t> erasures) const {
  using V = value_type;
  const std::size_t j = erasures.size();
  if (j > u_) return std::nullopt;
  std::vector<V> received(word.begin(), word.end());
  std::vector<bool> erased(n_, false);
  for (const std::size_t e : erasures) {
    erased[e] = true;
    received[e] = field_.zero();
  }
  const auto syn = syndromes(received);

  // Erasure locator Gamma(z) = prod (1 + X_e z) and modified syndromes
  // T_r = sum_i Gamma_i S_(r-i) for r = j..u-1; the errors then satisfy a
  // plain key equation over T.
  std::vector<V> gamma{field_.one()};
  for (const std::size_t e : erasures) {
    std::vector<V> next(gamma.size() + 1, field_.zero());
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      next[i] = field_.add(next[i], gamma[i]);
      next[i + 1] = field_.add(next[i + 1], field_.mul(gamma[i], locators_[e]));
    }
    gamma = std::move(next);
  }
  std::vector<V> modified;
  for (std::size_t r = j; r < u_; ++r) {
    V acc = field_.zero();
    for (std::size_t i = 0; i <= j; ++i) acc = field_.add(acc, field_.mul(gamma[i], syn[r - i]));
    modified.push_back(acc);
  }

  // Berlekamp-Massey on the modified syndromes.
  std::vector<V> lambda{field_.one()};
  std::vector<V> prev{field_.one()};
  std::size_t len = 0;
  std::size_t shift = 1;
  V prev_disc = field_.one();
  for (std::size_t k = 0; k < modified.size(); ++k) {
    V d = modified[k];
    for (std::size_t i = 1; i <= len && i < lambda.size(); ++i) {
      d = field_.add(d, field_.mul(lambda[i], modified[k - i]));
    }
    if (field_.is_zero(d)) {
      ++shift;
      continue;
    }
    const V coef = field_.div(d, prev_disc);
    std::vector<V> next = lambda;
    if (next.size() < prev.size() + shift) next.resize(prev.size() + shift, field_.zero());
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i + shift] = field_.add(next[i + shift], field_.mul(coef, prev[i]));
    }
    if (2 * len <= k) {
      prev = lambda;
      len = k + 1 - len;
      prev_disc = d;
      shift = 1;
    } else {
      ++shift;
    }
    lambda = std::move(next);
  }
  if (2 * len + j > u_) return std::nullopt;

  // Error positions: X_k^-1 roots of lambda among non-erased positions.
  std::vector<std::size_t> unknowns(erasures.begin(), erasures.end());
  std::size_t roots = 0;
  if (len > 0) {
    for (std::size_t pos = 0; pos < n_; ++pos) {
      const V z = field_.inv(locators_[pos]);
      V acc = field_.zero();
      V zp = field_.one();
      for (const auto& c : lambda) {
        acc = field_.add(acc, field_.mul(c, zp));
        zp = field_.mul(zp, z);
      }
      if (!field_.is_zero(acc)) continue;
      ++roots;
      if (!erased[pos]) unknowns.push_back(pos);
    }
  }
  if (roots != len) return std::nullopt;

  // Values at all unknown positions from the full syndrome system.
  FieldMatrix<F> rhs = zeros(field_, u_, 1);
  for (std::size_t r = 0; r < u_; ++r) rhs(r, 0) = syn[r];
  std::vector<V> out = received;
  if (!unknowns.empty()) {
    std::vector<std::size_t> cols = unknowns;
    std::sort(cols.begin(), cols.end());
    const auto x = solve(field_, select_columns(field_, check_, cols), rhs);
    if (!x) return std::nullopt;
    std::size_t errors = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const V& delta = (*x)(i, 0);
      if (erased[cols[i]]) {
        out[cols[i]] = delta;
      } else if (!field_.is_zero(delta)) {
        out[cols[i]] = field_.add(out[cols[i]], delta);
        ++errors;
      }
    }
    if (2 * errors + j > u_) return std::nullopt;
    return ErrorErasureResult<F>{std::move(out), errors};
  }
  for (std::size_t r = 0; r < u_; ++r) {
    if (!field_.is_zero(syn[r])) return std::nullopt;
  }
  return ErrorErasureResult<F>{std::move(out), 0};
}

}  // namespace eii
