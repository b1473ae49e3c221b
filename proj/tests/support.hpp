#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "eii/eii.hpp"

namespace testing {

using eii::BinaryField;
using eii::Cell;
using Grid = eii::SymbolGrid<std::uint64_t>;

// Shift-and-add multiplication with reduction after every shift.
inline std::uint64_t naive_mul(std::uint64_t a, std::uint64_t b, int degree, std::uint64_t modulus) {
  std::uint64_t acc = 0;
  for (int i = degree - 1; i >= 0; --i) {
    acc <<= 1;
    if ((acc >> degree) & 1U) acc ^= modulus;
    if ((b >> i) & 1U) acc ^= a;
  }
  return acc;
}

// Determinant by permutation expansion; independent of the elimination code.
template <class F>
typename F::value_type leibniz_det(const F& field, const eii::FieldMatrix<F>& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  auto total = field.zero();
  do {
    auto term = field.one();
    for (std::size_t i = 0; i < n && !field.is_zero(term); ++i) term = field.mul(term, a(i, perm[i]));
    total = field.add(total, term);  // characteristic 2: signs vanish
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<std::uint64_t> random_symbols(const BinaryField& f, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::uint64_t> out(k);
  for (auto& v : out) v = rng() & f.group_order();
  return out;
}

inline std::vector<std::uint64_t> random_rs_codeword(const eii::RsCode<BinaryField>& code,
                                                     std::mt19937_64& rng) {
  auto word = random_symbols(code.field(), code.length(), rng);
  std::vector<std::size_t> parity(code.redundancy());
  std::iota(parity.begin(), parity.end(), std::size_t{0});
  return *code.erasure_decode(word, parity);
}

inline Grid random_codeword(const eii::EiiCode<BinaryField>& code, std::mt19937_64& rng) {
  return code.encode(random_symbols(code.field(), code.dimension(), rng));
}

inline void apply_erasures(Grid& grid, const std::vector<std::vector<std::size_t>>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const std::size_t c : rows[r]) grid.erase(r, c);
  }
}

inline std::size_t grid_weight(const Grid& g) {
  std::size_t w = 0;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) w += g.at(r, c) != 0;
  }
  return w;
}

// Random size-k subset of [0, n).
inline std::vector<std::size_t> random_subset(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

inline BinaryField gf8() { return BinaryField(3, 0x0b); }
inline BinaryField gf16() { return BinaryField(4, 0x13); }

// Reference erasure patterns, per row.
inline const std::vector<std::vector<std::size_t>> kSixRowPattern = {
    {2}, {0, 1, 2, 3, 4, 5, 6}, {1, 2, 4, 6}, {0, 3, 5}, {0, 1, 2, 3, 4, 5, 6}, {5}};
inline const std::vector<std::vector<std::size_t>> kPartialPattern = {{0, 3, 5, 6}, {1, 3}, {2}, {0, 1, 5, 6}};
inline const std::vector<std::vector<std::size_t>> kThreePassPattern = {
    {0, 4, 5, 7}, {1, 2, 4, 5, 6, 7, 9}, {8}, {0, 1, 2, 5, 6, 7, 8, 9}, {0, 1, 2, 5, 6, 7, 9}};

// 6 x 15 array: error and erasure columns per row.
struct ErrorPattern {
  std::vector<std::size_t> errors;
  std::vector<std::size_t> erasures;
};
inline const std::vector<ErrorPattern> kErrorPattern = {
    {{1, 5, 8, 11}, {}},
    {{4}, {8}},
    {{1, 4, 7, 11, 13}, {}},
    {{5, 11}, {}},
    {{1}, {11}},
    {{3, 6}, {1, 5, 11, 13}},
};

// Reference balanced layouts: 5 x 7 product code and C(7,(1,1,3,4,7,7)).
inline const std::vector<std::vector<std::size_t>> kProductLayout = {
    {0, 1, 3, 6}, {0, 1, 4, 6}, {0, 2, 4}, {0, 2, 5}, {0, 3, 5}};
inline const std::vector<std::vector<std::size_t>> kThreeLevelLayout = {
    {0, 1, 2, 4}, {0, 1, 2, 5}, {0, 1, 3, 5}, {0, 1, 3, 6}, {0, 2, 3, 6}, {0, 2, 4}};

inline std::vector<Cell> layout_cells(const std::vector<std::vector<std::size_t>>& rows) {
  std::vector<Cell> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const std::size_t c : rows[r]) out.emplace_back(r, c);
  }
  return out;
}

// All non-decreasing profiles of length m with entries in [0, n], excluding all-n.
inline std::vector<eii::Profile> all_profiles(std::size_t m, std::size_t n) {
  std::vector<eii::Profile> out;
  std::vector<std::size_t> u(m, 0);
  while (true) {
    if (u.front() != n) out.emplace_back(u, n);
    std::size_t i = m;
    while (i > 0 && u[i - 1] == n) --i;
    if (i == 0) break;
    ++u[i - 1];
    for (std::size_t k = i; k < m; ++k) u[k] = u[i - 1];
  }
  return out;
}

inline eii::Profile random_profile(std::mt19937_64& rng, std::size_t max_m, std::size_t max_n) {
  const std::size_t m = 1 + rng() % max_m;
  const std::size_t n = 1 + rng() % max_n;
  std::vector<std::size_t> u(m);
  for (auto& x : u) x = rng() % (n + 1);
  std::sort(u.begin(), u.end());
  if (u.front() == n) u.front() = n - 1;
  std::sort(u.begin(), u.end());
  return eii::Profile(u, n);
}

}  // namespace testing
