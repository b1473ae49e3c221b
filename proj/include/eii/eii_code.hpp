#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eii/field.hpp"
#include "eii/grid.hpp"
#include "eii/matrix.hpp"
#include "eii/profile.hpp"
#include "eii/rs_code.hpp"

namespace eii {

// Row order and the triangulated combination system: row k of gamma expresses
// combination k over the rows in `order`, with gamma(k, k) = 1 and zeros left
// of the diagonal for the unknown rows.
template <GaloisField F>
struct Triangulation {
  std::vector<std::size_t> order;
  std::size_t unknowns = 0;
  FieldMatrix<F> gamma;
};

template <GaloisField F>
class EiiCode {
 public:
  using value_type = typename F::value_type;
  using Grid = SymbolGrid<value_type>;

  EiiCode(F field, Profile profile);

  const F& field() const { return field_; }
  const Profile& profile() const { return profile_; }
  std::size_t rows() const { return profile_.rows(); }
  std::size_t cols() const { return profile_.cols(); }
  const RsCode<F>& component(std::size_t level) const { return nested_[level]; }
  std::size_t dimension() const { return eii::dimension(profile_); }
  std::size_t min_distance() const { return eii::min_distance(profile_); }
  // alpha^(r*j) for r, j < m.
  const value_type& row_weight(std::size_t r, std::size_t j) const { return weights_(r, j); }

  EiiCode transpose() const { return EiiCode(field_, transpose_profile(profile_)); }
  Grid zero_grid() const { return Grid(rows(), cols(), field_.zero()); }

  // Unknown rows keep the given order; the remaining rows follow ascending.
  Triangulation<F> triangulate(std::span<const std::size_t> unknown_rows) const;

  bool is_codeword(const Grid& grid) const;
  DecodeReport<value_type> decode_rows(Grid grid) const;
  Grid encode(std::span<const value_type> data) const;
  Grid min_weight_codeword(std::size_t j, std::span<const std::size_t> rows,
                           std::span<const std::size_t> cols) const;
  // Per-row C_0 checks stacked over the combination checks; columns are cells row-major.
  FieldMatrix<F> assemble_parity_check() const;

  // Decodes the unknown row at position k of the triangulation in C_(level);
  // rows after k must already be known.
  bool recover_row(const Triangulation<F>& tri, std::size_t k, std::size_t level, Grid& grid) const;

 private:
  F field_;
  Profile profile_;
  std::vector<RsCode<F>> nested_;
  FieldMatrix<F> weights_;
  Triangulation<F> encoder_;
};

template <GaloisField F>
EiiCode<F>::EiiCode(F field, Profile profile) : field_(std::move(field)), profile_(std::move(profile)) {
  const std::size_t m = profile_.rows();
  const std::size_t n = profile_.cols();
  if (!field_.alpha_order_at_least(std::max(m, n))) {
    throw Error(Errc::length_exceeds_order,
                "order of alpha is below max(m, n) = " + std::to_string(std::max(m, n)));
  }
  for (std::size_t i = 0; i <= profile_.t(); ++i) nested_.emplace_back(field_, n, profile_.level(i));
  weights_ = zeros(field_, m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto a = field_.alpha_pow(static_cast<std::int64_t>(j));
    auto v = field_.one();
    for (std::size_t r = 0; r < m; ++r) {
      weights_(r, j) = v;
      v = field_.mul(v, a);
    }
  }
  // Tail-layout rows above u_0, most parity first (ties by ascending index).
  std::vector<std::size_t> parity_rows;
  for (std::size_t r = m; r-- > 0;) {
    if (profile_.entry(r) > profile_.level(0)) parity_rows.push_back(r);
  }
  std::stable_sort(parity_rows.begin(), parity_rows.end(), [&](std::size_t a, std::size_t b) {
    return profile_.entry(a) != profile_.entry(b) ? profile_.entry(a) > profile_.entry(b) : a < b;
  });
  encoder_ = triangulate(parity_rows);
}

template <GaloisField F>
Triangulation<F> EiiCode<F>::triangulate(std::span<const std::size_t> unknown_rows) const {
  const std::size_t m = rows();
  Triangulation<F> tri;
  tri.unknowns = unknown_rows.size();
  tri.order.assign(unknown_rows.begin(), unknown_rows.end());
  std::vector<bool> listed(m, false);
  for (const std::size_t r : unknown_rows) listed[r] = true;
  for (std::size_t r = 0; r < m; ++r) {
    if (!listed[r]) tri.order.push_back(r);
  }
  auto& g = tri.gamma;
  g = zeros(field_, tri.unknowns, m);
  for (std::size_t k = 0; k < tri.unknowns; ++k) {
    for (std::size_t j = 0; j < m; ++j) g(k, j) = weights_(k, tri.order[j]);
  }
  // The leading ell x ell block is Vandermonde in distinct powers, so every
  // pivot is nonzero without row exchanges.
  for (std::size_t c = 0; c < tri.unknowns; ++c) {
    const auto scale = field_.inv(g(c, c));
    for (std::size_t j = c; j < m; ++j) g(c, j) = field_.mul(g(c, j), scale);
    for (std::size_t k = c + 1; k < tri.unknowns; ++k) {
      if (field_.is_zero(g(k, c))) continue;
      const auto f = g(k, c);
      for (std::size_t j = c; j < m; ++j) g(k, j) = field_.add(g(k, j), field_.mul(f, g(c, j)));
    }
  }
  return tri;
}

template <GaloisField F>
bool EiiCode<F>::recover_row(const Triangulation<F>& tri, std::size_t k, std::size_t level,
                             Grid& grid) const {
  const std::size_t n = cols();
  const std::size_t target = tri.order[k];
  std::vector<value_type> rest(n, field_.zero());
  for (std::size_t j = k + 1; j < rows(); ++j) {
    const auto& coef = tri.gamma(k, j);
    if (field_.is_zero(coef)) continue;
    const auto src = grid.row(tri.order[j]);
    for (std::size_t c = 0; c < n; ++c) rest[c] = field_.add(rest[c], field_.mul(coef, src[c]));
  }
  const auto erased = grid.row_erasures(target);
  std::vector<value_type> word(n, field_.zero());
  for (std::size_t c = 0; c < n; ++c) {
    word[c] = grid.erased(target, c) ? rest[c] : field_.add(grid.at(target, c), rest[c]);
  }
  const auto fixed = nested_[level].erasure_decode(word, erased);
  if (!fixed) return false;
  for (const std::size_t c : erased) grid.set(target, c, field_.add((*fixed)[c], rest[c]));
  return true;
}

template <GaloisField F>
bool EiiCode<F>::is_codeword(const Grid& grid) const {
  if (grid.rows() != rows() || grid.cols() != cols()) {
    throw Error(Errc::parameter_out_of_range, "grid shape does not match the code");
  }
  if (grid.erasure_count() != 0) throw Error(Errc::has_erasures, "grid has erased cells");
  for (std::size_t r = 0; r < rows(); ++r) {
    if (!nested_[0].contains(grid.row(r))) return false;
  }
  std::vector<value_type> combo(cols());
  for (std::size_t w = 1; w <= profile_.t(); ++w) {
    for (std::size_t r = 0; r < profile_.suffix(w); ++r) {
      std::fill(combo.begin(), combo.end(), field_.zero());
      for (std::size_t j = 0; j < rows(); ++j) {
        const auto& coef = weights_(r, j);
        for (std::size_t c = 0; c < cols(); ++c) {
          combo[c] = field_.add(combo[c], field_.mul(coef, grid.at(j, c)));
        }
      }
      if (!nested_[w].contains(combo)) return false;
    }
  }
  return true;
}

template <GaloisField F>
DecodeReport<typename F::value_type> EiiCode<F>::decode_rows(Grid grid) const {
  DecodeReport<value_type> report;
  const std::size_t before = grid.erasure_count();
  const std::size_t u0 = profile_.level(0);
  std::vector<std::size_t> unknown;
  std::vector<std::size_t> counts(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    counts[r] = grid.row_erasure_count(r);
    if (counts[r] == 0) continue;
    if (counts[r] <= u0) {
      const auto erased = grid.row_erasures(r);
      const auto fixed = nested_[0].erasure_decode(grid.row(r), erased);
      if (fixed) {
        for (const std::size_t c : erased) grid.set(r, c, (*fixed)[c]);
        report.corrected_rows.push_back(r);
        continue;
      }
    }
    unknown.push_back(r);
  }
  std::stable_sort(unknown.begin(), unknown.end(),
                   [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });
  if (!unknown.empty()) {
    const auto tri = triangulate(unknown);
    for (std::size_t k = tri.unknowns; k-- > 0;) {
      const std::size_t level = profile_.combination_level(k);
      if (counts[tri.order[k]] > profile_.level(level)) break;
      if (!recover_row(tri, k, level, grid)) break;
      report.corrected_rows.push_back(tri.order[k]);
    }
  }
  report.passes = before == 0 ? 0 : 1;
  report.residual = grid.erasures();
  report.status = status_for<value_type>(before, report.residual);
  report.grid = std::move(grid);
  return report;
}

template <GaloisField F>
typename EiiCode<F>::Grid EiiCode<F>::encode(std::span<const value_type> data) const {
  if (data.size() != dimension()) {
    throw Error(Errc::wrong_data_length, "expected " + std::to_string(dimension()) +
                                             " data symbols, got " + std::to_string(data.size()));
  }
  Grid grid = zero_grid();
  std::size_t next = 0;
  for (std::size_t r = 0; r < rows(); ++r) {
    const std::size_t data_cols = cols() - profile_.entry(r);
    for (std::size_t c = 0; c < cols(); ++c) {
      if (c < data_cols) {
        grid.set(r, c, data[next++]);
      } else {
        grid.erase(r, c);
      }
    }
  }
  for (std::size_t r = 0; r < rows(); ++r) {
    if (profile_.entry(r) != profile_.level(0) || profile_.entry(r) == 0) continue;
    const auto erased = grid.row_erasures(r);
    const auto fixed = nested_[0].erasure_decode(grid.row(r), erased);
    for (const std::size_t c : erased) grid.set(r, c, (*fixed)[c]);
  }
  for (std::size_t k = encoder_.unknowns; k-- > 0;) {
    recover_row(encoder_, k, profile_.combination_level(k), grid);
  }
  return grid;
}

template <GaloisField F>
typename EiiCode<F>::Grid EiiCode<F>::min_weight_codeword(std::size_t j,
                                                         std::span<const std::size_t> row_set,
                                                         std::span<const std::size_t> col_set) const {
  if (j >= profile_.t()) throw Error(Errc::parameter_out_of_range, "level index must be below t");
  const std::size_t nr = profile_.suffix(j + 1) + 1;
  const std::size_t nc = profile_.level(j) + 1;
  if (row_set.size() != nr || col_set.size() != nc) {
    throw Error(Errc::parameter_out_of_range, "expected " + std::to_string(nr) + " rows and " +
                                                  std::to_string(nc) + " columns");
  }
  // w in C_j supported on col_set: kernel of the u_j x (u_j + 1) Vandermonde.
  FieldMatrix<F> hw = select_columns(field_, nested_[j].parity_check(), col_set);
  std::vector<value_type> w(nc, field_.one());
  if (hw.rows() > 0) w = *null_vector(field_, hw);
  // v annihilated by the combinations r < s-hat_(j+1) over the chosen rows.
  std::vector<value_type> v(nr, field_.one());
  if (nr > 1) {
    FieldMatrix<F> hv = zeros(field_, nr - 1, nr);
    for (std::size_t r = 0; r + 1 < nr; ++r) {
      for (std::size_t s = 0; s < nr; ++s) hv(r, s) = weights_(r, row_set[s]);
    }
    v = *null_vector(field_, hv);
  }
  Grid grid = zero_grid();
  for (std::size_t s = 0; s < nr; ++s) {
    for (std::size_t c = 0; c < nc; ++c) grid.set(row_set[s], col_set[c], field_.mul(v[s], w[c]));
  }
  return grid;
}

template <GaloisField F>
FieldMatrix<F> EiiCode<F>::assemble_parity_check() const {
  const std::size_t m = rows();
  const std::size_t n = cols();
  const std::size_t u0 = profile_.level(0);
  std::size_t total = m * u0;
  for (std::size_t w = 1; w <= profile_.t(); ++w) total += profile_.suffix(w) * profile_.level(w);
  FieldMatrix<F> h = zeros(field_, total, m * n);
  std::size_t row = 0;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t q = 0; q < u0; ++q, ++row) {
      for (std::size_t k = 0; k < n; ++k) h(row, j * n + k) = nested_[0].parity_check()(q, k);
    }
  }
  for (std::size_t w = 1; w <= profile_.t(); ++w) {
    for (std::size_t r = 0; r < profile_.suffix(w); ++r) {
      for (std::size_t q = 0; q < profile_.level(w); ++q, ++row) {
        for (std::size_t j = 0; j < m; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            h(row, j * n + k) = field_.mul(weights_(r, j), nested_[w].parity_check()(q, k));
          }
        }
      }
    }
  }
  return h;
}

}  // namespace eii
