#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "eii/eii_code.hpp"
#include "eii/error.hpp"
#include "eii/field.hpp"
#include "eii/matrix.hpp"
#include "eii/profile.hpp"

namespace eii {

// EP(m, v; n, h; g): v parities per column, h per row, g extra.
struct EpcParams {
  std::size_t m = 0;
  std::size_t v = 0;
  std::size_t n = 0;
  std::size_t h = 0;
  std::size_t g = 0;

  std::string to_string() const;
  friend bool operator==(const EpcParams&, const EpcParams&) = default;
};

struct BoundTerm {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t r = 0;
  std::size_t d = 0;
};

EpcParams epc_params(const Profile& profile);
// d(v, h, g; a) for every a in the admissible range; throws Errc::empty_range.
std::vector<BoundTerm> bound_terms(const EpcParams& params);
std::size_t distance_bound(const EpcParams& params);
std::size_t lrc_bound(std::size_t n, std::size_t h, std::size_t g);

// (h x (m-v-1), h+g, n x v); throws Errc::parameter_out_of_range.
Profile optimal_profile(std::size_t m, std::size_t n, std::size_t v, std::size_t h, std::size_t g);

template <GaloisField F>
EiiCode<F> optimal_code(F field, std::size_t m, std::size_t n, std::size_t v, std::size_t h,
                          std::size_t g) {
  return EiiCode<F>(std::move(field), optimal_profile(m, n, v, h, g));
}

class FieldTooSmall : public Error {
 public:
  FieldTooSmall(int required, int actual);
  int required_degree() const { return required_; }

 private:
  int required_;
};

// Sum_{i<g} (i+1)(mn - g + i).
std::size_t hg_required_degree(std::size_t m, std::size_t n, std::size_t g);
// Sum_i (i+1) j_i.
std::size_t vandermonde_det_degree(std::span<const std::size_t> js, std::size_t g);

// Row-indicator rows, then column-indicator rows; columns are cells row-major.
template <GaloisField F>
FieldMatrix<F> product_code_checks(const F& field, std::size_t m, std::size_t n, std::size_t extra) {
  FieldMatrix<F> h = zeros(field, m + n + extra, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h(i, i * n + j) = field.one();
      h(m + j, i * n + j) = field.one();
    }
  }
  return h;
}

template <GaloisField F>
FieldMatrix<F> build_H2(const F& field, std::size_t m, std::size_t n) {
  if (m < 3 || n < 3) throw Error(Errc::parameter_out_of_range, "H2 needs m, n >= 3");
  if (!field.alpha_order_at_least(m * n)) {
    throw Error(Errc::order_too_small, "order of alpha is below mn = " + std::to_string(m * n));
  }
  FieldMatrix<F> h = product_code_checks(field, m, n, 2);
  for (std::size_t j = 0; j < m * n; ++j) {
    h(m + n, j) = field.alpha_pow(static_cast<std::int64_t>(j));
    h(m + n + 1, j) = field.alpha_pow(-static_cast<std::int64_t>(j));
  }
  return h;
}

template <GaloisField F>
FieldMatrix<F> build_Hg(const F& field, std::size_t m, std::size_t n, std::size_t g) {
  const std::size_t need = hg_required_degree(m, n, g);
  if (static_cast<std::size_t>(field.degree()) < need) {
    throw FieldTooSmall(static_cast<int>(need), field.degree());
  }
  if (g > 0 && !field.equal(field.alpha(), field.x())) {
    throw Error(Errc::parameter_out_of_range, "alpha must be the root x of the modulus");
  }
  FieldMatrix<F> h = product_code_checks(field, m, n, g);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < m * n; ++j) {
      h(m + n + i, j) = field.alpha_pow(static_cast<std::int64_t>((i + 1) * j));
    }
  }
  return h;
}

// Solves H restricted to the erased columns against the syndrome of the rest.
template <GaloisField F>
std::optional<std::vector<typename F::value_type>> matrix_erasure_decode(
    const F& field, const FieldMatrix<F>& h, std::span<const typename F::value_type> word,
    std::span<const std::size_t> erasures) {
  std::vector<typename F::value_type> out(word.begin(), word.end());
  for (const std::size_t e : erasures) out[e] = field.zero();
  const auto syn = multiply(field, h, std::span<const typename F::value_type>(out));
  FieldMatrix<F> rhs = zeros(field, h.rows(), 1);
  for (std::size_t r = 0; r < h.rows(); ++r) rhs(r, 0) = syn[r];
  const auto x = solve(field, select_columns(field, h, erasures), rhs);
  if (!x) return std::nullopt;
  for (std::size_t i = 0; i < erasures.size(); ++i) out[erasures[i]] = (*x)(i, 0);
  return out;
}

template <GaloisField F>
bool columns_independent(const F& field, const FieldMatrix<F>& h, std::span<const std::size_t> cols) {
  return rank(field, select_columns(field, h, cols)) == cols.size();
}

// Number of erasure patterns of weight <= cap, saturating.
double pattern_count(std::size_t columns, std::size_t cap);
inline constexpr double kMaxPatterns = 6.7e7;

namespace detail {

template <GaloisField F>
FieldMatrix<F> row_basis(const F& field, FieldMatrix<F> h) {
  const std::size_t r = row_reduce(field, h, h.cols()).size();
  FieldMatrix<F> out = zeros(field, r, h.cols());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < h.cols(); ++c) out(i, c) = h(i, c);
  }
  return out;
}

}  // namespace detail

// Smallest w <= cap with a dependent set of w columns, or cap + 1.
// Depth-first over independent column sets, one subtree per leading column.
template <GaloisField F>
std::size_t exhaustive_min_distance(const F& field, const FieldMatrix<F>& h, std::size_t cap) {
  using T = typename F::value_type;
  const std::size_t n = h.cols();
  if (pattern_count(n, cap) > kMaxPatterns) {
    throw Error(Errc::too_large, "search over weight <= " + std::to_string(cap) + " patterns of " +
                                     std::to_string(n) + " columns is too large");
  }
  const FieldMatrix<F> basis = detail::row_basis(field, h);
  std::vector<std::vector<T>> columns(n, std::vector<T>(basis.rows(), field.zero()));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < basis.rows(); ++r) columns[c][r] = basis(r, c);
  }
  std::atomic<std::size_t> best{cap + 1};
  std::atomic<std::size_t> next_root{0};

  auto worker = [&]() {
    EchelonBasis<F> echelon(field, basis.rows());
    auto search = [&](auto&& self, std::size_t from) -> void {
      const std::size_t depth = echelon.size();
      if (depth + 1 >= best.load()) return;
      for (std::size_t c = from; c < n; ++c) {
        if (!echelon.insert(columns[c])) {
          std::size_t cur = best.load();
          while (depth + 1 < cur && !best.compare_exchange_weak(cur, depth + 1)) {
          }
          return;
        }
        self(self, c + 1);
        echelon.pop();
        if (depth + 1 >= best.load()) return;
      }
    };
    for (std::size_t root = next_root++; root < n; root = next_root++) {
      if (1 >= best.load()) break;
      if (!echelon.insert(columns[root])) {
        best.store(1);
        break;
      }
      search(search, root + 1);
      echelon.pop();
    }
  };
  const std::size_t threads = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return best.load();
}

template <GaloisField F>
std::size_t exhaustive_min_distance(const EiiCode<F>& code, std::size_t cap) {
  return exhaustive_min_distance(code.field(), code.assemble_parity_check(), cap);
}

// First weight-w column set (colexicographic order) that is dependent.
template <GaloisField F>
std::optional<std::vector<std::size_t>> first_dependent_pattern(const F& field, const FieldMatrix<F>& h,
                                                                std::size_t w) {
  const std::size_t n = h.cols();
  if (w > n) return std::nullopt;
  if (pattern_count(n, w) > kMaxPatterns) throw Error(Errc::too_large, "pattern enumeration too large");
  std::vector<std::size_t> idx(w);
  for (std::size_t i = 0; i < w; ++i) idx[i] = i;
  while (true) {
    if (!columns_independent(field, h, idx)) return idx;
    // Colex successor: bump the lowest index that can move.
    std::size_t i = 0;
    while (i < w && idx[i] + 1 == (i + 1 < w ? idx[i + 1] : n)) ++i;
    if (i == w) return std::nullopt;
    ++idx[i];
    for (std::size_t k = 0; k < i; ++k) idx[k] = k;
  }
}

}  // namespace eii
