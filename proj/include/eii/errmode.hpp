#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "eii/eii_code.hpp"
#include "eii/grid.hpp"

namespace eii {

enum class ErrorDecodeStatus { corrected, failed_rows, failed_both };

const char* status_name(ErrorDecodeStatus status) noexcept;

struct RowOutcome {
  enum class Kind { clean, corrected_c0, corrected_cw, failed };
  Kind kind = Kind::clean;
  std::size_t level = 0;      // nested code that fixed the row
  std::size_t rotations = 0;  // retries spent before this row succeeded
  std::size_t errors = 0;
};

template <class T>
struct ErrorDecodeReport {
  SymbolGrid<T> grid;
  ErrorDecodeStatus status = ErrorDecodeStatus::failed_rows;
  std::vector<RowOutcome> rows;
  std::size_t rotations = 0;
  bool fallback_used = false;
};

namespace detail {

// One run of the row algorithm; returns true when every row was decoded.
template <GaloisField F>
bool error_erasure_rows(const EiiCode<F>& code, SymbolGrid<typename F::value_type>& grid,
                        std::vector<RowOutcome>& outcomes, std::size_t& rotations) {
  using T = typename F::value_type;
  const auto& field = code.field();
  const Profile& profile = code.profile();
  const std::size_t m = code.rows();
  const std::size_t n = code.cols();
  outcomes.assign(m, RowOutcome{});

  std::vector<std::size_t> unknown;
  std::vector<std::size_t> counts(m);
  for (std::size_t r = 0; r < m; ++r) {
    counts[r] = grid.row_erasure_count(r);
    const auto erased = grid.row_erasures(r);
    const auto fixed = code.component(0).error_erasure_decode(grid.row(r), erased);
    if (fixed) {
      bool changed = !erased.empty() || fixed->errors > 0;
      for (std::size_t c = 0; c < n; ++c) grid.set(r, c, fixed->word[c]);
      outcomes[r].kind = changed ? RowOutcome::Kind::corrected_c0 : RowOutcome::Kind::clean;
      outcomes[r].errors = fixed->errors;
    } else {
      unknown.push_back(r);
    }
  }
  if (unknown.size() > profile.suffix(1)) {
    for (const std::size_t r : unknown) outcomes[r].kind = RowOutcome::Kind::failed;
    return false;
  }
  std::stable_sort(unknown.begin(), unknown.end(),
                   [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });

  while (!unknown.empty()) {
    const std::size_t ell = unknown.size();
    const std::size_t k = ell - 1;
    const std::size_t level = profile.combination_level(k);
    bool done = false;
    for (std::size_t attempt = 0; attempt < ell && !done; ++attempt) {
      const auto tri = code.triangulate(unknown);
      const std::size_t target = tri.order[k];
      std::vector<T> rest(n, field.zero());
      for (std::size_t j = k + 1; j < m; ++j) {
        const auto& coef = tri.gamma(k, j);
        if (field.is_zero(coef)) continue;
        const auto src = grid.row(tri.order[j]);
        for (std::size_t c = 0; c < n; ++c) rest[c] = field.add(rest[c], field.mul(coef, src[c]));
      }
      const auto erased = grid.row_erasures(target);
      std::vector<T> word(n, field.zero());
      for (std::size_t c = 0; c < n; ++c) {
        word[c] = grid.erased(target, c) ? rest[c] : field.add(grid.at(target, c), rest[c]);
      }
      const auto fixed = code.component(level).error_erasure_decode(word, erased);
      if (fixed) {
        for (std::size_t c = 0; c < n; ++c) grid.set(target, c, field.add(fixed->word[c], rest[c]));
        outcomes[target].kind = RowOutcome::Kind::corrected_cw;
        outcomes[target].level = level;
        outcomes[target].rotations = attempt;
        outcomes[target].errors = fixed->errors;
        unknown.pop_back();
        done = true;
      } else {
        std::rotate(unknown.rbegin(), unknown.rbegin() + 1, unknown.rend());
        ++rotations;
      }
    }
    if (!done) {
      for (const std::size_t r : unknown) outcomes[r].kind = RowOutcome::Kind::failed;
      return false;
    }
  }
  return true;
}

}  // namespace detail

// Errors plus erasures: rows in C_0 first, then triangulated combinations with
// rotation retries, then one attempt on the columns when allowed.
template <GaloisField F>
ErrorDecodeReport<typename F::value_type> decode_errors_erasures(
    const EiiCode<F>& code, SymbolGrid<typename F::value_type> grid, bool column_fallback = true) {
  ErrorDecodeReport<typename F::value_type> report;
  auto work = grid;
  if (detail::error_erasure_rows(code, work, report.rows, report.rotations) &&
      code.is_codeword(work)) {
    report.status = ErrorDecodeStatus::corrected;
    report.grid = std::move(work);
    return report;
  }
  if (!column_fallback) {
    report.status = ErrorDecodeStatus::failed_rows;
    report.grid = std::move(grid);
    return report;
  }
  report.fallback_used = true;
  const EiiCode<F> columns = code.transpose();
  auto transposed = grid.transposed();
  std::vector<RowOutcome> column_outcomes;
  std::size_t column_rotations = 0;
  if (detail::error_erasure_rows(columns, transposed, column_outcomes, column_rotations) &&
      code.is_codeword(transposed.transposed())) {
    report.status = ErrorDecodeStatus::corrected;
    report.rotations += column_rotations;
    report.grid = transposed.transposed();
    return report;
  }
  report.status = ErrorDecodeStatus::failed_both;
  report.grid = std::move(grid);
  return report;
}

}  // namespace eii
