#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "eii/eii_code.hpp"
#include "eii/grid.hpp"
#include "eii/profile.hpp"

namespace eii {

enum class LayoutStyle { tail, balanced };

struct ParityLayout {
  std::vector<Cell> positions;  // sorted row-major
  LayoutStyle style = LayoutStyle::tail;
};

ParityLayout make_tail_layout(const Profile& profile);
ParityLayout balanced_layout(const Profile& profile);
// With total = q*m + r: r rows carry q + 1 cells and the rest q.
bool is_balanced(const ParityLayout& layout, std::size_t rows);

// Row passes under the code and column passes under its transpose, starting with
// rows, until the grid is clean or two consecutive passes remove nothing.
template <GaloisField F>
DecodeReport<typename F::value_type> iterative_decode(
    const EiiCode<F>& code, SymbolGrid<typename F::value_type> grid,
    std::size_t max_passes = std::numeric_limits<std::size_t>::max()) {
  using T = typename F::value_type;
  DecodeReport<T> report;
  const std::size_t initial = grid.erasure_count();
  const EiiCode<F> columns = code.transpose();
  std::size_t remaining = initial;
  std::size_t idle = 0;
  bool rows_next = true;
  while (remaining > 0 && report.passes < max_passes && idle < 2) {
    if (rows_next) {
      auto pass = code.decode_rows(std::move(grid));
      report.corrected_rows.insert(report.corrected_rows.end(), pass.corrected_rows.begin(),
                                   pass.corrected_rows.end());
      grid = std::move(pass.grid);
    } else {
      grid = columns.decode_rows(grid.transposed()).grid.transposed();
    }
    ++report.passes;
    const std::size_t now = grid.erasure_count();
    idle = now == remaining ? idle + 1 : 0;
    remaining = now;
    rows_next = !rows_next;
  }
  report.residual = grid.erasures();
  report.status = status_for<T>(initial, report.residual);
  report.grid = std::move(grid);
  return report;
}

template <GaloisField F>
SymbolGrid<typename F::value_type> encode_balanced(const EiiCode<F>& code,
                                                   std::span<const typename F::value_type> data) {
  if (data.size() != code.dimension()) {
    throw Error(Errc::wrong_data_length, "expected " + std::to_string(code.dimension()) +
                                             " data symbols, got " + std::to_string(data.size()));
  }
  const ParityLayout layout = balanced_layout(code.profile());
  auto grid = code.zero_grid();
  for (const auto& [r, c] : layout.positions) grid.erase(r, c);
  std::size_t next = 0;
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    for (std::size_t c = 0; c < grid.cols(); ++c) {
      if (!grid.erased(r, c)) grid.set(r, c, data[next++]);
    }
  }
  return code.transpose().decode_rows(grid.transposed()).grid.transposed();
}

}  // namespace eii
