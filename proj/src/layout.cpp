#include "eii/layout.hpp"

#include <algorithm>
#include <functional>

namespace eii {

ParityLayout make_tail_layout(const Profile& profile) {
  return {tail_layout(profile), LayoutStyle::tail};
}

ParityLayout balanced_layout(const Profile& profile) {
  const std::size_t m = profile.rows();
  std::vector<std::size_t> loads = transpose_profile(profile).entries();
  std::sort(loads.begin(), loads.end(), std::greater<>());
  while (!loads.empty() && loads.back() == 0) loads.pop_back();

  ParityLayout layout;
  layout.style = LayoutStyle::balanced;
  std::size_t placed = 0;
  for (std::size_t j = 0; j < loads.size(); ++j) {
    const std::size_t v = loads[j];
    const std::size_t start = placed % m;
    if (v <= m - start) {
      for (std::size_t r = start; r < start + v; ++r) layout.positions.emplace_back(r, j);
    } else {
      for (std::size_t r = 0; r < v - (m - start); ++r) layout.positions.emplace_back(r, j);
      for (std::size_t r = start; r < m; ++r) layout.positions.emplace_back(r, j);
    }
    placed += v;
  }
  std::sort(layout.positions.begin(), layout.positions.end());
  return layout;
}

bool is_balanced(const ParityLayout& layout, std::size_t rows) {
  std::vector<std::size_t> per_row(rows, 0);
  for (const auto& cell : layout.positions) ++per_row[cell.first];
  const std::size_t q = layout.positions.size() / rows;
  const std::size_t r = layout.positions.size() % rows;
  const auto heavy = static_cast<std::size_t>(std::count(per_row.begin(), per_row.end(), q + 1));
  const auto light = static_cast<std::size_t>(std::count(per_row.begin(), per_row.end(), q));
  return r == 0 ? light == rows : heavy == r && light == rows - r;
}

}  // namespace eii
