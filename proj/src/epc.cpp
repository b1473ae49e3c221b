#include "eii/epc.hpp"

#include <algorithm>

namespace eii {

std::string EpcParams::to_string() const {
  return "EP(" + std::to_string(m) + "," + std::to_string(v) + ";" + std::to_string(n) + "," +
         std::to_string(h) + ";" + std::to_string(g) + ")";
}

EpcParams epc_params(const Profile& profile) {
  EpcParams p;
  p.m = profile.rows();
  p.n = profile.cols();
  p.v = profile.multiplicity(profile.t());
  p.h = profile.level(0);
  p.g = profile.total_parity() - p.h * p.m - p.v * (p.n - p.h);
  return p;
}

std::vector<BoundTerm> bound_terms(const EpcParams& p) {
  if (p.v >= p.m || p.h >= p.n) throw Error(Errc::parameter_out_of_range, "need v < m and h < n");
  const std::size_t lo = (p.g + 1 + (p.m - p.v) - 1) / (p.m - p.v);
  const std::size_t hi = std::min(p.g + 1, p.n - p.h);
  if (lo > hi) {
    throw Error(Errc::empty_range, "no admissible a for " + p.to_string());
  }
  std::vector<BoundTerm> out;
  for (std::size_t a = lo; a <= hi; ++a) {
    BoundTerm term;
    term.a = a;
    term.b = (p.g + 1) / a;
    term.r = p.g + 1 - a * term.b;
    term.d = (p.v + term.b) * (p.h + a);
    if (term.r != 0) term.d += p.h + term.r;
    out.push_back(term);
  }
  return out;
}

std::size_t distance_bound(const EpcParams& params) {
  const auto terms = bound_terms(params);
  return std::min_element(terms.begin(), terms.end(),
                          [](const BoundTerm& a, const BoundTerm& b) { return a.d < b.d; })
      ->d;
}

std::size_t lrc_bound(std::size_t n, std::size_t h, std::size_t g) {
  if (h >= n) throw Error(Errc::parameter_out_of_range, "need h < n");
  return (g + 1 + (n - h) - 1) / (n - h) * h + g + 1;
}

Profile optimal_profile(std::size_t m, std::size_t n, std::size_t v, std::size_t h, std::size_t g) {
  const std::size_t g_max = (h + 1) / (v + 1);  // ceil((h - v + 1) / (v + 1))
  if (v + 1 >= m || v > h || h + g >= n || g < 1 || g > g_max) {
    throw Error(Errc::parameter_out_of_range,
                "need v < m-1, v <= h, h+g < n and 1 <= g <= ceil((h-v+1)/(v+1))");
  }
  std::vector<std::size_t> entries(m - v - 1, h);
  entries.push_back(h + g);
  entries.insert(entries.end(), v, n);
  return Profile(std::move(entries), n);
}

FieldTooSmall::FieldTooSmall(int required, int actual)
    : Error(Errc::field_too_small, "field degree " + std::to_string(actual) +
                                       " is below the required " + std::to_string(required)),
      required_(required) {}

std::size_t hg_required_degree(std::size_t m, std::size_t n, std::size_t g) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < g; ++i) total += (i + 1) * (m * n - g + i);
  return total;
}

std::size_t vandermonde_det_degree(std::span<const std::size_t> js, std::size_t g) {
  if (js.size() != g) throw Error(Errc::parameter_out_of_range, "need exactly g exponents");
  std::size_t total = 0;
  for (std::size_t i = 0; i < g; ++i) {
    if (i > 0 && js[i] <= js[i - 1]) {
      throw Error(Errc::not_sorted, "exponents must be strictly increasing");
    }
    total += (i + 1) * js[i];
  }
  return total;
}

double pattern_count(std::size_t columns, std::size_t cap) {
  double total = 0;
  double binom = 1;
  for (std::size_t w = 0; w <= std::min(cap, columns); ++w) {
    if (w > 0) binom = binom * static_cast<double>(columns - w + 1) / static_cast<double>(w);
    total += binom;
  }
  return total;
}

}  // namespace eii
