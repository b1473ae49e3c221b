#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eii {

// Non-decreasing parity vector u of an m x n EII code. Levels u_0 < ... < u_t = n,
// with s_t = 0 allowed when no row is all parity.
class Profile {
 public:
  Profile(std::vector<std::size_t> entries, std::size_t n);

  std::size_t rows() const { return entries_.size(); }
  std::size_t cols() const { return n_; }
  const std::vector<std::size_t>& entries() const { return entries_; }
  std::size_t entry(std::size_t i) const { return entries_[i]; }

  std::size_t t() const { return levels_.size() - 1; }
  const std::vector<std::size_t>& levels() const { return levels_; }
  std::size_t level(std::size_t i) const { return levels_[i]; }
  std::size_t multiplicity(std::size_t i) const { return mult_[i]; }
  // s-hat_i = s_i + ... + s_t; zero for i > t.
  std::size_t suffix(std::size_t i) const { return i < suffix_.size() ? suffix_[i] : 0; }
  // Largest w with s-hat_w > k: the nested code for the k-th combination.
  std::size_t combination_level(std::size_t k) const;

  std::size_t total_parity() const;
  std::string to_string() const;

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<std::size_t> entries_;
  std::size_t n_;
  std::vector<std::size_t> levels_;
  std::vector<std::size_t> mult_;
  std::vector<std::size_t> suffix_;
};

Profile make_profile(std::vector<std::size_t> entries, std::size_t n);
// "C(n,[u0,u1,...])"; throws Errc::parse_error with the offending position.
Profile parse_profile(std::string_view text);

std::size_t dimension(const Profile& profile);
std::size_t min_distance(const Profile& profile);

struct RowDecision {
  bool decodable = false;
  // Rows of the maximal correctable prefix, in decoding order.
  std::vector<std::size_t> rows;
};

// Counts sorted ascending (ties: later rows first) must be dominated by the
// profile entries; the prefix that is dominated is correctable.
RowDecision row_correctable(const Profile& profile, std::span<const std::size_t> counts);
// Length of the dominated prefix only; allocation-free variant for simulations.
std::size_t correctable_prefix(const Profile& profile, std::span<const std::size_t> counts,
                               std::vector<std::size_t>& scratch);

// Column code: u'_(t-i) = s-hat_i, s'_i = u_(t-i) - u_(t-i-1).
Profile transpose_profile(const Profile& profile);

// Parity cells of the tail layout, row-major.
std::vector<std::pair<std::size_t, std::size_t>> tail_layout(const Profile& profile);

}  // namespace eii
