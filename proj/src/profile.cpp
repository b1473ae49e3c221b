#include "eii/profile.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "eii/error.hpp"

namespace eii {

Profile::Profile(std::vector<std::size_t> entries, std::size_t n) : entries_(std::move(entries)), n_(n) {
  if (entries_.empty()) throw Error(Errc::empty_profile, "profile has no rows");
  if (n_ == 0) throw Error(Errc::parameter_out_of_range, "row length must be positive");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] > n_) {
      throw Error(Errc::entry_exceeds_n, "entry " + std::to_string(i) + " = " +
                                             std::to_string(entries_[i]) + " exceeds n = " +
                                             std::to_string(n_));
    }
    if (i > 0 && entries_[i] < entries_[i - 1]) {
      throw Error(Errc::not_sorted, "entry " + std::to_string(i) + " decreases");
    }
  }
  for (const std::size_t u : entries_) {
    if (levels_.empty() || levels_.back() != u) {
      levels_.push_back(u);
      mult_.push_back(0);
    }
    ++mult_.back();
  }
  if (levels_.back() != n_) {
    levels_.push_back(n_);
    mult_.push_back(0);
  }
  suffix_.assign(levels_.size(), 0);
  std::size_t acc = 0;
  for (std::size_t i = levels_.size(); i-- > 0;) {
    acc += mult_[i];
    suffix_[i] = acc;
  }
}

std::size_t Profile::combination_level(std::size_t k) const {
  std::size_t w = t();
  while (w > 0 && suffix_[w] <= k) --w;
  return w;
}

std::size_t Profile::total_parity() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::size_t{0});
}

std::string Profile::to_string() const {
  std::string out = "C(" + std::to_string(n_) + ",[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + "])";
}

Profile make_profile(std::vector<std::size_t> entries, std::size_t n) {
  return Profile(std::move(entries), n);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char expect_one_of(std::string_view chars) {
    skip_space();
    if (pos_ >= text_.size() || chars.find(text_[pos_]) == std::string_view::npos) {
      fail("expected one of '" + std::string(chars) + "'");
    }
    return text_[pos_++];
  }

  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 1000000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::parse_error, "at position " + std::to_string(pos_) + ": " + msg);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Profile parse_profile(std::string_view text) {
  Parser p(text);
  p.expect('C');
  p.expect('(');
  const std::size_t n = p.number();
  p.expect(',');
  const char open = p.expect_one_of("[(");
  const char close = open == '[' ? ']' : ')';
  std::vector<std::size_t> entries;
  entries.push_back(p.number());
  while (!p.peek(close)) {
    p.expect(',');
    entries.push_back(p.number());
  }
  p.expect(close);
  p.expect(')');
  p.finish();
  return Profile(std::move(entries), n);
}

std::size_t dimension(const Profile& profile) {
  return profile.rows() * profile.cols() - profile.total_parity();
}

std::size_t min_distance(const Profile& profile) {
  if (profile.t() == 0) return profile.rows() * profile.cols() + 1;
  std::size_t d = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < profile.t(); ++i) {
    d = std::min(d, (profile.suffix(i + 1) + 1) * (profile.level(i) + 1));
  }
  return d;
}

std::size_t correctable_prefix(const Profile& profile, std::span<const std::size_t> counts,
                               std::vector<std::size_t>& scratch) {
  scratch.assign(counts.begin(), counts.end());
  std::sort(scratch.begin(), scratch.end());
  std::size_t j = 0;
  while (j < scratch.size() && scratch[j] <= profile.entry(j)) ++j;
  return j;
}

RowDecision row_correctable(const Profile& profile, std::span<const std::size_t> counts) {
  if (counts.size() != profile.rows()) {
    throw Error(Errc::parameter_out_of_range, "one erasure count per row required");
  }
  std::vector<std::size_t> order(counts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return counts[a] != counts[b] ? counts[a] < counts[b] : a > b;
  });
  RowDecision out;
  std::size_t j = 0;
  while (j < order.size() && counts[order[j]] <= profile.entry(j)) ++j;
  out.decodable = j == order.size();
  out.rows.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(j));
  return out;
}

Profile transpose_profile(const Profile& profile) {
  std::vector<std::size_t> entries;
  entries.reserve(profile.cols());
  for (std::size_t i = profile.t() + 1; i-- > 0;) {
    const std::size_t below = i == 0 ? 0 : profile.level(i - 1);
    entries.insert(entries.end(), profile.level(i) - below, profile.suffix(i));
  }
  return Profile(std::move(entries), profile.rows());
}

std::vector<std::pair<std::size_t, std::size_t>> tail_layout(const Profile& profile) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  cells.reserve(profile.total_parity());
  for (std::size_t r = 0; r < profile.rows(); ++r) {
    for (std::size_t c = profile.cols() - profile.entry(r); c < profile.cols(); ++c) {
      cells.emplace_back(r, c);
    }
  }
  return cells;
}

}  // namespace eii
