#include "eii/sim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <thread>

#include "eii/error.hpp"

namespace eii {

const char* model_name(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::rows_only: return "RowsOnly";
    case ModelKind::cols_only: return "ColsOnly";
    case ModelKind::iterative: return "Iterative";
    case ModelKind::ideal_lrc: return "IdealLrc";
  }
  return "Unknown";
}

DecoderModel::DecoderModel(ModelKind kind, std::size_t rows, std::size_t cols)
    : kind_(kind), rows_(rows), cols_(cols) {}

DecoderModel DecoderModel::rows_only(const Profile& profile) {
  DecoderModel m(ModelKind::rows_only, profile.rows(), profile.cols());
  m.row_profile_ = profile;
  return m;
}

DecoderModel DecoderModel::cols_only(const Profile& profile) {
  DecoderModel m(ModelKind::cols_only, profile.rows(), profile.cols());
  m.col_profile_ = transpose_profile(profile);
  return m;
}

DecoderModel DecoderModel::iterative(const Profile& profile) {
  DecoderModel m(ModelKind::iterative, profile.rows(), profile.cols());
  m.row_profile_ = profile;
  m.col_profile_ = transpose_profile(profile);
  return m;
}

DecoderModel DecoderModel::ideal_lrc(std::size_t groups, std::size_t n_group, std::size_t h_local,
                                     std::size_t d_global) {
  if (groups == 0 || n_group == 0 || h_local >= n_group || d_global == 0) {
    throw Error(Errc::parameter_out_of_range, "invalid LRC parameters");
  }
  DecoderModel m(ModelKind::ideal_lrc, groups, n_group);
  m.h_local_ = h_local;
  m.d_global_ = d_global;
  return m;
}

std::string DecoderModel::description() const {
  std::string out = model_name(kind_);
  if (kind_ == ModelKind::ideal_lrc) {
    return out + "(groups=" + std::to_string(rows_) + ",n=" + std::to_string(cols_) +
           ",h=" + std::to_string(h_local_) + ",d=" + std::to_string(d_global_) + ")";
  }
  const Profile& p = row_profile_ ? *row_profile_ : *col_profile_;
  return out + " " + (row_profile_ ? p.to_string() : "transpose " + p.to_string());
}

std::size_t DecoderModel::row_pass(const Profile& profile, std::vector<unsigned char>& mask,
                                   std::size_t rows, std::size_t cols, bool transposed) {
  thread_local std::vector<std::size_t> counts;
  thread_local std::vector<std::size_t> order;
  // Line l has length `length`; column lines when transposed.
  const std::size_t lines = transposed ? cols : rows;
  const std::size_t length = transposed ? rows : cols;
  auto at = [&](std::size_t l, std::size_t k) -> unsigned char& {
    return transposed ? mask[k * cols + l] : mask[l * cols + k];
  };
  counts.assign(lines, 0);
  for (std::size_t l = 0; l < lines; ++l) {
    for (std::size_t k = 0; k < length; ++k) counts[l] += at(l, k);
  }
  order.resize(lines);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return counts[a] != counts[b] ? counts[a] < counts[b] : a > b;
  });
  std::size_t cleared = 0;
  for (std::size_t j = 0; j < lines && counts[order[j]] <= profile.entry(j); ++j) {
    const std::size_t l = order[j];
    if (counts[l] == 0) continue;
    for (std::size_t k = 0; k < length; ++k) at(l, k) = 0;
    cleared += counts[l];
  }
  return cleared;
}

bool DecoderModel::correctable(std::span<const unsigned char> mask) const {
  if (mask.size() != rows_ * cols_) throw Error(Errc::parameter_out_of_range, "mask shape mismatch");
  thread_local std::vector<unsigned char> work;
  thread_local std::vector<std::size_t> counts;
  switch (kind_) {
    case ModelKind::rows_only:
    case ModelKind::cols_only: {
      const bool by_cols = kind_ == ModelKind::cols_only;
      const Profile& p = by_cols ? *col_profile_ : *row_profile_;
      counts.assign(by_cols ? cols_ : rows_, 0);
      for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) counts[by_cols ? c : r] += mask[r * cols_ + c] != 0;
      }
      std::sort(counts.begin(), counts.end());
      for (std::size_t j = 0; j < counts.size(); ++j) {
        if (counts[j] > p.entry(j)) return false;
      }
      return true;
    }
    case ModelKind::iterative: {
      work.assign(mask.begin(), mask.end());
      for (auto& e : work) e = e != 0;
      std::size_t remaining = static_cast<std::size_t>(std::count(work.begin(), work.end(), 1));
      std::size_t idle = 0;
      bool rows_next = true;
      while (remaining > 0 && idle < 2) {
        const std::size_t cleared = rows_next ? row_pass(*row_profile_, work, rows_, cols_, false)
                                              : row_pass(*col_profile_, work, rows_, cols_, true);
        remaining -= cleared;
        idle = cleared == 0 ? idle + 1 : 0;
        rows_next = !rows_next;
      }
      return remaining == 0;
    }
    case ModelKind::ideal_lrc: {
      std::size_t residual = 0;
      for (std::size_t r = 0; r < rows_; ++r) {
        std::size_t x = 0;
        for (std::size_t c = 0; c < cols_; ++c) x += mask[r * cols_ + c] != 0;
        if (x > h_local_) residual += x;
      }
      return residual + 1 <= d_global_;
    }
  }
  return false;
}

bool DecoderModel::correctable(std::span<const Cell> pattern) const {
  std::vector<unsigned char> mask(rows_ * cols_, 0);
  for (const auto& [r, c] : pattern) {
    if (r >= rows_ || c >= cols_) throw Error(Errc::parameter_out_of_range, "cell outside the grid");
    mask[r * cols_ + c] = 1;
  }
  return correctable(mask);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

namespace {

// Runs fn(i) for i < trials across threads; results land by index so the
// reduction order never depends on scheduling.
std::vector<double> run_trials(std::size_t trials, const std::function<double(std::size_t)>& fn) {
  std::vector<double> out(trials);
  const std::size_t threads =
      std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), std::max<std::size_t>(trials, 1));
  auto work = [&](std::size_t id) {
    for (std::size_t i = id; i < trials; i += threads) out[i] = fn(i);
  };
  std::vector<std::thread> pool;
  for (std::size_t id = 1; id < threads; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& t : pool) t.join();
  return out;
}

void summarize(SimResult& res, const std::vector<double>& values) {
  res.trials = values.size();
  double sum = 0;
  for (const double v : values) sum += v;
  res.mean = sum / static_cast<double>(values.size());
  double ss = 0;
  for (const double v : values) ss += (v - res.mean) * (v - res.mean);
  const double var = values.size() > 1 ? ss / static_cast<double>(values.size() - 1) : 0.0;
  res.std_error = std::sqrt(var / static_cast<double>(values.size()));
}

void check_trials(std::size_t trials) {
  if (trials == 0) throw Error(Errc::parameter_out_of_range, "trials must be at least 1");
}

}  // namespace

SimResult mean_erasures_to_failure(const DecoderModel& model, std::size_t trials, std::uint64_t seed) {
  check_trials(trials);
  const std::size_t cells = model.rows() * model.cols();
  const auto values = run_trials(trials, [&](std::size_t i) {
    auto rng = trial_rng(seed, i);
    std::vector<std::size_t> perm(cells);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<unsigned char> mask(cells, 0);
    for (std::size_t k = 0; k < cells; ++k) {
      const std::size_t j = k + uniform_below(rng, cells - k);
      std::swap(perm[k], perm[j]);
      mask[perm[k]] = 1;
      if (!model.correctable(mask)) return static_cast<double>(k + 1);
    }
    return static_cast<double>(cells + 1);
  });
  SimResult res;
  res.model = model.description();
  res.metric = "mean_erasures_to_failure";
  res.seed = seed;
  summarize(res, values);
  res.histogram.assign(cells + 2, 0);
  for (const double v : values) ++res.histogram[static_cast<std::size_t>(v)];
  return res;
}

SimResult correction_probability(const DecoderModel& model, std::size_t num_erasures,
                                 std::size_t trials, std::uint64_t seed) {
  check_trials(trials);
  const std::size_t cells = model.rows() * model.cols();
  if (num_erasures > cells) throw Error(Errc::parameter_out_of_range, "more erasures than cells");
  const auto values = run_trials(trials, [&](std::size_t i) {
    auto rng = trial_rng(seed, i);
    std::vector<std::size_t> perm(cells);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<unsigned char> mask(cells, 0);
    for (std::size_t k = 0; k < num_erasures; ++k) {
      const std::size_t j = k + uniform_below(rng, cells - k);
      std::swap(perm[k], perm[j]);
      mask[perm[k]] = 1;
    }
    return model.correctable(mask) ? 1.0 : 0.0;
  });
  SimResult res;
  res.model = model.description();
  res.metric = "correction_probability@" + std::to_string(num_erasures);
  res.seed = seed;
  summarize(res, values);
  return res;
}

double birthday_expected(std::size_t m) {
  if (m == 0) throw Error(Errc::parameter_out_of_range, "need at least one bin");
  // E[N] = sum_k P(N > k), P(N > k) = prod_{j<k} (m - j) / m.
  double total = 0;
  double term = 1;
  for (std::size_t k = 0; k <= m; ++k) {
    total += term;
    term *= static_cast<double>(m - k) / static_cast<double>(m);
  }
  return total;
}

SimResult birthday_simulation(std::size_t m, std::size_t trials, std::uint64_t seed) {
  check_trials(trials);
  const auto values = run_trials(trials, [&](std::size_t i) {
    auto rng = trial_rng(seed, i);
    std::vector<unsigned char> seen(m, 0);
    for (std::size_t k = 1;; ++k) {
      const std::size_t bin = uniform_below(rng, m);
      if (seen[bin]) return static_cast<double>(k);
      seen[bin] = 1;
    }
  });
  SimResult res;
  res.model = "Birthday(m=" + std::to_string(m) + ")";
  res.metric = "arrivals_to_first_repeat";
  res.seed = seed;
  summarize(res, values);
  return res;
}

}  // namespace eii
