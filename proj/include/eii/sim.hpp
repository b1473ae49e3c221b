#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "eii/grid.hpp"
#include "eii/profile.hpp"

namespace eii {

enum class ModelKind { rows_only, cols_only, iterative, ideal_lrc };

const char* model_name(ModelKind kind) noexcept;

// Erasure correctability predicate on masks (row-major, nonzero = erased).
class DecoderModel {
 public:
  static DecoderModel rows_only(const Profile& profile);
  static DecoderModel cols_only(const Profile& profile);
  static DecoderModel iterative(const Profile& profile);
  // `groups` local groups of n_group cells (one per grid row), each fixing up to
  // h_local erasures; globally anything below d_global.
  static DecoderModel ideal_lrc(std::size_t groups, std::size_t n_group, std::size_t h_local,
                                std::size_t d_global);

  ModelKind kind() const { return kind_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::string description() const;

  bool correctable(std::span<const unsigned char> mask) const;
  bool correctable(std::span<const Cell> pattern) const;

 private:
  DecoderModel(ModelKind kind, std::size_t rows, std::size_t cols);

  // Clears the rows the triangulation decoder would recover; returns cells cleared.
  static std::size_t row_pass(const Profile& profile, std::vector<unsigned char>& mask,
                              std::size_t rows, std::size_t cols, bool transposed);

  ModelKind kind_;
  std::size_t rows_;
  std::size_t cols_;
  std::optional<Profile> row_profile_;
  std::optional<Profile> col_profile_;
  std::size_t h_local_ = 0;
  std::size_t d_global_ = 0;
};

struct SimResult {
  std::string model;
  std::string metric;
  std::size_t trials = 0;
  double mean = 0;
  double std_error = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> histogram;  // counts indexed by N, erasures-to-failure only

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

// Generator for trial i: mt19937_64 seeded through seed_seq{seed, i}.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);
// Uniform in [0, bound) by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

SimResult mean_erasures_to_failure(const DecoderModel& model, std::size_t trials, std::uint64_t seed);
SimResult correction_probability(const DecoderModel& model, std::size_t num_erasures,
                                 std::size_t trials, std::uint64_t seed);

// Expected arrivals into m bins until the first repeat.
double birthday_expected(std::size_t m);
SimResult birthday_simulation(std::size_t m, std::size_t trials, std::uint64_t seed);

}  // namespace eii
