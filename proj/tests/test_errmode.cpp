#include <doctest.h>

#include "support.hpp"

using namespace eii;
using testing::Grid;
using testing::gf16;
using testing::gf8;

namespace {

using Code = EiiCode<BinaryField>;

// Coefficient of original row `row` in combination k, as a power of alpha (-1 = zero).
int gamma_exponent(const Triangulation<BinaryField>& tri, const BinaryField& f, std::size_t k,
                   std::size_t row) {
  const auto pos = std::find(tri.order.begin(), tri.order.end(), row) - tri.order.begin();
  const auto v = tri.gamma(k, static_cast<std::size_t>(pos));
  if (v == 0) return -1;
  for (int e = 0; e < 15; ++e) {
    if (f.alpha_pow(e) == v) return e;
  }
  return -2;
}

Grid corrupt(const Grid& c, const std::vector<testing::ErrorPattern>& pattern, std::mt19937_64& rng,
             std::uint64_t mask) {
  Grid r = c;
  for (std::size_t row = 0; row < pattern.size(); ++row) {
    for (const auto col : pattern[row].errors) r.set(row, col, r.at(row, col) ^ (1 + rng() % mask));
    for (const auto col : pattern[row].erasures) r.erase(row, col);
  }
  return r;
}

}  // namespace

TEST_CASE("triangulated systems of the 6 x 15 error example") {
  const BinaryField f = gf16();
  const Code code(f, Profile({3, 3, 5, 8, 8, 15}, 15));
  const std::vector<std::size_t> first{5, 0, 2, 3};
  const auto tri = code.triangulate(first);
  CHECK(gamma_exponent(tri, f, 1, 0) == 0);
  CHECK(gamma_exponent(tri, f, 1, 2) == 6);
  CHECK(gamma_exponent(tri, f, 1, 3) == 1);
  CHECK(gamma_exponent(tri, f, 1, 1) == 7);
  CHECK(gamma_exponent(tri, f, 1, 4) == 13);
  CHECK(gamma_exponent(tri, f, 2, 2) == 0);
  CHECK(gamma_exponent(tri, f, 2, 3) == 1);
  CHECK(gamma_exponent(tri, f, 2, 1) == 12);
  CHECK(gamma_exponent(tri, f, 2, 4) == 0);
  CHECK(gamma_exponent(tri, f, 3, 3) == 0);
  CHECK(gamma_exponent(tri, f, 3, 1) == 10);
  CHECK(gamma_exponent(tri, f, 3, 4) == 3);

  // After the third row is known and one rotation.
  const std::vector<std::size_t> rotated{2, 5, 0};
  const auto tri2 = code.triangulate(rotated);
  CHECK(gamma_exponent(tri2, f, 1, 5) == 0);
  CHECK(gamma_exponent(tri2, f, 1, 0) == 7);
  CHECK(gamma_exponent(tri2, f, 1, 3) == 5);
  CHECK(gamma_exponent(tri2, f, 1, 1) == 4);
  CHECK(gamma_exponent(tri2, f, 1, 4) == 9);
  CHECK(gamma_exponent(tri2, f, 2, 0) == 0);
  CHECK(gamma_exponent(tri2, f, 2, 3) == 14);
  CHECK(gamma_exponent(tri2, f, 2, 1) == 4);
  CHECK(gamma_exponent(tri2, f, 2, 4) == 0);
}

TEST_CASE("6 x 15 error and erasure pattern is corrected with one rotation") {
  std::mt19937_64 rng(25);
  const Code code(gf16(), Profile({3, 3, 5, 8, 8, 15}, 15));
  int skipped = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Grid c = testing::random_codeword(code, rng);
    const Grid r = corrupt(c, testing::kErrorPattern, rng, 15);
    // The algorithm presumes no miscorrection; skip draws where a row with too
    // many errors lands within radius of another C0 word.
    bool miscorrects = false;
    for (const std::size_t row : {0, 2, 3, 5}) {
      miscorrects |= code.component(0).error_erasure_decode(r.row(row), r.row_erasures(row)).has_value();
    }
    if (miscorrects) {
      ++skipped;
      continue;
    }
    const auto report = decode_errors_erasures(code, r);
    REQUIRE(report.status == ErrorDecodeStatus::corrected);
    CHECK(report.grid == c);
    CHECK_FALSE(report.fallback_used);
    CHECK(report.rotations == 1);
    using K = RowOutcome::Kind;
    CHECK(report.rows[1].kind == K::corrected_c0);
    CHECK(report.rows[4].kind == K::corrected_c0);
    CHECK(report.rows[3].kind == K::corrected_cw);
    CHECK(report.rows[3].level == 1);
    CHECK(report.rows[3].errors == 2);
    CHECK(report.rows[0].kind == K::corrected_cw);
    CHECK(report.rows[0].level == 2);
    CHECK(report.rows[0].rotations == 1);
    CHECK(report.rows[0].errors == 4);
    CHECK(report.rows[5].level == 2);
    CHECK(report.rows[2].level == 3);
  }
  CHECK(skipped < 20);
}

TEST_CASE("one error per row is fixed in the first step") {
  std::mt19937_64 rng(2);
  const Code code(gf16(), Profile({2, 2, 4, 6, 15}, 15));
  for (int trial = 0; trial < 100; ++trial) {
    const Grid c = testing::random_codeword(code, rng);
    Grid r = c;
    for (std::size_t row = 0; row < 5; ++row) {
      const std::size_t col = rng() % 15;
      r.set(row, col, r.at(row, col) ^ (1 + rng() % 15));
    }
    const auto report = decode_errors_erasures(code, r);
    REQUIRE(report.status == ErrorDecodeStatus::corrected);
    CHECK(report.grid == c);
    CHECK(report.rotations == 0);
    for (const auto& o : report.rows) {
      CHECK(o.kind == RowOutcome::Kind::corrected_c0);
      CHECK(o.errors == 1);
    }
  }
}

TEST_CASE("erasures only: same result as the row decoder") {
  std::mt19937_64 rng(12);
  for (const auto& p : {Profile({1, 1, 3, 4, 7, 7}, 7), Profile({1, 2, 3, 5}, 7), Profile({2, 3, 3, 4, 4, 5, 5, 6}, 8)}) {
    const Code code(gf16(), p);
    for (int trial = 0; trial < 300; ++trial) {
      const Grid c = testing::random_codeword(code, rng);
      Grid r = c;
      const std::size_t k = rng() % (p.rows() * p.cols() / 2);
      for (const auto cell : testing::random_subset(p.rows() * p.cols(), k, rng)) {
        r.erase(cell / p.cols(), cell % p.cols());
      }
      const auto rows = code.decode_rows(r);
      const auto errs = decode_errors_erasures(code, r, false);
      if (rows.status == DecodeStatus::fully_corrected) {
        REQUIRE(errs.status == ErrorDecodeStatus::corrected);
        CHECK(errs.grid == rows.grid);
      } else {
        CHECK(errs.status == ErrorDecodeStatus::failed_rows);
      }
    }
  }
}

TEST_CASE("column fallback") {
  std::mt19937_64 rng(5);
  const Code code(gf8(), Profile({1, 1, 1, 7, 7}, 7));
  const Grid c = testing::random_codeword(code, rng);
  Grid r = c;
  testing::apply_erasures(r, {{0, 1}, {2, 3}, {4, 5}});
  const auto without = decode_errors_erasures(code, r, false);
  CHECK(without.status == ErrorDecodeStatus::failed_rows);
  CHECK_FALSE(without.fallback_used);
  CHECK(without.grid == r);
  const auto with = decode_errors_erasures(code, r);
  CHECK(with.status == ErrorDecodeStatus::corrected);
  CHECK(with.fallback_used);
  CHECK(with.grid == c);
  // Uncorrectable both ways.
  Grid hopeless = c;
  testing::apply_erasures(hopeless, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  const auto both = decode_errors_erasures(code, hopeless);
  CHECK(both.status == ErrorDecodeStatus::failed_both);
  CHECK(both.fallback_used);
}

TEST_CASE("random corruption within row capability") {
  std::mt19937_64 rng(41);
  const Code code(gf16(), Profile({4, 4, 6, 9, 15}, 15));
  for (int trial = 0; trial < 200; ++trial) {
    const Grid c = testing::random_codeword(code, rng);
    Grid r = c;
    for (std::size_t row = 0; row < 5; ++row) {
      const std::size_t errors = rng() % 3;
      const std::size_t erasures = 4 - 2 * errors;
      const auto cells = testing::random_subset(15, errors + erasures, rng);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i < errors) {
          r.set(row, cells[i], r.at(row, cells[i]) ^ (1 + rng() % 15));
        } else {
          r.erase(row, cells[i]);
        }
      }
    }
    const auto report = decode_errors_erasures(code, r);
    REQUIRE(report.status == ErrorDecodeStatus::corrected);
    CHECK(report.grid == c);
    CHECK(code.is_codeword(report.grid));
  }
}
