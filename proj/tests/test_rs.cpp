#include <doctest.h>

#include "support.hpp"

using namespace eii;
using testing::gf16;
using testing::gf8;

TEST_CASE("parity check rows are powers of alpha") {
  const RsCode<BinaryField> code(gf8(), 7, 2);
  const auto& h = code.parity_check();
  REQUIRE(h.rows() == 2);
  for (std::size_t j = 0; j < 7; ++j) {
    CHECK(h(0, j) == 1);
    CHECK(h(1, j) == gf8().alpha_pow(static_cast<std::int64_t>(j)));
  }
}

TEST_CASE("extreme redundancies") {
  const RsCode<BinaryField> whole(gf8(), 7, 0);
  CHECK(whole.parity_check().rows() == 0);
  CHECK(whole.contains(std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7}));

  const RsCode<BinaryField> zero(gf8(), 7, 7);
  CHECK(testing::leibniz_det(gf8(), zero.parity_check()) != 0);
  CHECK_FALSE(zero.contains(std::vector<std::uint64_t>{0, 0, 0, 1, 0, 0, 0}));
  CHECK(zero.contains(std::vector<std::uint64_t>(7, 0)));
}

TEST_CASE("length beyond the order of alpha is rejected") {
  try {
    RsCode<BinaryField>(gf8(), 8, 2);
    FAIL("expected LengthExceedsOrder");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::length_exceeds_order);
  }
}

TEST_CASE("MDS: every u columns are independent (n <= 8)") {
  const BinaryField f(4, 0x13);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t u = 1; u <= n; ++u) {
      const RsCode<BinaryField> code(f, n, u);
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(u), true);
      do {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j) {
          if (pick[j]) cols.push_back(j);
        }
        const auto sub = select_columns(f, code.parity_check(), cols);
        CHECK(testing::leibniz_det(f, sub) != 0);
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
}

TEST_CASE("syndromes, nesting and erasure decoding") {
  std::mt19937_64 rng(5);
  const BinaryField f = gf16();
  const RsCode<BinaryField> outer(f, 15, 3);
  const RsCode<BinaryField> inner(f, 15, 8);
  CHECK(outer.syndromes(std::vector<std::uint64_t>(15, 0)) == std::vector<std::uint64_t>(3, 0));
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = testing::random_rs_codeword(inner, rng);
    CHECK(inner.contains(c));
    CHECK(outer.contains(c));
    const auto er = testing::random_subset(15, 8, rng);
    auto damaged = c;
    for (const auto e : er) damaged[e] = rng() & 15;
    const auto fixed = inner.erasure_decode(damaged, er);
    REQUIRE(fixed);
    CHECK(*fixed == c);
    CHECK(*inner.erasure_decode(c, std::vector<std::size_t>{}) == c);
  }
  const RsCode<BinaryField> parity(f, 15, 1);
  std::vector<std::uint64_t> w{1, 2, 3};
  w.resize(15, 0);
  w[3] = 1 ^ 2 ^ 3;
  CHECK(parity.syndromes(w)[0] == 0);
  CHECK_FALSE(inner.erasure_decode(std::vector<std::uint64_t>(15, 0), testing::random_subset(15, 9, rng)));
}

TEST_CASE("error-erasure decoding within capability is exact (n = 7, exhaustive positions)") {
  std::mt19937_64 rng(9);
  const BinaryField f = gf8();
  for (std::size_t u = 1; u <= 4; ++u) {
    const RsCode<BinaryField> code(f, 7, u);
    for (std::size_t i = 0; 2 * i <= u; ++i) {
      const std::size_t j = u - 2 * i;
      // Every choice of error positions and erasure positions.
      std::vector<bool> pick(7, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(i + j), true);
      do {
        std::vector<std::size_t> bad;
        for (std::size_t p = 0; p < 7; ++p) {
          if (pick[p]) bad.push_back(p);
        }
        std::vector<bool> split(bad.size(), false);
        std::fill(split.begin(), split.begin() + static_cast<std::ptrdiff_t>(i), true);
        do {
          const auto c = testing::random_rs_codeword(code, rng);
          auto r = c;
          std::vector<std::size_t> erasures;
          for (std::size_t k = 0; k < bad.size(); ++k) {
            if (split[k]) {
              r[bad[k]] ^= 1 + rng() % 7;
            } else {
              erasures.push_back(bad[k]);
              r[bad[k]] = rng() & 7;
            }
          }
          const auto out = code.error_erasure_decode(r, erasures);
          REQUIRE(out);
          CHECK(out->word == c);
          CHECK(out->errors == i);
        } while (std::prev_permutation(split.begin(), split.end()));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
}

TEST_CASE("two errors corrected in the [15,10,6] code") {
  std::mt19937_64 rng(25);
  const RsCode<BinaryField> c1(gf16(), 15, 5);
  const auto c = testing::random_rs_codeword(c1, rng);
  auto r = c;
  r[5] ^= 7;
  r[11] ^= 12;
  const auto out = c1.error_erasure_decode(r, std::vector<std::size_t>{});
  REQUIRE(out);
  CHECK(out->word == c);
  CHECK(out->errors == 2);
}

TEST_CASE("error-erasure decoding reports failure beyond capability") {
  std::mt19937_64 rng(1);
  const RsCode<BinaryField> code(gf16(), 15, 4);
  std::size_t failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = testing::random_rs_codeword(code, rng);
    auto r = c;
    for (const auto p : testing::random_subset(15, 4, rng)) r[p] ^= 1 + rng() % 15;
    const auto out = code.error_erasure_decode(r, std::vector<std::size_t>{});
    if (!out) {
      ++failures;
    } else {
      // Miscorrection lands on a codeword within radius 2 of the received word.
      CHECK(code.contains(out->word));
      std::size_t dist = 0;
      for (std::size_t k = 0; k < 15; ++k) dist += out->word[k] != r[k];
      CHECK(dist == out->errors);
      CHECK(out->errors <= 2);
    }
  }
  // About 64% of weight-4 corruptions sit outside every radius-2 ball.
  CHECK(failures > 100);
  CHECK(failures < 160);
}
