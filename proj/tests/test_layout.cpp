#include <doctest.h>

#include "support.hpp"

using namespace eii;
using testing::Grid;
using testing::gf8;

namespace {

using Code = EiiCode<BinaryField>;

// Independent u' from the column view: column j of the transposed code must
// absorb what the row code leaves, so u' is built from the s-hat staircase.
std::vector<std::size_t> staircase_transpose(const Profile& p) {
  // For each cut level x in [0, n), the number of rows whose parity count exceeds x.
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < p.cols(); ++x) {
    std::size_t above = 0;
    for (const auto e : p.entries()) above += e > x;
    out.push_back(above);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("transpose profiles") {
  CHECK(transpose_profile(Profile({1, 1, 3, 4, 7, 7}, 7)) == Profile({2, 2, 2, 3, 4, 4, 6}, 6));
  CHECK(transpose_profile(Profile({1, 2, 3, 5}, 7)) == Profile({0, 0, 1, 1, 2, 3, 4}, 4));
  CHECK(transpose_profile(Profile({1, 3, 6, 8, 9}, 10)) == Profile({0, 1, 2, 2, 3, 3, 3, 4, 4, 5}, 5));
}

TEST_CASE("transpose is an involution and conserves parity") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    const Profile p = testing::random_profile(rng, 10, 10);
    const Profile q = transpose_profile(p);
    CHECK(q.rows() == p.cols());
    CHECK(q.cols() == p.rows());
    CHECK(transpose_profile(q) == p);
    CHECK(q.total_parity() == p.total_parity());
    CHECK(q.entries() == staircase_transpose(p));
  }
}

TEST_CASE("transpose_grid") {
  Grid g(2, 3, 0);
  g.set(0, 2, 5);
  g.erase(1, 0);
  const Grid t = transpose_grid(g);
  CHECK(t.rows() == 3);
  CHECK(t.at(2, 0) == 5);
  CHECK(t.erased(0, 1));
  CHECK(transpose_grid(t) == g);
  Grid one(1, 1, 3);
  CHECK(transpose_grid(one) == one);
}

TEST_CASE("codewords transpose into the column code") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Profile p = testing::random_profile(rng, 7, 6);
    const Code code(gf8(), p);
    const Grid c = testing::random_codeword(code, rng);
    CHECK(code.transpose().is_codeword(transpose_grid(c)));
  }
}

TEST_CASE("iterative decoding") {
  std::mt19937_64 rng(8);
  SUBCASE("partial pattern completes in two passes") {
    const Code code(gf8(), Profile({1, 2, 3, 5}, 7));
    const Grid c = testing::random_codeword(code, rng);
    Grid r = c;
    testing::apply_erasures(r, testing::kPartialPattern);
    const auto report = iterative_decode(code, r);
    CHECK(report.status == DecodeStatus::fully_corrected);
    CHECK(report.passes == 2);
    CHECK(report.grid == c);
  }
  SUBCASE("5 x 10 pattern completes in three passes") {
    const Code code(testing::gf16(), Profile({1, 3, 6, 8, 9}, 10));
    const Grid c = testing::random_codeword(code, rng);
    Grid r = c;
    testing::apply_erasures(r, testing::kThreePassPattern);
    CHECK(code.decode_rows(r).status == DecodeStatus::partially_corrected);
    const auto report = iterative_decode(code, r);
    CHECK(report.status == DecodeStatus::fully_corrected);
    CHECK(report.passes == 3);
    CHECK(report.grid == c);
  }
  SUBCASE("clean grid takes zero passes") {
    const Code code(gf8(), Profile({1, 2, 3, 5}, 7));
    const auto report = iterative_decode(code, code.zero_grid());
    CHECK(report.status == DecodeStatus::fully_corrected);
    CHECK(report.passes == 0);
  }
  SUBCASE("stalls on a hopeless pattern") {
    const Code code(gf8(), Profile({1, 2, 3, 5}, 7));
    Grid r = code.zero_grid();
    for (std::size_t c = 0; c < 7; ++c) {
      r.erase(0, c);
      r.erase(1, c);
      r.erase(2, c);
    }
    const auto report = iterative_decode(code, r);
    CHECK(report.status == DecodeStatus::failed);
    CHECK(report.residual.size() == 21);
  }
}

TEST_CASE("iterative decoding never does worse than rows alone") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const Profile p = testing::random_profile(rng, 6, 7);
    const Code code(gf8(), p);
    const Grid c = testing::random_codeword(code, rng);
    Grid r = c;
    const std::size_t k = rng() % (p.rows() * p.cols() + 1);
    for (const auto cell : testing::random_subset(p.rows() * p.cols(), k, rng)) {
      r.erase(cell / p.cols(), cell % p.cols());
    }
    const auto rows = code.decode_rows(r);
    const auto it = iterative_decode(code, r);
    CHECK(it.residual.size() <= rows.residual.size());
    // Whatever was filled in must be right.
    for (std::size_t i = 0; i < p.rows(); ++i) {
      for (std::size_t j = 0; j < p.cols(); ++j) {
        if (!it.grid.erased(i, j)) CHECK(it.grid.at(i, j) == c.at(i, j));
      }
    }
  }
}

TEST_CASE("balanced layouts") {
  SUBCASE("product code") {
    const auto layout = balanced_layout(Profile({1, 1, 1, 7, 7}, 7));
    CHECK(layout.style == LayoutStyle::balanced);
    CHECK(layout.positions.size() == 17);
    CHECK(layout.positions == testing::layout_cells(testing::kProductLayout));
  }
  SUBCASE("three-level code") {
    const auto layout = balanced_layout(Profile({1, 1, 3, 4, 7, 7}, 7));
    CHECK(layout.positions.size() == 23);
    CHECK(layout.positions == testing::layout_cells(testing::kThreeLevelLayout));
    CHECK(is_balanced(layout, 6));
  }
  SUBCASE("single column") {
    // u' has one nonzero entry: only the first column carries parity.
    const Profile p({0, 1, 1}, 3);
    const auto layout = balanced_layout(p);
    CHECK(layout.positions == std::vector<Cell>{{0, 0}, {1, 0}});
  }
  SUBCASE("tail layout is usually unbalanced") {
    CHECK_FALSE(is_balanced(make_tail_layout(Profile({1, 1, 3, 4, 7, 7}, 7)), 6));
  }
}

TEST_CASE("balanced layouts are balanced and decodable by columns") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const Profile p = testing::random_profile(rng, 7, 7);
    const auto layout = balanced_layout(p);
    CHECK(layout.positions.size() == p.total_parity());
    CHECK(is_balanced(layout, p.rows()));
    const Code columns(gf8(), transpose_profile(p));
    Grid g(p.rows(), p.cols(), 0);
    for (const auto& [r, c] : layout.positions) g.erase(r, c);
    CHECK(columns.decode_rows(transpose_grid(g)).status == DecodeStatus::fully_corrected);
  }
}

TEST_CASE("balanced encoding") {
  std::mt19937_64 rng(17);
  const Code code(gf8(), Profile({1, 1, 3, 4, 7, 7}, 7));
  CHECK(encode_balanced(code, std::vector<std::uint64_t>(19, 0)) == code.zero_grid());
  const auto layout = balanced_layout(code.profile());
  for (int trial = 0; trial < 100; ++trial) {
    const auto data = testing::random_symbols(gf8(), 19, rng);
    const Grid g = encode_balanced(code, data);
    CHECK(g.erasure_count() == 0);
    CHECK(code.is_codeword(g));
    std::set<Cell> parity(layout.positions.begin(), layout.positions.end());
    std::size_t next = 0;
    for (std::size_t r = 0; r < 6; ++r) {
      for (std::size_t c = 0; c < 7; ++c) {
        if (!parity.count({r, c})) CHECK(g.at(r, c) == data[next++]);
      }
    }
  }
  // Product code: every row sums to zero and every column satisfies the two checks.
  const Code product(gf8(), Profile({1, 1, 1, 7, 7}, 7));
  const RsCode<BinaryField> row_code(gf8(), 7, 1);
  const RsCode<BinaryField> col_code(gf8(), 5, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const Grid g = encode_balanced(product, testing::random_symbols(gf8(), 18, rng));
    for (std::size_t r = 0; r < 5; ++r) CHECK(row_code.contains(g.row(r)));
    const Grid t = transpose_grid(g);
    for (std::size_t c = 0; c < 7; ++c) CHECK(col_code.contains(t.row(c)));
  }
  CHECK_THROWS_AS(encode_balanced(code, std::vector<std::uint64_t>(3, 0)), Error);
}
