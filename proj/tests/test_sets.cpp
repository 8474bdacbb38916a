#include <doctest.h>

#include <random>

#include "fdens/sets.hpp"
#include "oracles.hpp"

using fdens::alpha;
using fdens::BigInt;
using fdens::BuiltinSet;
using fdens::contains;
using fdens::Grid;
using fdens::IntegerSet;

namespace {

IntegerSet random_block_set(std::mt19937_64& rng, std::uint64_t max_endpoint) {
  std::vector<std::pair<BigInt, BigInt>> blocks;
  std::uint64_t cursor = 1 + rng() % 10;
  const int count = 1 + int(rng() % 40);
  for (int i = 0; i < count && cursor < max_endpoint; ++i) {
    const std::uint64_t lo = cursor;
    const std::uint64_t hi = std::min<std::uint64_t>(max_endpoint, lo + rng() % 2000);
    blocks.emplace_back(BigInt(lo), BigInt(hi));
    cursor = hi + 2 + rng() % 3000;
  }
  return IntegerSet::block_set(std::move(blocks));
}

}  // namespace

TEST_CASE("set construction enforces the representation invariants") {
  CHECK_THROWS_AS(IntegerSet::explicit_set({BigInt(3), BigInt(3)}), std::invalid_argument);
  CHECK_THROWS_AS(IntegerSet::explicit_set({BigInt(0)}), std::invalid_argument);
  CHECK_THROWS_AS(IntegerSet::block_set({{BigInt(5), BigInt(4)}}), std::invalid_argument);
  CHECK_THROWS_AS(IntegerSet::block_set({{BigInt(1), BigInt(5)}, {BigInt(5), BigInt(9)}}),
                  std::invalid_argument);
  CHECK_NOTHROW(IntegerSet::block_set({{BigInt(1), BigInt(5)}, {BigInt(6), BigInt(9)}}));
  CHECK_NOTHROW(IntegerSet::explicit_set({}));
  CHECK_THROWS_AS(fdens::builtin_from_name("primes"), std::invalid_argument);
}

TEST_CASE("alpha at the documented points") {
  const auto blocks = IntegerSet::block_set({{BigInt(3), BigInt(5)}, {BigInt(10), BigInt(12)}});
  CHECK(alpha(blocks, 4) == 2);
  CHECK(alpha(blocks, 0) == 0);
  CHECK(alpha(blocks, 2) == 0);
  CHECK(alpha(blocks, 100) == 6);

  const auto evens = IntegerSet::builtin(BuiltinSet::Evens);
  CHECK(alpha(evens, 10) == 5);
  CHECK(alpha(evens, 0) == 0);

  const auto squares = IntegerSet::builtin(BuiltinSet::Squares);
  BigInt brute = 0;
  for (BigInt i = 1; i * i <= 1000000; ++i) ++brute;
  CHECK(alpha(squares, 1000000) == brute);
  CHECK(alpha(squares, 1000000) == 1000);

  const auto pows = IntegerSet::builtin(BuiltinSet::PowersOfTwo);
  CHECK(alpha(pows, 1) == 1);  // 2^0
  CHECK(alpha(pows, 1024) == 11);
  CHECK(alpha(pows, 1023) == 10);
}

TEST_CASE("closed-form alpha equals brute-force enumeration on random block sets") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 10; ++rep) {
    const auto set = random_block_set(rng, 100000);
    // one pass over membership, compared at every n
    BigInt running = 0;
    for (std::uint64_t n = 1; n <= 100000; ++n) {
      if (contains(set, n)) ++running;
      REQUIRE(alpha(set, n) == running);
    }
  }
}

TEST_CASE("alpha is a unit-step monotone counting function") {
  std::mt19937_64 rng(99);
  const std::vector<IntegerSet> sets = {
      IntegerSet::builtin(BuiltinSet::Evens), IntegerSet::builtin(BuiltinSet::Squares),
      IntegerSet::builtin(BuiltinSet::PowersOfTwo), random_block_set(rng, 1 << 20),
      IntegerSet::explicit_set({BigInt(2), BigInt(3), BigInt(1000), BigInt(999999)})};
  for (const auto& set : sets) {
    for (int i = 0; i < 2000; ++i) {
      const BigInt n = 1 + BigInt(rng() % (1u << 20));
      const BigInt step = alpha(set, n) - alpha(set, n - 1);
      REQUIRE((step == 0 || step == 1));
      REQUIRE(step == (contains(set, n) ? 1 : 0));
    }
  }
}

TEST_CASE("alpha respects subset ordering on block sets") {
  std::mt19937_64 rng(5150);
  for (int rep = 0; rep < 20; ++rep) {
    const auto big = random_block_set(rng, 50000);
    // shrink every block to build a subset
    std::vector<std::pair<BigInt, BigInt>> shrunk;
    for (const auto& [a, b] : big.as_blocks().blocks) {
      if (rng() % 3 == 0) continue;  // drop some blocks entirely
      const BigInt lo = a + BigInt(rng() % 3);
      if (lo > b) continue;
      shrunk.emplace_back(lo, b);
    }
    const auto small = IntegerSet::block_set(std::move(shrunk));
    for (int i = 0; i < 200; ++i) {
      const BigInt n = 1 + BigInt(rng() % 60000);
      REQUIRE(alpha(small, n) <= alpha(big, n));
    }
  }
}

TEST_CASE("builtin membership matches builtin counting") {
  const auto squares = IntegerSet::builtin(BuiltinSet::Squares);
  CHECK(contains(squares, 1));
  CHECK(contains(squares, 144));
  CHECK(!contains(squares, 143));
  const auto pows = IntegerSet::builtin(BuiltinSet::PowersOfTwo);
  CHECK(contains(pows, 1));
  CHECK(contains(pows, 4096));
  CHECK(!contains(pows, 4097));
  // large perfect square held exactly
  const BigInt r = (BigInt(1) << 70) + 12345;
  CHECK(contains(squares, r * r));
  CHECK(!contains(squares, r * r + 1));
  CHECK(alpha(squares, r * r) == r);
  CHECK(alpha(squares, r * r - 1) == r - 1);
}

TEST_CASE("default grid shape: dense head, geometric body, dyadic points, horizon") {
  const auto g = Grid::default_for(BigInt(1) << 20);
  REQUIRE(!g.points.empty());
  CHECK(g.points.front() == 1);
  CHECK(g.points.back() == BigInt(1) << 20);
  for (std::size_t i = 1; i < g.points.size(); ++i)
    REQUIRE(g.points[i] > g.points[i - 1]);
  // every power of two present
  for (int k = 0; k <= 20; ++k) {
    const BigInt p = BigInt(1) << k;
    REQUIRE(std::binary_search(g.points.begin(), g.points.end(), p));
  }
  // the dense head
  for (int n = 1; n <= 1000; ++n)
    REQUIRE(std::binary_search(g.points.begin(), g.points.end(), BigInt(n)));
  // geometric spacing in the body: gaps no wider than 1.3%
  for (std::size_t i = 1; i < g.points.size(); ++i) {
    if (g.points[i - 1] < 1000) continue;
    REQUIRE(g.points[i] * 1000 <= g.points[i - 1] * 1013);
  }

  const auto small = Grid::default_for(BigInt(17));
  CHECK(small.points.size() == 17);

  CHECK_THROWS_AS(Grid::from_points({}), std::invalid_argument);
  CHECK_THROWS_AS(Grid::from_points({BigInt(2), BigInt(2)}), std::invalid_argument);
}
