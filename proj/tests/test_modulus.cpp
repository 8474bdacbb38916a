#include <doctest.h>

#include <random>

#include "fdens/modulus.hpp"
#include "oracles.hpp"

using fdens::BigInt;
using fdens::Modulus;
using fdens::ModulusDescriptor;
using fdens::Rational;
using fdens::Real;

namespace {

double rel_diff(const Real& got, const oracles::Real100& want) {
  if (want == 0) return fdens::to_double(abs(got));
  return (abs(oracles::Real100(got) - want) / abs(want)).convert_to<double>();
}

}  // namespace

TEST_CASE("descriptor construction and equality") {
  const auto half = ModulusDescriptor::power(Rational(1, 2));
  CHECK(half == ModulusDescriptor::power(Rational(2, 4)));
  CHECK(half != ModulusDescriptor::power(Rational(1, 3)));
  CHECK(ModulusDescriptor::log() == ModulusDescriptor::log());
  CHECK(half.str() == "power:1/2");

  CHECK_THROWS_AS(ModulusDescriptor::power(Rational(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(ModulusDescriptor::power(Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(ModulusDescriptor::power(Rational(-1, 2)), std::invalid_argument);
  CHECK_NOTHROW(ModulusDescriptor::power(Rational(1, 1)));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
}

TEST_CASE("eval at the documented points") {
  const auto sqrt_mod = Modulus::power(Rational(1, 2));
  CHECK(sqrt_mod.eval(4.0).value_d() == 2.0);

  const auto ex3 = Modulus::example3();
  CHECK(ex3.eval(2.0).value == 2);
  CHECK(ex3.eval(2.0).exact());
  // linear interpolation between f(4) = 2 and f(5) = 3
  CHECK(ex3.eval(4.5).value == Real("2.5"));

  const auto lg = Modulus::log();
  CHECK(lg.eval(0.0).value == 0);
  CHECK(lg.eval(0.0).exact());

  CHECK_THROWS_AS(lg.eval(-1.0), std::domain_error);
  CHECK_THROWS_AS(lg.eval(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  CHECK_THROWS_AS(lg.eval(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("eval_big: exact families and the big-argument log") {
  const auto ex3 = Modulus::example3();
  const auto v = ex3.eval_big(BigInt(1) << 40);
  CHECK(v.exact());
  CHECK(v.value == Real(BigInt(1) << 20));

  const auto identity = Modulus::power(Rational(1, 1));
  BigInt big = 1;
  for (int i = 0; i < 30; ++i) big *= 10;
  const auto idv = identity.eval_big(big);
  CHECK(idv.exact());
  CHECK(BigInt(idv.value) == big);
  CHECK(identity.exact_value(big) == big);

  const auto lg = Modulus::log();
  const BigInt n = (BigInt(1) << 64) - 1;
  const auto lv = lg.eval_big(n);
  CHECK(lv.rel_error <= 1e-12);
  CHECK(rel_diff(lv.value, oracles::log1p_direct(n)) < 1e-12);
  // 1 + n is exactly 2^64 here
  CHECK(rel_diff(lv.value, 64 * log(oracles::Real100(2))) < 1e-12);
}

TEST_CASE("eval_big tracks the high-precision oracle across magnitudes") {
  std::mt19937_64 rng(11);
  const auto lg = Modulus::log();
  const auto p34 = Modulus::power(Rational(3, 4));
  for (unsigned bits : {8u, 24u, 53u, 80u, 128u}) {
    for (int rep = 0; rep < 20; ++rep) {
      const BigInt n = oracles::random_bits(rng, bits) + 1;
      CHECK(rel_diff(lg.eval_big(n).value, oracles::log1p_direct(n)) < 1e-12);
      CHECK(rel_diff(p34.eval_big(n).value, oracles::pow_direct(n, 3, 4)) < 1e-12);
    }
  }
}

TEST_CASE("example3 implementations agree with the naive table and each other") {
  const auto table = oracles::example3_table(std::size_t(1) << 16);

  CHECK(fdens::example3_exact(3) == 2);
  CHECK(fdens::example3_exact(5) == 3);
  CHECK(fdens::example3_exact(7) == 4);
  CHECK(fdens::example3_exact(8) == 4);

  for (std::size_t n = 0; n < table.size(); ++n) {
    const BigInt got = fdens::example3_exact(n);
    REQUIRE(got == table[n]);
    REQUIRE(fdens::example3_exact_iterative(n) == got);
  }

  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 10000; ++rep) {
    const BigInt n = oracles::random_bits(rng, 1 + unsigned(rng() % 128));
    REQUIRE(fdens::example3_exact(n) == fdens::example3_exact_iterative(n));
  }
}

TEST_CASE("example3 hits 2^ceil(k/2) on every power of two up to 2^200") {
  for (int k = 0; k <= 200; ++k) {
    const BigInt expect = BigInt(1) << ((k + 1) / 2);
    CHECK(fdens::example3_exact(BigInt(1) << k) == expect);
    CHECK(fdens::example3_exact_iterative(BigInt(1) << k) == expect);
  }
}

TEST_CASE("positivity and monotonicity of eval_big across sampled arguments") {
  std::mt19937_64 rng(3);
  const std::vector<Modulus> moduli = {Modulus::power(Rational(1, 2)),
                                       Modulus::power(Rational(1, 1)),
                                       Modulus::power(Rational(2, 3)),
                                       Modulus::log(), Modulus::example3()};
  for (const auto& m : moduli) {
    std::vector<BigInt> samples;
    for (int i = 0; i < 300; ++i) samples.push_back(BigInt(1) + BigInt(rng() % (1u << 20)));
    std::sort(samples.begin(), samples.end());
    Real prev = -1;
    for (const auto& n : samples) {
      const auto v = m.eval_big(n);
      REQUIRE(v.value > 0);
      REQUIRE(v.value >= prev - Real(1e-40));
      prev = v.value;
    }
  }
}

TEST_CASE("power family: doubling a power argument scales the value by 2^p") {
  std::mt19937_64 rng(5);
  for (auto p : {Rational(1, 2), Rational(1, 4), Rational(2, 3)}) {
    const auto m = Modulus::power(p);
    const Real scale = exp(p.to_real() * log(Real(2)));
    for (int i = 0; i < 50; ++i) {
      const double x = 1.0 + double(rng() % 100000) / 7.0;
      const auto fx = m.eval(x);
      const auto f2x = m.eval(2 * x);
      CHECK(abs(f2x.value / fx.value - scale) < Real(1e-30));
    }
  }
}

TEST_CASE("example3 subadditivity is exact on all pairs with w + z <= 2^12") {
  const auto table = oracles::example3_table(std::size_t(1) << 12);
  for (std::size_t w = 1; w < table.size(); ++w)
    for (std::size_t z = w; w + z < table.size(); ++z)
      REQUIRE(table[w + z] <= table[w] + table[z]);
  // and the library values are the table values
  for (std::size_t n = 0; n < table.size(); ++n)
    REQUIRE(fdens::example3_exact(n) == table[n]);
}

TEST_CASE("table modulus evaluates, interpolates and clamps") {
  const auto t = Modulus::table({0, 1, 2, 2});
  CHECK(t.eval(2.0).value == 2);
  CHECK(t.eval(0.5).value == Real("0.5"));
  CHECK(t.eval_big(100).value == 2);  // constant past the end
  CHECK(t.domain_cap() == BigInt(3));
  CHECK_THROWS_AS(Modulus::table({1, 2}), std::invalid_argument);
}
