#include "fdens/axioms.hpp"

#include <algorithm>
#include <random>

namespace fdens {

namespace {

constexpr double kGuardFactor = 10.0;
constexpr int kContinuityDepth = 512;
constexpr double kContinuityThreshold = 1e-6;
constexpr double kGrowthFactor = 10.0;

// Portable bounded draw; std::uniform_int_distribution is not pinned down
// across standard libraries and the report must be reproducible from seed.
BigInt draw(std::mt19937_64& rng, const BigInt& lo, const BigInt& hi) {
  const std::uint64_t span = (hi - lo).convert_to<std::uint64_t>() + 1;
  return lo + BigInt(rng() % span);
}

// f(w+z) <= f(w) + f(z), with a guard band when evaluations are inexact.
bool subadditive_at(const Modulus& m, const BigInt& w, const BigInt& z) {
  const ApproxReal fs = m.eval_big(w + z);
  const ApproxReal fw = m.eval_big(w);
  const ApproxReal fz = m.eval_big(z);
  const Real rhs = fw.value + fz.value;
  const Real guard = Real(kGuardFactor) * (Real(fs.rel_error) * fs.value +
                                           Real(fw.rel_error) * fw.value +
                                           Real(fz.rel_error) * fz.value);
  return fs.value <= rhs + guard;
}

bool monotone_at(const Modulus& m, const BigInt& x, const BigInt& y) {
  const ApproxReal fx = m.eval_big(x);
  const ApproxReal fy = m.eval_big(y);
  const Real guard = Real(kGuardFactor) * (Real(fx.rel_error) * fx.value +
                                           Real(fy.rel_error) * fy.value);
  return fx.value <= fy.value + guard;
}

// Greedy shrink toward a small witness: decrement one side while the
// violation persists.
std::pair<BigInt, BigInt> shrink_pair(const Modulus& m, BigInt w, BigInt z) {
  bool progress = true;
  while (progress) {
    progress = false;
    if (w > 1 && !subadditive_at(m, w - 1, z)) {
      --w;
      progress = true;
    } else if (z > 1 && !subadditive_at(m, w, z - 1)) {
      --z;
      progress = true;
    } else if (w > 1 && !subadditive_at(m, w / 2, z)) {
      w /= 2;
      progress = true;
    } else if (z > 1 && !subadditive_at(m, w, z / 2)) {
      z /= 2;
      progress = true;
    }
  }
  if (w > z) std::swap(w, z);
  return {w, z};
}

}  // namespace

AxiomReport check_axioms(const Modulus& m, std::int64_t sample_budget, std::uint64_t seed) {
  if (sample_budget < 1) throw std::invalid_argument("sample_budget must be >= 1");

  AxiomReport report;
  report.sample_count = sample_budget;
  report.rng_seed = seed;
  std::mt19937_64 rng(seed);

  BigInt arg_max = BigInt(1) << 16;
  if (auto cap = m.domain_cap(); cap && *cap < arg_max) arg_max = *cap;
  if (arg_max < 2) arg_max = 2;

  // zero-at-zero
  {
    auto& chk = report.zero_at_zero;
    if (m.eval(0.0).value != 0) {
      chk.pass = false;
      chk.counterexample_x = 0.0;
      chk.detail = "f(0) != 0";
    } else {
      for (double x : {9.5367431640625e-07 /* 2^-20 */, 1.0, 2.0, 17.0, 1000.0}) {
        if (Real(x) > Real(arg_max)) continue;
        if (!(m.eval(x).value > 0)) {
          chk.pass = false;
          chk.counterexample_x = x;
          chk.detail = "f vanishes at a positive point";
          break;
        }
      }
    }
  }

  // subadditivity: random pairs with w + z inside the domain
  {
    auto& chk = report.subadditivity;
    const BigInt hi = arg_max > 2 ? arg_max - 1 : BigInt(1);
    for (std::int64_t i = 0; i < sample_budget && chk.pass; ++i) {
      BigInt w = draw(rng, 1, hi);
      BigInt z = draw(rng, 1, hi);
      if (auto cap = m.domain_cap(); cap && w + z > *cap) {
        z = *cap - w;
        if (z < 1) continue;
      }
      if (!subadditive_at(m, w, z)) {
        chk.pass = false;
        chk.counterexample_pair = shrink_pair(m, w, z);
        chk.detail = "f(w+z) > f(w) + f(z)";
      }
    }
  }

  // monotonicity: random increasing pairs
  {
    auto& chk = report.monotonicity;
    for (std::int64_t i = 0; i < sample_budget && chk.pass; ++i) {
      BigInt x = draw(rng, 1, arg_max);
      BigInt y = draw(rng, 1, arg_max);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      if (!monotone_at(m, x, y)) {
        chk.pass = false;
        chk.counterexample_pair = {{x, y}};
        chk.detail = "f(x) > f(y) with x < y";
      }
    }
  }

  // right continuity at 0: f(2^-i) must decrease toward f(0) = 0
  {
    auto& chk = report.right_continuity;
    Real prev = m.eval(1.0).value;
    Real last = prev;
    double x = 1.0;
    for (int i = 1; i <= kContinuityDepth && chk.pass; ++i) {
      x = std::ldexp(1.0, -i);
      const ApproxReal fx = m.eval(x);
      const Real guard = Real(kGuardFactor * fx.rel_error) * fx.value + Real(1e-60);
      if (fx.value > prev + guard) {
        chk.pass = false;
        chk.counterexample_x = x;
        chk.detail = "f increases along x -> 0";
      }
      prev = fx.value;
      last = fx.value;
    }
    const Real scale = m.eval(1.0).value > 1 ? m.eval(1.0).value : Real(1);
    if (chk.pass && last > Real(kContinuityThreshold) * scale) {
      chk.pass = false;
      chk.counterexample_x = x;
      chk.detail = "f does not approach 0 from the right (grid floor " +
                   std::to_string(to_double(last)) + ")";
    }
  }

  // unboundedness: dyadic growth grid (wider than the pair domain; only a
  // table's hard cap clips it)
  {
    auto& chk = report.unboundedness;
    BigInt growth_cap = BigInt(1) << 50;
    if (auto cap = m.domain_cap(); cap && *cap < growth_cap) growth_cap = *cap;
    const Real f1 = m.eval_big(1).value;
    const Real target = Real(kGrowthFactor) * (f1 > 1 ? f1 : Real(1));
    Real prev = f1;
    Real top = f1;
    BigInt n = 1;
    for (int i = 1; i <= 50 && chk.pass; ++i) {
      n <<= 1;
      if (n > growth_cap) break;
      const ApproxReal fn = m.eval_big(n);
      const Real guard = Real(kGuardFactor * fn.rel_error) * fn.value;
      if (fn.value + guard < prev) {
        chk.pass = false;
        chk.counterexample_pair = {{n / 2, n}};
        chk.detail = "f decreases along the dyadic grid";
      }
      prev = fn.value;
      top = fn.value;
    }
    if (chk.pass && top < target) {
      chk.pass = false;
      chk.counterexample_x = to_double(Real(n < growth_cap ? n : growth_cap));
      chk.detail = "f stays below " + std::to_string(to_double(target)) +
                   " across the growth grid";
    }
  }

  return report;
}

}  // namespace fdens
