#include "fdens/modulus.hpp"

#include <cmath>
#include <mutex>
#include <numeric>

namespace fdens {
namespace {

namespace mp = boost::multiprecision;

const Real& ln2_real() {
  static const Real v = log(Real(2));
  return v;
}

// Index of the highest set bit.
unsigned bit_index(const BigInt& n) { return mp::msb(n); }

// Blanket relative-error bound for one log/exp round trip at exponent
// magnitude `mag`: a handful of ulps plus the exponent amplification.
double inexact_err(double mag) {
  return (16.0 + std::abs(mag)) * real_epsilon();
}

ApproxReal exact_from_bigint(const BigInt& v) {
  ApproxReal out;
  out.value = Real(v);
  out.rel_error = representable_in_real(v, out.value) ? 0.0 : 4 * real_epsilon();
  return out;
}

// ln(1 + x) via bit-length + normalized-mantissa decomposition:
// with B = msb(1 + x), ln(1 + x) = B ln 2 + ln((1 + x) / 2^B).
ApproxReal log1p_decomposed(const Real& x) {
  if (x == 0) return {Real(0), 0.0};
  const Real y = 1 + x;
  const long b = static_cast<long>(floor(log2(y)).convert_to<double>());
  const Real mant = ldexp(y, -static_cast<int>(b));  // in [1, 2)
  ApproxReal out;
  out.value = Real(b) * ln2_real() + log(mant);
  out.rel_error = inexact_err(2.0 + std::abs(static_cast<double>(b)));
  return out;
}

ApproxReal power_eval(const Rational& p, const Real& x) {
  if (x == 0) return {Real(0), 0.0};
  if (p.num == p.den) {
    // identity; exact
    return {x, 0.0};
  }
  const Real lx = log(x);
  ApproxReal out;
  out.value = exp(p.to_real() * lx);
  out.rel_error = inexact_err(to_double(lx));
  return out;
}

// Table lookup with linear interpolation and constant extension past the end.
ApproxReal table_eval(const std::vector<std::uint64_t>& tbl, const Real& x) {
  const BigInt last(tbl.size() - 1);
  const BigInt lo = BigInt(floor(x));
  if (lo >= last) return {Real(tbl.back()), 0.0};
  const std::uint64_t i = lo.convert_to<std::uint64_t>();
  const Real frac = x - Real(lo);
  if (frac == 0) return {Real(tbl[i]), 0.0};
  ApproxReal out;
  out.value = Real(tbl[i]) + frac * (Real(tbl[i + 1]) - Real(tbl[i]));
  out.rel_error = 4 * real_epsilon();
  return out;
}

// f(2^k) = 2^ceil(k/2) for the recursive dyadic modulus.
BigInt example3_power_of_two(unsigned k) { return BigInt(1) << ((k + 1) / 2); }

constexpr std::size_t kExample3CacheBound = std::size_t(1) << 20;
constexpr unsigned kPow2Ladder = 640;

// Read-only value table for arguments below 2^20, built once. The recursion
// only ever descends, so an iterative fill in increasing order suffices.
const std::vector<std::uint32_t>& example3_small_table() {
  static std::vector<std::uint32_t> tbl;
  static std::once_flag flag;
  std::call_once(flag, [] {
    tbl.resize(kExample3CacheBound + 1);
    tbl[0] = 0;
    tbl[1] = 1;
    tbl[2] = 2;
    unsigned k = 1;  // n in (2^k, 2^(k+1)]
    for (std::size_t n = 3; n < tbl.size(); ++n) {
      if (n > (std::size_t(1) << (k + 1))) ++k;
      const std::size_t a = n - (std::size_t(1) << k);
      tbl[n] = (k % 2 == 1) ? tbl[std::size_t(1) << k]
                            : tbl[std::size_t(1) << k] + tbl[a];
    }
  });
  return tbl;
}

// f(2^k), produced by unrolling the recursion along the power-of-two ladder:
// f(2^(k+1)) = f(2^k + 2^k) = f(2^k) when k is odd, 2 f(2^k) when k is even.
// Fixed-size table, built once; keeps deep arguments linear in bit length.
const std::vector<BigInt>& example3_pow2_ladder() {
  static std::vector<BigInt> tbl;
  static std::once_flag flag;
  std::call_once(flag, [] {
    tbl.resize(kPow2Ladder + 1);
    tbl[0] = 1;  // f(2^0) = f(1)
    tbl[1] = 2;
    for (unsigned k = 1; k < kPow2Ladder; ++k)
      tbl[k + 1] = (k % 2 == 1) ? tbl[k] : 2 * tbl[k];
  });
  return tbl;
}

BigInt example3_pow2(unsigned k) {
  if (k <= kPow2Ladder) return example3_pow2_ladder()[k];
  // past the ladder: f(2^k) = 2 f(2^(k-1)) exactly when k is odd
  BigInt scale = 1;
  while (k > kPow2Ladder) {
    if (k % 2 == 1) scale *= 2;
    --k;
  }
  return scale * example3_pow2_ladder()[k];
}

BigInt example3_recursive(const BigInt& n) {
  if (n <= 2) return n;
  if (n <= kExample3CacheBound)
    return BigInt(example3_small_table()[n.convert_to<std::size_t>()]);
  const unsigned k = bit_index(n - 1);  // largest k with 2^k < n
  if (k % 2 == 1) return example3_pow2(k);
  return example3_pow2(k) + example3_recursive(n - (BigInt(1) << k));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text), 1);
    return Rational(std::stoll(text.substr(0, slash)),
                    std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

std::string family_name(ModulusFamily f) {
  switch (f) {
    case ModulusFamily::Power:
      return "power";
    case ModulusFamily::Log:
      return "log";
    case ModulusFamily::Example3:
      return "example3";
  }
  return "?";
}

ModulusDescriptor ModulusDescriptor::power(Rational p) {
  if (p.num <= 0 || p.num > p.den)
    throw std::invalid_argument("power exponent must lie in (0, 1], got " + p.str());
  return ModulusDescriptor(ModulusFamily::Power, p);
}

std::string ModulusDescriptor::str() const {
  if (family_ == ModulusFamily::Power) return "power:" + p_->str();
  return family_name(family_);
}

BigInt example3_exact(const BigInt& n) {
  if (n < 0) throw std::domain_error("example3_exact: negative argument");
  return example3_recursive(n);
}

BigInt example3_exact_iterative(const BigInt& n) {
  if (n < 0) throw std::domain_error("example3_exact_iterative: negative argument");
  BigInt total = 0;
  BigInt x = n;
  while (x > 2) {
    const unsigned k = bit_index(x - 1);
    if (k % 2 == 1) {
      // flat segment: f(x) = f(2^k)
      total += example3_power_of_two(k);
      return total;
    }
    total += example3_power_of_two(k);
    x -= BigInt(1) << k;
  }
  return total + x;
}

Modulus Modulus::from_descriptor(const ModulusDescriptor& d) {
  switch (d.family()) {
    case ModulusFamily::Power:
      return Modulus(PowerImpl{*d.exponent()}, d);
    case ModulusFamily::Log:
      return Modulus(LogImpl{}, d);
    case ModulusFamily::Example3:
      return Modulus(Example3Impl{}, d);
  }
  throw std::invalid_argument("unknown modulus family");
}

Modulus Modulus::table(std::vector<std::uint64_t> values) {
  if (values.empty() || values[0] != 0)
    throw std::invalid_argument("table modulus requires values with f(0) = 0");
  return Modulus(TableImpl{std::move(values)}, std::nullopt);
}

ApproxReal Modulus::eval(double x) const {
  if (!std::isfinite(x)) throw std::domain_error("modulus argument must be finite");
  if (x < 0) throw std::domain_error("modulus argument must be nonnegative");
  return eval_real(Real(x));
}

ApproxReal Modulus::eval_real(const Real& x) const {
  if (x < 0) throw std::domain_error("modulus argument must be nonnegative");
  if (const auto* pw = std::get_if<PowerImpl>(&impl_)) return power_eval(pw->p, x);
  if (std::holds_alternative<LogImpl>(impl_)) return log1p_decomposed(x);
  if (const auto* tb = std::get_if<TableImpl>(&impl_)) return table_eval(tb->values, x);

  // Example3: exact on integers, linear interpolation in between.
  const BigInt lo = BigInt(floor(x));
  const Real frac = x - Real(lo);
  const BigInt flo = example3_exact(lo);
  if (frac == 0) return exact_from_bigint(flo);
  const BigInt fhi = example3_exact(lo + 1);
  ApproxReal out;
  out.value = Real(flo) + frac * Real(fhi - flo);
  out.rel_error = 4 * real_epsilon();
  return out;
}

ApproxReal Modulus::eval_big(const BigInt& n) const {
  if (n < 0) throw std::domain_error("modulus argument must be nonnegative");
  if (auto ex = exact_value(n)) return exact_from_bigint(*ex);
  if (std::holds_alternative<LogImpl>(impl_)) {
    if (n == 0) return {Real(0), 0.0};
    // ln(1 + n) with the dyadic decomposition done on the integer itself.
    const BigInt y = n + 1;
    const unsigned b = bit_index(y);
    const Real mant = ldexp(Real(y), -static_cast<int>(b));
    ApproxReal out;
    out.value = Real(b) * ln2_real() + mp::log(mant);
    out.rel_error = inexact_err(2.0 + b);
    return out;
  }
  const auto& pw = std::get<PowerImpl>(impl_);
  if (n == 0) return {Real(0), 0.0};
  // exp(p ln n) with ln n = B ln 2 + ln(n / 2^B)
  const unsigned b = bit_index(n);
  const Real lx = Real(b) * ln2_real() + mp::log(mp::ldexp(Real(n), -static_cast<int>(b)));
  ApproxReal out;
  out.value = exp(pw.p.to_real() * lx);
  out.rel_error = inexact_err(to_double(lx));
  return out;
}

std::optional<BigInt> Modulus::exact_value(const BigInt& n) const {
  if (n < 0) throw std::domain_error("modulus argument must be nonnegative");
  if (const auto* pw = std::get_if<PowerImpl>(&impl_)) {
    if (pw->p.num == pw->p.den) return n;
    return std::nullopt;
  }
  if (std::holds_alternative<Example3Impl>(impl_)) return example3_exact(n);
  if (const auto* tb = std::get_if<TableImpl>(&impl_)) {
    const BigInt last(tb->values.size() - 1);
    const BigInt idx = n < last ? n : last;
    return BigInt(tb->values[idx.convert_to<std::size_t>()]);
  }
  return std::nullopt;
}

std::optional<BigInt> Modulus::domain_cap() const {
  if (const auto* tb = std::get_if<TableImpl>(&impl_))
    return BigInt(tb->values.size() - 1);
  return std::nullopt;
}

}  // namespace fdens
