#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fdens/numeric.hpp"

namespace fdens {

/// Exact rational exponent p = num/den, kept normalized with den > 0.
struct Rational {
  std::int64_t num{0};
  std::int64_t den{1};

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  /// Accepts "a/b" or a bare integer "a".
  static Rational parse(const std::string& text);

  std::string str() const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  Real to_real() const { return Real(num) / Real(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class ModulusFamily { Power, Log, Example3 };

std::string family_name(ModulusFamily f);

/**
 * Immutable description of a modulus-function family.
 *
 * Families:
 *   Power    — f(x) = x^p with exact rational exponent p in (0, 1]
 *   Log      — f(x) = ln(1 + x)
 *   Example3 — the dyadic recursive modulus (see example3_exact); defined on
 *              integers by recursion and extended by linear interpolation
 *
 * Construction validates the exponent range; descriptors compare by value.
 */
class ModulusDescriptor {
 public:
  static ModulusDescriptor power(Rational p);
  static ModulusDescriptor log() { return ModulusDescriptor(ModulusFamily::Log); }
  static ModulusDescriptor example3() { return ModulusDescriptor(ModulusFamily::Example3); }

  ModulusFamily family() const { return family_; }
  const std::optional<Rational>& exponent() const { return p_; }

  std::string str() const;

  friend bool operator==(const ModulusDescriptor&, const ModulusDescriptor&) = default;

 private:
  explicit ModulusDescriptor(ModulusFamily f, std::optional<Rational> p = std::nullopt)
      : family_(f), p_(std::move(p)) {}

  ModulusFamily family_;
  std::optional<Rational> p_;
};

/// f(n) for the dyadic recursive modulus, by memoized top-down recursion.
/// f(0)=0, f(1)=1, f(2)=2; for n = 2^k + a with a in [1, 2^k]:
/// f(n) = f(2^k) when k is odd, f(2^k) + f(a) when k is even.
BigInt example3_exact(const BigInt& n);

/// Same function by an independent iterative pass over the binary
/// decomposition, using the closed form f(2^k) = 2^ceil(k/2) for the
/// stripped leading powers. Kept separate so the two can be cross-checked.
BigInt example3_exact_iterative(const BigInt& n);

/**
 * Evaluation engine for a modulus function.
 *
 * All evaluators are pure; the Example3 engine shares a lazily built
 * read-only table for small arguments (results are identical with the
 * cache disabled). Values are nonnegative; rel_error on every result is
 * bounded far below the 1e-12 evaluation contract.
 */
class Modulus {
 public:
  static Modulus from_descriptor(const ModulusDescriptor& d);
  static Modulus power(Rational p) { return from_descriptor(ModulusDescriptor::power(p)); }
  static Modulus log() { return from_descriptor(ModulusDescriptor::log()); }
  static Modulus example3() { return from_descriptor(ModulusDescriptor::example3()); }

  /// A finite table f(0..N) extended constantly beyond N and by linear
  /// interpolation between integer nodes. Test fixture; values[0] must be 0.
  static Modulus table(std::vector<std::uint64_t> values);

  /// f at a real argument. Throws std::domain_error for negative or
  /// non-finite x.
  ApproxReal eval(double x) const;

  /// f at an extended-precision real argument (x >= 0).
  ApproxReal eval_real(const Real& x) const;

  /// f at an arbitrary-precision integer (n >= 0). Power p=1, Example3 and
  /// tables yield exact results (rel_error = 0) whenever the value fits the
  /// Real carrier losslessly.
  ApproxReal eval_big(const BigInt& n) const;

  /// Exact integer value of f(n) when the family admits one.
  std::optional<BigInt> exact_value(const BigInt& n) const;

  /// Largest argument with defined (non-clamped) behavior; tables only.
  std::optional<BigInt> domain_cap() const;

  /// Descriptor of the family, when the engine was built from one.
  const std::optional<ModulusDescriptor>& descriptor() const { return descriptor_; }

 private:
  struct PowerImpl {
    Rational p;
  };
  struct LogImpl {};
  struct Example3Impl {};
  struct TableImpl {
    std::vector<std::uint64_t> values;
  };

  using Impl = std::variant<PowerImpl, LogImpl, Example3Impl, TableImpl>;

  Modulus(Impl impl, std::optional<ModulusDescriptor> d)
      : impl_(std::move(impl)), descriptor_(std::move(d)) {}

  Impl impl_;
  std::optional<ModulusDescriptor> descriptor_;
};

}  // namespace fdens
