#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace fdens {

/// Arbitrary-precision natural number / integer carrier.
using BigInt = boost::multiprecision::cpp_int;

/// Extended-precision real carrier (50 decimal digits). Integers up to
/// ~168 bits convert losslessly, so exact modulus values survive the trip.
using Real = boost::multiprecision::cpp_bin_float_50;

/// Machine epsilon of the Real carrier, as a double (~5.3e-51).
inline double real_epsilon() {
  static const double eps =
      std::numeric_limits<Real>::epsilon().convert_to<double>();
  return eps;
}

/// A real value paired with an upper bound on its relative error.
/// rel_error == 0 means the value is mathematically exact as stored.
struct ApproxReal {
  Real value{0};
  double rel_error{0};

  bool exact() const { return rel_error == 0.0; }
  double value_d() const { return value.convert_to<double>(); }
};

/// Quotient with propagated error bound. Denominator must be > 0.
inline ApproxReal approx_div(const ApproxReal& num, const ApproxReal& den) {
  if (den.value <= 0)
    throw std::domain_error("approx_div: nonpositive denominator");
  ApproxReal out;
  out.value = num.value / den.value;
  out.rel_error = num.rel_error + den.rel_error;
  if (out.rel_error > 0) out.rel_error += real_epsilon();
  return out;
}

inline double to_double(const Real& x) { return x.convert_to<double>(); }

/// Parses a decimal integer (optionally negative). Throws on junk.
inline BigInt parse_bigint(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad integer literal: " + s);
  return BigInt(s);
}

inline std::string to_decimal(const BigInt& n) { return n.str(); }

/// True when the integer is exactly representable in the Real carrier.
inline bool representable_in_real(const BigInt& n, const Real& converted) {
  return BigInt(converted) == n;
}

}  // namespace fdens
