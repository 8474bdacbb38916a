#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fdens/numeric.hpp"

namespace fdens {

enum class BuiltinSet { Evens, Squares, PowersOfTwo };

std::string builtin_name(BuiltinSet b);
BuiltinSet builtin_from_name(const std::string& name);

/**
 * A subset of the positive integers in one of three representations:
 * an explicit sorted finite list, sorted disjoint closed interval blocks
 * with arbitrary-precision endpoints, or a named built-in predicate.
 * Immutable after construction; invariants are enforced by the factories.
 */
class IntegerSet {
 public:
  struct Explicit {
    std::vector<BigInt> elements;  // strictly increasing, all >= 1
  };
  struct Blocks {
    std::vector<std::pair<BigInt, BigInt>> blocks;  // sorted, disjoint, >= 1
    std::vector<BigInt> prefix_sizes;               // cumulative block sizes
  };

  static IntegerSet explicit_set(std::vector<BigInt> elements);
  static IntegerSet block_set(std::vector<std::pair<BigInt, BigInt>> blocks);
  static IntegerSet builtin(BuiltinSet b);

  bool is_explicit() const { return std::holds_alternative<Explicit>(rep_); }
  bool is_blocks() const { return std::holds_alternative<Blocks>(rep_); }
  bool is_builtin() const { return std::holds_alternative<BuiltinSet>(rep_); }

  const Explicit& as_explicit() const { return std::get<Explicit>(rep_); }
  const Blocks& as_blocks() const { return std::get<Blocks>(rep_); }
  BuiltinSet as_builtin() const { return std::get<BuiltinSet>(rep_); }

  std::string describe() const;

 private:
  using Rep = std::variant<Explicit, Blocks, BuiltinSet>;
  explicit IntegerSet(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

/// Counting function: |A intersect [1, n]|, exact. Blocks use the clipped
/// closed-form sum; builtins use their closed forms (n/2, isqrt n, bitlen n).
BigInt alpha(const IntegerSet& set, const BigInt& n);

/// Exact membership test.
bool contains(const IntegerSet& set, const BigInt& x);

/**
 * A strictly increasing horizon grid of evaluation points.
 *
 * The default grid is every integer up to 1000, then geometric steps of
 * ratio 1.01 (rounded up), plus every power of two up to the horizon and
 * the horizon itself. The dyadic points matter: several moduli attain
 * their extremal ratios only at powers of two.
 */
struct Grid {
  std::vector<BigInt> points;
  std::string description;

  static Grid default_for(const BigInt& horizon);
  static Grid from_points(std::vector<BigInt> pts, std::string description = "custom");

  const BigInt& horizon() const { return points.back(); }
};

}  // namespace fdens
