#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fdens/modulus.hpp"

namespace fdens {

/// One axiom verdict. A failure always carries a concrete counterexample
/// that reproduces the violation (a pair for the two-argument axioms, a
/// single point otherwise).
struct AxiomCheck {
  bool pass{true};
  std::optional<std::pair<BigInt, BigInt>> counterexample_pair;
  std::optional<double> counterexample_x;
  std::string detail;
};

struct AxiomReport {
  AxiomCheck zero_at_zero;
  AxiomCheck subadditivity;
  AxiomCheck monotonicity;
  AxiomCheck right_continuity;
  AxiomCheck unboundedness;
  std::int64_t sample_count{0};
  std::uint64_t rng_seed{0};

  bool all_pass() const {
    return zero_at_zero.pass && subadditivity.pass && monotonicity.pass &&
           right_continuity.pass && unboundedness.pass;
  }
};

/**
 * Samples the five modulus axioms:
 *  - zero-at-zero: f(0) = 0 and f(x) > 0 on probe points
 *  - subadditivity: f(w+z) <= f(w) + f(z) on `sample_budget` random pairs
 *    with w, z <= 2^16 (clipped to a table's domain)
 *  - monotonicity: f(x) <= f(y) on random increasing pairs
 *  - right continuity at 0: f along the grid x = 2^-i decreases to ~0
 *  - unboundedness: f grows past 10 * max(f(1), 1) along a dyadic grid
 *
 * Deterministic given the seed. Exact families are compared exactly;
 * inexact ones get a guard band of 10x the combined evaluation error.
 * A found violation is shrunk greedily to a small witness before being
 * reported.
 */
AxiomReport check_axioms(const Modulus& m, std::int64_t sample_budget, std::uint64_t seed);

}  // namespace fdens
