#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fdens/modulus.hpp"
#include "fdens/sets.hpp"

namespace fdens {

/// Multiplier applied to the combined evaluation error when comparing
/// f(n) against xi * f(2^k n); candidates inside the band are rejected.
inline constexpr double kWitnessGuardFactor = 10.0;

/**
 * Smallest n in [start, cap] with f(n) > xi * f(2^k n), accepted only when
 * the margin clears the error guard band. Returns nullopt when no witness
 * exists below the cap — a meaningful outcome: finite-horizon evidence
 * consistent with the dyadic rate at level k being at most xi.
 *
 * The scan is linear: the witness predicate is not monotone in n for every
 * modulus (the oscillating dyadic family), so bisection would be unsound.
 */
std::optional<BigInt> find_witness(const Modulus& m, double xi, int k,
                                   const BigInt& start, const BigInt& cap);

struct SeparatorStage {
  int k{0};
  BigInt n;         // witness n_k
  BigInt m;         // m_k = 2^k n_k
  BigInt block_lo;  // m_k - n_k + n_{k-1}
  BigInt block_hi;  // m_k - 1
};

/**
 * Output of the staged construction: witnesses n_1 < ... < n_K, the points
 * m_k = 2^k n_k, and one block of n_k - n_{k-1} integers directly below
 * each m_k. When a stage finds no witness below the cap the construction
 * stops there and `not_found_at` names the stage; completed stages remain.
 */
struct SeparatorResult {
  double xi{0.5};
  int requested_stages{0};
  BigInt cap;
  std::vector<SeparatorStage> stages;
  std::optional<int> not_found_at;

  bool complete() const { return !not_found_at.has_value(); }

  /// The assembled set A as a Blocks IntegerSet (empty set when no stage
  /// completed).
  IntegerSet to_set() const;
};

/// Runs find_witness stage by stage (stage k searches from n_{k-1} + 1) and
/// assembles the blocks. Requires 0 < xi < 1 and K >= 1.
SeparatorResult build_separating_set(const Modulus& m, double xi, int K, const BigInt& cap);

struct StageCheck {
  int k{0};
  bool alpha_ok{false};    // alpha(A, m_k) == n_k, exact
  bool ratio_ok{false};    // f(n_k)/f(m_k) > xi with error guard
  double ratio_value{0};   // measured f(n_k)/f(m_k)
  bool disjoint_ok{false}; // block start beyond m_{k-1}
  bool tail_ok{false};     // alpha_j / j < 2^-k at every sampled j
  BigInt tail_worst_j;     // sampled j with the largest alpha_j * 2^k - j margin
};

struct ConstructionReport {
  std::vector<StageCheck> stages;
  int samples_per_stage{0};
  bool pass{false};  // true iff every per-stage check passed
};

/**
 * Re-verifies a build: exact counting at each m_k, the witness ratio, block
 * disjointness, and the tail bound alpha_j / j < 2^-k across (m_k, m_{k+1}]
 * (for the last stage: (m_K, 2 m_K]). Sampled j always include the
 * endpoints of the flat segment, the ramp segment, and m_{k+1}; the bound
 * is checked exactly via alpha_j * 2^k < j.
 */
ConstructionReport verify_construction(const SeparatorResult& result, const Modulus& m,
                                       int samples_per_stage);

}  // namespace fdens
