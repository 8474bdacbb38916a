#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fdens/modulus.hpp"
#include "fdens/sets.hpp"

namespace fdens {

struct RatioPoint {
  BigInt n;
  ApproxReal ratio;  // f(n) / f(t n)
};

/// f(n)/f(tn) along a grid, t >= 1. The scaled argument t*n is formed
/// exactly: as a shifted/multiplied integer when t is integral, otherwise
/// as an exact extended-precision product (every double is dyadic).
std::vector<RatioPoint> ratio_sequence(const Modulus& m, double t, const Grid& grid);

/// CSV with header n,ratio,ratio_err (profile column style).
void write_ratio_csv(const std::vector<RatioPoint>& seq, std::ostream& out);

/**
 * Finite-horizon stand-in for the tail supremum of f(n)/f(tn): the maximum
 * over grid points in the window [window * horizon, horizon]. Tail-window
 * maxima avoid the upward bias of small-n ratios. Ties resolve to the
 * smallest attaining n.
 */
struct LimsupEstimate {
  double t{1};
  std::optional<int> k;  // set when t = 2^k was requested dyadically
  BigInt horizon;
  double window{0.5};
  ApproxReal estimate;
  BigInt argmax_n;
};

inline constexpr double kDefaultWindow = 0.5;

LimsupEstimate estimate_h(const Modulus& m, double t, const Grid& grid,
                          double window = kDefaultWindow);
LimsupEstimate estimate_h(const Modulus& m, double t, const BigInt& horizon,
                          double window = kDefaultWindow);

/// estimate_h at t = 2^k with the scaled argument computed by shifting.
LimsupEstimate estimate_g(const Modulus& m, int k, const Grid& grid,
                          double window = kDefaultWindow);
LimsupEstimate estimate_g(const Modulus& m, int k, const BigInt& horizon,
                          double window = kDefaultWindow);

/// The decreasing majorant estimate_h(t) + 1/t.
ApproxReal delta(const Modulus& m, double t, const BigInt& horizon,
                 double window = kDefaultWindow);

enum class IdealVerdict { EqualIdeals, UnequalIdeals, Inconclusive };

std::string verdict_name(IdealVerdict v);

/**
 * Outcome of one of the equivalence criteria. Verdicts are finite-horizon
 * heuristics; the policy map records every threshold that produced them.
 */
struct CriterionVerdict {
  std::string criterion;  // "theorem2-ratio" | "theorem1-trend" | "lemma1-consistency"
  IdealVerdict verdict{IdealVerdict::Inconclusive};
  std::optional<double> a;  // estimated limit of f(n)/f(2n), when meaningful
  std::vector<LimsupEstimate> estimates;
  std::map<std::string, double> policy;
  bool heuristic{true};
};

/// Default decision epsilon for the doubling-ratio criterion. The verdict
/// boundary sits at 1 - epsilon = 0.9, roughly midway between the dyadic
/// rates of the power family (<= 2^(-1/4) ~ 0.841) and the slowly varying
/// log family (~0.95 at desk horizons).
inline constexpr double kTheorem2Epsilon = 0.1;

/**
 * Estimates a = lim f(n)/f(2n) by the tail mean over the last window and
 * classifies: oscillation (tail max - min) above epsilon means the limit
 * plausibly does not exist -> inconclusive; otherwise a <= 1 - epsilon
 * means equal-ideals, a > 1 - epsilon means unequal-ideals.
 */
CriterionVerdict theorem2_verdict(const Modulus& m, const BigInt& horizon,
                                  double epsilon = kTheorem2Epsilon);

/**
 * Checks the product rule g(k) ~ a^k for k = 1..k_max against the measured
 * dyadic-rate estimates. Requires the doubling ratio to have a limit
 * (theorem2_verdict not inconclusive); throws std::invalid_argument
 * otherwise. policy["worst_deviation"] records the outcome.
 */
CriterionVerdict lemma1_check(const Modulus& m, int k_max, const BigInt& horizon,
                              double tol);

/// Thresholds for the dyadic-rate trend classification.
inline constexpr double kTrendFinalThreshold = 0.1;
inline constexpr double kTrendFloor = 0.1;

/**
 * Computes estimate_g for k = 1..k_max and classifies the trend:
 * non-increasing (within slack) with final estimate below 0.1 means
 * equal-ideals; every estimate above the 0.1 floor means unequal-ideals;
 * anything else is inconclusive. Requires k_max >= 3 and
 * horizon >= 100 * 2^k_max so each estimate has room.
 */
CriterionVerdict theorem1_trend(const Modulus& m, int k_max, const BigInt& horizon);

}  // namespace fdens
