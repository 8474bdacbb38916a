#include "fdens/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fdens {

namespace {

ApproxReal ratio_at(const Modulus& m, const BigInt& n, double t, std::optional<int> k) {
  const ApproxReal num = m.eval_big(n);
  ApproxReal den;
  if (k) {
    den = m.eval_big(n << *k);
  } else if (t == std::floor(t) && t <= 9e18) {
    den = m.eval_big(n * BigInt(static_cast<std::int64_t>(t)));
  } else {
    den = m.eval_real(Real(t) * Real(n));  // exact product: t is dyadic
  }
  return approx_div(num, den);
}

LimsupEstimate tail_max(const Modulus& m, double t, std::optional<int> k,
                        const Grid& grid, double window) {
  if (t < 1) throw std::domain_error("estimate requires t >= 1");
  if (window <= 0 || window > 1)
    throw std::invalid_argument("window must lie in (0, 1]");
  if (grid.horizon() < 100)
    throw std::invalid_argument("estimate requires horizon >= 100");

  LimsupEstimate est;
  est.t = t;
  est.k = k;
  est.horizon = grid.horizon();
  est.window = window;

  const Real cutoff = Real(window) * Real(grid.horizon());
  bool have = false;
  for (const BigInt& n : grid.points) {
    if (Real(n) < cutoff) continue;
    const ApproxReal r = ratio_at(m, n, t, k);
    if (!have || r.value > est.estimate.value) {
      est.estimate = r;
      est.argmax_n = n;
      have = true;
    }
  }
  if (!have) {  // window missed every point; use the horizon itself
    est.estimate = ratio_at(m, grid.horizon(), t, k);
    est.argmax_n = grid.horizon();
  }
  return est;
}

std::string sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

std::vector<RatioPoint> ratio_sequence(const Modulus& m, double t, const Grid& grid) {
  if (!(t >= 1) || !std::isfinite(t))
    throw std::domain_error("ratio_sequence requires t >= 1");
  std::vector<RatioPoint> seq;
  seq.reserve(grid.points.size());
  for (const BigInt& n : grid.points)
    seq.push_back({n, ratio_at(m, n, t, std::nullopt)});
  return seq;
}

void write_ratio_csv(const std::vector<RatioPoint>& seq, std::ostream& out) {
  out << "n,ratio,ratio_err\n";
  for (const auto& pt : seq)
    out << pt.n.str() << ',' << sig12(to_double(pt.ratio.value)) << ','
        << sig12(pt.ratio.rel_error) << '\n';
}

LimsupEstimate estimate_h(const Modulus& m, double t, const Grid& grid, double window) {
  if (!(t >= 1) || !std::isfinite(t)) throw std::domain_error("estimate_h requires t >= 1");
  return tail_max(m, t, std::nullopt, grid, window);
}

LimsupEstimate estimate_h(const Modulus& m, double t, const BigInt& horizon, double window) {
  return estimate_h(m, t, Grid::default_for(horizon), window);
}

LimsupEstimate estimate_g(const Modulus& m, int k, const Grid& grid, double window) {
  if (k < 1) throw std::domain_error("estimate_g requires k >= 1");
  return tail_max(m, std::ldexp(1.0, k), k, grid, window);
}

LimsupEstimate estimate_g(const Modulus& m, int k, const BigInt& horizon, double window) {
  return estimate_g(m, k, Grid::default_for(horizon), window);
}

ApproxReal delta(const Modulus& m, double t, const BigInt& horizon, double window) {
  const LimsupEstimate h = estimate_h(m, t, horizon, window);
  ApproxReal out;
  out.value = h.estimate.value + Real(1) / Real(t);
  out.rel_error = h.estimate.rel_error + real_epsilon();
  return out;
}

std::string verdict_name(IdealVerdict v) {
  switch (v) {
    case IdealVerdict::EqualIdeals:
      return "equal-ideals";
    case IdealVerdict::UnequalIdeals:
      return "unequal-ideals";
    case IdealVerdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

CriterionVerdict theorem2_verdict(const Modulus& m, const BigInt& horizon, double epsilon) {
  if (epsilon <= 0 || epsilon >= 0.5)
    throw std::invalid_argument("epsilon must lie in (0, 0.5)");
  const Grid grid = Grid::default_for(horizon);
  const Real cutoff = Real(kDefaultWindow) * Real(horizon);

  Real sum = 0;
  Real lo = 0, hi = 0;
  long count = 0;
  for (const BigInt& n : grid.points) {
    if (Real(n) < cutoff) continue;
    const ApproxReal r = ratio_at(m, n, 2.0, 1);
    if (count == 0) {
      lo = hi = r.value;
    } else {
      if (r.value < lo) lo = r.value;
      if (r.value > hi) hi = r.value;
    }
    sum += r.value;
    ++count;
  }
  if (count == 0) throw std::invalid_argument("horizon grid has no tail points");

  const double a = to_double(sum / count);
  const double oscillation = to_double(hi - lo);

  CriterionVerdict out;
  out.criterion = "theorem2-ratio";
  out.a = a;
  out.policy["epsilon"] = epsilon;
  out.policy["window"] = kDefaultWindow;
  out.policy["oscillation"] = oscillation;
  out.policy["tail_points"] = static_cast<double>(count);
  if (oscillation > epsilon)
    out.verdict = IdealVerdict::Inconclusive;  // doubling ratio has no stable limit
  else
    out.verdict = a <= 1 - epsilon ? IdealVerdict::EqualIdeals : IdealVerdict::UnequalIdeals;
  return out;
}

CriterionVerdict lemma1_check(const Modulus& m, int k_max, const BigInt& horizon, double tol) {
  if (k_max < 1) throw std::invalid_argument("lemma1_check requires k_max >= 1");
  if (tol < 0) throw std::invalid_argument("lemma1_check requires tol >= 0");
  const CriterionVerdict base = theorem2_verdict(m, horizon);
  if (base.verdict == IdealVerdict::Inconclusive)
    throw std::invalid_argument(
        "lemma1_check precondition failed: the doubling ratio f(n)/f(2n) shows no "
        "limit (tail oscillation " + std::to_string(base.policy.at("oscillation")) +
        "); the product rule g(k) = a^k assumes one exists");

  const Grid grid = Grid::default_for(horizon);
  const Real a(*base.a);
  CriterionVerdict out;
  out.criterion = "lemma1-consistency";
  out.a = base.a;
  out.policy["tol"] = tol;
  out.policy["epsilon"] = base.policy.at("epsilon");

  Real ak = 1;
  double worst = 0;
  bool consistent = true;
  for (int k = 1; k <= k_max; ++k) {
    ak *= a;
    LimsupEstimate g = estimate_g(m, k, grid);
    const double dev = std::abs(to_double(g.estimate.value - ak));
    worst = std::max(worst, dev);
    if (dev > tol) consistent = false;
    out.estimates.push_back(std::move(g));
  }
  out.policy["worst_deviation"] = worst;
  out.policy["consistent"] = consistent ? 1.0 : 0.0;
  out.verdict = consistent ? base.verdict : IdealVerdict::Inconclusive;
  return out;
}

CriterionVerdict theorem1_trend(const Modulus& m, int k_max, const BigInt& horizon) {
  if (k_max < 3) throw std::invalid_argument("theorem1_trend requires k_max >= 3");
  if (horizon < (BigInt(100) << k_max))
    throw std::invalid_argument("theorem1_trend requires horizon >= 100 * 2^k_max");

  const Grid grid = Grid::default_for(horizon);
  CriterionVerdict out;
  out.criterion = "theorem1-trend";
  out.policy["final_threshold"] = kTrendFinalThreshold;
  out.policy["floor"] = kTrendFloor;

  constexpr double kSlack = 1e-9;  // estimates are exact maxima of dominated ratios
  bool nonincreasing = true;
  double min_est = 1.0;
  for (int k = 1; k <= k_max; ++k) {
    LimsupEstimate g = estimate_g(m, k, grid);
    const double v = to_double(g.estimate.value);
    if (!out.estimates.empty() &&
        v > to_double(out.estimates.back().estimate.value) + kSlack)
      nonincreasing = false;
    min_est = std::min(min_est, v);
    out.estimates.push_back(std::move(g));
  }
  const double final_est = to_double(out.estimates.back().estimate.value);
  out.policy["final_estimate"] = final_est;
  out.policy["min_estimate"] = min_est;

  if (nonincreasing && final_est < kTrendFinalThreshold)
    out.verdict = IdealVerdict::EqualIdeals;
  else if (min_est > kTrendFloor)
    out.verdict = IdealVerdict::UnequalIdeals;
  else
    out.verdict = IdealVerdict::Inconclusive;
  return out;
}

}  // namespace fdens
