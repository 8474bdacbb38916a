#include "fdens/separator.hpp"

#include <algorithm>

namespace fdens {

namespace {

void require_params(double xi, int k) {
  if (!(xi > 0) || !(xi < 1))
    throw std::invalid_argument("xi must lie in (0, 1)");
  if (k < 1) throw std::invalid_argument("stage index must be >= 1");
}

// f(n) - xi f(2^k n) > guard, with guard = 10x the combined absolute error.
bool clears_guard(const Modulus& m, double xi, int k, const BigInt& n) {
  const ApproxReal fn = m.eval_big(n);
  const ApproxReal fm = m.eval_big(n << k);
  const Real rhs = Real(xi) * fm.value;
  const Real guard = Real(kWitnessGuardFactor) *
                     (Real(fn.rel_error) * fn.value + Real(fm.rel_error) * rhs);
  return fn.value - rhs > guard;
}

}  // namespace

std::optional<BigInt> find_witness(const Modulus& m, double xi, int k,
                                   const BigInt& start, const BigInt& cap) {
  require_params(xi, k);
  if (start < 1 || cap < start)
    throw std::invalid_argument("find_witness requires 1 <= start <= cap");
  for (BigInt n = start; n <= cap; ++n)
    if (clears_guard(m, xi, k, n)) return n;
  return std::nullopt;
}

IntegerSet SeparatorResult::to_set() const {
  std::vector<std::pair<BigInt, BigInt>> blocks;
  blocks.reserve(stages.size());
  for (const auto& s : stages) blocks.emplace_back(s.block_lo, s.block_hi);
  return IntegerSet::block_set(std::move(blocks));
}

SeparatorResult build_separating_set(const Modulus& m, double xi, int K, const BigInt& cap) {
  require_params(xi, 1);
  if (K < 1) throw std::invalid_argument("stage count must be >= 1");
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");

  SeparatorResult res;
  res.xi = xi;
  res.requested_stages = K;
  res.cap = cap;

  BigInt prev_n = 0;  // n_0 = 0
  BigInt prev_m = 0;
  for (int k = 1; k <= K; ++k) {
    const BigInt start = prev_n + 1;
    if (start > cap) {
      res.not_found_at = k;
      break;
    }
    const auto witness = find_witness(m, xi, k, start, cap);
    if (!witness) {
      res.not_found_at = k;
      break;
    }
    SeparatorStage stage;
    stage.k = k;
    stage.n = *witness;
    stage.m = *witness << k;
    stage.block_lo = stage.m - stage.n + prev_n;
    stage.block_hi = stage.m - 1;
    // n_k (2^k - 1) > n_{k-1} (2^{k-1} - 1) keeps the block past m_{k-1}
    if (stage.block_lo <= prev_m)
      throw std::logic_error("separator block overlaps the previous stage");
    prev_n = stage.n;
    prev_m = stage.m;
    res.stages.push_back(std::move(stage));
  }
  return res;
}

namespace {

// Sample points across (lo, hi], always including mandatory, then an even
// spread of `extra` points.
std::vector<BigInt> spread_samples(const BigInt& lo, const BigInt& hi,
                                   const std::vector<BigInt>& mandatory, int extra) {
  std::vector<BigInt> pts;
  for (const BigInt& j : mandatory)
    if (j > lo && j <= hi) pts.push_back(j);
  if (hi > lo && extra > 0) {
    const BigInt span = hi - lo;
    for (int i = 1; i <= extra; ++i) {
      BigInt j = lo + span * i / extra;
      if (j > lo && j <= hi) pts.push_back(j);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

ConstructionReport verify_construction(const SeparatorResult& result, const Modulus& m,
                                       int samples_per_stage) {
  if (samples_per_stage < 1)
    throw std::invalid_argument("samples_per_stage must be >= 1");
  if (result.stages.empty())
    throw std::invalid_argument("verify_construction: result holds no completed stage");
  for (std::size_t i = 0; i < result.stages.size(); ++i) {
    const auto& s = result.stages[i];
    if (s.m != (s.n << s.k) || s.block_hi != s.m - 1)
      throw std::invalid_argument("verify_construction: malformed stage " +
                                  std::to_string(s.k));
    if (i > 0 && result.stages[i - 1].n >= s.n)
      throw std::invalid_argument("verify_construction: witnesses not increasing");
  }

  // Build the union of the stage blocks even when a corrupted block
  // overlaps a neighbor: overlap must surface as a failing disjointness
  // check, not as a crash.
  std::vector<std::pair<BigInt, BigInt>> raw;
  for (const auto& s : result.stages) raw.emplace_back(s.block_lo, s.block_hi);
  std::sort(raw.begin(), raw.end());
  std::vector<std::pair<BigInt, BigInt>> merged;
  for (auto& blk : raw) {
    if (!merged.empty() && blk.first <= merged.back().second + 1) {
      if (blk.second > merged.back().second) merged.back().second = blk.second;
    } else {
      merged.push_back(std::move(blk));
    }
  }
  const IntegerSet A = IntegerSet::block_set(std::move(merged));
  ConstructionReport report;
  report.samples_per_stage = samples_per_stage;
  report.pass = true;

  const auto& stages = result.stages;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const auto& s = stages[i];
    StageCheck chk;
    chk.k = s.k;

    chk.alpha_ok = alpha(A, s.m) == s.n;

    const ApproxReal fn = m.eval_big(s.n);
    const ApproxReal fm = m.eval_big(s.m);
    const Real rhs = Real(result.xi) * fm.value;
    const Real guard = Real(kWitnessGuardFactor) *
                       (Real(fn.rel_error) * fn.value + Real(fm.rel_error) * rhs);
    chk.ratio_ok = fn.value - rhs > guard;
    chk.ratio_value = to_double(fn.value / fm.value);

    const BigInt prev_m = i > 0 ? stages[i - 1].m : BigInt(0);
    chk.disjoint_ok = s.block_lo > prev_m;

    // Tail bound over (m_k, next], where next = m_{k+1} or 2 m_K for the
    // last stage (alpha stays n_K there, so the flat-segment case applies).
    std::vector<BigInt> mandatory;
    BigInt hi;
    if (i + 1 < stages.size()) {
      const auto& nxt = stages[i + 1];
      hi = nxt.m;
      mandatory = {s.m + 1,          nxt.block_lo - 1, nxt.block_lo,
                   nxt.block_hi,     nxt.m};
    } else {
      hi = s.m * 2;
      mandatory = {s.m + 1, hi};
    }
    chk.tail_ok = true;
    BigInt worst_margin;  // j - alpha_j 2^k, smaller is worse
    bool worst_set = false;
    for (const BigInt& j : spread_samples(s.m, hi, mandatory, samples_per_stage)) {
      const BigInt scaled = alpha(A, j) << s.k;  // alpha_j / j < 2^-k, exactly
      if (scaled >= j) chk.tail_ok = false;
      const BigInt margin = j - scaled;
      if (!worst_set || margin < worst_margin) {
        worst_margin = margin;
        chk.tail_worst_j = j;
        worst_set = true;
      }
    }

    if (!(chk.alpha_ok && chk.ratio_ok && chk.disjoint_ok && chk.tail_ok))
      report.pass = false;
    report.stages.push_back(std::move(chk));
  }
  return report;
}

}  // namespace fdens
