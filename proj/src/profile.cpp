#include "fdens/profile.hpp"

#include <algorithm>
#include <cstdio>

namespace fdens {

namespace {

DensityProfile make_profile(const IntegerSet& set, const Modulus* m, const Grid& grid) {
  DensityProfile p;
  p.grid_description = grid.description;
  p.set_description = set.describe();
  if (m && m->descriptor()) p.modulus = *m->descriptor();
  p.rows.reserve(grid.points.size());
  for (const BigInt& n : grid.points) {
    ProfileRow row;
    row.n = n;
    row.alpha = alpha(set, n);
    row.nat_ratio = Real(row.alpha) / Real(n);
    if (m) row.f_ratio = approx_div(m->eval_big(row.alpha), m->eval_big(n));
    p.rows.push_back(std::move(row));
  }
  return p;
}

std::string sig12(const Real& x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", to_double(x));
  return buf;
}

std::string sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

DensityProfile density_profile(const IntegerSet& set, const Grid& grid) {
  return make_profile(set, nullptr, grid);
}

DensityProfile f_density_profile(const IntegerSet& set, const Modulus& m, const Grid& grid) {
  return make_profile(set, &m, grid);
}

void write_profile_csv(const DensityProfile& profile, std::ostream& out) {
  out << "n,alpha,nat_ratio,f_ratio,f_ratio_err\n";
  for (const auto& row : profile.rows) {
    out << row.n.str() << ',' << row.alpha.str() << ',' << sig12(row.nat_ratio) << ',';
    if (row.f_ratio)
      out << sig12(row.f_ratio->value) << ',' << sig12(row.f_ratio->rel_error);
    else
      out << ',';
    out << '\n';
  }
}

std::string membership_name(Membership v) {
  switch (v) {
    case Membership::InIdeal:
      return "in-ideal";
    case Membership::NotInIdeal:
      return "not-in-ideal";
    case Membership::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

MembershipVerdict membership_verdict(const DensityProfile& profile,
                                     const MembershipPolicy& policy) {
  if (profile.rows.size() < 2)
    throw std::invalid_argument("membership_verdict needs at least 2 rows");
  if (policy.tail_fraction <= 0 || policy.tail_fraction > 1)
    throw std::invalid_argument("tail_fraction must lie in (0, 1]");

  const bool use_f = profile.modulus.has_value();
  auto ratio_of = [&](const ProfileRow& r) {
    return use_f ? to_double(r.f_ratio->value) : to_double(r.nat_ratio);
  };

  MembershipVerdict out;
  out.ideal = use_f ? "f-ideal" : "statistical";
  out.policy = policy;
  out.horizon = profile.rows.back().n;

  const Real tail_start = Real(out.horizon) * Real(1.0 - policy.tail_fraction);

  double global_max = 0;
  double tail_sup = 0;
  bool tail_seen = false;
  // suprema per dyadic segment (grouped by bit length of n)
  std::vector<double> seg;
  std::vector<bool> seg_in_tail;
  for (const auto& row : profile.rows) {
    const double r = ratio_of(row);
    global_max = std::max(global_max, r);
    const std::size_t b = boost::multiprecision::msb(row.n);
    if (seg.size() <= b) {
      seg.resize(b + 1, 0.0);
      seg_in_tail.resize(b + 1, false);
    }
    seg[b] = std::max(seg[b], r);
    if (Real(row.n) >= tail_start) {
      tail_sup = std::max(tail_sup, r);
      tail_seen = true;
      seg_in_tail[b] = true;
    }
  }
  if (!tail_seen) {  // degenerate grids: fall back to the last row
    tail_sup = ratio_of(profile.rows.back());
  }
  out.tail_sup = tail_sup;
  out.global_max = global_max;
  out.segment_sups = seg;

  bool nonincreasing = true;
  for (std::size_t b = 1; b < seg.size(); ++b)
    if (seg[b] > seg[b - 1] * (1 + 1e-9)) nonincreasing = false;

  bool tail_above = tail_sup > policy.threshold;
  for (std::size_t b = 0; b < seg.size(); ++b)
    if (seg_in_tail[b] && seg[b] <= policy.threshold) tail_above = false;

  if (tail_sup < policy.threshold && nonincreasing)
    out.verdict = Membership::InIdeal;
  else if (tail_sup > 0.5 * global_max && tail_above)
    out.verdict = Membership::NotInIdeal;
  else
    out.verdict = Membership::Inconclusive;
  return out;
}

}  // namespace fdens
