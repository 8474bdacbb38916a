#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fdens/modulus.hpp"
#include "fdens/sets.hpp"

namespace fdens {

struct ProfileRow {
  BigInt n;
  BigInt alpha;
  Real nat_ratio{0};                  // alpha / n, in [0, 1]
  std::optional<ApproxReal> f_ratio;  // f(alpha) / f(n), in [0, 1]
};

/// Table of counting-function ratios over a horizon grid. Rows are sorted
/// by strictly increasing n; the f columns are present when a modulus was
/// supplied.
struct DensityProfile {
  std::vector<ProfileRow> rows;
  std::optional<ModulusDescriptor> modulus;
  std::string grid_description;
  std::string set_description;
};

DensityProfile density_profile(const IntegerSet& set, const Grid& grid);

DensityProfile f_density_profile(const IntegerSet& set, const Modulus& m, const Grid& grid);

/// CSV with header n,alpha,nat_ratio,f_ratio,f_ratio_err; ratios printed
/// with 12 significant digits, f columns empty without a modulus.
void write_profile_csv(const DensityProfile& profile, std::ostream& out);

struct MembershipPolicy {
  double threshold{0.01};
  double tail_fraction{0.25};
};

enum class Membership { InIdeal, NotInIdeal, Inconclusive };

std::string membership_name(Membership v);

/**
 * Finite-horizon classification of "does the relevant density ratio tend
 * to zero". This is a heuristic over a finite prefix, never a proof; the
 * evidence records everything needed to reproduce the verdict.
 */
struct MembershipVerdict {
  std::string ideal;  // "statistical" or "f-ideal"
  Membership verdict{Membership::Inconclusive};
  MembershipPolicy policy;
  double tail_sup{0};
  double global_max{0};
  std::vector<double> segment_sups;  // per dyadic segment of n
  BigInt horizon;
  bool heuristic{true};
};

/// Requires at least two rows. The tail is the last `tail_fraction` of the
/// horizon range (rows with n >= (1 - tail_fraction) * max n).
MembershipVerdict membership_verdict(const DensityProfile& profile,
                                     const MembershipPolicy& policy);

}  // namespace fdens
