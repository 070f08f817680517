#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drgtight/recovery.hpp"
#include "drgtight/spectra.hpp"

namespace drgtight {

/// One verified tight pair. `trivial` marks pairs already implied by a
/// universal rule (a member equals k, or any pair on a case-I array).
struct SpecialPair {
  Scalar theta;
  Scalar theta_prime;
  Epsilon epsilon;
  bool verified = false;
  bool trivial = false;
};

struct ClassificationReport {
  CaseTag tag = CaseTag::I;
  std::vector<std::string> universal_rules;
  std::vector<SpecialPair> special_pairs;
  std::vector<std::string> warnings;
};

/// The complete description of tight pairs for the array:
///   case I   rules (theta, k) and (theta, -k) for all theta; candidate
///            values are spot-checked against the direct test
///   case II  (theta, k) for all theta, plus (theta, -k) for each
///            eigenvalue theta of the reduced matrix, each verified
///   case III (theta, k) only
///   case IV  for each candidate theta (default: the graph eigenvalues
///            other than k) the hyperbola partner, kept iff the direct
///            test confirms it
/// Candidates in approximate mode are snapped to exact rationals when the
/// array is exact and the snap verifies exactly.
ClassificationReport classify_tight_pairs(const IntersectionArray& arr,
                                          const std::optional<std::vector<Scalar>>& candidates,
                                          const Tolerance& tol = {});

/// Re-verifies every claimed pair via the direct test and sweeps a
/// 50-point theta grid confirming that nothing outside the report (and
/// its universal rules) passes.
bool verify_report(const IntersectionArray& arr, const ClassificationReport& report,
                   const Tolerance& tol = {});

/// Replace an approximate eigenvalue by a nearby exact rational when the
/// array is exact and the rational verifies exactly (terminal condition
/// for graph eigenvalues, sigma_{D-1} = sigma_D for reduced-matrix ones).
Scalar snap_eigenvalue(const IntersectionArray& arr, const Scalar& theta, bool reduced,
                       const Tolerance& tol = {});

}  // namespace drgtight
