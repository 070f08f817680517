#pragma once

#include <optional>
#include <vector>

#include "drgtight/sequences.hpp"

namespace drgtight {

/// Auxiliary parameter of a tight pair. When sigma_1 = rho_1 every real
/// number works ("any"); otherwise the unique value (sigma rho - 1) /
/// (rho - sigma).
struct Epsilon {
  bool any = false;
  Scalar value;

  static Epsilon any_real() { return Epsilon{true, Scalar()}; }
  static Epsilon of(Scalar v) { return Epsilon{false, std::move(v)}; }
  std::string str() const { return any ? "any" : value.str(); }
};

/// Evidence that two pseudo cosine sequences are tight: their
/// componentwise product is again a pseudo cosine sequence, for
/// psi = k sigma rho.
struct TightPairWitness {
  PseudoCosineSeq s;
  PseudoCosineSeq r;
  std::vector<Scalar> product;  // gamma_i = sigma_i rho_i
  Scalar psi;                   // k sigma rho
  Epsilon epsilon;
};

/// Outcome of solving the hyperbola
///   (theta + k/(a_1+1)) (theta' + k/(a_1+1)) = -k a_1 b_1 / (a_1+1)^2
/// for theta'. A necessary condition only; confirm with is_tight_pair.
struct PartnerValue {
  enum class Kind { Partner, AnyPartner, NoPartner } kind;
  Scalar value;  // set when kind == Partner

  static PartnerValue partner(Scalar v) { return {Kind::Partner, std::move(v)}; }
  static PartnerValue any() { return {Kind::AnyPartner, Scalar()}; }
  static PartnerValue none() { return {Kind::NoPartner, Scalar()}; }
};

/// (sigma_0 rho_0, ..., sigma_D rho_D). MismatchedDiameter if the
/// sequences disagree on D.
std::vector<Scalar> product_sequence(const PseudoCosineSeq& s, const PseudoCosineSeq& r);

/// The direct tight test: characterize the product sequence. This is the
/// oracle everything else is checked against; it never consults the
/// epsilon machinery.
std::optional<TightPairWitness> is_tight_pair(const IntersectionArray& arr,
                                              const PseudoCosineSeq& s,
                                              const PseudoCosineSeq& r,
                                              const Tolerance& tol = {});

/// TrivialSequence if either sequence is identically 1.
Epsilon auxiliary_parameter(const PseudoCosineSeq& s, const PseudoCosineSeq& r,
                            const Tolerance& tol = {});

/// True iff sigma_i rho_i - sigma_{i-1} rho_{i-1} =
/// eps (sigma_{i-1} rho_i - sigma_i rho_{i-1}) for 1 <= i <= D.
bool check_eps_equation(const PseudoCosineSeq& s, const PseudoCosineSeq& r, const Scalar& eps,
                        const Tolerance& tol = {});

/// Solve the hyperbola for the partner of theta. TrivialTheta if
/// theta = k.
PartnerValue tight_partner_value(const IntersectionArray& arr, const Scalar& theta,
                                 const Tolerance& tol = {});

/// rho_i = prod_{j<=i} (sigma_{j-1} - eps sigma_j) / (sigma_j - eps
/// sigma_{j-1}); the closed form of the partner sequence for feasible
/// tight sequences. ZeroDenominator(j) when sigma_j = eps sigma_{j-1}.
std::vector<Scalar> partner_from_product_formula(const PseudoCosineSeq& s, const Scalar& eps);

/// The four equivalent vanishing conditions at 1 <= i <= D-1 for a tight
/// pair with a_1 != 0. All four booleans agree.
struct ZeroRhoConditions {
  bool sigma_prev_matches;  // sigma_{i-1} = eps sigma_i
  bool sigma_next_matches;  // sigma_{i+1} = eps sigma_i
  bool sigma_skip_equal;    // sigma_{i-1} = sigma_{i+1}
  bool rho_zero;            // rho_i = 0

  bool agree() const {
    return sigma_prev_matches == sigma_next_matches &&
           sigma_next_matches == sigma_skip_equal && sigma_skip_equal == rho_zero;
  }
};

/// WrongCase when a_1 = 0.
ZeroRhoConditions zero_rho_equivalence(const IntersectionArray& arr, const PseudoCosineSeq& s,
                                       const PseudoCosineSeq& r, const Scalar& eps, int i,
                                       const Tolerance& tol = {});

}  // namespace drgtight
