#pragma once

#include <optional>

#include "drgtight/tightness.hpp"

namespace drgtight {

/// The two scaling constants recovered from a tight sequence and its
/// auxiliary parameter:
///   h = (1 - sigma)(1 - sigma_2) / ((sigma^2 - sigma_2)(1 - eps sigma))
///   g = (eps - 1)(1 - sigma_2) / ((sigma^2 - sigma_2)(1 - eps sigma))
/// so that g = h (eps - 1) / (1 - sigma).
struct RecoveryParams {
  Scalar h;
  Scalar g;
  Scalar epsilon;
};

/// ZeroDenominator naming the violated hypothesis among sigma = 1,
/// sigma_2 = 1, eps sigma = 1, sigma_2 = sigma^2. A genuinely tight
/// sequence violates none of them.
RecoveryParams recovery_params(const PseudoCosineSeq& s, const Scalar& eps,
                               const Tolerance& tol = {});

/// Rebuild the intersection numbers from a tight sequence and eps:
/// k = h (sigma - eps)/(sigma - 1), a_i / b_i / c_i for 1 <= i <= D-1
/// from the closed forms. The formulas stop at D-1: c_D and a_D are not
/// determined. With complete_terminal the terminal condition
/// c_D (sigma_{D-1} - sigma_D) = (theta - k) sigma_D fixes c_D (the
/// caller asserts the sequence is a full cosine sequence); otherwise the
/// result carries c_D_unconstrained = true and the filler a_D := 0,
/// c_D := k.
///
/// InfeasibleSequence if some sigma_{i-1} = sigma_{i+1};
/// ZeroDenominator on other vanishing hypotheses.
IntersectionArray recover_intersection_numbers(const PseudoCosineSeq& s, const Scalar& eps,
                                               const Tolerance& tol = {},
                                               bool complete_terminal = false);

/// The paper's conditions A, B, C evaluated literally and independently
/// against an actual array. For a genuine tight sequence with its
/// auxiliary parameter all three hold.
struct ConditionReport {
  bool A = false;  // eps != -1 and the a_i / g equations hold
  bool B = false;  // the b_i / h equations hold
  bool C = false;  // the k / c_i / h equations hold
  std::vector<std::string> failures;
};

/// WrongCase if arr has a_1 = 0.
ConditionReport check_conditions(const PseudoCosineSeq& s, const Scalar& eps,
                                 const IntersectionArray& arr, const Tolerance& tol = {});

/// Whether s is tight on arr (a_1 != 0): solves the hyperbola for the
/// candidate partner, confirms with the direct product test, and returns
/// the unique auxiliary parameter. TrivialSequence for the trivial
/// sequence; WrongCase when a_1 = 0.
std::optional<Scalar> is_tight_sequence(const IntersectionArray& arr,
                                        const PseudoCosineSeq& s, const Tolerance& tol = {});

/// Build the intersection array determined by a feasible sequence and
/// eps (sigma_0 = 1, eps not in {1,-1}, all denominators nonzero):
/// k, b_i, c_i from the closed forms, a_i = k - b_i - c_i, and the
/// c_D/a_D filler as in recover_intersection_numbers. The result is
/// validated. NotFeasible when sigma_{i-1} = sigma_{i+1} or eps = +-1.
IntersectionArray feasible_array_from_sequence(const std::vector<Scalar>& sigma,
                                               const Scalar& eps, const Tolerance& tol = {});

/// sigma_{i-1} != sigma_{i+1} for every interior i, and s is tight on
/// arr. WrongCase when a_1 = 0.
bool is_feasible(const IntersectionArray& arr, const PseudoCosineSeq& s,
                 const Tolerance& tol = {});

}  // namespace drgtight
