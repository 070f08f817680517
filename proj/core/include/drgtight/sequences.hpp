#pragma once

#include <utility>
#include <vector>

#include "drgtight/graph_params.hpp"

namespace drgtight {

/// A value theta together with the sequence sigma_0..sigma_D satisfying
/// sigma_0 = 1 and c_i sigma_{i-1} + a_i sigma_i + b_i sigma_{i+1} =
/// theta sigma_i for 0 <= i <= D-1. theta = k sigma_1 is determined by
/// the sequence.
struct PseudoCosineSeq {
  Scalar theta;
  std::vector<Scalar> sigma;  // length D+1

  int diameter() const { return static_cast<int>(sigma.size()) - 1; }
  /// sigma := sigma_1, the paper's standing abbreviation.
  const Scalar& s1() const { return sigma.at(1); }
  /// The trivial sequence is the one for theta = k: identically 1.
  bool trivial(const Tolerance& tol = {}) const;
};

/// Forward solve of the three-term recurrence; b_i > 0 makes every step
/// well defined.
PseudoCosineSeq pseudo_cosine_sequence(const IntersectionArray& arr, const Scalar& theta);

/// True iff the terminal condition c_D sigma_{D-1} + a_D sigma_D =
/// theta sigma_D also holds, i.e. theta is an eigenvalue and the sequence
/// is its cosine sequence.
bool is_cosine_sequence(const IntersectionArray& arr, const PseudoCosineSeq& s,
                        const Tolerance& tol = {});

/// Both sides of the Christoffel-Darboux identity at index i:
///   lhs = (sigma - rho) * sum_{h<=i} k_h sigma_h rho_h
///   rhs = (b_1..b_i)/(c_1..c_i) * (sigma_{i+1} rho_i - sigma_i rho_{i+1})
/// They are equal for every pair of pseudo cosine sequences.
std::pair<Scalar, Scalar> christoffel_darboux(const IntersectionArray& arr,
                                              const PseudoCosineSeq& s,
                                              const PseudoCosineSeq& r, int i);

/// The five equivalent characterizations of "seq is a pseudo cosine
/// sequence", each evaluated independently. They agree on every input.
struct Characterization {
  bool recurrence;  // c_i s_{i-1} + a_i s_i + b_i s_{i+1} = theta s_i
  bool diff_form;   // c_i(s_{i-1}-s_i) - b_i(s_i-s_{i+1}) = k(s-1)s_i
  bool sum_form;    // (s-1) sum k_h s_h = (b_1..b_i)/(c_1..c_i)(s_{i+1}-s_i)
  bool b_form;      // b_i(s_{i-1}-s_{i+1}) = k(s_{i-1}-s s_i) - a_i(s_{i-1}-s_i)
  bool c_form;      // c_i(s_{i+1}-s_{i-1}) = k(s_{i+1}-s s_i) - a_i(s_{i+1}-s_i)

  bool all() const { return recurrence && diff_form && sum_form && b_form && c_form; }
  bool agree() const {
    return recurrence == diff_form && diff_form == sum_form && sum_form == b_form &&
           b_form == c_form;
  }
};

/// Accepts a raw sequence (length D+1) so it can serve as an oracle for
/// sequences produced by other code paths. LengthError on a wrong length.
Characterization characterize(const IntersectionArray& arr, const std::vector<Scalar>& seq,
                              const Tolerance& tol = {});

/// Residual comparison used by every identity check in this library:
/// exact operands compare exactly, otherwise |lhs-rhs| is tested against
/// max(tol.abs, tol.rel * scale).
bool residual_eq(const Scalar& lhs, const Scalar& rhs, double scale, const Tolerance& tol);

}  // namespace drgtight
