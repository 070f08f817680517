#pragma once

#include <string>
#include <vector>

#include "drgtight/numeric.hpp"

namespace drgtight {

/// Structural case of an intersection array, by the pattern of the a_i:
///   I   a_i = 0 for 0 <= i <= D-1 (bipartite or almost bipartite)
///   II  a_i = 0 for 0 <= i <= D-2 and a_{D-1} != 0
///   III a_1 = 0 and a_i != 0 for some 2 <= i <= D-2
///   IV  a_1 != 0
enum class CaseTag { I, II, III, IV };

std::string to_string(CaseTag tag);

/// The data {b_0,...,b_{D-1}; c_1,...,c_D} of a distance-regular graph,
/// validated and with a_i = k - b_i - c_i, k = b_0 and the conventions
/// c_0 = 0, b_D = 0 filled in. Entries are all exact or all approximate.
///
/// Arrays need not be realizable by an actual graph; any numbers meeting
/// the invariants (D >= 3, c_1 = 1, positivity, a_i >= 0, monotone b and c)
/// are accepted. An array with a_1 != 0 but a_i = 0 for some interior i
/// cannot come from a graph; that earns a warning, not an error.
class IntersectionArray {
public:
  int diameter() const { return D_; }
  const Scalar& k() const { return b_[0]; }

  const Scalar& b(int i) const { return b_.at(i); }  // 0..D, b(D) = 0
  const Scalar& c(int i) const { return c_.at(i); }  // 0..D, c(0) = 0
  const Scalar& a(int i) const { return a_.at(i); }  // 0..D

  bool exact() const { return exact_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Set when the array was reconstructed from a tight sequence, whose
  /// formulas stop at index D-1 and leave c_D undetermined.
  bool c_D_unconstrained = false;

  friend IntersectionArray validate_array(int D, std::vector<Scalar> b,
                                          std::vector<Scalar> c,
                                          const Tolerance& tol);

private:
  IntersectionArray() = default;

  int D_ = 0;
  std::vector<Scalar> b_, c_, a_;  // each of length D+1
  bool exact_ = true;
  std::vector<std::string> warnings_;
};

/// Validates {b_0..b_{D-1}; c_1..c_D} and derives a_i and k. Throws
/// ValidationError naming the first violated invariant.
IntersectionArray validate_array(int D, std::vector<Scalar> b, std::vector<Scalar> c,
                                 const Tolerance& tol = {});

/// k_i = (b_0 ... b_{i-1}) / (c_1 ... c_i), the number of vertices at
/// distance i; k_0 = 1. IndexError outside 0..D.
Scalar k_subscript(const IntersectionArray& arr, int i);

/// The unique CaseTag of a valid array.
CaseTag detect_case(const IntersectionArray& arr, const Tolerance& tol = {});

}  // namespace drgtight
