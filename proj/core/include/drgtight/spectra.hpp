#pragma once

#include <vector>

#include "drgtight/graph_params.hpp"

namespace drgtight {

/// An n x n tridiagonal matrix given by its diagonal and off-diagonals.
/// Requires sub_i * sup_i > 0 for every i: a diagonal similarity then
/// symmetrizes the matrix, so the spectrum is real and simple.
struct TridiagonalSpec {
  std::vector<Scalar> diag;  // length n
  std::vector<Scalar> sub;   // length n-1
  std::vector<Scalar> sup;   // length n-1

  int size() const { return static_cast<int>(diag.size()); }
};

/// All eigenvalues, strictly decreasing, always in approximate mode.
struct Spectrum {
  std::vector<Scalar> values;
  double residual_bound = 0.0;  // final bisection bracket width
};

/// Sturm-count bisection on the symmetrized matrix, each eigenvalue
/// bracketed to width <= tol.abs inside the Gershgorin interval.
/// NonRealizable if some sub_i * sup_i <= 0; DegenerateSpectrum if two
/// computed values are closer than 10 * tol.abs.
Spectrum tridiag_eigenvalues(const TridiagonalSpec& t, const Tolerance& tol = {});

/// Spectrum of the (D+1) x (D+1) intersection matrix: diag a_0..a_D,
/// sub c_1..c_D, sup b_0..b_{D-1}. The largest value is the valency k.
Spectrum graph_eigenvalues(const IntersectionArray& arr, const Tolerance& tol = {});

/// Spectrum of the D x D reduced matrix with diag (0,...,0, k - c_{D-1}),
/// sub c_1..c_{D-1}, sup b_0..b_{D-2}. Only meaningful when a_i = 0 for
/// i <= D-2 and a_{D-1} != 0; WrongCase otherwise. Its eigenvalues are
/// exactly the theta whose pseudo cosine sequence ends with
/// sigma_{D-1} = sigma_D.
Spectrum reduced_matrix_eigenvalues(const IntersectionArray& arr, const Tolerance& tol = {});

/// Number of eigenvalues of the symmetrized spec strictly below x.
int sturm_count_below(const TridiagonalSpec& t, double x);

}  // namespace drgtight
