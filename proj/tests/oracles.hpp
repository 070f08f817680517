#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "drgtight/sequences.hpp"
#include "drgtight/spectra.hpp"

// Independent oracles: characteristic polynomials by the exact three-term
// recurrence, root isolation by plain sign-change bisection, and a naive
// recurrence check. None of them share code with the library paths they
// cross-check.
namespace drgtight::testing {

/// Exact characteristic polynomial det(xI - T), ascending coefficients.
inline std::vector<mpq_class> charpoly(const TridiagonalSpec& t) {
  const int n = t.size();
  std::vector<mpq_class> prev{1};        // p_0 = 1
  if (n == 0) return prev;
  std::vector<mpq_class> cur{-t.diag[0].ratio(), 1};  // p_1 = x - d_0
  for (int i = 1; i < n; ++i) {
    // p_{i+1} = (x - d_i) p_i - sub_{i-1} sup_{i-1} p_{i-1}
    std::vector<mpq_class> next(cur.size() + 1, mpq_class(0));
    for (size_t j = 0; j < cur.size(); ++j) {
      next[j + 1] += cur[j];
      next[j] -= t.diag[i].ratio() * cur[j];
    }
    mpq_class w = t.sub[i - 1].ratio() * t.sup[i - 1].ratio();
    for (size_t j = 0; j < prev.size(); ++j) next[j] -= w * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline double poly_eval(const std::vector<mpq_class>& coeffs, double x) {
  double acc = 0.0;
  for (size_t j = coeffs.size(); j-- > 0;) acc = acc * x + coeffs[j].get_d();
  return acc;
}

inline mpq_class poly_eval_exact(const std::vector<mpq_class>& coeffs, const mpq_class& x) {
  mpq_class acc = 0;
  for (size_t j = coeffs.size(); j-- > 0;) acc = acc * x + coeffs[j];
  return acc;
}

/// All real roots in [lo, hi] found by scanning for sign changes on a fine
/// grid and bisecting each bracket. Good enough for the small, simple
/// spectra exercised in the tests.
inline std::vector<double> bisect_roots(const std::function<double(double)>& f, double lo,
                                        double hi, int scan = 20000) {
  std::vector<double> roots;
  double step = (hi - lo) / scan;
  double x0 = lo, f0 = f(lo);
  for (int i = 1; i <= scan; ++i) {
    double x1 = lo + i * step, f1 = f(x1);
    if (f0 == 0.0) roots.push_back(x0);
    if (f0 * f1 < 0.0) {
      double a = x0, b = x1;
      for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, std::fabs(a)); ++it) {
        double m = 0.5 * (a + b);
        if (f(a) * f(m) <= 0.0)
          b = m;
        else
          a = m;
      }
      roots.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

/// Naive forward solve of the defining recurrence, written without any
/// library helper so pcs results can be checked against it.
inline std::vector<mpq_class> naive_pcs(const IntersectionArray& arr, const mpq_class& theta) {
  const int D = arr.diameter();
  std::vector<mpq_class> sig{1, theta / arr.k().ratio()};
  for (int i = 1; i <= D - 1; ++i) {
    mpq_class v = (theta * sig[i] - arr.c(i).ratio() * sig[i - 1] -
                   arr.a(i).ratio() * sig[i]) /
                  arr.b(i).ratio();
    sig.push_back(v);
  }
  return sig;
}

/// Naive check that seq satisfies the recurrence for theta = k seq[1].
inline bool naive_is_pcs(const IntersectionArray& arr, const std::vector<mpq_class>& seq) {
  if (seq[0] != 1) return false;
  const int D = arr.diameter();
  mpq_class theta = arr.k().ratio() * seq[1];
  for (int i = 1; i <= D - 1; ++i) {
    mpq_class lhs = arr.c(i).ratio() * seq[i - 1] + arr.a(i).ratio() * seq[i] +
                    arr.b(i).ratio() * seq[i + 1];
    if (lhs != theta * seq[i]) return false;
  }
  return true;
}

inline TridiagonalSpec graph_matrix(const IntersectionArray& arr) {
  TridiagonalSpec t;
  for (int i = 0; i <= arr.diameter(); ++i) t.diag.push_back(arr.a(i));
  for (int i = 1; i <= arr.diameter(); ++i) t.sub.push_back(arr.c(i));
  for (int i = 0; i <= arr.diameter() - 1; ++i) t.sup.push_back(arr.b(i));
  return t;
}

inline TridiagonalSpec reduced_matrix(const IntersectionArray& arr) {
  const int D = arr.diameter();
  TridiagonalSpec t;
  for (int i = 0; i < D - 1; ++i) t.diag.push_back(Scalar());
  t.diag.push_back(arr.k() - arr.c(D - 1));
  for (int i = 1; i <= D - 1; ++i) t.sub.push_back(arr.c(i));
  for (int i = 0; i <= D - 2; ++i) t.sup.push_back(arr.b(i));
  return t;
}

}  // namespace drgtight::testing
