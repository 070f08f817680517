#include "drgtight/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace drgtight {

namespace {

struct SymmetrizedTridiagonal {
  std::vector<double> d;   // diagonal
  std::vector<double> e2;  // squared off-diagonal, e2[i] couples i and i+1
};

SymmetrizedTridiagonal symmetrize(const TridiagonalSpec& t) {
  const int n = t.size();
  if (static_cast<int>(t.sub.size()) != n - 1 || static_cast<int>(t.sup.size()) != n - 1)
    throw LengthError("tridiagonal off-diagonals must have length n-1");
  SymmetrizedTridiagonal s;
  s.d.reserve(n);
  for (const Scalar& v : t.diag) s.d.push_back(v.value());
  s.e2.reserve(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    const double p = t.sub[i].value() * t.sup[i].value();
    if (!(p > 0.0))
      throw NonRealizable("sub_" + std::to_string(i) + " * sup_" + std::to_string(i) +
                          " must be positive");
    s.e2.push_back(p);
  }
  return s;
}

// Eigenvalue count below x via the Sturm sequence of the shifted matrix.
int count_below(const SymmetrizedTridiagonal& s, double x) {
  const int n = static_cast<int>(s.d.size());
  const double tiny = std::numeric_limits<double>::min() * 4.0;
  int count = 0;
  double q = 1.0;
  for (int i = 0; i < n; ++i) {
    const double off = i > 0 ? s.e2[i - 1] : 0.0;
    q = s.d[i] - x - (i > 0 ? off / q : 0.0);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

std::pair<double, double> gershgorin(const SymmetrizedTridiagonal& s) {
  const int n = static_cast<int>(s.d.size());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::sqrt(s.e2[i - 1]);
    if (i + 1 < n) radius += std::sqrt(s.e2[i]);
    lo = std::min(lo, s.d[i] - radius);
    hi = std::max(hi, s.d[i] + radius);
  }
  // Open the interval slightly so strict counts see every eigenvalue.
  const double pad = 1e-12 * std::max(1.0, std::max(std::fabs(lo), std::fabs(hi)));
  return {lo - pad, hi + pad};
}

}  // namespace

int sturm_count_below(const TridiagonalSpec& t, double x) {
  return count_below(symmetrize(t), x);
}

Spectrum tridiag_eigenvalues(const TridiagonalSpec& t, const Tolerance& tol) {
  const int n = t.size();
  if (n == 0) throw LengthError("empty tridiagonal matrix");
  const SymmetrizedTridiagonal s = symmetrize(t);
  auto [glo, ghi] = gershgorin(s);

  const double width_goal = std::max(tol.abs, 4.0 * std::numeric_limits<double>::epsilon() *
                                                  std::max(std::fabs(glo), std::fabs(ghi)));

  std::vector<double> values(n);
  for (int j = 0; j < n; ++j) {
    // j-th smallest eigenvalue: bisect until the bracket closes.
    double lo = glo, hi = ghi;
    for (int iter = 0; iter < 200 && hi - lo > width_goal; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (count_below(s, mid) <= j)
        lo = mid;
      else
        hi = mid;
    }
    values[j] = 0.5 * (lo + hi);
  }

  std::sort(values.begin(), values.end(), std::greater<double>());
  for (int j = 0; j + 1 < n; ++j) {
    if (values[j] - values[j + 1] < 10.0 * std::max(tol.abs, width_goal))
      throw DegenerateSpectrum("eigenvalues " + std::to_string(values[j]) + " and " +
                               std::to_string(values[j + 1]) +
                               " are too close to separate");
  }

  Spectrum out;
  out.residual_bound = width_goal;
  out.values.reserve(n);
  for (double v : values) out.values.push_back(Scalar::from_double(v));
  return out;
}

Spectrum graph_eigenvalues(const IntersectionArray& arr, const Tolerance& tol) {
  const int D = arr.diameter();
  TridiagonalSpec t;
  for (int i = 0; i <= D; ++i) t.diag.push_back(arr.a(i));
  for (int i = 1; i <= D; ++i) t.sub.push_back(arr.c(i));
  for (int i = 0; i <= D - 1; ++i) t.sup.push_back(arr.b(i));
  return tridiag_eigenvalues(t, tol);
}

Spectrum reduced_matrix_eigenvalues(const IntersectionArray& arr, const Tolerance& tol) {
  if (detect_case(arr, tol) != CaseTag::II)
    throw WrongCase("the reduced matrix requires a_i = 0 for i <= D-2 and a_{D-1} != 0");
  const int D = arr.diameter();
  TridiagonalSpec t;
  for (int i = 0; i < D - 1; ++i) t.diag.push_back(Scalar());
  t.diag.push_back(arr.k() - arr.c(D - 1));
  for (int i = 1; i <= D - 1; ++i) t.sub.push_back(arr.c(i));
  for (int i = 0; i <= D - 2; ++i) t.sup.push_back(arr.b(i));
  return tridiag_eigenvalues(t, tol);
}

}  // namespace drgtight
