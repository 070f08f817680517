#include "drgtight/sequences.hpp"

#include <cmath>

namespace drgtight {

bool residual_eq(const Scalar& lhs, const Scalar& rhs, double scale, const Tolerance& tol) {
  if (lhs.exact() && rhs.exact()) return lhs.ratio() == rhs.ratio();
  const double diff = std::fabs(lhs.value() - rhs.value());
  return diff <= std::max(tol.abs, tol.rel * std::max(1.0, std::fabs(scale)));
}

namespace {

double seq_scale(const IntersectionArray& arr, const std::vector<Scalar>& seq) {
  double m = 0.0;
  for (const Scalar& s : seq) m = std::max(m, std::fabs(s.value()));
  return std::fabs(arr.k().value()) * m;
}

}  // namespace

bool PseudoCosineSeq::trivial(const Tolerance& tol) const {
  const Scalar one = Scalar::from_int(1);
  for (const Scalar& v : sigma)
    if (!scalar_eq(v, one, tol)) return false;
  return true;
}

PseudoCosineSeq pseudo_cosine_sequence(const IntersectionArray& arr, const Scalar& theta) {
  const int D = arr.diameter();
  PseudoCosineSeq out;
  out.theta = theta;
  out.sigma.reserve(D + 1);
  out.sigma.push_back(arr.exact() && theta.exact() ? Scalar::from_int(1)
                                                   : Scalar::from_int(1).to_approx());
  out.sigma.push_back(theta / arr.k());
  for (int i = 1; i <= D - 1; ++i) {
    // Solve (4) for sigma_{i+1}; b_i != 0 for i <= D-1.
    Scalar next = (theta * out.sigma[i] - arr.c(i) * out.sigma[i - 1] -
                   arr.a(i) * out.sigma[i]) /
                  arr.b(i);
    out.sigma.push_back(std::move(next));
  }
  return out;
}

bool is_cosine_sequence(const IntersectionArray& arr, const PseudoCosineSeq& s,
                        const Tolerance& tol) {
  const int D = arr.diameter();
  if (s.diameter() != D)
    throw MismatchedDiameter("sequence has diameter " + std::to_string(s.diameter()) +
                             ", array has " + std::to_string(D));
  Scalar lhs = arr.c(D) * s.sigma[D - 1] + arr.a(D) * s.sigma[D];
  Scalar rhs = s.theta * s.sigma[D];
  return residual_eq(lhs, rhs, seq_scale(arr, s.sigma), tol);
}

std::pair<Scalar, Scalar> christoffel_darboux(const IntersectionArray& arr,
                                              const PseudoCosineSeq& s,
                                              const PseudoCosineSeq& r, int i) {
  const int D = arr.diameter();
  if (i < 0 || i > D - 1)
    throw IndexError("Christoffel-Darboux index " + std::to_string(i) + " outside 0.." +
                     std::to_string(D - 1));
  if (s.diameter() != D || r.diameter() != D)
    throw MismatchedDiameter("sequence diameters do not match the array");

  Scalar sum;
  for (int h = 0; h <= i; ++h) sum += k_subscript(arr, h) * s.sigma[h] * r.sigma[h];
  Scalar lhs = (s.s1() - r.s1()) * sum;

  Scalar coef = Scalar::from_int(1);
  for (int j = 1; j <= i; ++j) coef = coef * arr.b(j) / arr.c(j);
  Scalar rhs = coef * (s.sigma[i + 1] * r.sigma[i] - s.sigma[i] * r.sigma[i + 1]);
  return {lhs, rhs};
}

Characterization characterize(const IntersectionArray& arr, const std::vector<Scalar>& seq,
                              const Tolerance& tol) {
  const int D = arr.diameter();
  if (static_cast<int>(seq.size()) != D + 1)
    throw LengthError("sequence must have length D+1 = " + std::to_string(D + 1) + ", got " +
                      std::to_string(seq.size()));

  const double scale = seq_scale(arr, seq);
  const Scalar one = Scalar::from_int(1);
  const bool starts_at_one = residual_eq(seq[0], one, scale, tol);

  const Scalar& k = arr.k();
  const Scalar& s1 = seq[1];
  const Scalar theta = k * s1;

  Characterization out{starts_at_one, starts_at_one, starts_at_one, starts_at_one,
                       starts_at_one};

  // (4): i = 0 reads b_0 sigma_1 = theta sigma_0, which holds by the
  // definition theta = k sigma_1 whenever sigma_0 = 1; start at i = 1.
  for (int i = 1; i <= D - 1 && out.recurrence; ++i) {
    Scalar lhs = arr.c(i) * seq[i - 1] + arr.a(i) * seq[i] + arr.b(i) * seq[i + 1];
    out.recurrence = residual_eq(lhs, theta * seq[i], scale, tol);
  }

  // (5)
  for (int i = 1; i <= D - 1 && out.diff_form; ++i) {
    Scalar lhs = arr.c(i) * (seq[i - 1] - seq[i]) - arr.b(i) * (seq[i] - seq[i + 1]);
    Scalar rhs = k * (s1 - one) * seq[i];
    out.diff_form = residual_eq(lhs, rhs, scale, tol);
  }

  // (6)
  {
    Scalar sum;
    Scalar coef = Scalar::from_int(1);
    for (int i = 0; i <= D - 1 && out.sum_form; ++i) {
      sum += k_subscript(arr, i) * seq[i];
      if (i >= 1) coef = coef * arr.b(i) / arr.c(i);
      Scalar lhs = (s1 - one) * sum;
      Scalar rhs = coef * (seq[i + 1] - seq[i]);
      out.sum_form = residual_eq(lhs, rhs, scale, tol);
    }
  }

  // (7)
  for (int i = 1; i <= D - 1 && out.b_form; ++i) {
    Scalar lhs = arr.b(i) * (seq[i - 1] - seq[i + 1]);
    Scalar rhs = k * (seq[i - 1] - s1 * seq[i]) - arr.a(i) * (seq[i - 1] - seq[i]);
    out.b_form = residual_eq(lhs, rhs, scale, tol);
  }

  // (8)
  for (int i = 1; i <= D - 1 && out.c_form; ++i) {
    Scalar lhs = arr.c(i) * (seq[i + 1] - seq[i - 1]);
    Scalar rhs = k * (seq[i + 1] - s1 * seq[i]) - arr.a(i) * (seq[i + 1] - seq[i]);
    out.c_form = residual_eq(lhs, rhs, scale, tol);
  }

  return out;
}

}  // namespace drgtight
