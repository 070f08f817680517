#include "drgtight/tightness.hpp"

#include <cmath>

namespace drgtight {

namespace {

double pair_scale(const std::vector<Scalar>& product) {
  double m = 1.0;
  for (const Scalar& g : product) m = std::max(m, std::fabs(g.value()));
  return m;
}

}  // namespace

std::vector<Scalar> product_sequence(const PseudoCosineSeq& s, const PseudoCosineSeq& r) {
  if (s.diameter() != r.diameter())
    throw MismatchedDiameter("sequences have diameters " + std::to_string(s.diameter()) +
                             " and " + std::to_string(r.diameter()));
  std::vector<Scalar> out;
  out.reserve(s.sigma.size());
  for (size_t i = 0; i < s.sigma.size(); ++i) out.push_back(s.sigma[i] * r.sigma[i]);
  return out;
}

std::optional<TightPairWitness> is_tight_pair(const IntersectionArray& arr,
                                              const PseudoCosineSeq& s,
                                              const PseudoCosineSeq& r, const Tolerance& tol) {
  std::vector<Scalar> gamma = product_sequence(s, r);
  if (!characterize(arr, gamma, tol).recurrence) return std::nullopt;

  TightPairWitness w;
  w.psi = arr.k() * s.s1() * r.s1();
  w.epsilon = scalar_eq(s.s1(), r.s1(), tol)
                  ? Epsilon::any_real()
                  : Epsilon::of((s.s1() * r.s1() - Scalar::from_int(1)) / (r.s1() - s.s1()));
  w.s = s;
  w.r = r;
  w.product = std::move(gamma);
  return w;
}

Epsilon auxiliary_parameter(const PseudoCosineSeq& s, const PseudoCosineSeq& r,
                            const Tolerance& tol) {
  if (s.trivial(tol) || r.trivial(tol))
    throw TrivialSequence("auxiliary parameter is defined for nontrivial sequences only");
  if (scalar_eq(s.s1(), r.s1(), tol)) return Epsilon::any_real();
  return Epsilon::of((s.s1() * r.s1() - Scalar::from_int(1)) / (r.s1() - s.s1()));
}

bool check_eps_equation(const PseudoCosineSeq& s, const PseudoCosineSeq& r, const Scalar& eps,
                        const Tolerance& tol) {
  if (s.diameter() != r.diameter())
    throw MismatchedDiameter("sequences have different diameters");
  const int D = s.diameter();
  std::vector<Scalar> gamma = product_sequence(s, r);
  const double scale = pair_scale(gamma) * std::max(1.0, std::fabs(eps.value()));
  for (int i = 1; i <= D; ++i) {
    Scalar lhs = gamma[i] - gamma[i - 1];
    Scalar rhs = eps * (s.sigma[i - 1] * r.sigma[i] - s.sigma[i] * r.sigma[i - 1]);
    if (!residual_eq(lhs, rhs, scale, tol)) return false;
  }
  return true;
}

PartnerValue tight_partner_value(const IntersectionArray& arr, const Scalar& theta,
                                 const Tolerance& tol) {
  if (scalar_eq(theta, arr.k(), tol))
    throw TrivialTheta("theta = k pairs with everything; no hyperbola to solve");

  const Scalar& k = arr.k();
  const Scalar& a1 = arr.a(1);
  const Scalar zero;

  if (scalar_eq(a1, zero, tol)) {
    // The hyperbola degenerates to (theta + k)(theta' + k) = 0.
    if (scalar_eq(theta, -k, tol)) return PartnerValue::any();
    return PartnerValue::partner(-k);
  }

  Scalar shift = k / (a1 + Scalar::from_int(1));
  Scalar rhs = -(k * a1 * arr.b(1)) / ((a1 + Scalar::from_int(1)) * (a1 + Scalar::from_int(1)));
  Scalar lhs_factor = theta + shift;
  if (scalar_eq(lhs_factor, zero, tol)) return PartnerValue::none();
  return PartnerValue::partner(rhs / lhs_factor - shift);
}

std::vector<Scalar> partner_from_product_formula(const PseudoCosineSeq& s, const Scalar& eps) {
  const int D = s.diameter();
  std::vector<Scalar> rho;
  rho.reserve(D + 1);
  rho.push_back(s.sigma[0].exact() && eps.exact() ? Scalar::from_int(1)
                                                  : Scalar::from_int(1).to_approx());
  Scalar acc = rho[0];
  for (int j = 1; j <= D; ++j) {
    Scalar den = s.sigma[j] - eps * s.sigma[j - 1];
    if (den.is_zero())
      throw ZeroDenominator("sigma_" + std::to_string(j) + " - eps * sigma_" +
                                std::to_string(j - 1) + " = 0",
                            j);
    acc = acc * (s.sigma[j - 1] - eps * s.sigma[j]) / den;
    rho.push_back(acc);
  }
  return rho;
}

ZeroRhoConditions zero_rho_equivalence(const IntersectionArray& arr, const PseudoCosineSeq& s,
                                       const PseudoCosineSeq& r, const Scalar& eps, int i,
                                       const Tolerance& tol) {
  if (scalar_eq(arr.a(1), Scalar(), tol))
    throw WrongCase("the vanishing equivalences require a_1 != 0");
  if (i < 1 || i > arr.diameter() - 1)
    throw IndexError("index " + std::to_string(i) + " outside 1..D-1");

  ZeroRhoConditions out;
  out.sigma_prev_matches = scalar_eq(s.sigma[i - 1], eps * s.sigma[i], tol);
  out.sigma_next_matches = scalar_eq(s.sigma[i + 1], eps * s.sigma[i], tol);
  out.sigma_skip_equal = scalar_eq(s.sigma[i - 1], s.sigma[i + 1], tol);
  out.rho_zero = scalar_eq(r.sigma[i], Scalar(), tol);
  return out;
}

}  // namespace drgtight
