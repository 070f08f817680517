#include "drgtight/recovery.hpp"

#include <cmath>

namespace drgtight {

namespace {

const Scalar kOne = Scalar::from_int(1);

double cond_scale(const IntersectionArray& arr, const PseudoCosineSeq& s, const Scalar& eps) {
  double m = 1.0;
  for (const Scalar& v : s.sigma) m = std::max(m, std::fabs(v.value()));
  m = std::max(m, std::fabs(eps.value()));
  return std::fabs(arr.k().value()) * m * m;
}

}  // namespace

RecoveryParams recovery_params(const PseudoCosineSeq& s, const Scalar& eps,
                               const Tolerance& tol) {
  if (s.trivial(tol)) throw TrivialSequence("recovery needs a nontrivial sequence");
  const Scalar& sg = s.s1();
  const Scalar& sg2 = s.sigma.at(2);

  if (scalar_eq(sg2, kOne, tol)) throw ZeroDenominator("sigma_2 = 1");
  if (scalar_eq(eps * sg, kOne, tol)) throw ZeroDenominator("eps * sigma = 1");
  if (scalar_eq(sg2, sg * sg, tol)) throw ZeroDenominator("sigma_2 = sigma^2");

  Scalar den = (sg * sg - sg2) * (kOne - eps * sg);
  RecoveryParams out;
  out.h = (kOne - sg) * (kOne - sg2) / den;
  out.g = (eps - kOne) * (kOne - sg2) / den;
  out.epsilon = eps;
  return out;
}

IntersectionArray recover_intersection_numbers(const PseudoCosineSeq& s, const Scalar& eps,
                                               const Tolerance& tol, bool complete_terminal) {
  const int D = s.diameter();
  const Scalar& sg = s.s1();
  if (scalar_eq(sg, kOne, tol)) throw ZeroDenominator("sigma = 1");

  const RecoveryParams params = recovery_params(s, eps, tol);
  const Scalar& h = params.h;
  const Scalar k = h * (sg - eps) / (sg - kOne);

  std::vector<Scalar> b{k};
  std::vector<Scalar> c;
  for (int i = 1; i <= D - 1; ++i) {
    const Scalar& prev = s.sigma[i - 1];
    const Scalar& cur = s.sigma[i];
    const Scalar& next = s.sigma[i + 1];
    if (scalar_eq(prev, next, tol))
      throw InfeasibleSequence("sigma_" + std::to_string(i - 1) + " = sigma_" +
                               std::to_string(i + 1));
    if (scalar_eq(prev, cur, tol))
      throw ZeroDenominator("sigma_" + std::to_string(i - 1) + " = sigma_" + std::to_string(i),
                            i);
    if (scalar_eq(cur, next, tol))
      throw ZeroDenominator("sigma_" + std::to_string(i) + " = sigma_" + std::to_string(i + 1),
                            i);
    b.push_back(h * (prev - sg * cur) * (next - eps * cur) / ((prev - next) * (next - cur)));
    c.push_back(h * (next - sg * cur) * (prev - eps * cur) / ((next - prev) * (prev - cur)));
  }

  bool unconstrained = true;
  if (complete_terminal) {
    // c_D (sigma_{D-1} - sigma_D) = (theta - k) sigma_D
    Scalar diff = s.sigma[D - 1] - s.sigma[D];
    if (diff.is_zero())
      throw ZeroDenominator("sigma_" + std::to_string(D - 1) + " = sigma_" + std::to_string(D),
                            D);
    c.push_back((s.theta - k) * s.sigma[D] / diff);
    unconstrained = false;
  } else {
    c.push_back(k);  // filler: a_D := 0
  }

  IntersectionArray arr = validate_array(D, std::move(b), std::move(c), tol);
  arr.c_D_unconstrained = unconstrained;
  return arr;
}

ConditionReport check_conditions(const PseudoCosineSeq& s, const Scalar& eps,
                                 const IntersectionArray& arr, const Tolerance& tol) {
  if (scalar_eq(arr.a(1), Scalar(), tol))
    throw WrongCase("conditions A/B/C are stated for arrays with a_1 != 0");

  const int D = arr.diameter();
  if (s.diameter() != D) throw MismatchedDiameter("sequence and array disagree on D");

  const Scalar& sg = s.s1();
  const Scalar& sg2 = s.sigma[2];
  const double scale = cond_scale(arr, s, eps);

  ConditionReport rep;

  const bool hg_den_ok =
      !scalar_eq(sg * sg, sg2, tol) && !scalar_eq(eps * sg, kOne, tol);
  Scalar h, g;
  if (hg_den_ok) {
    Scalar den = (sg * sg - sg2) * (kOne - eps * sg);
    h = (kOne - sg) * (kOne - sg2) / den;
    g = (eps - kOne) * (kOne - sg2) / den;
  }

  // Condition A: eps != -1 plus the a_i formula with nonzero denominators.
  rep.A = true;
  if (scalar_eq(eps, -kOne, tol)) {
    rep.A = false;
    rep.failures.push_back("A: eps = -1");
  }
  if (!hg_den_ok) {
    rep.A = false;
    rep.failures.push_back("A: denominator of g vanishes");
  }
  for (int i = 1; i <= D - 1 && rep.A; ++i) {
    Scalar dn = s.sigma[i + 1] - s.sigma[i];
    Scalar dp = s.sigma[i - 1] - s.sigma[i];
    if (dn.is_zero() || dp.is_zero()) {
      rep.A = false;
      rep.failures.push_back("A: sigma_" + std::to_string(i) + " repeats a neighbour");
      break;
    }
    Scalar want = g * (s.sigma[i + 1] - sg * s.sigma[i]) * (s.sigma[i - 1] - sg * s.sigma[i]) /
                  (dn * dp);
    if (!residual_eq(arr.a(i), want, scale, tol)) {
      rep.A = false;
      rep.failures.push_back("A: a_" + std::to_string(i) + " mismatch");
    }
  }

  // Condition B: b_i (sigma_{i-1} - sigma_{i+1}) equations.
  rep.B = true;
  if (!hg_den_ok) {
    rep.B = false;
    rep.failures.push_back("B: denominator of h vanishes");
  }
  for (int i = 1; i <= D - 1 && rep.B; ++i) {
    Scalar dn = s.sigma[i + 1] - s.sigma[i];
    if (dn.is_zero()) {
      rep.B = false;
      rep.failures.push_back("B: sigma_" + std::to_string(i + 1) + " = sigma_" +
                             std::to_string(i));
      break;
    }
    Scalar lhs = arr.b(i) * (s.sigma[i - 1] - s.sigma[i + 1]);
    Scalar rhs =
        h * (s.sigma[i - 1] - sg * s.sigma[i]) * (s.sigma[i + 1] - eps * s.sigma[i]) / dn;
    if (!residual_eq(lhs, rhs, scale, tol)) {
      rep.B = false;
      rep.failures.push_back("B: b_" + std::to_string(i) + " mismatch");
    }
  }

  // Condition C: the k formula plus the c_i equations.
  rep.C = true;
  if (!hg_den_ok) {
    rep.C = false;
    rep.failures.push_back("C: denominator of h vanishes");
  }
  if (scalar_eq(sg, kOne, tol)) {
    rep.C = false;
    rep.failures.push_back("C: sigma = 1 denominators");
  }
  if (rep.C && !residual_eq(arr.k(), h * (sg - eps) / (sg - kOne), scale, tol)) {
    rep.C = false;
    rep.failures.push_back("C: k mismatch");
  }
  for (int i = 1; i <= D - 1 && rep.C; ++i) {
    Scalar dp = s.sigma[i - 1] - s.sigma[i];
    if (dp.is_zero()) {
      rep.C = false;
      rep.failures.push_back("C: sigma_" + std::to_string(i - 1) + " = sigma_" +
                             std::to_string(i));
      break;
    }
    Scalar lhs = arr.c(i) * (s.sigma[i + 1] - s.sigma[i - 1]);
    Scalar rhs =
        h * (s.sigma[i + 1] - sg * s.sigma[i]) * (s.sigma[i - 1] - eps * s.sigma[i]) / dp;
    if (!residual_eq(lhs, rhs, scale, tol)) {
      rep.C = false;
      rep.failures.push_back("C: c_" + std::to_string(i) + " mismatch");
    }
  }

  return rep;
}

std::optional<Scalar> is_tight_sequence(const IntersectionArray& arr, const PseudoCosineSeq& s,
                                        const Tolerance& tol) {
  if (scalar_eq(arr.a(1), Scalar(), tol))
    throw WrongCase("tight sequences are classified for a_1 != 0 only");
  if (s.trivial(tol)) throw TrivialSequence("the trivial sequence is excluded");

  PartnerValue pv = tight_partner_value(arr, s.theta, tol);
  if (pv.kind != PartnerValue::Kind::Partner) return std::nullopt;
  if (scalar_eq(pv.value, arr.k(), tol)) return std::nullopt;  // partner must be nontrivial

  PseudoCosineSeq r = pseudo_cosine_sequence(arr, pv.value);
  auto witness = is_tight_pair(arr, s, r, tol);
  if (!witness || witness->epsilon.any) return std::nullopt;
  // a_1 != 0 rules out sigma = rho, so the parameter is unique.
  return witness->epsilon.value;
}

IntersectionArray feasible_array_from_sequence(const std::vector<Scalar>& sigma,
                                               const Scalar& eps, const Tolerance& tol) {
  if (sigma.size() < 4)
    throw LengthError("need sigma_0..sigma_D with D >= 3, got " +
                      std::to_string(sigma.size()) + " values");
  const int D = static_cast<int>(sigma.size()) - 1;
  if (!scalar_eq(sigma[0], kOne, tol)) throw ValidationError("sigma_0 != 1");
  if (scalar_eq(eps, kOne, tol)) throw NotFeasible("eps = 1");
  if (scalar_eq(eps, -kOne, tol)) throw NotFeasible("eps = -1");

  const Scalar& sg = sigma[1];
  const Scalar& sg2 = sigma[2];
  if (scalar_eq(sg, kOne, tol)) throw ZeroDenominator("sigma = 1");
  if (scalar_eq(sg * sg, sg2, tol)) throw ZeroDenominator("sigma_2 = sigma^2");
  if (scalar_eq(eps * sg, kOne, tol)) throw ZeroDenominator("eps * sigma = 1");

  const Scalar h = (kOne - sg) * (kOne - sg2) / ((sg * sg - sg2) * (kOne - eps * sg));
  const Scalar k = h * (sg - eps) / (sg - kOne);

  std::vector<Scalar> b{k};
  std::vector<Scalar> c;
  for (int i = 1; i <= D - 1; ++i) {
    const Scalar& prev = sigma[i - 1];
    const Scalar& cur = sigma[i];
    const Scalar& next = sigma[i + 1];
    if (scalar_eq(prev, next, tol))
      throw NotFeasible("sigma_" + std::to_string(i - 1) + " = sigma_" + std::to_string(i + 1));
    if (scalar_eq(prev, cur, tol) || scalar_eq(cur, next, tol))
      throw ZeroDenominator("sigma_" + std::to_string(i) + " repeats a neighbour", i);
    b.push_back(h * (prev - sg * cur) * (next - eps * cur) / ((prev - next) * (next - cur)));
    c.push_back(h * (next - sg * cur) * (prev - eps * cur) / ((next - prev) * (prev - cur)));
  }
  c.push_back(k);  // c_D undetermined by the formulas; filler with a_D := 0

  IntersectionArray arr = validate_array(D, std::move(b), std::move(c), tol);
  arr.c_D_unconstrained = true;
  return arr;
}

bool is_feasible(const IntersectionArray& arr, const PseudoCosineSeq& s, const Tolerance& tol) {
  if (scalar_eq(arr.a(1), Scalar(), tol))
    throw WrongCase("feasibility is defined for a_1 != 0 only");
  if (s.trivial(tol)) return false;
  const int D = arr.diameter();
  for (int i = 1; i <= D - 1; ++i)
    if (scalar_eq(s.sigma[i - 1], s.sigma[i + 1], tol)) return false;
  return is_tight_sequence(arr, s, tol).has_value();
}

}  // namespace drgtight
