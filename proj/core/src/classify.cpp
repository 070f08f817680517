#include "drgtight/classify.hpp"

#include <cmath>

namespace drgtight {

namespace {

// Residual tolerance for pairs built from bisection eigenvalues.
Tolerance widened(const Tolerance& tol) { return Tolerance{tol.rel, 1e3 * tol.abs}; }

bool pair_matches(const SpecialPair& p, const Scalar& a, const Scalar& b,
                  const Tolerance& tol) {
  return (scalar_eq(p.theta, a, tol) && scalar_eq(p.theta_prime, b, tol)) ||
         (scalar_eq(p.theta, b, tol) && scalar_eq(p.theta_prime, a, tol));
}

bool already_listed(const std::vector<SpecialPair>& pairs, const Scalar& a, const Scalar& b,
                    const Tolerance& tol) {
  for (const SpecialPair& p : pairs)
    if (pair_matches(p, a, b, tol)) return true;
  return false;
}

std::vector<Scalar> default_candidates(const IntersectionArray& arr, bool reduced,
                                       const Tolerance& tol) {
  Spectrum spec = reduced ? reduced_matrix_eigenvalues(arr, tol) : graph_eigenvalues(arr, tol);
  std::vector<Scalar> out;
  out.reserve(spec.values.size());
  for (const Scalar& v : spec.values) out.push_back(snap_eigenvalue(arr, v, reduced, tol));
  return out;
}

}  // namespace

Scalar snap_eigenvalue(const IntersectionArray& arr, const Scalar& theta, bool reduced,
                       const Tolerance& tol) {
  if (!arr.exact() || theta.exact()) return theta;
  mpq_class q;
  if (!rationalize(theta.value(), 1000000L, q)) return theta;
  Scalar cand = Scalar::from_exact(q);
  const double dist = std::fabs(cand.value() - theta.value());
  if (dist > std::max(1e3 * tol.abs, tol.rel * std::max(1.0, std::fabs(theta.value()))))
    return theta;

  PseudoCosineSeq s = pseudo_cosine_sequence(arr, cand);
  const int D = arr.diameter();
  bool ok = reduced ? s.sigma[D - 1].ratio() == s.sigma[D].ratio()
                    : is_cosine_sequence(arr, s, Tolerance::exact());
  return ok ? cand : theta;
}

ClassificationReport classify_tight_pairs(const IntersectionArray& arr,
                                          const std::optional<std::vector<Scalar>>& candidates,
                                          const Tolerance& tol) {
  const CaseTag tag = detect_case(arr, tol);
  const Scalar& k = arr.k();
  const Scalar minus_k = -k;
  const Tolerance wide = widened(tol);

  ClassificationReport rep;
  rep.tag = tag;
  rep.warnings = arr.warnings();
  rep.universal_rules.push_back("(theta, k) for all theta");

  auto verify_tol = [&](const Scalar& a, const Scalar& b) {
    return (arr.exact() && a.exact() && b.exact()) ? tol : wide;
  };

  switch (tag) {
    case CaseTag::I: {
      rep.universal_rules.push_back("(theta, -k) for all theta");
      // Spot-check the rules on the candidate values.
      std::vector<Scalar> sample =
          candidates ? *candidates : default_candidates(arr, false, tol);
      PseudoCosineSeq r = pseudo_cosine_sequence(arr, minus_k);
      for (const Scalar& th : sample) {
        PseudoCosineSeq s = pseudo_cosine_sequence(arr, th);
        auto w = is_tight_pair(arr, s, r, verify_tol(th, minus_k));
        if (!w) {
          rep.warnings.push_back("sample theta = " + th.str() +
                                 " failed the direct test against -k");
          continue;
        }
        if (already_listed(rep.special_pairs, th, minus_k, wide)) continue;
        rep.special_pairs.push_back({th, minus_k, w->epsilon, true, true});
      }
      break;
    }

    case CaseTag::II: {
      std::vector<Scalar> thetas =
          candidates ? *candidates : default_candidates(arr, true, tol);
      PseudoCosineSeq r = pseudo_cosine_sequence(arr, minus_k);
      for (const Scalar& th : thetas) {
        PseudoCosineSeq s = pseudo_cosine_sequence(arr, th);
        auto w = is_tight_pair(arr, s, r, verify_tol(th, minus_k));
        if (!w) {
          rep.warnings.push_back("reduced-matrix eigenvalue " + th.str() +
                                 " failed the direct test against -k");
          continue;
        }
        if (already_listed(rep.special_pairs, th, minus_k, wide)) continue;
        rep.special_pairs.push_back({th, minus_k, w->epsilon, true, scalar_eq(th, k, tol)});
      }
      break;
    }

    case CaseTag::III:
      // (theta, k) only; nothing further exists.
      break;

    case CaseTag::IV: {
      std::vector<Scalar> thetas;
      if (candidates) {
        thetas = *candidates;
      } else {
        for (Scalar& th : default_candidates(arr, false, tol))
          if (!scalar_eq(th, k, tol)) thetas.push_back(std::move(th));
      }
      for (const Scalar& th : thetas) {
        if (scalar_eq(th, k, tol)) continue;
        PartnerValue pv = tight_partner_value(arr, th, tol);
        if (pv.kind != PartnerValue::Kind::Partner) continue;
        if (scalar_eq(pv.value, k, tol)) continue;
        if (already_listed(rep.special_pairs, th, pv.value, wide)) continue;
        PseudoCosineSeq s = pseudo_cosine_sequence(arr, th);
        PseudoCosineSeq r = pseudo_cosine_sequence(arr, pv.value);
        auto w = is_tight_pair(arr, s, r, verify_tol(th, pv.value));
        if (!w) continue;  // the hyperbola is necessary, not sufficient
        rep.special_pairs.push_back({th, pv.value, w->epsilon, true, false});
      }
      break;
    }
  }

  return rep;
}

bool verify_report(const IntersectionArray& arr, const ClassificationReport& report,
                   const Tolerance& tol) {
  const Scalar& k = arr.k();
  const Tolerance wide = widened(tol);

  auto verify_tol = [&](const Scalar& a, const Scalar& b) {
    return (arr.exact() && a.exact() && b.exact()) ? tol : wide;
  };

  // Every claimed pair must hold under the direct test.
  for (const SpecialPair& p : report.special_pairs) {
    if (!p.verified) return false;
    PseudoCosineSeq s = pseudo_cosine_sequence(arr, p.theta);
    PseudoCosineSeq r = pseudo_cosine_sequence(arr, p.theta_prime);
    if (!is_tight_pair(arr, s, r, verify_tol(p.theta, p.theta_prime))) return false;
  }

  const bool rule_minus_k = report.tag == CaseTag::I;

  auto covered = [&](const Scalar& a, const Scalar& b) {
    if (scalar_eq(a, k, wide) || scalar_eq(b, k, wide)) return true;
    if (rule_minus_k && (scalar_eq(a, -k, wide) || scalar_eq(b, -k, wide))) return true;
    return already_listed(report.special_pairs, a, b, wide);
  };

  // Grid values too close to a claimed theta would inherit its residual
  // and defeat the absence check; skip them.
  auto near_claimed = [&](const Scalar& th) {
    const double guard = 1e-5 * (1.0 + std::fabs(k.value()));
    for (const SpecialPair& p : report.special_pairs) {
      if (std::fabs(th.value() - p.theta.value()) < guard) return true;
      if (std::fabs(th.value() - p.theta_prime.value()) < guard) return true;
    }
    return std::fabs(th.value() - k.value()) < guard ||
           std::fabs(th.value() + k.value()) < guard;
  };

  const int points = 50;
  std::vector<Scalar> grid;
  grid.reserve(points);
  for (int j = 0; j < points; ++j) {
    if (arr.exact()) {
      Scalar t = Scalar::from_ratio(2 * j - (points - 1), points - 1);  // in [-1, 1]
      grid.push_back(k * t);
    } else {
      grid.push_back(Scalar::from_double(k.value() * (2.0 * j - (points - 1)) / (points - 1)));
    }
  }

  for (const Scalar& th : grid) {
    if (scalar_eq(th, k, tol) || near_claimed(th)) continue;
    PartnerValue pv = tight_partner_value(arr, th, tol);
    PseudoCosineSeq s = pseudo_cosine_sequence(arr, th);

    if (pv.kind == PartnerValue::Kind::Partner) {
      if (scalar_eq(pv.value, k, wide)) continue;
      PseudoCosineSeq r = pseudo_cosine_sequence(arr, pv.value);
      const bool tight = is_tight_pair(arr, s, r, verify_tol(th, pv.value)).has_value();
      if (tight != covered(th, pv.value)) return false;
    } else if (pv.kind == PartnerValue::Kind::AnyPartner) {
      // theta = -k with a_1 = 0: every theta' satisfies the necessary
      // condition; sweep the same grid for actual tightness.
      for (const Scalar& th2 : grid) {
        if (scalar_eq(th2, k, tol) || near_claimed(th2)) continue;
        PseudoCosineSeq r = pseudo_cosine_sequence(arr, th2);
        const bool tight = is_tight_pair(arr, s, r, verify_tol(th, th2)).has_value();
        if (tight != covered(th, th2)) return false;
      }
    }
    // NoPartner: the necessary condition already excludes everything.
  }

  if (report.tag == CaseTag::III && !report.special_pairs.empty()) return false;
  return true;
}

}  // namespace drgtight
