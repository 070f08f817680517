#include "drgtight/graph_params.hpp"

#include <algorithm>

namespace drgtight {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    case CaseTag::III: return "III";
    case CaseTag::IV: return "IV";
  }
  return "?";
}

IntersectionArray validate_array(int D, std::vector<Scalar> b, std::vector<Scalar> c,
                                 const Tolerance& tol) {
  if (D < 3) throw ValidationError("diameter must satisfy D >= 3, got " + std::to_string(D));
  if (static_cast<int>(b.size()) != D)
    throw LengthError("b must list b_0..b_{D-1} (" + std::to_string(D) + " values), got " +
                      std::to_string(b.size()));
  if (static_cast<int>(c.size()) != D)
    throw LengthError("c must list c_1..c_D (" + std::to_string(D) + " values), got " +
                      std::to_string(c.size()));

  // A single decimal entry puts the whole array in approximate mode.
  bool exact = true;
  for (const Scalar& s : b) exact = exact && s.exact();
  for (const Scalar& s : c) exact = exact && s.exact();
  if (!exact) {
    for (Scalar& s : b) s = s.to_approx();
    for (Scalar& s : c) s = s.to_approx();
  }

  IntersectionArray arr;
  arr.D_ = D;
  arr.exact_ = exact;

  const Scalar zero;
  arr.b_ = std::move(b);
  arr.b_.push_back(exact ? zero : zero.to_approx());  // b_D := 0
  arr.c_.assign(1, exact ? zero : zero.to_approx());  // c_0 := 0
  arr.c_.insert(arr.c_.end(), c.begin(), c.end());

  if (!scalar_eq(arr.c_[1], Scalar::from_int(1), tol)) throw ValidationError("c_1 != 1");
  for (int i = 0; i <= D - 1; ++i)
    if (sign_with_tol(arr.b_[i], tol) <= 0)
      throw ValidationError("b_" + std::to_string(i) + " not positive");
  for (int i = 1; i <= D; ++i)
    if (sign_with_tol(arr.c_[i], tol) <= 0)
      throw ValidationError("c_" + std::to_string(i) + " not positive");

  const Scalar& k = arr.b_[0];
  arr.a_.reserve(D + 1);
  for (int i = 0; i <= D; ++i) {
    Scalar ai = k - arr.b_[i] - arr.c_[i];
    if (sign_with_tol(ai, tol) < 0 && !scalar_eq(ai, zero, tol))
      throw ValidationError("a_" + std::to_string(i) + " negative");
    arr.a_.push_back(std::move(ai));
  }

  for (int i = 1; i <= D; ++i) {
    Scalar dc = arr.c_[i] - arr.c_[i - 1];
    if (sign_with_tol(dc, tol) < 0)
      throw ValidationError("c_" + std::to_string(i) + " < c_" + std::to_string(i - 1));
    Scalar db = arr.b_[i - 1] - arr.b_[i];
    if (sign_with_tol(db, tol) < 0)
      throw ValidationError("b_" + std::to_string(i) + " > b_" + std::to_string(i - 1));
  }

  // An array with a_1 != 0 but some interior a_i = 0 violates
  // [BCN Prop. 5.5.1] and cannot come from a distance-regular graph.
  if (!scalar_eq(arr.a_[1], zero, tol)) {
    for (int i = 2; i <= D - 1; ++i) {
      if (scalar_eq(arr.a_[i], zero, tol)) {
        arr.warnings_.push_back("a_1 != 0 but a_" + std::to_string(i) +
                                " = 0: not realizable by a distance-regular graph");
        break;
      }
    }
  }

  return arr;
}

Scalar k_subscript(const IntersectionArray& arr, int i) {
  if (i < 0 || i > arr.diameter())
    throw IndexError("k_i index " + std::to_string(i) + " outside 0.." +
                     std::to_string(arr.diameter()));
  Scalar num = Scalar::from_int(1);
  Scalar den = Scalar::from_int(1);
  for (int j = 0; j < i; ++j) num *= arr.b(j);
  for (int j = 1; j <= i; ++j) den *= arr.c(j);
  return num / den;
}

CaseTag detect_case(const IntersectionArray& arr, const Tolerance& tol) {
  const int D = arr.diameter();
  const Scalar zero;
  if (!scalar_eq(arr.a(1), zero, tol)) return CaseTag::IV;
  int first_nonzero = 0;  // minimal i in 1..D-1 with a_i != 0
  for (int i = 2; i <= D - 1; ++i) {
    if (!scalar_eq(arr.a(i), zero, tol)) {
      first_nonzero = i;
      break;
    }
  }
  if (first_nonzero == 0) return CaseTag::I;
  return first_nonzero == D - 1 ? CaseTag::II : CaseTag::III;
}

}  // namespace drgtight
