#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "drgtight/errors.hpp"

namespace drgtight {

/// Comparison tolerance for approximate values. Exact comparisons ignore it.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  static Tolerance exact() { return Tolerance{0.0, 0.0}; }
  /// |a - b| <= max(abs, rel * max(|a|, |b|))
  bool close(double a, double b) const;
};

/// A real number carried either exactly (arbitrary-precision rational, always
/// in lowest terms with positive denominator) or approximately (double).
///
/// Arithmetic between two exact operands stays exact. Any approximate operand
/// makes the result approximate; when that demotes an exact operand the
/// result is flagged as promoted and the flag is sticky thereafter.
class Scalar {
public:
  Scalar() : exact_(true), q_(0), d_(0.0), promoted_(false) {}

  static Scalar from_int(long v);
  static Scalar from_ratio(long num, long den);  // ZeroDivision if den == 0
  static Scalar from_exact(mpq_class v);
  static Scalar from_double(double v);

  /// Accepts "p/q", an integer literal, or a decimal/scientific literal
  /// (the latter produces an approximate value). ValidationError otherwise.
  static Scalar parse(std::string_view text);

  bool exact() const { return exact_; }
  bool promoted() const { return promoted_; }

  /// Double view of the value (rounds when exact).
  double value() const { return exact_ ? q_.get_d() : d_; }
  /// Exact rational payload; misuse on an approximate value throws.
  const mpq_class& ratio() const;

  /// Forced Exact -> Approx conversion; the result records the promotion.
  Scalar to_approx() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// ZeroDivision when the divisor is an exact zero (either mode).
  Scalar operator/(const Scalar& o) const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// -1, 0, +1 with no tolerance applied.
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  /// "p/q" or "n" when exact; decimal literal at 15 significant digits
  /// when approximate (always reparses as approximate).
  std::string str() const;

private:
  Scalar(bool exact, mpq_class q, double d, bool promoted)
      : exact_(exact), q_(std::move(q)), d_(d), promoted_(promoted) {}

  bool exact_;
  mpq_class q_;  // meaningful only when exact_
  double d_;     // meaningful only when !exact_
  bool promoted_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar abs(const Scalar& s);

/// The single comparison policy: exact/exact compares mathematically,
/// anything else compares |a-b| against the tolerance.
bool scalar_eq(const Scalar& a, const Scalar& b, const Tolerance& tol = {});

/// Sign with near-zero approximate values snapped to 0 (|v| <= tol.abs).
int sign_with_tol(const Scalar& s, const Tolerance& tol = {});

/// Best rational p/q with q <= max_den approximating x (continued
/// fractions). Returns false when x is not finite.
bool rationalize(double x, long max_den, mpq_class& out);

}  // namespace drgtight
