#include "drgtight/numeric.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace drgtight {

bool Tolerance::close(double a, double b) const {
  const double diff = std::fabs(a - b);
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return diff <= std::max(abs, rel * scale);
}

Scalar Scalar::from_int(long v) { return Scalar(true, mpq_class(v), 0.0, false); }

Scalar Scalar::from_ratio(long num, long den) {
  if (den == 0) throw ZeroDivision("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(true, std::move(q), 0.0, false);
}

Scalar Scalar::from_exact(mpq_class v) {
  v.canonicalize();
  return Scalar(true, std::move(v), 0.0, false);
}

Scalar Scalar::from_double(double v) { return Scalar(false, mpq_class(0), v, false); }

const mpq_class& Scalar::ratio() const {
  if (!exact_) throw ComputeError("ratio() on an approximate scalar");
  return q_;
}

Scalar Scalar::to_approx() const {
  if (!exact_) return *this;
  return Scalar(false, mpq_class(0), q_.get_d(), true);
}

namespace {

bool integer_literal(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

// GMP's string constructors reject a leading '+'.
std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) throw ValidationError("empty scalar literal");
  std::string_view t = text.substr(b, e - b + 1);

  if (size_t slash = t.find('/'); slash != std::string_view::npos) {
    std::string_view num = t.substr(0, slash);
    std::string_view den = t.substr(slash + 1);
    if (!integer_literal(num) || !integer_literal(den))
      throw ValidationError("bad rational literal: '" + std::string(text) + "'");
    mpz_class n(strip_plus(num)), d(strip_plus(den));
    if (d == 0)
      throw ValidationError("rational literal with zero denominator: '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(true, std::move(q), 0.0, false);
  }

  if (integer_literal(t)) {
    mpq_class q(mpz_class(strip_plus(t)));
    return Scalar(true, std::move(q), 0.0, false);
  }

  std::string buf(t);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end == buf.c_str() || *end != '\0' || !std::isfinite(v))
    throw ValidationError("bad scalar literal: '" + std::string(text) + "'");
  return from_double(v);
}

Scalar Scalar::operator-() const {
  if (exact_) return Scalar(true, mpq_class(-q_), 0.0, false);
  return Scalar(false, mpq_class(0), -d_, promoted_);
}

namespace {

// Result mode/flag for a binary operation: exact iff both exact; an
// exact/approx mix marks the result as promoted.
inline bool mix_promotes(const Scalar& a, const Scalar& b) {
  return a.exact() != b.exact();
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  if (exact_ && o.exact_) return from_exact(mpq_class(q_ + o.q_));
  return Scalar(false, mpq_class(0), value() + o.value(),
                promoted_ || o.promoted_ || mix_promotes(*this, o));
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (exact_ && o.exact_) return from_exact(mpq_class(q_ - o.q_));
  return Scalar(false, mpq_class(0), value() - o.value(),
                promoted_ || o.promoted_ || mix_promotes(*this, o));
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (exact_ && o.exact_) return from_exact(mpq_class(q_ * o.q_));
  return Scalar(false, mpq_class(0), value() * o.value(),
                promoted_ || o.promoted_ || mix_promotes(*this, o));
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw ZeroDivision("division by zero");
  if (exact_ && o.exact_) return from_exact(mpq_class(q_ / o.q_));
  return Scalar(false, mpq_class(0), value() / o.value(),
                promoted_ || o.promoted_ || mix_promotes(*this, o));
}

int Scalar::sign() const {
  if (exact_) return mpq_sgn(q_.get_mpq_t());
  return d_ < 0.0 ? -1 : (d_ > 0.0 ? 1 : 0);
}

std::string Scalar::str() const {
  if (exact_) return q_.get_str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", d_);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos &&
      s.find_first_of("in") == std::string::npos)  // inf/nan
    s += ".0";
  return s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

bool scalar_eq(const Scalar& a, const Scalar& b, const Tolerance& tol) {
  if (a.exact() && b.exact()) return a.ratio() == b.ratio();
  return tol.close(a.value(), b.value());
}

int sign_with_tol(const Scalar& s, const Tolerance& tol) {
  if (s.exact()) return s.sign();
  if (std::fabs(s.value()) <= tol.abs) return 0;
  return s.sign();
}

bool rationalize(double x, long max_den, mpq_class& out) {
  if (!std::isfinite(x)) return false;
  // Continued-fraction convergents p/q with q bounded by max_den. The
  // 1e14 guard keeps every intermediate below 2^53, so the overflow
  // check in double arithmetic is itself exact.
  const double limit = 1e14;
  double v = x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(v);
    if (std::fabs(fl) > limit) break;
    if (std::fabs(fl) * std::fabs(static_cast<double>(p1)) +
            std::fabs(static_cast<double>(p0)) > limit)
      break;
    if (std::fabs(fl) * static_cast<double>(q1) + static_cast<double>(q0) > limit) break;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0;
    long q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = v - fl;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  if (q1 <= 0) return false;
  out = mpq_class(p1, q1);
  out.canonicalize();
  return true;
}

}  // namespace drgtight
