#ifndef POLYMOM_RATIONAL_HPP
#define POLYMOM_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "polymom/errors.hpp"

namespace polymom {

// Arbitrary-precision rational, always reduced, denominator > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) {
    if (d == 0) raise(errc::invalid_input, "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p", "p/q" and "-p/q" in base 10.
  static Rational from_string(const std::string& s) {
    mpq_class v;
    if (s.empty() || mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
      raise(errc::invalid_input, "cannot parse rational '" + s + "'");
    if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0)
      raise(errc::invalid_input, "rational with zero denominator '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
  }

  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return mpz_cmp_ui(v_.get_den_mpz_t(), 1) == 0; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) raise(errc::invalid_input, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.v_; }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

}  // namespace polymom

#endif
