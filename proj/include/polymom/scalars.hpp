#ifndef POLYMOM_SCALARS_HPP
#define POLYMOM_SCALARS_HPP

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <ostream>

#include "polymom/rational.hpp"

namespace polymom {

// Complex number over exact rationals: the scalar of every zero-tolerance check.
struct ExactComplex {
  Rational re, im;

  ExactComplex() = default;
  ExactComplex(Rational r, Rational i = Rational()) : re(std::move(r)), im(std::move(i)) {}
  ExactComplex(long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  ExactComplex& operator+=(const ExactComplex& o) { re += o.re; im += o.im; return *this; }
  ExactComplex& operator-=(const ExactComplex& o) { re -= o.re; im -= o.im; return *this; }
  ExactComplex& operator*=(const ExactComplex& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  ExactComplex& operator/=(const ExactComplex& o) {
    if (o.is_zero()) raise(errc::invalid_input, "complex division by zero");
    Rational d = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

  friend ExactComplex conj(const ExactComplex& a) { return {a.re, -a.im}; }
  friend Rational real(const ExactComplex& a) { return a.re; }
  friend Rational imag(const ExactComplex& a) { return a.im; }
  friend Rational abs2(const ExactComplex& a) { return a.re * a.re + a.im * a.im; }

  friend std::ostream& operator<<(std::ostream& os, const ExactComplex& a) {
    return os << "(" << a.re << (a.im.sign() < 0 ? "" : "+") << a.im << "i)";
  }
};

using ApproxComplex = std::complex<double>;

// Uniform access to the scalar fields the library is templated over.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static constexpr bool exact = true;
  using Real = Rational;
  static Rational from_int(long v) { return Rational(v); }
  static Rational from_ratio(long p, long q) { return Rational(p, q); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational conj(const Rational& x) { return x; }
  static Real re(const Rational& x) { return x; }
  static Real im(const Rational&) { return Rational(0); }
  static double abs_approx(const Rational& x) { return std::abs(x.to_double()); }
  static ApproxComplex to_c(const Rational& x) { return {x.to_double(), 0.0}; }
};

template <>
struct ScalarOps<ExactComplex> {
  static constexpr bool exact = true;
  using Real = Rational;
  static ExactComplex make(long re, long im) { return {Rational(re), Rational(im)}; }
  static ExactComplex from_int(long v) { return ExactComplex(Rational(v)); }
  static ExactComplex from_ratio(long p, long q) { return ExactComplex(Rational(p, q)); }
  static bool is_zero(const ExactComplex& x) { return x.is_zero(); }
  static ExactComplex conj(const ExactComplex& x) { return {x.re, -x.im}; }
  static Real re(const ExactComplex& x) { return x.re; }
  static Real im(const ExactComplex& x) { return x.im; }
  static double abs_approx(const ExactComplex& x) {
    return std::hypot(x.re.to_double(), x.im.to_double());
  }
  static ApproxComplex to_c(const ExactComplex& x) {
    return {x.re.to_double(), x.im.to_double()};
  }
};

template <>
struct ScalarOps<ApproxComplex> {
  static constexpr bool exact = false;
  using Real = double;
  static ApproxComplex make(long re, long im) {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
  static ApproxComplex from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static ApproxComplex from_ratio(long p, long q) {
    return {static_cast<double>(p) / static_cast<double>(q), 0.0};
  }
  static bool is_zero(const ApproxComplex& x) { return x.real() == 0.0 && x.imag() == 0.0; }
  static ApproxComplex conj(const ApproxComplex& x) { return std::conj(x); }
  static Real re(const ApproxComplex& x) { return x.real(); }
  static Real im(const ApproxComplex& x) { return x.imag(); }
  static double abs_approx(const ApproxComplex& x) { return std::abs(x); }
  static ApproxComplex to_c(const ApproxComplex& x) { return x; }
};

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatX = Mat<ExactComplex>;
using MatC = Mat<ApproxComplex>;
using MatI = Eigen::MatrixXi;

}  // namespace polymom

namespace Eigen {

template <>
struct NumTraits<polymom::Rational> : GenericNumTraits<polymom::Rational> {
  typedef polymom::Rational Real;
  typedef polymom::Rational NonInteger;
  typedef polymom::Rational Nested;
  typedef polymom::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<polymom::ExactComplex> : GenericNumTraits<polymom::ExactComplex> {
  typedef polymom::Rational Real;
  typedef polymom::ExactComplex NonInteger;
  typedef polymom::ExactComplex Nested;
  typedef polymom::ExactComplex Literal;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif
