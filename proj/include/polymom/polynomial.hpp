#ifndef POLYMOM_POLYNOMIAL_HPP
#define POLYMOM_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "polymom/scalars.hpp"

namespace polymom {

// Dense univariate polynomial, coefficient index = degree, trailing zeros trimmed.
// degree() of the zero polynomial is -1.
template <class S>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const S& v) { return UniPoly(std::vector<S>{v}); }

  static UniPoly from_roots(const std::vector<S>& roots) {
    UniPoly p{ScalarOps<S>::from_int(1)};
    for (const S& r : roots) p = p * UniPoly{-r, ScalarOps<S>::from_int(1)};
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }

  S coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return ScalarOps<S>::from_int(0);
    return c_[static_cast<size_t>(i)];
  }
  S leading() const { return c_.empty() ? ScalarOps<S>::from_int(0) : c_.back(); }

  S eval(const S& x) const {
    S acc = ScalarOps<S>::from_int(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    std::vector<S> d = c_;
    for (S& v : d) v = v / c_.back();
    return UniPoly(std::move(d));
  }

  // Drops coefficients above degree `d`.
  UniPoly truncated(int d) const {
    if (d < 0) return {};
    std::vector<S> t(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), static_cast<size_t>(d) + 1));
    return UniPoly(std::move(t));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), ScalarOps<S>::from_int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), ScalarOps<S>::from_int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<S> r = a.c_;
    for (S& v : r) v = -v;
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, ScalarOps<S>::from_int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const S& s, const UniPoly& a) {
    std::vector<S> r = a.c_;
    for (S& v : r) v = s * v;
    return UniPoly(std::move(r));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && ScalarOps<S>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<S> c_;
};

template <class S>
S poly_eval(const UniPoly<S>& p, const S& x) {
  return p.eval(x);
}

// Lagrange interpolation through (xs[i], ys[i]); xs pairwise distinct.
template <class S>
UniPoly<S> lagrange_interpolate(const std::vector<S>& xs, const std::vector<S>& ys) {
  if (xs.size() != ys.size() || xs.empty()) raise(errc::invalid_input, "interpolation needs matching nonempty samples");
  UniPoly<S> acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    UniPoly<S> basis{ScalarOps<S>::from_int(1)};
    S denom = ScalarOps<S>::from_int(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly<S>{-xs[j], ScalarOps<S>::from_int(1)};
      denom = denom * (xs[i] - xs[j]);
    }
    acc = acc + (ys[i] / denom) * basis;
  }
  return acc;
}

}  // namespace polymom

#endif
