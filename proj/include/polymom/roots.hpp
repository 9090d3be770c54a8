#ifndef POLYMOM_ROOTS_HPP
#define POLYMOM_ROOTS_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "polymom/polynomial.hpp"

namespace polymom {

namespace detail {

inline ApproxComplex horner2(const std::vector<ApproxComplex>& c, ApproxComplex x,
                             ApproxComplex* deriv) {
  ApproxComplex p = 0.0, d = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * x + p;
    p = p * x + *it;
  }
  *deriv = d;
  return p;
}

}  // namespace detail

struct RootOptions {
  int max_sweeps = 200;       // Aberth sweeps before giving up
  int polish_steps = 5;       // Newton steps per root after convergence
  double residual_tol = 1e-10;
};

// All roots with multiplicity via Aberth-Ehrlich simultaneous iteration from a
// perturbed circle, then Newton polish. Residual criterion:
// max |p(w)| / (1+|w|)^deg <= residual_tol on the input polynomial.
inline std::vector<ApproxComplex> poly_roots(const UniPoly<ApproxComplex>& p,
                                             const RootOptions& opt = {}) {
  const int deg = p.degree();
  if (deg < 1) raise(errc::degenerate_input, "poly_roots needs degree >= 1");
  if (!(std::abs(p.leading()) > 0.0)) raise(errc::degenerate_input, "zero leading coefficient");

  std::vector<ApproxComplex> c = p.coeffs();
  std::vector<ApproxComplex> roots;

  // Exact zeros at the origin come off first; Aberth clusters converge slowly.
  size_t shift = 0;
  while (shift < c.size() - 1 && c[shift] == ApproxComplex(0.0)) ++shift;
  for (size_t i = 0; i < shift; ++i) roots.push_back(0.0);
  if (shift) c.erase(c.begin(), c.begin() + static_cast<long>(shift));

  const int d = static_cast<int>(c.size()) - 1;
  if (d >= 1) {
    std::vector<ApproxComplex> m(c);
    for (auto& v : m) v /= c.back();  // monic copy for iteration

    // Fujiwara bound: all roots lie within 2 * max_k |a_{d-k}|^{1/k}
    double radius = 0.0;
    for (int k = 1; k <= d; ++k) {
      double a = std::abs(m[static_cast<size_t>(d - k)]);
      if (a > 0.0) radius = std::max(radius, std::pow(a, 1.0 / k));
    }
    radius = 2.0 * radius + 1e-3;

    std::vector<ApproxComplex> w(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
      double th = 2.0 * M_PI * (k + 0.25) / d + 1e-3 * k;
      w[static_cast<size_t>(k)] = std::polar(radius * (1.0 + 1e-4 * k), th);
    }

    auto residual_ok = [&](void) {
      for (int k = 0; k < d; ++k) {
        ApproxComplex dp;
        ApproxComplex val = detail::horner2(c, w[static_cast<size_t>(k)], &dp);
        double denom = std::pow(1.0 + std::abs(w[static_cast<size_t>(k)]), d);
        if (std::abs(val) / denom > opt.residual_tol) return false;
      }
      return true;
    };

    bool converged = false;
    for (int sweep = 0; sweep < opt.max_sweeps && !converged; ++sweep) {
      for (int k = 0; k < d; ++k) {
        ApproxComplex dp;
        ApproxComplex val = detail::horner2(m, w[static_cast<size_t>(k)], &dp);
        if (val == ApproxComplex(0.0)) continue;
        if (dp == ApproxComplex(0.0)) {
          w[static_cast<size_t>(k)] += ApproxComplex(1e-8, 1e-8);
          continue;
        }
        ApproxComplex q = val / dp;
        ApproxComplex s = 0.0;
        for (int j = 0; j < d; ++j)
          if (j != k) s += 1.0 / (w[static_cast<size_t>(k)] - w[static_cast<size_t>(j)]);
        ApproxComplex denom = 1.0 - q * s;
        w[static_cast<size_t>(k)] -= (std::abs(denom) < 1e-300) ? q : q / denom;
      }
      converged = residual_ok();
    }
    if (!converged && !residual_ok())
      raise(errc::no_convergence, "root residual bound unmet after iteration cap");

    for (int k = 0; k < d; ++k) {
      for (int step = 0; step < opt.polish_steps; ++step) {
        ApproxComplex dp;
        ApproxComplex val = detail::horner2(c, w[static_cast<size_t>(k)], &dp);
        if (dp == ApproxComplex(0.0)) break;
        ApproxComplex delta = val / dp;
        if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag())) break;
        w[static_cast<size_t>(k)] -= delta;
      }
      roots.push_back(w[static_cast<size_t>(k)]);
    }
  }
  return roots;
}

// Greedy multiset match: true iff `a` and `b` pair up within `tol` per element.
inline bool match_multisets(std::vector<ApproxComplex> a, std::vector<ApproxComplex> b,
                            double tol) {
  if (a.size() != b.size()) return false;
  for (const ApproxComplex& x : a) {
    double best = tol;
    size_t best_j = b.size();
    for (size_t j = 0; j < b.size(); ++j) {
      double dist = std::abs(x - b[j]);
      if (dist <= best) {
        best = dist;
        best_j = j;
      }
    }
    if (best_j == b.size()) return false;
    b.erase(b.begin() + static_cast<long>(best_j));
  }
  return true;
}

}  // namespace polymom

#endif
