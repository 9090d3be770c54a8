#ifndef POLYMOM_INVERSE_HPP
#define POLYMOM_INVERSE_HPP

#include <algorithm>
#include <limits>
#include <vector>

#include "polymom/linalg.hpp"
#include "polymom/moments.hpp"
#include "polymom/roots.hpp"

namespace polymom {

// Toeplitz system U * E = V with U[r][c] = nu_{n-1+r-c} (nu_0 = nu_1 = 0),
// V = (nu_n, ..., nu_{2n-1}), E = (e_1, -e_2, ..., (-1)^{n+1} e_n).
template <class S>
struct ToeplitzSystem {
  int n = 0;
  Mat<S> U;
  Vec<S> V;
  S dd;  // det U, the moment discriminant
};

template <class S>
ToeplitzSystem<S> build_toeplitz(const MomentTable<S>& table, int n) {
  using Ops = ScalarOps<S>;
  if (table.kmax < 2 * n - 1) raise(errc::insufficient_moments, "need nu_2..nu_{2n-1}");
  ToeplitzSystem<S> sys;
  sys.n = n;
  sys.U.resize(n, n);
  sys.V.resize(n);
  auto val = [&](int idx) {
    if (idx < 2) return Ops::from_int(0);
    return table.at(idx);
  };
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) sys.U(r, c) = val(n - 1 + r - c);
    sys.V(r) = val(n + r);
  }
  sys.dd = det<S>(sys.U);
  return sys;
}

// Solves for e_1..e_n; the configuration lies on the dd = 0 divisor otherwise.
template <class S>
std::vector<S> solve_elementary(const ToeplitzSystem<S>& sys) {
  using Ops = ScalarOps<S>;
  if constexpr (Ops::exact) {
    if (Ops::is_zero(sys.dd))
      raise(errc::singular_moment_matrix, "moment matrix determinant vanishes");
  }
  Vec<S> x;
  try {
    x = solve<S>(sys.U, sys.V);
  } catch (const Error& e) {
    if (e.code() == errc::singular_matrix)
      raise(errc::singular_moment_matrix, "moment matrix numerically singular");
    throw;
  }
  std::vector<S> e(static_cast<size_t>(sys.n));
  for (int m = 1; m <= sys.n; ++m) {
    S v = x(m - 1);
    e[static_cast<size_t>(m - 1)] = (m % 2 == 1) ? v : -v;
  }
  return e;
}

// Roots (with multiplicity) of t^n - e_1 t^{n-1} + ... + (-1)^n e_n.
template <class S>
std::vector<ApproxComplex> vertex_multiset(const std::vector<S>& e) {
  using Ops = ScalarOps<S>;
  const int n = static_cast<int>(e.size());
  std::vector<ApproxComplex> coeffs(static_cast<size_t>(n) + 1);
  coeffs[static_cast<size_t>(n)] = 1.0;
  for (int m = 1; m <= n; ++m) {
    ApproxComplex v = Ops::to_c(e[static_cast<size_t>(m - 1)]);
    coeffs[static_cast<size_t>(n - m)] = (m % 2 == 1) ? -v : v;
  }
  return poly_roots(UniPoly<ApproxComplex>(std::move(coeffs)));
}

template <class S>
struct Reconstruction {
  VertexConfig<ApproxComplex> config;
  double residual = 0.0;  // max relative moment mismatch
};

namespace detail {

inline VertexConfig<ApproxComplex> canonical_rotation(VertexConfig<ApproxComplex> cfg) {
  const int n = cfg.n();
  int best = 0;
  auto less_at = [&](int a, int b) {
    const auto& za = cfg.z[static_cast<size_t>(a)];
    const auto& zb = cfg.z[static_cast<size_t>(b)];
    if (za.real() != zb.real()) return za.real() < zb.real();
    return za.imag() < zb.imag();
  };
  for (int i = 1; i < n; ++i)
    if (less_at(i, best)) best = i;
  std::rotate(cfg.z.begin(), cfg.z.begin() + best, cfg.z.end());
  std::rotate(cfg.zbar.begin(), cfg.zbar.begin() + best, cfg.zbar.end());
  return cfg;
}

}  // namespace detail

// Recovers a real polygon from nu_2..nu_{2n-1}: Toeplitz solve -> vertex
// multiset -> brute-force search over cyclic orderings (vertex 1 pinned) for
// the ordering whose recomputed moments match the input, relative max-norm
// tolerance `tol`. Returned polygon starts at the lexicographically smallest
// vertex. Runs in floating point: the vertex multiset comes from the numeric
// root finder.
template <class S>
Reconstruction<S> reconstruct_real(const MomentTable<S>& table, int n, double tol = 1e-8) {
  using Ops = ScalarOps<S>;
  if (n < 3 || n > 7) raise(errc::invalid_input, "reconstruction supports 3 <= n <= 7");
  if (table.kmax < 2 * n - 1) raise(errc::insufficient_moments, "need nu_2..nu_{2n-1}");

  ToeplitzSystem<S> sys = build_toeplitz(table, n);
  std::vector<S> e = solve_elementary(sys);
  std::vector<ApproxComplex> verts = vertex_multiset(e);

  std::vector<ApproxComplex> target;
  double target_scale = 0.0;
  for (int k = 2; k <= 2 * n - 1; ++k) {
    target.push_back(Ops::to_c(table.at(k)));
    target_scale = std::max(target_scale, std::abs(target.back()));
  }
  if (target_scale == 0.0) target_scale = 1.0;

  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;

  double best_residual = std::numeric_limits<double>::infinity();
  std::vector<int> best_order;
  do {
    std::vector<ApproxComplex> z;
    z.reserve(static_cast<size_t>(n));
    for (int idx : order) z.push_back(verts[static_cast<size_t>(idx)]);
    VertexConfig<ApproxComplex> cand = make_real_config(std::move(z));
    double res = 0.0;
    for (int k = 2; k <= 2 * n - 1 && res < best_residual; ++k)
      res = std::max(res, std::abs(nu(cand, k) - target[static_cast<size_t>(k - 2)]));
    if (res < best_residual) {
      best_residual = res;
      best_order = order;
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));

  best_residual /= target_scale;
  if (!(best_residual <= tol))
    raise(errc::no_matching_order, "no cyclic ordering reproduces the input moments");

  std::vector<ApproxComplex> z;
  for (int idx : best_order) z.push_back(verts[static_cast<size_t>(idx)]);
  Reconstruction<S> rec;
  rec.config = detail::canonical_rotation(make_real_config(std::move(z)));
  rec.residual = best_residual;
  return rec;
}

}  // namespace polymom

#endif
