#ifndef POLYMOM_MOMENTS_HPP
#define POLYMOM_MOMENTS_HPP

#include <algorithm>
#include <vector>

#include "polymom/polynomial.hpp"
#include "polymom/vertex_config.hpp"

namespace polymom {

// Normalized moment nu_k = C(k,2) * m_{k-2} in closed form:
//   nu_k = (i/4) * sum_j (zbar_{j+1} - zbar_j)(z_j^{k-1} + z_j^{k-2} z_{j+1} + ... + z_{j+1}^{k-1})
// with indices mod n. The edge order (zbar_{j+1} - zbar_j) makes nu_2 of a
// counterclockwise real polygon equal to +signed area; the summed-power form
// never divides, so repeated vertices are fine. The anti flag swaps the roles
// of the z and zbar tuples (which negates nu_2: the two coordinate tuples
// enter antisymmetrically).
template <class S>
S nu(const VertexConfig<S>& cfg, int k, bool anti = false) {
  using Ops = ScalarOps<S>;
  if (k < 2) return Ops::from_int(0);
  const std::vector<S>& Z = anti ? cfg.zbar : cfg.z;
  const std::vector<S>& Zb = anti ? cfg.z : cfg.zbar;
  const int n = cfg.n();
  S acc = Ops::from_int(0);
  for (int j = 0; j < n; ++j) {
    int t = (j + 1) % n;
    const S& u = Z[static_cast<size_t>(j)];
    const S& v = Z[static_cast<size_t>(t)];
    // sum_{a=0}^{k-1} u^{k-1-a} v^a
    S power_sum = Ops::from_int(0);
    S up = Ops::from_int(1);
    std::vector<S> vp(static_cast<size_t>(k), Ops::from_int(1));
    for (int a = 1; a < k; ++a) vp[static_cast<size_t>(a)] = vp[static_cast<size_t>(a - 1)] * v;
    for (int a = k - 1; a >= 0; --a) {
      power_sum += up * vp[static_cast<size_t>(a)];
      up = up * u;
    }
    acc += (Zb[static_cast<size_t>(t)] - Zb[static_cast<size_t>(j)]) * power_sum;
  }
  return (Ops::make(0, 1) / Ops::from_int(4)) * acc;
}

// nu_2 .. nu_kmax and the anti-harmonic row, index k stored at k-2.
template <class S>
struct MomentTable {
  int n = 0;
  int kmax = 0;
  std::vector<S> nu, nubar;

  const S& at(int k) const { return nu[static_cast<size_t>(k - 2)]; }
  const S& at_bar(int k) const { return nubar[static_cast<size_t>(k - 2)]; }
};

template <class S>
MomentTable<S> moment_table(const VertexConfig<S>& cfg, int kmax) {
  if (kmax < 2) raise(errc::invalid_input, "moment table needs kmax >= 2");
  MomentTable<S> t;
  t.n = cfg.n();
  t.kmax = kmax;
  for (int k = 2; k <= kmax; ++k) {
    t.nu.push_back(nu(cfg, k, false));
    t.nubar.push_back(nu(cfg, k, true));
  }
  return t;
}

template <class S>
struct SymFuncs {
  std::vector<S> e;  // e[0]=1, e[k]; zero beyond n
  std::vector<S> h;  // h[0]=1, h[k]
};

// Elementary e_k by incremental product expansion, complete h_k via the
// standard relation sum_m (-1)^m e_m h_{k-m} = 0.
template <class S>
SymFuncs<S> sym_funcs(const std::vector<S>& values, int upto) {
  using Ops = ScalarOps<S>;
  if (upto < 1) raise(errc::invalid_input, "sym_funcs needs upto >= 1");
  SymFuncs<S> sf;
  sf.e.assign(static_cast<size_t>(upto) + 1, Ops::from_int(0));
  sf.e[0] = Ops::from_int(1);
  size_t filled = 0;
  for (const S& v : values) {
    filled = std::min<size_t>(filled + 1, static_cast<size_t>(upto));
    for (size_t k = filled; k >= 1; --k) sf.e[k] += v * sf.e[k - 1];
  }
  sf.h.assign(static_cast<size_t>(upto) + 1, Ops::from_int(0));
  sf.h[0] = Ops::from_int(1);
  for (int k = 1; k <= upto; ++k) {
    S acc = Ops::from_int(0);
    for (int m = 1; m <= k; ++m) {
      const S& em = sf.e[static_cast<size_t>(m)];
      if (Ops::is_zero(em)) continue;
      S term = em * sf.h[static_cast<size_t>(k - m)];
      acc += (m % 2 == 1) ? term : -term;
    }
    sf.h[static_cast<size_t>(k)] = acc;
  }
  return sf;
}

// nu_2 of the (z_i, z_j, z_k) sub-triangle; the building block of the
// Q-coefficient decomposition.
template <class S>
S triple_area_form(const VertexConfig<S>& cfg, int i, int j, int k) {
  return nu(subtriangle(cfg, i, j, k), 2);
}

namespace detail {

template <class S>
bool near_zero(const S& x, double scale) {
  if constexpr (ScalarOps<S>::exact)
    return ScalarOps<S>::is_zero(x);
  else
    return ScalarOps<S>::abs_approx(x) <= 1e-9 * scale;
}

}  // namespace detail

// Numerator of the moment generating function: the unique polynomial of degree
// <= n-3 with sum_j nu_{j+2} w^j = AD(w) / prod_j (1 - z_j w). Computed by
// multiplying the truncated series by the vertex polynomial; the coefficients
// of degree n-2 .. n+3 must vanish (the buffer witnesses the tail), otherwise
// the input moments are inconsistent. The constant coefficient equals nu_2
// (equivalently, the top coefficient once the variable is reversed), and the
// coefficient at w^m is (-1)^m Q_m.
template <class S>
UniPoly<S> adjoint_numerator(const VertexConfig<S>& cfg) {
  using Ops = ScalarOps<S>;
  const int n = cfg.n();
  constexpr int kbuffer = 4;
  const int series_len = n + kbuffer;  // powers w^0 .. w^{n+kbuffer-1}

  std::vector<S> series(static_cast<size_t>(series_len));
  double scale = 1.0;
  for (int j = 0; j < series_len; ++j) {
    series[static_cast<size_t>(j)] = nu(cfg, j + 2);
    scale = std::max(scale, Ops::abs_approx(series[static_cast<size_t>(j)]));
  }
  UniPoly<S> vertex_poly{Ops::from_int(1)};
  for (const S& zj : cfg.z) vertex_poly = vertex_poly * UniPoly<S>{Ops::from_int(1), -zj};

  UniPoly<S> prod = UniPoly<S>(series) * vertex_poly;
  for (int d = std::max(0, n - 2); d <= series_len - 1; ++d)
    if (!detail::near_zero(prod.coeff(d), scale))
      raise(errc::degree_overflow, "adjoint numerator tail does not vanish");
  return prod.truncated(n - 3);
}

// Q_m = sum_{l=2}^{n-1} D_{1,l,l+1} e_m(z_2..z_n with z_l, z_{l+1} omitted),
// cross-checked against nu_j = sum_m (-1)^m Q_m h_{j-m-2}.
template <class S>
std::vector<S> q_coefficients(const VertexConfig<S>& cfg) {
  using Ops = ScalarOps<S>;
  const int n = cfg.n();
  std::vector<S> q(static_cast<size_t>(n - 2), Ops::from_int(0));  // m = 0..n-3
  for (int l = 1; l <= n - 2; ++l) {  // 0-based triangle (0, l, l+1)
    S d = triple_area_form(cfg, 0, l, l + 1);
    std::vector<S> rest;
    for (int t = 1; t < n; ++t)
      if (t != l && t != l + 1) rest.push_back(cfg.z[static_cast<size_t>(t)]);
    if (rest.empty()) {
      q[0] += d;
      continue;
    }
    SymFuncs<S> sf = sym_funcs(rest, std::max(1, n - 3));
    for (int m = 0; m <= n - 3; ++m) q[static_cast<size_t>(m)] += d * sf.e[static_cast<size_t>(m)];
  }

  // consistency: nu_j = sum_m (-1)^m Q_m h_{j-m-2} for j up to max(10, n+6)
  const int jmax = std::max(10, n + 6);
  SymFuncs<S> sf = sym_funcs(cfg.z, jmax);
  double scale = 1.0;
  if constexpr (!Ops::exact)
    for (const S& v : q) scale = std::max(scale, Ops::abs_approx(v));
  for (int j = 2; j <= jmax; ++j) {
    S rhs = Ops::from_int(0);
    for (int m = 0; m <= n - 3; ++m) {
      int hidx = j - m - 2;
      if (hidx < 0) continue;
      S term = q[static_cast<size_t>(m)] * sf.h[static_cast<size_t>(hidx)];
      rhs += (m % 2 == 0) ? term : -term;
    }
    if (!detail::near_zero(nu(cfg, j) - rhs, scale))
      raise(errc::consistency_failure, "Q coefficients fail the h-expansion cross-check");
  }
  return q;
}

// Recurrence nu_{k+2+n} - e_1 nu_{k+1+n} + ... + (-1)^n e_n nu_{k+2} = 0,
// valid for k >= -2 (indices below 2 read as zero).
// `e` holds e_1..e_n of the z-values.
template <class S>
void recurrence_check_sequence(const MomentTable<S>& table, const std::vector<S>& e, bool anti) {
  using Ops = ScalarOps<S>;
  const int n = table.n;
  if (static_cast<int>(e.size()) != n) raise(errc::invalid_input, "need e_1..e_n");
  const std::vector<S>& seq = anti ? table.nubar : table.nu;
  auto val = [&](int idx) {
    if (idx < 2) return Ops::from_int(0);
    return seq[static_cast<size_t>(idx - 2)];
  };
  double scale = 1.0;
  if constexpr (!Ops::exact)
    for (const S& v : seq) scale = std::max(scale, Ops::abs_approx(v));
  if (table.kmax < n) raise(errc::invalid_input, "table too short for any recurrence instance");
  for (int top = n; top <= table.kmax; ++top) {
    S acc = val(top);
    for (int m = 1; m <= n; ++m) {
      S term = e[static_cast<size_t>(m - 1)] * val(top - m);
      acc += (m % 2 == 1) ? -term : term;
    }
    if (!detail::near_zero(acc, scale))
      raise(errc::recurrence_violation,
            "recurrence fails at k = " + std::to_string(top - 2 - n));
  }
}

template <class S>
void recurrence_check(const MomentTable<S>& table, const std::vector<S>& e,
                      const std::vector<S>& ebar = {}) {
  recurrence_check_sequence(table, e, false);
  if (!ebar.empty()) recurrence_check_sequence(table, ebar, true);
}

// Extends both moment rows up to index K using the recurrence (the relation is
// monic in its top index, so no division occurs).
template <class S>
MomentTable<S> recurrence_extend(const MomentTable<S>& table, const std::vector<S>& e,
                                 const std::vector<S>& ebar, int K) {
  using Ops = ScalarOps<S>;
  const int n = table.n;
  if (static_cast<int>(e.size()) != n || static_cast<int>(ebar.size()) != n)
    raise(errc::invalid_input, "need e_1..e_n and ebar_1..ebar_n");
  if (table.kmax < n - 1) raise(errc::invalid_input, "table too short to extend");
  if (K <= table.kmax) return table;
  MomentTable<S> out = table;
  out.kmax = K;
  auto extend_row = [&](std::vector<S>& seq, const std::vector<S>& es) {
    auto val = [&](int idx) {
      if (idx < 2) return Ops::from_int(0);
      return seq[static_cast<size_t>(idx - 2)];
    };
    for (int top = table.kmax + 1; top <= K; ++top) {
      S acc = Ops::from_int(0);
      for (int m = 1; m <= n; ++m) {
        S term = es[static_cast<size_t>(m - 1)] * val(top - m);
        acc += (m % 2 == 1) ? term : -term;
      }
      seq.push_back(acc);
    }
  };
  extend_row(out.nu, e);
  extend_row(out.nubar, ebar);
  return out;
}

}  // namespace polymom

#endif
