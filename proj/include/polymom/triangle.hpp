#ifndef POLYMOM_TRIANGLE_HPP
#define POLYMOM_TRIANGLE_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <set>

#include "polymom/roots.hpp"
#include "polymom/symmetry.hpp"

namespace polymom {

// Data of an n = 3 configuration: elementary symmetric values of both
// coordinate tuples, the diagonal pairing sum S_true = sum z_j zbar_j and the
// lowest moment M = nu_2. Construction checks 16 M^2 + det Omega(S_true) = 0.
template <class S>
struct TriangleData {
  VertexConfig<S> config;
  std::array<S, 3> e, ebar;
  S s_true;
  S m;
};

// omega = [[1,1,1],[z_1,z_2,z_3],[zbar_1,zbar_2,zbar_3]]; nu_2 = (i/4) det.
template <class S>
Mat<S> omega_matrix(const VertexConfig<S>& cfg) {
  using Ops = ScalarOps<S>;
  Mat<S> w(3, 3);
  for (int j = 0; j < 3; ++j) {
    w(0, j) = Ops::from_int(1);
    w(1, j) = cfg.z[static_cast<size_t>(j)];
    w(2, j) = cfg.zbar[static_cast<size_t>(j)];
  }
  return w;
}

// The quadratic R(S) = 16 M^2 + det Omega(S) in expanded form:
// -3 S^2 + 2 e1 ebar1 S + 16 M^2 + e1^2 ebar1^2 - 4 e1^2 ebar2 - 4 ebar1^2 e2 + 12 e2 ebar2.
template <class S>
UniPoly<S> r_poly_at(const std::array<S, 3>& e, const std::array<S, 3>& ebar, const S& m) {
  using Ops = ScalarOps<S>;
  S c2 = Ops::from_int(-3);
  S c1 = Ops::from_int(2) * e[0] * ebar[0];
  S c0 = Ops::from_int(16) * m * m + e[0] * e[0] * ebar[0] * ebar[0] -
         Ops::from_int(4) * e[0] * e[0] * ebar[1] - Ops::from_int(4) * ebar[0] * ebar[0] * e[1] +
         Ops::from_int(12) * e[1] * ebar[1];
  return UniPoly<S>{c0, c1, c2};
}

namespace detail {

// det of Omega(S) with S symbolic, by cofactor expansion over UniPoly entries.
template <class S>
UniPoly<S> omega_det_poly(const std::array<S, 3>& e, const std::array<S, 3>& ebar) {
  using Ops = ScalarOps<S>;
  using P = UniPoly<S>;
  P three = P::constant(Ops::from_int(3));
  P e1 = P::constant(e[0]), eb1 = P::constant(ebar[0]);
  P p2 = P::constant(e[0] * e[0] - Ops::from_int(2) * e[1]);
  P pb2 = P::constant(ebar[0] * ebar[0] - Ops::from_int(2) * ebar[1]);
  P s{Ops::from_int(0), Ops::from_int(1)};
  // | 3   e1   eb1 |
  // | e1  p2   S   |
  // | eb1 S    pb2 |
  return three * (p2 * pb2 - s * s) - e1 * (e1 * pb2 - s * eb1) + eb1 * (e1 * s - p2 * eb1);
}

}  // namespace detail

template <class S>
bool moments_near_zero(const S& v, const TriangleData<S>& td) {
  using Ops = ScalarOps<S>;
  if constexpr (Ops::exact) return Ops::is_zero(v);
  double scale = 1.0 + Ops::abs_approx(td.m) + Ops::abs_approx(td.s_true);
  return Ops::abs_approx(v) <= 1e-9 * scale * scale;
}

template <class S>
TriangleData<S> make_triangle_data(const VertexConfig<S>& cfg) {
  using Ops = ScalarOps<S>;
  if (cfg.n() != 3) raise(errc::invalid_input, "triangle data needs n = 3");
  TriangleData<S> td;
  td.config = cfg;
  SymFuncs<S> se = sym_funcs(cfg.z, 3), sb = sym_funcs(cfg.zbar, 3);
  for (int k = 0; k < 3; ++k) {
    td.e[static_cast<size_t>(k)] = se.e[static_cast<size_t>(k + 1)];
    td.ebar[static_cast<size_t>(k)] = sb.e[static_cast<size_t>(k + 1)];
  }
  td.s_true = Ops::from_int(0);
  for (int j = 0; j < 3; ++j)
    td.s_true += cfg.z[static_cast<size_t>(j)] * cfg.zbar[static_cast<size_t>(j)];
  td.m = nu(cfg, 2);
  S check = Ops::from_int(16) * td.m * td.m +
            detail::omega_det_poly(td.e, td.ebar).eval(td.s_true);
  if (!moments_near_zero(check, td))
    raise(errc::consistency_failure, "16 M^2 + det Omega(S_true) does not vanish");
  return td;
}

// R(S), cross-checked against the symbolic determinant of Omega(S).
template <class S>
UniPoly<S> r_poly(const TriangleData<S>& td) {
  using Ops = ScalarOps<S>;
  UniPoly<S> expanded = r_poly_at(td.e, td.ebar, td.m);
  UniPoly<S> via_det =
      UniPoly<S>::constant(Ops::from_int(16) * td.m * td.m) + detail::omega_det_poly(td.e, td.ebar);
  UniPoly<S> diff = expanded - via_det;
  for (int d = 0; d <= diff.degree(); ++d)
    if (!moments_near_zero(diff.coeff(d), td))
      raise(errc::consistency_failure, "R(S) expansion and det Omega(S) disagree");
  return expanded;
}

// Q(S) = prod over the six permutations of (S - z_1 zbar_{s(1)} - z_2 zbar_{s(2)} - z_3 zbar_{s(3)}).
template <class S>
UniPoly<S> q_poly(const TriangleData<S>& td) {
  using Ops = ScalarOps<S>;
  std::vector<S> roots;
  for (const Perm& s : all_permutations(3)) {
    S sum = Ops::from_int(0);
    for (int j = 0; j < 3; ++j)
      sum += td.config.z[static_cast<size_t>(j)] * td.config.zbar[static_cast<size_t>(s(j))];
    roots.push_back(sum);
  }
  return UniPoly<S>::from_roots(roots);
}

// L = Res_S(R, Q); vanishes identically on genuine triangle data because
// S_true is a shared root.
template <class S>
S sole_relation(const TriangleData<S>& td) {
  return sylvester_resultant(r_poly(td), q_poly(td));
}

template <class S>
struct LInM {
  UniPoly<S> poly;        // L as a polynomial in M, e and ebar held fixed
  double min_separation;  // smallest distance between the 12 orbit values
};

// Interpolates L(M) from 13 evaluations at symmetric nodes, asserts degree 12
// and that its roots are exactly the 12 orbit values of the lowest moment (up
// to the overall constant factor the resultant normalization contributes).
// Exact mode uses the integer nodes -6..6 and compares monic coefficients; the
// float path scales the nodes to the magnitude of the orbit values, without
// which the low-order coefficients drown in the node values.
template <class S>
LInM<S> l_in_m(const TriangleData<S>& td, double float_tol = 1e-8) {
  using Ops = ScalarOps<S>;

  OrbitData orbits = orbit_data(3);
  std::vector<S> values;
  for (const PermPair& rep : orbits.coset_reps) values.push_back(eval_form(rep, td.config));

  double min_sep = std::numeric_limits<double>::infinity();
  double value_scale = 0.0;
  for (size_t i = 0; i < values.size(); ++i) {
    value_scale = std::max(value_scale, std::abs(Ops::to_c(values[i])));
    for (size_t j = i + 1; j < values.size(); ++j)
      min_sep = std::min(min_sep, std::abs(Ops::to_c(values[i]) - Ops::to_c(values[j])));
  }

  std::vector<S> xs, ys;
  UniPoly<S> q = q_poly(td);
  for (int k = -6; k <= 6; ++k) {
    S mk;
    if constexpr (Ops::exact)
      mk = Ops::from_int(k);
    else
      mk = S(k * std::max(value_scale, 1e-100) / 6.0, 0.0);
    xs.push_back(mk);
    ys.push_back(sylvester_resultant(r_poly_at(td.e, td.ebar, mk), q));
  }
  UniPoly<S> L = lagrange_interpolate(xs, ys);
  if (L.degree() != 12) raise(errc::degree_mismatch, "L is not of degree 12 in M");

  if constexpr (Ops::exact) {
    if (L.monic() != UniPoly<S>::from_roots(values))
      raise(errc::root_mismatch, "roots of L(M) differ from the orbit values");
  } else {
    std::vector<ApproxComplex> roots = poly_roots(L.monic());
    std::vector<ApproxComplex> expect;
    for (const S& v : values) expect.push_back(Ops::to_c(v));
    if (!match_multisets(roots, expect, float_tol))
      raise(errc::root_mismatch, "roots of L(M) differ from the orbit values");
  }
  return {L, min_sep};
}

struct TwelveReport {
  int two_term_pass = 0;    // out of 6
  int three_term_pass = 0;  // out of 2
  bool quadratic_pass = false;
  int phi_pass = 0;  // out of 4
  bool all() const {
    return two_term_pass == 6 && three_term_pass == 2 && quadratic_pass && phi_pass == 4;
  }
};

// The linear, quadratic and phi-expression relations among the 12 orbit
// forms of a triangle, checked exactly at the given configuration.
template <class S>
TwelveReport twelve_relations(const VertexConfig<S>& cfg) {
  using Ops = ScalarOps<S>;
  if (cfg.n() != 3) raise(errc::invalid_input, "twelve_relations needs n = 3");
  TwelveReport rep;
  std::vector<Perm> taus = all_permutations(3);
  Perm id3 = Perm::identity(3);
  Perm t12 = Perm::from_cycles("(1,2)", 3);
  auto is_zero = [&](const S& v) {
    if constexpr (Ops::exact) return Ops::is_zero(v);
    else {
      double scale = 1.0;
      for (const S& z : cfg.z) scale = std::max(scale, ScalarOps<S>::abs_approx(z));
      for (const S& z : cfg.zbar) scale = std::max(scale, ScalarOps<S>::abs_approx(z));
      return Ops::abs_approx(v) <= 1e-9 * scale * scale;
    }
  };

  // six two-term relations: the (12)-row repeats the id-row with flipped sign
  for (const Perm& tau : taus) {
    S lhs = eval_form(PermPair{t12, compose(tau, t12)}, cfg) + eval_form(PermPair{id3, tau}, cfg);
    if (is_zero(lhs)) ++rep.two_term_pass;
  }

  // two three-term relations: each row sums to zero over the cyclic block
  std::vector<Perm> cyclic = {id3, Perm::from_cycles("(1,2,3)", 3), Perm::from_cycles("(1,3,2)", 3)};
  for (const Perm& sigma : {id3, t12}) {
    S acc = Ops::from_int(0);
    for (const Perm& tau : cyclic) acc += eval_form(PermPair{sigma, tau}, cfg);
    if (is_zero(acc)) ++rep.three_term_pass;
  }

  auto val = [&](const char* cyc) {
    Perm tau = std::string(cyc).empty() ? id3 : Perm::from_cycles(cyc, 3);
    return eval_form(PermPair{id3, tau}, cfg);
  };
  S v_id = eval_form(PermPair{id3, id3}, cfg);
  S v_123 = val("(1,2,3)");
  S v_12 = val("(1,2)");
  S v_23 = val("(2,3)");

  // quadratic relation between the two blocks
  S lhs = v_id * v_id + v_id * v_123 + v_123 * v_123;
  S rhs = v_12 * v_12 + v_12 * v_23 + v_23 * v_23;
  rep.quadratic_pass = is_zero(lhs - rhs);

  // the four phi expressions, with the i/4 normalization of eval_form
  S s = Ops::make(0, 1) / Ops::from_int(4);
  S third = Ops::from_int(1) / Ops::from_int(3);
  struct Combo {
    int i, j;
    long c_id, c_123, c_12, c_23;
  };
  const Combo combos[4] = {
      {1, 1, -1, -2, +1, -1},
      {1, 2, +1, -1, -1, -2},
      {2, 1, -2, -1, -1, -2},
      {2, 2, -1, -2, -2, -1},
  };
  for (const Combo& c : combos) {
    S combo = third * (Ops::from_int(c.c_id) * v_id + Ops::from_int(c.c_123) * v_123 +
                       Ops::from_int(c.c_12) * v_12 + Ops::from_int(c.c_23) * v_23);
    if (is_zero(combo - s * phi_value(cfg, c.i, c.j))) ++rep.phi_pass;
  }
  return rep;
}

// Signed relabeling of the six id-row forms: tau-th value maps to
// sign[tau] * value at perm[tau].
struct SignedMap {
  std::array<int, 6> perm;
  std::array<int, 6> sign;  // +1 / -1

  friend bool operator<(const SignedMap& a, const SignedMap& b) {
    if (a.perm != b.perm) return a.perm < b.perm;
    return a.sign < b.sign;
  }
  friend bool operator==(const SignedMap& a, const SignedMap& b) {
    return a.perm == b.perm && a.sign == b.sign;
  }
};

inline std::uint32_t signed_map_key(const SignedMap& g) {
  std::uint32_t key = 0;
  for (int t = 5; t >= 0; --t)
    key = key * 12 + static_cast<std::uint32_t>(g.perm[static_cast<size_t>(t)] * 2 +
                                                (g.sign[static_cast<size_t>(t)] < 0 ? 1 : 0));
  return key;
}

inline SignedMap signed_map_compose(const SignedMap& g, const SignedMap& h) {
  SignedMap r;
  for (int t = 0; t < 6; ++t) {
    r.perm[static_cast<size_t>(t)] = g.perm[static_cast<size_t>(h.perm[static_cast<size_t>(t)])];
    r.sign[static_cast<size_t>(t)] =
        h.sign[static_cast<size_t>(t)] * g.sign[static_cast<size_t>(h.perm[static_cast<size_t>(t)])];
  }
  return r;
}

struct Galois3Result {
  long order = 0;
  long plus_order = 0;
  long closure_size = 0;  // size of the group generated by `generators`
  std::vector<SignedMap> generators;
  std::vector<SignedMap> elements;  // every accepted candidate, sorted
};

// Enumerates all signed relabelings of the six id-row forms (720 * 64
// candidates); a candidate joins the group iff the relabeled three-term block
// relations and the quadratic relation still vanish identically, which is
// tested at five independent random rational configurations.
inline Galois3Result galois3(std::uint64_t seed = 42) {
  Sampler smp(seed);
  std::vector<Perm> taus = all_permutations(3);
  Perm id3 = Perm::identity(3);

  // lexicographic tau order: indices of the cyclic block {id, (123), (132)}
  // and the transposition block
  std::vector<int> a_block, t_block;
  for (size_t t = 0; t < taus.size(); ++t) {
    int parity = 0;
    const auto& img = taus[t].images();
    for (size_t x = 0; x < img.size(); ++x)
      for (size_t y = x + 1; y < img.size(); ++y)
        if (img[x] > img[y]) ++parity;
    (parity % 2 == 0 ? a_block : t_block).push_back(static_cast<int>(t));
  }

  constexpr int kConfigs = 5;
  std::array<std::array<ExactComplex, 6>, kConfigs> vals;
  for (int c = 0; c < kConfigs; ++c) {
    VertexConfig<ExactComplex> cfg = smp.config(3, VertexMode::complexified, 100);
    for (size_t t = 0; t < taus.size(); ++t)
      vals[static_cast<size_t>(c)][t] = eval_form(PermPair{id3, taus[t]}, cfg);
  }

  Galois3Result result;
  std::vector<SignedMap> accepted;
  for (const Perm& gperm : all_permutations(6)) {
    for (int bits = 0; bits < 64; ++bits) {
      SignedMap cand;
      for (int t = 0; t < 6; ++t) {
        cand.perm[static_cast<size_t>(t)] = gperm(t);
        cand.sign[static_cast<size_t>(t)] = (bits >> t) & 1 ? -1 : 1;
      }
      bool ok = true;
      for (int c = 0; c < kConfigs && ok; ++c) {
        const auto& v = vals[static_cast<size_t>(c)];
        auto image = [&](int t) {
          const ExactComplex& base = v[static_cast<size_t>(cand.perm[static_cast<size_t>(t)])];
          return cand.sign[static_cast<size_t>(t)] > 0 ? base : -base;
        };
        ExactComplex sa, st;
        for (int t : a_block) sa += image(t);
        for (int t : t_block) st += image(t);
        if (!sa.is_zero() || !st.is_zero()) {
          ok = false;
          break;
        }
        ExactComplex x = image(a_block[0]), y = image(a_block[1]);
        ExactComplex u = image(t_block[0]), w = image(t_block[1]);
        ExactComplex lhs = x * x + x * y + y * y;
        ExactComplex rhs = u * u + u * w + w * w;
        ok = (lhs == rhs);
      }
      if (!ok) continue;
      accepted.push_back(cand);
      bool preserves_block = true;
      for (int t : a_block) {
        bool in_a = false;
        for (int u : a_block) in_a = in_a || cand.perm[static_cast<size_t>(t)] == u;
        preserves_block = preserves_block && in_a;
      }
      if (preserves_block) ++result.plus_order;
    }
  }
  result.order = static_cast<long>(accepted.size());

  // greedy generating set with closure under composition
  std::sort(accepted.begin(), accepted.end());
  std::set<std::uint32_t> closure;
  SignedMap identity;
  for (int t = 0; t < 6; ++t) {
    identity.perm[static_cast<size_t>(t)] = t;
    identity.sign[static_cast<size_t>(t)] = 1;
  }
  std::vector<SignedMap> closure_list = {identity};
  closure.insert(signed_map_key(identity));
  auto close_over = [&](const std::vector<SignedMap>& gens) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<SignedMap> next;
      for (const SignedMap& a : closure_list)
        for (const SignedMap& g : gens) {
          SignedMap prod = signed_map_compose(g, a);
          if (closure.insert(signed_map_key(prod)).second) {
            next.push_back(prod);
            grew = true;
          }
        }
      closure_list.insert(closure_list.end(), next.begin(), next.end());
    }
  };
  for (const SignedMap& cand : accepted) {
    if (closure.count(signed_map_key(cand))) continue;
    result.generators.push_back(cand);
    close_over(result.generators);
  }
  result.closure_size = static_cast<long>(closure.size());
  result.elements = std::move(accepted);
  return result;
}

template <class S>
struct SimilarityReport {
  std::array<S, 3> vectors;
  S sum;
};

// For each cyclic relabeling of the conjugate points, the orientation-
// reversing similarity interpolating A_{t(1)}, A_{t(2)} at A_1, A_2 sends A_3
// to a companion point; the three companion-minus-target vectors sum to zero.
template <class S>
SimilarityReport<S> similarity_theorem(const S& a1, const S& a2, const S& a3) {
  using Ops = ScalarOps<S>;
  std::array<S, 3> a = {a1, a2, a3};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (Ops::is_zero(a[static_cast<size_t>(i)] - a[static_cast<size_t>(j)]))
        raise(errc::degenerate_triangle, "two vertices coincide");

  SimilarityReport<S> rep;
  rep.sum = Ops::from_int(0);
  const S c1 = Ops::conj(a1), c2 = Ops::conj(a2), c3 = Ops::conj(a3);
  const std::array<std::array<int, 3>, 3> labelings = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  for (const auto& lab : labelings) {
    S alpha = (a[static_cast<size_t>(lab[0])] - a[static_cast<size_t>(lab[1])]) / (c1 - c2);
    S beta = a[static_cast<size_t>(lab[0])] - alpha * c1;
    S w = alpha * c3 + beta;
    rep.vectors[static_cast<size_t>(lab[2])] = w - a[static_cast<size_t>(lab[2])];
    rep.sum += rep.vectors[static_cast<size_t>(lab[2])];
  }
  return rep;
}

}  // namespace polymom

#endif
