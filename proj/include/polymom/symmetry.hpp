#ifndef POLYMOM_SYMMETRY_HPP
#define POLYMOM_SYMMETRY_HPP

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "polymom/linalg.hpp"
#include "polymom/moments.hpp"
#include "polymom/sampling.hpp"

namespace polymom {

// Matrix of the bilinear form nu_2 with z-variables relabeled by sigma and
// zbar-variables by tau: entries +1 at (sigma(j), tau(j+1)) and -1 at
// (sigma(j+1), tau(j)), j cyclic. Rows index the z side, columns the zbar
// side; as a matrix product this is P[sigma^-1] (P[C] - P[C^-1]) P[tau].
inline MatI action_matrix(const Perm& sigma, const Perm& tau) {
  const int n = sigma.size();
  if (tau.size() != n) raise(errc::invalid_input, "pair size mismatch");
  MatI m = MatI::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    int t = (j + 1) % n;
    m(sigma(j), tau(t)) += 1;
    m(sigma(t), tau(j)) -= 1;
  }
  return m;
}

struct ActionForm {
  MatI matrix;
  PermPair pair;
};

inline ActionForm action_form(const PermPair& pair) {
  return {action_matrix(pair.sigma, pair.tau), pair};
}

// Membership in the signed-permutation-matrix family: each row and column has
// exactly one +1 and one -1.
inline bool is_weight_matrix(const MatI& m) {
  for (int i = 0; i < m.rows(); ++i) {
    int rp = 0, rm = 0, cp = 0, cm = 0;
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 1) ++rp;
      else if (m(i, j) == -1) ++rm;
      else if (m(i, j) != 0) return false;
      if (m(j, i) == 1) ++cp;
      else if (m(j, i) == -1) ++cm;
    }
    if (rp != 1 || rm != 1 || cp != 1 || cm != 1) return false;
  }
  return true;
}

// (i/4) * sum_{a,b} z_a M[a][b] zbar_b; the scalar is pinned so the identity
// pair evaluates to nu_2.
template <class S>
S eval_form(const MatI& m, const VertexConfig<S>& cfg) {
  using Ops = ScalarOps<S>;
  const int n = cfg.n();
  if (m.rows() != n || m.cols() != n) raise(errc::invalid_input, "form size mismatch");
  S acc = Ops::from_int(0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = m(a, b);
      if (c == 0) continue;
      S term = cfg.z[static_cast<size_t>(a)] * cfg.zbar[static_cast<size_t>(b)];
      acc += (c == 1) ? term : (c == -1 ? -term : Ops::from_int(c) * term);
    }
  return (Ops::make(0, 1) / Ops::from_int(4)) * acc;
}

template <class S>
S eval_form(const PermPair& pair, const VertexConfig<S>& cfg) {
  return eval_form(action_matrix(pair.sigma, pair.tau), cfg);
}

// The stabilizer of nu_2 in S_n x S_n: cyclic {(C^k, C^k)} for odd n; for
// n = 2l the 2l^2 pairs (C1^u C2^v, C1^v C2^u) and (d1 C1^u C2^v, d2 C1^v C2^u)
// with C1, C2 the odd/even sub-cycles and d1, d2 the two edge reflections.
inline std::vector<PermPair> stabilizer(int n) {
  if (n < 3) raise(errc::invalid_input, "stabilizer needs n >= 3");
  std::vector<PermPair> out;
  Perm c = Perm::long_cycle(n);
  if (n % 2 == 1) {
    Perm p = Perm::identity(n);
    for (int k = 0; k < n; ++k) {
      out.push_back({p, p});
      p = compose(c, p);
    }
    return out;
  }
  const int l = n / 2;
  std::vector<int> c1(static_cast<size_t>(n)), c2(static_cast<size_t>(n)), d1(static_cast<size_t>(n)),
      d2(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    c1[static_cast<size_t>(i)] = (i % 2 == 0) ? (i + 2) % n : i;
    c2[static_cast<size_t>(i)] = (i % 2 == 1) ? (i + 2) % n : i;
    d1[static_cast<size_t>(i)] = (i % 2 == 0) ? i + 1 : i - 1;
    d2[static_cast<size_t>(i)] = (i % 2 == 1) ? (i + 1) % n : (i + n - 1) % n;
  }
  Perm C1{c1}, C2{c2}, D1{d1}, D2{d2};
  auto power = [&](const Perm& p, int k) {
    Perm r = Perm::identity(n);
    for (int t = 0; t < k; ++t) r = compose(p, r);
    return r;
  };
  for (int u = 0; u < l; ++u)
    for (int v = 0; v < l; ++v) {
      Perm suv = compose(power(C1, u), power(C2, v));
      Perm svu = compose(power(C1, v), power(C2, u));
      out.push_back({suv, svu});
      out.push_back({compose(D1, suv), compose(D2, svu)});
    }
  return out;
}

namespace detail {

inline std::string matrix_key(const MatI& m) {
  std::string key;
  key.reserve(static_cast<size_t>(2 * m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    int plus = -1, minus = -1;
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 1) plus = j;
      else if (m(i, j) == -1) minus = j;
    }
    key.push_back(static_cast<char>('0' + plus));
    key.push_back(static_cast<char>('0' + minus));
  }
  return key;
}

}  // namespace detail

struct OrbitData {
  std::vector<PermPair> coset_reps;  // one pair per distinct action matrix
  long d = 0;                        // orbit degree d_n
  long total_pairs = 0;              // (n!)^2
  long identity_class_size = 0;      // pairs whose matrix equals the identity form
};

// Groups all (sigma,tau) by exact matrix equality; deterministic encounter
// order (lexicographic one-line sigma outer, tau inner). The default cap keeps
// the (n!)^2 enumeration at or below 518400 pairs; raise it knowingly.
inline OrbitData orbit_data(int n, int n_cap = 6) {
  if (n < 3 || n > n_cap) raise(errc::invalid_input, "orbit enumeration needs 3 <= n <= cap");
  OrbitData data;
  std::vector<Perm> perms = all_permutations(n);
  std::unordered_map<std::string, long> classes;
  std::string id_key = detail::matrix_key(action_matrix(Perm::identity(n), Perm::identity(n)));
  for (const Perm& sigma : perms)
    for (const Perm& tau : perms) {
      std::string key = detail::matrix_key(action_matrix(sigma, tau));
      auto [it, fresh] = classes.try_emplace(std::move(key), 0);
      ++it->second;
      if (fresh) data.coset_reps.push_back({sigma, tau});
      ++data.total_pairs;
    }
  data.d = static_cast<long>(classes.size());
  data.identity_class_size = classes.at(id_key);
  return data;
}

// All pairs fixing the identity form, by exhaustive matrix equality.
inline std::vector<PermPair> stabilizer_exhaustive(int n) {
  std::vector<PermPair> out;
  std::vector<Perm> perms = all_permutations(n);
  std::string id_key = detail::matrix_key(action_matrix(Perm::identity(n), Perm::identity(n)));
  for (const Perm& sigma : perms)
    for (const Perm& tau : perms)
      if (detail::matrix_key(action_matrix(sigma, tau)) == id_key) out.push_back({sigma, tau});
  return out;
}

// P(t) = prod over coset representatives (t - value of the form). With
// require_simple the orbit values must be pairwise distinct (exactly in exact
// mode, separation > 1e-9 in float mode), else NonGenericConfig. The default
// cap bounds the expansion at degree 2880; raise it knowingly.
template <class S>
UniPoly<S> minimal_poly(const VertexConfig<S>& cfg, bool require_simple = true, int n_cap = 5) {
  using Ops = ScalarOps<S>;
  const int n = cfg.n();
  if (n > n_cap) raise(errc::invalid_input, "minimal_poly needs n <= cap");
  OrbitData orbits = orbit_data(n, std::max(n_cap, 6));
  std::vector<S> values;
  values.reserve(static_cast<size_t>(orbits.d));
  for (const PermPair& rep : orbits.coset_reps) values.push_back(eval_form(rep, cfg));

  if (require_simple) {
    if constexpr (Ops::exact) {
      std::map<std::pair<std::string, std::string>, int> seen;
      for (const S& v : values) {
        auto key = std::make_pair(Ops::re(v).str(), Ops::im(v).str());
        if (seen[key]++) raise(errc::non_generic_config, "orbit values collide");
      }
    } else {
      std::vector<ApproxComplex> vals;
      for (const S& v : values) vals.push_back(Ops::to_c(v));
      for (size_t i = 0; i < vals.size(); ++i)
        for (size_t j = i + 1; j < vals.size(); ++j)
          if (std::abs(vals[i] - vals[j]) < 1e-9)
            raise(errc::non_generic_config, "orbit values collide within 1e-9");
    }
  }
  return UniPoly<S>::from_roots(values);
}

// rank of the vectorized coset-representative matrices; equals dim of the
// span of all forms since representatives realize every distinct matrix.
inline int span_rank(int n) {
  OrbitData orbits = orbit_data(n);
  RowBasis<Rational> basis(n * n);
  for (const PermPair& rep : orbits.coset_reps) {
    MatI m = action_matrix(rep.sigma, rep.tau);
    std::vector<Rational> row;
    row.reserve(static_cast<size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) row.emplace_back(m(i, j));
    basis.insert(std::move(row));
  }
  return basis.rank();
}

// phi_ij = (z_i - z_n)(zbar_j - zbar_n), 1 <= i,j <= n-1: entries +1 at
// (i,j),(n,n) and -1 at (i,n),(n,j).
inline MatI phi_matrix(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n - 1 || j > n - 1) raise(errc::invalid_input, "phi index range");
  MatI m = MatI::Zero(n, n);
  m(i - 1, j - 1) = 1;
  m(n - 1, n - 1) = 1;
  m(i - 1, n - 1) = -1;
  m(n - 1, j - 1) = -1;
  return m;
}

template <class S>
S phi_value(const VertexConfig<S>& cfg, int i, int j) {
  const int n = cfg.n();
  return (cfg.z[static_cast<size_t>(i - 1)] - cfg.z[static_cast<size_t>(n - 1)]) *
         (cfg.zbar[static_cast<size_t>(j - 1)] - cfg.zbar[static_cast<size_t>(n - 1)]);
}

// The four pairs of rho_ij = 1/2 (x_{(1i)(1n),(1j)(2,n-1)(2n)}
//   - x_{(1i),(1j)(2,n-1)(2n)} + x_{(1i)(1n),(1j)(2n)} - x_{(1i),(1j)(2n)}).
inline std::array<PermPair, 4> rho_pairs(int i, int j, int n) {
  if (n < 4) raise(errc::invalid_input, "rho needs n >= 4");
  auto transposition = [&](int a, int b) {
    if (a == b) return Perm::identity(n);
    std::vector<int> img(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) img[static_cast<size_t>(t)] = t;
    std::swap(img[static_cast<size_t>(a - 1)], img[static_cast<size_t>(b - 1)]);
    return Perm(std::move(img));
  };
  Perm s_short = transposition(1, i);
  Perm s_full = compose(s_short, transposition(1, n));
  Perm t_short = compose(transposition(1, j), transposition(2, n));
  Perm t_full = compose(transposition(1, j), compose(transposition(2, n - 1), transposition(2, n)));
  return {PermPair{s_full, t_full}, PermPair{s_short, t_full}, PermPair{s_full, t_short},
          PermPair{s_short, t_short}};
}

// Verifies Theta(rho_ij) = phi_ij both as matrices and as values at cfg (with
// the i/4 normalization inherited from eval_form).
template <class S>
bool rho_check(int i, int j, int n, const VertexConfig<S>& cfg) {
  using Ops = ScalarOps<S>;
  auto pairs = rho_pairs(i, j, n);
  MatI combo = action_matrix(pairs[0].sigma, pairs[0].tau) -
               action_matrix(pairs[1].sigma, pairs[1].tau) +
               action_matrix(pairs[2].sigma, pairs[2].tau) -
               action_matrix(pairs[3].sigma, pairs[3].tau);
  if (combo != 2 * phi_matrix(i, j, n)) return false;
  S lhs = (eval_form(pairs[0], cfg) - eval_form(pairs[1], cfg) + eval_form(pairs[2], cfg) -
           eval_form(pairs[3], cfg)) /
          Ops::from_int(2);
  S rhs = (Ops::make(0, 1) / Ops::from_int(4)) * phi_value(cfg, i, j);
  return Ops::is_zero(lhs - rhs) ||
         (!Ops::exact && Ops::abs_approx(lhs - rhs) <= 1e-9 * (1.0 + Ops::abs_approx(rhs)));
}

// All 2x2-minor relations among the phi values at one configuration; exact.
template <class S>
bool segre_minors_vanish(const VertexConfig<S>& cfg) {
  using Ops = ScalarOps<S>;
  const int n = cfg.n();
  std::vector<S> phi(static_cast<size_t>(n * n), Ops::from_int(0));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) phi[static_cast<size_t>(i * n + j)] = phi_value(cfg, i, j);
  for (int i1 = 1; i1 <= n - 1; ++i1)
    for (int j1 = 1; j1 <= n - 1; ++j1)
      for (int i2 = 1; i2 <= n - 1; ++i2)
        for (int j2 = 1; j2 <= n - 1; ++j2) {
          S minor = phi[static_cast<size_t>(i1 * n + j1)] * phi[static_cast<size_t>(i2 * n + j2)] -
                    phi[static_cast<size_t>(i1 * n + j2)] * phi[static_cast<size_t>(i2 * n + j1)];
          if (!Ops::is_zero(minor)) return false;
        }
  return true;
}

struct GradedDimension {
  int n = 0, d = 0;
  int rank = 0;
  long segre_formula = 0;    // C(d+n-2, n-2)^2
  long printed_formula = 0;  // C(d+n-1, n-1)^2
};

struct RelationReport {
  int n = 0;
  long total_pairs = 0;
  int span_rank = 0;
  long kernel_dim = 0;
  long kernel_dim_expected = 0;
  int kernel_samples = 0;
  bool kernel_samples_ok = false;  // sampled kernel vectors satisfy the
                                   // coefficient-sum condition and sum to zero
  bool segre_ok = false;           // 2x2 minors of (phi_ij) vanish exactly
  std::vector<GradedDimension> graded;
  bool graded_matches_segre = false;
  bool graded_matches_printed = false;

  bool passed() const {
    if (kernel_dim != kernel_dim_expected || !kernel_samples_ok || !segre_ok) return false;
    return graded_matches_segre;
  }
};

namespace detail {

inline long binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (int t = 1; t <= b; ++t) r = r * (a - b + t) / t;
  return r;
}

// exponent vectors of total degree d over `vars` variables, lexicographic
inline void monomials_rec(int vars, int d, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == vars - 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = d; k >= 0; --k) {
    cur.push_back(k);
    monomials_rec(vars, d - k, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> monomials(int vars, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  monomials_rec(vars, d, cur, out);
  return out;
}

}  // namespace detail

// Linear, quadratic and graded-dimension relation checks for the algebra
// generated by the relabeled nu_2 forms.
inline RelationReport relation_checks(int n, std::uint64_t seed,
                                      const std::vector<int>& graded_degrees = {1, 2, 3}) {
  if (n > 5) raise(errc::invalid_input, "relation_checks supports n <= 5");
  RelationReport rep;
  rep.n = n;

  // (a) exact rank over all vectorized forms; kernel of the evaluation map
  std::vector<Perm> perms = all_permutations(n);
  RowBasis<Rational> basis(n * n);
  std::vector<PermPair> accepted;  // pairs backing the accepted basis rows
  auto vec_row = [&](const MatI& m) {
    std::vector<Rational> row;
    row.reserve(static_cast<size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) row.emplace_back(m(i, j));
    return row;
  };
  for (const Perm& sigma : perms)
    for (const Perm& tau : perms) {
      MatI m = action_matrix(sigma, tau);
      if (basis.insert(vec_row(m))) accepted.push_back({sigma, tau});
      ++rep.total_pairs;
    }
  rep.span_rank = basis.rank();
  rep.kernel_dim = rep.total_pairs - rep.span_rank;
  rep.kernel_dim_expected = rep.total_pairs - static_cast<long>(n - 1) * (n - 1);

  // spot-check 100 random kernel vectors: sparse random vector, corrected by
  // its expression over the accepted basis pairs
  Sampler smp(seed);
  rep.kernel_samples = 100;
  rep.kernel_samples_ok = true;
  auto pair_key = [](const PermPair& pp) {
    std::string k;
    for (int v : pp.sigma.images()) k.push_back(static_cast<char>('0' + v));
    k.push_back('|');
    for (int v : pp.tau.images()) k.push_back(static_cast<char>('0' + v));
    return k;
  };
  for (int trial = 0; trial < rep.kernel_samples && rep.kernel_samples_ok; ++trial) {
    std::vector<std::pair<PermPair, Rational>> terms;
    MatI image = MatI::Zero(n, n);
    int support = static_cast<int>(smp.uniform_int(3, 12));
    for (int t = 0; t < support; ++t) {
      const Perm& s = perms[static_cast<size_t>(smp.uniform_int(0, static_cast<long>(perms.size()) - 1))];
      const Perm& tau = perms[static_cast<size_t>(smp.uniform_int(0, static_cast<long>(perms.size()) - 1))];
      long c = smp.uniform_int(1, 3) * (smp.uniform_int(0, 1) ? 1 : -1);
      terms.push_back({{s, tau}, Rational(c)});
      image += static_cast<int>(c) * action_matrix(s, tau);
    }
    std::vector<Rational> combo;
    if (basis.insert(vec_row(image), &combo)) {
      rep.kernel_samples_ok = false;  // image must lie in the span
      break;
    }
    for (size_t b = 0; b < combo.size(); ++b)
      if (!combo[b].is_zero()) terms.push_back({accepted[b], -combo[b]});

    std::map<std::string, std::pair<PermPair, Rational>> support_map;
    for (auto& [pp, c] : terms) {
      auto [it, fresh] = support_map.try_emplace(pair_key(pp), std::make_pair(pp, Rational(0)));
      it->second.second += c;
    }

    // the combination must annihilate the form...
    std::vector<Rational> acc(static_cast<size_t>(n * n));
    for (auto& [key, term] : support_map) {
      if (term.second.is_zero()) continue;
      MatI m = action_matrix(term.first.sigma, term.first.tau);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          acc[static_cast<size_t>(i * n + j)] += term.second * Rational(m(i, j));
    }
    bool ok = true;
    for (const Rational& v : acc) ok = ok && v.is_zero();

    // ...and satisfy the coefficient-sum condition: for all (i,j), the
    // weights with sigma^-1(j) = tau^-1(i)+1 balance those with
    // sigma^-1(j) = tau^-1(i)-1 (the inverse-permutation reading matches this
    // artifact's action convention).
    std::vector<std::pair<PermPair, Rational>> inv_support;
    for (auto& [key, term] : support_map)
      if (!term.second.is_zero())
        inv_support.push_back(
            {{term.first.sigma.inverse(), term.first.tau.inverse()}, term.second});
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        Rational up, down;
        for (auto& [inv_pair, c] : inv_support) {
          int sj = inv_pair.sigma(j), ti = inv_pair.tau(i);
          if (sj == (ti + 1) % n) up += c;
          if (sj == (ti + n - 1) % n) down += c;
        }
        ok = (up == down);
      }
    rep.kernel_samples_ok = ok;
  }

  // (b) Segre quadrics among the phi forms at 10 random configurations; the
  // phi values are evaluated through the bilinear-form matrices and checked
  // against the factored product on the way
  rep.segre_ok = true;
  for (int cfg_i = 0; cfg_i < 10 && rep.segre_ok; ++cfg_i) {
    VertexConfig<ExactComplex> cfg = smp.config(n, VertexMode::complexified, 10);
    std::vector<std::vector<ExactComplex>> phi(static_cast<size_t>(n),
                                               std::vector<ExactComplex>(static_cast<size_t>(n)));
    for (int i = 1; i <= n - 1 && rep.segre_ok; ++i)
      for (int j = 1; j <= n - 1 && rep.segre_ok; ++j) {
        MatI m = phi_matrix(i, j, n);
        ExactComplex via_matrix;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (m(a, b) != 0) {
              ExactComplex t = cfg.z[static_cast<size_t>(a)] * cfg.zbar[static_cast<size_t>(b)];
              via_matrix += (m(a, b) == 1) ? t : -t;
            }
        rep.segre_ok = (via_matrix == phi_value(cfg, i, j));
        phi[static_cast<size_t>(i)][static_cast<size_t>(j)] = via_matrix;
      }
    for (int i1 = 1; i1 <= n - 1 && rep.segre_ok; ++i1)
      for (int j1 = 1; j1 <= n - 1 && rep.segre_ok; ++j1)
        for (int i2 = 1; i2 <= n - 1 && rep.segre_ok; ++i2)
          for (int j2 = 1; j2 <= n - 1 && rep.segre_ok; ++j2) {
            ExactComplex minor = phi[static_cast<size_t>(i1)][static_cast<size_t>(j1)] *
                                     phi[static_cast<size_t>(i2)][static_cast<size_t>(j2)] -
                                 phi[static_cast<size_t>(i1)][static_cast<size_t>(j2)] *
                                     phi[static_cast<size_t>(i2)][static_cast<size_t>(j1)];
            rep.segre_ok = minor.is_zero();
          }
  }

  // (c) graded dimension rank oracle vs the two candidate formulas, measured
  // at rational points so the rank runs over the ground field
  rep.graded_matches_segre = true;
  rep.graded_matches_printed = true;
  for (int d : graded_degrees) {
    GradedDimension g;
    g.n = n;
    g.d = d;
    g.segre_formula = detail::binomial(d + n - 2, n - 2) * detail::binomial(d + n - 2, n - 2);
    g.printed_formula = detail::binomial(d + n - 1, n - 1) * detail::binomial(d + n - 1, n - 1);
    const int vars = (n - 1) * (n - 1);
    auto monos = detail::monomials(vars, d);
    long points = 2 * g.segre_formula + 4;
    RowBasis<Rational> rb(static_cast<int>(monos.size()));
    for (long p = 0; p < points; ++p) {
      VertexConfig<ExactComplex> cfg = smp.rational_config(n, 3);
      std::vector<Rational> vals;
      vals.reserve(static_cast<size_t>(vars));
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) vals.push_back(phi_value(cfg, i, j).re);
      std::vector<Rational> row;
      row.reserve(monos.size());
      for (const auto& expo : monos) {
        Rational m(1);
        for (int v = 0; v < vars; ++v)
          for (int t = 0; t < expo[static_cast<size_t>(v)]; ++t) m *= vals[static_cast<size_t>(v)];
        row.push_back(m);
      }
      rb.insert(std::move(row));
    }
    g.rank = rb.rank();
    rep.graded.push_back(g);
    rep.graded_matches_segre = rep.graded_matches_segre && (g.rank == g.segre_formula);
    rep.graded_matches_printed = rep.graded_matches_printed && (g.rank == g.printed_formula);
  }
  return rep;
}

}  // namespace polymom

#endif
