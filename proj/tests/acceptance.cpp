// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "helpers.hpp"
#include "polymom/triangle.hpp"

using namespace polymom;
using namespace polymom::testing;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" [exception: ") + e.what() + "]";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %2d: %s (%.1fs)%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              secs, note.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

VertexConfig<X> draw(Sampler& smp, int n, int i) {
  return smp.config(n, i % 2 == 0 ? VertexMode::real : VertexMode::complexified, 10);
}

}  // namespace

int main() {
  constexpr std::uint64_t kSeed = 20240901;

  criterion(1, "closed-form moments equal the integration oracle exactly", [] {
    Sampler smp(kSeed + 1);
    for (int n = 3; n <= 6; ++n) {
      Triangulation fan = fan_triangulation(n);
      for (int i = 0; i < 25; ++i) {
        VertexConfig<X> cfg = draw(smp, n, i);
        for (int k = 2; k <= 10; ++k) {
          X scale = ScalarOps<X>::from_ratio(2, static_cast<long>(k) * (k - 1));
          if (!(nu(cfg, k) * scale == polygon_moment_oracle(cfg, fan, k - 2))) return false;
          if (!(nu(cfg, k, true) * scale == polygon_moment_oracle(cfg, fan, k - 2, true)))
            return false;
        }
      }
    }
    return true;
  });

  criterion(2, "oracle moments agree across all triangulations", [] {
    Sampler smp(kSeed + 2);
    for (int n : {4, 5}) {
      auto tris = all_triangulations(n);
      if (static_cast<int>(tris.size()) != (n == 4 ? 2 : 5)) return false;
      for (int i = 0; i < 10; ++i) {
        VertexConfig<X> cfg = draw(smp, n, i);
        for (int k = 0; k <= 8; ++k) {
          X ref = polygon_moment_oracle(cfg, tris[0], k);
          for (size_t t = 1; t < tris.size(); ++t)
            if (!(polygon_moment_oracle(cfg, tris[t], k) == ref)) return false;
        }
      }
    }
    return true;
  });

  criterion(3, "moment recurrence holds exactly up to index 12", [] {
    Sampler smp(kSeed + 3);
    for (int n = 3; n <= 6; ++n)
      for (int i = 0; i < 25; ++i) {
        VertexConfig<X> cfg = draw(smp, n, i);
        MomentTable<X> table = moment_table(cfg, 12);
        SymFuncs<X> se = sym_funcs(cfg.z, n), sb = sym_funcs(cfg.zbar, n);
        std::vector<X> e(se.e.begin() + 1, se.e.begin() + 1 + n);
        std::vector<X> eb(sb.e.begin() + 1, sb.e.begin() + 1 + n);
        try {
          recurrence_check(table, e, eb);
        } catch (const Error&) {
          return false;
        }
      }
    return true;
  });

  // The nu_2 coefficient of the adjoint numerator is its constant term under
  // the generating-function convention used here (the top term once the
  // variable is reversed); at n = 3 the two coincide.
  criterion(4, "adjoint numerator: degree <= n-3, zero tail, nu_2 coefficient", [] {
    Sampler smp(kSeed + 4);
    for (int n = 3; n <= 6; ++n)
      for (int i = 0; i < 25; ++i) {
        VertexConfig<X> cfg = draw(smp, n, i);
        try {
          UniPoly<X> ad = adjoint_numerator(cfg);  // throws when the tail survives
          if (ad.degree() > n - 3) return false;
          if (!(ad.coeff(0) == nu(cfg, 2))) return false;
        } catch (const Error&) {
          return false;
        }
      }
    return true;
  });

  criterion(5, "inverse: exact e-recovery and 1e-8 polygon round trip", [] {
    Sampler smp(kSeed + 5);
    for (int n = 3; n <= 6; ++n) {
      int done = 0;
      while (done < 25) {
        VertexConfig<X> cfg = draw(smp, n, done);
        ToeplitzSystem<X> sys = build_toeplitz(moment_table(cfg, 2 * n - 1), n);
        if (sys.dd.is_zero()) continue;
        std::vector<X> e = solve_elementary(sys);
        SymFuncs<X> sf = sym_funcs(cfg.z, n);
        for (int m = 1; m <= n; ++m)
          if (!(e[static_cast<size_t>(m - 1)] == sf.e[static_cast<size_t>(m)])) return false;
        ++done;
      }
    }
    for (int n : {3, 4, 5})
      for (int i = 0; i < 25; ++i) {
        VertexConfig<X> poly = smp.simple_ccw_polygon(n);
        Reconstruction<X> rec = reconstruct_real(moment_table(poly, 2 * n - 1), n);
        std::vector<ApproxComplex> expect;
        for (const X& v : poly.z) expect.push_back(ScalarOps<X>::to_c(v));
        if (cyclic_match_distance(rec.config.z, expect) > 1e-8) return false;
      }
    return true;
  });

  criterion(6, "orbit degrees 12/72/2880 and stabilizer orders 3/8/5", [] {
    const long expected_d[] = {12, 72, 2880};
    const long expected_st[] = {3, 8, 5};
    for (int n : {3, 4, 5}) {
      OrbitData data = orbit_data(n);
      if (data.d != expected_d[n - 3]) return false;
      if (data.identity_class_size != expected_st[n - 3]) return false;
      if (data.d * data.identity_class_size != data.total_pairs) return false;
      auto formula = stabilizer(n);
      auto exhaustive = stabilizer_exhaustive(n);
      std::sort(formula.begin(), formula.end());
      std::sort(exhaustive.begin(), exhaustive.end());
      if (!(formula == exhaustive)) return false;
    }
    return true;
  });

  criterion(7, "span of the action forms has rank (n-1)^2", [] {
    return span_rank(3) == 4 && span_rank(4) == 9 && span_rank(5) == 16;
  });

  criterion(8, "minimal polynomial: root, simple roots, invariant coefficients", [] {
    Sampler smp(kSeed + 8);
    for (int n : {3, 4})
      for (int i = 0; i < 10; ++i) {
        VertexConfig<X> cfg = smp.config(n, VertexMode::complexified, 10);
        try {
          UniPoly<X> p = minimal_poly(cfg);  // throws on colliding orbit values
          if (!ScalarOps<X>::is_zero(p.eval(nu(cfg, 2)))) return false;
          auto perms = all_permutations(n);
          PermPair pair{
              perms[static_cast<size_t>(smp.uniform_int(0, static_cast<long>(perms.size()) - 1))],
              perms[static_cast<size_t>(smp.uniform_int(0, static_cast<long>(perms.size()) - 1))]};
          if (!(minimal_poly(relabel(cfg, pair.sigma, pair.tau)) == p)) return false;
        } catch (const Error&) {
          return false;
        }
      }
    return true;
  });

  criterion(9, "rho expressions reproduce the phi forms", [] {
    Sampler smp(kSeed + 9);
    for (int n : {4, 5})
      for (int i = 0; i < 10; ++i) {
        VertexConfig<X> cfg = smp.config(n, VertexMode::complexified, 10);
        for (int a = 1; a <= n - 1; ++a)
          for (int b = 1; b <= n - 1; ++b)
            if (!rho_check(a, b, n, cfg)) return false;
      }
    return true;
  });

  criterion(10, "all 2x2-minor relations among the phi forms vanish", [] {
    Sampler smp(kSeed + 10);
    for (int n : {3, 4, 5})
      for (int i = 0; i < 10; ++i)
        if (!segre_minors_vanish(smp.config(n, VertexMode::complexified, 10))) return false;
    return true;
  });

  criterion(11, "sole triangle relation vanishes, and only on the variety", [] {
    Sampler smp(kSeed + 11);
    for (int i = 0; i < 100; ++i) {
      VertexConfig<X> cfg = smp.config(3, VertexMode::complexified, 10);
      TriangleData<X> td = make_triangle_data(cfg);
      if (!sole_relation(td).is_zero()) return false;
      if (i < 20) {
        X perturbed = td.m + cx(1);
        if (sylvester_resultant(r_poly_at(td.e, td.ebar, perturbed), q_poly(td)).is_zero())
          return false;
      }
    }
    return true;
  });

  criterion(12, "L(M) has degree 12 and the orbit values as roots (1e-8)", [] {
    Sampler smp(kSeed + 12);
    int done = 0;
    while (done < 10) {
      VertexConfig<X> cfg = smp.config(3, VertexMode::complexified, 10);
      TriangleData<X> td = make_triangle_data(cfg);
      try {
        LInM<X> res = l_in_m(td);
        if (res.poly.degree() != 12) return false;
        UniPoly<X> monic = res.poly.monic();
        std::vector<ApproxComplex> coeffs;
        for (int d = 0; d <= monic.degree(); ++d)
          coeffs.push_back(ScalarOps<X>::to_c(monic.coeff(d)));
        std::vector<ApproxComplex> roots = poly_roots(UniPoly<ApproxComplex>(coeffs));
        std::vector<ApproxComplex> expect;
        for (const PermPair& rep : orbit_data(3).coset_reps)
          expect.push_back(ScalarOps<X>::to_c(eval_form(rep, cfg)));
        if (!match_multisets(roots, expect, 1e-8)) return false;
        ++done;
      } catch (const Error& e) {
        if (e.code() == errc::degree_mismatch || e.code() == errc::root_mismatch) return false;
        // non-generic draw; redraw
      }
    }
    return true;
  });

  criterion(13, "two-term, three-term, quadratic and phi relations (20 configs)", [] {
    Sampler smp(kSeed + 13);
    for (int i = 0; i < 20; ++i)
      if (!twelve_relations(smp.config(3, VertexMode::complexified, 10)).all()) return false;
    return true;
  });

  criterion(14, "signed symmetry group has order 288 with index-2 subgroup 144", [] {
    for (int s = 0; s < 5; ++s) {
      Galois3Result g = galois3(kSeed + 14 + static_cast<std::uint64_t>(s));
      if (g.order != 288 || g.plus_order != 144 || g.closure_size != 288) return false;
    }
    return true;
  });

  criterion(15, "triangle companion-point vectors sum to zero exactly", [] {
    Sampler smp(kSeed + 15);
    int done = 0;
    while (done < 20) {
      X a{smp.rational(10), smp.rational(10)}, b{smp.rational(10), smp.rational(10)},
          c{smp.rational(10), smp.rational(10)};
      if (a == b || a == c || b == c) continue;
      if (!similarity_theorem(a, b, c).sum.is_zero()) return false;
      ++done;
    }
    return true;
  });

  criterion(16, "graded dimension rank oracle matches C(d+n-2,n-2)^2", [] {
    bool printed_matches = true;
    for (int n : {3, 4}) {
      RelationReport rep = relation_checks(n, kSeed + 16, {1, 2});
      long expect_d1 = (n - 1) * (n - 1);
      long expect_d2 = (n == 3) ? 9 : 36;
      if (rep.graded.size() != 2) return false;
      if (rep.graded[0].rank != expect_d1 || rep.graded[1].rank != expect_d2) return false;
      if (!rep.graded_matches_segre) return false;
      printed_matches = printed_matches && rep.graded_matches_printed;
    }
    return !printed_matches;  // the printed series formula must be flagged as mismatching
  });

  std::printf("%s: %d of 16 criteria passed\n", g_failures == 0 ? "OK" : "FAILURES",
              16 - g_failures);
  return g_failures;
}
