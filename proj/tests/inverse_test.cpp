#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace polymom;
using namespace polymom::testing;

TEST_CASE("toeplitz assembly for the running triangle") {
  MomentTable<X> t = moment_table(unit_triangle(), 5);
  ToeplitzSystem<X> sys = build_toeplitz(t, 3);
  CHECK(sys.U(0, 0) == cq(1, 2, 0, 1));
  CHECK(sys.U(0, 1) == cx(0));
  CHECK(sys.U(0, 2) == cx(0));  // corner entry nu_0
  CHECK(sys.U(1, 0) == cq(1, 2, 1, 2));
  CHECK(sys.U(1, 1) == cq(1, 2, 0, 1));
  CHECK(sys.U(2, 0) == cq(0, 1, 1, 2));
  CHECK(sys.U(2, 1) == cq(1, 2, 1, 2));
  CHECK(sys.U(2, 2) == cq(1, 2, 0, 1));
  CHECK(sys.dd == cq(1, 8, 0, 1));  // nu_2^3

  CHECK_THROWS_AS(build_toeplitz(moment_table(unit_triangle(), 4), 3), Error);
}

TEST_CASE("degenerate configurations have singular moment matrices") {
  VertexConfig<X> collinear = make_real_config<X>({cx(0), cx(1), cx(2)});
  ToeplitzSystem<X> sys = build_toeplitz(moment_table(collinear, 5), 3);
  CHECK(sys.dd == cx(0));
  CHECK_THROWS_AS(solve_elementary(sys), Error);
}

TEST_CASE("elementary symmetric recovery") {
  std::vector<X> e = solve_elementary(build_toeplitz(moment_table(unit_triangle(), 5), 3));
  CHECK(e[0] == cx(1, 1));
  CHECK(e[1] == cx(0, 1));
  CHECK(e[2] == cx(0));

  std::vector<X> esq = solve_elementary(build_toeplitz(moment_table(unit_square(), 7), 4));
  CHECK(esq[0] == cx(2, 2));  // 0 + 1 + (1+i) + i

  Sampler smp(53);
  for (int n = 3; n <= 6; ++n) {
    int done = 0;
    while (done < 6) {
      VertexConfig<X> cfg =
          smp.config(n, done % 2 ? VertexMode::real : VertexMode::complexified, 9);
      ToeplitzSystem<X> sys = build_toeplitz(moment_table(cfg, 2 * n - 1), n);
      if (sys.dd.is_zero()) continue;
      std::vector<X> ee = solve_elementary(sys);
      SymFuncs<X> sf = sym_funcs(cfg.z, n);
      for (int m = 1; m <= n; ++m) CHECK(ee[m - 1] == sf.e[m]);
      ++done;
    }
  }
}

TEST_CASE("vertex multiset from elementary values") {
  auto close = [](ApproxComplex a, ApproxComplex b) { return std::abs(a - b) < 1e-8; };
  std::vector<ApproxComplex> roots = vertex_multiset<X>({cx(1, 1), cx(0, 1), cx(0)});
  CHECK(match_multisets(roots, {{0, 0}, {1, 0}, {0, 1}}, 1e-8));

  std::vector<ApproxComplex> zeros = vertex_multiset<X>({cx(0), cx(0), cx(0)});
  REQUIRE(zeros.size() == 3);
  for (const auto& r : zeros) CHECK(close(r, 0.0));

  std::vector<X> esq = solve_elementary(build_toeplitz(moment_table(unit_square(), 7), 4));
  CHECK(match_multisets(vertex_multiset(esq), {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 1e-8));
}

TEST_CASE("reconstruction round trips") {
  {
    Reconstruction<X> rec = reconstruct_real(moment_table(unit_triangle(), 5), 3);
    CHECK(rec.residual <= 1e-10);
    CHECK(cyclic_match_distance(rec.config.z, {{0, 0}, {1, 0}, {0, 1}}) <= 1e-8);
  }
  {
    Reconstruction<X> rec = reconstruct_real(moment_table(unit_square(), 7), 4);
    CHECK(cyclic_match_distance(rec.config.z, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}) <= 1e-8);
  }
  Sampler smp(59);
  for (int n : {3, 4, 5}) {
    for (int i = 0; i < 5; ++i) {
      VertexConfig<X> poly = smp.simple_ccw_polygon(n);
      Reconstruction<X> rec = reconstruct_real(moment_table(poly, 2 * n - 1), n);
      std::vector<ApproxComplex> expect;
      for (const X& v : poly.z) expect.push_back(ScalarOps<X>::to_c(v));
      CHECK(cyclic_match_distance(rec.config.z, expect) <= 1e-8);
    }
  }
}

TEST_CASE("clockwise polygons reconstruct with their orientation") {
  VertexConfig<X> cw = make_real_config<X>({cx(0, 1), cx(1), cx(0)});  // negative area
  MomentTable<X> table = moment_table(cw, 5);
  CHECK(table.at(2) == cq(-1, 2, 0, 1));
  Reconstruction<X> rec = reconstruct_real(table, 3);
  CHECK(cyclic_match_distance(rec.config.z, {{0, 1}, {1, 0}, {0, 0}}) <= 1e-8);
  CHECK(nu(rec.config, 2).real() < 0);
}

TEST_CASE("unrealizable moments are rejected") {
  MomentTable<X> t = moment_table(unit_square(), 7);
  t.nu[1] += cx(1);  // perturb nu_3 off the realizable variety
  CHECK_THROWS_AS(reconstruct_real(t, 4), Error);
  try {
    reconstruct_real(t, 4);
  } catch (const Error& e) {
    CHECK(e.code() == errc::no_matching_order);
  }

  MomentTable<X> bad = moment_table(unit_triangle(), 5);
  bad.nu[0] = cx(0);  // nu_2 = 0 makes the moment matrix singular
  bad.nu[1] = cx(0);
  bad.nu[2] = cx(0);
  try {
    reconstruct_real(bad, 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::singular_moment_matrix);
  }
}
