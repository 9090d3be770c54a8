#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "polymom/moments.hpp"

using namespace polymom;
using namespace polymom::testing;

TEST_CASE("signed area via the shoelace formula") {
  CHECK(signed_area(unit_triangle()) == cq(1, 2, 0, 1));
  VertexConfig<X> reversed = make_real_config<X>({cx(0, 1), cx(1), cx(0)});
  CHECK(signed_area(reversed) == cq(-1, 2, 0, 1));
  VertexConfig<X> collinear = make_real_config<X>({cx(0), cx(1), cx(2)});
  CHECK(signed_area(collinear) == cx(0));
  VertexConfig<X> cxcfg = make_complexified_config<X>({cx(0), cx(1), cx(2)}, {cx(0), cx(0), cx(0)});
  CHECK_THROWS_AS(signed_area(cxcfg), Error);
}

TEST_CASE("triangle moments by barycentric integration") {
  auto v = [](X z) { return std::make_pair(z, ScalarOps<X>::conj(z)); };
  auto p0 = v(cx(0)), p1 = v(cx(1)), p2 = v(cx(0, 1));
  CHECK(triangle_moment_oracle(p0, p1, p2, 0) == cq(1, 2, 0, 1));   // the area
  CHECK(triangle_moment_oracle(p0, p1, p2, 1) == cq(1, 6, 1, 6));   // area x centroid
  CHECK(triangle_moment_oracle(p0, p1, p2, 2) == cq(0, 1, 1, 12));
  CHECK_THROWS_AS(triangle_moment_oracle(p0, p1, p2, 31), Error);
}

TEST_CASE("triangulations: construction, fan, enumeration") {
  CHECK(fan_triangulation(3).triangles.size() == 1);
  CHECK(fan_triangulation(6).triangles.size() == 4);
  CHECK(all_triangulations(4).size() == 2);
  CHECK(all_triangulations(5).size() == 5);
  CHECK(all_triangulations(6).size() == 14);
  CHECK_THROWS_AS(make_triangulation(5, {{0, 2}}), Error);          // wrong count
  CHECK_THROWS_AS(make_triangulation(5, {{0, 2}, {1, 3}}), Error);  // crossing
  CHECK_THROWS_AS(make_triangulation(5, {{0, 1}, {0, 2}}), Error);  // adjacent endpoints
  CHECK_THROWS_AS(make_triangulation(5, {{0, 2}, {0, 2}}), Error);  // repeated
}

TEST_CASE("triangulation size must match the configuration") {
  CHECK_THROWS_AS(polygon_moment_oracle(unit_triangle(), fan_triangulation(4), 0), Error);
}

TEST_CASE("square moments are triangulation independent") {
  VertexConfig<X> sq = unit_square();
  auto tris = all_triangulations(4);
  REQUIRE(tris.size() == 2);
  CHECK(polygon_moment_oracle(sq, tris[0], 0) == cx(1));
  CHECK(polygon_moment_oracle(sq, tris[1], 0) == cx(1));
  CHECK(polygon_moment_oracle(sq, tris[0], 1) == cq(1, 2, 1, 2));  // centroid x area
  for (int k = 0; k <= 8; ++k)
    CHECK(polygon_moment_oracle(sq, tris[0], k) == polygon_moment_oracle(sq, tris[1], k));
}

TEST_CASE("triangulation independence on random configurations") {
  Sampler smp(5);
  for (int n = 4; n <= 6; ++n) {
    auto tris = all_triangulations(n);
    for (int i = 0; i < 4; ++i) {
      VertexConfig<X> cfg =
          smp.config(n, i % 2 ? VertexMode::real : VertexMode::complexified, 8);
      for (int k = 0; k <= 8; ++k) {
        X ref = polygon_moment_oracle(cfg, tris[0], k);
        for (size_t t = 1; t < tris.size(); ++t)
          CHECK(polygon_moment_oracle(cfg, tris[t], k) == ref);
      }
    }
  }
}

TEST_CASE("splitting along a diagonal adds measures") {
  Sampler smp(9);
  VertexConfig<X> cfg = smp.config(6, VertexMode::complexified, 8);
  const int m = 3;  // diagonal (0, 3)
  std::vector<X> z1, zb1, z2, zb2;
  for (int t = 0; t <= m; ++t) {
    z1.push_back(cfg.z[t]);
    zb1.push_back(cfg.zbar[t]);
  }
  z2.push_back(cfg.z[0]);
  zb2.push_back(cfg.zbar[0]);
  for (int t = m; t < 6; ++t) {
    z2.push_back(cfg.z[t]);
    zb2.push_back(cfg.zbar[t]);
  }
  auto part1 = make_complexified_config(z1, zb1);
  auto part2 = make_complexified_config(z2, zb2);
  for (int k = 0; k <= 8; ++k)
    CHECK(polygon_moment_oracle(cfg, fan_triangulation(6), k) ==
          polygon_moment_oracle(part1, fan_triangulation(4), k) +
              polygon_moment_oracle(part2, fan_triangulation(4), k));
}

TEST_CASE("repeated vertices contribute nothing") {
  VertexConfig<X> repeated =
      make_real_config<X>({cx(0), cx(1), cx(1), cx(0, 1)});  // degenerate quad
  VertexConfig<X> tri = unit_triangle();
  for (int k = 0; k <= 6; ++k)
    CHECK(polygon_moment_oracle(repeated, fan_triangulation(4), k) ==
          polygon_moment_oracle(tri, fan_triangulation(3), k));
}

TEST_CASE("winding numbers") {
  VertexConfig<X> tri = unit_triangle();
  CHECK(winding_number(tri, cq(1, 4, 1, 4)) == 1);  // interior of a CCW triangle
  CHECK(winding_number(tri, cx(10, 10)) == 0);      // exterior
  CHECK_THROWS_AS(winding_number(tri, cq(1, 2, 0, 1)), Error);  // on the boundary

  // bowtie 0, 1, i, 1+i: the two lobes carry opposite signs
  VertexConfig<X> bow = make_real_config<X>({cx(0), cx(1), cx(0, 1), cx(1, 1)});
  int lower = winding_number(bow, cq(1, 2, 1, 5));
  int upper = winding_number(bow, cq(1, 2, 4, 5));
  CHECK(lower != 0);
  CHECK(upper == -lower);
  CHECK(std::abs(lower) == 1);

  VertexConfig<X> cxcfg =
      make_complexified_config<X>({cx(0), cx(1), cx(2)}, {cx(0), cx(0), cx(0)});
  CHECK_THROWS_AS(winding_number(cxcfg, cx(5, 5)), Error);
}

TEST_CASE("float boundary tolerance") {
  VertexConfig<ApproxComplex> tri = to_float(unit_triangle());
  CHECK(winding_number(tri, ApproxComplex(0.25, 0.25)) == 1);
  CHECK_THROWS_AS(winding_number(tri, ApproxComplex(0.5, 1e-14)), Error);
}
