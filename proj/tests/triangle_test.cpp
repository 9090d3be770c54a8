#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "polymom/triangle.hpp"

using namespace polymom;
using namespace polymom::testing;

TEST_CASE("triangle data and the R polynomial") {
  TriangleData<X> td = make_triangle_data(unit_triangle());
  CHECK(td.m == cq(1, 2, 0, 1));
  CHECK(td.s_true == cx(2));  // 0 + 1 + i(-i)

  UniPoly<X> r = r_poly(td);
  CHECK(r.degree() == 2);
  CHECK(r.coeff(2) == cx(-3));
  CHECK(r.coeff(1) == cx(4));  // 2 e1 ebar1 = 2 (1+i)(1-i)
  CHECK(ScalarOps<X>::is_zero(r.eval(td.s_true)));
  CHECK(r.eval(cx(2)) == cx(0));  // -12 + 8 + 4

  // all zbar = 0 degenerates R to -3 S^2
  VertexConfig<X> flat =
      make_complexified_config<X>({cx(1), cx(2), cx(0, 1)}, {cx(0), cx(0), cx(0)});
  TriangleData<X> tdf = make_triangle_data(flat);
  UniPoly<X> rf = r_poly(tdf);
  CHECK(rf == UniPoly<X>{cx(0), cx(0), cx(-3)});
}

TEST_CASE("vertex determinant squared equals -16 nu_2^2") {
  Sampler smp(83);
  for (int i = 0; i < 50; ++i) {
    VertexConfig<X> cfg = smp.config(3, VertexMode::complexified, 9);
    X d = det<X>(omega_matrix(cfg));
    X m = nu(cfg, 2);
    CHECK(d * d == ScalarOps<X>::from_int(-16) * m * m);
    CHECK(m == (ScalarOps<X>::make(0, 1) / cx(4)) * d);
  }
}

TEST_CASE("Q polynomial of the running triangle") {
  TriangleData<X> td = make_triangle_data(unit_triangle());
  UniPoly<X> q = q_poly(td);
  CHECK(q.degree() == 6);
  CHECK(q.leading() == cx(1));
  UniPoly<X> expect =
      UniPoly<X>::from_roots({cx(2), cx(1), cx(1), cx(0), cx(0, 1), cx(0, -1)});
  CHECK(q == expect);
  CHECK(ScalarOps<X>::is_zero(q.eval(td.s_true)));  // identity permutation root

  // q is symmetric under swapping the two coordinate tuples
  VertexConfig<X> swapped = make_complexified_config(td.config.zbar, td.config.z);
  CHECK(q_poly(make_triangle_data(swapped)) == q);

  VertexConfig<X> flat =
      make_complexified_config<X>({cx(1), cx(2), cx(0, 1)}, {cx(0), cx(0), cx(0)});
  UniPoly<X> qf = q_poly(make_triangle_data(flat));
  for (int d = 0; d < 6; ++d) CHECK(qf.coeff(d) == cx(0));  // Q = S^6
  CHECK(qf.degree() == 6);
}

TEST_CASE("sole relation") {
  CHECK(sole_relation(make_triangle_data(unit_triangle())) == cx(0));

  Sampler smp(89);
  for (int i = 0; i < 30; ++i) {
    VertexConfig<X> cfg = smp.config(3, VertexMode::complexified, 9);
    TriangleData<X> td = make_triangle_data(cfg);
    CHECK(sole_relation(td) == cx(0));
    X perturbed = td.m + cx(1);
    CHECK_FALSE(sylvester_resultant(r_poly_at(td.e, td.ebar, perturbed), q_poly(td)).is_zero());
  }

  // degenerate collinear triangle: M = 0 but S_true stays a shared root
  VertexConfig<X> collinear = make_real_config<X>({cx(0), cx(1), cx(2)});
  TriangleData<X> tdc = make_triangle_data(collinear);
  CHECK(tdc.m == cx(0));
  CHECK(sole_relation(tdc) == cx(0));
}

TEST_CASE("L as a polynomial in M") {
  TriangleData<X> td = make_triangle_data(unit_triangle());
  LInM<X> res = l_in_m(td);
  CHECK(res.poly.degree() == 12);
  // roots come in +/- pairs; both nu_2 and -nu_2 appear
  UniPoly<X> monic = res.poly.monic();
  CHECK(ScalarOps<X>::is_zero(monic.eval(cq(1, 2, 0, 1))));
  CHECK(ScalarOps<X>::is_zero(monic.eval(cq(-1, 2, 0, 1))));
  for (int d = 1; d < 12; d += 2) CHECK(monic.coeff(d) == cx(0));  // even in M
  CHECK(res.min_separation == 0.0);  // the example triangle has the double root 0

  Sampler smp(97);
  for (int i = 0; i < 3; ++i) {
    VertexConfig<X> cfg = smp.config(3, VertexMode::complexified, 9);
    CHECK_NOTHROW(l_in_m(make_triangle_data(cfg)));
  }

  // near-equilateral probe: orbit values nearly collide and the separation
  // reported drops accordingly
  VertexConfig<X> near_sym = make_real_config<X>(
      {cx(1), cq(-499, 1000, 433, 500), cq(-501, 1000, -433, 500)});
  LInM<X> probe = l_in_m(make_triangle_data(near_sym));
  CHECK(probe.min_separation < 1e-2);
}

TEST_CASE("two-term relations hold at the matrix level") {
  Perm t12 = Perm::from_cycles("(1,2)", 3);
  for (const Perm& tau : all_permutations(3))
    CHECK(action_matrix(t12, compose(tau, t12)) == -action_matrix(Perm::identity(3), tau));
}

TEST_CASE("twelve relations") {
  CHECK(twelve_relations(unit_triangle()).all());
  Sampler smp(101);
  for (int i = 0; i < 20; ++i) {
    VertexConfig<X> cfg = smp.config(3, VertexMode::complexified, 9);
    TwelveReport rep = twelve_relations(cfg);
    CHECK(rep.two_term_pass == 6);
    CHECK(rep.three_term_pass == 2);
    CHECK(rep.quadratic_pass);
    CHECK(rep.phi_pass == 4);
    X t = X{smp.nonzero_rational(5), smp.rational(5)};
    CHECK(twelve_relations(scaled(cfg, t)).all());
  }
}

TEST_CASE("galois group enumeration") {
  Galois3Result g = galois3(42);
  CHECK(g.order == 288);
  CHECK(g.plus_order == 144);
  CHECK(g.closure_size == 288);
  CHECK_FALSE(g.generators.empty());
  REQUIRE(g.elements.size() == 288);

  // the identity candidate is accepted and composition works
  SignedMap id;
  for (int t = 0; t < 6; ++t) {
    id.perm[t] = t;
    id.sign[t] = 1;
  }
  CHECK(std::binary_search(g.elements.begin(), g.elements.end(), id));
  for (const SignedMap& gen : g.generators)
    CHECK(signed_map_compose(gen, id) == gen);

  // structural characterization: every element preserves or swaps the cyclic
  // and transposition blocks of the tau indices, with signs constant on each
  // source block; 144 preserve, 144 swap
  std::vector<Perm> taus = all_permutations(3);
  std::vector<bool> in_a(6);
  for (size_t t = 0; t < 6; ++t) {
    int parity = 0;
    const auto& img = taus[t].images();
    for (size_t x = 0; x < img.size(); ++x)
      for (size_t y = x + 1; y < img.size(); ++y)
        if (img[x] > img[y]) ++parity;
    in_a[t] = parity % 2 == 0;
  }
  long preserving = 0;
  for (const SignedMap& el : g.elements) {
    bool maps_a_to_a = in_a[static_cast<size_t>(el.perm[0])];
    int sign_a = 0, sign_t = 0;
    bool consistent = true;
    for (int t = 0; t < 6; ++t) {
      bool src_a = in_a[static_cast<size_t>(t)];
      bool dst_a = in_a[static_cast<size_t>(el.perm[static_cast<size_t>(t)])];
      consistent = consistent && (dst_a == (src_a == maps_a_to_a));
      int& slot = src_a ? sign_a : sign_t;
      if (slot == 0) slot = el.sign[static_cast<size_t>(t)];
      consistent = consistent && slot == el.sign[static_cast<size_t>(t)];
    }
    CHECK(consistent);
    if (maps_a_to_a) ++preserving;
  }
  CHECK(preserving == 144);
}

TEST_CASE("float scalar path through the triangle module") {
  Sampler smp(107);
  VertexConfig<X> exact_cfg = smp.config(3, VertexMode::complexified, 4);
  VertexConfig<ApproxComplex> cfg = to_float(exact_cfg);
  TriangleData<ApproxComplex> td = make_triangle_data(cfg);

  double scale = 1.0 + std::abs(td.m) + std::abs(td.s_true);
  CHECK(std::abs(r_poly(td).eval(td.s_true)) <= 1e-9 * scale * scale);
  CHECK(twelve_relations(cfg).all());

  LInM<ApproxComplex> res = l_in_m(td);
  CHECK(res.poly.degree() == 12);

  auto frep = similarity_theorem(ApproxComplex(0.0, 0.0), ApproxComplex(1.0, 0.25),
                                 ApproxComplex(0.3, 1.1));
  CHECK(std::abs(frep.sum) <= 1e-12);
}

TEST_CASE("similarity companion points") {
  auto rep = similarity_theorem(cx(0), cx(1), cq(1, 2, 1, 1));
  CHECK(rep.sum.is_zero());
  auto rep2 = similarity_theorem(cx(0), cx(1), cx(0, 1));
  CHECK(rep2.sum.is_zero());
  CHECK_THROWS_AS(similarity_theorem(cx(0), cx(0), cx(1)), Error);

  Sampler smp(103);
  for (int i = 0; i < 20; ++i) {
    X a{smp.rational(9), smp.rational(9)}, b{smp.rational(9), smp.rational(9)},
        c{smp.rational(9), smp.rational(9)};
    if (a == b || a == c || b == c) continue;
    CHECK(similarity_theorem(a, b, c).sum.is_zero());
  }
}
