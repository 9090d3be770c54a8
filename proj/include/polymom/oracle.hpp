#ifndef POLYMOM_ORACLE_HPP
#define POLYMOM_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "polymom/vertex_config.hpp"

namespace polymom {

// Triangulation of the reference convex n-gon P_* given by n-3 pairwise
// non-crossing diagonals; triangles are derived combinatorially and listed
// with vertices in the counterclockwise order of P_*.
struct Triangulation {
  int n = 0;
  std::vector<std::pair<int, int>> diagonals;
  std::vector<std::array<int, 3>> triangles;
};

namespace detail {

// Chords (a,b), (c,d) of a convex polygon cross iff exactly one of c,d lies
// strictly inside the cyclic open interval (a,b).
inline bool chords_cross(int n, std::pair<int, int> x, std::pair<int, int> y) {
  auto inside = [&](int a, int b, int q) {
    int len = (b - a + n) % n;
    int off = (q - a + n) % n;
    return off > 0 && off < len;
  };
  if (x.first == y.first || x.first == y.second || x.second == y.first || x.second == y.second)
    return false;
  return inside(x.first, x.second, y.first) != inside(x.first, x.second, y.second);
}

inline void split_ring(const std::vector<int>& ring,
                       const std::vector<std::pair<int, int>>& diagonals,
                       std::vector<std::array<int, 3>>* out) {
  if (ring.size() == 3) {
    out->push_back({ring[0], ring[1], ring[2]});
    return;
  }
  auto pos_of = [&](int v) -> int {
    for (size_t i = 0; i < ring.size(); ++i)
      if (ring[i] == v) return static_cast<int>(i);
    return -1;
  };
  for (const auto& d : diagonals) {
    int pa = pos_of(d.first), pb = pos_of(d.second);
    if (pa < 0 || pb < 0) continue;
    if (pa > pb) std::swap(pa, pb);
    int m = static_cast<int>(ring.size());
    if (pb - pa <= 1 || pb - pa >= m - 1) continue;  // edge of this sub-polygon
    std::vector<int> left(ring.begin() + pa, ring.begin() + pb + 1);
    std::vector<int> right(ring.begin() + pb, ring.end());
    right.insert(right.end(), ring.begin(), ring.begin() + pa + 1);
    split_ring(left, diagonals, out);
    split_ring(right, diagonals, out);
    return;
  }
  raise(errc::invalid_triangulation, "diagonal set does not triangulate");
}

}  // namespace detail

inline Triangulation make_triangulation(int n, std::vector<std::pair<int, int>> diagonals) {
  if (n < 3) raise(errc::invalid_triangulation, "polygon needs n >= 3");
  if (static_cast<int>(diagonals.size()) != n - 3)
    raise(errc::invalid_triangulation, "a triangulation has exactly n-3 diagonals");
  for (auto& d : diagonals) {
    if (d.first < 0 || d.first >= n || d.second < 0 || d.second >= n)
      raise(errc::invalid_triangulation, "diagonal index out of range");
    int gap = (d.second - d.first + n) % n;
    if (gap == 0 || gap == 1 || gap == n - 1)
      raise(errc::invalid_triangulation, "diagonal endpoints adjacent or equal");
  }
  for (size_t i = 0; i < diagonals.size(); ++i)
    for (size_t j = i + 1; j < diagonals.size(); ++j) {
      auto a = diagonals[i], b = diagonals[j];
      bool same = (a == b) || (a.first == b.second && a.second == b.first);
      if (same || detail::chords_cross(n, a, b))
        raise(errc::invalid_triangulation, "diagonals repeat or cross");
    }
  Triangulation tri;
  tri.n = n;
  tri.diagonals = std::move(diagonals);
  std::vector<int> ring(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ring[static_cast<size_t>(i)] = i;
  detail::split_ring(ring, tri.diagonals, &tri.triangles);
  return tri;
}

// Fan from vertex 0: diagonals (0,2), (0,3), ..., (0,n-2).
inline Triangulation fan_triangulation(int n) {
  std::vector<std::pair<int, int>> d;
  for (int j = 2; j <= n - 2; ++j) d.emplace_back(0, j);
  return make_triangulation(n, std::move(d));
}

// Every triangulation of the convex n-gon (Catalan(n-2) of them).
inline std::vector<Triangulation> all_triangulations(int n) {
  std::function<std::vector<std::vector<std::pair<int, int>>>(int, int)> gen =
      [&](int i, int j) -> std::vector<std::vector<std::pair<int, int>>> {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (j - i < 2) {
      out.push_back({});
      return out;
    }
    for (int k = i + 1; k < j; ++k) {
      for (const auto& l : gen(i, k))
        for (const auto& r : gen(k, j)) {
          std::vector<std::pair<int, int>> s;
          auto add = [&](int a, int b) {
            int gap = (b - a + n) % n;
            if (gap != 1 && gap != n - 1) s.emplace_back(a, b);
          };
          add(i, k);
          add(k, j);
          s.insert(s.end(), l.begin(), l.end());
          s.insert(s.end(), r.begin(), r.end());
          out.push_back(std::move(s));
        }
    }
    return out;
  };
  std::vector<Triangulation> tris;
  for (auto& s : gen(0, n - 1)) tris.push_back(make_triangulation(n, std::move(s)));
  return tris;
}

// Shoelace area, positive for counterclockwise simple polygons. Real mode only.
template <class S>
S signed_area(const VertexConfig<S>& cfg) {
  if (cfg.mode != VertexMode::real) raise(errc::mode_error, "signed_area needs a real configuration");
  using Ops = ScalarOps<S>;
  using R = typename Ops::Real;
  const int n = cfg.n();
  R acc = Ops::re(Ops::from_int(0));
  for (int j = 0; j < n; ++j) {
    int k = (j + 1) % n;
    const S& a = cfg.z[static_cast<size_t>(j)];
    const S& b = cfg.z[static_cast<size_t>(k)];
    acc += Ops::re(a) * Ops::im(b) - Ops::re(b) * Ops::im(a);
  }
  return S(acc) / Ops::from_int(2);
}

// Moment of one affine triangle: integral of z^k over the image of a reference
// triangle, via the barycentric monomial formula
//   int alpha^a beta^b gamma^c dA = 2 * Area * a! b! c! / (a+b+c+2)!,
// which collapses to  m_k = 2*SA*(sum of degree-k monomials)/((k+1)(k+2))
// with SA the signed-area factor of the parametrization. The anti flag swaps
// the z and zbar data. Independent of the closed-form moment path by design.
template <class S>
S triangle_moment_oracle(const std::pair<S, S>& v1, const std::pair<S, S>& v2,
                         const std::pair<S, S>& v3, int k, bool anti = false) {
  if (k < 0 || k > 30) raise(errc::invalid_input, "triangle oracle supports 0 <= k <= 30");
  using Ops = ScalarOps<S>;
  S p = anti ? v1.second : v1.first, pb = anti ? v1.first : v1.second;
  S q = anti ? v2.second : v2.first, qb = anti ? v2.first : v2.second;
  S r = anti ? v3.second : v3.first, rb = anti ? v3.first : v3.second;

  // signed-area factor (i/4) * [(q-p)(rb-pb) - (r-p)(qb-pb)]
  S i4 = Ops::make(0, 1) / Ops::from_int(4);
  S sa = i4 * ((q - p) * (rb - pb) - (r - p) * (qb - pb));

  // explicit monomial sum over a+b+c = k
  std::vector<S> pp{Ops::from_int(1)}, qq{Ops::from_int(1)}, rr{Ops::from_int(1)};
  for (int t = 1; t <= k; ++t) {
    pp.push_back(pp.back() * p);
    qq.push_back(qq.back() * q);
    rr.push_back(rr.back() * r);
  }
  S mono = Ops::from_int(0);
  for (int a = 0; a <= k; ++a)
    for (int b = 0; a + b <= k; ++b)
      mono += pp[static_cast<size_t>(a)] * qq[static_cast<size_t>(b)] *
              rr[static_cast<size_t>(k - a - b)];

  return Ops::from_int(2) * sa * mono / Ops::from_int(static_cast<long>(k + 1) * (k + 2));
}

// Sum of triangle moments over the triangulation's triangles; by construction
// the value is independent of the chosen triangulation.
template <class S>
S polygon_moment_oracle(const VertexConfig<S>& cfg, const Triangulation& tri, int k,
                        bool anti = false) {
  if (tri.n != cfg.n()) raise(errc::invalid_triangulation, "triangulation size mismatch");
  using Ops = ScalarOps<S>;
  S acc = Ops::from_int(0);
  for (const auto& t : tri.triangles) {
    auto vert = [&](int i) {
      return std::pair<S, S>(cfg.z[static_cast<size_t>(i)], cfg.zbar[static_cast<size_t>(i)]);
    };
    acc += triangle_moment_oracle(vert(t[0]), vert(t[1]), vert(t[2]), k, anti);
  }
  return acc;
}

namespace detail {

template <class R>
int orient_sign(const R& ax, const R& ay, const R& bx, const R& by, const R& qx, const R& qy) {
  R cross = (bx - ax) * (qy - ay) - (by - ay) * (qx - ax);
  if (cross > R(0)) return 1;
  if (cross < R(0)) return -1;
  return 0;
}

template <class R>
bool on_segment(const R& ax, const R& ay, const R& bx, const R& by, const R& qx, const R& qy) {
  if (orient_sign(ax, ay, bx, by, qx, qy) != 0) return false;
  return std::min(ax, bx) <= qx && qx <= std::max(ax, bx) && std::min(ay, by) <= qy &&
         qy <= std::max(ay, by);
}

inline double point_segment_dist(double ax, double ay, double bx, double by, double qx,
                                 double qy) {
  double vx = bx - ax, vy = by - ay;
  double len2 = vx * vx + vy * vy;
  double t = len2 > 0.0 ? ((qx - ax) * vx + (qy - ay) * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  double dx = ax + t * vx - qx, dy = ay + t * vy - qy;
  return std::hypot(dx, dy);
}

}  // namespace detail

// Winding number of the closed polygonal curve around q via signed ray
// crossings; equals the density of the polygonal measure at q. Real mode only.
// Boundary points raise OnBoundary (exactly in exact mode, within 1e-12 in
// float mode). Repeated vertices are fine: zero-length edges cannot cross.
template <class S>
int winding_number(const VertexConfig<S>& cfg, const S& q) {
  if (cfg.mode != VertexMode::real) raise(errc::mode_error, "winding_number needs a real configuration");
  using Ops = ScalarOps<S>;
  using R = typename Ops::Real;
  const int n = cfg.n();
  const R qx = Ops::re(q), qy = Ops::im(q);

  for (int j = 0; j < n; ++j) {
    int k = (j + 1) % n;
    R ax = Ops::re(cfg.z[static_cast<size_t>(j)]), ay = Ops::im(cfg.z[static_cast<size_t>(j)]);
    R bx = Ops::re(cfg.z[static_cast<size_t>(k)]), by = Ops::im(cfg.z[static_cast<size_t>(k)]);
    if constexpr (Ops::exact) {
      if (detail::on_segment(ax, ay, bx, by, qx, qy))
        raise(errc::on_boundary, "query point lies on the boundary curve");
    } else {
      if (detail::point_segment_dist(ax, ay, bx, by, qx, qy) <= 1e-12)
        raise(errc::on_boundary, "query point within 1e-12 of the boundary curve");
    }
  }

  int w = 0;
  for (int j = 0; j < n; ++j) {
    int k = (j + 1) % n;
    R ax = Ops::re(cfg.z[static_cast<size_t>(j)]), ay = Ops::im(cfg.z[static_cast<size_t>(j)]);
    R bx = Ops::re(cfg.z[static_cast<size_t>(k)]), by = Ops::im(cfg.z[static_cast<size_t>(k)]);
    if (ay <= qy && by > qy) {
      if (detail::orient_sign(ax, ay, bx, by, qx, qy) > 0) ++w;
    } else if (ay > qy && by <= qy) {
      if (detail::orient_sign(ax, ay, bx, by, qx, qy) < 0) --w;
    }
  }
  return w;
}

}  // namespace polymom

#endif
