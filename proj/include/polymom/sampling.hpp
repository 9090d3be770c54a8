#ifndef POLYMOM_SAMPLING_HPP
#define POLYMOM_SAMPLING_HPP

#include <cmath>
#include <random>
#include <vector>

#include "polymom/vertex_config.hpp"

namespace polymom {

// Deterministic sampling helpers. All draws go through raw engine output with
// explicit reduction so results depend only on the seed, not on library
// distribution internals.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : g_(seed) {}

  std::uint64_t raw() { return g_(); }

  long uniform_int(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double uniform01() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

  Rational rational(long height) {
    long num = uniform_int(-height, height);
    long den = uniform_int(1, height);
    return Rational(num, den);
  }

  Rational nonzero_rational(long height) {
    for (;;) {
      Rational r = rational(height);
      if (!r.is_zero()) return r;
    }
  }

  ExactComplex exact_complex(long height) { return {rational(height), rational(height)}; }

  // Complexified configuration with purely rational coordinates on both sides;
  // rational points are dense, which is all rank oracles need.
  VertexConfig<ExactComplex> rational_config(int n, long height = 3) {
    std::vector<ExactComplex> z, zbar;
    for (int i = 0; i < n; ++i) z.push_back(ExactComplex(rational(height)));
    for (int i = 0; i < n; ++i) zbar.push_back(ExactComplex(rational(height)));
    return make_complexified_config(std::move(z), std::move(zbar));
  }

  VertexConfig<ExactComplex> config(int n, VertexMode mode, long height = 10) {
    for (;;) {
      std::vector<ExactComplex> z, zbar;
      for (int i = 0; i < n; ++i) z.push_back(exact_complex(height));
      bool distinct = true;
      for (size_t i = 0; i < z.size() && distinct; ++i)
        for (size_t j = i + 1; j < z.size(); ++j)
          if (z[i] == z[j]) {
            distinct = false;
            break;
          }
      if (!distinct) continue;
      if (mode == VertexMode::real) return make_real_config(std::move(z));
      for (int i = 0; i < n; ++i) zbar.push_back(exact_complex(height));
      return make_complexified_config(std::move(z), std::move(zbar));
    }
  }

  // Simple CCW polygon with rational vertices: star-shaped candidates from
  // sorted angles, then exact simplicity and orientation checks.
  VertexConfig<ExactComplex> simple_ccw_polygon(int n, long grid = 48) {
    for (int attempt = 0; attempt < 500; ++attempt) {
      std::vector<double> th(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        th[static_cast<size_t>(i)] = 2.0 * M_PI * (i + 0.15 + 0.7 * uniform01()) / n;
      std::vector<ExactComplex> z;
      for (int i = 0; i < n; ++i) {
        double r = 1.0 + uniform01();
        double x = r * std::cos(th[static_cast<size_t>(i)]);
        double y = r * std::sin(th[static_cast<size_t>(i)]);
        z.push_back({Rational(std::lround(x * grid), grid), Rational(std::lround(y * grid), grid)});
      }
      if (!polygon_is_simple(z)) continue;
      if (shoelace_sign(z) < 0) std::reverse(z.begin(), z.end());
      if (shoelace_sign(z) <= 0) continue;
      return make_real_config(std::move(z));
    }
    raise(errc::invalid_input, "failed to sample a simple polygon");
  }

  static int shoelace_sign(const std::vector<ExactComplex>& z) {
    Rational acc;
    const int n = static_cast<int>(z.size());
    for (int j = 0; j < n; ++j) {
      int k = (j + 1) % n;
      acc += z[static_cast<size_t>(j)].re * z[static_cast<size_t>(k)].im -
             z[static_cast<size_t>(k)].re * z[static_cast<size_t>(j)].im;
    }
    return acc.sign();
  }

  // Exact: no repeated vertices, no collinear consecutive triple, and no two
  // non-adjacent edges meeting (properly or at a point).
  static bool polygon_is_simple(const std::vector<ExactComplex>& z) {
    const int n = static_cast<int>(z.size());
    auto orient = [&](const ExactComplex& a, const ExactComplex& b, const ExactComplex& c) {
      Rational v = (b.re - a.re) * (c.im - a.im) - (b.im - a.im) * (c.re - a.re);
      return v.sign();
    };
    auto on_seg = [&](const ExactComplex& a, const ExactComplex& b, const ExactComplex& q) {
      if (orient(a, b, q) != 0) return false;
      return std::min(a.re, b.re) <= q.re && q.re <= std::max(a.re, b.re) &&
             std::min(a.im, b.im) <= q.im && q.im <= std::max(a.im, b.im);
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (z[static_cast<size_t>(i)] == z[static_cast<size_t>(j)]) return false;
    for (int i = 0; i < n; ++i)
      if (orient(z[static_cast<size_t>(i)], z[static_cast<size_t>((i + 1) % n)],
                 z[static_cast<size_t>((i + 2) % n)]) == 0)
        return false;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        int i2 = (i + 1) % n, j2 = (j + 1) % n;
        if (i2 == j || j2 == i) continue;  // adjacent edges share a vertex
        const auto &a = z[static_cast<size_t>(i)], &b = z[static_cast<size_t>(i2)];
        const auto &c = z[static_cast<size_t>(j)], &d = z[static_cast<size_t>(j2)];
        int o1 = orient(a, b, c), o2 = orient(a, b, d);
        int o3 = orient(c, d, a), o4 = orient(c, d, b);
        if (o1 != o2 && o3 != o4) return false;
        if (on_seg(a, b, c) || on_seg(a, b, d) || on_seg(c, d, a) || on_seg(c, d, b))
          return false;
      }
    }
    return true;
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace polymom

#endif
