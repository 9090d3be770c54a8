#ifndef POLYMOM_TESTS_HELPERS_HPP
#define POLYMOM_TESTS_HELPERS_HPP

#include <vector>

#include "polymom/inverse.hpp"
#include "polymom/oracle.hpp"
#include "polymom/sampling.hpp"

namespace polymom::testing {

using X = ExactComplex;

inline X cx(long re, long im = 0) { return {Rational(re), Rational(im)}; }
inline X cq(long rn, long rd, long in_, long id_) { return {Rational(rn, rd), Rational(in_, id_)}; }

// the running example: counterclockwise right triangle with vertices 0, 1, i
inline VertexConfig<X> unit_triangle() { return make_real_config<X>({cx(0), cx(1), cx(0, 1)}); }

// unit square 0, 1, 1+i, i
inline VertexConfig<X> unit_square() {
  return make_real_config<X>({cx(0), cx(1), cx(1, 1), cx(0, 1)});
}

inline double cyclic_match_distance(const std::vector<ApproxComplex>& a,
                                    const std::vector<ApproxComplex>& b) {
  if (a.size() != b.size()) return 1e300;
  double best = 1e300;
  for (size_t r = 0; r < a.size(); ++r) {
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
      worst = std::max(worst, std::abs(a[i] - b[(i + r) % b.size()]));
    best = std::min(best, worst);
  }
  return best;
}

}  // namespace polymom::testing

#endif
