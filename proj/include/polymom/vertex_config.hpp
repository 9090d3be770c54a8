#ifndef POLYMOM_VERTEX_CONFIG_HPP
#define POLYMOM_VERTEX_CONFIG_HPP

#include <vector>

#include "polymom/perm.hpp"
#include "polymom/scalars.hpp"

namespace polymom {

enum class VertexMode { real, complexified };

// Complexified vertex tuple: z and zbar are independent coordinate vectors.
// Real mode asserts zbar_j = conj(z_j) and is checked on construction.
template <class S>
struct VertexConfig {
  VertexMode mode = VertexMode::complexified;
  std::vector<S> z, zbar;

  int n() const { return static_cast<int>(z.size()); }
};

template <class S>
VertexConfig<S> make_real_config(std::vector<S> z) {
  if (z.size() < 3) raise(errc::invalid_input, "vertex count must be >= 3");
  VertexConfig<S> cfg;
  cfg.mode = VertexMode::real;
  cfg.zbar.reserve(z.size());
  for (const S& v : z) cfg.zbar.push_back(ScalarOps<S>::conj(v));
  cfg.z = std::move(z);
  return cfg;
}

template <class S>
VertexConfig<S> make_complexified_config(std::vector<S> z, std::vector<S> zbar) {
  if (z.size() < 3) raise(errc::invalid_input, "vertex count must be >= 3");
  if (z.size() != zbar.size()) raise(errc::invalid_input, "z/zbar length mismatch");
  VertexConfig<S> cfg;
  cfg.mode = VertexMode::complexified;
  cfg.z = std::move(z);
  cfg.zbar = std::move(zbar);
  return cfg;
}

// Validates the conjugation invariant when mode == real.
template <class S>
VertexConfig<S> make_config(std::vector<S> z, std::vector<S> zbar, VertexMode mode) {
  if (mode == VertexMode::real) {
    if (z.size() != zbar.size()) raise(errc::invalid_input, "z/zbar length mismatch");
    for (size_t j = 0; j < z.size(); ++j)
      if (!(zbar[j] == ScalarOps<S>::conj(z[j])))
        raise(errc::invalid_input, "real mode requires zbar = conj(z)");
    VertexConfig<S> cfg = make_complexified_config(std::move(z), std::move(zbar));
    cfg.mode = VertexMode::real;
    return cfg;
  }
  return make_complexified_config(std::move(z), std::move(zbar));
}

// z'_j = z_{sigma(j)}, zbar'_j = zbar_{tau(j)}.
template <class S>
VertexConfig<S> relabel(const VertexConfig<S>& cfg, const Perm& sigma, const Perm& tau) {
  const int n = cfg.n();
  if (sigma.size() != n || tau.size() != n) raise(errc::invalid_input, "permutation size mismatch");
  VertexConfig<S> out;
  out.mode = (cfg.mode == VertexMode::real && sigma == tau) ? VertexMode::real
                                                            : VertexMode::complexified;
  out.z.resize(static_cast<size_t>(n));
  out.zbar.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    out.z[static_cast<size_t>(j)] = cfg.z[static_cast<size_t>(sigma(j))];
    out.zbar[static_cast<size_t>(j)] = cfg.zbar[static_cast<size_t>(tau(j))];
  }
  return out;
}

// The (z_i, z_j, z_k) sub-triangle with matching zbar data.
template <class S>
VertexConfig<S> subtriangle(const VertexConfig<S>& cfg, int i, int j, int k) {
  VertexConfig<S> out;
  out.mode = cfg.mode;
  for (int t : {i, j, k}) {
    out.z.push_back(cfg.z[static_cast<size_t>(t)]);
    out.zbar.push_back(cfg.zbar[static_cast<size_t>(t)]);
  }
  return out;
}

// Dilation (t*z, t*zbar). Even a real t breaks the conjugation pairing unless
// both coordinates were scaled conjugately, so the result is complexified.
template <class S>
VertexConfig<S> scaled(const VertexConfig<S>& cfg, const S& t) {
  VertexConfig<S> out = cfg;
  out.mode = VertexMode::complexified;
  for (S& v : out.z) v = v * t;
  for (S& v : out.zbar) v = v * t;
  return out;
}

template <class S>
VertexConfig<ApproxComplex> to_float(const VertexConfig<S>& cfg) {
  VertexConfig<ApproxComplex> out;
  out.mode = cfg.mode;
  for (const S& v : cfg.z) out.z.push_back(ScalarOps<S>::to_c(v));
  for (const S& v : cfg.zbar) out.zbar.push_back(ScalarOps<S>::to_c(v));
  return out;
}

}  // namespace polymom

#endif
