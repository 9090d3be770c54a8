#include "polymom/io.hpp"

#include <algorithm>
#include <sstream>

namespace polymom::io {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) raise(errc::invalid_input, what);
}

Rational rational_from_json(const json& j) {
  require(j.is_string(), "exact mode requires rational strings \"p\" or \"p/q\"");
  return Rational::from_string(j.get<std::string>());
}

double number_from_json(const json& j) {
  require(j.is_number(), "float mode requires JSON numbers");
  double v = j.get<double>();
  require(std::isfinite(v), "non-finite number");
  return v;
}

template <class S, class Decode>
VertexConfig<S> config_from_json_impl(const json& j, Decode decode) {
  require(j.is_object(), "configuration must be a JSON object");
  require(j.contains("n") && j["n"].is_number_integer(), "missing integer field n");
  require(j.contains("mode") && j["mode"].is_string(), "missing mode");
  std::string mode = j["mode"].get<std::string>();
  require(mode == "real" || mode == "complexified", "mode must be real or complexified");
  require(j.contains("vertices") && j["vertices"].is_array(), "missing vertices array");
  const int n = j["n"].get<int>();
  require(static_cast<size_t>(n) == j["vertices"].size(), "n does not match vertices length");

  std::vector<S> z, zbar;
  for (const json& v : j["vertices"]) {
    require(v.is_object() && v.contains("z"), "vertex needs a z field");
    z.push_back(decode(v["z"]));
    if (mode == "real") {
      require(!v.contains("zbar"), "zbar is forbidden in real mode");
    } else {
      require(v.contains("zbar"), "zbar is required in complexified mode");
      zbar.push_back(decode(v["zbar"]));
    }
  }
  if (mode == "real") return make_real_config(std::move(z));
  return make_complexified_config(std::move(z), std::move(zbar));
}

template <class S, class Decode>
MomentTable<S> table_from_json_impl(const json& j, Decode decode) {
  require(j.is_object(), "moment table must be a JSON object");
  require(j.contains("n") && j["n"].is_number_integer(), "missing integer field n");
  require(j.contains("kmax") && j["kmax"].is_number_integer(), "missing integer field kmax");
  require(j.contains("nu") && j["nu"].is_array(), "missing nu array");
  MomentTable<S> t;
  t.n = j["n"].get<int>();
  t.kmax = j["kmax"].get<int>();
  require(t.kmax >= 2, "kmax must be >= 2");
  require(j["nu"].size() == static_cast<size_t>(t.kmax - 1), "nu must hold kmax-1 entries");
  for (const json& v : j["nu"]) t.nu.push_back(decode(v));
  if (j.contains("nubar")) {
    require(j["nubar"].is_array() && j["nubar"].size() == j["nu"].size(),
            "nubar must match nu in length");
    for (const json& v : j["nubar"]) t.nubar.push_back(decode(v));
  }
  return t;
}

template <class S>
json config_to_json_impl(const VertexConfig<S>& cfg) {
  json vertices = json::array();
  for (int i = 0; i < cfg.n(); ++i) {
    json v;
    v["z"] = complex_to_json(cfg.z[static_cast<size_t>(i)]);
    if (cfg.mode == VertexMode::complexified)
      v["zbar"] = complex_to_json(cfg.zbar[static_cast<size_t>(i)]);
    vertices.push_back(v);
  }
  json j;
  j["n"] = cfg.n();
  j["mode"] = cfg.mode == VertexMode::real ? "real" : "complexified";
  j["vertices"] = vertices;
  return j;
}

template <class S>
json table_to_json_impl(const MomentTable<S>& t) {
  json j;
  j["n"] = t.n;
  j["kmax"] = t.kmax;
  j["nu"] = json::array();
  j["nubar"] = json::array();
  for (const S& v : t.nu) j["nu"].push_back(complex_to_json(v));
  for (const S& v : t.nubar) j["nubar"].push_back(complex_to_json(v));
  return j;
}

}  // namespace

json complex_to_json(const ExactComplex& v) { return json::array({v.re.str(), v.im.str()}); }

json complex_to_json(const ApproxComplex& v) { return json::array({v.real(), v.imag()}); }

ExactComplex exact_complex_from_json(const json& j) {
  require(j.is_array() && j.size() == 2, "complex value must be [re, im]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

ApproxComplex approx_complex_from_json(const json& j) {
  require(j.is_array() && j.size() == 2, "complex value must be [re, im]");
  return {number_from_json(j[0]), number_from_json(j[1])};
}

json config_to_json(const VertexConfig<ExactComplex>& cfg) { return config_to_json_impl(cfg); }
json config_to_json(const VertexConfig<ApproxComplex>& cfg) { return config_to_json_impl(cfg); }

VertexConfig<ExactComplex> exact_config_from_json(const json& j) {
  return config_from_json_impl<ExactComplex>(j, exact_complex_from_json);
}

VertexConfig<ApproxComplex> approx_config_from_json(const json& j) {
  return config_from_json_impl<ApproxComplex>(j, approx_complex_from_json);
}

json table_to_json(const MomentTable<ExactComplex>& t) { return table_to_json_impl(t); }
json table_to_json(const MomentTable<ApproxComplex>& t) { return table_to_json_impl(t); }

MomentTable<ExactComplex> exact_table_from_json(const json& j) {
  return table_from_json_impl<ExactComplex>(j, exact_complex_from_json);
}

MomentTable<ApproxComplex> approx_table_from_json(const json& j) {
  return table_from_json_impl<ApproxComplex>(j, approx_complex_from_json);
}

std::string polygon_svg(const std::vector<ApproxComplex>& vertices) {
  double xmin = vertices[0].real(), xmax = xmin, ymin = vertices[0].imag(), ymax = ymin;
  for (const ApproxComplex& v : vertices) {
    xmin = std::min(xmin, v.real());
    xmax = std::max(xmax, v.real());
    ymin = std::min(ymin, v.imag());
    ymax = std::max(ymax, v.imag());
  }
  double w = std::max(xmax - xmin, 1e-9), h = std::max(ymax - ymin, 1e-9);
  double mx = 0.05 * w, my = 0.05 * h;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xmin - mx << " "
      << -(ymax + my) << " " << w + 2 * mx << " " << h + 2 * my << "\">\n";
  svg << "  <path fill=\"#dbeafe\" stroke=\"#1d4ed8\" stroke-width=\"" << 0.01 * std::max(w, h)
      << "\" d=\"";
  for (size_t i = 0; i < vertices.size(); ++i)
    svg << (i == 0 ? "M " : "L ") << vertices[i].real() << " " << -vertices[i].imag() << " ";
  svg << "Z\"/>\n";
  double r = 0.015 * std::max(w, h);
  for (size_t i = 0; i < vertices.size(); ++i) {
    svg << "  <circle cx=\"" << vertices[i].real() << "\" cy=\"" << -vertices[i].imag()
        << "\" r=\"" << r << "\" fill=\"#1d4ed8\"/>\n";
    svg << "  <text x=\"" << vertices[i].real() + 1.5 * r << "\" y=\"" << -vertices[i].imag()
        << "\" font-size=\"" << 4 * r << "\">v" << i + 1 << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace polymom::io
