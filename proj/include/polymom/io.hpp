#ifndef POLYMOM_IO_HPP
#define POLYMOM_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "polymom/moments.hpp"
#include "polymom/vertex_config.hpp"

namespace polymom::io {

using nlohmann::json;

// Number encoding: exact values are strings "p" or "p/q"; float values are
// JSON numbers. The two encodings never mix within one document.

json complex_to_json(const ExactComplex& v);
json complex_to_json(const ApproxComplex& v);
ExactComplex exact_complex_from_json(const json& j);
ApproxComplex approx_complex_from_json(const json& j);

// {"n": int, "mode": "real"|"complexified",
//  "vertices": [{"z": [re,im], "zbar": [re,im]?}, ...]}
// zbar is forbidden in real mode and required in complexified mode.
json config_to_json(const VertexConfig<ExactComplex>& cfg);
json config_to_json(const VertexConfig<ApproxComplex>& cfg);
VertexConfig<ExactComplex> exact_config_from_json(const json& j);
VertexConfig<ApproxComplex> approx_config_from_json(const json& j);

// {"n": int, "kmax": int, "nu": [[re,im],...], "nubar": [[re,im],...]}
// nu starts at k = 2; nubar may be omitted on input.
json table_to_json(const MomentTable<ExactComplex>& t);
json table_to_json(const MomentTable<ApproxComplex>& t);
MomentTable<ExactComplex> exact_table_from_json(const json& j);
MomentTable<ApproxComplex> approx_table_from_json(const json& j);

// Polygon rendering: single path plus labeled vertex circles, viewBox fitted
// with a 5% margin.
std::string polygon_svg(const std::vector<ApproxComplex>& vertices);

}  // namespace polymom::io

#endif
