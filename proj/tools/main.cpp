#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "polymom/inverse.hpp"
#include "polymom/io.hpp"
#include "polymom/verify.hpp"

namespace {

using nlohmann::json;
using namespace polymom;

// Exit codes: 0 pass, 1 verification/realizability failure, 2 input error,
// 3 numerical/singularity failure.
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kNumericalError = 3;

struct JobSpec {
  std::string command;
  std::string input_path, output_path, svg_path;
  std::string mode = "exact";
  std::string suite;
  int n = 0;
  int kmax = 0;
  double tol = 1e-8;
  std::uint64_t seed = 42;
  int jobs = 1;  // accepted as a hint; evaluation is deterministic regardless
};

[[noreturn]] void die(int code, const std::string& message) {
  json err;
  err["error"] = code;
  err["message"] = message;
  std::cerr << err.dump() << "\n";
  std::exit(code);
}

json read_json_input(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) die(kInputError, "cannot open input file '" + path + "'");
    in = &file;
  }
  json j = json::parse(*in, nullptr, false);
  if (j.is_discarded()) die(kInputError, "input is not valid JSON");
  return j;
}

void write_output(const std::string& path, const json& j) {
  std::string body = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) die(kInputError, "cannot open output file '" + path + "'");
  out << body;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) die(kInputError, "cannot open output file '" + path + "'");
  out << body;
}

template <class S>
json compute_result(const VertexConfig<S>& cfg, int kmax) {
  MomentTable<S> table = moment_table(cfg, kmax);
  json out = io::table_to_json(table);
  UniPoly<S> ad = adjoint_numerator(cfg);
  json adjoint = json::array();
  for (int d = 0; d <= cfg.n() - 3; ++d) adjoint.push_back(io::complex_to_json(ad.coeff(d)));
  out["adjoint"] = adjoint;
  json q = json::array();
  for (const S& v : q_coefficients(cfg)) q.push_back(io::complex_to_json(v));
  out["q"] = q;
  return out;
}

int cmd_compute(const JobSpec& spec) {
  if (spec.kmax < 2) die(kInputError, "compute requires --kmax >= 2");
  json input = read_json_input(spec.input_path);
  try {
    json out;
    if (spec.mode == "exact")
      out = compute_result(io::exact_config_from_json(input), spec.kmax);
    else
      out = compute_result(io::approx_config_from_json(input), spec.kmax);
    write_output(spec.output_path, out);
    return kOk;
  } catch (const Error& e) {
    switch (e.code()) {
      case errc::invalid_input:
      case errc::invalid_cycle:
      case errc::invalid_triangulation:
        die(kInputError, e.what());
      default:
        die(kNumericalError, e.what());
    }
  }
}

int cmd_reconstruct(const JobSpec& spec) {
  json input = read_json_input(spec.input_path);
  try {
    Reconstruction<ExactComplex> rec;
    int n = 0;
    if (spec.mode == "exact") {
      MomentTable<ExactComplex> table = io::exact_table_from_json(input);
      n = spec.n > 0 ? spec.n : table.n;
      rec = reconstruct_real(table, n, spec.tol);
    } else {
      MomentTable<ApproxComplex> table = io::approx_table_from_json(input);
      n = spec.n > 0 ? spec.n : table.n;
      Reconstruction<ApproxComplex> frec = reconstruct_real(table, n, spec.tol);
      rec.config = frec.config;
      rec.residual = frec.residual;
    }
    json out = io::config_to_json(rec.config);
    out["residual"] = rec.residual;
    write_output(spec.output_path, out);
    if (!spec.svg_path.empty()) write_file(spec.svg_path, io::polygon_svg(rec.config.z));
    return kOk;
  } catch (const Error& e) {
    switch (e.code()) {
      case errc::no_matching_order:
        die(kFail, e.what());
      case errc::invalid_input:
      case errc::insufficient_moments:
        die(kInputError, e.what());
      default:
        die(kNumericalError, e.what());
    }
  }
}

int cmd_verify(const JobSpec& spec) {
  if (spec.suite.empty()) die(kInputError, "verify requires --suite");
  bool known = false;
  for (const std::string& name : verify::suite_names()) known = known || name == spec.suite;
  if (!known) die(kInputError, "unknown suite '" + spec.suite + "'");
  std::optional<VertexConfig<ExactComplex>> cfg;
  if (!spec.input_path.empty()) {
    try {
      cfg = io::exact_config_from_json(read_json_input(spec.input_path));
    } catch (const Error& e) {
      die(kInputError, e.what());
    }
  }
  verify::SuiteResult result = verify::run_suite(spec.suite, spec.seed, cfg ? &*cfg : nullptr);
  write_output(spec.output_path, result.report);
  return result.passed ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  JobSpec spec;
  CLI::App app{"harmonic and anti-harmonic moments of plane polygons"};
  app.add_option("--command", spec.command, "compute | reconstruct | verify")->required();
  app.add_option("--input", spec.input_path, "input JSON path (stdin when omitted)");
  app.add_option("--output", spec.output_path, "output JSON path (stdout when omitted)");
  app.add_option("--n", spec.n, "vertex count (reconstruct; defaults to the table's n)");
  app.add_option("--kmax", spec.kmax, "highest moment index (compute)");
  app.add_option("--mode", spec.mode, "exact | float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", spec.tol, "float matching tolerance (default 1e-8)");
  app.add_option("--seed", spec.seed, "random seed for verification suites (default 42)");
  app.add_option("--suite", spec.suite,
                 "verify: oracle|recurrence|inverse|orbit|span|relations|triangle|galois3|all");
  app.add_option("--jobs", spec.jobs, "parallelism hint (results are deterministic regardless)");
  app.add_option("--svg", spec.svg_path, "write an SVG rendering of the polygon (reconstruct)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    json err;
    err["error"] = kInputError;
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return kInputError;
  }

  if (spec.command == "compute") return cmd_compute(spec);
  if (spec.command == "reconstruct") return cmd_reconstruct(spec);
  if (spec.command == "verify") return cmd_verify(spec);
  die(kInputError, "unknown command '" + spec.command + "'");
}
