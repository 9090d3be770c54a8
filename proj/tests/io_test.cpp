#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "polymom/io.hpp"
#include "polymom/verify.hpp"

using namespace polymom;
using namespace polymom::testing;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  out << body;
}

#ifdef POLYMOM_CLI_PATH
int run_cli(const std::string& args, const std::string& out_path, const std::string& err_path) {
  std::string cmd = std::string(POLYMOM_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

void ensure_dir(const std::string& dir) {
  int rc = std::system(("mkdir -p " + dir).c_str());
  REQUIRE(rc == 0);
}
#endif

}  // namespace

TEST_CASE("exact config json round trip") {
  json j = io::config_to_json(unit_triangle());
  CHECK(j["mode"] == "real");
  CHECK(j["n"] == 3);
  CHECK(j["vertices"][2]["z"][1] == "1");
  CHECK_FALSE(j["vertices"][0].contains("zbar"));
  VertexConfig<X> back = io::exact_config_from_json(j);
  CHECK(back.z == unit_triangle().z);
  CHECK(back.zbar == unit_triangle().zbar);

  Sampler smp(7);
  VertexConfig<X> cx5 = smp.config(5, VertexMode::complexified, 9);
  VertexConfig<X> back5 = io::exact_config_from_json(io::config_to_json(cx5));
  CHECK(back5.z == cx5.z);
  CHECK(back5.zbar == cx5.zbar);
}

TEST_CASE("schema violations are rejected") {
  json j = io::config_to_json(unit_triangle());
  j["vertices"][0]["zbar"] = json::array({"0", "0"});  // zbar forbidden in real mode
  CHECK_THROWS_AS(io::exact_config_from_json(j), Error);

  json k = io::config_to_json(unit_triangle());
  k["mode"] = "complexified";  // zbar now required
  CHECK_THROWS_AS(io::exact_config_from_json(k), Error);

  json m = io::config_to_json(unit_triangle());
  m["vertices"][1]["z"] = json::array({0.5, 0.0});  // numbers in exact mode
  CHECK_THROWS_AS(io::exact_config_from_json(m), Error);

  json f = io::config_to_json(to_float(unit_triangle()));
  f["vertices"][1]["z"] = json::array({"1/2", "0"});  // strings in float mode
  CHECK_THROWS_AS(io::approx_config_from_json(f), Error);
}

TEST_CASE("moment table json round trip") {
  MomentTable<X> t = moment_table(unit_triangle(), 5);
  json j = io::table_to_json(t);
  CHECK(j["nu"][0][0] == "1/2");
  CHECK(j["nu"][0][1] == "0");
  MomentTable<X> back = io::exact_table_from_json(j);
  CHECK(back.nu == t.nu);
  CHECK(back.nubar == t.nubar);
}

TEST_CASE("svg rendering") {
  std::string svg = io::polygon_svg({{0, 0}, {1, 0}, {0, 1}});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("viewBox") != std::string::npos);
  CHECK(svg.find("<path") != std::string::npos);
  CHECK(svg.find("v3") != std::string::npos);
}

#ifdef POLYMOM_CLI_PATH

TEST_CASE("cli compute on the running triangle") {
  std::string dir = "cli_tmp";
  ensure_dir(dir);
  spit(dir + "/tri.json", io::config_to_json(unit_triangle()).dump());

  int code = run_cli("--command compute --input " + dir + "/tri.json --kmax 4 --mode exact",
                     dir + "/out.json", dir + "/err.txt");
  CHECK(code == 0);
  json out = json::parse(slurp(dir + "/out.json"));
  CHECK(out["nu"] == json::parse(R"([["1/2","0"],["1/2","1/2"],["0","1/2"]])"));
  CHECK(out["adjoint"] == json::parse(R"([["1/2","0"]])"));

  // kmax below 2 is an input error with a machine-parsable report
  code = run_cli("--command compute --input " + dir + "/tri.json --kmax 1", dir + "/out.json",
                 dir + "/err.txt");
  CHECK(code == 2);
  json err = json::parse(slurp(dir + "/err.txt"));
  CHECK(err["error"] == 2);
  CHECK(err.contains("message"));
}

TEST_CASE("cli compute float mode") {
  std::string dir = "cli_tmp";
  ensure_dir(dir);
  spit(dir + "/sq.json", io::config_to_json(to_float(unit_square())).dump());
  int code = run_cli("--command compute --input " + dir + "/sq.json --kmax 4 --mode float",
                     dir + "/out.json", dir + "/err.txt");
  CHECK(code == 0);
  json out = json::parse(slurp(dir + "/out.json"));
  CHECK(out["nu"][0][0].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(out["nu"][0][1].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("cli reconstruct round trip with svg") {
  std::string dir = "cli_tmp";
  ensure_dir(dir);
  spit(dir + "/table.json", io::table_to_json(moment_table(unit_triangle(), 5)).dump());
  int code = run_cli("--command reconstruct --input " + dir + "/table.json --svg " + dir +
                         "/poly.svg",
                     dir + "/rec.json", dir + "/err.txt");
  CHECK(code == 0);
  json out = json::parse(slurp(dir + "/rec.json"));
  CHECK(out["residual"].get<double>() <= 1e-10);
  CHECK(out["n"] == 3);
  CHECK(slurp(dir + "/poly.svg").find("<svg") != std::string::npos);

  // perturbed moments: realizability failure, exit 1
  MomentTable<X> bad = moment_table(unit_square(), 7);
  bad.nu[1] += cx(1);
  spit(dir + "/bad.json", io::table_to_json(bad).dump());
  code = run_cli("--command reconstruct --input " + dir + "/bad.json", dir + "/rec.json",
                 dir + "/err.txt");
  CHECK(code == 1);

  // vanishing nu_2: singular moment matrix, exit 3
  MomentTable<X> sing = moment_table(make_real_config<X>({cx(0), cx(1), cx(2)}), 5);
  spit(dir + "/sing.json", io::table_to_json(sing).dump());
  code = run_cli("--command reconstruct --input " + dir + "/sing.json", dir + "/rec.json",
                 dir + "/err.txt");
  CHECK(code == 3);
}

TEST_CASE("cli verify determinism and exit codes") {
  std::string dir = "cli_tmp";
  ensure_dir(dir);
  int code = run_cli("--command verify --suite span --seed 7 --jobs 1", dir + "/v1.json",
                     dir + "/err.txt");
  CHECK(code == 0);
  code = run_cli("--command verify --suite span --seed 7 --jobs 4", dir + "/v2.json",
                 dir + "/err.txt");
  CHECK(code == 0);
  CHECK(slurp(dir + "/v1.json") == slurp(dir + "/v2.json"));  // byte-identical

  json rep = json::parse(slurp(dir + "/v1.json"));
  CHECK(rep["rank"]["3"] == 4);
  CHECK(rep["rank"]["4"] == 9);
  CHECK(rep["rank"]["5"] == 16);
  CHECK(rep["passed"] == true);

  code = run_cli("--command verify --suite bogus", dir + "/v3.json", dir + "/err.txt");
  CHECK(code == 2);

  // a user configuration drives the per-configuration checks
  spit(dir + "/tri.json", io::config_to_json(unit_triangle()).dump());
  code = run_cli("--command verify --suite triangle --input " + dir + "/tri.json",
                 dir + "/v4.json", dir + "/err.txt");
  CHECK(code == 0);
  spit(dir + "/garbage.json", "{\"n\": 3}");
  code = run_cli("--command verify --suite triangle --input " + dir + "/garbage.json",
                 dir + "/v5.json", dir + "/err.txt");
  CHECK(code == 2);
}

#endif  // POLYMOM_CLI_PATH
