#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fdens/json_io.hpp"

namespace fs = std::filesystem;
using fdens::Json;

namespace {

const std::string kCli = FDENS_CLI_PATH;

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

fs::path temp_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "fdens_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const fs::path out = temp_dir() / "stdout.txt";
  const std::string cmd = kCli + " " + args + " > " + out.string() + " 2> " +
                          (temp_dir() / "stderr.txt").string();
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.stdout_text = ss.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("separate emits the documented construction and a loadable set file") {
  const auto result_path = temp_dir() / "sep.json";
  const auto set_path = temp_dir() / "sep_set.json";
  const auto r = run_cli("separate --modulus log --xi 0.5 --stages 3 --cap 1000000 --output " +
                         result_path.string() + " --set-out " + set_path.string());
  REQUIRE(r.exit_code == 0);

  const Json j = fdens::load_json_file(result_path.string());
  CHECK(j.at("status") == "complete");
  CHECK(j.at("xi") == 0.5);
  REQUIRE(j.at("stages").size() == 3);
  CHECK(j["stages"][0]["n"] == "1");
  CHECK(j["stages"][1]["n"] == "3");
  CHECK(j["stages"][2]["n"] == "7");
  CHECK(j["stages"][0]["m"] == "2");
  CHECK(j["stages"][1]["m"] == "12");
  CHECK(j["stages"][2]["m"] == "56");
  CHECK(j["stages"][2]["block"] == Json::array({"52", "55"}));
  CHECK(j.at("config").at("subcommand") == "separate");

  // the emitted set file round-trips into the blocks representation
  const auto set = fdens::set_from_json(fdens::load_json_file(set_path.string()));
  REQUIRE(set.is_blocks());
  CHECK(fdens::alpha(set, 56) == 7);

  // and verify accepts the result
  const auto v = run_cli("verify --result " + result_path.string() +
                         " --modulus log --samples 8");
  CHECK(v.exit_code == 0);

  // density consumes the set file
  const auto d = run_cli("density --set " + set_path.string() + " --horizon 100");
  CHECK(d.exit_code == 0);
  CHECK(d.stdout_text.substr(0, 38) == "n,alpha,nat_ratio,f_ratio,f_ratio_err\n");
}

TEST_CASE("verify exits 1 on a tampered result") {
  const auto result_path = temp_dir() / "sep4.json";
  REQUIRE(run_cli("separate --modulus log --xi 0.5 --stages 4 --cap 1000000 --output " +
                  result_path.string())
              .exit_code == 0);
  Json j = fdens::load_json_file(result_path.string());
  j["stages"][1]["block"][0] = "2";  // overlap the first stage point
  {
    std::ofstream out(result_path);
    out << j.dump(2);
  }
  const auto v = run_cli("verify --result " + result_path.string() + " --modulus log");
  CHECK(v.exit_code == 1);
}

TEST_CASE("separate without a witness below the cap exits 3 with the partial result") {
  const auto out_path = temp_dir() / "nf.json";
  const auto r = run_cli("separate --modulus power:1/2 --xi 0.9 --stages 2 --cap 5000 --output " +
                         out_path.string());
  CHECK(r.exit_code == 3);
  const Json j = fdens::load_json_file(out_path.string());
  CHECK(j.at("status") == "not-found");
  CHECK(j.at("not_found_at") == 1);
  CHECK(j.at("stages").empty());
}

TEST_CASE("diagnose reports the doubling rate and both verdicts") {
  const auto out_path = temp_dir() / "diag.json";
  const auto r = run_cli("diagnose --modulus power:1/2 --horizon 1000000 --output " +
                         out_path.string());
  REQUIRE(r.exit_code == 0);
  const Json j = fdens::load_json_file(out_path.string());
  CHECK(j.at("theorem2").at("verdict") == "equal-ideals");
  const double a = j.at("theorem2").at("a").get<double>();
  CHECK(std::abs(a - 0.7071067811865475) < 1e-9);
  CHECK(j.at("theorem1_trend").at("verdict") == "equal-ideals");
  CHECK(j.at("theorem1_trend").at("estimates").size() == 8);
  CHECK(j.at("config").at("horizon") == "1000000");
  CHECK(j.at("config").at("modulus").at("family") == "power");
  CHECK(j.at("config").at("modulus").at("p") == "1/2");
}

TEST_CASE("axioms subcommand passes for the dyadic modulus and is byte-deterministic") {
  const auto out1 = temp_dir() / "ax1.json";
  const auto out2 = temp_dir() / "ax2.json";
  const std::string args = "axioms --modulus example3 --budget 20000 --seed 1 --output ";
  REQUIRE(run_cli(args + out1.string()).exit_code == 0);
  REQUIRE(run_cli(args + out2.string()).exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));
  const Json j = fdens::load_json_file(out1.string());
  CHECK(j.at("all_pass") == true);
  CHECK(j.at("axioms").at("subadditivity").at("pass") == true);
  CHECK(j.at("config").at("seed") == 1);
}

TEST_CASE("lemma1 subcommand: consistent powers exit 0, the oscillator exits 2") {
  const auto out_path = temp_dir() / "lem.json";
  const auto ok = run_cli("lemma1 --modulus power:1/2 --kmax 6 --tol 1e-6 --output " +
                          out_path.string());
  CHECK(ok.exit_code == 0);
  const Json j = fdens::load_json_file(out_path.string());
  CHECK(j.at("report").at("criterion") == "lemma1-consistency");
  CHECK(j.at("report").at("policy").at("consistent") == 1.0);

  const auto bad = run_cli("lemma1 --modulus example3 --kmax 4 --tol 1e-3 --horizon 1048576");
  CHECK(bad.exit_code == 2);  // hypothesis fails: precondition error
}

TEST_CASE("density on a builtin writes the profile CSV") {
  const auto out_path = temp_dir() / "prof.csv";
  const auto r = run_cli("density --set evens --horizon 2000 --modulus power:1 --output " +
                         out_path.string());
  REQUIRE(r.exit_code == 0);
  const std::string csv = slurp(out_path);
  CHECK(csv.rfind("n,alpha,nat_ratio,f_ratio,f_ratio_err\n", 0) == 0);
  CHECK(csv.find("\n2000,1000,0.5,0.5,0\n") != std::string::npos);
}

TEST_CASE("usage and file errors exit 2 with a one-line diagnostic") {
  CHECK(run_cli("diagnose --modulus nope --horizon 1000000").exit_code == 2);
  CHECK(run_cli("diagnose --modulus power:1/2 --horizon 10").exit_code == 2);
  CHECK(run_cli("diagnose --modulus power:0/1 --horizon 1000000").exit_code == 2);
  CHECK(run_cli("separate --modulus log --xi 1.5 --stages 2 --cap 100").exit_code == 2);
  CHECK(run_cli("density --set missing_file.json --horizon 100").exit_code == 2);
  CHECK(run_cli("verify --result missing.json --modulus log").exit_code == 2);
  CHECK(run_cli("axioms --modulus log --budget 0").exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  // malformed JSON file
  const auto bad_json = temp_dir() / "bad.json";
  {
    std::ofstream out(bad_json);
    out << "{not json";
  }
  CHECK(run_cli("density --set " + bad_json.string() + " --horizon 100").exit_code == 2);
}

TEST_CASE("modulus descriptors load from JSON files via @path") {
  const auto mod_path = temp_dir() / "mod.json";
  {
    std::ofstream out(mod_path);
    out << R"({"family": "power", "p": "1/4"})";
  }
  const auto out_path = temp_dir() / "diag4.json";
  const auto r = run_cli("diagnose --modulus @" + mod_path.string() +
                         " --horizon 1000000 --output " + out_path.string());
  REQUIRE(r.exit_code == 0);
  const Json j = fdens::load_json_file(out_path.string());
  CHECK(std::abs(j.at("theorem2").at("a").get<double>() - 0.8408964152537146) < 1e-9);
  CHECK(j.at("theorem2").at("verdict") == "equal-ideals");
}

TEST_CASE("identical runs produce byte-identical outputs") {
  const auto o1 = temp_dir() / "rep1.json";
  const auto o2 = temp_dir() / "rep2.json";
  const std::string args = "diagnose --modulus log --horizon 250000 --kmax 6 --output ";
  REQUIRE(run_cli(args + o1.string()).exit_code == 0);
  REQUIRE(run_cli(args + o2.string()).exit_code == 0);
  CHECK(slurp(o1) == slurp(o2));
}
