// fdens command-line front end: profiles, diagnostics, constructions.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fdens/json_io.hpp"
#include "fdens/profile.hpp"

namespace {

using fdens::BigInt;
using fdens::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotFound = 3;

// --modulus grammar: power:<p-rational> | log | example3 | @file.json
fdens::ModulusDescriptor parse_modulus(const std::string& text) {
  if (!text.empty() && text[0] == '@')
    return fdens::descriptor_from_json(fdens::load_json_file(text.substr(1)));
  if (text == "log") return fdens::ModulusDescriptor::log();
  if (text == "example3") return fdens::ModulusDescriptor::example3();
  if (text.rfind("power:", 0) == 0)
    return fdens::ModulusDescriptor::power(fdens::Rational::parse(text.substr(6)));
  throw std::invalid_argument(
      "bad --modulus (expected power:<p>, log, example3, or @file.json): " + text);
}

// --set value: builtin name or a JSON set-definition file
fdens::IntegerSet parse_set(const std::string& text) {
  if (text == "evens" || text == "squares" || text == "powers-of-two")
    return fdens::IntegerSet::builtin(fdens::builtin_from_name(text));
  return fdens::set_from_json(fdens::load_json_file(text));
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << body;
}

void write_json(const std::string& path, const Json& j) {
  write_text(path, j.dump(2) + "\n");
}

struct CommonFlags {
  std::string modulus;
  std::string output;
  std::string horizon = "1000000";
  int kmax = 8;
  double epsilon = fdens::kTheorem2Epsilon;
  double xi = 0.5;
  int stages = 12;
  std::string cap = "10000000";
  std::uint64_t seed = 1;
  std::int64_t budget = 10000;
  int samples = 16;
  double tol = 1e-6;
  std::string set;
  std::string set_out;
  std::string result_path;
};

Json base_config(const std::string& subcommand, const CommonFlags& f) {
  Json c;
  c["subcommand"] = subcommand;
  if (!f.modulus.empty())
    c["modulus"] = fdens::descriptor_to_json(parse_modulus(f.modulus));
  if (!f.set.empty()) c["set"] = f.set;
  c["output"] = f.output.empty() ? Json(nullptr) : Json(f.output);
  return c;
}

int run_density(const CommonFlags& f) {
  const auto set = parse_set(f.set);
  const BigInt horizon = fdens::parse_bigint(f.horizon);
  if (horizon < 1) throw std::invalid_argument("--horizon must be >= 1");
  const auto grid = fdens::Grid::default_for(horizon);
  fdens::DensityProfile profile;
  if (f.modulus.empty()) {
    profile = fdens::density_profile(set, grid);
  } else {
    const auto m = fdens::Modulus::from_descriptor(parse_modulus(f.modulus));
    profile = fdens::f_density_profile(set, m, grid);
  }
  std::ostringstream csv;
  fdens::write_profile_csv(profile, csv);
  write_text(f.output, csv.str());
  return kExitOk;
}

int run_diagnose(const CommonFlags& f) {
  const auto m = fdens::Modulus::from_descriptor(parse_modulus(f.modulus));
  const BigInt horizon = fdens::parse_bigint(f.horizon);
  if (f.kmax < 3) throw std::invalid_argument("--kmax must be >= 3");
  if (f.epsilon <= 0 || f.epsilon >= 0.5)
    throw std::invalid_argument("--epsilon must lie in (0, 0.5)");
  if (horizon < (BigInt(100) << f.kmax))
    throw std::invalid_argument("--horizon must be >= 100 * 2^kmax");

  Json out;
  out["config"] = base_config("diagnose", f);
  out["config"]["horizon"] = horizon.str();
  out["config"]["kmax"] = f.kmax;
  out["config"]["epsilon"] = f.epsilon;
  out["theorem2"] = fdens::criterion_to_json(fdens::theorem2_verdict(m, horizon, f.epsilon));
  out["theorem1_trend"] = fdens::criterion_to_json(fdens::theorem1_trend(m, f.kmax, horizon));
  write_json(f.output, out);
  return kExitOk;
}

int run_lemma1(const CommonFlags& f) {
  const auto m = fdens::Modulus::from_descriptor(parse_modulus(f.modulus));
  const BigInt horizon = fdens::parse_bigint(f.horizon);
  if (f.kmax < 1) throw std::invalid_argument("--kmax must be >= 1");
  if (f.tol < 0) throw std::invalid_argument("--tol must be >= 0");
  if (horizon < 100) throw std::invalid_argument("--horizon must be >= 100");

  const auto verdict = fdens::lemma1_check(m, f.kmax, horizon, f.tol);
  Json out;
  out["config"] = base_config("lemma1", f);
  out["config"]["horizon"] = horizon.str();
  out["config"]["kmax"] = f.kmax;
  out["config"]["tol"] = f.tol;
  out["report"] = fdens::criterion_to_json(verdict);
  write_json(f.output, out);
  return verdict.policy.at("consistent") == 1.0 ? kExitOk : kExitFailedCheck;
}

int run_separate(const CommonFlags& f) {
  const auto m = fdens::Modulus::from_descriptor(parse_modulus(f.modulus));
  const BigInt cap = fdens::parse_bigint(f.cap);
  if (!(f.xi > 0 && f.xi < 1)) throw std::invalid_argument("--xi must lie in (0, 1)");
  if (f.stages < 1) throw std::invalid_argument("--stages must be >= 1");
  if (cap < 1) throw std::invalid_argument("--cap must be >= 1");

  const auto result = fdens::build_separating_set(m, f.xi, f.stages, cap);
  Json out = fdens::separator_to_json(result);
  out["config"] = base_config("separate", f);
  out["config"]["xi"] = f.xi;
  out["config"]["stages"] = f.stages;
  out["config"]["cap"] = cap.str();
  write_json(f.output, out);
  if (!f.set_out.empty()) write_json(f.set_out, fdens::set_to_json(result.to_set()));
  if (!result.complete()) {
    std::cerr << "no witness below cap " << cap << " at stage " << *result.not_found_at
              << " (evidence consistent with the level-" << *result.not_found_at
              << " dyadic rate staying <= " << f.xi << ")\n";
    return kExitNotFound;
  }
  return kExitOk;
}

int run_verify(const CommonFlags& f) {
  const auto m = fdens::Modulus::from_descriptor(parse_modulus(f.modulus));
  if (f.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  const auto result = fdens::separator_from_json(fdens::load_json_file(f.result_path));
  const auto report = fdens::verify_construction(result, m, f.samples);
  Json out = fdens::construction_report_to_json(report);
  out["config"] = base_config("verify", f);
  out["config"]["result"] = f.result_path;
  out["config"]["samples"] = f.samples;
  write_json(f.output, out);
  return report.pass ? kExitOk : kExitFailedCheck;
}

int run_axioms(const CommonFlags& f) {
  const auto m = fdens::Modulus::from_descriptor(parse_modulus(f.modulus));
  if (f.budget < 1) throw std::invalid_argument("--budget must be >= 1");
  const auto report = fdens::check_axioms(m, f.budget, f.seed);
  Json out = fdens::axiom_report_to_json(report);
  out["config"] = base_config("axioms", f);
  out["config"]["budget"] = f.budget;
  out["config"]["seed"] = f.seed;
  write_json(f.output, out);
  return report.all_pass() ? kExitOk : kExitFailedCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"density diagnostics for modulus functions on the naturals"};
  app.require_subcommand(1);
  CommonFlags f;

  auto* density = app.add_subcommand("density", "counting-function profile as CSV");
  density->add_option("--set", f.set, "builtin name or set-definition JSON file")->required();
  density->add_option("--horizon", f.horizon, "largest n in the grid");
  density->add_option("--modulus", f.modulus, "add f-density columns");
  density->add_option("--output", f.output, "output path (default stdout)");

  auto* diagnose = app.add_subcommand("diagnose", "doubling-ratio and dyadic-rate verdicts");
  diagnose->add_option("--modulus", f.modulus)->required();
  diagnose->add_option("--horizon", f.horizon);
  diagnose->add_option("--kmax", f.kmax, "largest dyadic level (default 8)");
  diagnose->add_option("--epsilon", f.epsilon, "decision epsilon (default 0.1)");
  diagnose->add_option("--output", f.output);

  auto* lemma1 = app.add_subcommand("lemma1", "check g(k) ~ a^k consistency");
  lemma1->add_option("--modulus", f.modulus)->required();
  lemma1->add_option("--kmax", f.kmax)->required();
  lemma1->add_option("--tol", f.tol)->required();
  lemma1->add_option("--horizon", f.horizon);
  lemma1->add_option("--output", f.output);

  auto* separate = app.add_subcommand("separate", "build the separating block set");
  separate->add_option("--modulus", f.modulus)->required();
  separate->add_option("--xi", f.xi, "witness threshold in (0,1), default 0.5");
  separate->add_option("--stages", f.stages, "stage count, default 12");
  separate->add_option("--cap", f.cap, "witness search cap, default 10^7");
  separate->add_option("--output", f.output);
  separate->add_option("--set-out", f.set_out, "also write the set as a Blocks file");

  auto* verify = app.add_subcommand("verify", "re-check a built construction");
  verify->add_option("--result", f.result_path)->required();
  verify->add_option("--modulus", f.modulus)->required();
  verify->add_option("--samples", f.samples, "tail samples per stage, default 16");
  verify->add_option("--output", f.output);

  auto* axioms = app.add_subcommand("axioms", "sample the five modulus axioms");
  axioms->add_option("--modulus", f.modulus)->required();
  axioms->add_option("--budget", f.budget, "samples per axiom, default 10^4");
  axioms->add_option("--seed", f.seed, "rng seed, default 1");
  axioms->add_option("--output", f.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (density->parsed()) return run_density(f);
    if (diagnose->parsed()) return run_diagnose(f);
    if (lemma1->parsed()) return run_lemma1(f);
    if (separate->parsed()) return run_separate(f);
    if (verify->parsed()) return run_verify(f);
    if (axioms->parsed()) return run_axioms(f);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
