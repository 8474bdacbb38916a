#include "fdens/json_io.hpp"

#include <fstream>

namespace fdens {

namespace {

BigInt bigint_from_json(const Json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw std::invalid_argument("expected integer or decimal string, got " + j.dump());
}

}  // namespace

Json descriptor_to_json(const ModulusDescriptor& d) {
  Json j;
  j["family"] = family_name(d.family());
  if (d.family() == ModulusFamily::Power) j["p"] = d.exponent()->str();
  return j;
}

ModulusDescriptor descriptor_from_json(const Json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "power")
    return ModulusDescriptor::power(Rational::parse(j.at("p").get<std::string>()));
  if (family == "log") return ModulusDescriptor::log();
  if (family == "example3") return ModulusDescriptor::example3();
  throw std::invalid_argument("unknown modulus family: " + family);
}

Json set_to_json(const IntegerSet& set) {
  Json j;
  if (set.is_builtin()) {
    j["type"] = "builtin";
    j["name"] = builtin_name(set.as_builtin());
  } else if (set.is_blocks()) {
    j["type"] = "blocks";
    Json blocks = Json::array();
    for (const auto& [a, b] : set.as_blocks().blocks)
      blocks.push_back(Json::array({a.str(), b.str()}));
    j["blocks"] = std::move(blocks);
  } else {
    j["type"] = "explicit";
    Json elems = Json::array();
    for (const auto& e : set.as_explicit().elements) elems.push_back(e.str());
    j["elements"] = std::move(elems);
  }
  return j;
}

IntegerSet set_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "builtin")
    return IntegerSet::builtin(builtin_from_name(j.at("name").get<std::string>()));
  if (type == "blocks") {
    std::vector<std::pair<BigInt, BigInt>> blocks;
    for (const auto& blk : j.at("blocks")) {
      if (!blk.is_array() || blk.size() != 2)
        throw std::invalid_argument("each block must be a [lo, hi] pair");
      blocks.emplace_back(bigint_from_json(blk[0]), bigint_from_json(blk[1]));
    }
    return IntegerSet::block_set(std::move(blocks));
  }
  if (type == "explicit") {
    std::vector<BigInt> elems;
    for (const auto& e : j.at("elements")) elems.push_back(bigint_from_json(e));
    return IntegerSet::explicit_set(std::move(elems));
  }
  throw std::invalid_argument("unknown set type: " + type);
}

Json separator_to_json(const SeparatorResult& r) {
  Json j;
  j["xi"] = r.xi;
  j["requested_stages"] = r.requested_stages;
  j["cap"] = r.cap.str();
  j["status"] = r.complete() ? "complete" : "not-found";
  if (r.not_found_at) j["not_found_at"] = *r.not_found_at;
  Json stages = Json::array();
  for (const auto& s : r.stages) {
    Json stage;
    stage["k"] = s.k;
    stage["n"] = s.n.str();
    stage["m"] = s.m.str();
    stage["block"] = Json::array({s.block_lo.str(), s.block_hi.str()});
    stages.push_back(std::move(stage));
  }
  j["stages"] = std::move(stages);
  j["set"] = set_to_json(r.to_set());
  return j;
}

SeparatorResult separator_from_json(const Json& j) {
  SeparatorResult r;
  r.xi = j.at("xi").get<double>();
  r.requested_stages = j.value("requested_stages", 0);
  if (j.contains("cap")) r.cap = bigint_from_json(j.at("cap"));
  if (j.contains("not_found_at")) r.not_found_at = j.at("not_found_at").get<int>();
  for (const auto& js : j.at("stages")) {
    SeparatorStage s;
    s.k = js.at("k").get<int>();
    s.n = bigint_from_json(js.at("n"));
    s.m = bigint_from_json(js.at("m"));
    const auto& blk = js.at("block");
    if (!blk.is_array() || blk.size() != 2)
      throw std::invalid_argument("stage block must be a [lo, hi] pair");
    s.block_lo = bigint_from_json(blk[0]);
    s.block_hi = bigint_from_json(blk[1]);
    r.stages.push_back(std::move(s));
  }
  if (r.requested_stages == 0) r.requested_stages = static_cast<int>(r.stages.size());
  return r;
}

Json construction_report_to_json(const ConstructionReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["samples_per_stage"] = r.samples_per_stage;
  Json checks = Json::array();
  for (const auto& s : r.stages) {
    auto add = [&](const std::string& name, bool ok, Json detail = {}) {
      Json c;
      c["k"] = s.k;
      c["check"] = name;
      c["pass"] = ok;
      if (!detail.is_null()) c["detail"] = std::move(detail);
      checks.push_back(std::move(c));
    };
    add("alpha-at-mk-equals-nk", s.alpha_ok);
    add("f-ratio-exceeds-xi", s.ratio_ok, s.ratio_value);
    add("block-disjoint", s.disjoint_ok);
    add("tail-ratio-below-2^-k", s.tail_ok, s.tail_worst_j.str());
  }
  j["checks"] = std::move(checks);
  return j;
}

Json criterion_to_json(const CriterionVerdict& v) {
  Json j;
  j["criterion"] = v.criterion;
  j["verdict"] = verdict_name(v.verdict);
  j["a"] = v.a ? Json(*v.a) : Json(nullptr);
  Json estimates = Json::array();
  for (const auto& e : v.estimates) {
    Json je;
    if (e.k) je["k"] = *e.k;
    je["t"] = e.t;
    je["value"] = to_double(e.estimate.value);
    je["argmax_n"] = e.argmax_n.str();
    estimates.push_back(std::move(je));
  }
  j["estimates"] = std::move(estimates);
  j["policy"] = v.policy;
  j["heuristic"] = v.heuristic;
  return j;
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json j;
  auto one = [](const AxiomCheck& c) {
    Json jc;
    jc["pass"] = c.pass;
    if (c.counterexample_pair) {
      jc["counterexample"] = Json::array({c.counterexample_pair->first.str(),
                                          c.counterexample_pair->second.str()});
    } else if (c.counterexample_x) {
      jc["counterexample"] = *c.counterexample_x;
    }
    if (!c.detail.empty()) jc["detail"] = c.detail;
    return jc;
  };
  j["axioms"]["zero-at-zero"] = one(r.zero_at_zero);
  j["axioms"]["subadditivity"] = one(r.subadditivity);
  j["axioms"]["monotonicity"] = one(r.monotonicity);
  j["axioms"]["right-continuity-at-0"] = one(r.right_continuity);
  j["axioms"]["unboundedness"] = one(r.unboundedness);
  j["sample_count"] = r.sample_count;
  j["rng_seed"] = r.rng_seed;
  j["all_pass"] = r.all_pass();
  return j;
}

Json membership_to_json(const MembershipVerdict& v) {
  Json j;
  j["ideal"] = v.ideal;
  j["verdict"] = membership_name(v.verdict);
  j["heuristic"] = v.heuristic;
  j["evidence"]["tail_sup"] = v.tail_sup;
  j["evidence"]["global_max"] = v.global_max;
  j["evidence"]["horizon"] = v.horizon.str();
  j["evidence"]["threshold"] = v.policy.threshold;
  j["evidence"]["tail_fraction"] = v.policy.tail_fraction;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace fdens
