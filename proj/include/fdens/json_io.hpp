#pragma once

#include <string>

#include <json.hpp>

#include "fdens/axioms.hpp"
#include "fdens/diagnostics.hpp"
#include "fdens/modulus.hpp"
#include "fdens/profile.hpp"
#include "fdens/separator.hpp"
#include "fdens/sets.hpp"

namespace fdens {

using Json = nlohmann::ordered_json;

/// {"family": "power"|"log"|"example3", "p": "<num>/<den>" (power only)}
Json descriptor_to_json(const ModulusDescriptor& d);
ModulusDescriptor descriptor_from_json(const Json& j);

/// {"type":"explicit","elements":[...]} | {"type":"blocks","blocks":[[a,b],...]}
/// | {"type":"builtin","name":...}. Integers are emitted as decimal strings
/// and accepted as either numbers or strings.
Json set_to_json(const IntegerSet& set);
IntegerSet set_from_json(const Json& j);

/// {"xi": .., "stages": [{"k","n","m","block"}], "set": <Blocks JSON>, ...}
Json separator_to_json(const SeparatorResult& r);
SeparatorResult separator_from_json(const Json& j);

/// One entry per check per stage.
Json construction_report_to_json(const ConstructionReport& r);

/// {"criterion","verdict","a","estimates":[{"k","value","argmax_n"}],"policy"}
Json criterion_to_json(const CriterionVerdict& v);

Json axiom_report_to_json(const AxiomReport& r);

Json membership_to_json(const MembershipVerdict& v);

Json load_json_file(const std::string& path);

}  // namespace fdens
