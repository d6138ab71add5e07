#ifndef BCA_JSON_IO_HPP_
#define BCA_JSON_IO_HPP_

#include <nlohmann/json.hpp>

#include <string>

#include "bca/blind.hpp"
#include "bca/cho.hpp"
#include "bca/experiments.hpp"
#include "bca/groups.hpp"
#include "bca/semilinear.hpp"

namespace bca {

using Json = nlohmann::json;

// Integers are serialized as JSON numbers while they fit exactly in a
// double-safe range (|x| < 2^53) and as decimal strings beyond that.
Json int_to_json(const Int& x);
Int json_to_int(const Json& j);

Json vector_to_json(const IntVector& v);
IntVector json_to_vector(const Json& j);

Json linear_set_to_json(const LinearSet& s);
LinearSet json_to_linear_set(const Json& j);

Json semilinear_to_json(const SemilinearSet& s);
SemilinearSet json_to_semilinear(const Json& j);

Json automaton_to_json(const BlindAutomaton& a);
RawAutomaton json_to_raw_automaton(const Json& j);

Json cho_to_json(const ChoAutomaton& b);
ChoAutomaton json_to_cho(const Json& j);
bool json_is_cho(const Json& j);

Json group_to_json(const VAGroup& g, const GenMap& gens);
std::pair<VAGroup, GenMap> json_to_group(const Json& j);

Json constants_to_json(const AutomatonConstants& k);
Json run_to_json(const BlindAutomaton& a, const Run& run);
Json reach_to_json(const BlindAutomaton& a, const ReachTable& table);
Json intersection_to_json(const IntersectionResult& r);
Json growth_to_json(const GrowthTable& t);
Json witness_report_to_json(const WitnessReport& r);
Json interchange_report_to_json(const InterchangeReport& r);

// Canonical serialization: sorted keys, two-space indent, trailing newline.
// Byte-stable for fixed inputs.
std::string canonical_dump(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace bca

#endif  // BCA_JSON_IO_HPP_
