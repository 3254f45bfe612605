#include "isoprod/report.hpp"

namespace isoprod {

void to_json(nlohmann::json& j, const Rational& v) { j = v.str(); }

void to_json(nlohmann::json& j, const CohStatus& v) {
  if (v.is_exact())
    j = nlohmann::json{{"exact", v.lo}};
  else
    j = nlohmann::json{{"range", {v.lo, v.hi}}};
}

void to_json(nlohmann::json& j, const InvStatus& v) {
  j = nlohmann::json{{"rule", v.rule_name()}};
  if (v.determined())
    j["value"] = v.lo;
  else
    j["range"] = {v.lo, v.hi};
}

void to_json(nlohmann::json& j, const Bidegree& v) { j = nlohmann::json{v.a, v.b}; }

void to_json(nlohmann::json& j, const DivisorClass& v) {
  j = nlohmann::json{{"coeffs", v.rep}, {"degree", v.degree}, {"normal", v.normal}};
}

void to_json(nlohmann::json& j, const Character& v) { j = v.weights; }

void to_json(nlohmann::json& j, const EquivariantLineBundle& v) {
  j = nlohmann::json{{"c", v.c_class}, {"character", v.character}, {"d", v.d_class}};
}

void to_json(nlohmann::json& j, const CohomologyProfile& v) {
  j = nlohmann::json{{"bidegree", v.bidegree},
                     {"chi_s", v.chi_s},
                     {"invariant", v.invariant},
                     {"total", v.total}};
}

void to_json(nlohmann::json& j, const AbGroupDescriptor& v) {
  j = nlohmann::json{{"free_rank", v.free_rank},
                     {"shape", v.str()},
                     {"torsion_orders", v.torsion_orders}};
}

void to_json(nlohmann::json& j, const SurfaceInvariants& v) {
  j = nlohmann::json{{"b2", v.b2}, {"chi_o", v.chi_o}, {"chi_top", v.chi_top}, {"k_squared", v.k_squared}};
  if (v.preset_group) j["group"] = *v.preset_group;
  if (v.h1) j["h1"] = *v.h1;
  if (v.pic) j["pic"] = *v.pic;
  if (v.k_group) j["k_group"] = *v.k_group;
}

namespace {

const char* verdict_name(PairVerdict v) {
  switch (v) {
    case PairVerdict::vanishes: return "vanishes";
    case PairVerdict::fails: return "fails";
    case PairVerdict::undetermined: return "undetermined";
  }
  return "?";
}

const char* verdict_name(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::pass: return "pass";
    case CheckVerdict::fail: return "fail";
    case CheckVerdict::undetermined: return "undetermined";
  }
  return "?";
}

}  // namespace

void to_json(nlohmann::json& j, const PairCheck& v) {
  j = nlohmann::json{{"earlier", v.earlier},
                     {"later", v.later},
                     {"profile", v.profile},
                     {"verdict", verdict_name(v.verdict)}};
  if (v.euler_obstruction) j["euler_obstruction"] = v.profile.chi_s;
  if (v.nonzero_degree) j["nonzero_degree"] = *v.nonzero_degree;
}

void to_json(nlohmann::json& j, const ObjectCheck& v) {
  j = nlohmann::json{{"diagonal", v.diagonal}, {"exceptional", v.exceptional}, {"index", v.index}};
}

void to_json(nlohmann::json& j, const ExceptionalCertificate& v) {
  j = nlohmann::json{{"collection", v.collection},
                     {"maximal", v.maximal},
                     {"max_length", v.max_length},
                     {"pairs", v.pairs},
                     {"undetermined", v.undetermined},
                     {"valid", v.valid}};
  if (!v.rejection.empty()) j["rejection"] = v.rejection;
  if (v.failure) j["failure"] = *v.failure;
}

void to_json(nlohmann::json& j, const SearchResult& v) {
  j = nlohmann::json{{"candidates_considered", v.candidates_considered},
                     {"character_uniform", v.character_uniform},
                     {"distinct_bundles", v.distinct_bundles},
                     {"found", v.found},
                     {"found_count", v.found.size()},
                     {"undetermined_count", v.undetermined.size()}};
  // Undetermined candidates can be numerous; report a deterministic prefix.
  constexpr std::size_t kMax = 100;
  nlohmann::json und = nlohmann::json::array();
  for (std::size_t i = 0; i < v.undetermined.size() && i < kMax; ++i) und.push_back(v.undetermined[i]);
  j["undetermined_prefix"] = und;
  j["undetermined_truncated"] = v.undetermined.size() > kMax;
}

void to_json(nlohmann::json& j, const FormalityCertificate& v) {
  j = nlohmann::json{{"certified", v.certified},
                     {"cross_ab", v.cross_ab},
                     {"cross_ba", v.cross_ba},
                     {"longest_composable_chain", v.longest_composable_chain}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.statement.empty()) j["statement"] = v.statement;
}

void to_json(nlohmann::json& j, const DeformationCertificate& v) {
  j = nlohmann::json{{"admissible_characters_per_slot", v.admissible_characters_per_slot},
                     {"certified", v.certified},
                     {"dual_order", v.dual_order},
                     {"fourth_difference_uniform", v.fourth_difference_uniform},
                     {"middle_h1_total", v.middle_h1_total}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.statement.empty()) j["statement"] = v.statement;
}

void to_json(nlohmann::json& j, const ExtInt& v) {
  if (v.infinite)
    j = "inf";
  else
    j = v.value;
}

void to_json(nlohmann::json& j, const ExtInterval& v) {
  if (v.exact())
    j = nlohmann::json{{"exact", v.lo}};
  else
    j = nlohmann::json{{"max", v.hi}, {"min", v.lo}};
}

void to_json(nlohmann::json& j, const HomFreeResult& v) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : v.pairs)
    pairs.push_back(nlohmann::json{{"difference", p.difference},
                                   {"ext0", p.ext0},
                                   {"i", p.i},
                                   {"j", p.j},
                                   {"negative_c_degree", p.negative_c_degree},
                                   {"negative_d_degree", p.negative_d_degree}});
  j = nlohmann::json{{"hom_free", v.hom_free}, {"pairs", pairs}, {"verdict", verdict_name(v.verdict)}};
}

void to_json(nlohmann::json& j, const CyclicExtResult& v) {
  nlohmann::json wraps = nlohmann::json::array();
  for (const auto& w : v.wraparounds)
    wraps.push_back(nlohmann::json{{"chain_relevant", w.chain_relevant},
                                   {"difference", w.difference},
                                   {"ext1", w.ext1},
                                   {"from", w.from},
                                   {"to", w.to}});
  j = nlohmann::json{{"connected", v.connected}, {"verdict", verdict_name(v.verdict)}, {"wraparounds", wraps}};
}

void to_json(nlohmann::json& j, const RestrictionVerdict& v) {
  nlohmann::json table = nlohmann::json::array();
  for (std::int64_t k = 0; k <= 4; ++k)
    table.push_back(nlohmann::json{{"degree", k}, {"status", v.status_at(k)}});
  j = nlohmann::json{{"height", v.height}, {"iso_up_to", v.iso_up_to}, {"mono_at", v.mono_at}, {"table", table}};
}

void to_json(nlohmann::json& j, const HeightReport& v) {
  nlohmann::json fw = nlohmann::json::array();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < v.n; ++i)
    for (std::size_t jj = i + 1; jj < v.n; ++jj)
      fw.push_back(nlohmann::json{{"e", v.forward[idx++]}, {"from", i}, {"to", jj}});
  j = nlohmann::json{{"cyclic_ext1", v.cyclic},
                     {"exceptional_ok", v.exceptional_ok},
                     {"forward_heights", fw},
                     {"h0_two_canonical", v.h0_two_canonical},
                     {"hom_free", v.hom_free},
                     {"hypothesis_h2_anticanonical_nonzero", v.hypothesis_ok},
                     {"ph_lower_bound", v.ph_lower_bound},
                     {"ph_upper_bound", v.ph_upper_bound},
                     {"pseudoheight_enumerated", v.pseudoheight_enumerated},
                     {"restriction", v.restriction}};
  if (v.pseudoheight_value) j["pseudoheight"] = *v.pseudoheight_value;
  if (v.height_value) j["height"] = *v.height_value;
}

void to_json(nlohmann::json& j, const HochschildReport& v) {
  j = nlohmann::json{{"collection_length", v.collection_length},
                     {"hh_complement", v.hh_complement},
                     {"hh_surface", v.hh_surface},
                     {"hh_total", v.hh_total},
                     {"per_object_degree0", v.per_object_degree0},
                     {"quasiphantom", v.quasiphantom}};
  if (v.k_complement_known) j["k_complement"] = v.k_complement;
}

void to_json(nlohmann::json& j, const PhantomVerdict& v) {
  j = nlohmann::json{{"gcd", v.gcd},
                     {"phantom", v.phantom},
                     {"torsion_a", v.torsion_a},
                     {"torsion_b", v.torsion_b},
                     {"verdict", v.phantom ? "phantom" : "no conclusion"}};
}

void to_json(nlohmann::json& j, const NoGoReport& v) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : v.residue_proof)
    steps.push_back(nlohmann::json{{"statement", s.statement}, {"verified", s.verified}});
  j = nlohmann::json{{"g_c", v.g_c},
                     {"g_d", v.g_d},
                     {"group_order", v.group_order},
                     {"label", v.label},
                     {"lattice", v.lattice},
                     {"obstruction", v.obstruction},
                     {"residue_proof", steps},
                     {"scan_agrees", v.scan_agrees},
                     {"scan_bound", v.scan_bound},
                     {"scope", v.scope},
                     {"solutions", v.solutions},
                     {"stage1_solutions", v.stage1_solutions},
                     {"tuples_scanned", v.tuples_scanned},
                     {"unsatisfiable", v.unsatisfiable}};
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

nlohmann::json Report::to_json() const {
  return nlohmann::json{{"command", command},
                        {"config", config},
                        {"config_hash", config_hash},
                        {"exit_code", exit_code},
                        {"results", results},
                        {"schema", schema},
                        {"summary", {{"fail", fail}, {"pass", pass}, {"undetermined", undetermined}}},
                        {"timing_ms", timing_ms}};
}

Report Report::from_json(const nlohmann::json& j) {
  Report r;
  r.schema = j.at("schema").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.config = j.at("config");
  r.config_hash = j.at("config_hash").get<std::string>();
  r.results = j.at("results");
  r.pass = j.at("summary").at("pass").get<std::int64_t>();
  r.fail = j.at("summary").at("fail").get<std::int64_t>();
  r.undetermined = j.at("summary").at("undetermined").get<std::int64_t>();
  r.timing_ms = j.at("timing_ms").get<double>();
  r.exit_code = j.at("exit_code").get<int>();
  return r;
}

std::string Report::stable_dump() const {
  nlohmann::json j = to_json();
  j.erase("timing_ms");
  return j.dump(2);
}

}  // namespace isoprod
