#pragma once

#include <string>

#include <json.hpp>

#include "isoprod/homological.hpp"
#include "isoprod/obstruction.hpp"

namespace isoprod {

// JSON encoders. nlohmann::json keeps keys sorted, so dumps are stable.
// Group elements and characters serialize as coordinate / weight vectors.
void to_json(nlohmann::json& j, const Rational& v);
void to_json(nlohmann::json& j, const CohStatus& v);
void to_json(nlohmann::json& j, const InvStatus& v);
void to_json(nlohmann::json& j, const Bidegree& v);
void to_json(nlohmann::json& j, const DivisorClass& v);
void to_json(nlohmann::json& j, const Character& v);
void to_json(nlohmann::json& j, const EquivariantLineBundle& v);
void to_json(nlohmann::json& j, const CohomologyProfile& v);
void to_json(nlohmann::json& j, const AbGroupDescriptor& v);
void to_json(nlohmann::json& j, const SurfaceInvariants& v);
void to_json(nlohmann::json& j, const PairCheck& v);
void to_json(nlohmann::json& j, const ObjectCheck& v);
void to_json(nlohmann::json& j, const ExceptionalCertificate& v);
void to_json(nlohmann::json& j, const SearchResult& v);
void to_json(nlohmann::json& j, const FormalityCertificate& v);
void to_json(nlohmann::json& j, const DeformationCertificate& v);
void to_json(nlohmann::json& j, const ExtInt& v);
void to_json(nlohmann::json& j, const ExtInterval& v);
void to_json(nlohmann::json& j, const HomFreeResult& v);
void to_json(nlohmann::json& j, const CyclicExtResult& v);
void to_json(nlohmann::json& j, const RestrictionVerdict& v);
void to_json(nlohmann::json& j, const HeightReport& v);
void to_json(nlohmann::json& j, const HochschildReport& v);
void to_json(nlohmann::json& j, const PhantomVerdict& v);
void to_json(nlohmann::json& j, const NoGoReport& v);

std::string fnv1a_hex(const std::string& data);

/// Envelope for every command result. Deterministic for a given config;
/// `timing_ms` is the only field allowed to vary between identical runs.
struct Report {
  std::string schema = "1";
  std::string command;
  nlohmann::json config;
  std::string config_hash;
  nlohmann::json results;
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  std::int64_t undetermined = 0;
  double timing_ms = 0.0;
  int exit_code = 0;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
  /// Serialization with the timing field removed; two runs of the same
  /// config must agree byte-for-byte on this.
  std::string stable_dump() const;
  friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace isoprod
