#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "sympdec/bigint.hpp"
#include "sympdec/decomposition.hpp"
#include "sympdec/partition.hpp"

namespace sympdec {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kEngineVersion = "1.0.0";

/// Every CLI result is wrapped in one of these.
struct ResultEnvelope {
  int schema_version = kSchemaVersion;
  std::string command;
  Json parameters = Json::object();
  Json payload = Json::object();
  std::string engine_version = kEngineVersion;
  std::int64_t timing_ms = 0;
};

Json to_json(const ResultEnvelope& envelope);

/// Throws std::invalid_argument on a missing field or a schema version other
/// than kSchemaVersion.
ResultEnvelope envelope_from_json(const Json& j);

/// Serialized form used everywhere: object keys sorted, no whitespace.
std::string dump_canonical(const Json& j);

/// Exact integers are JSON numbers when they fit in 64 bits and decimal
/// strings otherwise.
Json big_to_json(const BigInt& value);
BigInt big_from_json(const Json& j);

/// Partitions are decreasing integer arrays.
Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"source","degree","boxes","terms":[{"partition","multiplicity"}...]}
/// with terms in canonical order. When `genus` is set each term also
/// carries "gl_dimension" at 2g and the payload carries "genus" and
/// "dimension".
Json decomposition_to_json(const Decomposition& dec, std::optional<int> genus = std::nullopt);
Decomposition decomposition_from_json(const Json& j);

}  // namespace sympdec
