#include "sympdec/envelope.hpp"

#include <stdexcept>

#include "sympdec/combinatorics.hpp"

namespace sympdec {

Json to_json(const ResultEnvelope& envelope) {
  Json j;
  j["schema_version"] = envelope.schema_version;
  j["command"] = envelope.command;
  j["parameters"] = envelope.parameters;
  j["payload"] = envelope.payload;
  j["engine_version"] = envelope.engine_version;
  j["timing_ms"] = envelope.timing_ms;
  return j;
}

ResultEnvelope envelope_from_json(const Json& j) {
  for (const char* field :
       {"schema_version", "command", "parameters", "payload", "engine_version", "timing_ms"})
    if (!j.contains(field)) throw std::invalid_argument(std::string("envelope lacks '") + field + "'");
  ResultEnvelope e;
  e.schema_version = j.at("schema_version").get<int>();
  if (e.schema_version != kSchemaVersion)
    throw std::invalid_argument("unsupported schema_version " + std::to_string(e.schema_version));
  e.command = j.at("command").get<std::string>();
  e.parameters = j.at("parameters");
  e.payload = j.at("payload");
  e.engine_version = j.at("engine_version").get<std::string>();
  e.timing_ms = j.at("timing_ms").get<std::int64_t>();
  return e;
}

std::string dump_canonical(const Json& j) { return j.dump(); }

Json big_to_json(const BigInt& value) {
  if (auto small = to_int64(value)) return *small;
  return value.get_str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

Json partition_to_json(const Partition& p) { return Json(p.part_vector()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("a partition is a JSON array");
  return Partition(j.get<std::vector<int>>());
}

Json decomposition_to_json(const Decomposition& dec, std::optional<int> genus) {
  Json terms = Json::array();
  BigInt dimension = 0;
  for (const auto& [lambda, m] : dec.terms) {
    Json term{{"partition", partition_to_json(lambda)}, {"multiplicity", big_to_json(m)}};
    if (genus) {
      BigInt dim = gl_dimension(lambda, 2L * *genus);
      dimension += m * dim;
      term["gl_dimension"] = big_to_json(dim);
    }
    terms.push_back(std::move(term));
  }
  Json j{{"source", to_string(dec.source)},
         {"degree", dec.degree},
         {"boxes", dec.boxes},
         {"terms", std::move(terms)}};
  if (genus) {
    j["genus"] = *genus;
    j["dimension"] = big_to_json(dimension);
  }
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition dec;
  dec.source = parse_source(j.at("source").get<std::string>());
  dec.degree = j.at("degree").get<int>();
  dec.boxes = j.at("boxes").get<int>();
  for (const Json& term : j.at("terms"))
    dec.set(partition_from_json(term.at("partition")), big_from_json(term.at("multiplicity")));
  return dec;
}

}  // namespace sympdec
