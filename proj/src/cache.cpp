#include "sympdec/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

#include "sympdec/envelope.hpp"

namespace sympdec {

namespace fs = std::filesystem;

DecompositionCache::DecompositionCache(fs::path directory) : directory_(std::move(directory)) {}

DecompositionCache DecompositionCache::from_environment() {
  if (const char* dir = std::getenv("SYMPDEC_CACHE_DIR"); dir && *dir)
    return DecompositionCache(dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return DecompositionCache(fs::path(xdg) / "sympdec");
  if (const char* home = std::getenv("HOME"); home && *home)
    return DecompositionCache(fs::path(home) / ".cache" / "sympdec");
  return DecompositionCache(".sympdec-cache");
}

fs::path DecompositionCache::path_for(Source source, int degree) const {
  return directory_ / ("decompose-" + to_string(source) + "-k" + std::to_string(degree) + "-v" +
                       kEngineVersion + ".json");
}

std::optional<Decomposition> DecompositionCache::load(Source source, int degree) const {
  std::ifstream in(path_for(source, degree));
  if (!in) return std::nullopt;
  try {
    const ResultEnvelope e = envelope_from_json(Json::parse(in));
    if (e.engine_version != kEngineVersion || e.command != "decompose") return std::nullopt;
    Decomposition dec = decomposition_from_json(e.payload);
    if (dec.source != source || dec.degree != degree) return std::nullopt;
    return dec;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void DecompositionCache::store(const Decomposition& dec) const {
  std::error_code ec;
  fs::create_directories(directory_, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + directory_.string() + ": " + ec.message());

  ResultEnvelope e;
  e.command = "decompose";
  e.parameters = {{"algebra", to_string(dec.source)}, {"degree", dec.degree}};
  e.payload = decomposition_to_json(dec);

  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  const fs::path target = path_for(dec.source, dec.degree);
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << "." << counter++ << "." << rd();
  const fs::path temp = target.string() + suffix.str();
  {
    std::ofstream out(temp, std::ios::trunc);
    out << dump_canonical(to_json(e)) << '\n';
    if (!out.flush()) throw std::runtime_error("cannot write " + temp.string());
  }
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp);
    throw std::runtime_error("cannot rename " + temp.string() + ": " + ec.message());
  }
}

Decomposition cached_decompose(Source source, int degree, const DecompositionCache* cache,
                               unsigned threads, const oracle::OracleLimits& limits) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (cache)
    if (auto hit = cache->load(source, degree)) return *hit;
  Decomposition dec;
  switch (source) {
    case Source::H: dec = decompose_h(degree, threads); break;
    case Source::Lie: dec = decompose_lie(degree, threads); break;
    case Source::Assoc: dec = oracle::assoc_decompose(oracle::stable_genus(degree), degree, limits); break;
  }
  if (cache) cache->store(dec);
  return dec;
}

}  // namespace sympdec
