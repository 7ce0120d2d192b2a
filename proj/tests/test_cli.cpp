#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "sympdec/cache.hpp"
#include "sympdec/cli.hpp"
#include "sympdec/envelope.hpp"

using namespace sympdec;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sympdec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// A private cache directory for the duration of one test case.
struct ScopedCache {
  fs::path dir;
  ScopedCache() {
    std::string pattern = (fs::temp_directory_path() / "sympdec-test-XXXXXX").string();
    dir = ::mkdtemp(pattern.data());
    ::setenv("SYMPDEC_CACHE_DIR", dir.c_str(), 1);
  }
  ~ScopedCache() {
    ::unsetenv("SYMPDEC_CACHE_DIR");
    fs::remove_all(dir);
  }
};

Json payload_of(const Run& r) { return Json::parse(r.out).at("payload"); }

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("json envelope") {
  ScopedCache cache;
  const Run r = cli({"decompose", "--algebra", "h", "--degree", "2"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("command") == "decompose");
  CHECK(j.at("engine_version") == kEngineVersion);
  CHECK(j.at("parameters").at("degree") == 2);
  CHECK(j.at("payload").at("terms") == Json::parse(R"([{"multiplicity":1,"partition":[2,2]}])"));
  CHECK(j.at("timing_ms").is_number_integer());
}

TEST_CASE("round trip is byte-identical") {
  ScopedCache cache;
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"decompose", "--algebra", "lie", "--degree", "6", "--genus", "2"},
           {"symmetry", "--algebra", "h", "--degree", "4"},
           {"invariants", "--degree", "10", "--stable", "--max-genus", "3"},
           {"character", "--function", "W", "--degree", "5"},
           {"series", "--max-degree", "8"}}) {
    const Run r = cli(args);
    std::string line = r.out;
    REQUIRE(!line.empty());
    line.pop_back();  // trailing newline
    CHECK(dump_canonical(to_json(envelope_from_json(Json::parse(line)))) == line);
  }
}

TEST_CASE("big integers serialize as strings and round trip") {
  const BigInt big("123456789012345678901234567890");
  CHECK(big_to_json(big).is_string());
  CHECK(big_from_json(big_to_json(big)) == big);
  CHECK(big_to_json(BigInt(42)).is_number_integer());
  Decomposition d;
  d.source = Source::Lie;
  d.degree = 3;
  d.boxes = 3;
  d.set(Partition{2, 1}, big);
  CHECK(decomposition_from_json(decomposition_to_json(d)) == d);
  CHECK_THROWS_AS(envelope_from_json(Json::parse(R"({"schema_version":2})")), std::invalid_argument);
}

TEST_CASE("warm and cold caches give identical payloads") {
  ScopedCache cache;
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"decompose", "--algebra", "h", "--degree", "8"},
           {"decompose", "--algebra", "assoc", "--degree", "3"},
           {"invariants", "--degree", "12", "--stable", "--max-genus", "7"},
           {"symmetry", "--algebra", "lie", "--degree", "9"}}) {
    const Run cold = cli(args);
    const Run warm = cli(args);
    std::vector<std::string> uncached = args;
    uncached.insert(uncached.begin(), "--no-cache");
    const Run none = cli(uncached);
    CHECK(cold.code == warm.code);
    CHECK(payload_of(cold).dump() == payload_of(warm).dump());
    CHECK(payload_of(cold).dump() == payload_of(none).dump());
  }
  CHECK(fs::exists(cache.dir / ("decompose-h-k8-v" + std::string(kEngineVersion) + ".json")));
  for (const auto& entry : fs::directory_iterator(cache.dir))
    CHECK(entry.path().string().find(".tmp.") == std::string::npos);
}

TEST_CASE("corrupt cache files are ignored and replaced") {
  ScopedCache cache;
  const DecompositionCache store = DecompositionCache::from_environment();
  CHECK(store.directory() == cache.dir);
  {
    std::ofstream(store.path_for(Source::H, 5)) << "{not json";
  }
  const Run r = cli({"decompose", "--algebra", "h", "--degree", "5"});
  CHECK(r.code == kExitOk);
  CHECK(store.load(Source::H, 5).has_value());
  CHECK(*store.load(Source::H, 5) == decompose_h(5));
}

TEST_CASE("golden decompositions") {
  ScopedCache cache;
  for (const std::string algebra : {"h", "lie", "assoc"})
    for (int k = 1; k <= 6; ++k) {
      const fs::path golden = fs::path(SYMPDEC_GOLDEN_DIR) / ("decompose-" + algebra + "-k" + std::to_string(k) + ".json");
      REQUIRE(fs::exists(golden));
      const Run r = cli({"--no-cache", "decompose", "--algebra", algebra, "--degree", std::to_string(k)});
      CHECK(r.code == kExitOk);
      CHECK(payload_of(r).dump() + "\n" == read_file(golden));
    }
}

TEST_CASE("documented examples") {
  ScopedCache cache;
  CHECK(payload_of(cli({"decompose", "--algebra", "lie", "--degree", "4"})).at("terms") ==
        Json::parse(R"([{"multiplicity":1,"partition":[3,1]},{"multiplicity":1,"partition":[2,1,1]}])"));
  CHECK(payload_of(cli({"decompose", "--algebra", "assoc", "--degree", "1"})).at("terms") ==
        Json::parse(R"([{"multiplicity":1,"partition":[3]},{"multiplicity":1,"partition":[1,1,1]}])"));

  const Run h6 = cli({"symmetry", "--algebra", "h", "--degree", "6"});
  CHECK(h6.code == kExitOk);
  CHECK(payload_of(h6).at("expected") == "guaranteed");
  const Run h4 = cli({"symmetry", "--algebra", "h", "--degree", "4"});
  CHECK(h4.code == kExitVerificationFailed);
  CHECK(payload_of(h4).at("expected") == "not-guaranteed");
  CHECK(payload_of(h4).at("violations").size() == 3);
  const Run l5 = cli({"symmetry", "--algebra", "lie", "--degree", "5"});
  CHECK(l5.code == kExitOk);
  CHECK(payload_of(l5).at("expected") == "guaranteed");

  const Json s18 = payload_of(cli({"invariants", "--degree", "18", "--stable"}));
  CHECK(s18.at("values")[0].at("dimension") == 1729657);
  CHECK(s18.at("values")[0].at("method") == "stable-even-column");
  const Json g20 = payload_of(cli({"invariants", "--degree", "20", "--genus", "1"}));
  CHECK(g20.at("values")[0].at("dimension") == 108);
  CHECK(g20.at("values")[0].at("method") == "genus-one");
  CHECK(payload_of(cli({"invariants", "--degree", "3", "--stable"})).at("values")[0].at("dimension") == 0);

  const Json oracle = payload_of(cli({"invariants", "--degree", "4", "--genus", "2", "--oracle"}));
  REQUIRE(oracle.at("values").size() == 2);
  CHECK(oracle.at("values")[1].at("method") == "oracle");
  CHECK(oracle.at("values")[0].at("dimension") == oracle.at("values")[1].at("dimension"));

  CHECK(payload_of(cli({"character", "--lambda", "3,1,1", "--mu", "5"})).at("value") == 1);
  CHECK(payload_of(cli({"character", "--lambda", "2^2", "--mu", "1^4"})).at("value") == 2);
}

TEST_CASE("exit codes") {
  ScopedCache cache;
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"decompose", "--algebra", "h"}).code == kExitUsage);
  CHECK(cli({"decompose", "--algebra", "x", "--degree", "2"}).code == kExitUsage);
  CHECK(cli({"decompose", "--algebra", "h", "--degree", "0"}).code == kExitUsage);
  CHECK(cli({"invariants", "--degree", "4"}).code == kExitUsage);
  CHECK(cli({"character", "--lambda", "2,1", "--mu", "3,1"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
  const Run capped = cli({"--max-matrix", "10", "oracle", "kernel", "--genus", "3", "--degree", "6"});
  CHECK(capped.code == kExitResource);
  CHECK(capped.err.find("max_matrix_dimension") != std::string::npos);
  CHECK(cli({"--max-matrix", "5", "--no-cache", "decompose", "--algebra", "assoc", "--degree", "4"}).code ==
        kExitResource);
  CHECK(cli({"oracle", "kernel", "--genus", "2", "--degree", "3"}).code == kExitOk);
  CHECK(cli({"verify", "--suite", "symmetry", "--max-degree", "8"}).code == kExitOk);
}

TEST_CASE("table format") {
  ScopedCache cache;
  const Run r = cli({"--format", "table", "decompose", "--algebra", "h", "--degree", "4", "--genus", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("[3,1,1,1]") != std::string::npos);
  CHECK(r.out.find("gl_dimension(4)") != std::string::npos);
  CHECK(r.out.find("dimension at genus 2: 146") != std::string::npos);
  std::vector<std::string> args = {"sympdec", "decompose", "--algebra", "h", "--degree", "2"};
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CHECK(run_cli(static_cast<int>(argv.size()), argv.data(), out, err, true) == kExitOk);
  CHECK(out.str().rfind("partition", 0) == 0);
}

}  // TEST_SUITE
