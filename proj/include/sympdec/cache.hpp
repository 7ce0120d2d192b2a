#pragma once

#include <filesystem>
#include <optional>

#include "sympdec/decomposition.hpp"
#include "sympdec/oracle.hpp"

namespace sympdec {

/// On-disk store of decompositions, one JSON envelope per
/// (source, degree, engine version). Writes go to a unique temporary file in
/// the same directory and are renamed into place, so concurrent processes
/// never observe a partial file.
class DecompositionCache {
 public:
  explicit DecompositionCache(std::filesystem::path directory);

  /// $SYMPDEC_CACHE_DIR, else $XDG_CACHE_HOME/sympdec, else
  /// $HOME/.cache/sympdec, else ./.sympdec-cache.
  static DecompositionCache from_environment();

  const std::filesystem::path& directory() const { return directory_; }
  std::filesystem::path path_for(Source source, int degree) const;

  /// Missing, unreadable, or mismatched files count as a miss.
  std::optional<Decomposition> load(Source source, int degree) const;

  /// Creates the directory if needed. Throws std::runtime_error on I/O
  /// failure.
  void store(const Decomposition& dec) const;

 private:
  std::filesystem::path directory_;
};

/// Character-pipeline decomposition for h and lie, oracle decomposition at
/// the stable genus for assoc. Consults `cache` first when non-null and fills
/// it on a miss.
Decomposition cached_decompose(Source source, int degree, const DecompositionCache* cache,
                               unsigned threads = 0,
                               const oracle::OracleLimits& limits = {});

}  // namespace sympdec
