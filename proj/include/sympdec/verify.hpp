#pragma once

#include <string>
#include <vector>

namespace sympdec {

enum class Suite { Characters, Symmetry, Dimensions, Oracle, All };

std::string to_string(Suite suite);
/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(const std::string& name);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the property checks of one suite (or all of them) up to
/// `max_degree`. Each suite caps its own expensive loops: character
/// orthogonality stops at n = 12 and the oracle at k = 6, g = 3.
std::vector<CheckResult> run_suite(Suite suite, int max_degree, unsigned threads = 0);

}  // namespace sympdec
