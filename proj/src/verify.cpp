#include "sympdec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "sympdec/characters.hpp"
#include "sympdec/combinatorics.hpp"
#include "sympdec/decomposition.hpp"
#include "sympdec/littlewood_richardson.hpp"
#include "sympdec/oracle.hpp"
#include "sympdec/sp_restriction.hpp"

namespace sympdec {

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Characters: return "characters";
    case Suite::Symmetry: return "symmetry";
    case Suite::Dimensions: return "dimensions";
    case Suite::Oracle: return "oracle";
    case Suite::All: return "all";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::Characters, Suite::Symmetry, Suite::Dimensions, Suite::Oracle, Suite::All})
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown suite '" + name +
                              "' (expected characters, symmetry, dimensions, oracle or all)");
}

namespace {

// A check returns an empty string on success and a description of the first
// failure otherwise.
using Check = std::function<std::string()>;

class Runner {
 public:
  explicit Runner(std::string suite) : suite_(std::move(suite)) {}

  void add(const std::string& name, const Check& check) {
    CheckResult r{suite_, name, false, "", 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results_.push_back(std::move(r));
  }

  /// Recorded outcome with no pass/fail meaning.
  void note(const std::string& name, const std::string& detail) {
    results_.push_back({suite_, name, true, detail, 0.0});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

std::string str(const BigInt& v) { return v.get_str(); }

std::string symmetry_failure(const Decomposition& dec) {
  const SymmetryReport report = check_conjugate_symmetry(dec);
  if (report.symmetric) return "";
  const auto& v = report.violations.front();
  return std::to_string(report.violations.size()) + " violations, first " + v.lambda.to_string() +
         ": " + str(v.multiplicity) + " vs " + str(v.conjugate_multiplicity);
}

std::vector<CheckResult> characters_suite(int max_degree) {
  Runner run("characters");
  const int n_max = std::min(max_degree, 12);

  run.add("orthogonality n<=" + std::to_string(n_max), [&]() -> std::string {
    for (int n = 1; n <= n_max; ++n) {
      const auto parts = enumerate_partitions(n);
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i; j < parts.size(); ++j) {
          Rational sum = 0;
          for (const Partition& mu : parts)
            sum += ratio(mn_character(parts[i], mu) * mn_character(parts[j], mu),
                            centralizer_order(mu));
          if (sum != (i == j ? 1 : 0))
            return "<" + parts[i].to_string() + "," + parts[j].to_string() + "> = " + sum.get_str();
        }
    }
    return "";
  });

  run.add("conjugation twist n<=" + std::to_string(n_max), [&]() -> std::string {
    for (int n = 1; n <= n_max; ++n)
      for (const Partition& lambda : enumerate_partitions(n))
        for (const Partition& mu : enumerate_partitions(n))
          if (mn_character(conjugate(lambda), mu) != class_sign(mu) * mn_character(lambda, mu))
            return lambda.to_string() + " on " + mu.to_string();
    return "";
  });

  run.add("difference identity k<=" + std::to_string(max_degree), [&]() -> std::string {
    for (int k = 1; k <= max_degree; ++k)
      if (!verify_difference_identity(k)) return "k=" + std::to_string(k);
    return "";
  });

  run.add("identity values k<=" + std::to_string(max_degree), [&]() -> std::string {
    for (int k = 1; k <= max_degree; ++k) {
      if (chi_W(k).at(Partition::rectangle(1, k + 2)) != factorial(k)) return "chi_W k=" + std::to_string(k);
      if (chi_L(k).at(Partition::rectangle(1, k)) != factorial(k - 1)) return "chi_L k=" + std::to_string(k);
    }
    return "";
  });

  run.add("chi_W support bound k<=" + std::to_string(max_degree), [&]() -> std::string {
    for (int k = 1; k <= max_degree; ++k) {
      const std::size_t bound = 1 + divisors(k + 1).size() + divisors(k + 2).size();
      if (chi_W(k).support_size() > bound) return "k=" + std::to_string(k);
    }
    return "";
  });

  run.add("sign positivity and sign twist of chi_W", [&]() -> std::string {
    for (int k = 1; k <= max_degree; ++k) {
      if (k % 4 != 2 && k % 4 != 3) continue;
      const ClassFunction w = chi_W(k);
      for (const auto& [mu, value] : w.values()) {
        if (class_sign(mu) != 1) return "k=" + std::to_string(k) + " class " + mu.to_string();
        if (value * class_sign(mu) != value) return "twist k=" + std::to_string(k);
      }
    }
    return "";
  });

  run.add("even squarefree cofactor property c<=10000", []() -> std::string {
    for (long c = 1; c <= 10000; ++c)
      if ((c % 4 != 2) != even_squarefree_cofactor_property(c)) return "c=" + std::to_string(c);
    return "";
  });

  const int lr_max = std::min(max_degree, 10);
  run.add("LR symmetry and sum rule |λ|<=" + std::to_string(lr_max), [&]() -> std::string {
    for (int n = 0; n <= lr_max; ++n)
      for (int a = 0; a <= n; ++a)
        for (const Partition& mu : enumerate_partitions(a))
          for (const Partition& nu : enumerate_partitions(n - a)) {
            BigInt weighted = 0;
            for (const Partition& lambda : enumerate_partitions(n)) {
              const BigInt c = lr_coefficient(lambda, mu, nu);
              if (c != lr_coefficient(lambda, nu, mu))
                return "c^" + lambda.to_string() + " not symmetric in " + mu.to_string() + "," + nu.to_string();
              weighted += c * sn_dimension(lambda);
            }
            if (weighted != binomial(n, a) * sn_dimension(mu) * sn_dimension(nu))
              return "sum rule " + mu.to_string() + "," + nu.to_string();
          }
    return "";
  });

  return run.take();
}

std::vector<CheckResult> symmetry_suite(int max_degree, unsigned threads) {
  Runner run("symmetry");
  for (int k = 1; k <= max_degree; ++k) {
    const Decomposition h = decompose_h(k, threads);
    if (symmetry_guaranteed(Source::H, k)) {
      run.add("h(" + std::to_string(k) + ") conjugate-symmetric", [&] { return symmetry_failure(h); });
    } else {
      const std::string failure = symmetry_failure(h);
      run.note("h(" + std::to_string(k) + ") not guaranteed",
               failure.empty() ? "symmetric" : "asymmetric: " + failure);
    }
  }
  for (int k = 1; k <= max_degree; ++k) {
    if (!symmetry_guaranteed(Source::Lie, k)) continue;
    run.add("lie(" + std::to_string(k) + ") conjugate-symmetric",
            [&] { return symmetry_failure(decompose_lie(k, threads)); });
  }
  return run.take();
}

std::vector<CheckResult> dimensions_suite(int max_degree, unsigned threads) {
  Runner run("dimensions");

  run.add("h dimensions vs Witt, g<=12", [&]() -> std::string {
    for (int k = 1; k <= max_degree; ++k) {
      const Decomposition h = decompose_h(k, threads);
      for (int g = 1; g <= 12; ++g) {
        const BigInt expected = 2 * g * witt_dimension(2 * g, k + 1) - witt_dimension(2 * g, k + 2);
        if (dimension_of(h, g) != expected)
          return "k=" + std::to_string(k) + " g=" + std::to_string(g) + ": " + str(dimension_of(h, g)) +
                 " vs " + str(expected);
      }
    }
    return "";
  });

  run.add("lie dimensions vs Witt, g<=4", [&]() -> std::string {
    for (int k = 1; k <= std::min(max_degree, 12); ++k) {
      const Decomposition lie = decompose_lie(k, threads);
      for (int g = 1; g <= 4; ++g)
        if (dimension_of(lie, g) != witt_dimension(2 * g, k))
          return "k=" + std::to_string(k) + " g=" + std::to_string(g);
    }
    return "";
  });

  run.add("S-module dimensions", [&]() -> std::string {
    for (int k = 1; k <= max_degree; ++k) {
      if (decompose_h(k, threads).sn_module_dimension() != factorial(k)) return "h k=" + std::to_string(k);
      if (decompose_lie(k, threads).sn_module_dimension() != factorial(k - 1)) return "lie k=" + std::to_string(k);
    }
    return "";
  });

  if (max_degree >= 2)
    run.add("multiplicity-one series", [&]() -> std::string {
      const SeriesReport report = multiplicity_series_check(max_degree, threads);
      for (const SeriesEntry& e : report.entries)
        if (!e.ok) return e.series + " at k=" + std::to_string(e.degree) + ": " + str(e.multiplicity);
      return "";
    });

  run.add("stable branching trivial label, even k<=" + std::to_string(std::min(max_degree, 12)),
          [&]() -> std::string {
            for (int k = 2; k <= std::min(max_degree, 12); k += 2) {
              const Decomposition h = decompose_h(k, threads);
              if (stable_restrict(h, threads).multiplicity(Partition{}) != stable_invariant_dim(h))
                return "k=" + std::to_string(k);
            }
            return "";
          });

  run.add("spherical rule vs Weyl constant term, n<=8, g<=3", []() -> std::string {
    for (int n = 0; n <= 8; ++n)
      for (const Partition& lambda : enumerate_partitions(n))
        for (int g = 1; g <= 3; ++g)
          if (weyl_invariant_count(lambda, g) != spherical_invariant_count(lambda, g))
            return lambda.to_string() + " g=" + std::to_string(g);
    return "";
  });

  struct Known {
    int k;
    std::vector<long> per_genus;  // g = 1, 2, ...; the last entry is the stable value
  };
  const std::vector<Known> known = {
      {18, {57, 100908, 888099, 1548984, 1710798, 1728591, 1729620, 1729656, 1729657}},
      {20, {108, 869798, 12057806, 25062360, 29129790, 29688027, 29728348, 29729957, 29729988}},
  };
  for (const Known& row : known) {
    if (row.k > max_degree) continue;
    run.add("invariant dimensions k=" + std::to_string(row.k), [&]() -> std::string {
      const Decomposition h = decompose_h(row.k, threads);
      if (stable_invariant_dim(h) != row.per_genus.back()) return "stable " + str(stable_invariant_dim(h));
      if (genus_one_invariant_dim(h) != row.per_genus.front()) return "genus one " + str(genus_one_invariant_dim(h));
      for (std::size_t i = 0; i < row.per_genus.size(); ++i) {
        const int g = static_cast<int>(i) + 1;
        if (unstable_invariant_dim(h, g) != row.per_genus[i])
          return "g=" + std::to_string(g) + ": " + str(unstable_invariant_dim(h, g));
      }
      return "";
    });
  }
  return run.take();
}

std::vector<CheckResult> oracle_suite(int max_degree, unsigned threads) {
  Runner run("oracle");
  const int k_max = std::min(max_degree, 6);

  for (int g = 1; g <= 3; ++g)
    run.add("bracket kernel g=" + std::to_string(g) + " k<=" + std::to_string(k_max), [&, g]() -> std::string {
      for (int k = 1; k <= k_max; ++k) {
        const BigInt kernel = oracle::bracket_kernel_dimension(g, k);
        const BigInt pipeline = dimension_of(decompose_h(k, threads), g);
        if (kernel != pipeline) return "k=" + std::to_string(k) + ": " + str(kernel) + " vs " + str(pipeline);
      }
      return "";
    });

  run.add("h decomposition from weights, k<=" + std::to_string(std::min(k_max, 4)), [&]() -> std::string {
    for (int k = 1; k <= std::min(k_max, 4); ++k)
      if (!(oracle::oracle_decompose_h(oracle::stable_genus(k), k).terms == decompose_h(k, threads).terms))
        return "k=" + std::to_string(k);
    return "";
  });

  run.add("sp invariants, explicit system", [&]() -> std::string {
    for (int g = 1; g <= 2; ++g)
      for (int k = 2; k <= k_max; k += 2) {
        const BigInt direct = oracle::sp_invariant_dimension(g, k);
        const BigInt predicted = g == 1 ? genus_one_invariant_dim(k, threads) : unstable_invariant_dim(k, g);
        if (direct != predicted)
          return "g=" + std::to_string(g) + " k=" + std::to_string(k) + ": " + str(direct) + " vs " + str(predicted);
      }
    return "";
  });

  run.add("sp invariants, weight multiplicities g<=3", [&]() -> std::string {
    for (int g = 1; g <= 3; ++g)
      for (int k = 1; k <= k_max; ++k) {
        const BigInt by_weights = oracle::sp_invariant_dimension_by_weights(g, k);
        if (by_weights != unstable_invariant_dim(k, g))
          return "g=" + std::to_string(g) + " k=" + std::to_string(k);
      }
    return "";
  });

  for (int k : {1, 3}) {
    if (k > max_degree) continue;
    run.add("assoc(" + std::to_string(k) + ") vs cyclic character", [&, k]() -> std::string {
      const Decomposition assoc = oracle::assoc_decompose(oracle::stable_genus(k), k);
      const Decomposition cyclic = decompose(cyclic_invariant_character(k + 2), Source::Assoc, k, threads);
      if (!(assoc.terms == cyclic.terms)) return "decompositions differ";
      return symmetry_failure(assoc);
    });
  }
  return run.take();
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, int max_degree, unsigned threads) {
  if (max_degree < 1) throw std::invalid_argument("max degree must be >= 1");
  std::vector<CheckResult> out;
  auto append = [&out](std::vector<CheckResult> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  if (suite == Suite::Characters || suite == Suite::All) append(characters_suite(max_degree));
  if (suite == Suite::Symmetry || suite == Suite::All) append(symmetry_suite(max_degree, threads));
  if (suite == Suite::Dimensions || suite == Suite::All) append(dimensions_suite(max_degree, threads));
  if (suite == Suite::Oracle || suite == Suite::All) append(oracle_suite(max_degree, threads));
  return out;
}

}  // namespace sympdec
