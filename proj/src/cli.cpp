#include "sympdec/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sympdec/cache.hpp"
#include "sympdec/characters.hpp"
#include "sympdec/combinatorics.hpp"
#include "sympdec/envelope.hpp"
#include "sympdec/errors.hpp"
#include "sympdec/oracle.hpp"
#include "sympdec/sp_restriction.hpp"
#include "sympdec/verify.hpp"

namespace sympdec {

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;  // printed after the rows
};

struct Outcome {
  Json payload = Json::object();
  Table table;
  int exit_code = kExitOk;
};

void print_table(const Table& t, std::ostream& out) {
  std::vector<std::size_t> width(t.header.size(), 0);
  for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) text += "  ";
      text += cells[c];
      if (c + 1 < cells.size()) text.append(width[c] - std::min(width[c], cells[c].size()), ' ');
    }
    out << text << '\n';
  };
  if (!t.header.empty()) {
    line(t.header);
    std::vector<std::string> rule;
    for (std::size_t w : width) rule.emplace_back(w, '-');
    line(rule);
  }
  for (const auto& row : t.rows) line(row);
  for (const auto& note : t.notes) out << note << '\n';
}

std::string json_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// Everything a command needs beyond its own arguments.
struct Context {
  unsigned threads = 0;
  bool use_cache = true;
  oracle::OracleLimits limits;
  std::optional<DecompositionCache> cache;

  const DecompositionCache* cache_ptr() const { return use_cache && cache ? &*cache : nullptr; }
};

Outcome decompose_command(Context& ctx, Source source, int degree, std::optional<int> genus) {
  const Decomposition dec = cached_decompose(source, degree, ctx.cache_ptr(), ctx.threads, ctx.limits);
  Outcome o;
  o.payload = decomposition_to_json(dec, genus);
  if (source == Source::Assoc) o.payload["oracle_genus"] = oracle::stable_genus(degree);
  o.table.header = {"partition", "multiplicity"};
  if (genus) o.table.header.push_back("gl_dimension(" + std::to_string(2 * *genus) + ")");
  for (const Json& term : o.payload["terms"]) {
    std::vector<std::string> row = {partition_from_json(term["partition"]).to_string(),
                                    json_text(term["multiplicity"])};
    if (genus) row.push_back(json_text(term["gl_dimension"]));
    o.table.rows.push_back(std::move(row));
  }
  o.table.notes.push_back(to_string(source) + "(" + std::to_string(degree) + "): " +
                          std::to_string(dec.terms.size()) + " irreducible types on " +
                          std::to_string(dec.boxes) + " boxes");
  if (genus)
    o.table.notes.push_back("dimension at genus " + std::to_string(*genus) + ": " +
                            json_text(o.payload["dimension"]));
  return o;
}

Outcome symmetry_command(Context& ctx, Source source, int degree) {
  const Decomposition dec = cached_decompose(source, degree, ctx.cache_ptr(), ctx.threads, ctx.limits);
  const SymmetryReport report = check_conjugate_symmetry(dec);
  Outcome o;
  Json violations = Json::array();
  for (const SymmetryViolation& v : report.violations) {
    violations.push_back({{"partition", partition_to_json(v.lambda)},
                          {"multiplicity", big_to_json(v.multiplicity)},
                          {"conjugate", partition_to_json(conjugate(v.lambda))},
                          {"conjugate_multiplicity", big_to_json(v.conjugate_multiplicity)}});
    o.table.rows.push_back({v.lambda.to_string(), v.multiplicity.get_str(), conjugate(v.lambda).to_string(),
                            v.conjugate_multiplicity.get_str()});
  }
  const bool guaranteed = symmetry_guaranteed(source, degree);
  o.payload = {{"source", to_string(source)},
               {"degree", degree},
               {"expected", guaranteed ? "guaranteed" : "not-guaranteed"},
               {"symmetric", report.symmetric},
               {"violations", std::move(violations)}};
  if (!report.symmetric) o.table.header = {"partition", "multiplicity", "conjugate", "conjugate_multiplicity"};
  o.table.notes.push_back(to_string(source) + "(" + std::to_string(degree) + "): " +
                          (report.symmetric ? "symmetric" : "NOT symmetric") + " (expected: " +
                          (guaranteed ? "guaranteed" : "not-guaranteed") + ")");
  o.exit_code = report.symmetric ? kExitOk : kExitVerificationFailed;
  return o;
}

Outcome series_command(Context& ctx, int max_degree) {
  const SeriesReport report = multiplicity_series_check(max_degree, ctx.threads);
  Outcome o;
  Json entries = Json::array();
  o.table.header = {"series", "degree", "partition", "multiplicity", "result"};
  for (const SeriesEntry& e : report.entries) {
    entries.push_back({{"series", e.series},
                       {"degree", e.degree},
                       {"partition", partition_to_json(e.lambda)},
                       {"multiplicity", big_to_json(e.multiplicity)},
                       {"ok", e.ok}});
    o.table.rows.push_back({e.series, std::to_string(e.degree), e.lambda.to_string(), e.multiplicity.get_str(),
                            e.ok ? "PASS" : "FAIL"});
  }
  o.payload = {{"max_degree", max_degree}, {"ok", report.ok}, {"entries", std::move(entries)}};
  o.exit_code = report.ok ? kExitOk : kExitVerificationFailed;
  return o;
}

Outcome invariants_command(Context& ctx, int degree, bool stable, std::vector<int> genera, int max_genus,
                           bool with_oracle) {
  for (int g = 1; g <= max_genus; ++g) genera.push_back(g);
  std::sort(genera.begin(), genera.end());
  genera.erase(std::unique(genera.begin(), genera.end()), genera.end());
  if (!stable && genera.empty()) throw std::invalid_argument("invariants needs --stable, --genus or --max-genus");

  const Decomposition h = cached_decompose(Source::H, degree, ctx.cache_ptr(), ctx.threads);
  Outcome o;
  Json values = Json::array();
  o.table.header = {"genus", "dimension", "method"};
  auto add = [&](const Json& genus, const BigInt& dim, const std::string& method) {
    values.push_back({{"genus", genus}, {"dimension", big_to_json(dim)}, {"method", method}});
    o.table.rows.push_back({json_text(genus), dim.get_str(), method});
  };
  for (int g : genera) {
    if (g == 1 && degree % 2 == 0)
      add(g, genus_one_invariant_dim(h), "genus-one");
    else
      add(g, unstable_invariant_dim(h, g), "unstable");
    if (with_oracle) add(g, oracle::sp_invariant_dimension_by_weights(g, degree, ctx.limits), "oracle");
  }
  o.payload = {{"degree", degree}};
  if (stable) {
    const BigInt value = stable_invariant_dim(h);
    add("stable", value, "stable-even-column");
    int from = 1;
    while (unstable_invariant_dim(h, from) != value) ++from;
    o.payload["stable_from_genus"] = from;
    o.table.notes.push_back("values are stable from genus " + std::to_string(from));
  }
  o.payload["values"] = std::move(values);
  return o;
}

Outcome character_command(const std::string& lambda_text, const std::string& mu_text,
                          const std::string& function, int degree) {
  Outcome o;
  if (!function.empty()) {
    if (degree < 1) throw std::invalid_argument("--function needs --degree");
    ClassFunction chi = function == "L"         ? chi_L(degree)
                        : function == "induced" ? chi_induced(degree)
                        : function == "W"       ? chi_W(degree)
                                                : cyclic_invariant_character(degree);
    Json values = Json::array();
    o.table.header = {"class", "value", "sign", "centralizer"};
    for (const auto& [mu, value] : chi.values()) {
      values.push_back({{"class", partition_to_json(mu)},
                        {"value", big_to_json(value)},
                        {"sign", class_sign(mu)},
                        {"centralizer_order", big_to_json(centralizer_order(mu))}});
      o.table.rows.push_back({mu.to_string(), value.get_str(), std::to_string(class_sign(mu)),
                              centralizer_order(mu).get_str()});
    }
    o.payload = {{"function", function},
                 {"degree", degree},
                 {"symmetric_group_degree", chi.degree()},
                 {"values", std::move(values)}};
    return o;
  }
  if (lambda_text.empty()) throw std::invalid_argument("character needs --lambda or --function");
  const Partition lambda = parse_partition(lambda_text);
  if (!mu_text.empty()) {
    const Partition mu = parse_partition(mu_text);
    const BigInt value = mn_character(lambda, mu);
    o.payload = {{"lambda", partition_to_json(lambda)}, {"mu", partition_to_json(mu)}, {"value", big_to_json(value)}};
    o.table.header = {"lambda", "mu", "value"};
    o.table.rows.push_back({lambda.to_string(), mu.to_string(), value.get_str()});
    return o;
  }
  Json values = Json::array();
  o.table.header = {"class", "value"};
  for (const Partition& mu : enumerate_partitions(lambda.size())) {
    const BigInt value = mn_character(lambda, mu);
    values.push_back({{"class", partition_to_json(mu)}, {"value", big_to_json(value)}});
    o.table.rows.push_back({mu.to_string(), value.get_str()});
  }
  o.payload = {{"lambda", partition_to_json(lambda)}, {"values", std::move(values)}};
  return o;
}

Outcome oracle_kernel_command(Context& ctx, int genus, int degree) {
  const BigInt kernel = oracle::bracket_kernel_dimension(genus, degree, ctx.limits);
  const BigInt pipeline = dimension_of(decompose_h(degree, ctx.threads), genus);
  Outcome o;
  o.payload = {{"genus", genus},
               {"degree", degree},
               {"kernel_dimension", big_to_json(kernel)},
               {"pipeline_dimension", big_to_json(pipeline)},
               {"agree", kernel == pipeline}};
  o.table.header = {"genus", "degree", "kernel", "pipeline", "result"};
  o.table.rows.push_back({std::to_string(genus), std::to_string(degree), kernel.get_str(), pipeline.get_str(),
                          kernel == pipeline ? "agree" : "DISAGREE"});
  o.exit_code = kernel == pipeline ? kExitOk : kExitVerificationFailed;
  return o;
}

Outcome oracle_invariants_command(Context& ctx, int genus, int degree, const std::string& route) {
  const BigInt value = route == "explicit" ? oracle::sp_invariant_dimension(genus, degree, ctx.limits)
                                           : oracle::sp_invariant_dimension_by_weights(genus, degree, ctx.limits);
  const BigInt pipeline = unstable_invariant_dim(degree, genus, InvariantMethod::Spherical, ctx.threads);
  Outcome o;
  o.payload = {{"genus", genus},
               {"degree", degree},
               {"route", route},
               {"dimension", big_to_json(value)},
               {"pipeline_dimension", big_to_json(pipeline)},
               {"method", "oracle"},
               {"agree", value == pipeline}};
  o.table.header = {"genus", "degree", "route", "oracle", "pipeline", "result"};
  o.table.rows.push_back({std::to_string(genus), std::to_string(degree), route, value.get_str(),
                          pipeline.get_str(), value == pipeline ? "agree" : "DISAGREE"});
  o.exit_code = value == pipeline ? kExitOk : kExitVerificationFailed;
  return o;
}

Outcome oracle_decomposition_command(Context& ctx, Source source, int genus, int degree) {
  const Decomposition dec = source == Source::Assoc ? oracle::assoc_decompose(genus, degree, ctx.limits)
                                                    : oracle::oracle_decompose_h(genus, degree, ctx.limits);
  Outcome o;
  o.payload = decomposition_to_json(dec, genus);
  o.payload["oracle_genus"] = genus;
  o.table.header = {"partition", "multiplicity"};
  for (const auto& [lambda, m] : dec.terms) o.table.rows.push_back({lambda.to_string(), m.get_str()});
  o.table.notes.push_back("computed from explicit weight spaces at genus " + std::to_string(genus));
  return o;
}

Outcome verify_command(Context& ctx, const std::string& suite, int max_degree) {
  const std::vector<CheckResult> results = run_suite(parse_suite(suite), max_degree, ctx.threads);
  Outcome o;
  Json checks = Json::array();
  bool all_passed = true;
  o.table.header = {"suite", "check", "result", "seconds", "detail"};
  for (const CheckResult& r : results) {
    all_passed = all_passed && r.passed;
    checks.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << r.seconds;
    o.table.rows.push_back({r.suite, r.name, r.passed ? "PASS" : "FAIL", secs.str(), r.detail});
  }
  o.payload = {{"suite", suite}, {"max_degree", max_degree}, {"passed", all_passed}, {"checks", std::move(checks)}};
  o.table.notes.push_back(std::to_string(results.size()) + " checks, " + (all_passed ? "all passed" : "FAILURES"));
  o.exit_code = all_passed ? kExitOk : kExitVerificationFailed;
  return o;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool stdout_is_tty) {
  CLI::App app{"Exact GL and Sp decompositions of symplectic derivation Lie algebras", "sympdec"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;
  unsigned threads = 0;
  bool no_cache = false;
  std::size_t max_basis = oracle::OracleLimits{}.max_basis_size;
  std::size_t max_matrix = oracle::OracleLimits{}.max_matrix_dimension;
  app.add_option("--format", format, "Output format (default: table on a terminal, json otherwise)")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", threads, "Worker threads (0 = machine parallelism)");
  app.add_flag("--no-cache", no_cache, "Ignore and do not fill the decomposition cache");
  app.add_option("--max-basis", max_basis, "Oracle cap on explicit basis size");
  app.add_option("--max-matrix", max_matrix, "Oracle cap on matrix rows or columns");

  const auto algebra_check = CLI::IsMember({"h", "lie", "assoc"});
  std::string algebra;
  int degree = 0;
  int genus = 0;

  auto* decompose = app.add_subcommand("decompose", "Irreducible decomposition of h, lie or assoc in degree k");
  decompose->add_option("--algebra", algebra, "h, lie or assoc")->required()->check(algebra_check);
  decompose->add_option("--degree", degree, "Degree k")->required()->check(CLI::PositiveNumber);
  decompose->add_option("--genus", genus, "Annotate rows with GL(2g) dimensions")->check(CLI::PositiveNumber);

  auto* symmetry = app.add_subcommand("symmetry", "Check conjugate symmetry of a decomposition");
  symmetry->add_option("--algebra", algebra, "h, lie or assoc")->required()->check(algebra_check);
  symmetry->add_option("--degree", degree, "Degree k")->required()->check(CLI::PositiveNumber);

  int max_degree = 20;
  auto* series = app.add_subcommand("series", "Check the multiplicity-one series [2j,2] and [2,2,1^4m] in h");
  series->add_option("--max-degree", max_degree, "Largest degree checked")->check(CLI::Range(2, 1000));

  bool stable = false;
  bool with_oracle = false;
  std::vector<int> genera;
  int max_genus = 0;
  auto* invariants = app.add_subcommand("invariants", "Dimensions of Sp-invariants of h in degree k");
  invariants->add_option("--degree", degree, "Degree k")->required()->check(CLI::PositiveNumber);
  invariants->add_flag("--stable", stable, "Include the large-genus value");
  invariants->add_option("--genus", genera, "Genus (repeatable)")->check(CLI::PositiveNumber);
  invariants->add_option("--max-genus", max_genus, "All genera 1..N")->check(CLI::PositiveNumber);
  invariants->add_flag("--oracle", with_oracle, "Add explicit oracle values per genus");

  std::string lambda_text, mu_text, function;
  auto* character = app.add_subcommand("character", "Character values of S_n");
  character->add_option("--lambda", lambda_text, "Irreducible label, e.g. 3,1,1 or 2^2,1");
  character->add_option("--mu", mu_text, "Cycle type");
  character->add_option("--function", function, "Class function L, induced, W or cyclic")
      ->check(CLI::IsMember({"L", "induced", "W", "cyclic"}));
  character->add_option("--degree", degree, "Degree k of the class function")->check(CLI::PositiveNumber);

  auto* oracle_cmd = app.add_subcommand("oracle", "Explicit linear algebra on free Lie and associative algebras");
  oracle_cmd->require_subcommand(1);
  auto add_genus_degree = [&](CLI::App* sub, bool genus_required) {
    auto* g = sub->add_option("--genus", genus, "Genus g (2g letters)")->check(CLI::PositiveNumber);
    if (genus_required) g->required();
    sub->add_option("--degree", degree, "Degree k")->required()->check(CLI::PositiveNumber);
  };
  auto* oracle_kernel = oracle_cmd->add_subcommand("kernel", "Kernel dimension of the bracket map");
  add_genus_degree(oracle_kernel, true);
  std::string route = "weights";
  auto* oracle_invariants = oracle_cmd->add_subcommand("invariants", "Sp-invariant dimension of h");
  add_genus_degree(oracle_invariants, true);
  oracle_invariants->add_option("--route", route, "weights or explicit")
      ->check(CLI::IsMember({"weights", "explicit"}));
  auto* oracle_h = oracle_cmd->add_subcommand("decompose", "GL decomposition of h from weight spaces");
  add_genus_degree(oracle_h, false);
  auto* oracle_assoc = oracle_cmd->add_subcommand("assoc", "GL decomposition of the associative analogue");
  add_genus_degree(oracle_assoc, false);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run a property suite and print a pass/fail table");
  verify->add_option("--suite", suite, "characters, symmetry, dimensions, oracle or all")
      ->check(CLI::IsMember({"characters", "symmetry", "dimensions", "oracle", "all"}));
  verify->add_option("--max-degree", max_degree, "Largest degree checked")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Context ctx;
  ctx.threads = threads;
  ctx.use_cache = !no_cache;
  ctx.limits.max_basis_size = max_basis;
  ctx.limits.max_matrix_dimension = max_matrix;
  ctx.cache = DecompositionCache::from_environment();

  ResultEnvelope envelope;
  std::function<Outcome()> action;
  const std::optional<int> genus_opt = genus > 0 ? std::optional<int>(genus) : std::nullopt;
  if (*decompose) {
    envelope.command = "decompose";
    envelope.parameters = {{"algebra", algebra}, {"degree", degree}};
    if (genus_opt) envelope.parameters["genus"] = genus;
    action = [&] { return decompose_command(ctx, parse_source(algebra), degree, genus_opt); };
  } else if (*symmetry) {
    envelope.command = "symmetry";
    envelope.parameters = {{"algebra", algebra}, {"degree", degree}};
    action = [&] { return symmetry_command(ctx, parse_source(algebra), degree); };
  } else if (*series) {
    envelope.command = "series";
    envelope.parameters = {{"max_degree", max_degree}};
    action = [&] { return series_command(ctx, max_degree); };
  } else if (*invariants) {
    envelope.command = "invariants";
    envelope.parameters = {{"degree", degree}, {"stable", stable}, {"genus", genera}, {"oracle", with_oracle}};
    if (max_genus) envelope.parameters["max_genus"] = max_genus;
    action = [&] { return invariants_command(ctx, degree, stable, genera, max_genus, with_oracle); };
  } else if (*character) {
    envelope.command = "character";
    if (!function.empty()) {
      envelope.parameters = {{"function", function}, {"degree", degree}};
    } else {
      envelope.parameters = {{"lambda", lambda_text}};
      if (!mu_text.empty()) envelope.parameters["mu"] = mu_text;
    }
    action = [&] { return character_command(lambda_text, mu_text, function, degree); };
  } else if (*oracle_cmd) {
    envelope.parameters = {{"degree", degree}};
    if (genus_opt) envelope.parameters["genus"] = genus;
    const int oracle_genus = genus_opt.value_or(oracle::stable_genus(degree));
    if (*oracle_kernel) {
      envelope.command = "oracle kernel";
      action = [&] { return oracle_kernel_command(ctx, genus, degree); };
    } else if (*oracle_invariants) {
      envelope.command = "oracle invariants";
      envelope.parameters["route"] = route;
      action = [&] { return oracle_invariants_command(ctx, genus, degree, route); };
    } else if (*oracle_h) {
      envelope.command = "oracle decompose";
      action = [&, oracle_genus] { return oracle_decomposition_command(ctx, Source::H, oracle_genus, degree); };
    } else {
      envelope.command = "oracle assoc";
      action = [&, oracle_genus] { return oracle_decomposition_command(ctx, Source::Assoc, oracle_genus, degree); };
    }
  } else {
    envelope.command = "verify";
    envelope.parameters = {{"suite", suite}, {"max_degree", max_degree}};
    action = [&] { return verify_command(ctx, suite, max_degree); };
  }
  envelope.parameters["threads"] = threads;

  Outcome outcome;
  try {
    const auto start = std::chrono::steady_clock::now();
    outcome = action();
    envelope.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  } catch (const ResourceLimitError& e) {
    err << "error: resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const UnimplementedError& e) {
    err << "error: not implemented: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "error: internal consistency check failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  }

  envelope.payload = std::move(outcome.payload);
  const bool as_table = format.empty() ? stdout_is_tty : format == "table";
  if (as_table)
    print_table(outcome.table, out);
  else
    out << dump_canonical(to_json(envelope)) << '\n';
  return outcome.exit_code;
}

}  // namespace sympdec
