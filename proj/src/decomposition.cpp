#include "sympdec/decomposition.hpp"

#include <set>
#include <stdexcept>

#include "sympdec/combinatorics.hpp"
#include "sympdec/errors.hpp"
#include "sympdec/parallel.hpp"

namespace sympdec {

std::string to_string(Source source) {
  switch (source) {
    case Source::H: return "h";
    case Source::Lie: return "lie";
    case Source::Assoc: return "assoc";
  }
  return "h";
}

Source parse_source(const std::string& name) {
  if (name == "h") return Source::H;
  if (name == "lie") return Source::Lie;
  if (name == "assoc") return Source::Assoc;
  throw std::invalid_argument("unknown algebra '" + name + "' (expected h, lie or assoc)");
}

BigInt Decomposition::multiplicity(const Partition& lambda) const {
  auto it = terms.find(lambda);
  return it == terms.end() ? BigInt(0) : it->second;
}

void Decomposition::set(const Partition& lambda, const BigInt& m) {
  if (lambda.size() != boxes)
    throw std::invalid_argument(lambda.to_string() + " has the wrong number of boxes");
  if (m < 0) throw std::invalid_argument("negative multiplicity");
  if (m == 0)
    terms.erase(lambda);
  else
    terms[lambda] = m;
}

BigInt Decomposition::sn_module_dimension() const {
  BigInt total = 0;
  for (const auto& [lambda, m] : terms) total += m * sn_dimension(lambda);
  return total;
}

BigInt multiplicity(const Partition& lambda, const ClassFunction& chi) {
  if (lambda.size() != chi.degree())
    throw std::invalid_argument("diagram " + lambda.to_string() +
                                " does not index an irreducible of S_" +
                                std::to_string(chi.degree()));
  Rational sum = 0;
  for (const auto& [mu, value] : chi.values())
    sum += ratio(value * mn_character(lambda, mu), centralizer_order(mu));
  sum.canonicalize();
  if (sum.get_den() != 1)
    throw InternalError("multiplicity of " + lambda.to_string() + " is fractional: " +
                        sum.get_str());
  if (sum < 0)
    throw InternalError("multiplicity of " + lambda.to_string() + " is negative: " +
                        sum.get_str());
  return sum.get_num();
}

Decomposition decompose(const ClassFunction& chi, Source source, int degree,
                        unsigned threads) {
  Decomposition dec;
  dec.source = source;
  dec.degree = degree;
  dec.boxes = chi.degree();
  const std::vector<Partition> shapes = enumerate_partitions(chi.degree());
  std::vector<BigInt> mults(shapes.size());
  parallel_for(shapes.size(), threads,
               [&](std::size_t i) { mults[i] = multiplicity(shapes[i], chi); });
  for (std::size_t i = 0; i < shapes.size(); ++i) dec.set(shapes[i], mults[i]);
  return dec;
}

Decomposition decompose_h(int k, unsigned threads) {
  return decompose(chi_W(k), Source::H, k, threads);
}

Decomposition decompose_lie(int k, unsigned threads) {
  return decompose(chi_L(k), Source::Lie, k, threads);
}

SymmetryReport check_conjugate_symmetry(const Decomposition& dec) {
  SymmetryReport report;
  // Each pair {λ, λ'} is represented by its canonically earlier member, so a
  // pair with one side absent is still seen exactly once.
  std::set<Partition, CanonicalOrder> pairs;
  for (const auto& [lambda, m] : dec.terms) {
    Partition other = conjugate(lambda);
    pairs.insert(CanonicalOrder{}(other, lambda) ? other : lambda);
  }
  for (const Partition& lambda : pairs) {
    BigInt m = dec.multiplicity(lambda);
    BigInt m_conj = dec.multiplicity(conjugate(lambda));
    if (m != m_conj) report.violations.push_back({lambda, m, m_conj});
  }
  report.symmetric = report.violations.empty();
  return report;
}

bool symmetry_guaranteed(Source source, int degree) {
  const int r = ((degree % 4) + 4) % 4;
  switch (source) {
    case Source::H: return r == 2 || r == 3;
    case Source::Lie: return r == 0 || r == 1 || r == 3;
    case Source::Assoc: return degree % 2 != 0;
  }
  return false;
}

BigInt dimension_of(const Decomposition& dec, int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  BigInt total = 0;
  for (const auto& [lambda, m] : dec.terms) total += m * gl_dimension(lambda, 2L * genus);
  return total;
}

Decomposition restrict_to_genus(const Decomposition& dec, int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  Decomposition out = dec;
  std::erase_if(out.terms, [&](const auto& term) { return term.first.length() > 2 * genus; });
  return out;
}

SeriesReport multiplicity_series_check(int max_k, unsigned threads) {
  if (max_k < 2) throw std::invalid_argument("series check needs max_k >= 2");
  SeriesReport report;
  std::map<int, Decomposition> cache;
  auto h = [&](int k) -> const Decomposition& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, decompose_h(k, threads)).first;
    return it->second;
  };
  for (int k = 2; k <= max_k; k += 2) {
    Partition lambda{k, 2};
    BigInt m = h(k).multiplicity(lambda);
    report.entries.push_back({"[2k,2]", k, lambda, m, m == 1});
  }
  for (int k = 2; k <= max_k; k += 4) {
    std::vector<int> parts{2, 2};
    parts.insert(parts.end(), static_cast<std::size_t>(k - 2), 1);
    Partition lambda(parts);
    BigInt m = h(k).multiplicity(lambda);
    report.entries.push_back({"[2^2,1^4m]", k, lambda, m, m == 1});
  }
  for (const auto& e : report.entries) report.ok = report.ok && e.ok;
  return report;
}

}  // namespace sympdec
