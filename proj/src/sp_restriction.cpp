#include "sympdec/sp_restriction.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

#include "sympdec/combinatorics.hpp"
#include "sympdec/littlewood_richardson.hpp"
#include "sympdec/parallel.hpp"

namespace sympdec {

BigInt SpDecomposition::multiplicity(const Partition& label) const {
  auto it = terms.find(label);
  return it == terms.end() ? BigInt(0) : it->second;
}

namespace {

void subdiagrams(const Partition& outer, std::size_t row, int cap,
                 std::vector<int>& prefix, std::vector<Partition>& out) {
  if (row == static_cast<std::size_t>(outer.length())) {
    out.push_back(Partition::from_unsorted(prefix));
    return;
  }
  for (int part = std::min(cap, outer[row]); part >= 0; --part) {
    prefix.push_back(part);
    subdiagrams(outer, row + 1, part, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Partition> subdiagrams(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  subdiagrams(outer, 0, outer[0], prefix, out);
  return out;
}

}  // namespace

SpDecomposition stable_restrict(const Decomposition& dec, unsigned threads) {
  using Terms = std::map<Partition, BigInt, CanonicalOrder>;
  std::vector<std::pair<Partition, BigInt>> gl_terms(dec.terms.begin(), dec.terms.end());
  std::vector<Terms> partial(gl_terms.size());
  parallel_for(gl_terms.size(), threads, [&](std::size_t i) {
    const auto& [lambda, m] = gl_terms[i];
    for (const Partition& mu : subdiagrams(lambda)) {
      if ((lambda.size() - mu.size()) % 2) continue;
      BigInt branch = 0;
      for (const auto& [beta, c] : lr_skew_expansion(lambda, mu))
        if (has_even_columns(beta)) branch += c;
      if (branch != 0) partial[i][mu] += m * branch;
    }
  });
  SpDecomposition out;
  out.degree = dec.degree;
  for (const Terms& t : partial)
    for (const auto& [mu, m] : t) out.terms[mu] += m;
  return out;
}

BigInt stable_invariant_dim(const Decomposition& h) {
  BigInt total = 0;
  for (const auto& [lambda, m] : h.terms)
    if (has_even_columns(lambda)) total += m;
  return total;
}

BigInt stable_invariant_dim(int k, unsigned threads) {
  if (k < 1) throw std::invalid_argument("degree must be >= 1");
  if (k % 2) return 0;
  return stable_invariant_dim(decompose_h(k, threads));
}

BigInt genus_one_invariant_dim(const Decomposition& h) {
  if (h.degree < 1 || h.degree % 2)
    throw std::invalid_argument("genus-one invariants need an even degree k >= 2, got " +
                                std::to_string(h.degree));
  const int half = h.boxes / 2;
  return h.multiplicity(Partition{half, half});
}

BigInt genus_one_invariant_dim(int k, unsigned threads) {
  if (k < 1 || k % 2)
    throw std::invalid_argument("genus-one invariants need an even degree k >= 2, got " +
                                std::to_string(k));
  return genus_one_invariant_dim(decompose_h(k, threads));
}

int spherical_invariant_count(const Partition& lambda, int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  return (lambda.length() <= 2 * genus && has_even_columns(lambda)) ? 1 : 0;
}

namespace {

using Exponent = std::vector<int>;

// Π over positive roots of C_g of (1 - x^{-α}), as exponent -> coefficient.
std::map<Exponent, BigInt> weyl_denominator(int genus) {
  std::vector<Exponent> roots;
  const auto g = static_cast<std::size_t>(genus);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i + 1; j < g; ++j) {
      Exponent minus(g, 0), plus(g, 0);
      minus[i] = 1, minus[j] = -1;
      plus[i] = 1, plus[j] = 1;
      roots.push_back(minus);
      roots.push_back(plus);
    }
    Exponent longroot(g, 0);
    longroot[i] = 2;
    roots.push_back(longroot);
  }
  std::map<Exponent, BigInt> product{{Exponent(g, 0), 1}};
  for (const Exponent& root : roots) {
    std::map<Exponent, BigInt> next = product;
    for (const auto& [e, c] : product) {
      Exponent shifted = e;
      for (std::size_t t = 0; t < g; ++t) shifted[t] -= root[t];
      next[shifted] -= c;
    }
    std::erase_if(next, [](const auto& term) { return term.second == 0; });
    product = std::move(next);
  }
  return product;
}

void compositions(int remaining, std::size_t slots, std::vector<int>& prefix,
                  const std::function<void(const std::vector<int>&)>& visit) {
  if (prefix.size() + 1 == slots) {
    prefix.push_back(remaining);
    visit(prefix);
    prefix.pop_back();
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    prefix.push_back(a);
    compositions(remaining - a, slots, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

BigInt weyl_invariant_count(const Partition& lambda, int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  if (lambda.length() > 2 * genus) return 0;
  const auto g = static_cast<std::size_t>(genus);
  // Torus character of V_λ restricted to Sp(2g): letter pairs (a_i, b_i)
  // carry weights ±e_i.
  std::map<Exponent, BigInt> character;
  std::vector<int> prefix;
  compositions(lambda.size(), 2 * g, prefix, [&](const std::vector<int>& alpha) {
    BigInt k = kostka_number(lambda, alpha);
    if (k == 0) return;
    Exponent e(g);
    for (std::size_t i = 0; i < g; ++i) e[i] = alpha[2 * i] - alpha[2 * i + 1];
    character[e] += k;
  });
  BigInt constant = 0;
  for (const auto& [e, c] : weyl_denominator(genus)) {
    Exponent opposite = e;
    for (int& x : opposite) x = -x;
    if (auto it = character.find(opposite); it != character.end()) constant += c * it->second;
  }
  return constant;
}

BigInt unstable_invariant_dim(const Decomposition& h, int genus, InvariantMethod method) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  BigInt total = 0;
  for (const auto& [lambda, m] : h.terms) {
    if (method == InvariantMethod::Spherical)
      total += m * spherical_invariant_count(lambda, genus);
    else
      total += m * weyl_invariant_count(lambda, genus);
  }
  return total;
}

BigInt unstable_invariant_dim(int k, int genus, InvariantMethod method, unsigned threads) {
  if (k < 1) throw std::invalid_argument("degree must be >= 1");
  return unstable_invariant_dim(decompose_h(k, threads), genus, method);
}

}  // namespace sympdec
