#include "sympdec/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "sympdec/combinatorics.hpp"
#include "sympdec/errors.hpp"

namespace sympdec::oracle {
namespace {

void require_parameters(int genus, int degree) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
}

void check_cap(const BigInt& projected, std::size_t cap, const std::string& what,
               const std::string& knob) {
  if (projected > BigInt(static_cast<unsigned long>(cap)))
    throw ResourceLimitError(what + " would have " + projected.get_str() +
                             " elements, above the cap of " + std::to_string(cap) +
                             "; raise " + knob + " or choose a smaller genus/degree");
}

// Number of distinct letter arrangements of a content.
BigInt multinomial(const std::vector<int>& content) {
  int total = 0;
  BigInt denominator = 1;
  for (int c : content) {
    total += c;
    denominator *= factorial(c);
  }
  return factorial(total) / denominator;
}

std::vector<int> padded(const Partition& nu, int letters) {
  std::vector<int> c(static_cast<std::size_t>(letters), 0);
  for (int i = 0; i < nu.length(); ++i) c[static_cast<std::size_t>(i)] = nu[static_cast<std::size_t>(i)];
  return c;
}

BigInt arrangements(const Partition& nu, int letters) {
  // Distinct rearrangements of the padded content among the letters.
  std::map<int, int> counts;
  for (int c : padded(nu, letters)) ++counts[c];
  BigInt out = factorial(letters);
  for (auto [value, count] : counts) out /= factorial(count);
  return out;
}

Decomposition kostka_eliminate(const std::map<Partition, std::size_t, CanonicalOrder>& weights,
                               Source source, int degree, int boxes) {
  Decomposition dec;
  dec.source = source;
  dec.degree = degree;
  dec.boxes = boxes;
  // Canonical order refines dominance, so every μ ▷ λ is handled before λ.
  for (const auto& [lambda, weight_dim] : weights) {
    BigInt m = static_cast<unsigned long>(weight_dim);
    for (const auto& [mu, m_mu] : dec.terms) m -= m_mu * kostka_number(mu, lambda.part_vector());
    if (m < 0)
      throw InternalError("negative multiplicity for " + lambda.to_string() +
                          " in Kostka elimination");
    dec.set(lambda, m);
  }
  return dec;
}

}  // namespace

int stable_genus(int degree) { return (degree + 3) / 2; }

LyndonBasis build_lyndon_basis(int genus, int degree, const OracleLimits& limits) {
  require_parameters(genus, degree);
  check_cap(witt_dimension(2L * genus, degree), limits.max_basis_size, "Lyndon basis",
            "max_basis_size");
  LyndonBasis basis;
  basis.alphabet_size = 2 * genus;
  basis.degree = degree;
  basis.words = lyndon_words(2 * genus, degree);
  for (std::size_t i = 0; i < basis.words.size(); ++i) basis.index.emplace(basis.words[i], i);
  return basis;
}

std::map<std::size_t, Rational> expand_bracket(const BracketExpr& expr, const LyndonBasis& basis) {
  if (expr.degree() != basis.degree)
    throw std::invalid_argument("bracket of degree " + std::to_string(expr.degree()) +
                                " expanded in a degree-" + std::to_string(basis.degree) + " basis");
  AssocPolynomial f = expand_associative(expr);
  for (const auto& [w, c] : f)
    for (char x : w)
      if (static_cast<unsigned char>(x) >= basis.alphabet_size)
        throw std::invalid_argument("letter outside the alphabet");
  LyndonReducer reducer;
  std::map<std::size_t, Rational> out;
  for (const auto& [w, c] : reducer.coordinates(std::move(f)))
    out.emplace(basis.index.at(w), Rational(static_cast<long>(c)));
  return out;
}

SparseExactMatrix bracket_map_matrix(int genus, int degree, const OracleLimits& limits) {
  require_parameters(genus, degree);
  const long letters = 2L * genus;
  check_cap(letters * witt_dimension(letters, degree + 1), limits.max_matrix_dimension,
            "bracket map matrix", "max_matrix_dimension");
  LyndonBasis source = build_lyndon_basis(genus, degree + 1, limits);
  LyndonBasis target = build_lyndon_basis(genus, degree + 2, limits);
  SparseExactMatrix m(target.size(), static_cast<std::size_t>(letters) * source.size());
  LyndonReducer reducer;
  for (int x = 0; x < letters; ++x) {
    for (std::size_t i = 0; i < source.size(); ++i) {
      const std::size_t col = static_cast<std::size_t>(x) * source.size() + i;
      AssocPolynomial f = commutator_with_letter(x, reducer.expansion(source.words[i]));
      for (const auto& [w, c] : reducer.coordinates(std::move(f)))
        m.add(target.index.at(w), col, Rational(static_cast<long>(c)));
    }
  }
  return m;
}

SparseExactMatrix bracket_map_block(const std::vector<int>& content, LyndonReducer& reducer,
                                    const OracleLimits& limits) {
  std::vector<Word> rows = lyndon_words_with_content(content);
  if (rows.size() > limits.max_matrix_dimension)
    throw ResourceLimitError("bracket block with " + std::to_string(rows.size()) +
                             " rows exceeds max_matrix_dimension");
  std::unordered_map<Word, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);

  std::vector<std::pair<int, std::vector<Word>>> sources;
  std::size_t cols = 0;
  for (std::size_t x = 0; x < content.size(); ++x) {
    if (content[x] == 0) continue;
    std::vector<int> smaller = content;
    --smaller[x];
    sources.emplace_back(static_cast<int>(x), lyndon_words_with_content(smaller));
    cols += sources.back().second.size();
  }
  if (cols > limits.max_matrix_dimension)
    throw ResourceLimitError("bracket block with " + std::to_string(cols) +
                             " columns exceeds max_matrix_dimension");
  SparseExactMatrix m(rows.size(), cols);
  std::size_t col = 0;
  for (const auto& [x, words] : sources) {
    for (const Word& u : words) {
      AssocPolynomial f = commutator_with_letter(x, reducer.expansion(u));
      for (const auto& [w, c] : reducer.coordinates(std::move(f)))
        m.add(row_index.at(w), col, Rational(static_cast<long>(c)));
      ++col;
    }
  }
  return m;
}

std::map<Partition, std::size_t, CanonicalOrder> h_weight_dimensions(int genus, int degree,
                                                                     const OracleLimits& limits) {
  require_parameters(genus, degree);
  const int letters = 2 * genus;
  std::map<Partition, std::size_t, CanonicalOrder> out;
  LyndonReducer reducer;
  for (const Partition& nu : enumerate_partitions(degree + 2, letters)) {
    SparseExactMatrix block = bracket_map_block(padded(nu, letters), reducer, limits);
    out.emplace(nu, kernel_dimension(block));
  }
  return out;
}

BigInt bracket_kernel_dimension(int genus, int degree, const OracleLimits& limits) {
  BigInt total = 0;
  for (const auto& [nu, dim] : h_weight_dimensions(genus, degree, limits))
    total += arrangements(nu, 2 * genus) * static_cast<unsigned long>(dim);
  return total;
}

Decomposition oracle_decompose_h(int genus, int degree, const OracleLimits& limits) {
  return kostka_eliminate(h_weight_dimensions(genus, degree, limits), Source::H, degree,
                          degree + 2);
}

namespace {

// One substitution term of a raising operator: letter `from` ↦ coeff·`to`.
struct Substitution {
  int from;
  int to;
  std::int64_t coeff;
};
using RaisingOperator = std::vector<Substitution>;

// Simple-root vectors of sp(2g) in the basis a_i = 2i, b_i = 2i+1 with
// ω(a_i, b_i) = 1: for e_i - e_{i+1}, a_{i+1} ↦ a_i and b_i ↦ -b_{i+1};
// for 2e_{g-1}, b_{g-1} ↦ a_{g-1}.
std::vector<RaisingOperator> simple_raising_operators(int genus) {
  std::vector<RaisingOperator> ops;
  for (int i = 0; i + 1 < genus; ++i)
    ops.push_back({{2 * (i + 1), 2 * i, 1}, {2 * i + 1, 2 * (i + 1) + 1, -1}});
  ops.push_back({{2 * (genus - 1) + 1, 2 * (genus - 1), 1}});
  return ops;
}

AssocPolynomial apply_derivation(const RaisingOperator& op, const AssocPolynomial& p) {
  AssocPolynomial out;
  for (const auto& [w, c] : p)
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (const Substitution& s : op)
        if (static_cast<unsigned char>(w[pos]) == s.from) {
          Word v = w;
          v[pos] = static_cast<char>(s.to);
          add_scaled(out, {{v, 1}}, c * s.coeff);
        }
  return out;
}

void sp_zero_weight_contents(int genus, int half, std::vector<int>& prefix,
                             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == 2 * genus) {
    if (half == 0) out.push_back(prefix);
    return;
  }
  for (int p = half; p >= 0; --p) {
    prefix.push_back(p);
    prefix.push_back(p);
    sp_zero_weight_contents(genus, half - p, prefix, out);
    prefix.pop_back();
    prefix.pop_back();
  }
}

}  // namespace

BigInt sp_invariant_dimension(int genus, int degree, const OracleLimits& limits) {
  require_parameters(genus, degree);
  if ((degree + 2) % 2) return 0;  // no zero Sp weight in odd tensor degree
  const int letters = 2 * genus;

  std::vector<std::vector<int>> contents;
  std::vector<int> prefix;
  sp_zero_weight_contents(genus, (degree + 2) / 2, prefix, contents);

  // Unknowns: x ⊗ u with u Lyndon of degree k+1, x ⊗ u of Sp weight zero.
  std::vector<std::pair<int, Word>> unknowns;
  for (const auto& c : contents)
    for (int x = 0; x < letters; ++x) {
      if (c[static_cast<std::size_t>(x)] == 0) continue;
      std::vector<int> smaller = c;
      --smaller[static_cast<std::size_t>(x)];
      for (Word& u : lyndon_words_with_content(smaller)) unknowns.emplace_back(x, std::move(u));
    }
  if (unknowns.size() > limits.max_matrix_dimension)
    throw ResourceLimitError("sp-invariant system with " + std::to_string(unknowns.size()) +
                             " unknowns exceeds max_matrix_dimension");

  std::map<std::string, std::size_t> row_index;
  auto row_of = [&](std::string key) {
    return row_index.try_emplace(std::move(key), row_index.size()).first->second;
  };
  struct Triplet {
    std::size_t row, col;
    std::int64_t value;
  };
  std::vector<Triplet> triplets;
  const auto ops = simple_raising_operators(genus);
  LyndonReducer reducer;
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const auto& [x, u] = unknowns[col];
    const AssocPolynomial& pu = reducer.expansion(u);
    for (const auto& [w, c] : reducer.coordinates(commutator_with_letter(x, pu)))
      triplets.push_back({row_of("B" + w), col, c});
    for (std::size_t j = 0; j < ops.size(); ++j) {
      const std::string tag = "X" + std::to_string(j) + ":";
      // X(x ⊗ u) = X(x) ⊗ u + x ⊗ X(u)
      for (const Substitution& s : ops[j])
        if (s.from == x) triplets.push_back({row_of(tag + static_cast<char>(s.to) + u), col, s.coeff});
      for (const auto& [v, c] : reducer.coordinates(apply_derivation(ops[j], pu)))
        triplets.push_back({row_of(tag + static_cast<char>(x) + v), col, c});
    }
  }
  if (row_index.size() > 4 * limits.max_matrix_dimension)
    throw ResourceLimitError("sp-invariant system with " + std::to_string(row_index.size()) +
                             " equations exceeds 4 * max_matrix_dimension");
  SparseExactMatrix m(row_index.size(), unknowns.size());
  for (const auto& t : triplets) m.add(t.row, t.col, Rational(static_cast<long>(t.value)));
  return static_cast<unsigned long>(kernel_dimension(m));
}

BigInt sp_invariant_dimension_by_weights(int genus, int degree, const OracleLimits& limits) {
  require_parameters(genus, degree);
  const auto weights = h_weight_dimensions(genus, degree, limits);
  const auto g = static_cast<std::size_t>(genus);
  const int total = degree + 2;

  // dim h[μ] for an Sp weight μ: sum over GL contents with
  // c_{a_i} - c_{b_i} = μ_i.
  auto sp_weight_dim = [&](const std::vector<int>& mu) {
    BigInt dim = 0;
    int fixed = 0;
    for (int m : mu) fixed += m;
    if ((total - fixed) < 0 || (total - fixed) % 2) return dim;
    std::vector<int> content(2 * g);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining_pairs) {
      if (i == g) {
        if (remaining_pairs != 0) return;
        auto it = weights.find(Partition::from_unsorted(content));
        if (it != weights.end()) dim += static_cast<unsigned long>(it->second);
        return;
      }
      for (int t = std::max(0, -mu[i]); t <= remaining_pairs; ++t) {
        content[2 * i] = t + mu[i];
        content[2 * i + 1] = t;
        rec(i + 1, remaining_pairs - t);
      }
    };
    // Pair i holds (t_i + μ_i, t_i), so Σ t_i = (total - Σ μ_i) / 2.
    rec(0, (total - fixed) / 2);
    return dim;
  };

  std::vector<int> rho(g);
  for (std::size_t i = 0; i < g; ++i) rho[i] = static_cast<int>(g - i);
  std::vector<std::size_t> perm(g);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt invariants = 0;
  do {
    int perm_sign = 1;
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j)
        if (perm[i] > perm[j]) perm_sign = -perm_sign;
    for (unsigned flips = 0; flips < (1u << g); ++flips) {
      int sign = perm_sign;
      std::vector<int> mu(g);
      for (std::size_t i = 0; i < g; ++i) {
        int w_rho = rho[perm[i]];
        if (flips & (1u << i)) {
          w_rho = -w_rho;
          sign = -sign;
        }
        mu[i] = rho[i] - w_rho;
      }
      invariants += sign * sp_weight_dim(mu);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return invariants;
}

Decomposition assoc_decompose(int genus, int degree, const OracleLimits& limits) {
  require_parameters(genus, degree);
  const int letters = 2 * genus;
  const int total = degree + 2;
  std::map<Partition, std::size_t, CanonicalOrder> weights;
  for (const Partition& nu : enumerate_partitions(total, letters)) {
    std::vector<int> content = padded(nu, letters);
    check_cap(multinomial(content), limits.max_matrix_dimension, "associative weight block",
              "max_matrix_dimension");
    Word w;
    for (std::size_t x = 0; x < content.size(); ++x)
      w.append(static_cast<std::size_t>(content[x]), static_cast<char>(x));
    std::vector<Word> words;
    do words.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    std::unordered_map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);

    // Column x ⊗ u is labelled by the word xu; its image is xu - ux.
    SparseExactMatrix m(words.size(), words.size());
    for (std::size_t col = 0; col < words.size(); ++col) {
      const Word& xu = words[col];
      Word ux = xu.substr(1) + xu[0];
      m.add(index.at(xu), col, 1);
      m.add(index.at(ux), col, -1);
    }
    weights.emplace(nu, kernel_dimension(m));
  }
  return kostka_eliminate(weights, Source::Assoc, degree, total);
}

}  // namespace sympdec::oracle
