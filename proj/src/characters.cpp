#include "sympdec/characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "sympdec/combinatorics.hpp"

namespace sympdec {

std::size_t CharacterTable::KeyHash::operator()(const Key& k) const noexcept {
  return PartitionHash{}(k.lambda) * 1000003u ^ PartitionHash{}(k.mu);
}

CharacterTable& CharacterTable::shared() {
  static CharacterTable table;
  return table;
}

std::size_t CharacterTable::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

BigInt CharacterTable::value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("character " + lambda.to_string() +
                                " evaluated on class " + mu.to_string() +
                                " of a different degree");
  return evaluate(lambda, mu);
}

BigInt CharacterTable::evaluate(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return 1;
  // χ_λ is 1 on every class for a single row; for a single column it is
  // the sign.
  if (lambda.length() == 1) return 1;
  if (lambda[0] == 1) return class_sign(mu);

  Key key{lambda, mu};
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  const int hook = mu[0];
  Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));

  const int len = lambda.length();
  std::vector<int> beads(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beads[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;

  BigInt total = 0;
  std::vector<int> moved;
  std::vector<int> parts;
  for (int b : beads) {
    const int target = b - hook;
    if (target < 0) continue;
    if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    int jumped = 0;
    for (int c : beads)
      if (c > target && c < b) ++jumped;
    moved = beads;
    std::replace(moved.begin(), moved.end(), b, target);
    std::sort(moved.begin(), moved.end(), std::greater<>());
    parts.clear();
    for (int i = 0; i < len; ++i) {
      int part = moved[static_cast<std::size_t>(i)] - (len - 1 - i);
      if (part > 0) parts.push_back(part);
    }
    BigInt sub = evaluate(Partition(parts), rest);
    if (jumped % 2) total -= sub; else total += sub;
  }

  std::unique_lock lock(mutex_);
  memo_.emplace(std::move(key), total);
  return total;
}

BigInt mn_character(const Partition& lambda, const Partition& mu) {
  return CharacterTable::shared().value(lambda, mu);
}

std::string to_string(ClassFunctionLabel label) {
  switch (label) {
    case ClassFunctionLabel::Lie: return "L";
    case ClassFunctionLabel::Induced: return "Induced";
    case ClassFunctionLabel::W: return "W";
    case ClassFunctionLabel::Irreducible: return "Irreducible";
    case ClassFunctionLabel::AdHoc: return "AdHoc";
  }
  return "AdHoc";
}

BigInt ClassFunction::at(const Partition& mu) const {
  auto it = values_.find(mu);
  return it == values_.end() ? BigInt(0) : it->second;
}

void ClassFunction::set(const Partition& mu, const BigInt& value) {
  if (mu.size() != degree_)
    throw std::invalid_argument("class " + mu.to_string() +
                                " does not belong to S_" + std::to_string(degree_));
  if (value == 0)
    values_.erase(mu);
  else
    values_[mu] = value;
}

ClassFunction ClassFunction::operator-(const ClassFunction& other) const {
  if (degree_ != other.degree_)
    throw std::invalid_argument("class functions of different degrees");
  ClassFunction out(degree_);
  out.values_ = values_;
  for (const auto& [mu, v] : other.values_) out.set(mu, out.at(mu) - v);
  return out;
}

ClassFunction ClassFunction::irreducible_character(const Partition& lambda) {
  ClassFunction out(lambda.size(), ClassFunctionLabel::Irreducible);
  out.irreducible_ = lambda;
  for (const Partition& mu : enumerate_partitions(lambda.size()))
    out.set(mu, mn_character(lambda, mu));
  return out;
}

namespace {

// (b-1)! a^{b-1} μ(a)
BigInt necklace_weight(int a, int b) {
  int mu = mobius(a);
  if (mu == 0) return 0;
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(a),
                static_cast<unsigned long>(b - 1));
  return mu * factorial(b - 1) * power;
}

Partition with_fixed_point(int a, int b) {
  std::vector<int> parts(static_cast<std::size_t>(b), a);
  parts.push_back(1);
  return Partition(std::move(parts));
}

void require_positive(int k, const char* name) {
  if (k < 1) throw std::invalid_argument(std::string(name) + " needs k >= 1");
}

}  // namespace

ClassFunction chi_L(int k) {
  require_positive(k, "chi_L");
  ClassFunction chi(k, ClassFunctionLabel::Lie);
  for (long a : divisors(k)) {
    int b = k / static_cast<int>(a);
    chi.set(Partition::rectangle(static_cast<int>(a), b),
            necklace_weight(static_cast<int>(a), b));
  }
  return chi;
}

ClassFunction chi_induced(int k) {
  require_positive(k, "chi_induced");
  ClassFunction chi(k + 2, ClassFunctionLabel::Induced);
  chi.set(Partition::rectangle(1, k + 2), (k + 2) * factorial(k));
  for (long a : divisors(k + 1)) {
    if (a < 2) continue;
    int b = (k + 1) / static_cast<int>(a);
    chi.set(with_fixed_point(static_cast<int>(a), b),
            necklace_weight(static_cast<int>(a), b));
  }
  return chi;
}

ClassFunction chi_W(int k) {
  require_positive(k, "chi_W");
  ClassFunction chi(k + 2, ClassFunctionLabel::W);
  chi.set(Partition::rectangle(1, k + 2), factorial(k));
  for (long a : divisors(k + 1)) {
    if (a < 2) continue;
    int b = (k + 1) / static_cast<int>(a);
    chi.set(with_fixed_point(static_cast<int>(a), b),
            necklace_weight(static_cast<int>(a), b));
  }
  for (long a : divisors(k + 2)) {
    if (a < 2) continue;
    int b = (k + 2) / static_cast<int>(a);
    chi.set(Partition::rectangle(static_cast<int>(a), b),
            -necklace_weight(static_cast<int>(a), b));
  }
  return chi;
}

ClassFunction cyclic_invariant_character(int n) {
  require_positive(n, "cyclic_invariant_character");
  ClassFunction chi(n);
  for (long a : divisors(n)) {
    long phi = 0;
    for (long d : divisors(a)) phi += mobius(d) * (a / d);
    const Partition mu = Partition::rectangle(static_cast<int>(a), n / static_cast<int>(a));
    chi.set(mu, centralizer_order(mu) * phi / n);
  }
  return chi;
}

bool verify_difference_identity(int k) {
  ClassFunction difference = chi_induced(k) - chi_L(k + 2);
  return chi_W(k).same_values(difference);
}

}  // namespace sympdec
