#include "sympdec/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

#include "sympdec/errors.hpp"

namespace sympdec::oracle {

std::string render(const Word& w) {
  std::string out;
  for (char c : w) {
    int x = static_cast<unsigned char>(c);
    out += x < 26 ? static_cast<char>('a' + x) : '?';
  }
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  const std::size_t n = w.size();
  for (std::size_t shift = 1; shift < n; ++shift) {
    // Compare w with its rotation by `shift`.
    for (std::size_t i = 0; i < n; ++i) {
      const char a = w[i];
      const char b = w[(i + shift) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal to a rotation: periodic
    }
  }
  return true;
}

std::vector<Word> lyndon_words(int alphabet_size, int length) {
  if (alphabet_size < 1 || length < 1)
    throw std::invalid_argument("lyndon_words needs a nonempty alphabet and length >= 1");
  std::vector<Word> out;
  Word w(1, 0);
  const char top = static_cast<char>(alphabet_size - 1);
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == length) out.push_back(w);
    const std::size_t period = w.size();
    while (static_cast<int>(w.size()) < length) w.push_back(w[w.size() - period]);
    while (!w.empty() && w.back() == top) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::vector<Word> lyndon_words_with_content(const std::vector<int>& content) {
  Word w;
  for (std::size_t x = 0; x < content.size(); ++x)
    w.append(static_cast<std::size_t>(std::max(content[x], 0)), static_cast<char>(x));
  std::vector<Word> out;
  if (w.empty()) return out;
  do {
    if (is_lyndon(w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<int> content_of(const Word& w, int alphabet_size) {
  std::vector<int> c(static_cast<std::size_t>(alphabet_size), 0);
  for (char x : w) ++c[static_cast<unsigned char>(x)];
  return c;
}

BracketExpr BracketExpr::letter(int x) {
  BracketExpr e;
  e.letter_ = x;
  return e;
}

BracketExpr BracketExpr::bracket(const BracketExpr& left, const BracketExpr& right) {
  BracketExpr e;
  e.left_ = std::make_shared<const BracketExpr>(left);
  e.right_ = std::make_shared<const BracketExpr>(right);
  e.degree_ = left.degree_ + right.degree_;
  return e;
}

std::string BracketExpr::to_string() const {
  if (is_letter()) return render(Word(1, static_cast<char>(letter_)));
  return "[" + left_->to_string() + "," + right_->to_string() + "]";
}

BracketExpr standard_bracketing(const Word& lyndon) {
  if (!is_lyndon(lyndon)) throw std::invalid_argument("'" + render(lyndon) + "' is not a Lyndon word");
  if (lyndon.size() == 1) return BracketExpr::letter(static_cast<unsigned char>(lyndon[0]));
  for (std::size_t split = 1; split < lyndon.size(); ++split) {
    Word suffix = lyndon.substr(split);
    if (is_lyndon(suffix))
      return BracketExpr::bracket(standard_bracketing(lyndon.substr(0, split)),
                                  standard_bracketing(suffix));
  }
  throw InternalError("Lyndon word without a Lyndon suffix");
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw InternalError("coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalError("coefficient overflow");
  return out;
}

void accumulate(AssocPolynomial& p, Word w, std::int64_t c) {
  auto [it, inserted] = p.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) p.erase(it);
  }
}

AssocPolynomial commutator(const AssocPolynomial& p, const AssocPolynomial& q) {
  AssocPolynomial out;
  for (const auto& [u, a] : p)
    for (const auto& [v, b] : q) {
      const std::int64_t ab = checked_mul(a, b);
      accumulate(out, u + v, ab);
      accumulate(out, v + u, -ab);
    }
  return out;
}

}  // namespace

AssocPolynomial expand_associative(const BracketExpr& expr) {
  if (expr.is_letter()) return {{Word(1, static_cast<char>(expr.letter_value())), 1}};
  return commutator(expand_associative(expr.left()), expand_associative(expr.right()));
}

void add_scaled(AssocPolynomial& p, const AssocPolynomial& q, std::int64_t factor) {
  if (factor == 0) return;
  for (const auto& [w, c] : q) accumulate(p, w, checked_mul(c, factor));
}

AssocPolynomial commutator_with_letter(int x, const AssocPolynomial& p) {
  const char letter = static_cast<char>(x);
  AssocPolynomial out;
  for (const auto& [w, c] : p) {
    accumulate(out, letter + w, c);
    accumulate(out, w + letter, -c);
  }
  return out;
}

const AssocPolynomial& LyndonReducer::expansion(const Word& lyndon) {
  auto it = expansions_.find(lyndon);
  if (it != expansions_.end()) return it->second;
  AssocPolynomial p;
  if (lyndon.size() == 1) {
    p[lyndon] = 1;
  } else {
    std::size_t split = 1;
    while (!is_lyndon(lyndon.substr(split))) ++split;
    // unordered_map keeps element references valid across rehashing.
    const AssocPolynomial& left = expansion(lyndon.substr(0, split));
    const AssocPolynomial& right = expansion(lyndon.substr(split));
    p = commutator(left, right);
  }
  if (p.empty() || p.begin()->first != lyndon || p.begin()->second != 1)
    throw InternalError("expansion of '" + render(lyndon) + "' does not lead with itself");
  return expansions_.emplace(lyndon, std::move(p)).first->second;
}

std::map<Word, std::int64_t> LyndonReducer::coordinates(AssocPolynomial f) {
  std::map<Word, std::int64_t> out;
  while (!f.empty()) {
    const Word smallest = f.begin()->first;
    const std::int64_t c = f.begin()->second;
    if (!is_lyndon(smallest))
      throw InternalError("not a Lie element: smallest word '" + render(smallest) + "' is not Lyndon");
    out[smallest] = c;
    add_scaled(f, expansion(smallest), -c);
  }
  return out;
}

}  // namespace sympdec::oracle
