#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "sympdec/bigint.hpp"

namespace sympdec::oracle {

/// A word over the alphabet {0, …, n-1}; each char holds one letter.
/// Comparison is plain lexicographic order (a proper prefix is smaller).
using Word = std::string;

/// Element of the free associative algebra: word -> integer coefficient.
/// Coefficient arithmetic is overflow-checked.
using AssocPolynomial = std::map<Word, std::int64_t>;

/// "abba"-style rendering for alphabets of at most 26 letters.
std::string render(const Word& w);

/// Strictly smaller than each of its proper rotations.
bool is_lyndon(const Word& w);

/// All Lyndon words of the given length in increasing order (Duval).
std::vector<Word> lyndon_words(int alphabet_size, int length);

/// Lyndon words with the given letter content (content[x] = occurrences of
/// letter x), increasing order.
std::vector<Word> lyndon_words_with_content(const std::vector<int>& content);

/// Letter content of a word over an alphabet of `alphabet_size` letters.
std::vector<int> content_of(const Word& w, int alphabet_size);

/// Iterated bracket of letters.
class BracketExpr {
 public:
  static BracketExpr letter(int x);
  static BracketExpr bracket(const BracketExpr& left, const BracketExpr& right);

  bool is_letter() const { return !left_; }
  int letter_value() const { return letter_; }
  const BracketExpr& left() const { return *left_; }
  const BracketExpr& right() const { return *right_; }
  int degree() const { return degree_; }

  /// "[a,[a,b]]" style.
  std::string to_string() const;

 private:
  int letter_ = 0;
  int degree_ = 1;
  std::shared_ptr<const BracketExpr> left_, right_;
};

/// Standard bracketing of a Lyndon word: w = uv with v its longest proper
/// Lyndon suffix, b(w) = [b(u), b(v)].
BracketExpr standard_bracketing(const Word& lyndon);

/// Expansion of a bracket expression in the tensor algebra.
AssocPolynomial expand_associative(const BracketExpr& expr);

/// p += factor * q
void add_scaled(AssocPolynomial& p, const AssocPolynomial& q, std::int64_t factor);

/// x·p - p·x for a letter x.
AssocPolynomial commutator_with_letter(int x, const AssocPolynomial& p);

/// Rewrites Lie polynomials in the basis of standard bracketings of Lyndon
/// words. The expansion of b(w) is w plus lexicographically larger words, so
/// subtracting multiples of expansions along the smallest remaining word
/// terminates. Memoizes expansions; not thread-safe (use one per thread).
class LyndonReducer {
 public:
  /// Expansion of b(w) for a Lyndon word w.
  const AssocPolynomial& expansion(const Word& lyndon);

  /// Coordinates of f on Lyndon words. Throws InternalError when f is not a
  /// Lie element (its smallest surviving word is not Lyndon).
  std::map<Word, std::int64_t> coordinates(AssocPolynomial f);

 private:
  std::unordered_map<Word, AssocPolynomial> expansions_;
};

/// Ordered basis of the degree-k piece of the free Lie algebra on 2g
/// letters (a_1 = 0, b_1 = 1, a_2 = 2, …).
struct LyndonBasis {
  int alphabet_size = 0;
  int degree = 0;
  std::vector<Word> words;
  std::unordered_map<Word, std::size_t> index;

  std::size_t size() const { return words.size(); }
  BracketExpr bracketing(std::size_t i) const { return standard_bracketing(words[i]); }
};

}  // namespace sympdec::oracle
