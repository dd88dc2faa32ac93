#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdeform/bigint.hpp"

namespace mdeform {

/// A nonempty word over {a, b}.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters);

  /// Accepts plain letters and exponent shorthand: "aab", "a2b", "a^2b", "a^{2}b".
  static Word parse(std::string_view text);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::size_t count(char letter) const;

  /// Compact form with exponents, e.g. "a^2bab^2".
  std::string compact() const;

  friend Word operator+(const Word& x, const Word& y) { return Word(x.letters_ + y.letters_); }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

/// (u, uv, v) with the middle word the concatenation of the outer ones.
struct WordTriple {
  Word left, middle, right;

  WordTriple() = default;
  WordTriple(Word l, Word m, Word r);
  friend bool operator==(const WordTriple&, const WordTriple&) = default;
};

WordTriple triple_root();
/// Left child (u, u.uv, uv), right child (uv, uv.v, v).
std::pair<WordTriple, WordTriple> triple_children(const WordTriple& t);

/// A node of a binary triple tree: its words, the values attached to
/// (left, middle, right), and the L/R path from the root.
template <typename Value>
struct TripleNode {
  WordTriple words;
  std::array<Value, 3> values;
  std::string path;
  int depth = 1;
};

/// Every triple of the tree down to depth d (2^d - 1 triples), breadth first.
std::vector<TripleNode<Word>> enumerate_word_tree(int depth);
std::vector<WordTriple> enumerate_triples(int depth);

/// Distinct words appearing in the triples down to depth d, sorted by length then letters.
std::vector<Word> enumerate_words(int depth);

/// Farey triple (left parent, fraction, right parent) with the matching words.
struct FareyTriple {
  BigRational left, middle, right;
  WordTriple words;
  std::string path;
};

/// Stern-Brocot descent from (0/1, a) and (1/1, b). Needs 0 < f < 1.
FareyTriple farey_triple(const BigRational& f);

/// Position of a Christoffel word: the Farey triple whose middle word it is.
/// The outer words a and b, and non-Christoffel words, give nothing.
std::optional<FareyTriple> locate_word(const Word& w);

/// Christoffel word of a fraction 0 < f <= 1; 1/1 maps to b.
Word word_of_fraction(const BigRational& f);

BigRational farey_sum(const BigRational& x, const BigRational& y);

}  // namespace mdeform
