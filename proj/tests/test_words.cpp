#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "mdeform/errors.hpp"
#include "mdeform/words.hpp"

using namespace mdeform;

namespace {

// Lower Christoffel word of slope r/(s-r): letter i is b exactly when
// floor((i+1) r / s) steps past floor(i r / s).
std::string christoffel_oracle(long r, long s) {
  std::string w;
  for (long i = 0; i < s; ++i) w += ((i + 1) * r / s != i * r / s) ? 'b' : 'a';
  return w;
}

}  // namespace

TEST_CASE("word parsing") {
  CHECK(Word::parse("a2b").letters() == "aab");
  CHECK(Word::parse("a^2bab^{2}").letters() == "aababb");
  CHECK(Word::parse("abab^2").compact() == "abab^2");
  CHECK(Word::parse("a^4b").compact() == "a^4b");
  CHECK_THROWS_AS(Word::parse("abc"), ParseError);
  CHECK_THROWS_AS(Word::parse(""), ParseError);
  CHECK_THROWS_AS(Word::parse("a^b"), ParseError);
}

TEST_CASE("triple tree") {
  auto root = triple_root();
  CHECK(root == WordTriple(Word("a"), Word("ab"), Word("b")));
  auto [l, r] = triple_children(root);
  CHECK(l == WordTriple(Word("a"), Word::parse("a2b"), Word("ab")));
  CHECK(r == WordTriple(Word("ab"), Word::parse("ab2"), Word("b")));
  CHECK_THROWS_AS(WordTriple(Word("a"), Word("a"), Word("a")), ParseError);
  CHECK(enumerate_triples(5).size() == 31);
  for (const auto& t : enumerate_triples(8)) CHECK(t.middle == t.left + t.right);
}

TEST_CASE("fractions to words") {
  CHECK(word_of_fraction(BigRational(3, 5)) == Word::parse("abab2"));
  CHECK(word_of_fraction(BigRational(5, 8)) == Word::parse("abab2ab2"));
  CHECK(word_of_fraction(BigRational(1, 2)) == Word("ab"));
  CHECK(word_of_fraction(BigRational(1, 1)) == Word("b"));
  for (long p = 2; p <= 12; ++p) {
    CHECK(word_of_fraction(BigRational(1, p)).letters() == std::string(static_cast<std::size_t>(p - 1), 'a') + "b");
    CHECK(word_of_fraction(BigRational(p - 1, p)).letters() == "a" + std::string(static_cast<std::size_t>(p - 1), 'b'));
  }
  CHECK_THROWS_AS(word_of_fraction(BigRational(3, 2)), OutOfRange);
  CHECK_THROWS_AS(word_of_fraction(BigRational(0)), OutOfRange);
}

TEST_CASE("Farey sums") {
  CHECK(farey_sum(BigRational(1, 2), BigRational(2, 3)) == BigRational(3, 5));
  CHECK(farey_sum(BigRational(3, 5), BigRational(5, 8)) == BigRational(8, 13));
  CHECK(farey_sum(BigRational(0), BigRational(1)) == BigRational(1, 2));
  auto t = farey_triple(BigRational(8, 13));
  CHECK(t.left == BigRational(3, 5));
  CHECK(t.right == BigRational(5, 8));
  CHECK(t.words.left == Word::parse("abab2"));
}

TEST_CASE("fraction correspondence is a bijection onto tree middles to depth 8") {
  std::map<std::string, std::string> middle_by_path;
  for (const auto& node : enumerate_word_tree(8)) middle_by_path[node.path] = node.words.middle.letters();
  REQUIRE(middle_by_path.size() == 255);
  std::set<std::string> hit;
  for (long s = 2; s <= 300; ++s) {
    for (long r = 1; r < s; ++r) {
      if (std::gcd(r, s) != 1) continue;
      auto ft = farey_triple(BigRational(r, s));
      if (ft.path.size() >= 8) continue;
      CAPTURE(r);
      CAPTURE(s);
      CHECK(ft.words.middle.letters() == christoffel_oracle(r, s));
      CHECK(middle_by_path.at(ft.path) == ft.words.middle.letters());
      // Mediant word is the concatenation of the parents' words.
      auto parent_word = [](const BigRational& x) { return x == 0 ? Word("a") : word_of_fraction(x); };
      CHECK(word_of_fraction(farey_sum(ft.left, ft.right)) == parent_word(ft.left) + parent_word(ft.right));
      hit.insert(ft.path);
    }
  }
  CHECK(hit.size() == 255);
}
