#include "mdeform/words.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "mdeform/errors.hpp"

namespace mdeform {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw ParseError("empty word");
  for (char c : letters_) {
    if (c != 'a' && c != 'b') throw ParseError(std::string("letter outside {a,b}: '") + c + "'");
  }
}

Word Word::parse(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  auto digit = [&](std::size_t k) { return k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])); };
  while (i < text.size()) {
    char c = text[i++];
    if (c == ' ') continue;
    if (c != 'a' && c != 'b') throw ParseError("bad word '" + std::string(text) + "'");
    bool caret = i < text.size() && text[i] == '^';
    if (caret) ++i;
    bool brace = i < text.size() && text[i] == '{';
    if (brace) ++i;
    long n = 1;
    if (digit(i)) {
      n = 0;
      while (digit(i)) n = n * 10 + (text[i++] - '0');
    } else if (caret || brace) {
      throw ParseError("missing exponent in '" + std::string(text) + "'");
    }
    if (brace) {
      if (i >= text.size() || text[i] != '}') throw ParseError("unclosed brace in '" + std::string(text) + "'");
      ++i;
    }
    if (n < 1 || n > 100000) throw ParseError("bad exponent in '" + std::string(text) + "'");
    out.append(static_cast<std::size_t>(n), c);
  }
  return Word(std::move(out));
}

std::size_t Word::count(char letter) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

std::string Word::compact() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    out += letters_[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

WordTriple::WordTriple(Word l, Word m, Word r) : left(std::move(l)), middle(std::move(m)), right(std::move(r)) {
  if (!(middle == left + right)) {
    throw ParseError("middle word " + middle.compact() + " is not " + left.compact() + " followed by " +
                     right.compact());
  }
}

WordTriple triple_root() { return WordTriple(Word("a"), Word("ab"), Word("b")); }

std::pair<WordTriple, WordTriple> triple_children(const WordTriple& t) {
  return {WordTriple(t.left, t.left + t.middle, t.middle), WordTriple(t.middle, t.middle + t.right, t.right)};
}

std::vector<TripleNode<Word>> enumerate_word_tree(int depth) {
  std::vector<TripleNode<Word>> out;
  if (depth < 1) return out;
  std::deque<TripleNode<Word>> queue;
  auto root = triple_root();
  queue.push_back({root, {root.left, root.middle, root.right}, "", 1});
  while (!queue.empty()) {
    auto node = std::move(queue.front());
    queue.pop_front();
    if (node.depth < depth) {
      auto [l, r] = triple_children(node.words);
      queue.push_back({l, {l.left, l.middle, l.right}, node.path + "L", node.depth + 1});
      queue.push_back({r, {r.left, r.middle, r.right}, node.path + "R", node.depth + 1});
    }
    out.push_back(std::move(node));
  }
  return out;
}

std::vector<WordTriple> enumerate_triples(int depth) {
  std::vector<WordTriple> out;
  for (auto& node : enumerate_word_tree(depth)) out.push_back(std::move(node.words));
  return out;
}

std::vector<Word> enumerate_words(int depth) {
  std::set<std::pair<std::size_t, std::string>> seen;
  for (const auto& t : enumerate_triples(depth)) {
    for (const Word* w : {&t.left, &t.middle, &t.right}) seen.emplace(w->size(), w->letters());
  }
  std::vector<Word> out;
  for (const auto& [n, s] : seen) out.emplace_back(s);
  return out;
}

FareyTriple farey_triple(const BigRational& f) {
  if (f <= 0 || f >= 1) throw OutOfRange("Farey descent needs 0 < f < 1, got " + to_string(f));
  BigRational left(0), right(1);
  Word wl("a"), wr("b");
  std::string path;
  while (true) {
    BigRational m = farey_sum(left, right);
    if (m == f) return {left, m, right, WordTriple(wl, wl + wr, wr), path};
    if (f < m) {
      right = m;
      wr = wl + wr;
      path += 'L';
    } else {
      left = m;
      wl = wl + wr;
      path += 'R';
    }
  }
}

std::optional<FareyTriple> locate_word(const Word& w) {
  std::size_t bs = w.count('b');
  if (bs == 0 || bs == w.size()) return std::nullopt;
  auto ft = farey_triple(BigRational(static_cast<long>(bs), static_cast<long>(w.size())));
  if (!(ft.words.middle == w)) return std::nullopt;
  return ft;
}

Word word_of_fraction(const BigRational& f) {
  if (f == 1) return Word("b");
  return farey_triple(f).words.middle;
}

BigRational farey_sum(const BigRational& x, const BigRational& y) {
  return BigRational(numerator_of(x) + numerator_of(y), denominator_of(x) + denominator_of(y));
}

}  // namespace mdeform
