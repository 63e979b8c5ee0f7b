#include "alginv/traces/word.hpp"

#include <cctype>
#include <functional>
#include <map>

#include "alginv/error.hpp"

namespace alginv {

Word Word::letter(int k) {
  if (k < 0) throw DomainError("letter index must be nonnegative");
  auto n = std::make_shared<Node>();
  n->letter = k;
  n->max_letter = k;
  return Word(std::move(n));
}

Word Word::product(const Word& left, const Word& right) {
  auto n = std::make_shared<Node>();
  n->leaves = left.leaves() + right.leaves();
  n->max_letter = std::max(left.max_letter(), right.max_letter());
  n->left = std::make_shared<const Word>(left);
  n->right = std::make_shared<const Word>(right);
  return Word(std::move(n));
}

const Word& Word::left() const {
  if (is_letter()) throw DomainError("a letter has no children");
  return *node_->left;
}

const Word& Word::right() const {
  if (is_letter()) throw DomainError("a letter has no children");
  return *node_->right;
}

int Word::degree_in(int k) const {
  if (is_letter()) return letter_index() == k ? 1 : 0;
  return left().degree_in(k) + right().degree_in(k);
}

Multidegree Word::full_multidegree(int m) const {
  Multidegree out(static_cast<std::size_t>(m + 1), 0);
  std::function<void(const Word&)> rec = [&](const Word& w) {
    if (w.is_letter()) {
      if (w.letter_index() > m) throw DomainError("letter x" + std::to_string(w.letter_index()) + " exceeds m=" + std::to_string(m));
      ++out[static_cast<std::size_t>(w.letter_index())];
    } else {
      rec(w.left());
      rec(w.right());
    }
  };
  rec(*this);
  return out;
}

Multidegree Word::slot_multidegree(int m) const {
  Multidegree full = full_multidegree(m);
  return Multidegree(full.begin() + 1, full.end());
}

Word Word::mirror() const {
  if (is_letter()) return *this;
  return product(right().mirror(), left().mirror());
}

Word Word::relabel(const std::vector<int>& map) const {
  if (is_letter()) {
    auto k = static_cast<std::size_t>(letter_index());
    if (k >= map.size()) throw DomainError("relabel map does not cover letter x" + std::to_string(k));
    return letter(map[k]);
  }
  return product(left().relabel(map), right().relabel(map));
}

std::string Word::to_string() const {
  if (is_letter()) return "x" + std::to_string(letter_index());
  return "(" + left().to_string() + "*" + right().to_string() + ")";
}

bool operator==(const Word& a, const Word& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_letter() || b.is_letter()) return a.is_letter() && b.is_letter() && a.letter_index() == b.letter_index();
  return a.leaves() == b.leaves() && a.left() == b.left() && a.right() == b.right();
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word run() {
    Word w = word();
    skip();
    if (pos_ != text_.size()) throw ParseError("trailing characters in word", pos_);
    return w;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  Word word() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of word", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      Word l = word();
      expect('*');
      Word r = word();
      expect(')');
      return Word::product(l, r);
    }
    if (text_[pos_] == 'x') {
      std::size_t start = ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start || pos_ - start > 4) throw ParseError("expected letter index after 'x'", start);
      return Word::letter(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    throw ParseError(std::string("unexpected '") + text_[pos_] + "' in word", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).run(); }

std::vector<Word> enumerate_trees(const Multidegree& delta, int leaf_cap) {
  int n = total(delta);
  if (n < 1) throw DomainError("a word needs at least one letter");
  if (n > leaf_cap)
    throw CapExceeded("word enumeration of " + std::to_string(n) + " leaves exceeds the cap " + std::to_string(leaf_cap));
  std::map<Multidegree, std::vector<Word>> memo;
  std::function<const std::vector<Word>&(const Multidegree&)> rec = [&](const Multidegree& d) -> const std::vector<Word>& {
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    std::vector<Word> out;
    if (total(d) == 1) {
      for (std::size_t k = 0; k < d.size(); ++k)
        if (d[k] == 1) out.push_back(Word::letter(static_cast<int>(k)));
    } else {
      // Each left sub-multiset 0 < d1 < d determines the split.
      Multidegree d1(d.size(), 0);
      std::function<void(std::size_t)> choose = [&](std::size_t k) {
        if (k == d.size()) {
          int t = total(d1);
          if (t == 0 || t == total(d)) return;
          Multidegree d2 = d - d1;
          const auto& ls = rec(d1);
          const auto& rs = rec(d2);
          for (const auto& l : ls)
            for (const auto& r : rs) out.push_back(Word::product(l, r));
          return;
        }
        for (int e = 0; e <= d[k]; ++e) {
          d1[k] = e;
          choose(k + 1);
        }
        d1[k] = 0;
      };
      choose(0);
    }
    return memo.emplace(d, std::move(out)).first->second;
  };
  return rec(delta);
}

std::vector<Word> enumerate_words(int m, const Multidegree& delta, int leaf_cap) {
  if (static_cast<int>(delta.size()) != m + 1) throw DomainError("multidegree must have m+1 entries (chi_0..chi_m)");
  if (delta[0] != 1) throw DomainError("words must have degree exactly 1 in x0");
  for (int d : delta)
    if (d < 0) throw DomainError("negative multidegree entry");
  return enumerate_trees(delta, leaf_cap);
}

}  // namespace alginv
