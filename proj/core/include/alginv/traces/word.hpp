#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "alginv/exactpoly/grading.hpp"

namespace alginv {

/// A nonassociative monomial: a binary tree whose leaves are letters chi_0..chi_m.
/// Nodes are immutable and shared between words.
class Word {
 public:
  static Word letter(int k);
  static Word product(const Word& left, const Word& right);

  bool is_letter() const noexcept { return node_->letter >= 0; }
  int letter_index() const noexcept { return node_->letter; }
  const Word& left() const;
  const Word& right() const;

  int leaves() const noexcept { return node_->leaves; }
  /// Occurrences of chi_k.
  int degree_in(int k) const;
  int max_letter() const noexcept { return node_->max_letter; }
  /// Degrees in chi_0..chi_m (length m + 1).
  Multidegree full_multidegree(int m) const;
  /// Degrees in chi_1..chi_m, i.e. the multidegree of tr(h).
  Multidegree slot_multidegree(int m) const;

  /// Mirror image: every product a*b becomes b*a.
  Word mirror() const;
  /// Renames letters: chi_k becomes chi_{map[k]}.
  Word relabel(const std::vector<int>& map) const;

  /// "x0", "(x1*x0)", "((x1*x2)*x0)".
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b);
  friend bool operator<(const Word& a, const Word& b) { return a.to_string() < b.to_string(); }

 private:
  struct Node {
    int letter = -1;
    int leaves = 1;
    int max_letter = 0;
    std::shared_ptr<const Word> left, right;
  };
  explicit Word(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar: w := 'x' int | '(' w '*' w ')'. Whitespace is ignored. Throws ParseError.
Word parse_word(std::string_view text);

constexpr int kDefaultWordLeafCap = 6;

/// All trees whose leaf multiset is delta (indexed chi_0..chi_m), each exactly once.
/// Requires delta[0] == 1. Throws CapExceeded above `leaf_cap` leaves.
std::vector<Word> enumerate_words(int m, const Multidegree& delta, int leaf_cap = kDefaultWordLeafCap);

/// Same enumeration without the chi_0 precondition (used for multipliers).
std::vector<Word> enumerate_trees(const Multidegree& delta, int leaf_cap = kDefaultWordLeafCap);

}  // namespace alginv
