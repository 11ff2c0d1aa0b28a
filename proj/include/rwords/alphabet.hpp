#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace rwords {

// Words are sequences of single-character letters. All orderings in the
// library are lexicographic with respect to the alphabet's declaration
// order, not ASCII order.
using Word = std::string;

class Alphabet {
 public:
  // Letters in canonical (declaration) order. 2..10 distinct printable
  // non-space characters.
  explicit Alphabet(std::string_view letters);

  std::size_t size() const { return letters_.size(); }
  std::string_view letters() const { return letters_; }
  char letter(std::size_t i) const { return letters_.at(i); }

  bool contains(char c) const { return rank_[static_cast<unsigned char>(c)] >= 0; }
  // Position of c in declaration order; -1 if absent.
  int rank(char c) const { return rank_[static_cast<unsigned char>(c)]; }

  bool contains_word(std::string_view w) const;

  // Canonical lexicographic order: rank-wise comparison, proper prefix sorts first.
  bool letter_less(char a, char b) const { return rank(a) < rank(b); }
  bool word_less(std::string_view a, std::string_view b) const;

  // Sorts words canonically, in place.
  void sort_words(std::vector<Word>& ws) const;

  bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }

 private:
  std::string letters_;
  std::array<int, 256> rank_;
};

}  // namespace rwords
