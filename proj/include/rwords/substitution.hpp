#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "rwords/alphabet.hpp"

namespace rwords {

// Incidence counts: entry(b, c) = number of occurrences of letter b in the
// image of letter c, indexed by alphabet rank.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(std::size_t n) : n_(n), e_(n * n, 0) {}
  std::size_t size() const { return n_; }
  long long& at(std::size_t row, std::size_t col) { return e_[row * n_ + col]; }
  long long at(std::size_t row, std::size_t col) const { return e_[row * n_ + col]; }

 private:
  std::size_t n_;
  std::vector<long long> e_;
};

class Substitution {
 public:
  // Images must be non-empty words over the alphabet, one per letter.
  // The seed letter a must satisfy: image(a) starts with a and has length >= 2,
  // so iterating on the seed produces a strictly growing chain of prefixes.
  Substitution(Alphabet alphabet, std::map<char, Word> images, char seed);

  const Alphabet& alphabet() const { return alphabet_; }
  char seed() const { return seed_; }
  const Word& image(char c) const;
  const IncidenceMatrix& incidence() const { return incidence_; }

  // Morphism extension: concatenation of letter images.
  Word apply(std::string_view w) const;

  // True iff some power k <= (|A|-1)^2 + 1 of the incidence matrix is
  // entrywise positive (Wielandt bound). Uses boolean matrix powers, so
  // entry growth cannot overflow.
  bool is_primitive() const;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;  // by rank
  char seed_;
  IncidenceMatrix incidence_;
};

// Text format:
//   alphabet: <letters>
//   <letter> -> <word>     (one rule per letter)
//   seed: <letter>         (optional; inferred as the first letter whose
//                           image starts with it and has length >= 2)
// Rejects duplicate rules, unknown letters, missing rules.
Substitution parse_substitution(std::string_view text);
Substitution load_substitution_file(const std::string& path);

}  // namespace rwords
