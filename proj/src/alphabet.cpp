#include "rwords/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "rwords/errors.hpp"

namespace rwords {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  rank_.fill(-1);
  if (letters_.size() < 2 || letters_.size() > 10)
    throw ParameterError("alphabet must have 2..10 letters, got " +
                         std::to_string(letters_.size()));
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(letters_[i]);
    if (!std::isgraph(c))
      throw ParameterError("alphabet letters must be printable non-space characters");
    if (rank_[c] >= 0)
      throw ParameterError(std::string("duplicate alphabet letter '") + letters_[i] + "'");
    rank_[c] = static_cast<int>(i);
  }
}

bool Alphabet::contains_word(std::string_view w) const {
  return std::all_of(w.begin(), w.end(), [&](char c) { return contains(c); });
}

bool Alphabet::word_less(std::string_view a, std::string_view b) const {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int ra = rank(a[i]), rb = rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

void Alphabet::sort_words(std::vector<Word>& ws) const {
  std::sort(ws.begin(), ws.end(),
            [this](const Word& a, const Word& b) { return word_less(a, b); });
}

}  // namespace rwords
