#include "rwords/substitution.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "rwords/errors.hpp"

namespace rwords {

Substitution::Substitution(Alphabet alphabet, std::map<char, Word> images, char seed)
    : alphabet_(std::move(alphabet)), seed_(seed), incidence_(alphabet_.size()) {
  std::size_t n = alphabet_.size();
  images_.resize(n);
  if (images.size() != n)
    throw ConstructionError("substitution needs exactly one image per letter");
  for (const auto& [c, img] : images) {
    if (!alphabet_.contains(c))
      throw ConstructionError(std::string("image rule for unknown letter '") + c + "'");
    if (img.empty())
      throw ConstructionError(std::string("empty image for letter '") + c + "'");
    if (!alphabet_.contains_word(img))
      throw ConstructionError("image of '" + std::string(1, c) +
                              "' uses letters outside the alphabet");
    images_[alphabet_.rank(c)] = img;
  }
  for (std::size_t col = 0; col < n; ++col)
    for (char b : images_[col]) incidence_.at(alphabet_.rank(b), col) += 1;

  if (!alphabet_.contains(seed_))
    throw ConstructionError(std::string("seed letter '") + seed_ + "' not in alphabet");
  const Word& si = image(seed_);
  if (si.size() < 2 || si.front() != seed_)
    throw ConstructionError(std::string("seed '") + seed_ +
                            "': image must start with the seed and have length >= 2");
}

const Word& Substitution::image(char c) const {
  int r = alphabet_.rank(c);
  if (r < 0) throw Error(std::string("letter '") + c + "' not in alphabet");
  return images_[r];
}

Word Substitution::apply(std::string_view w) const {
  std::size_t total = 0;
  for (char c : w) {
    int r = alphabet_.rank(c);
    if (r < 0) throw Error(std::string("letter '") + c + "' not in alphabet");
    total += images_[r].size();
  }
  Word out;
  out.reserve(total);
  for (char c : w) out += images_[alphabet_.rank(c)];
  return out;
}

bool Substitution::is_primitive() const {
  std::size_t n = alphabet_.size();
  std::vector<bool> base(n * n), p(n * n), next(n * n);
  for (std::size_t i = 0; i < n * n; ++i)
    base[i] = incidence_.at(i / n, i % n) > 0;
  p = base;
  std::size_t bound = (n - 1) * (n - 1) + 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    bool all = true;
    for (bool v : p) all = all && v;
    if (all) return true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        bool v = false;
        for (std::size_t l = 0; l < n && !v; ++l) v = p[i * n + l] && base[l * n + j];
        next[i * n + j] = v;
      }
    p.swap(next);
  }
  return false;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Substitution parse_substitution(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::map<char, Word> images;
  std::optional<char> seed;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    line = trim(line);
    if (line.empty() || line.starts_with('#')) continue;

    if (line.starts_with("alphabet:")) {
      if (alphabet) throw ParseError("duplicate alphabet line");
      alphabet.emplace(trim(line.substr(9)));
      continue;
    }
    if (line.starts_with("seed:")) {
      std::string_view s = trim(line.substr(5));
      if (s.size() != 1) throw ParseError("seed must be a single letter");
      if (seed) throw ParseError("duplicate seed line");
      seed = s[0];
      continue;
    }
    std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError("unrecognized line: '" + std::string(line) + "'");
    std::string_view lhs = trim(line.substr(0, arrow));
    std::string_view rhs = trim(line.substr(arrow + 2));
    if (!alphabet) throw ParseError("rule before alphabet line");
    if (lhs.size() != 1) throw ParseError("rule left side must be a single letter");
    char c = lhs[0];
    if (!alphabet->contains(c))
      throw ParseError(std::string("rule for unknown letter '") + c + "'");
    if (images.count(c)) throw ParseError(std::string("duplicate rule for letter '") + c + "'");
    if (!alphabet->contains_word(rhs))
      throw ParseError("image of '" + std::string(1, c) + "' uses letters outside the alphabet");
    images[c] = Word(rhs);
  }

  if (!alphabet) throw ParseError("missing alphabet line");
  for (char c : alphabet->letters())
    if (!images.count(c)) throw ParseError(std::string("missing rule for letter '") + c + "'");
  if (seed && !alphabet->contains(*seed))
    throw ParseError(std::string("seed letter '") + *seed + "' not in alphabet");

  if (!seed) {
    for (char c : alphabet->letters()) {
      const Word& img = images[c];
      if (img.size() >= 2 && img.front() == c) {
        seed = c;
        break;
      }
    }
    if (!seed)
      throw ConstructionError("no seed given and no letter's image starts with itself");
  }
  return Substitution(*alphabet, std::move(images), *seed);
}

Substitution load_substitution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open substitution file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_substitution(ss.str());
}

}  // namespace rwords
