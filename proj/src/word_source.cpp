#include "rwords/word_source.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rwords/errors.hpp"

namespace rwords {

namespace {

void check_guard(std::size_t min_len) {
  if (min_len > kPrefixGuard)
    throw CertificationError("requested prefix length " + std::to_string(min_len) +
                             " exceeds the guard of " + std::to_string(kPrefixGuard));
}

}  // namespace

WordSource WordSource::fixed_point(Substitution s) {
  WordSource src;
  src.kind_ = Kind::SubstitutionFixedPoint;
  src.alphabet_ = s.alphabet();
  src.name_ = "substitution-fixed-point";
  src.cache_ = std::string(1, s.seed());
  src.iterate_lengths_ = {1};
  src.subst_ = std::move(s);
  return src;
}

WordSource WordSource::sturmian(std::vector<int> directives) {
  if (directives.empty()) throw ParameterError("directive list is empty");
  if (directives.front() < 0) throw ParameterError("first directive must be >= 0");
  for (std::size_t i = 1; i < directives.size(); ++i)
    if (directives[i] < 1)
      throw ParameterError("directives after the first must be >= 1");
  if (directives.size() == 1 && directives[0] == 0)
    throw ParameterError("single directive 0 generates no infinite word");

  WordSource src;
  src.kind_ = Kind::CharacteristicSturmian;
  src.alphabet_ = Alphabet("01");
  std::ostringstream name;
  name << "sturmian(";
  for (std::size_t i = 0; i < directives.size(); ++i)
    name << (i ? "," : "") << directives[i];
  name << ")";
  src.name_ = name.str();
  src.directives_ = std::move(directives);
  // s(0) is not a prefix of the limit when the first directive is 0, so the
  // cache starts at s(1) = 0^(d1) 1.
  src.sturmian_prev_ = "0";
  src.cache_ = std::string(static_cast<std::size_t>(src.directives_[0]), '0') + "1";
  src.sturmian_step_ = 1;
  return src;
}

WordSource WordSource::eventually_periodic(Word preperiod, Word period) {
  if (period.empty()) throw ParameterError("period must be non-empty");
  std::set<char> letters(preperiod.begin(), preperiod.end());
  letters.insert(period.begin(), period.end());
  WordSource src;
  src.kind_ = Kind::EventuallyPeriodic;
  src.alphabet_ = Alphabet(std::string(letters.begin(), letters.end()));
  src.name_ = "eventually-periodic(" + preperiod + "|" + period + ")";
  src.preperiod_ = std::move(preperiod);
  src.period_ = std::move(period);
  src.cache_ = src.preperiod_;
  return src;
}

void WordSource::grow(std::size_t min_len) const {
  switch (kind_) {
    case Kind::SubstitutionFixedPoint:
      while (cache_.size() < min_len) {
        cache_ = subst_->apply(cache_);
        iterate_lengths_.push_back(cache_.size());
      }
      break;
    case Kind::CharacteristicSturmian:
      while (cache_.size() < min_len) {
        ++sturmian_step_;
        std::size_t len = directives_.size();
        std::size_t idx;
        if (sturmian_step_ <= len) {
          idx = sturmian_step_ - 1;
        } else {
          std::size_t cycle_start = (directives_[0] == 0 && len > 1) ? 1 : 0;
          idx = cycle_start + (sturmian_step_ - len - 1) % (len - cycle_start);
        }
        std::size_t d = static_cast<std::size_t>(directives_[idx]);
        Word next;
        next.reserve(d * cache_.size() + sturmian_prev_.size());
        for (std::size_t i = 0; i < d; ++i) next += cache_;
        next += sturmian_prev_;
        sturmian_prev_ = std::move(cache_);
        cache_ = std::move(next);
      }
      break;
    case Kind::EventuallyPeriodic:
      while (cache_.size() < min_len) cache_ += period_;
      break;
  }
}

std::string_view WordSource::prefix(std::size_t min_len) const {
  check_guard(min_len);
  if (cache_.size() < min_len) grow(min_len);
  return cache_;
}

std::string WordSource::head(std::size_t n) const {
  return std::string(prefix(n).substr(0, n));
}

const std::vector<std::size_t>& WordSource::iterate_lengths(std::size_t min_count) const {
  if (kind_ != Kind::SubstitutionFixedPoint)
    throw Error("iterate_lengths is only defined for substitution sources");
  while (iterate_lengths_.size() < min_count) {
    check_guard(cache_.size() + 1);
    cache_ = subst_->apply(cache_);
    iterate_lengths_.push_back(cache_.size());
  }
  return iterate_lengths_;
}

namespace {

WordSource make_builtin(std::string_view name) {
  auto sub = [](std::string_view alphabet, std::initializer_list<std::pair<char, const char*>> rules,
                char seed) {
    std::map<char, Word> images;
    for (const auto& [c, img] : rules) images[c] = img;
    return Substitution(Alphabet(alphabet), std::move(images), seed);
  };
  if (name == "fibonacci")
    return WordSource::fixed_point(sub("01", {{'0', "01"}, {'1', "0"}}, '0'));
  if (name == "tribonacci")
    return WordSource::fixed_point(sub("012", {{'0', "01"}, {'1', "02"}, {'2', "0"}}, '0'));
  if (name == "thue_morse")
    return WordSource::fixed_point(sub("01", {{'0', "01"}, {'1', "10"}}, '0'));
  if (name == "chacon_recoded")
    return WordSource::fixed_point(sub("123", {{'1', "12"}, {'2', "312"}, {'3', "3312"}}, '1'));
  if (name == "r4_example")
    return WordSource::fixed_point(sub("1234",
                                       {{'1', "13231"},
                                        {'2', "13231424131"},
                                        {'3', "42324131424"},
                                        {'4', "42324"}},
                                       '1'));
  throw ParameterError("unknown builtin source '" + std::string(name) + "'");
}

}  // namespace

WordSource builtin_source(std::string_view name) {
  WordSource src = make_builtin(name);
  src.rename(std::string(name));
  return src;
}

const std::vector<std::string>& builtin_source_names() {
  static const std::vector<std::string> names = {
      "fibonacci", "tribonacci", "thue_morse", "chacon_recoded", "r4_example"};
  return names;
}

std::string fixed_point_prefix(const Substitution& s, std::size_t min_len) {
  return WordSource::fixed_point(s).head(min_len);
}

std::string characteristic_sturmian_prefix(const std::vector<int>& directives,
                                           std::size_t min_len) {
  return WordSource::sturmian(directives).head(min_len);
}

}  // namespace rwords
