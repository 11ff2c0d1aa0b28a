#include "rwords/factor_table.hpp"

#include <algorithm>

#include "rwords/errors.hpp"

namespace rwords {

std::string_view to_string(FactorClass c) {
  switch (c) {
    case FactorClass::NonSpecial: return "non-special";
    case FactorClass::LeftSpecialOnly: return "left-special-only";
    case FactorClass::RightSpecialOnly: return "right-special-only";
    case FactorClass::OrdinaryBispecial: return "ordinary-bispecial";
    case FactorClass::WeakBispecial: return "weak-bispecial";
    case FactorClass::StrongBispecial: return "strong-bispecial";
  }
  return "?";
}

namespace {

struct FactorSets {
  std::vector<std::vector<Word>> by_len;  // sorted canonically
  FactorTable::MemberSet members;
};

}  // namespace

// Private-type access shim: collection happens inside the class via a static.
struct FactorTableBuilder {
  static FactorSets collect(const Alphabet& alphabet, std::string_view text,
                            std::size_t margin) {
    FactorSets fs;
    fs.by_len.resize(margin + 1);
    fs.by_len[0] = {Word()};
    fs.members.insert(Word());
    for (std::size_t len = 1; len <= margin && len <= text.size(); ++len) {
      for (std::size_t pos = 0; pos + len <= text.size(); ++pos) {
        std::string_view w = text.substr(pos, len);
        if (fs.members.find(w) == fs.members.end()) {
          fs.members.insert(Word(w));
          fs.by_len[len].push_back(Word(w));
        }
      }
      alphabet.sort_words(fs.by_len[len]);
    }
    return fs;
  }

  static std::size_t first_difference(const FactorSets& a, const FactorSets& b) {
    for (std::size_t l = 0; l < a.by_len.size(); ++l)
      if (a.by_len[l] != b.by_len[l]) return l;
    return a.by_len.size();
  }
};

FactorTable FactorTable::build(const WordSource& src, std::size_t max_len,
                               std::size_t prefix_guard) {
  FactorTable t;
  t.n_ = max_len;
  t.alphabet_ = src.alphabet();
  t.source_name_ = src.name();
  const std::size_t margin = max_len + 2;
  const std::size_t floor_len = 4 * margin;  // both windows must exceed this

  auto adopt = [&](FactorSets&& fs, std::string_view window, SaturationCertificate cert) {
    t.factors_ = std::move(fs.by_len);
    t.member_ = std::move(fs.members);
    t.prefix_ = Word(window);
    t.cert_ = cert;
    t.cert_.max_len_certified = margin;
  };

  if (src.kind() == WordSource::Kind::SubstitutionFixedPoint) {
    std::size_t k = 0;
    while (src.iterate_lengths(k + 1)[k] <= floor_len) ++k;
    while (true) {
      const auto& lens = src.iterate_lengths(k + 2);
      std::size_t la = lens[k], lb = lens[k + 1];
      if (lb > prefix_guard)
        throw CertificationError("factor sets not saturated within the prefix guard");
      std::string_view text = src.prefix(lb);
      FactorSets a = FactorTableBuilder::collect(t.alphabet_, text.substr(0, la), margin);
      FactorSets b = FactorTableBuilder::collect(t.alphabet_, text.substr(0, lb), margin);
      if (a.by_len == b.by_len) {
        SaturationCertificate cert;
        cert.window = la;
        cert.doubled_window = lb;
        cert.iterations = {k, k + 1};
        adopt(std::move(b), text.substr(0, lb), cert);
        return t;
      }
      std::size_t diff = FactorTableBuilder::first_difference(a, b);
      if (2 * lb > prefix_guard)
        throw CertificationError(
            "factor sets of length " + std::to_string(diff) +
            " still unsaturated at prefix length " + std::to_string(lb));
      ++k;
    }
  }

  std::size_t p = std::max<std::size_t>(floor_len + 1, 64);
  while (true) {
    if (2 * p > prefix_guard) {
      std::string_view text = src.prefix(p);
      FactorSets a = FactorTableBuilder::collect(t.alphabet_, text.substr(0, p / 2), margin);
      FactorSets b = FactorTableBuilder::collect(t.alphabet_, text.substr(0, p), margin);
      std::size_t diff = FactorTableBuilder::first_difference(a, b);
      throw CertificationError(
          "factor sets of length " + std::to_string(diff) +
          " still unsaturated at prefix length " + std::to_string(p));
    }
    std::string_view text = src.prefix(2 * p);
    FactorSets a = FactorTableBuilder::collect(t.alphabet_, text.substr(0, p), margin);
    FactorSets b = FactorTableBuilder::collect(t.alphabet_, text.substr(0, 2 * p), margin);
    if (a.by_len == b.by_len) {
      SaturationCertificate cert;
      cert.window = p;
      cert.doubled_window = 2 * p;
      adopt(std::move(b), text.substr(0, 2 * p), cert);
      return t;
    }
    p *= 2;
  }
}

bool FactorTable::contains(std::string_view w) const {
  if (w.size() > margin_len())
    throw RangeError("factor query of length " + std::to_string(w.size()) +
                     " beyond certified length " + std::to_string(margin_len()));
  return member_.find(w) != member_.end();
}

const std::vector<Word>& FactorTable::factors(std::size_t n) const {
  if (n > margin_len())
    throw RangeError("factor length " + std::to_string(n) + " beyond certified length " +
                     std::to_string(margin_len()));
  return factors_[n];
}

std::size_t FactorTable::complexity(std::size_t n) const { return factors(n).size(); }

long long FactorTable::delta_complexity(std::size_t n) const {
  return static_cast<long long>(complexity(n + 1)) - static_cast<long long>(complexity(n));
}

std::string FactorTable::left_extensions(std::string_view w) const {
  if (w.size() + 1 > margin_len())
    throw RangeError("extension query beyond certified length");
  if (!contains(w)) throw NotAFactorError("'" + Word(w) + "' is not a factor");
  std::string out;
  for (char a : alphabet_.letters())
    if (member_.find(Word(1, a) + Word(w)) != member_.end()) out += a;
  return out;
}

std::string FactorTable::right_extensions(std::string_view w) const {
  if (w.size() + 1 > margin_len())
    throw RangeError("extension query beyond certified length");
  if (!contains(w)) throw NotAFactorError("'" + Word(w) + "' is not a factor");
  std::string out;
  for (char b : alphabet_.letters())
    if (member_.find(Word(w) + b) != member_.end()) out += b;
  return out;
}

std::vector<std::string> FactorTable::extension_pairs(std::string_view w) const {
  if (w.size() + 2 > margin_len())
    throw RangeError("two-sided extension query beyond certified length");
  if (!contains(w)) throw NotAFactorError("'" + Word(w) + "' is not a factor");
  std::vector<std::string> out;
  for (char a : alphabet_.letters())
    for (char b : alphabet_.letters())
      if (member_.find(Word(1, a) + Word(w) + b) != member_.end())
        out.push_back(std::string{a, b});
  return out;
}

BilateralReport FactorTable::bilateral_order(std::string_view w) const {
  if (w.size() > max_len())
    throw RangeError("bilateral order only available for lengths <= " +
                     std::to_string(max_len()));
  BilateralReport r;
  r.factor = Word(w);
  r.left_extensions = left_extensions(w);
  r.right_extensions = right_extensions(w);
  r.extension_pairs = extension_pairs(w);
  std::size_t nl = r.left_extensions.size(), nr = r.right_extensions.size();
  r.bilateral_order = static_cast<int>(r.extension_pairs.size()) - static_cast<int>(nl) -
                      static_cast<int>(nr) + 1;

  bool ls = nl >= 2, rs = nr >= 2;
  if (!ls && !rs) r.cls = FactorClass::NonSpecial;
  else if (ls && !rs) r.cls = FactorClass::LeftSpecialOnly;
  else if (!ls && rs) r.cls = FactorClass::RightSpecialOnly;
  else if (r.bilateral_order < 0) r.cls = FactorClass::WeakBispecial;
  else if (r.bilateral_order > 0) r.cls = FactorClass::StrongBispecial;
  else r.cls = FactorClass::OrdinaryBispecial;

  // The two equivalent one-sided characterizations of negative bilateral
  // order must agree with its sign; disagreement would mean the table is not
  // a factorial language.
  long long sum_r = 0, sum_l = 0;
  for (char a : r.left_extensions)
    sum_r += static_cast<long long>(right_extensions(Word(1, a) + Word(w)).size()) - 1;
  for (char b : r.right_extensions)
    sum_l += static_cast<long long>(left_extensions(Word(w) + b).size()) - 1;
  bool weak = r.bilateral_order < 0;
  if (weak != (sum_r < static_cast<long long>(nr) - 1) ||
      weak != (sum_l < static_cast<long long>(nl) - 1))
    throw Error("internal: special-factor inequalities disagree for '" + Word(w) + "'");

  r.maximal_right_special = rs && sum_r == 0;
  r.maximal_left_special = ls && sum_l == 0;
  return r;
}

std::vector<BilateralReport> FactorTable::special_factors(std::size_t n) const {
  std::vector<BilateralReport> out;
  for (const Word& w : factors(n)) {
    BilateralReport r = bilateral_order(w);
    if (r.cls != FactorClass::NonSpecial) out.push_back(std::move(r));
  }
  return out;
}

bool FactorTable::second_difference_identity(std::size_t n) const {
  long long lhs = delta_complexity(n + 1) - delta_complexity(n);
  long long rhs = 0;
  for (const Word& w : factors(n)) rhs += bilateral_order(w).bilateral_order;
  return lhs == rhs;
}

}  // namespace rwords
