#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rwords/substitution.hpp"

namespace rwords {

// Hard ceiling on cached prefix length. Growth past it raises
// CertificationError rather than silently truncating.
inline constexpr std::size_t kPrefixGuard = 100'000'000;

// A lazily generated prefix of one infinite word. The cached prefix grows
// append-only and every returned view is a genuine prefix of the limit word,
// so earlier reads never contradict later ones. Growth is not synchronized;
// concurrent readers are fine once grown.
class WordSource {
 public:
  enum class Kind { SubstitutionFixedPoint, CharacteristicSturmian, EventuallyPeriodic };

  static WordSource fixed_point(Substitution s);
  // Standard-word recursion s(-1)="1", s(0)="0", s(k)=s(k-1)^d_k s(k-2) over
  // alphabet 01. The finite directive list is cycled; a leading 0 swaps the
  // letter roles and is excluded from the cycle.
  static WordSource sturmian(std::vector<int> directives);
  static WordSource eventually_periodic(Word preperiod, Word period);

  Kind kind() const { return kind_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::string& name() const { return name_; }
  void rename(std::string name) { name_ = std::move(name); }

  // View of the cached prefix after growing it to at least min_len letters.
  // Valid until the next growth call on this source.
  std::string_view prefix(std::size_t min_len) const;
  // Copy of exactly the first n letters.
  std::string head(std::size_t n) const;

  // Substitution sources only: prefix lengths of the whole iterates computed
  // so far (|sigma^0(seed)|, |sigma^1(seed)|, ...). Grows on demand.
  const std::vector<std::size_t>& iterate_lengths(std::size_t min_count) const;
  const Substitution* substitution() const { return subst_ ? &*subst_ : nullptr; }

 private:
  WordSource() = default;
  void grow(std::size_t min_len) const;

  Kind kind_{};
  Alphabet alphabet_{"01"};
  std::string name_;
  std::optional<Substitution> subst_;
  std::vector<int> directives_;
  Word preperiod_, period_;

  mutable std::string cache_;
  mutable std::vector<std::size_t> iterate_lengths_;
  mutable std::string sturmian_prev_;  // s(k-1) while cache_ holds s(k)
  mutable std::size_t sturmian_step_ = 0;
};

// Named builtin sources: fibonacci, tribonacci, thue_morse, chacon_recoded,
// r4_example.
WordSource builtin_source(std::string_view name);
const std::vector<std::string>& builtin_source_names();

// Exactly min_len letters of the fixed point, generated by whole iterations.
std::string fixed_point_prefix(const Substitution& s, std::size_t min_len);
// Exactly min_len letters of the characteristic Sturmian word with the given
// directives.
std::string characteristic_sturmian_prefix(const std::vector<int>& directives,
                                           std::size_t min_len);

}  // namespace rwords
