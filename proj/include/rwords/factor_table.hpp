#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "rwords/word_source.hpp"

namespace rwords {

struct SaturationCertificate {
  std::size_t max_len_certified = 0;  // factor lengths covered (N+2)
  std::size_t window = 0;             // smaller compared prefix length
  std::size_t doubled_window = 0;     // larger compared prefix length
  // Substitution sources: the two consecutive iterate indices compared.
  std::optional<std::pair<std::size_t, std::size_t>> iterations;
};

enum class FactorClass {
  NonSpecial,
  LeftSpecialOnly,
  RightSpecialOnly,
  OrdinaryBispecial,
  WeakBispecial,
  StrongBispecial,
};

std::string_view to_string(FactorClass c);

struct BilateralReport {
  Word factor;
  std::string left_extensions;   // canonical letter order
  std::string right_extensions;  // canonical letter order
  std::vector<std::string> extension_pairs;  // two-letter words "ab", canonical order
  int bilateral_order = 0;       // #pairs - #left - #right + 1
  FactorClass cls = FactorClass::NonSpecial;
  bool maximal_left_special = false;
  bool maximal_right_special = false;
};

// The complete factor sets of the source word for lengths 0..N+2, certified
// by stabilization: substitution sources must yield identical sets for two
// consecutive whole iterates with prefix lengths > 4(N+2); other sources for
// prefix windows P and 2P. The +2 margin makes two-sided extension data exact
// for every factor of length <= N.
class FactorTable {
 public:
  static FactorTable build(const WordSource& src, std::size_t max_len,
                           std::size_t prefix_guard = kPrefixGuard);

  std::size_t max_len() const { return n_; }          // N
  std::size_t margin_len() const { return n_ + 2; }   // N+2
  const Alphabet& alphabet() const { return alphabet_; }
  const std::string& source_name() const { return source_name_; }
  const SaturationCertificate& certificate() const { return cert_; }
  // The certified prefix (the larger compared window).
  const std::string& certified_prefix() const { return prefix_; }

  bool contains(std::string_view w) const;
  // Factors of length n in canonical order; n <= N+2.
  const std::vector<Word>& factors(std::size_t n) const;
  std::size_t complexity(std::size_t n) const;       // C(n), n <= N+2
  long long delta_complexity(std::size_t n) const;   // C(n+1) - C(n), n <= N+1

  // Extension queries; defined by membership of the one- or two-letter
  // enlargements in the table. Valid while the enlargement fits in N+2.
  std::string left_extensions(std::string_view w) const;   // |w| <= N+1
  std::string right_extensions(std::string_view w) const;  // |w| <= N+1
  std::vector<std::string> extension_pairs(std::string_view w) const;  // |w| <= N

  // Full report for one factor, |w| <= N. Verifies the two equivalent
  // special-factor inequalities agree with the sign of the bilateral order.
  BilateralReport bilateral_order(std::string_view w) const;

  // Reports for every left- or right-special factor of length n, canonical
  // order; n <= N.
  std::vector<BilateralReport> special_factors(std::size_t n) const;

  // Second difference identity at n <= N:
  //   delta C(n+1) - delta C(n) == sum of bilateral orders over factors of
  //   length n.
  bool second_difference_identity(std::size_t n) const;

  struct SvHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  using MemberSet = std::unordered_set<std::string, SvHash, std::equal_to<>>;

 private:
  friend struct FactorTableBuilder;

  std::size_t n_ = 0;
  Alphabet alphabet_{"01"};
  std::string source_name_;
  std::string prefix_;
  std::vector<std::vector<Word>> factors_;  // [length], canonical order
  MemberSet member_;
  SaturationCertificate cert_;
};

}  // namespace rwords
