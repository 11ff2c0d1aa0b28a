#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rwords/factor_table.hpp"
#include "rwords/return_words.hpp"

namespace rwords {

// Property R_m: every factor has exactly m return words.

enum class RmMethod { FullScan, BispecialReduction };

std::string_view to_string(RmMethod m);

struct RmWitness {
  Word factor;
  std::size_t return_count = 0;
};

struct RmLengthSummary {
  std::size_t length = 0;
  // Bispecial factors of this length with their return-word counts.
  std::vector<std::pair<Word, std::size_t>> bispecial_counts;
};

struct RmVerdict {
  int m = 0;
  std::size_t max_length = 0;
  bool holds = false;
  RmMethod method = RmMethod::BispecialReduction;
  // Shortest failing factor, canonical order within its length.
  std::optional<RmWitness> witness;
  std::vector<RmLengthSummary> per_length;
  bool eventually_periodic = false;
};

// Shared machinery: factor table, extension scanner, and memoized return-word
// counts over one source.
class RmChecker {
 public:
  RmChecker(const WordSource& src, std::size_t max_len,
            std::size_t prefix_guard = kPrefixGuard);

  const WordSource& source() const { return *src_; }
  const FactorTable& table() const { return table_; }
  ExtensionScanner& scanner() { return scanner_; }

  // #returns via direct window scanning.
  std::size_t return_count_direct(std::string_view w);
  // #returns via transport: w is extended right while its right extension is
  // unique (return sets equal) and left while its left extension is unique
  // (counts conjugate-invariant) until a bispecial factor is reached, whose
  // set is then scanned. Falls back to direct scanning if no bispecial
  // ancestor appears within the extension guard.
  std::size_t return_count_reduced(std::string_view w);

  RmVerdict check(int m, RmMethod method = RmMethod::BispecialReduction);

 private:
  const WordSource* src_;
  FactorTable table_;
  ExtensionScanner scanner_;
  std::size_t guard_;
  std::unordered_map<std::string, std::size_t> count_memo_;
  std::unordered_map<std::string, std::size_t> direct_memo_;
};

RmVerdict check_rm(const WordSource& src, int m, std::size_t max_len,
                   RmMethod method = RmMethod::BispecialReduction);

// For every n <= max_len: a unique left-special factor of length n whose
// left extension count is m, or the right-handed mirror of that statement.
// A sufficient condition for R_m on recurrent aperiodic words.
bool check_unique_special_criterion(const FactorTable& t, int m, std::size_t max_len);

// Joint evaluation of the affine-complexity characterization at desk scale:
// on a uniformly recurrent word with no weak bispecial factor, R_m is
// equivalent to C(n) = (m-1)n + 1. Also asserts the return-count bounds
//   1 + delta C(|w|) <= #R(w)          (no weak bispecial up to the bound)
//   #R(w) <= m                         (additionally delta C(n) < m for all n)
// whenever their hypotheses hold.
struct CharacterizationReport {
  int m = 0;
  std::size_t max_length = 0;
  bool no_weak_bispecial = false;
  bool no_maximal_right_special = false;
  bool complexity_affine = false;  // C(n) == (m-1)n + 1 for n <= max_length
  bool rm_holds = false;
  bool implication_ok = false;  // no_weak_bispecial -> (complexity_affine == rm_holds)
  bool lower_bound_ok = false;
  bool upper_bound_ok = false;
  bool consistent = false;  // implication_ok && both bounds
  std::optional<std::string> violation;
};

CharacterizationReport check_theorem1(const WordSource& src, int m, std::size_t max_len);

// Structure of the return sets around a weak bispecial factor of an R_4
// word: there are w1, w2 among the one-letter extensions of w and words
// v1..v4 with R(w1) = {v1v3, v1v4, v2v3, v2v4} and
// R(w2) = {v3v1, v3v2, v4v1, v4v2}.
struct ProductWitness {
  Word w1, w2;
  Word v1, v2, v3, v4;
};

// r4_evidence must be a holding R_4 verdict for this source; w must be weak
// bispecial in t. Without established evidence the absence of a witness is
// uninterpretable, so the call refuses instead (PreconditionError).
std::optional<ProductWitness> check_product_structure(const WordSource& src,
                                                      const FactorTable& t,
                                                      std::string_view w,
                                                      const RmVerdict& r4_evidence);

}  // namespace rwords
