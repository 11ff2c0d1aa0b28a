#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rwords/word_source.hpp"

namespace rwords {

// Starting positions of all (overlapping) occurrences of w in text.
// For w = empty word every position 0..|text| is an occurrence.
std::vector<std::size_t> occurrences(std::string_view text, std::string_view w);

struct StabilizationCertificate {
  std::size_t window = 0;          // P
  std::size_t doubled_window = 0;  // 2P
  std::size_t occurrences_used = 0;
};

// Return words of a factor: the segments between successive occurrences.
// A complete return word is a return word with the factor appended.
struct ReturnSet {
  Word factor;
  // Order of first appearance as a return.
  std::vector<Word> returns;
  std::vector<Word> complete_returns;
  StabilizationCertificate cert;
  // Exactly one distinct return word: the source is eventually periodic.
  bool eventually_periodic = false;
};

// Scans growing prefix windows until the set of return words agrees between
// windows P and 2P and occurrences continue into the second half. Never
// occurs -> NotAFactorError; no stabilization within the guard ->
// CertificationError.
ReturnSet return_set(const WordSource& src, std::string_view w,
                     std::size_t prefix_guard = kPrefixGuard);

// Certified extension sets of arbitrary factors, computed by scanning the
// source prefix with the same doubling protocol. Results are cached, so
// repeated queries are free.
class ExtensionScanner {
 public:
  explicit ExtensionScanner(const WordSource& src, std::size_t prefix_guard = kPrefixGuard)
      : src_(&src), guard_(prefix_guard) {}

  const WordSource& source() const { return *src_; }
  // Letters in canonical order.
  std::string_view right(std::string_view v);
  std::string_view left(std::string_view v);

 private:
  std::string_view scan(std::string_view v, bool right_side);

  const WordSource* src_;
  std::size_t guard_;
  std::unordered_map<std::string, std::string> right_, left_;
};

// If w has a unique right extension b, occurrences of w and wb coincide, so
// the return sets are equal: computes the set for wb and relabels it.
ReturnSet reduce_right(const WordSource& src, std::string_view w,
                       std::size_t prefix_guard = kPrefixGuard);

// If a is the unique left extension of w, the returns of aw are the returns
// of w conjugated: R(aw) = a R(w) a^-1. Every return of w then ends with a.
ReturnSet conjugate_left(const WordSource& src, char a, std::string_view w,
                         std::size_t prefix_guard = kPrefixGuard);

struct TrieNode {
  Word label;
  std::vector<std::size_t> children;  // node indices, canonical child order
  bool leaf = false;                  // label has the root factor as proper suffix
};

// Prefix tree of the complete return words of a factor: the root is the
// factor, each non-leaf node v has children vb for every right extension b,
// and a node is a leaf exactly when the factor reappears as a proper suffix.
struct ReturnTrie {
  Word factor;
  std::vector<TrieNode> nodes;  // breadth-first, nodes[0] is the root
  std::size_t depth_cap = 0;

  std::vector<Word> leaf_labels() const;      // complete return words
  std::vector<Word> internal_labels() const;  // includes the root
  std::size_t leaf_count() const;
  // #leaves == 1 + sum over internal nodes of (#children - 1).
  bool leaf_identity() const;
};

inline std::size_t default_depth_cap(std::size_t factor_len) {
  return 64 * factor_len + 256;
}

// Builds the trie with per-node certified extension sets. A label longer
// than depth_cap raises CapError (never truncates).
ReturnTrie build_return_trie(ExtensionScanner& scanner, std::string_view w,
                             std::size_t depth_cap);
ReturnTrie build_return_trie(const WordSource& src, std::string_view w);

// Graphviz rendering; leaves are double-circled.
std::string to_dot(const ReturnTrie& trie);

}  // namespace rwords
