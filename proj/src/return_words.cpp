#include "rwords/return_words.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "rwords/errors.hpp"

namespace rwords {

std::vector<std::size_t> occurrences(std::string_view text, std::string_view w) {
  std::vector<std::size_t> out;
  if (w.empty()) {
    out.resize(text.size() + 1);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
  }
  std::size_t pos = 0;
  while ((pos = text.find(w, pos)) != std::string_view::npos) {
    out.push_back(pos);
    ++pos;
  }
  return out;
}

namespace {

// Window-doubling alone can certify too early: in beta-substitution fixed
// points a return word may first complete at ~3x the window where the set
// last looked stable. Acceptance therefore also requires the window to
// dominate the last first-appearance by this factor, which forces stability
// across at least three consecutive doublings.
constexpr std::size_t kDiscoveryMargin = 8;

// Returns observed between successive occurrences lying fully inside
// text[0..window).
std::set<std::string_view> returns_within(std::string_view text, std::string_view w,
                                          const std::vector<std::size_t>& occ,
                                          std::size_t window) {
  std::set<std::string_view> out;
  for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
    if (occ[i + 1] + w.size() > window) break;
    out.insert(text.substr(occ[i], occ[i + 1] - occ[i]));
  }
  return out;
}

// End position of the occurrence pair that first produced each distinct
// return, maximized over the distinct returns.
std::size_t last_return_discovery(std::string_view text, std::string_view w,
                                  const std::vector<std::size_t>& occ) {
  std::set<std::string_view> seen;
  std::size_t last = 0;
  for (std::size_t i = 0; i + 1 < occ.size(); ++i)
    if (seen.insert(text.substr(occ[i], occ[i + 1] - occ[i])).second)
      last = occ[i + 1] + w.size();
  return last;
}

[[noreturn]] void fail_at_guard(const WordSource& src, std::string_view w,
                                std::size_t guard, std::string_view what) {
  std::size_t window = std::min(guard, kPrefixGuard);
  std::string_view text = src.prefix(window).substr(0, window);
  if (occurrences(text, w).empty())
    throw NotAFactorError("'" + Word(w) + "' does not occur in " + src.name());
  throw CertificationError(std::string(what) + " of '" + Word(w) +
                           "' did not stabilize within the prefix guard");
}

}  // namespace

ReturnSet return_set(const WordSource& src, std::string_view w, std::size_t prefix_guard) {
  if (!src.alphabet().contains_word(w))
    throw NotAFactorError("'" + Word(w) + "' uses letters outside the alphabet of " +
                          src.name());
  std::size_t p = std::max<std::size_t>(64, 8 * (w.size() + 1));
  while (true) {
    if (2 * p > prefix_guard) fail_at_guard(src, w, prefix_guard, "return words");
    std::string_view text = src.prefix(2 * p).substr(0, 2 * p);
    std::vector<std::size_t> occ = occurrences(text, w);
    while (!occ.empty() && occ.back() + w.size() > text.size()) occ.pop_back();
    auto half = returns_within(text, w, occ, p);
    auto full = returns_within(text, w, occ, 2 * p);
    // Certified once doubling the window adds nothing, occurrences keep
    // appearing in the second half, and every discovery lies well inside.
    if (!full.empty() && half == full && occ.back() >= p &&
        2 * p >= kDiscoveryMargin * last_return_discovery(text, w, occ)) {
      ReturnSet rs;
      rs.factor = Word(w);
      std::unordered_set<std::string_view> seen;
      for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
        std::string_view v = text.substr(occ[i], occ[i + 1] - occ[i]);
        if (seen.insert(v).second) rs.returns.emplace_back(v);
      }
      for (const Word& v : rs.returns) rs.complete_returns.push_back(v + rs.factor);
      rs.cert = {p, 2 * p, occ.size()};
      rs.eventually_periodic = rs.returns.size() == 1;
      return rs;
    }
    p *= 2;
  }
}

std::string_view ExtensionScanner::right(std::string_view v) { return scan(v, true); }
std::string_view ExtensionScanner::left(std::string_view v) { return scan(v, false); }

std::string_view ExtensionScanner::scan(std::string_view v, bool right_side) {
  auto& cache = right_side ? right_ : left_;
  if (auto it = cache.find(Word(v)); it != cache.end()) return it->second;

  if (!src_->alphabet().contains_word(v))
    throw NotAFactorError("'" + Word(v) + "' uses letters outside the alphabet of " +
                          src_->name());
  const Alphabet& alpha = src_->alphabet();
  std::size_t p = std::max<std::size_t>(128, 8 * (v.size() + 1));
  while (true) {
    if (2 * p > guard_)
      fail_at_guard(*src_, v, guard_, right_side ? "right extensions" : "left extensions");
    std::string_view text = src_->prefix(2 * p).substr(0, 2 * p);
    std::vector<std::size_t> occ = occurrences(text, v);
    while (!occ.empty() && occ.back() + v.size() > text.size()) occ.pop_back();

    auto letters_within = [&](std::size_t window) {
      std::set<char> out;
      for (std::size_t o : occ) {
        if (o + v.size() > window) break;
        if (right_side) {
          if (o + v.size() < window) out.insert(text[o + v.size()]);
        } else {
          if (o >= 1) out.insert(text[o - 1]);
        }
      }
      return out;
    };
    auto half = letters_within(p);
    auto full = letters_within(2 * p);
    // Occurrence end of the last newly discovered extension letter; the same
    // discovery margin as for return sets guards against late letters.
    std::size_t last_new = 0;
    {
      std::set<char> seen;
      for (std::size_t o : occ) {
        if (right_side) {
          if (o + v.size() < text.size() && seen.insert(text[o + v.size()]).second)
            last_new = o + v.size() + 1;
        } else {
          if (o >= 1 && seen.insert(text[o - 1]).second) last_new = o + v.size();
        }
      }
    }
    if (!full.empty() && half == full && !occ.empty() && occ.back() >= p &&
        2 * p >= kDiscoveryMargin * last_new) {
      std::string canonical;
      for (char c : alpha.letters())
        if (full.count(c)) canonical += c;
      auto [it, inserted] = cache.try_emplace(Word(v), std::move(canonical));
      return it->second;
    }
    p *= 2;
  }
}

ReturnSet reduce_right(const WordSource& src, std::string_view w, std::size_t prefix_guard) {
  ExtensionScanner sc(src, prefix_guard);
  std::string_view er = sc.right(w);
  if (er.size() != 1)
    throw PreconditionError("'" + Word(w) + "' has " + std::to_string(er.size()) +
                            " right extensions; reduction needs exactly one");
  ReturnSet rs = return_set(src, Word(w) + er[0], prefix_guard);
  rs.factor = Word(w);
  rs.complete_returns.clear();
  for (const Word& v : rs.returns) rs.complete_returns.push_back(v + rs.factor);
  return rs;
}

ReturnSet conjugate_left(const WordSource& src, char a, std::string_view w,
                         std::size_t prefix_guard) {
  ExtensionScanner sc(src, prefix_guard);
  std::string_view el = sc.left(w);
  if (el.size() != 1 || el[0] != a)
    throw PreconditionError("left extensions of '" + Word(w) + "' are '" + Word(el) +
                            "', conjugation needs exactly '" + std::string(1, a) + "'");
  ReturnSet base = return_set(src, w, prefix_guard);
  ReturnSet rs;
  rs.factor = Word(1, a) + Word(w);
  for (const Word& v : base.returns) {
    if (v.back() != a)
      throw Error("internal: return word '" + v + "' of '" + Word(w) +
                  "' does not end with its unique left extension");
    rs.returns.push_back(Word(1, a) + v.substr(0, v.size() - 1));
  }
  for (const Word& v : rs.returns) rs.complete_returns.push_back(v + rs.factor);
  rs.cert = base.cert;
  rs.eventually_periodic = base.eventually_periodic;
  return rs;
}

std::vector<Word> ReturnTrie::leaf_labels() const {
  std::vector<Word> out;
  for (const TrieNode& n : nodes)
    if (n.leaf) out.push_back(n.label);
  return out;
}

std::vector<Word> ReturnTrie::internal_labels() const {
  std::vector<Word> out;
  for (const TrieNode& n : nodes)
    if (!n.leaf) out.push_back(n.label);
  return out;
}

std::size_t ReturnTrie::leaf_count() const {
  std::size_t k = 0;
  for (const TrieNode& n : nodes) k += n.leaf;
  return k;
}

bool ReturnTrie::leaf_identity() const {
  long long rhs = 1;
  for (const TrieNode& n : nodes)
    if (!n.leaf) rhs += static_cast<long long>(n.children.size()) - 1;
  return static_cast<long long>(leaf_count()) == rhs;
}

ReturnTrie build_return_trie(ExtensionScanner& scanner, std::string_view w,
                             std::size_t depth_cap) {
  if (w.size() > depth_cap)
    throw CapError("factor longer than the trie depth cap");
  ReturnTrie trie;
  trie.factor = Word(w);
  trie.depth_cap = depth_cap;
  trie.nodes.push_back(TrieNode{Word(w), {}, false});
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    Word label = trie.nodes[idx].label;
    for (char b : scanner.right(label)) {
      Word child = label + b;
      if (child.size() > depth_cap)
        throw CapError("return trie of '" + Word(w) + "' exceeded depth cap " +
                       std::to_string(depth_cap));
      bool leaf = child.size() > w.size() && child.ends_with(w);
      trie.nodes.push_back(TrieNode{std::move(child), {}, leaf});
      std::size_t ci = trie.nodes.size() - 1;
      trie.nodes[idx].children.push_back(ci);
      if (!leaf) queue.push_back(ci);
    }
  }
  return trie;
}

ReturnTrie build_return_trie(const WordSource& src, std::string_view w) {
  ExtensionScanner scanner(src);
  return build_return_trie(scanner, w, default_depth_cap(w.size()));
}

std::string to_dot(const ReturnTrie& trie) {
  std::ostringstream out;
  out << "digraph return_trie {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < trie.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << trie.nodes[i].label << "\"";
    if (trie.nodes[i].leaf) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (std::size_t i = 0; i < trie.nodes.size(); ++i)
    for (std::size_t c : trie.nodes[i].children) out << "  n" << i << " -> n" << c << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rwords
