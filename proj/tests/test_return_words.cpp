#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rwords/errors.hpp"
#include "rwords/factor_table.hpp"
#include "rwords/return_words.hpp"
#include "rwords/word_source.hpp"

using namespace rwords;

namespace {

std::set<std::string> as_set(const std::vector<Word>& ws) {
  return std::set<std::string>(ws.begin(), ws.end());
}

std::string map_letters(std::string_view w, char a1, char b1, char a2, char b2) {
  std::string out;
  for (char c : w) {
    if (c == a1) out += b1;
    else if (c == b1) out += a1;
    else if (c == a2) out += b2;
    else if (c == b2) out += a2;
    else out += c;
  }
  return out;
}

}  // namespace

TEST_CASE("occurrence positions, overlapping and empty") {
  CHECK(occurrences("00000", "00") == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(occurrences("ababa", "aba") == std::vector<std::size_t>{0, 2});
  CHECK(occurrences("abc", "") == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(occurrences("", "") == std::vector<std::size_t>{0});
  CHECK(occurrences("abc", "x").empty());
  CHECK(occurrences("ab", "abc").empty());
}

TEST_CASE("return words of 01 in thue_morse") {
  WordSource tm = builtin_source("thue_morse");
  ReturnSet rs = return_set(tm, "01");
  // order of first appearance in the word
  CHECK(rs.returns == std::vector<Word>{"011", "010", "0110", "01"});
  CHECK(as_set(rs.returns) == std::set<std::string>{"01", "010", "011", "0110"});
  CHECK(as_set(rs.complete_returns) ==
        std::set<std::string>{"0101", "01001", "01101", "011001"});
  CHECK(rs.factor == "01");
  CHECK_FALSE(rs.eventually_periodic);
  CHECK(rs.cert.doubled_window == 2 * rs.cert.window);
  CHECK(rs.cert.occurrences_used >= 2);
}

TEST_CASE("return trie of 01 in thue_morse") {
  WordSource tm = builtin_source("thue_morse");
  ReturnTrie trie = build_return_trie(tm, "01");
  CHECK(as_set(trie.internal_labels()) ==
        std::set<std::string>{"01", "010", "011", "0100", "0110", "01100"});
  CHECK(as_set(trie.leaf_labels()) ==
        std::set<std::string>{"0101", "01001", "01101", "011001"});
  CHECK(trie.leaf_count() == 4);
  CHECK(trie.nodes.size() == 10);
  CHECK(trie.leaf_identity());
  CHECK(trie.factor == "01");
}

TEST_CASE("return sets of the four-letter example") {
  WordSource r4 = builtin_source("r4_example");
  CHECK(as_set(return_set(r4, "1").returns) ==
        std::set<std::string>{"13", "1323", "1424", "142324"});
  CHECK(as_set(return_set(r4, "2").returns) ==
        std::set<std::string>{"23", "2314", "2413", "241314"});
  CHECK(as_set(return_set(r4, "23").returns) ==
        std::set<std::string>{"2314", "2314241314", "232413", "232413142413"});
  CHECK(as_set(return_set(r4, "2413").returns) ==
        std::set<std::string>{"241314", "24131423", "24132314", "2413231423"});
  CHECK(as_set(return_set(r4, "2413142").returns) ==
        std::set<std::string>{"24131423", "241314232413231423", "24131424132314",
                              "241314241323142324132314"});
}

TEST_CASE("every complete return is a leaf and the leaf identity holds") {
  for (const std::string& name : builtin_source_names()) {
    CAPTURE(name);
    WordSource src = builtin_source(name);
    FactorTable t = FactorTable::build(src, 6);
    ExtensionScanner scanner(src);
    for (std::size_t n = 0; n <= 6; ++n)
      for (const Word& w : t.factors(n)) {
        CAPTURE(w);
        ReturnTrie trie = build_return_trie(scanner, w, default_depth_cap(w.size()));
        ReturnSet rs = return_set(src, w);
        CHECK(as_set(trie.leaf_labels()) == as_set(rs.complete_returns));
        CHECK(trie.leaf_identity());
      }
  }
}

TEST_CASE("unique right extension keeps the return set") {
  for (const std::string& name : builtin_source_names()) {
    CAPTURE(name);
    WordSource src = builtin_source(name);
    FactorTable t = FactorTable::build(src, 8);
    ExtensionScanner scanner(src);
    for (std::size_t n = 1; n <= 7; ++n)
      for (const Word& w : t.factors(n)) {
        if (t.right_extensions(w).size() != 1) continue;
        CAPTURE(w);
        ReturnSet direct = return_set(src, w);
        ReturnSet reduced = reduce_right(src, w);
        CHECK(reduced.factor == w);
        CHECK(as_set(reduced.returns) == as_set(direct.returns));
      }
  }
}

TEST_CASE("unique left extension conjugates the return set") {
  for (const std::string& name : builtin_source_names()) {
    CAPTURE(name);
    WordSource src = builtin_source(name);
    FactorTable t = FactorTable::build(src, 8);
    for (std::size_t n = 1; n <= 7; ++n)
      for (const Word& w : t.factors(n)) {
        std::string le = t.left_extensions(w);
        if (le.size() != 1) continue;
        char a = le[0];
        CAPTURE(w);
        ReturnSet base = return_set(src, w);
        for (const Word& v : base.returns) {
          REQUIRE(!v.empty());
          CHECK(v.back() == a);  // every return of w ends with its forced left letter
        }
        ReturnSet conj = conjugate_left(src, a, w);
        ReturnSet direct = return_set(src, a + w);
        CHECK(conj.factor == a + w);
        CHECK(as_set(conj.returns) == as_set(direct.returns));
        CHECK(conj.returns.size() == base.returns.size());
      }
  }
}

TEST_CASE("letter swap symmetry of the four-letter example") {
  // the substitution commutes with 1<->4, 2<->3, so return sets map over
  WordSource r4 = builtin_source("r4_example");
  FactorTable t = FactorTable::build(r4, 8);
  for (std::size_t n = 0; n <= 8; ++n)
    for (const Word& w : t.factors(n)) {
      CAPTURE(w);
      std::string phi_w = map_letters(w, '1', '4', '2', '3');
      std::set<std::string> mapped;
      for (const Word& v : return_set(r4, w).returns)
        mapped.insert(map_letters(v, '1', '4', '2', '3'));
      CHECK(mapped == as_set(return_set(r4, phi_w).returns));
    }
}

TEST_CASE("returns of the empty factor are the letters") {
  CHECK(as_set(return_set(builtin_source("fibonacci"), "").returns) ==
        std::set<std::string>{"0", "1"});
  ReturnSet r4 = return_set(builtin_source("r4_example"), "");
  CHECK(as_set(r4.returns) == std::set<std::string>{"1", "2", "3", "4"});
  CHECK(as_set(r4.complete_returns) == as_set(r4.returns));
  ReturnTrie trie = build_return_trie(builtin_source("fibonacci"), "");
  CHECK(trie.nodes.size() == 3);
  CHECK(as_set(trie.leaf_labels()) == std::set<std::string>{"0", "1"});
}

TEST_CASE("periodic word has a single return word") {
  WordSource ep = WordSource::eventually_periodic("", "01");
  ReturnSet rs = return_set(ep, "01");
  CHECK(rs.returns == std::vector<Word>{"01"});
  CHECK(rs.eventually_periodic);
}

TEST_CASE("missing factors are rejected") {
  WordSource fib = builtin_source("fibonacci");
  CHECK_THROWS_AS(return_set(fib, "11"), NotAFactorError);
  CHECK_THROWS_AS(return_set(fib, "ab"), NotAFactorError);
  WordSource once = WordSource::eventually_periodic("0", "1");
  CHECK_THROWS_AS(return_set(once, "0"), CertificationError);  // occurs once, never returns
}

TEST_CASE("trie growth is capped, never truncated") {
  WordSource tm = builtin_source("thue_morse");
  ExtensionScanner scanner(tm);
  CHECK_THROWS_AS(build_return_trie(scanner, "01", 2), CapError);
  CHECK_THROWS_AS(build_return_trie(scanner, "01", 1), CapError);
  CHECK_NOTHROW(build_return_trie(scanner, "01", 6));
}

TEST_CASE("dot export shows leaves as double circles") {
  WordSource tm = builtin_source("thue_morse");
  ReturnTrie trie = build_return_trie(tm, "01");
  std::string dot = to_dot(trie);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2))
    ++edges;
  CHECK(edges == trie.nodes.size() - 1);
}
