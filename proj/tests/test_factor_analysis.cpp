#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rwords/errors.hpp"
#include "rwords/factor_table.hpp"
#include "rwords/word_source.hpp"

using namespace rwords;

namespace {

std::set<std::string> as_set(const std::vector<Word>& ws) {
  return std::set<std::string>(ws.begin(), ws.end());
}

}  // namespace

TEST_CASE("two-letter factors of the four-letter example") {
  WordSource src = builtin_source("r4_example");
  FactorTable t = FactorTable::build(src, 4);
  CHECK(as_set(t.factors(2)) ==
        std::set<std::string>{"13", "14", "23", "24", "31", "32", "41", "42"});
  CHECK(t.complexity(2) == 8);
}

TEST_CASE("complexity of the classic words") {
  FactorTable fib = FactorTable::build(builtin_source("fibonacci"), 30);
  for (std::size_t n = 0; n <= 30; ++n) CHECK(fib.complexity(n) == n + 1);

  FactorTable ch = FactorTable::build(builtin_source("chacon_recoded"), 20);
  for (std::size_t n = 1; n <= 20; ++n) CHECK(ch.complexity(n) == 2 * n + 1);

  FactorTable trib = FactorTable::build(builtin_source("tribonacci"), 20);
  for (std::size_t n = 1; n <= 20; ++n) CHECK(trib.complexity(n) == 2 * n + 1);

  FactorTable tm = FactorTable::build(builtin_source("thue_morse"), 10);
  CHECK(tm.complexity(1) == 2);
  CHECK(tm.complexity(2) == 4);

  FactorTable r4 = FactorTable::build(builtin_source("r4_example"), 20);
  for (std::size_t n = 1; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(r4.complexity(n) % 2 == 0);
  }
}

TEST_CASE("bilateral order of the weak bispecial letter") {
  FactorTable t = FactorTable::build(builtin_source("r4_example"), 8);
  BilateralReport r = t.bilateral_order("1");
  CHECK(r.left_extensions == "34");
  CHECK(r.right_extensions == "34");
  CHECK(r.extension_pairs == std::vector<std::string>{"34", "43"});
  CHECK(r.bilateral_order == -1);
  CHECK(r.cls == FactorClass::WeakBispecial);
  CHECK(r.maximal_left_special);
  CHECK(r.maximal_right_special);

  BilateralReport r23 = t.bilateral_order("23");
  CHECK(r23.cls == FactorClass::WeakBispecial);
  CHECK(r23.bilateral_order == -1);

  BilateralReport empty = t.bilateral_order("");
  CHECK(empty.cls == FactorClass::StrongBispecial);
  CHECK(empty.bilateral_order == 1);
  CHECK(empty.extension_pairs.size() == 8);
}

TEST_CASE("Sturmian words have one left and one right special factor per length") {
  FactorTable t = FactorTable::build(builtin_source("fibonacci"), 20);
  for (std::size_t n = 1; n <= 20; ++n) {
    CAPTURE(n);
    int left = 0, right = 0;
    for (const BilateralReport& r : t.special_factors(n)) {
      if (r.left_extensions.size() >= 2) ++left;
      if (r.right_extensions.size() >= 2) ++right;
      CHECK(r.bilateral_order == 0);  // no weak or strong bispecials at all
    }
    CHECK(left == 1);
    CHECK(right == 1);
  }
}

TEST_CASE("extension counts satisfy the incidence identity") {
  for (const std::string& name : builtin_source_names()) {
    CAPTURE(name);
    WordSource src = builtin_source(name);
    FactorTable t = FactorTable::build(src, 10);
    for (std::size_t n = 0; n <= 8; ++n) {
      for (const Word& w : t.factors(n)) {
        std::size_t pairs = t.extension_pairs(w).size();
        std::size_t via_right = 0, via_left = 0;
        for (char b : t.right_extensions(w)) via_right += t.left_extensions(w + b).size();
        for (char a : t.left_extensions(w)) via_left += t.right_extensions(a + w).size();
        CHECK(pairs == via_right);
        CHECK(pairs == via_left);
      }
    }
  }
}

TEST_CASE("second difference of complexity equals the bilateral sum") {
  for (const std::string& name : builtin_source_names()) {
    CAPTURE(name);
    FactorTable t = FactorTable::build(builtin_source(name), 20);
    for (std::size_t n = 0; n <= 20; ++n) {
      CAPTURE(n);
      CHECK(t.second_difference_identity(n));
    }
  }
}

TEST_CASE("one-sided special factors have bilateral order zero") {
  for (const std::string& name : builtin_source_names()) {
    CAPTURE(name);
    FactorTable t = FactorTable::build(builtin_source(name), 12);
    for (std::size_t n = 0; n <= 12; ++n)
      for (const BilateralReport& r : t.special_factors(n)) {
        bool bispecial = r.left_extensions.size() >= 2 && r.right_extensions.size() >= 2;
        if (!bispecial) {
          CAPTURE(r.factor);
          CHECK(r.bilateral_order == 0);
        }
      }
  }
}

TEST_CASE("weak bispecial and maximal special counts coincide on the builtins") {
  for (const std::string& name : builtin_source_names()) {
    CAPTURE(name);
    FactorTable t = FactorTable::build(builtin_source(name), 14);
    int weak = 0, maxl = 0, maxr = 0;
    for (std::size_t n = 0; n <= 14; ++n)
      for (const BilateralReport& r : t.special_factors(n)) {
        if (r.cls == FactorClass::WeakBispecial) ++weak;
        if (r.maximal_left_special) ++maxl;
        if (r.maximal_right_special) ++maxr;
      }
    CHECK(weak == maxr);
    CHECK(weak == maxl);
    if (name == "fibonacci" || name == "tribonacci") CHECK(weak == 0);
    if (name == "chacon_recoded" || name == "r4_example") CHECK(weak > 0);
  }
}

TEST_CASE("saturation certificate and failure") {
  WordSource fib = builtin_source("fibonacci");
  FactorTable t = FactorTable::build(fib, 10);
  const SaturationCertificate& c = t.certificate();
  CHECK(c.max_len_certified == 12);
  CHECK(c.window > 4 * 12);
  CHECK(c.doubled_window > c.window);
  REQUIRE(c.iterations.has_value());
  CHECK(c.iterations->second == c.iterations->first + 1);
  CHECK(t.certified_prefix().size() == c.doubled_window);

  CHECK_THROWS_AS(FactorTable::build(fib, 30, 100), CertificationError);

  WordSource ep = WordSource::eventually_periodic("", "01");
  FactorTable tp = FactorTable::build(ep, 8);
  CHECK_FALSE(tp.certificate().iterations.has_value());
  CHECK(tp.complexity(5) == 2);
}

TEST_CASE("every short factor recurs") {
  for (const char* name : {"fibonacci", "thue_morse"}) {
    CAPTURE(name);
    WordSource src = builtin_source(name);
    FactorTable t = FactorTable::build(src, 10);
    std::string text = src.head(1000);
    for (std::size_t n = 1; n <= 10; ++n)
      for (const Word& w : t.factors(n)) {
        std::size_t first = text.find(w);
        REQUIRE(first != std::string::npos);
        CHECK(text.find(w, first + 1) != std::string::npos);
      }
  }
}

TEST_CASE("canonical order follows alphabet declaration, not character codes") {
  Substitution s = parse_substitution("alphabet: ba\nb -> ba\na -> b\n");
  WordSource src = WordSource::fixed_point(s);
  FactorTable t = FactorTable::build(src, 6);
  CHECK(t.factors(1) == std::vector<Word>{"b", "a"});
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto& fs = t.factors(n);
    CHECK(std::is_sorted(fs.begin(), fs.end(), [&](const Word& x, const Word& y) {
      return t.alphabet().word_less(x, y);
    }));
  }
  // same word as fibonacci after renaming letters
  CHECK(t.complexity(6) == 7);
}

TEST_CASE("range and membership guards") {
  FactorTable t = FactorTable::build(builtin_source("fibonacci"), 6);
  CHECK(t.max_len() == 6);
  CHECK(t.margin_len() == 8);
  CHECK_THROWS_AS(t.factors(9), RangeError);
  CHECK_THROWS_AS(t.complexity(9), RangeError);
  CHECK_THROWS_AS(t.bilateral_order("0100100"), RangeError);   // length 7 > N
  CHECK_THROWS_AS(t.left_extensions("11"), NotAFactorError);
  CHECK_THROWS_AS(t.bilateral_order("11"), NotAFactorError);
  CHECK(t.contains("0100"));
  CHECK_FALSE(t.contains("11"));
}
