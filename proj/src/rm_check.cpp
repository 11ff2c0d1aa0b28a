#include "rwords/rm_check.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "rwords/errors.hpp"

namespace rwords {

std::string_view to_string(RmMethod m) {
  return m == RmMethod::FullScan ? "full-scan" : "bispecial-reduction";
}

namespace {

bool is_bispecial(FactorClass c) {
  return c == FactorClass::OrdinaryBispecial || c == FactorClass::WeakBispecial ||
         c == FactorClass::StrongBispecial;
}

}  // namespace

RmChecker::RmChecker(const WordSource& src, std::size_t max_len, std::size_t prefix_guard)
    : src_(&src),
      table_(FactorTable::build(src, max_len, prefix_guard)),
      scanner_(src, prefix_guard),
      guard_(prefix_guard) {}

std::size_t RmChecker::return_count_direct(std::string_view w) {
  if (auto it = direct_memo_.find(Word(w)); it != direct_memo_.end()) return it->second;
  std::size_t c = return_set(*src_, w, guard_).returns.size();
  direct_memo_.emplace(Word(w), c);
  return c;
}

std::size_t RmChecker::return_count_reduced(std::string_view w) {
  if (auto it = count_memo_.find(Word(w)); it != count_memo_.end()) return it->second;
  // Transport chain: all words visited share the final count.
  std::vector<Word> chain;
  Word x(w);
  const std::size_t cap = default_depth_cap(w.size());
  std::size_t count = 0;
  while (true) {
    if (auto it = count_memo_.find(x); it != count_memo_.end()) {
      count = it->second;
      break;
    }
    if (x.size() > cap) {
      // No bispecial ancestor within the cap; scan the original factor.
      count = return_count_direct(w);
      break;
    }
    std::string_view er = scanner_.right(x);
    if (er.size() == 1) {
      chain.push_back(x);
      x += er[0];
      continue;
    }
    std::string_view el = scanner_.left(x);
    if (el.size() == 1) {
      chain.push_back(x);
      x = Word(1, el[0]) + x;
      continue;
    }
    count = return_count_direct(x);
    chain.push_back(std::move(x));
    break;
  }
  for (Word& c : chain) count_memo_.emplace(std::move(c), count);
  count_memo_.emplace(Word(w), count);
  return count;
}

RmVerdict RmChecker::check(int m, RmMethod method) {
  RmVerdict v;
  v.m = m;
  v.max_length = table_.max_len();
  v.method = method;
  v.holds = true;
  for (std::size_t n = 0; n <= table_.max_len() && v.holds; ++n) {
    RmLengthSummary summary;
    summary.length = n;
    for (const Word& w : table_.factors(n)) {
      std::size_t c = method == RmMethod::FullScan ? return_count_direct(w)
                                                   : return_count_reduced(w);
      if (c == 1) v.eventually_periodic = true;
      if (is_bispecial(table_.bilateral_order(w).cls))
        summary.bispecial_counts.emplace_back(w, c);
      if (c != static_cast<std::size_t>(m)) {
        v.holds = false;
        v.witness = RmWitness{w, c};
        break;
      }
    }
    v.per_length.push_back(std::move(summary));
  }
  return v;
}

RmVerdict check_rm(const WordSource& src, int m, std::size_t max_len, RmMethod method) {
  return RmChecker(src, max_len).check(m, method);
}

bool check_unique_special_criterion(const FactorTable& t, int m, std::size_t max_len) {
  if (max_len > t.max_len())
    throw RangeError("criterion range exceeds the table's certified length");
  for (std::size_t n = 0; n <= max_len; ++n) {
    std::size_t left_special = 0, right_special = 0;
    std::size_t left_degree = 0, right_degree = 0;
    for (const BilateralReport& r : t.special_factors(n)) {
      if (r.left_extensions.size() >= 2) {
        ++left_special;
        left_degree = r.left_extensions.size();
      }
      if (r.right_extensions.size() >= 2) {
        ++right_special;
        right_degree = r.right_extensions.size();
      }
    }
    bool left_ok = left_special == 1 && left_degree == static_cast<std::size_t>(m);
    bool right_ok = right_special == 1 && right_degree == static_cast<std::size_t>(m);
    if (!left_ok && !right_ok) return false;
  }
  return true;
}

CharacterizationReport check_theorem1(const WordSource& src, int m, std::size_t max_len) {
  RmChecker chk(src, max_len);
  const FactorTable& t = chk.table();

  CharacterizationReport r;
  r.m = m;
  r.max_length = max_len;
  r.no_weak_bispecial = true;
  r.no_maximal_right_special = true;
  for (std::size_t n = 0; n <= max_len; ++n)
    for (const Word& w : t.factors(n)) {
      BilateralReport rep = t.bilateral_order(w);
      if (rep.cls == FactorClass::WeakBispecial) r.no_weak_bispecial = false;
      if (rep.maximal_right_special) r.no_maximal_right_special = false;
    }

  r.complexity_affine = true;
  for (std::size_t n = 0; n <= max_len; ++n)
    if (t.complexity(n) != static_cast<std::size_t>(m - 1) * n + 1) {
      r.complexity_affine = false;
      break;
    }

  r.rm_holds = chk.check(m).holds;
  r.implication_ok = !r.no_weak_bispecial || (r.complexity_affine == r.rm_holds);
  if (!r.implication_ok)
    r.violation = "affine complexity and the R_m verdict disagree without a weak bispecial";

  bool delta_below_m = true;
  for (std::size_t n = 0; n <= max_len; ++n)
    if (t.delta_complexity(n) >= m) {
      delta_below_m = false;
      break;
    }

  r.lower_bound_ok = true;
  r.upper_bound_ok = true;
  if (r.no_weak_bispecial) {
    for (std::size_t n = 0; n <= max_len; ++n)
      for (const Word& w : t.factors(n)) {
        std::size_t c = chk.return_count_reduced(w);
        if (static_cast<long long>(c) < 1 + t.delta_complexity(n)) {
          r.lower_bound_ok = false;
          r.violation = "return-count lower bound 1 + delta C fails at '" + w + "'";
        }
        if (delta_below_m && c > static_cast<std::size_t>(m)) {
          r.upper_bound_ok = false;
          r.violation = "return-count upper bound m fails at '" + w + "'";
        }
      }
  }
  r.consistent = r.implication_ok && r.lower_bound_ok && r.upper_bound_ok;
  return r;
}

std::optional<ProductWitness> check_product_structure(const WordSource& src,
                                                      const FactorTable& t,
                                                      std::string_view w,
                                                      const RmVerdict& r4_evidence) {
  if (r4_evidence.m != 4 || !r4_evidence.holds)
    throw PreconditionError("product structure needs a holding R_4 verdict for the source");
  if (w.size() + 1 > r4_evidence.max_length)
    throw PreconditionError("R_4 evidence does not cover the one-letter extensions of the factor");
  BilateralReport rep = t.bilateral_order(w);
  if (rep.cls != FactorClass::WeakBispecial)
    throw PreconditionError("'" + Word(w) + "' is not weak bispecial");

  std::vector<Word> candidates;
  for (char a : rep.left_extensions) candidates.push_back(Word(1, a) + Word(w));
  for (char b : rep.right_extensions) {
    Word wb = Word(w) + b;
    if (std::find(candidates.begin(), candidates.end(), wb) == candidates.end())
      candidates.push_back(std::move(wb));
  }

  std::vector<std::vector<Word>> returns;
  for (const Word& c : candidates) returns.push_back(return_set(src, c).returns);

  std::array<int, 4> perm;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (returns[i].size() != 4) continue;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (j == i || returns[j].size() != 4) continue;
      std::set<Word> r2(returns[j].begin(), returns[j].end());
      perm = {0, 1, 2, 3};
      // Interpret R(w1) as {v1v3, v1v4, v2v3, v2v4} in every arrangement.
      std::sort(perm.begin(), perm.end());
      do {
        const Word& x13 = returns[i][perm[0]];
        const Word& x14 = returns[i][perm[1]];
        const Word& x23 = returns[i][perm[2]];
        const Word& x24 = returns[i][perm[3]];
        for (std::size_t cut = 1; cut < x13.size(); ++cut) {
          Word v1 = x13.substr(0, cut), v3 = x13.substr(cut);
          if (x14.size() <= cut || x14.compare(0, cut, v1) != 0) continue;
          Word v4 = x14.substr(cut);
          if (x23.size() <= v3.size() || !x23.ends_with(v3)) continue;
          Word v2 = x23.substr(0, x23.size() - v3.size());
          if (x24 != v2 + v4) continue;
          if (r2 != std::set<Word>{v3 + v1, v3 + v2, v4 + v1, v4 + v2}) continue;
          return ProductWitness{candidates[i], candidates[j], v1, v2, v3, v4};
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return std::nullopt;
}

}  // namespace rwords
