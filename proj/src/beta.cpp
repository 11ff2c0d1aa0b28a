#include "rwords/beta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rwords/errors.hpp"
#include "rwords/word_source.hpp"

namespace rwords {

namespace {

void validate_coeffs(const std::vector<int>& t) {
  if (t.size() < 2) throw ParameterError("need at least 2 coefficients");
  if (t.size() > 10) throw ParameterError("at most 10 coefficients (alphabet cap)");
  if (t.front() < 1) throw ParameterError("t1 must be >= 1");
  if (t.back() < 1) throw ParameterError("t_m must be >= 1");
  for (std::size_t i = 1; i + 1 < t.size(); ++i)
    if (t[i] < 0) throw ParameterError("middle coefficients must be >= 0");
}

// p(x) = x^m - t1 x^(m-1) - ... - tm
double poly(const std::vector<int>& t, double x) {
  double v = 1;
  for (int c : t) v = v * x - c;
  return v;
}

double dpoly(const std::vector<int>& t, double x) {
  std::size_t m = t.size();
  double v = static_cast<double>(m);
  for (std::size_t j = 1; j < m; ++j) v = v * x - static_cast<double>(m - j) * t[j - 1];
  return v;
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

DominantRoot dominant_root(const std::vector<int>& t) {
  validate_coeffs(t);
  double lo = 1.0;
  double hi = 1.0 + std::accumulate(t.begin(), t.end(), 0.0);
  // p(1) = 1 - sum(t) < 0, p(hi) > 0: the root is bracketed.
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    double mid = 0.5 * (lo + hi);
    (poly(t, mid) < 0 ? lo : hi) = mid;
  }
  double b = 0.5 * (lo + hi);
  double d = dpoly(t, b);
  if (d != 0) b -= poly(t, b) / d;
  return {b, std::abs(poly(t, b))};
}

Substitution build_beta_substitution(const std::vector<int>& t) {
  validate_coeffs(t);
  std::size_t m = t.size();
  std::string letters;
  for (std::size_t k = 0; k < m; ++k) letters += static_cast<char>('0' + k);
  std::map<char, Word> images;
  for (std::size_t k = 0; k < m; ++k) {
    Word img(static_cast<std::size_t>(t[k]), '0');
    if (k + 1 < m) img += static_cast<char>('0' + k + 1);
    images[letters[k]] = std::move(img);
  }
  return Substitution(Alphabet(letters), std::move(images), '0');
}

bool is_parry_simple(const std::vector<int>& t) {
  validate_coeffs(t);
  for (std::size_t j = 1; j < t.size(); ++j) {
    std::vector<int> tail(t.begin() + j, t.end());
    if (!lex_less(tail, t)) return false;
  }
  return true;
}

bool satisfies_rm_conditions(const std::vector<int>& t) {
  validate_coeffs(t);
  if (t.back() != 1) return false;
  std::vector<int> head(t.begin(), t.end() - 1);
  for (std::size_t j = 1; j < head.size(); ++j) {
    std::vector<int> rot(head.begin() + j, head.end());
    rot.insert(rot.end(), head.begin(), head.begin() + j);
    if (lex_less(head, rot)) return false;  // rotation must be <= head
  }
  return true;
}

bool arnoux_rauzy_case(const std::vector<int>& t) {
  validate_coeffs(t);
  if (t.back() != 1) return false;
  for (std::size_t i = 1; i + 1 < t.size(); ++i)
    if (t[i] != t[0]) return false;
  return true;
}

BetaSpec make_beta_spec(const std::vector<int>& t) {
  BetaSpec spec;
  spec.coeffs = t;
  DominantRoot r = dominant_root(t);
  spec.beta = r.beta;
  spec.residual = r.residual;
  spec.parry_simple = is_parry_simple(t);
  spec.rm_conditions = satisfies_rm_conditions(t);
  spec.arnoux_rauzy = arnoux_rauzy_case(t);
  return spec;
}

BetaIntegerList beta_integers(const std::vector<int>& t, std::size_t n) {
  validate_coeffs(t);
  if (!is_parry_simple(t))
    throw PreconditionError("coefficients are not simple Parry; enumeration undefined");
  const std::size_t m = t.size();
  BetaIntegerList out;
  out.coeffs = t;
  out.beta = dominant_root(t).beta;

  for (std::size_t k = 0; k < m; ++k) {
    double d = 0;
    for (std::size_t i = m; i > k; --i) d = (d + t[i - 1]) / out.beta;
    out.distances.push_back(d);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (std::abs(out.distances[i] - out.distances[j]) < 1e-6)
        throw PrecisionError("gap distances for letters " + std::to_string(i) + " and " +
                             std::to_string(j) + " are not separated");

  if (n > 0) out.items.push_back(BetaInteger{{0}, 0.0});

  // Admissible strings in radix order: every suffix must stay lexicographically
  // below (t1..tm). Live state = lengths of suffixes that currently equal a
  // prefix of the coefficient word; a digit above the watched coefficient, or
  // a full match of all m coefficients, kills the branch.
  std::vector<int> digits;
  std::vector<std::vector<int>> live_stack{{}};
  auto step = [&](int d) -> bool {
    const std::vector<int>& live = live_stack.back();
    std::vector<int> next;
    for (int l : live) {
      if (d > t[l]) return false;
      if (d == t[l]) {
        if (l + 1 == static_cast<int>(m)) return false;
        next.push_back(l + 1);
      }
    }
    if (d > t[0]) return false;
    if (d == t[0]) next.push_back(1);
    live_stack.push_back(std::move(next));
    digits.push_back(d);
    return true;
  };
  auto unstep = [&] {
    live_stack.pop_back();
    digits.pop_back();
  };

  for (std::size_t len = 1; out.items.size() < n; ++len) {
    auto dfs = [&](auto&& self) -> bool {
      if (digits.size() == len) {
        double v = 0;
        for (int d : digits) v = v * out.beta + d;
        out.items.push_back(BetaInteger{digits, v});
        return out.items.size() >= n;
      }
      int lowest = digits.empty() ? 1 : 0;  // no leading zeros
      for (int d = lowest; d <= t[0]; ++d) {
        if (!step(d)) continue;
        bool done = self(self);
        unstep();
        if (done) return true;
      }
      return false;
    };
    if (dfs(dfs)) break;
  }

  for (std::size_t i = 0; i + 1 < out.items.size(); ++i) {
    double g = out.items[i + 1].value - out.items[i].value;
    std::size_t best = 0;
    for (std::size_t k = 1; k < m; ++k)
      if (std::abs(g - out.distances[k]) < std::abs(g - out.distances[best])) best = k;
    if (std::abs(g - out.distances[best]) > 1e-9)
      throw PrecisionError("gap " + std::to_string(g) +
                           " does not match any letter distance within 1e-9");
    out.gap_word += static_cast<char>('0' + best);
  }
  return out;
}

bool gap_word_matches_fixed_point(const std::vector<int>& t, std::size_t n) {
  BetaIntegerList list = beta_integers(t, n + 1);
  std::string prefix = fixed_point_prefix(build_beta_substitution(t), n);
  return list.gap_word == prefix;
}

std::string digits_to_string(const std::vector<int>& digits) {
  bool small = std::all_of(digits.begin(), digits.end(), [](int d) { return d <= 9; });
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i && !small) out += ',';
    if (small)
      out += static_cast<char>('0' + digits[i]);
    else
      out += std::to_string(digits[i]);
  }
  return out;
}

}  // namespace rwords
