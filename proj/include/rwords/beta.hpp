#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rwords/substitution.hpp"

namespace rwords {

// Numeration in a real base beta > 1 defined by coefficients t = (t1..tm),
// m >= 2, t1 >= 1, tm >= 1, middle coefficients >= 0: beta is the dominant
// root of x^m - t1 x^(m-1) - ... - tm.

struct DominantRoot {
  double beta = 0;
  double residual = 0;  // |p(beta)| after polishing
};

// Bisection on (1, 1 + sum t_j] to absolute width 1e-12, then one Newton
// step. The polynomial is negative at 1 and positive at the right endpoint,
// so the root always exists.
DominantRoot dominant_root(const std::vector<int>& t);

// Letter k maps to 0^(t_{k+1}) (k+1) for k < m-1; letter m-1 maps to 0^(t_m).
// Seed 0. Coefficients are validated.
Substitution build_beta_substitution(const std::vector<int>& t);

// Simple Parry condition: (t_j..t_m) strictly below (t_1..t_m) in
// lexicographic order (proper prefix counts as smaller) for every j in 2..m.
bool is_parry_simple(const std::vector<int>& t);

// R_m conditions: t_m == 1 and every rotation (t_j..t_{m-1} t_1..t_{j-1}) of
// the truncated vector is <= (t_1..t_{m-1}) lexicographically. Vacuous
// rotation set for m = 2.
bool satisfies_rm_conditions(const std::vector<int>& t);

// Reversal-closed (Arnoux-Rauzy) case: t_m == 1 and t_1 = ... = t_{m-1}.
bool arnoux_rauzy_case(const std::vector<int>& t);

struct BetaSpec {
  std::vector<int> coeffs;
  double beta = 0;
  double residual = 0;
  bool parry_simple = false;
  bool rm_conditions = false;
  bool arnoux_rauzy = false;
};

BetaSpec make_beta_spec(const std::vector<int>& t);

struct BetaInteger {
  std::vector<int> digits;  // most significant first; {0} for zero
  double value = 0;
};

struct BetaIntegerList {
  std::vector<int> coeffs;
  double beta = 0;
  std::vector<BetaInteger> items;     // n smallest, increasing value
  std::vector<double> distances;      // letter k -> gap length, k = 0..m-1
  std::string gap_word;               // letters '0'+k for the n-1 gaps
};

// The n smallest nonnegative beta-integers, enumerated as admissible digit
// strings in radix order (value order follows; never float-sorted): every
// suffix of a digit string must be lexicographically below (t_1..t_m).
// Requires parry_simple. Gap classification matches each consecutive
// difference to the nearest entry of the distance table
//   D_k = t_{k+1}/beta + ... + t_m/beta^(m-k)   (D_0 = 1)
// within 1e-9; table entries must be pairwise separated by 1e-6 and an
// ambiguous match raises PrecisionError rather than guessing.
BetaIntegerList beta_integers(const std::vector<int>& t, std::size_t n);

// First n gap letters against the first n letters of the substitution fixed
// point.
bool gap_word_matches_fixed_point(const std::vector<int>& t, std::size_t n);

std::string digits_to_string(const std::vector<int>& digits);

}  // namespace rwords
