#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

#include "smlab/words.hpp"

namespace smlab::nilpotent {

using BigInt = boost::multiprecision::cpp_int;

/// Noncommuting monomial X_{i_1} ... X_{i_d}; generator indices 1-based.
struct Monomial {
  std::vector<int> indices;

  int degree() const { return static_cast<int>(indices.size()); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline constexpr std::size_t kDefaultTableBudget = std::size_t{1} << 20;

/// Image of a positive word under x_i -> 1 + X_i in the power-series ring
/// on noncommuting X_1..X_r, truncated beyond the degree bound.  The
/// coefficient of X_{i_1}...X_{i_d} counts scattered occurrences of the
/// subsequence x_{i_1}...x_{i_d}; coefficients are exact integers.
class MagnusSeries {
 public:
  MagnusSeries(int rank, int degree_bound, std::vector<std::vector<BigInt>> slices);

  int rank() const { return rank_; }
  int degree_bound() const { return degree_bound_; }

  const BigInt& coefficient(const Monomial& m) const;
  /// Dense row of all r^d coefficients of degree d, indexed by the base-r
  /// digits of the monomial (most significant digit first).
  const std::vector<BigInt>& degree_slice(int d) const;

  friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;

 private:
  int rank_;
  int degree_bound_;
  std::vector<std::vector<BigInt>> slices_;
};

/// One pass of dynamic programming over the letters of w; O(|w| * r^c)
/// coefficient updates for bound c.  rank 0 means "infer from w" (at least
/// 1).  Throws BudgetError if the dense tables would exceed table_budget
/// total entries.
MagnusSeries magnus_truncated(const PositiveWord& w, int degree_bound, int rank = 0,
                              std::size_t table_budget = kDefaultTableBudget);

struct McResult {
  bool equal = true;
  /// Lowest-degree, lexicographically first monomial whose coefficients
  /// differ; absent when equal.
  std::optional<Monomial> first_discrepant_monomial;
  int degrees_checked = 0;
};

/// Decides whether w1 and w2 have the same image in the free nilpotent
/// group of class c (c >= 1): for positive words this holds iff all
/// coefficients agree through degree c.  Degrees are compared in ascending
/// order with early exit on the first discrepancy.
McResult mc_equal_detail(const PositiveWord& w1, const PositiveWord& w2, int c,
                         std::size_t table_budget = kDefaultTableBudget);
bool mc_equal(const PositiveWord& w1, const PositiveWord& w2, int c,
              std::size_t table_budget = kDefaultTableBudget);

/// Doubling sequence u <- u v, v <- v u starting from (u_0, v_0) = (w1, w2).
/// The stage-c pair satisfies mc_equal(u, v, c), with
/// |u| = |v| = (|w1| + |w2|) * 2^(c-1).  Requires w1, w2 nonempty, c >= 1.
struct MalcevPair {
  PositiveWord u;
  PositiveWord v;
  /// Number of doubling steps applied; (w1, w2) is stage 0.
  int stage = 0;
};
MalcevPair malcev_sequence(const PositiveWord& w1, const PositiveWord& w2, int c,
                           std::size_t length_budget = std::size_t{1} << 22);

/// Suffixes z1, z2 with w1 z1 = u_c and w2 z2 = v_c, so w1 z1 and w2 z2
/// coincide in the class-c quotient.  The witness is re-verified with
/// mc_equal before returning.
struct CommonMultipleWitness {
  PositiveWord z1;
  PositiveWord z2;
};
CommonMultipleWitness common_multiple_witness(const PositiveWord& w1,
                                              const PositiveWord& w2, int c);

/// Letter counts per generator; index g-1 counts x_g.  Letters above rank
/// are rejected.  Agrees with degree-1 coefficients of the series.
std::vector<long long> abelianization_oracle(const PositiveWord& w, int rank);

/// Image of a positive word over x_1, x_2 in the integral Heisenberg group:
/// x_1 -> I + E_12, x_2 -> I + E_23.  Two such words have equal images here
/// iff they are equal in the free class-2 quotient on two generators.
std::array<std::array<long long, 3>, 3> heisenberg_oracle(const PositiveWord& w);

}  // namespace smlab::nilpotent
