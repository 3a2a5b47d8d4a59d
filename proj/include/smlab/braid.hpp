#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "smlab/errors.hpp"

namespace smlab::braid {

/// A positive word in the braid monoid on `strands` strands: letters are
/// generator indices in [1, strands-1].
class Word {
 public:
  Word() = default;
  Word(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int strands_ = 2;
  std::vector<int> letters_;
};

inline constexpr std::size_t kDefaultStepBudget = std::size_t{1} << 24;
inline constexpr std::size_t kDefaultClassBudget = std::size_t{1} << 22;

/// Thrown when reversing exceeds its step budget; carries the partially
/// reversed word (signed letters, negative = inverse) for diagnostics.
class ReversingBudgetError : public BudgetError {
 public:
  ReversingBudgetError(std::vector<int> partial, std::size_t steps);

  const std::vector<int>& partial() const { return partial_; }
  std::size_t steps() const { return steps_; }

 private:
  std::vector<int> partial_;
  std::size_t steps_;
};

/// Positive words u, v with w1 u = w2 v, found by reversing the signed word
/// w1^{-1} w2: the leftmost factor s_i^{-1} s_j is repeatedly replaced by
/// the equivalent positive-then-negative form (empty for i == j, s_j
/// s_i^{-1} for |i-j| >= 2, s_j s_i s_j^{-1} s_i^{-1} for |i-j| == 1)
/// until the word is a positive prefix followed by a negative suffix.
struct ReversingResult {
  Word u;
  Word v;
  std::size_t steps = 0;
  std::size_t max_intermediate_length = 0;
};

ReversingResult subword_reversing(const Word& w1, const Word& w2,
                                  std::size_t step_budget = kDefaultStepBudget);

/// The complementary staircase prefixes: odd_pattern(m) = s_1 s_3 ... s_{2m-1}
/// (needs strands >= 2m), even_pattern(m) = s_{2m} s_{2m-2} ... s_2 (needs
/// strands >= 2m+1).  Reversing one against the other yields completions of
/// length exactly 2m^2.
Word odd_pattern(int m, int strands);
Word even_pattern(int m, int strands);

/// Looks for a k such that one word starts with odd_pattern(k) and the
/// other with even_pattern(k).  The first letters force the only possible
/// k, so at most 2k letters are inspected; candidates above max_k are not
/// pursued.  letters_read counts the positions actually compared.
struct PatternDetection {
  std::optional<int> k;
  std::size_t letters_read = 0;
};
PatternDetection pattern_prefix_detect(const Word& a, const Word& b,
                                       std::optional<int> max_k = std::nullopt);

enum class BraidVerdictKind { NotEqual, Inconclusive };

struct BraidVerdict {
  BraidVerdictKind kind = BraidVerdictKind::Inconclusive;
  /// Staircase parameter the verdict is based on; 0 when none was found.
  int pattern_k = 0;
  std::size_t letters_read = 0;
};

/// Sublinear inequality test for same-strand positive words.  Words of
/// different lengths are never equal (the relations preserve length).  For
/// equal lengths L it looks for staircase prefixes with k <= ceil(sqrt(L));
/// when found, any common multiple of the two patterns has length at least
/// k + 2k^2, so L - k < 2k^2 forces NotEqual.  Reads at most
/// 2*(ceil(sqrt(L)) + 1) letters.
BraidVerdict sublinear_braid_inequality_test(const Word& a, const Word& b);

/// Decides equality by breadth-first closure under the braid relations
/// (adjacent-generator moves applied in place).  Throws BudgetError when
/// the equivalence class exceeds class_budget words.
bool bruteforce_braid_equal(const Word& a, const Word& b,
                            std::size_t class_budget = kDefaultClassBudget);

/// Reversing lengths for the staircase pairs m = 1..m_max.  strands 0
/// means the minimal 2m+1 per row; an explicit strand count must be at
/// least 2*m_max+1 (the even pattern uses generator index 2m).
struct ProfileRow {
  int m = 0;
  std::size_t len_u = 0;
  std::size_t len_v = 0;
  std::size_t steps = 0;
};
std::vector<ProfileRow> staircase_length_profile(
    int m_max, int strands = 0, std::size_t step_budget = kDefaultStepBudget);

}  // namespace smlab::braid
