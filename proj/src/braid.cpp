#include "smlab/braid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <list>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace smlab::braid {

namespace {

std::size_t ceil_sqrt(std::size_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r >= n && r > 0) --r;
  while (r * r < n) ++r;
  return r;
}

}  // namespace

Word::Word(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) {
    throw std::invalid_argument("braid::Word: strands must be >= 2");
  }
  for (int l : letters_) {
    if (l < 1 || l >= strands_) {
      throw std::invalid_argument("braid::Word: letter s_" + std::to_string(l) +
                                  " outside generator range [1, " +
                                  std::to_string(strands_ - 1) + "]");
    }
  }
}

ReversingBudgetError::ReversingBudgetError(std::vector<int> partial, std::size_t steps)
    : BudgetError("subword reversing exceeded its step budget after " +
                  std::to_string(steps) + " steps"),
      partial_(std::move(partial)),
      steps_(steps) {}

ReversingResult subword_reversing(const Word& w1, const Word& w2,
                                  std::size_t step_budget) {
  if (w1.strands() != w2.strands()) {
    throw std::invalid_argument("subword_reversing: words must share a strand count");
  }
  const int strands = w1.strands();

  // Signed letters, negative for inverses: the word starts as w1^{-1} w2.
  std::list<int> word;
  for (auto it = w1.letters().rbegin(); it != w1.letters().rend(); ++it) {
    word.push_back(-*it);
  }
  word.insert(word.end(), w2.letters().begin(), w2.letters().end());

  ReversingResult result;
  std::size_t length = word.size();
  result.max_intermediate_length = length;

  auto cur = word.begin();
  while (cur != word.end()) {
    auto next = std::next(cur);
    if (next == word.end()) break;
    if (!(*cur < 0 && *next > 0)) {
      ++cur;
      continue;
    }
    if (result.steps == step_budget) {
      throw ReversingBudgetError(std::vector<int>(word.begin(), word.end()),
                                 result.steps);
    }
    ++result.steps;
    const int i = -*cur;
    const int j = *next;
    const bool has_prev = cur != word.begin();
    const auto prev = has_prev ? std::prev(cur) : word.end();
    const auto after = std::next(next);
    word.erase(cur, after);
    if (i == j) {
      length -= 2;
    } else if (std::abs(i - j) >= 2) {
      word.insert(after, {j, -i});
    } else {
      word.insert(after, {j, i, -j, -i});
      length += 2;
    }
    result.max_intermediate_length = std::max(result.max_intermediate_length, length);
    // Only the pair straddling the rewritten span can form a new leftmost
    // factor; resume one position before it.
    cur = has_prev ? prev : word.begin();
  }

  std::vector<int> positive;
  std::vector<int> negative;
  bool in_negative = false;
  for (int l : word) {
    if (l > 0) {
      if (in_negative) {
        throw std::logic_error("subword_reversing: result is not positive-negative");
      }
      positive.push_back(l);
    } else {
      in_negative = true;
      negative.push_back(-l);
    }
  }
  std::reverse(negative.begin(), negative.end());
  result.u = Word(strands, std::move(positive));
  result.v = Word(strands, std::move(negative));
  return result;
}

Word odd_pattern(int m, int strands) {
  if (m < 1) throw std::invalid_argument("odd_pattern: m must be >= 1");
  if (strands < 2 * m) {
    throw std::invalid_argument("odd_pattern: needs at least 2m strands");
  }
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(m));
  for (int t = 1; t <= m; ++t) letters.push_back(2 * t - 1);
  return Word(strands, std::move(letters));
}

Word even_pattern(int m, int strands) {
  if (m < 1) throw std::invalid_argument("even_pattern: m must be >= 1");
  if (strands < 2 * m + 1) {
    throw std::invalid_argument("even_pattern: needs at least 2m+1 strands");
  }
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(m));
  for (int t = m; t >= 1; --t) letters.push_back(2 * t);
  return Word(strands, std::move(letters));
}

PatternDetection pattern_prefix_detect(const Word& a, const Word& b,
                                       std::optional<int> max_k) {
  PatternDetection det;
  if (a.empty() || b.empty()) return det;
  const int a0 = a[0];
  const int b0 = b[0];
  det.letters_read = 2;

  const Word* odd = nullptr;
  const Word* even = nullptr;
  int k = 0;
  if (a0 == 1 && b0 >= 2 && b0 % 2 == 0) {
    odd = &a;
    even = &b;
    k = b0 / 2;
  } else if (b0 == 1 && a0 >= 2 && a0 % 2 == 0) {
    odd = &b;
    even = &a;
    k = a0 / 2;
  } else {
    return det;
  }
  if (max_k && k > *max_k) return det;
  if (odd->size() < static_cast<std::size_t>(k) ||
      even->size() < static_cast<std::size_t>(k)) {
    return det;
  }
  for (int t = 2; t <= k; ++t) {
    det.letters_read += 1;
    if ((*odd)[static_cast<std::size_t>(t - 1)] != 2 * t - 1) return det;
    det.letters_read += 1;
    if ((*even)[static_cast<std::size_t>(t - 1)] != 2 * (k - t + 1)) return det;
  }
  det.k = k;
  return det;
}

BraidVerdict sublinear_braid_inequality_test(const Word& a, const Word& b) {
  if (a.strands() != b.strands()) {
    throw std::invalid_argument(
        "sublinear_braid_inequality_test: words must share a strand count");
  }
  BraidVerdict verdict;
  if (a.size() != b.size()) {
    verdict.kind = BraidVerdictKind::NotEqual;  // relations preserve length
    return verdict;
  }
  const std::size_t L = a.size();
  if (L == 0) return verdict;

  const auto cap = static_cast<int>(ceil_sqrt(L));
  const PatternDetection det = pattern_prefix_detect(a, b, cap);
  verdict.letters_read = det.letters_read;
  if (det.k) {
    verdict.pattern_k = *det.k;
    const auto k = static_cast<std::size_t>(*det.k);
    if (L - k < 2 * k * k) verdict.kind = BraidVerdictKind::NotEqual;
  }
  return verdict;
}

bool bruteforce_braid_equal(const Word& a, const Word& b, std::size_t class_budget) {
  if (a.strands() != b.strands()) {
    throw std::invalid_argument("bruteforce_braid_equal: words must share a strand count");
  }
  if (a.strands() > 120) {
    throw std::invalid_argument("bruteforce_braid_equal: strand count too large");
  }
  if (a.size() != b.size()) return false;
  if (a.letters() == b.letters()) return true;

  const auto encode = [](const std::vector<int>& letters) {
    std::string s;
    s.reserve(letters.size());
    for (int l : letters) s.push_back(static_cast<char>(l));
    return s;
  };
  const std::string target = encode(b.letters());

  std::unordered_set<std::string> visited;
  std::deque<std::string> queue;
  std::string start = encode(a.letters());
  visited.insert(start);
  queue.push_back(std::move(start));

  while (!queue.empty()) {
    const std::string w = std::move(queue.front());
    queue.pop_front();
    const auto try_push = [&](std::string&& next) -> bool {
      if (next == target) return true;
      if (visited.insert(next).second) {
        if (visited.size() > class_budget) {
          throw BudgetError("bruteforce_braid_equal: equivalence class exceeds budget of " +
                            std::to_string(class_budget) + " words");
        }
        queue.push_back(std::move(next));
      }
      return false;
    };
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (std::abs(w[p] - w[p + 1]) >= 2) {
        std::string next = w;
        std::swap(next[p], next[p + 1]);
        if (try_push(std::move(next))) return true;
      }
      if (p + 2 < w.size() && w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
        std::string next = w;  // s_i s_j s_i -> s_j s_i s_j
        next[p] = w[p + 1];
        next[p + 1] = w[p];
        next[p + 2] = w[p + 1];
        if (try_push(std::move(next))) return true;
      }
    }
  }
  return false;
}

std::vector<ProfileRow> staircase_length_profile(int m_max, int strands,
                                                   std::size_t step_budget) {
  if (m_max < 1) throw std::invalid_argument("staircase_length_profile: m_max must be >= 1");
  if (strands != 0 && strands < 2 * m_max + 1) {
    throw std::invalid_argument("staircase_length_profile: the m_max pattern needs " +
                                std::to_string(2 * m_max + 1) + " strands");
  }
  std::vector<ProfileRow> rows;
  rows.reserve(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    const int n = strands == 0 ? 2 * m + 1 : strands;
    const ReversingResult res =
        subword_reversing(odd_pattern(m, n), even_pattern(m, n), step_budget);
    rows.push_back(ProfileRow{m, res.u.size(), res.v.size(), res.steps});
  }
  return rows;
}

}  // namespace smlab::braid
