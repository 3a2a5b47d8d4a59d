#include "smlab/thompson.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace smlab::thompson {

namespace {

void validate_letter(const Letter& l) {
  if (l.index < 0) {
    throw std::invalid_argument("thompson::Letter: index must be >= 0, got " +
                                std::to_string(l.index));
  }
  if (l.sign != 1 && l.sign != -1) {
    throw std::invalid_argument("thompson::Letter: sign must be +1 or -1");
  }
}

void validate_positive(const std::vector<int>& w, const char* where) {
  for (int i : w) {
    if (i < 0) {
      throw std::invalid_argument(std::string(where) +
                                  ": index must be >= 0, got " + std::to_string(i));
    }
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const Letter& l : letters_) validate_letter(l);
}

Word Word::positive(const std::vector<int>& indices) {
  validate_positive(indices, "thompson::Word::positive");
  std::vector<Letter> letters;
  letters.reserve(indices.size());
  for (int i : indices) letters.push_back(Letter{i, 1});
  return Word(std::move(letters));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(letters));
}

Word inverse(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return Word(std::move(letters));
}

GridFill grid_fill(const std::vector<int>& w1, const std::vector<int>& w2) {
  validate_positive(w1, "grid_fill");
  validate_positive(w2, "grid_fill");
  if (w1.empty() || w2.empty()) {
    throw std::invalid_argument("grid_fill: both words must be nonempty");
  }
  const std::size_t m = w1.size();
  const std::size_t n = w2.size();

  GridDiagram grid;
  grid.width = m;
  grid.height = n;
  grid.horizontal.assign(n + 1, std::vector<int>(m, 0));
  grid.vertical.assign(n, std::vector<int>(m + 1, 0));
  grid.horizontal[0] = w1;
  for (std::size_t row = 0; row < n; ++row) grid.vertical[row][0] = w2[row];

  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < m; ++col) {
      const int b = grid.horizontal[row][col];
      const int l = grid.vertical[row][col];
      int t = 0;
      int r = 0;
      if (b == l) {
        t = b;
        r = b;
      } else if (b < l) {
        t = b;
        r = l + 1;  // x_l x_b = x_b x_{l+1}
      } else {
        t = b + 1;  // x_b x_l = x_l x_{b+1}
        r = l;
      }
      grid.horizontal[row + 1][col] = t;
      grid.vertical[row][col + 1] = r;
    }
  }

  GridFill fill;
  fill.z2 = grid.horizontal[n];
  fill.z1.reserve(n);
  for (std::size_t row = 0; row < n; ++row) fill.z1.push_back(grid.vertical[row][m]);
  fill.diagram = std::move(grid);

  if (!words_equal_in_F(concat(Word::positive(w1), Word::positive(fill.z1)),
                        concat(Word::positive(w2), Word::positive(fill.z2)))) {
    throw std::logic_error("grid_fill: boundary identity failed verification");
  }
  return fill;
}

std::vector<int> positive_normal_form(std::vector<int> w) {
  validate_positive(w, "positive_normal_form");
  std::vector<int> out;
  out.reserve(w.size());
  for (int x : w) {
    std::size_t p = out.size();
    while (p > 0 && out[p - 1] > x) --p;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(p), x);
    for (std::size_t q = p + 1; q < out.size(); ++q) ++out[q];
  }
  return out;
}

TNormalForm normal_form(const Word& w) {
  // Keep the word in the shape P * Q with P positive and Q a run of
  // inverse letters; each new positive letter is pushed left through Q
  // using x_a^{-1} x_b = x_{b+1} x_a^{-1} (a < b), = x_b x_{a+1}^{-1}
  // (a > b), = 1 (a == b).
  std::vector<int> pos;
  std::vector<int> neg;  // indices of trailing inverse letters, in word order
  for (const Letter& l : w.letters()) {
    if (l.sign < 0) {
      neg.push_back(l.index);
      continue;
    }
    int c = l.index;
    bool absorbed = false;
    for (std::size_t k = neg.size(); k-- > 0;) {
      if (neg[k] == c) {
        neg.erase(neg.begin() + static_cast<std::ptrdiff_t>(k));
        absorbed = true;
        break;
      }
      if (neg[k] < c) {
        ++c;  // passes the inverse letter unchanged
      } else {
        ++neg[k];  // inverse letter shifts up, c passes unchanged
      }
    }
    if (!absorbed) pos.push_back(c);
  }

  TNormalForm nf;
  nf.positive_part = positive_normal_form(std::move(pos));
  std::reverse(neg.begin(), neg.end());
  nf.negative_part = positive_normal_form(std::move(neg));

  // Cancel pairs x_i, x_i^{-1} whenever index i appears in both parts but
  // i+1 in neither: the letters between them have indices >= i+2, and
  // x_i x_m x_i^{-1} = x_{m-1} for such m, so removing the pair shifts the
  // enclosed letters down by one.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pi = 0; pi < nf.positive_part.size() && !changed; ++pi) {
      const int i = nf.positive_part[pi];
      // within the sorted part, take the last occurrence of i
      if (pi + 1 < nf.positive_part.size() && nf.positive_part[pi + 1] == i) continue;
      if (std::binary_search(nf.positive_part.begin(), nf.positive_part.end(), i + 1)) continue;
      if (std::binary_search(nf.negative_part.begin(), nf.negative_part.end(), i + 1)) continue;
      const auto nit =
          std::lower_bound(nf.negative_part.begin(), nf.negative_part.end(), i);
      if (nit == nf.negative_part.end() || *nit != i) continue;
      auto last_n = nit;
      while (last_n + 1 != nf.negative_part.end() && *(last_n + 1) == i) ++last_n;

      nf.positive_part.erase(nf.positive_part.begin() + static_cast<std::ptrdiff_t>(pi));
      for (std::size_t q = pi; q < nf.positive_part.size(); ++q) --nf.positive_part[q];
      const auto nidx = static_cast<std::size_t>(last_n - nf.negative_part.begin());
      nf.negative_part.erase(last_n);
      for (std::size_t q = nidx; q < nf.negative_part.size(); ++q) --nf.negative_part[q];
      changed = true;
    }
  }
  return nf;
}

Word word_of(const TNormalForm& nf) {
  std::vector<Letter> letters;
  letters.reserve(nf.positive_part.size() + nf.negative_part.size());
  for (int i : nf.positive_part) letters.push_back(Letter{i, 1});
  for (auto it = nf.negative_part.rbegin(); it != nf.negative_part.rend(); ++it) {
    letters.push_back(Letter{*it, -1});
  }
  return Word(std::move(letters));
}

bool words_equal_in_F(const Word& a, const Word& b) {
  return normal_form(a) == normal_form(b);
}

}  // namespace smlab::thompson
