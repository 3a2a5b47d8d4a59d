#pragma once

#include <cstddef>
#include <vector>

namespace smlab::thompson {

/// Letters of the infinite presentation x_0, x_1, x_2, ... subject to
/// x_k x_i = x_i x_{k+1} for k > i.  Indices are 0-based; sign -1 denotes
/// the inverse letter.
struct Letter {
  int index = 0;
  int sign = 1;

  Letter inverse() const { return Letter{index, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  /// Positive letters only, given as indices.
  static Word positive(const std::vector<int>& indices);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b);
Word inverse(const Word& w);

/// Rectangular diagram with |w1| columns and |w2| rows.  horizontal[0] is
/// w1 (the bottom edge, left to right) and horizontal[row] for growing row
/// index moves upward; vertical[row][0] is letter `row` of w2 (the left
/// edge, bottom to top).  Cells are filled so that for each cell the path
/// left-then-top equals bottom-then-right in the group.
struct GridDiagram {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::vector<int>> horizontal;  // height+1 rows of width labels
  std::vector<std::vector<int>> vertical;    // height rows of width+1 labels
};

/// Output of the grid construction: z1 is the right edge (bottom to top),
/// z2 the top edge (left to right), and w1 z1 = w2 z2 holds in the group.
struct GridFill {
  std::vector<int> z1;
  std::vector<int> z2;
  GridDiagram diagram;
};

/// Common right multiple of two nonempty positive words, computed cell by
/// cell in O(|w1| * |w2|) from the defining relations.  The boundary
/// identity w1 z1 = w2 z2 is re-checked through normal_form before
/// returning.
GridFill grid_fill(const std::vector<int>& w1, const std::vector<int>& w2);

/// Unique non-decreasing word representing the same element of the
/// positive monoid: letters are inserted in order, and each letter passed
/// over is incremented (x_k x_i -> x_i x_{k+1} for k > i).
std::vector<int> positive_normal_form(std::vector<int> w);

/// Element written as positive_part * reverse(negative_part)^{-1}: both
/// parts are non-decreasing positive words, and no index i occurs in both
/// parts with i+1 absent from both.
struct TNormalForm {
  std::vector<int> positive_part;
  std::vector<int> negative_part;

  bool empty() const { return positive_part.empty() && negative_part.empty(); }
  friend bool operator==(const TNormalForm&, const TNormalForm&) = default;
};

TNormalForm normal_form(const Word& w);

/// The word spelled by a normal form.
Word word_of(const TNormalForm& nf);

/// Equality in the group, decided by comparing normal forms.
bool words_equal_in_F(const Word& a, const Word& b);

}  // namespace smlab::thompson
