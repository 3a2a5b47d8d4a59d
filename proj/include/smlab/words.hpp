#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "smlab/rng.hpp"

namespace smlab {

/// Generators of a free group are x_1, ..., x_rank.
struct Alphabet {
  int rank = 2;
};

/// One letter of a group word: x_g (sign +1) or x_g^{-1} (sign -1),
/// generator indices 1-based.
struct Letter {
  int generator = 1;
  int sign = 1;

  Letter inverse() const { return Letter{generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word over a free group basis.  Letters are stored verbatim; whether the
/// sequence happens to be freely reduced is tracked so operations with a
/// reducedness precondition can check it in O(1).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  /// Convenience: +g means x_g, -g means x_g^{-1}.  Zero is rejected.
  static Word from_signed(const std::vector<int>& signed_letters);
  static Word from_signed(std::initializer_list<int> signed_letters);
  std::vector<int> to_signed() const;

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// True when no adjacent pair of letters cancels.
  bool is_reduced() const { return reduced_; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  bool reduced_ = true;
};

/// A word in a free monoid: generator indices only, no inverses.
class PositiveWord {
 public:
  PositiveWord() = default;
  explicit PositiveWord(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  int max_generator() const;

  friend bool operator==(const PositiveWord&, const PositiveWord&) = default;

 private:
  std::vector<int> letters_;
};

Word concat(const Word& a, const Word& b);
Word inverse(const Word& w);
PositiveWord concat(const PositiveWord& a, const PositiveWord& b);

/// Cancels adjacent inverse pairs until none remain.  The result is the
/// unique freely reduced representative; O(|w|).
Word free_reduce(const Word& w);

/// Splits a freely reduced w as conjugator * core * conjugator^{-1} with the
/// core cyclically reduced.  Requires w.is_reduced().
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

/// Uniform sample from the sphere of freely reduced words of exactly the
/// given length: first letter uniform over 2r choices, each subsequent letter
/// uniform over the 2r-1 non-cancelling ones.
Word random_reduced_word(const Alphabet& alphabet, std::size_t length, Rng& rng);

/// Uniform sample from the k^length positive words of the given length over
/// generators x_1..x_k.
PositiveWord random_positive_word(int alphabet_size, std::size_t length, Rng& rng);

/// Uniformly positioned contiguous subword of the given length.
/// Requires sublength <= |w|.
Word random_contiguous_subword(const Word& w, std::size_t sublength, Rng& rng);

/// An elementary Nielsen move on the basis x_1..x_r: either invert one
/// generator, or replace x_target by x_target * x_other^{sign} (other !=
/// target).  Applying a move to a word substitutes the image of each letter
/// and freely reduces.
struct NielsenMove {
  enum class Kind { Invert, RightMultiply };
  Kind kind = Kind::Invert;
  int target = 1;
  int other = 0;   // RightMultiply only
  int sign = 1;    // RightMultiply only
};

/// Uniform over the r + 2r(r-1) elementary moves.
NielsenMove random_nielsen_move(const Alphabet& alphabet, Rng& rng);

Word apply_nielsen_move(const Word& w, const NielsenMove& move);

/// Image of w under `count` random elementary moves in sequence.  Applied to
/// a basis letter this samples a primitive element.
Word apply_random_nielsen_moves(const Word& w, const Alphabet& alphabet,
                                int count, Rng& rng);

/// Exponent-sum vector of w: entry g-1 counts x_g occurrences minus
/// x_g^{-1} occurrences.
std::vector<long long> abelianization(const Word& w, const Alphabet& alphabet);

}  // namespace smlab
