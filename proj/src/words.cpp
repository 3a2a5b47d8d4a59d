#include "smlab/words.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace smlab {

namespace {

bool check_reduced(const std::vector<Letter>& letters) {
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (letters[i + 1] == letters[i].inverse()) return false;
  }
  return true;
}

void validate_letter(const Letter& l) {
  if (l.generator < 1) {
    throw std::invalid_argument("Letter: generator index must be >= 1, got " +
                                std::to_string(l.generator));
  }
  if (l.sign != 1 && l.sign != -1) {
    throw std::invalid_argument("Letter: sign must be +1 or -1, got " +
                                std::to_string(l.sign));
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const Letter& l : letters_) validate_letter(l);
  reduced_ = check_reduced(letters_);
}

Word Word::from_signed(const std::vector<int>& signed_letters) {
  std::vector<Letter> letters;
  letters.reserve(signed_letters.size());
  for (int s : signed_letters) {
    if (s == 0) throw std::invalid_argument("Word::from_signed: 0 is not a letter");
    letters.push_back(Letter{s > 0 ? s : -s, s > 0 ? 1 : -1});
  }
  return Word(std::move(letters));
}

Word Word::from_signed(std::initializer_list<int> signed_letters) {
  return from_signed(std::vector<int>(signed_letters));
}

std::vector<int> Word::to_signed() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) out.push_back(l.sign * l.generator);
  return out;
}

PositiveWord::PositiveWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int g : letters_) {
    if (g < 1) {
      throw std::invalid_argument(
          "PositiveWord: generator index must be >= 1, got " + std::to_string(g));
    }
  }
}

int PositiveWord::max_generator() const {
  int m = 0;
  for (int g : letters_) m = std::max(m, g);
  return m;
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

PositiveWord concat(const PositiveWord& a, const PositiveWord& b) {
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return PositiveWord(std::move(letters));
}

Word free_reduce(const Word& w) {
  if (w.is_reduced()) return w;
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

CyclicReduction cyclic_reduce(const Word& w) {
  if (!w.is_reduced()) {
    throw std::invalid_argument("cyclic_reduce: word must be freely reduced");
  }
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(w.letters().begin() + lo, w.letters().begin() + hi);
  std::vector<Letter> conj(w.letters().begin(), w.letters().begin() + lo);
  return CyclicReduction{Word(std::move(core)), Word(std::move(conj))};
}

bool is_cyclically_reduced(const Word& w) {
  if (!w.is_reduced()) return false;
  if (w.size() < 2) return true;
  return !(w[0] == w[w.size() - 1].inverse());
}

Word random_reduced_word(const Alphabet& alphabet, std::size_t length, Rng& rng) {
  if (alphabet.rank < 1) throw std::invalid_argument("random_reduced_word: rank must be >= 1");
  const int r = alphabet.rank;
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (i == 0) {
      const auto c = uniform_below(rng, 2 * static_cast<std::uint64_t>(r));
      letters.push_back(Letter{static_cast<int>(c / 2) + 1, (c % 2 == 0) ? 1 : -1});
    } else {
      const Letter banned = letters.back().inverse();
      auto c = uniform_below(rng, 2 * static_cast<std::uint64_t>(r) - 1);
      const auto banned_index =
          2 * static_cast<std::uint64_t>(banned.generator - 1) + (banned.sign < 0 ? 1 : 0);
      if (c >= banned_index) ++c;
      letters.push_back(Letter{static_cast<int>(c / 2) + 1, (c % 2 == 0) ? 1 : -1});
    }
  }
  return Word(std::move(letters));
}

PositiveWord random_positive_word(int alphabet_size, std::size_t length, Rng& rng) {
  if (alphabet_size < 1) {
    throw std::invalid_argument("random_positive_word: alphabet size must be >= 1");
  }
  std::vector<int> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    letters.push_back(static_cast<int>(uniform_below(rng, alphabet_size)) + 1);
  }
  return PositiveWord(std::move(letters));
}

Word random_contiguous_subword(const Word& w, std::size_t sublength, Rng& rng) {
  if (sublength > w.size()) {
    throw std::invalid_argument("random_contiguous_subword: sublength exceeds |w|");
  }
  const std::size_t start = uniform_index(rng, w.size() - sublength + 1);
  std::vector<Letter> letters(w.letters().begin() + start,
                              w.letters().begin() + start + sublength);
  return Word(std::move(letters));
}

NielsenMove random_nielsen_move(const Alphabet& alphabet, Rng& rng) {
  if (alphabet.rank < 2) {
    throw std::invalid_argument("random_nielsen_move: rank must be >= 2");
  }
  const std::uint64_t r = alphabet.rank;
  const std::uint64_t total = r + 2 * r * (r - 1);
  const std::uint64_t c = uniform_below(rng, total);
  if (c < r) {
    return NielsenMove{NielsenMove::Kind::Invert, static_cast<int>(c) + 1, 0, 1};
  }
  const std::uint64_t k = c - r;
  const int target = static_cast<int>(k / (2 * (r - 1))) + 1;
  const std::uint64_t rest = k % (2 * (r - 1));
  int other = static_cast<int>(rest / 2) + 1;
  if (other >= target) ++other;
  const int sign = (rest % 2 == 0) ? 1 : -1;
  return NielsenMove{NielsenMove::Kind::RightMultiply, target, other, sign};
}

Word apply_nielsen_move(const Word& w, const NielsenMove& move) {
  std::vector<Letter> out;
  out.reserve(2 * w.size());
  for (const Letter& l : w.letters()) {
    if (l.generator != move.target) {
      out.push_back(l);
      continue;
    }
    if (move.kind == NielsenMove::Kind::Invert) {
      out.push_back(l.inverse());
    } else if (l.sign > 0) {
      // x_t -> x_t x_o^s
      out.push_back(l);
      out.push_back(Letter{move.other, move.sign});
    } else {
      // x_t^{-1} -> x_o^{-s} x_t^{-1}
      out.push_back(Letter{move.other, -move.sign});
      out.push_back(l);
    }
  }
  return free_reduce(Word(std::move(out)));
}

Word apply_random_nielsen_moves(const Word& w, const Alphabet& alphabet,
                                int count, Rng& rng) {
  if (count < 0) throw std::invalid_argument("apply_random_nielsen_moves: count < 0");
  Word out = free_reduce(w);
  for (int i = 0; i < count; ++i) {
    out = apply_nielsen_move(out, random_nielsen_move(alphabet, rng));
  }
  return out;
}

std::vector<long long> abelianization(const Word& w, const Alphabet& alphabet) {
  std::vector<long long> counts(static_cast<std::size_t>(alphabet.rank), 0);
  for (const Letter& l : w.letters()) {
    if (l.generator > alphabet.rank) {
      throw std::invalid_argument("abelianization: letter outside alphabet");
    }
    counts[static_cast<std::size_t>(l.generator - 1)] += l.sign;
  }
  return counts;
}

}  // namespace smlab
