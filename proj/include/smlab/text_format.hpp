#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smlab/words.hpp"

namespace smlab {

/// Parse failure for the text word format; token_index is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t token_index, const std::string& message)
      : std::runtime_error("token " + std::to_string(token_index) + ": " + message),
        token_index_(token_index) {}

  std::size_t token_index() const { return token_index_; }

 private:
  std::size_t token_index_;
};

/// One token of the text format: "12" -> {12, +1}, "-12" -> {12, -1}.
/// The sign is parsed from the leading '-' character, never numerically, so
/// "-0" denotes index 0 with negative sign (used by alphabets indexed from 0).
struct SignedToken {
  int index = 0;
  int sign = 1;

  friend bool operator==(const SignedToken&, const SignedToken&) = default;
};

/// Words are whitespace-separated tokens on one line.  An empty (or
/// whitespace-only) line is the empty word.
std::vector<SignedToken> parse_signed_tokens(std::string_view line);

std::string format_signed(const std::vector<int>& signed_letters);
std::string format_word(const Word& w);
std::string format_positive(const std::vector<int>& letters);
std::string format_positive(const PositiveWord& w);

}  // namespace smlab
