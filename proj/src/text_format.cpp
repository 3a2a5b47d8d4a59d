#include "smlab/text_format.hpp"

#include <cctype>
#include <charconv>

namespace smlab {

std::vector<SignedToken> parse_signed_tokens(std::string_view line) {
  std::vector<SignedToken> out;
  std::size_t pos = 0;
  std::size_t token_index = 0;
  while (pos < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) {
      ++end;
    }
    ++token_index;
    std::string_view token = line.substr(pos, end - pos);
    pos = end;

    SignedToken st;
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '-') {
      st.sign = -1;
      digits.remove_prefix(1);
    }
    if (digits.empty()) {
      throw ParseError(token_index, "expected an integer, got \"" + std::string(token) + "\"");
    }
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError(token_index,
                         "expected an integer, got \"" + std::string(token) + "\"");
      }
    }
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), st.index);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError(token_index, "integer out of range: \"" + std::string(token) + "\"");
    }
    out.push_back(st);
  }
  return out;
}

std::string format_signed(const std::vector<int>& signed_letters) {
  std::string out;
  for (std::size_t i = 0; i < signed_letters.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(signed_letters[i]);
  }
  return out;
}

std::string format_word(const Word& w) { return format_signed(w.to_signed()); }

std::string format_positive(const std::vector<int>& letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(letters[i]);
  }
  return out;
}

std::string format_positive(const PositiveWord& w) {
  return format_positive(w.letters());
}

}  // namespace smlab
