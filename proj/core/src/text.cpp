#include "adapteval/text.hpp"

#include <cctype>

namespace adapteval::text {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one UTF-8 codepoint at `i`, advancing `i`. Malformed bytes decode
// to U+FFFD one byte at a time so segmentation never throws.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto byte = [&](std::size_t k) -> unsigned {
    return static_cast<unsigned char>(s[k]);
  };
  unsigned b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return kReplacement;
  }
  if (i + static_cast<std::size_t>(len) > s.size()) {
    ++i;
    return kReplacement;
  }
  for (int k = 1; k < len; ++k) {
    unsigned b = byte(i + static_cast<std::size_t>(k));
    if ((b & 0xC0) != 0x80) {
      ++i;
      return kReplacement;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += static_cast<std::size_t>(len);
  return cp;
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

// Non-ASCII codepoints that break words: Unicode whitespace plus the common
// punctuation/symbol blocks. Everything else above 0x7F counts as a letter,
// which keeps accented and non-Latin script words intact without carrying
// full Unicode property tables.
bool is_nonascii_separator(char32_t cp) {
  switch (cp) {
    case 0x85:    // NEL
    case 0xA0:    // NBSP
    case 0xD7:    // multiplication sign
    case 0xF7:    // division sign
    case 0x1680:  // ogham space
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
    case 0xFEFF:
    case kReplacement:
      return true;
    default:
      break;
  }
  return in(cp, 0xA1, 0xBF) ||      // Latin-1 punctuation and symbols
         in(cp, 0x2000, 0x200F) ||  // spaces, zero-width marks
         in(cp, 0x2010, 0x2027) ||  // dashes, quotes, bullets (not U+2019)
         in(cp, 0x2030, 0x205E) ||  // per-mille .. punctuation
         in(cp, 0x2060, 0x206F) || in(cp, 0x20A0, 0x20CF) ||  // currency
         in(cp, 0x2190, 0x2BFF) ||  // arrows, math, box drawing, symbols
         in(cp, 0x2E00, 0x2E7F) || in(cp, 0x3001, 0x303F) ||
         in(cp, 0xFE30, 0xFE6F) || in(cp, 0xFF01, 0xFF0F) ||
         in(cp, 0xFF1A, 0xFF20) || in(cp, 0xFF3B, 0xFF40) ||
         in(cp, 0xFF5B, 0xFF65);
}

bool is_word_cp(char32_t cp) {
  if (cp < 0x80) {
    return std::isalnum(static_cast<unsigned char>(cp)) != 0;
  }
  if (cp == 0x2019) return false;  // handled as apostrophe
  return !is_nonascii_separator(cp);
}

bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

char32_t lower_cp(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1
  return cp;
}

}  // namespace

std::vector<std::string> segment_words(std::string_view input) {
  std::vector<std::string> words;
  std::string current;
  bool all_digits = true;

  const auto flush = [&] {
    if (!current.empty() && !all_digits) words.push_back(current);
    current.clear();
    all_digits = true;
  };

  std::size_t i = 0;
  while (i < input.size()) {
    std::size_t at = i;
    char32_t cp = decode_utf8(input, i);
    if (is_word_cp(cp)) {
      char32_t lc = lower_cp(cp);
      if (lc > 0x7F || !std::isdigit(static_cast<int>(lc))) all_digits = false;
      encode_utf8(lc, current);
      continue;
    }
    if (is_apostrophe(cp) && !current.empty()) {
      // Keep the apostrophe only when a word character follows directly.
      std::size_t peek = i;
      if (peek < input.size() && is_word_cp(decode_utf8(input, peek))) {
        current.push_back('\'');  // curly quotes normalized to ASCII
        all_digits = false;
        continue;
      }
    }
    (void)at;
    flush();
  }
  flush();
  return words;
}

std::size_t count_words(std::string_view input) {
  return segment_words(input).size();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::string lowercase(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  std::size_t i = 0;
  while (i < word.size()) {
    encode_utf8(lower_cp(decode_utf8(word, i)), out);
  }
  return out;
}

}  // namespace adapteval::text
