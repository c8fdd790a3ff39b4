#include "aphgen/text.hpp"

#include <cctype>

namespace aphgen {

namespace {

bool is_letter(unsigned char c) {
  // Bytes >= 0x80 belong to multi-byte UTF-8 sequences; treat them as letters
  // so non-ASCII words survive tokenization intact.
  return std::isalpha(c) || c >= 0x80;
}

bool is_word_char(unsigned char c) { return is_letter(c) || std::isdigit(c); }

// Removes bracketed annotations like "[rep]" (meta-markup, not speech).
std::string strip_annotations(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  int depth = 0;
  for (char c : text) {
    if (c == '[') {
      ++depth;
    } else if (c == ']') {
      if (depth > 0) --depth;
    } else if (depth == 0) {
      out.push_back(c);
    }
  }
  return out;
}

void flush_token(std::string& current, TokenSeq& out) {
  // Trailing apostrophes/hyphens are surrounding punctuation, not internal.
  while (!current.empty() && (current.back() == '\'' || current.back() == '-'))
    current.pop_back();
  if (!current.empty()) {
    bool has_letter = false;
    for (unsigned char c : current)
      if (is_letter(c)) { has_letter = true; break; }
    if (has_letter) out.push_back(current);
  }
  current.clear();
}

}  // namespace

TokenSeq tokenize(std::string_view text) {
  std::string clean = strip_annotations(text);
  TokenSeq out;
  std::string current;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(clean[i]);
    if (is_word_char(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if ((c == '\'' || c == '-') && !current.empty()) {
      // Internal apostrophe/hyphen: kept only when followed by a word char.
      if (i + 1 < clean.size() && is_word_char(static_cast<unsigned char>(clean[i + 1]))) {
        current.push_back(static_cast<char>(c));
      } else {
        flush_token(current, out);
      }
    } else {
      flush_token(current, out);
    }
  }
  flush_token(current, out);
  return out;
}

std::vector<Sentence> split_sentences(std::string_view text) {
  std::vector<Sentence> out;
  std::string fragment;
  auto emit = [&](bool terminal) {
    Sentence s{tokenize(fragment), terminal};
    if (!s.tokens.empty()) out.push_back(std::move(s));
    fragment.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      std::size_t run = 1;
      while (i + run < text.size() && text[i + run] == '.') ++run;
      if (run >= 2) {
        // Ellipsis: not a sentence boundary.
        fragment.append(run, '.');
      } else {
        emit(true);
      }
      i += run - 1;
    } else if (c == '!' || c == '?') {
      emit(true);
    } else {
      fragment.push_back(c);
    }
  }
  emit(false);
  return out;
}

std::string join_tokens(const TokenSeq& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace aphgen
