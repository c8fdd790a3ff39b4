#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace aphgen {

// A token is a normalized lowercase word: no surrounding punctuation, internal
// apostrophes and hyphens preserved, at least one letter.
using Token = std::string;
using TokenSeq = std::vector<Token>;

struct Sentence {
  TokenSeq tokens;
  bool terminal = true;  // ended with . ! ? in the source text
};

// Lowercases, strips surrounding punctuation, drops punctuation-only fragments
// and bracketed annotations like "[rep]". Order preserved. Empty input -> empty.
TokenSeq tokenize(std::string_view text);

// Splits on sentence-final . ! ? (ellipses "..." do not split). Sentences that
// tokenize to nothing are discarded.
std::vector<Sentence> split_sentences(std::string_view text);

std::string join_tokens(const TokenSeq& tokens);

}  // namespace aphgen
