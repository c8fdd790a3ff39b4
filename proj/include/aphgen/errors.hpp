#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aphgen {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed JSONL line (missing/unknown field, bad type). Lines are 1-based.
struct SchemaError : std::runtime_error {
  std::size_t line;
  SchemaError(std::size_t line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
};

struct EmptyInputError : std::runtime_error {
  EmptyInputError() : std::runtime_error("empty token sequence") {}
};

struct FillerLexiconEmpty : std::runtime_error {
  FillerLexiconEmpty()
      : std::runtime_error("filler insertion requested with empty filler lexicon") {}
};

struct PackMalformed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EndpointUnreachable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HttpError : std::runtime_error {
  int status;
  explicit HttpError(int status_)
      : std::runtime_error("HTTP status " + std::to_string(status_)), status(status_) {}
};

struct EmptyCompletion : std::runtime_error {
  EmptyCompletion() : std::runtime_error("endpoint returned an empty completion") {}
};

struct AllRequestsFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace aphgen
