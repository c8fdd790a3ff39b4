#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "aphgen/record.hpp"

namespace aphgen {

struct SplitSpec {
  double train_fraction = 0.8;
  double val_fraction = 0.1;
  double test_fraction = 0.1;
  std::uint64_t split_seed = 0;

  void validate() const;  // fractions positive, sum == 1 within 1e-9
};

struct SplitResult {
  std::vector<TranscriptRecord> train;
  std::vector<TranscriptRecord> val;
  std::vector<TranscriptRecord> test;
};

// One JSON object per line, UTF-8. Field names and order:
// id, method, model, severity, template_id, seed, transcript,
// word_count, ciu_count, ciu_percentage, created_at.
void write_jsonl(const std::vector<TranscriptRecord>& records, const std::string& path);
std::vector<TranscriptRecord> read_jsonl(const std::string& path);

std::string record_to_json_line(const TranscriptRecord& record);
TranscriptRecord record_from_json_line(const std::string& line, std::size_t line_no);

// Header row plus one row per record, same field order as JSONL, RFC 4180
// quoting for fields containing commas/quotes/newlines.
void write_csv(const std::vector<TranscriptRecord>& records, const std::string& path);

// Stratified by severity: within each severity records are shuffled by a hash
// of (record id, split_seed), then partitioned with largest-remainder
// rounding. Invariant to input record order.
SplitResult split_corpus(const std::vector<TranscriptRecord>& records, const SplitSpec& spec);

}  // namespace aphgen
