#include "aphgen/corpus_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <tuple>

#include <json.hpp>

#include "aphgen/errors.hpp"
#include "aphgen/rng.hpp"

namespace aphgen {

namespace {

// Field order is part of the file contract; ordered_json keeps insertion order.
using ojson = nlohmann::ordered_json;

const char* kFields[] = {"id",         "method",     "model",     "severity",
                         "template_id", "seed",       "transcript", "word_count",
                         "ciu_count",  "ciu_percentage", "created_at"};

ojson to_json(const TranscriptRecord& r) {
  ojson j;
  j["id"] = r.id;
  j["method"] = r.method;
  j["model"] = r.model ? ojson(*r.model) : ojson(nullptr);
  j["severity"] = to_string(r.severity);
  j["template_id"] = r.template_id ? ojson(*r.template_id) : ojson(nullptr);
  j["seed"] = r.seed ? ojson(*r.seed) : ojson(nullptr);
  j["transcript"] = r.transcript;
  j["word_count"] = r.word_count;
  j["ciu_count"] = r.ciu_count;
  j["ciu_percentage"] = r.ciu_percentage;
  j["created_at"] = r.created_at;
  return j;
}

TranscriptRecord from_json(const ojson& j, std::size_t line_no) {
  for (const char* field : kFields)
    if (!j.contains(field)) throw SchemaError(line_no, std::string("missing field \"") + field + "\"");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find_if(std::begin(kFields), std::end(kFields),
                     [&](const char* f) { return key == f; }) == std::end(kFields))
      throw SchemaError(line_no, "unknown field \"" + key + "\"");
  }
  TranscriptRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    r.method = j.at("method").get<std::string>();
    if (!j.at("model").is_null()) r.model = j.at("model").get<std::string>();
    auto sev = parse_severity(j.at("severity").get<std::string>());
    if (!sev) throw SchemaError(line_no, "unknown severity \"" + j.at("severity").get<std::string>() + "\"");
    r.severity = *sev;
    if (!j.at("template_id").is_null()) r.template_id = j.at("template_id").get<int>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    r.transcript = j.at("transcript").get<std::string>();
    r.word_count = j.at("word_count").get<std::size_t>();
    r.ciu_count = j.at("ciu_count").get<std::size_t>();
    r.ciu_percentage = j.at("ciu_percentage").get<double>();
    r.created_at = j.at("created_at").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(line_no, e.what());
  }
  return r;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_double(double v) {
  // Shortest round-trip representation, same as the JSON writer.
  return ojson(v).dump();
}

}  // namespace

void SplitSpec::validate() const {
  if (train_fraction <= 0.0 || val_fraction < 0.0 || test_fraction < 0.0)
    throw ConfigError("split fractions must be positive");
  double sum = train_fraction + val_fraction + test_fraction;
  if (std::fabs(sum - 1.0) > 1e-9)
    throw ConfigError("split fractions must sum to 1.0, got " + std::to_string(sum));
}

std::string record_to_json_line(const TranscriptRecord& record) {
  return to_json(record).dump();
}

TranscriptRecord record_from_json_line(const std::string& line, std::size_t line_no) {
  ojson j = ojson::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw SchemaError(line_no, "not a JSON object");
  return from_json(j, line_no);
}

void write_jsonl(const std::vector<TranscriptRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  for (const auto& r : records) out << record_to_json_line(r) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

std::vector<TranscriptRecord> read_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::vector<TranscriptRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    out.push_back(record_from_json_line(line, line_no));
  }
  return out;
}

void write_csv(const std::vector<TranscriptRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  for (std::size_t i = 0; i < std::size(kFields); ++i)
    out << (i ? "," : "") << kFields[i];
  out << "\r\n";
  for (const auto& r : records) {
    out << csv_quote(r.id) << ',' << csv_quote(r.method) << ','
        << (r.model ? csv_quote(*r.model) : "") << ',' << to_string(r.severity) << ','
        << (r.template_id ? std::to_string(*r.template_id) : "") << ','
        << (r.seed ? std::to_string(*r.seed) : "") << ',' << csv_quote(r.transcript) << ','
        << r.word_count << ',' << r.ciu_count << ',' << format_double(r.ciu_percentage) << ','
        << csv_quote(r.created_at) << "\r\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

SplitResult split_corpus(const std::vector<TranscriptRecord>& records, const SplitSpec& spec) {
  spec.validate();
  std::map<Severity, std::vector<const TranscriptRecord*>> buckets;
  for (const auto& r : records) buckets[r.severity].push_back(&r);

  SplitResult result;
  for (auto& [severity, bucket] : buckets) {
    (void)severity;
    // Order-invariant shuffle: sort by hash of (id, seed), tie-break by id.
    std::sort(bucket.begin(), bucket.end(),
              [&](const TranscriptRecord* a, const TranscriptRecord* b) {
                auto ka = mix_seed({fnv1a64(a->id), spec.split_seed});
                auto kb = mix_seed({fnv1a64(b->id), spec.split_seed});
                return std::tie(ka, a->id) < std::tie(kb, b->id);
              });
    std::size_t n = bucket.size();
    double fracs[3] = {spec.train_fraction, spec.val_fraction, spec.test_fraction};
    std::size_t counts[3];
    double remainders[3];
    std::size_t assigned = 0;
    for (int k = 0; k < 3; ++k) {
      double exact = fracs[k] * static_cast<double>(n);
      counts[k] = static_cast<std::size_t>(std::floor(exact));
      remainders[k] = exact - static_cast<double>(counts[k]);
      assigned += counts[k];
    }
    // Largest remainder; ties resolve in train, val, test order.
    int order[3] = {0, 1, 2};
    std::stable_sort(order, order + 3, [&](int a, int b) { return remainders[a] > remainders[b]; });
    for (std::size_t left = n - assigned, k = 0; left > 0; --left, ++k) counts[order[k % 3]]++;

    std::size_t pos = 0;
    std::vector<TranscriptRecord>* outs[3] = {&result.train, &result.val, &result.test};
    for (int k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < counts[k]; ++i) outs[k]->push_back(*bucket[pos++]);
  }
  return result;
}

}  // namespace aphgen
