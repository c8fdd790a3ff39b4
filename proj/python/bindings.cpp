#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "aphgen/config.hpp"
#include "aphgen/corpus_io.hpp"
#include "aphgen/defaults.hpp"
#include "aphgen/lexstats.hpp"
#include "aphgen/procgen.hpp"

namespace py = pybind11;
using namespace aphgen;

namespace {

py::dict record_to_dict(const TranscriptRecord& r) {
  py::dict d;
  d["id"] = r.id;
  d["method"] = r.method;
  d["model"] = r.model ? py::object(py::str(*r.model)) : py::object(py::none());
  d["severity"] = to_string(r.severity);
  d["template_id"] = r.template_id ? py::object(py::int_(*r.template_id)) : py::object(py::none());
  d["seed"] = r.seed ? py::object(py::int_(*r.seed)) : py::object(py::none());
  d["transcript"] = r.transcript;
  d["word_count"] = r.word_count;
  d["ciu_count"] = r.ciu_count;
  d["ciu_percentage"] = r.ciu_percentage;
  d["created_at"] = r.created_at;
  return d;
}

}  // namespace

PYBIND11_MODULE(_aphgen, m) {
  m.doc() = "Synthetic Cat Rescue picture-description corpus toolkit";

  m.def("tokenize", [](const std::string& text) { return tokenize(text); },
        py::arg("text"), "Normalized lowercase word tokens of a transcript.");

  m.def("split_sentences",
        [](const std::string& text) {
          std::vector<std::vector<std::string>> out;
          for (const auto& s : split_sentences(text)) out.push_back(s.tokens);
          return out;
        },
        py::arg("text"), "Token sequences of the sentences of a transcript.");

  m.def("score_transcript",
        [](const std::string& text) {
          CiuScore s = score_transcript(text, default_exclusions());
          py::dict d;
          d["word_count"] = s.word_count;
          d["ciu_count"] = s.ciu_count;
          d["ciu_percentage"] = s.ciu_percentage;
          return d;
        },
        py::arg("text"), "Blind CIU score with the default exclusion lexicons.");

  m.def("profile_transcript",
        [](const std::string& text, int trials, std::uint64_t seed) {
          AnalysisSettings settings = default_analysis_settings();
          settings.ndw_trials = trials;
          Rng rng(seed);
          LexicalProfile p = profile_transcript(text, settings, rng);
          py::dict d;
          d["ttr"] = p.ttr;
          d["ndw"] = p.ndw;
          d["ld"] = p.ld;
          d["words"] = p.words;
          d["avg_len"] = p.avg_len;
          return d;
        },
        py::arg("text"), py::arg("trials") = 10, py::arg("seed") = 0,
        "Lexical richness profile (TTR, NDW, LD, words, average word length).");

  m.def("generate_corpus",
        [](py::object config_path, py::object per_severity, py::object seed) {
          GenerationConfig cfg = config_path.is_none()
                                     ? default_generation_config()
                                     : load_app_config(config_path.cast<std::string>()).generation;
          if (!per_severity.is_none()) cfg.per_severity_count = per_severity.cast<int>();
          if (!seed.is_none()) cfg.master_seed = seed.cast<std::uint64_t>();
          py::list out;
          for (const auto& r : generate_corpus(cfg)) out.append(record_to_dict(r));
          return out;
        },
        py::arg("config_path") = py::none(), py::arg("per_severity") = py::none(),
        py::arg("seed") = py::none(),
        "Procedural corpus as a list of record dicts (JSONL schema).");

  m.def("write_jsonl",
        [](const std::string& records_json, const std::string& path) {
          std::vector<TranscriptRecord> records;
          auto arr = nlohmann::json::parse(records_json);
          std::size_t line = 0;
          for (const auto& item : arr)
            records.push_back(record_from_json_line(item.dump(), ++line));
          write_jsonl(records, path);
        },
        py::arg("records_json"), py::arg("path"),
        "Write a JSON array string of records to a JSONL file.");

  m.def("split_jsonl",
        [](const std::string& in_path, const std::string& out_stem, double train, double val,
           double test, std::uint64_t seed) {
          SplitSpec spec{train, val, test, seed};
          auto records = read_jsonl(in_path);
          SplitResult r = split_corpus(records, spec);
          write_jsonl(r.train, out_stem + ".train.jsonl");
          write_jsonl(r.val, out_stem + ".val.jsonl");
          write_jsonl(r.test, out_stem + ".test.jsonl");
          return py::make_tuple(r.train.size(), r.val.size(), r.test.size());
        },
        py::arg("in_path"), py::arg("out_stem"), py::arg("train") = 0.8, py::arg("val") = 0.1,
        py::arg("test") = 0.1, py::arg("seed") = 0,
        "Stratified train/val/test split of a JSONL corpus; returns the sizes.");
}
