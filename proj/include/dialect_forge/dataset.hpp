#pragma once

// Dataset-level transformation: selected string fields of JSON Lines records
// are rewritten using sidecar CoNLL-U parses; every other byte of a record is
// left as it was.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dialect_forge/conllu.hpp"
#include "dialect_forge/pipeline.hpp"

namespace dialect_forge {

/// Field selector such as `questions[*].input_text`, `a.b[0].c` or `question`.
class FieldSelector {
 public:
  struct Key {
    std::string name;
  };
  struct Index {
    std::size_t value;
  };
  struct Wildcard {};
  using Step = std::variant<Key, Index, Wildcard>;

  static FieldSelector parse(std::string_view text);

  const std::vector<Step>& steps() const { return steps_; }
  const std::string& text() const { return text_; }

 private:
  std::vector<Step> steps_;
  std::string text_;
};

/// A concrete location inside one record, e.g. `questions[0].input_text`.
struct FieldPath {
  std::vector<std::variant<std::string, std::size_t>> steps;
  std::string to_string() const;
};

/// Byte range [first, second) of the JSON value at `path` in `json_text`,
/// found by scanning the raw text. Throws Error if the path is absent.
std::pair<std::size_t, std::size_t> locate_json_value(std::string_view json_text, const FieldPath& path);

/// Sidecar sentence id: `<record id>::<field path>::<sentence index>`.
std::string sidecar_sent_id(std::string_view record_id, std::string_view field_path, std::size_t sentence_index);

struct DatasetOptions {
  std::vector<FieldSelector> fields;
  /// Record key holding the record id; the 0-based line number is used when
  /// the key is absent.
  std::string id_field = "id";
};

struct DatasetResult {
  std::vector<std::string> records;
  /// One entry per field that received at least one edit.
  std::vector<Provenance> provenance;
  TransformStats stats;
};

DatasetResult transform_dataset(const std::vector<std::string>& jsonl_records, const Document& parses,
                                const DatasetOptions& options, const Transformer& transformer);

}  // namespace dialect_forge
