#pragma once

// JSON Lines encoding of Provenance records:
//   {"sent_id", "source_text", "output_text", "seed",
//    "edits": [{"feature", "original_span": [start, end], "replacement", "site_token_indices"}]}
// Spans are byte offsets into source_text.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "dialect_forge/core_model.hpp"

namespace dialect_forge {

std::string provenance_to_json(const Provenance& p);
Provenance provenance_from_json(std::string_view line);

/// One record per non-blank line. Errors name the 1-based line.
std::vector<Provenance> read_provenance_jsonl(std::istream& in);

}  // namespace dialect_forge
