#pragma once

// CoNLL-U reading/writing and surface detokenization.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dialect_forge/core_model.hpp"

namespace dialect_forge {

struct Document {
  std::string doc_id;  // from "# newdoc id = ..." when present
  std::vector<ParsedSentence> sentences;
  friend bool operator==(const Document&, const Document&) = default;
};

/// Parses a CoNLL-U document. Multiword-token ranges ("1-2"), empty nodes
/// ("1.1") and enhanced DEPS are rejected. Errors name the sentence and the
/// 1-based input line.
Document parse_conllu(std::string_view text);
Document read_conllu_file(const std::string& path);

std::string serialize_conllu(const Document& doc);

std::string detokenize(std::span<const Token> tokens);

/// Byte span of every token within detokenize(tokens).
std::vector<Span> token_offsets(std::span<const Token> tokens);

}  // namespace dialect_forge
