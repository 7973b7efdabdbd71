#pragma once

// Shared data model: tokens, parsed sentences, eWAVE feature ids, dialect
// profiles, edits and provenance records.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dialect_forge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateFeatureError : public ParseError {
 public:
  using ParseError::ParseError;
};

using TokenIndex = std::size_t;

struct Token {
  TokenIndex index = 0;  // 1-based; 0 marks a token synthesized by a rewrite
  std::string surface;
  std::string lemma = "_";
  std::string upos = "_";
  std::string xpos = "_";
  TokenIndex head = 0;
  std::string deprel = "_";
  std::vector<std::pair<std::string, std::string>> morph_features;
  bool space_after = true;
  // MISC entries other than SpaceAfter, kept verbatim for round-tripping.
  std::vector<std::string> misc;

  bool has_lemma() const { return !lemma.empty() && lemma != "_"; }
  friend bool operator==(const Token&, const Token&) = default;
};

struct ParsedSentence {
  std::string sent_id;
  std::vector<Token> tokens;
  // Raw comment lines (without the leading '#'), sent_id line included.
  std::vector<std::string> comments;

  std::size_t size() const { return tokens.size(); }
  const Token& at(TokenIndex index) const { return tokens.at(index - 1); }
  friend bool operator==(const ParsedSentence&, const ParsedSentence&) = default;
};

/// Throws ParseError unless the sentence has sequential ids, exactly one
/// root and head links forming a tree.
void validate_sentence(const ParsedSentence& sentence);

/// eWAVE feature number, 1..235.
class FeatureId {
 public:
  static constexpr int kMin = 1;
  static constexpr int kMax = 235;

  FeatureId() = default;
  explicit FeatureId(int number);

  int number() const { return number_; }
  auto operator<=>(const FeatureId&) const = default;

 private:
  int number_ = kMin;
};

enum class Pervasiveness { A, B, C, D, X, U };

double pervasiveness_to_probability(Pervasiveness p);
char to_letter(Pervasiveness p);
Pervasiveness pervasiveness_from_letter(char letter);

struct DialectProfile {
  std::string name;
  std::map<FeatureId, Pervasiveness> features;

  /// Absent features read as class U.
  Pervasiveness get(FeatureId f) const;
  friend bool operator==(const DialectProfile&, const DialectProfile&) = default;
};

DialectProfile load_profile(std::string_view text, std::string name = {});
DialectProfile load_profile_file(const std::string& path);
std::string serialize_profile(const DialectProfile& profile);

/// Per-feature maximum-probability class across the inputs.
DialectProfile merge_multi(const std::vector<DialectProfile>& profiles, std::string name = "Multi");

/// Byte offsets into the UTF-8 source text, half-open.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

struct Edit {
  FeatureId feature;
  Span original_span;
  std::string replacement;
  std::vector<TokenIndex> site_token_indices;
  friend bool operator==(const Edit&, const Edit&) = default;
};

struct Provenance {
  std::string sent_id;
  std::string source_text;
  std::string output_text;
  std::vector<Edit> edits;
  std::uint64_t seed = 0;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Applies non-overlapping edits (source coordinates) to `source`.
/// Throws Error on out-of-range or overlapping spans.
std::string replay_edits(std::string_view source, const std::vector<Edit>& edits);

}  // namespace dialect_forge
