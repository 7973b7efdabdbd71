#pragma once

// Seeded, provenance-tracking application of a dialect profile's rules.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dialect_forge/conllu.hpp"
#include "dialect_forge/core_model.hpp"
#include "dialect_forge/rules.hpp"

namespace dialect_forge {

struct TransformConfig {
  DialectProfile profile;
  std::uint64_t global_seed = 0;
  /// Multiplier on every sampling probability, in [0, 1].
  double density_scale = 1.0;

  void validate() const;
};

/// Stable 64-bit seed for one sentence of one document.
std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view doc_id, std::uint64_t sentence_index);

/// Uniform draw in [0, 1) for one candidate site. Counter-based (SplitMix64
/// finalizer over seed, feature and anchor), so the decision for a site does
/// not depend on which other sites were matched.
double site_draw(std::uint64_t seed, FeatureId feature, TokenIndex anchor);

struct TransformStats {
  std::size_t sites_matched = 0;
  std::size_t sites_applied = 0;
  /// Sites dropped because they touch a token consumed by an earlier edit.
  std::size_t sites_blocked = 0;
  /// Sampled sites whose rewrite declined (missing lemma, unusable span).
  std::size_t sites_skipped = 0;

  TransformStats& operator+=(const TransformStats& o);
};

struct RuleApplication {
  const PerturbationRule* rule = nullptr;
  double probability = 0.0;
};

struct SentenceResult {
  Provenance provenance;
  std::vector<Token> tokens;  // final token list; synthesized tokens have index 0
  TransformStats stats;
};

/// Applies rules in the given order. Matching always runs on the original
/// parse; sites touching tokens consumed by an earlier edit are dropped.
SentenceResult apply_rules(const ParsedSentence& sentence, std::span<const RuleApplication> rules,
                           std::uint64_t seed);

/// Convenience for tests and tooling: one rule, probability 1.
SentenceResult apply_rule(const PerturbationRule& rule, const ParsedSentence& sentence);

class Transformer {
 public:
  explicit Transformer(TransformConfig config, const std::vector<PerturbationRule>& rules = catalog());

  const TransformConfig& config() const { return config_; }
  std::span<const RuleApplication> schedule() const { return schedule_; }

  SentenceResult transform(const ParsedSentence& sentence, std::uint64_t seed) const;

  /// Every sentence of `doc`, seeded with derive_seed(global, doc_id, i).
  /// Output order and content do not depend on `threads`.
  std::vector<SentenceResult> transform_document(const Document& doc, unsigned threads = 1) const;

 private:
  TransformConfig config_;
  std::vector<RuleApplication> schedule_;
};

Provenance transform_sentence(const ParsedSentence& sentence, const TransformConfig& config, std::uint64_t seed);

}  // namespace dialect_forge
