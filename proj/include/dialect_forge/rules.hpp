#pragma once

// Perturbation rules: a morphosyntactic matcher plus a rewrite program over a
// ParsedSentence, and the catalog of shipped rules.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dialect_forge/core_model.hpp"
#include "dialect_forge/morphology.hpp"

namespace dialect_forge {

enum class Category {
  Pronouns,
  NounPhrases,
  TenseAspect,
  Mood,
  VerbMorphology,
  Negation,
  Agreement,
  Relativization,
  Complementation,
  AdverbialSubordination,
  AdverbsPrepositions,
  DiscourseWordOrder,
};
inline constexpr int kCategoryCount = 12;

std::string_view category_name(Category c);

/// A place where a rule applies. `extent` lists every token the rewrite
/// consumes; later rules never touch consumed tokens.
struct Site {
  TokenIndex anchor = 0;
  std::vector<TokenIndex> extent;
  friend bool operator==(const Site&, const Site&) = default;
};

/// Token-level result of a rule: source tokens first..last (inclusive,
/// contiguous) are replaced by `replacement`. Replacement tokens derived from
/// a source token keep its index; synthesized ones carry index 0.
///
/// The whitespace after `last` is preserved. When `space_before` is set, the
/// whitespace between the preceding token and `first` is rewritten as well
/// (needed when the range starts with a clitic such as 've). An empty
/// replacement deletes the range together with its leading whitespace.
struct Rewrite {
  TokenIndex first = 0;
  TokenIndex last = 0;
  std::vector<Token> replacement;
  std::optional<bool> space_before;
};

struct PerturbationRule {
  FeatureId feature;
  std::string name;
  Category category;
  /// Human-readable statement of what `match` checks.
  std::string precondition;
  std::function<std::vector<Site>(const ParsedSentence&)> match;
  /// nullopt is a rule-skip: the site is left untouched (e.g. missing lemma).
  std::function<std::optional<Rewrite>(const ParsedSentence&, const Site&)> rewrite;
};

/// Sites of `rule` in left-to-right anchor order with overlapping extents
/// dropped.
std::vector<Site> match_sites(const PerturbationRule& rule, const ParsedSentence& sentence);

/// The shipped rules sorted by feature number.
std::vector<PerturbationRule> catalog(std::shared_ptr<const Lexicon> lexicon);
const std::vector<PerturbationRule>& catalog();

const PerturbationRule* find_rule(const std::vector<PerturbationRule>& rules, int feature);

}  // namespace dialect_forge
