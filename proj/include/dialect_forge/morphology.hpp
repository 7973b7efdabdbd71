#pragma once

// String-level inflection helpers used by the perturbation rules.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "dialect_forge/core_model.hpp"

namespace dialect_forge {

/// Exception lexicons loaded from `lexicons/`. Immutable after loading.
class Lexicon {
 public:
  struct IrregularVerb {
    std::string past;
    std::string participle;
  };

  static Lexicon load(const std::string& dir);
  /// Lexicon from the data directory configured at build time.
  static const Lexicon& shipped();

  void add_mass_noun(std::string lemma) { mass_nouns_.insert(std::move(lemma)); }
  void add_irregular(std::string lemma, std::string past, std::string participle) {
    irregular_[std::move(lemma)] = {std::move(past), std::move(participle)};
  }

  bool is_mass_noun(std::string_view lemma) const;
  const IrregularVerb* irregular(std::string_view lemma) const;

  /// Simple past of a lemma: irregular entry if listed, else regular_past.
  std::string past_of(std::string_view lemma) const;
  std::string participle_of(std::string_view lemma) const;

  const std::set<std::string, std::less<>>& mass_nouns() const { return mass_nouns_; }

 private:
  std::set<std::string, std::less<>> mass_nouns_;
  std::map<std::string, IrregularVerb, std::less<>> irregular_;
};

std::string regular_plural(std::string_view lemma);
std::string regular_past(std::string_view lemma);

/// Bare verb form of a token; nullopt when the lemma is missing, which rules
/// treat as a skip.
std::optional<std::string> base_form(const Token& token);

std::string adverb_to_adjective(std::string_view form);

/// Uppercases the first letter of `replacement` when `original` starts with
/// an uppercase letter.
std::string transfer_capitalization(std::string_view original, std::string_view replacement);

std::string lowercase_first(std::string_view s);
std::string to_lower_ascii(std::string_view s);
bool starts_upper(std::string_view s);

}  // namespace dialect_forge
