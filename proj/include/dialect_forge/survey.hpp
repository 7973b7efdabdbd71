#pragma once

// Adaptive dialect survey: binary search over candidate dialects driven by
// yes/no acceptability judgments on example sentences.

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dialect_forge/core_model.hpp"

namespace dialect_forge {

struct BinaryProfile {
  std::string dialect;
  std::map<FeatureId, bool> has_feature;

  /// Features without an entry read as false.
  bool has(FeatureId f) const;
};

/// has_feature[f] is true iff the class is at least as pervasive as
/// `threshold` (A > B > C); D, X and U are always false.
BinaryProfile binarize(const DialectProfile& profile, Pervasiveness threshold = Pervasiveness::B);

using QuestionBank = std::map<FeatureId, std::string>;

/// `feature<TAB>sentence` lines; '#' comments and blank lines ignored.
QuestionBank load_question_bank(std::string_view text);
QuestionBank load_question_bank_file(const std::string& path);

/// Every `*.tsv` profile in `dir`, sorted by name, minus `exclude`.
std::vector<DialectProfile> load_profile_dir(const std::string& dir, const std::set<std::string>& exclude = {});

using BinaryProfiles = std::map<std::string, BinaryProfile>;

struct SurveyState {
  std::set<std::string> candidates;
  std::vector<std::pair<FeatureId, bool>> asked;
  QuestionBank question_bank;

  bool was_asked(FeatureId f) const;
};

SurveyState start_survey(const BinaryProfiles& profiles, QuestionBank bank);

/// Unasked bank feature splitting the candidates most evenly; ties go to the
/// lowest feature number. nullopt once one candidate is left or no remaining
/// feature separates any two candidates.
std::optional<FeatureId> select_feature(const SurveyState& state, const BinaryProfiles& profiles);

/// Keeps candidates whose has_feature[f] equals `answer`. An answer that
/// would leave no candidate is recorded but does not filter. Throws Error if
/// f was already asked.
SurveyState update_candidates(const SurveyState& state, const BinaryProfiles& profiles, FeatureId f, bool answer);

/// Plays the survey over a text stream: prints each sentence and reads y/n.
/// Returns the final candidate set.
std::set<std::string> run_terminal_survey(const BinaryProfiles& profiles, const QuestionBank& bank, std::istream& in,
                                          std::ostream& out);

inline constexpr std::string_view kSurveyPrompt = "Is this sentence something you might say?";

}  // namespace dialect_forge
