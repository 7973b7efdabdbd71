#include <algorithm>

#include "query.hpp"

namespace dialect_forge {

std::string_view category_name(Category c) {
  switch (c) {
    case Category::Pronouns: return "pronouns";
    case Category::NounPhrases: return "noun_phrases";
    case Category::TenseAspect: return "tense_aspect";
    case Category::Mood: return "mood";
    case Category::VerbMorphology: return "verb_morphology";
    case Category::Negation: return "negation";
    case Category::Agreement: return "agreement";
    case Category::Relativization: return "relativization";
    case Category::Complementation: return "complementation";
    case Category::AdverbialSubordination: return "adverbial_subordination";
    case Category::AdverbsPrepositions: return "adverbs_prepositions";
    case Category::DiscourseWordOrder: return "discourse_word_order";
  }
  return "unknown";
}

std::vector<Site> match_sites(const PerturbationRule& rule, const ParsedSentence& sentence) {
  std::vector<Site> sites = rule.match(sentence);
  std::ranges::stable_sort(sites, {}, &Site::anchor);
  std::vector<Site> kept;
  std::vector<bool> used(sentence.size() + 1, false);
  for (auto& site : sites) {
    std::ranges::sort(site.extent);
    const bool clash = std::ranges::any_of(site.extent, [&](TokenIndex i) { return i == 0 || i > sentence.size() || used[i]; });
    if (clash) continue;
    for (TokenIndex i : site.extent) used[i] = true;
    kept.push_back(std::move(site));
  }
  return kept;
}

std::vector<PerturbationRule> catalog(std::shared_ptr<const Lexicon> lex) {
  using namespace rules;
  std::vector<PerturbationRule> all = {
      yall(),
      plural_interrogative(),
      reduplicate_interrogative(),
      regularized_plurals(),
      mass_noun_plurals(lex),
      double_comparative(),
      simple_past_for_present_perfect(lex),
      present_perfect_for_past(lex),
      double_modals(),
      present_modals(),
      regularized_past_tense(),
      participle_past_tense(lex),
      give_passive(),
      negative_concord(),
      dont(),
      never_negator(lex),
      uninflect(),
      existential_there(),
      existential_it(),
      drop_aux_be_progressive(),
      null_relcl(),
      drop_inf_to(),
      to_infinitive(),
      subord_conjunction_doubling(),
      null_prepositions(),
      flat_adj_for_adv(),
      negative_inversion(),
      drop_aux_yn(),
  };
  std::ranges::stable_sort(all, {}, &PerturbationRule::feature);
  return all;
}

const std::vector<PerturbationRule>& catalog() {
  static const std::vector<PerturbationRule> rules =
      catalog(std::make_shared<const Lexicon>(Lexicon::shipped()));
  return rules;
}

const PerturbationRule* find_rule(const std::vector<PerturbationRule>& rules, int feature) {
  auto it = std::ranges::find_if(rules, [&](const PerturbationRule& r) { return r.feature.number() == feature; });
  return it == rules.end() ? nullptr : &*it;
}

}  // namespace dialect_forge
