// Pronoun and noun-phrase rules.

#include "query.hpp"

namespace dialect_forge::rules {
namespace {

bool is_wh_pronoun(const Query& q, TokenIndex i) {
  static constexpr std::string_view kWh[] = {"who", "what"};
  return q.xpos_in(i, {"WP"}) && std::ranges::find(kWh, q.lower(i)) != std::end(kWh);
}

}  // namespace

PerturbationRule yall() {
  PerturbationRule r;
  r.feature = FeatureId(34);
  r.name = "yall";
  r.category = Category::Pronouns;
  r.precondition = "personal pronoun (PRP) 'you' in subject or object position";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i <= q.size(); ++i)
      if (q.xpos_in(i, {"PRP"}) && q.lower(i) == "you") sites.push_back(single_site(i));
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& t = s.at(site.anchor);
    return replace_one(t, transfer_capitalization(t.surface, "y'all"));
  };
  return r;
}

PerturbationRule plural_interrogative() {
  PerturbationRule r;
  r.feature = FeatureId(39);
  r.name = "plural_interrogative";
  r.category = Category::Pronouns;
  r.precondition = "wh-pronoun who/what (WP) in a sentence ending with '?'";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    if (!q.is_question()) return sites;
    for (TokenIndex i = 1; i <= q.size(); ++i)
      if (is_wh_pronoun(q, i)) sites.push_back(single_site(i));
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& t = s.at(site.anchor);
    return replace_one(t, t.surface + "-all");
  };
  return r;
}

PerturbationRule reduplicate_interrogative() {
  PerturbationRule r;
  r.feature = FeatureId(40);
  r.name = "reduplicate_interrogative";
  r.category = Category::Pronouns;
  r.precondition = "wh-pronoun who/what (WP) in a sentence ending with '?'";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    if (!q.is_question()) return sites;
    for (TokenIndex i = 1; i <= q.size(); ++i)
      if (is_wh_pronoun(q, i)) sites.push_back(single_site(i));
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& t = s.at(site.anchor);
    return replace_one(t, t.surface + "-" + to_lower_ascii(t.surface));
  };
  return r;
}

PerturbationRule regularized_plurals() {
  PerturbationRule r;
  r.feature = FeatureId(49);
  r.name = "regularized_plurals";
  r.category = Category::NounPhrases;
  r.precondition = "plural noun (NNS) whose surface differs from the regular plural of its lemma";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i <= q.size(); ++i) {
      const Token& t = q.tok(i);
      if (!q.xpos_in(i, {"NNS"}) || !t.has_lemma()) continue;
      if (to_lower_ascii(regular_plural(t.lemma)) != q.lower(i)) sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& t = s.at(site.anchor);
    if (!t.has_lemma()) return std::nullopt;
    return replace_one(t, transfer_capitalization(t.surface, regular_plural(to_lower_ascii(t.lemma))));
  };
  return r;
}

PerturbationRule mass_noun_plurals(std::shared_ptr<const Lexicon> lex) {
  PerturbationRule r;
  r.feature = FeatureId(55);
  r.name = "mass_noun_plurals";
  r.category = Category::NounPhrases;
  r.precondition = "singular noun (NN) whose lemma is listed in the mass-noun lexicon";
  r.match = [lex](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i <= q.size(); ++i)
      if (q.xpos_in(i, {"NN"}) && lex->is_mass_noun(q.lemma(i))) sites.push_back(single_site(i));
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& t = s.at(site.anchor);
    return replace_one(t, transfer_capitalization(t.surface, regular_plural(to_lower_ascii(t.surface))));
  };
  return r;
}

PerturbationRule double_comparative() {
  PerturbationRule r;
  r.feature = FeatureId(78);
  r.name = "double_comparative";
  r.category = Category::NounPhrases;
  r.precondition =
      "synthetic comparative (JJR/RBR in -er) or superlative (JJS/RBS in -est) not already preceded by more/most";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i <= q.size(); ++i) {
      const bool comparative = q.xpos_in(i, {"JJR", "RBR"}) && q.lower(i).ends_with("er");
      const bool superlative = q.xpos_in(i, {"JJS", "RBS"}) && q.lower(i).ends_with("est");
      if (!comparative && !superlative) continue;
      if (q.lemma(i) == q.lower(i)) continue;  // e.g. "more", lemma-less forms
      if (i > 1 && (q.lower(i - 1) == "more" || q.lower(i - 1) == "most")) continue;
      sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& t = s.at(site.anchor);
    const bool superlative = t.xpos == "JJS" || t.xpos == "RBS";
    Token degree = synth(transfer_capitalization(t.surface, superlative ? "most" : "more"), "ADV", "RBR");
    return Rewrite{t.index, t.index, {degree, resurface(t, lowercase_first(t.surface))}, std::nullopt};
  };
  return r;
}

}  // namespace dialect_forge::rules
