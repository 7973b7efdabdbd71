#pragma once

// Read-only dependency-tree helpers shared by the rule implementations.

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dialect_forge/morphology.hpp"
#include "dialect_forge/rules.hpp"

namespace dialect_forge::rules {

class Query {
 public:
  explicit Query(const ParsedSentence& s) : s_(s), children_(s.size() + 1) {
    for (const Token& t : s.tokens) children_[t.head].push_back(t.index);
  }

  std::size_t size() const { return s_.size(); }
  const Token& tok(TokenIndex i) const { return s_.at(i); }
  bool valid(TokenIndex i) const { return i >= 1 && i <= s_.size(); }

  std::string lower(TokenIndex i) const { return to_lower_ascii(tok(i).surface); }
  std::string lemma(TokenIndex i) const {
    return tok(i).has_lemma() ? to_lower_ascii(tok(i).lemma) : lower(i);
  }

  bool dep_in(TokenIndex i, std::initializer_list<std::string_view> labels) const {
    return std::ranges::find(labels, tok(i).deprel) != labels.end();
  }
  bool xpos_in(TokenIndex i, std::initializer_list<std::string_view> tags) const {
    return std::ranges::find(tags, tok(i).xpos) != tags.end();
  }
  bool is_verbal(TokenIndex i) const { return tok(i).xpos.starts_with("VB") || tok(i).xpos == "MD"; }
  bool is_aux(TokenIndex i) const { return dep_in(i, {"aux", "auxpass"}); }

  const std::vector<TokenIndex>& children(TokenIndex i) const { return children_[i]; }

  std::vector<TokenIndex> children_with(TokenIndex i, std::initializer_list<std::string_view> labels) const {
    std::vector<TokenIndex> out;
    for (TokenIndex c : children_[i])
      if (dep_in(c, labels)) out.push_back(c);
    return out;
  }
  std::optional<TokenIndex> child_with(TokenIndex i, std::initializer_list<std::string_view> labels) const {
    for (TokenIndex c : children_[i])
      if (dep_in(c, labels)) return c;
    return std::nullopt;
  }

  /// Inclusive [min, max] token index of the subtree rooted at i.
  std::pair<TokenIndex, TokenIndex> subtree_span(TokenIndex i) const {
    std::pair<TokenIndex, TokenIndex> span{i, i};
    for (TokenIndex c : children_[i]) {
      auto [lo, hi] = subtree_span(c);
      span.first = std::min(span.first, lo);
      span.second = std::max(span.second, hi);
    }
    return span;
  }

  std::vector<TokenIndex> subtree(TokenIndex i) const {
    std::vector<TokenIndex> out{i};
    for (TokenIndex c : children_[i]) {
      auto sub = subtree(c);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    std::ranges::sort(out);
    return out;
  }

  bool is_question() const { return s_.size() > 0 && tok(s_.size()).surface == "?"; }

  /// Subject (nsubj/nsubjpass) of verb i, if any.
  std::optional<TokenIndex> subject_of(TokenIndex i) const { return child_with(i, {"nsubj", "nsubjpass"}); }

 private:
  const ParsedSentence& s_;
  std::vector<std::vector<TokenIndex>> children_;
};

inline Token synth(std::string surface, std::string upos, std::string xpos, bool space_after = true) {
  Token t;
  t.index = 0;
  t.surface = std::move(surface);
  t.lemma = "_";
  t.upos = std::move(upos);
  t.xpos = std::move(xpos);
  t.deprel = "_";
  t.space_after = space_after;
  return t;
}

inline Token resurface(const Token& t, std::string surface) {
  Token out = t;
  out.surface = std::move(surface);
  return out;
}

inline Site single_site(TokenIndex i) { return Site{i, {i}}; }

inline Rewrite replace_one(const Token& t, std::string surface) {
  return Rewrite{t.index, t.index, {resurface(t, std::move(surface))}, std::nullopt};
}

// Rule factories, one per feature.
PerturbationRule yall();
PerturbationRule plural_interrogative();
PerturbationRule reduplicate_interrogative();
PerturbationRule regularized_plurals();
PerturbationRule mass_noun_plurals(std::shared_ptr<const Lexicon> lex);
PerturbationRule double_comparative();
PerturbationRule simple_past_for_present_perfect(std::shared_ptr<const Lexicon> lex);
PerturbationRule present_perfect_for_past(std::shared_ptr<const Lexicon> lex);
PerturbationRule double_modals();
PerturbationRule present_modals();
PerturbationRule regularized_past_tense();
PerturbationRule participle_past_tense(std::shared_ptr<const Lexicon> lex);
PerturbationRule give_passive();
PerturbationRule negative_concord();
PerturbationRule dont();
PerturbationRule never_negator(std::shared_ptr<const Lexicon> lex);
PerturbationRule uninflect();
PerturbationRule existential_there();
PerturbationRule existential_it();
PerturbationRule drop_aux_be_progressive();
PerturbationRule null_relcl();
PerturbationRule drop_inf_to();
PerturbationRule to_infinitive();
PerturbationRule subord_conjunction_doubling();
PerturbationRule null_prepositions();
PerturbationRule flat_adj_for_adv();
PerturbationRule negative_inversion();
PerturbationRule drop_aux_yn();

}  // namespace dialect_forge::rules
