// Tense/aspect, mood, verb morphology and agreement rules.

#include <map>

#include "query.hpp"

namespace dialect_forge::rules {
namespace {

bool is_third_singular_subject(const Query& q, TokenIndex subj) {
  static constexpr std::string_view kPronouns[] = {"he", "she", "it", "this", "that", "who", "what"};
  if (std::ranges::find(kPronouns, q.lower(subj)) != std::end(kPronouns)) return true;
  return q.xpos_in(subj, {"NN", "NNP"});
}

// Pronouns that take the 've / 's clitic.
std::optional<std::string> perfect_clitic(std::string_view pronoun) {
  static const std::map<std::string_view, std::string_view> kClitic = {
      {"i", "'ve"}, {"you", "'ve"}, {"we", "'ve"}, {"they", "'ve"},
      {"he", "'s"}, {"she", "'s"}, {"it", "'s"},
  };
  auto it = kClitic.find(pronoun);
  if (it == kClitic.end()) return std::nullopt;
  return std::string(it->second);
}

bool has_aux_child(const Query& q, TokenIndex v) { return !q.children_with(v, {"aux", "auxpass"}).empty(); }

// Finite main verb whose subject precedes it (declarative order).
bool subject_before(const Query& q, TokenIndex v, TokenIndex pivot) {
  auto subj = q.subject_of(v);
  return subj && *subj < pivot;
}

}  // namespace

PerturbationRule simple_past_for_present_perfect(std::shared_ptr<const Lexicon> lex) {
  PerturbationRule r;
  r.feature = FeatureId(99);
  r.name = "simple_past_for_present_perfect";
  r.category = Category::TenseAspect;
  r.precondition = "perfect auxiliary have (aux) immediately before its past-participle (VBN) head";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i < q.size(); ++i) {
      const Token& aux = q.tok(i);
      if (!q.dep_in(i, {"aux"}) || q.lemma(i) != "have") continue;
      if (aux.head != i + 1 || !q.xpos_in(aux.head, {"VBN"})) continue;
      if (!subject_before(q, aux.head, i)) continue;
      sites.push_back(Site{aux.head, {i, aux.head}});
    }
    return sites;
  };
  r.rewrite = [lex](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& verb = s.at(site.anchor);
    auto base = base_form(verb);
    if (!base) return std::nullopt;
    return Rewrite{site.anchor - 1, site.anchor, {resurface(verb, lex->past_of(*base))}, true};
  };
  return r;
}

PerturbationRule present_perfect_for_past(std::shared_ptr<const Lexicon> lex) {
  PerturbationRule r;
  r.feature = FeatureId(100);
  r.name = "present_perfect_for_past";
  r.category = Category::TenseAspect;
  r.precondition = "past-tense main verb (VBD, not aux) with a preceding subject and no auxiliaries";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i <= q.size(); ++i) {
      if (!q.xpos_in(i, {"VBD"}) || q.is_aux(i) || has_aux_child(q, i)) continue;
      auto subj = q.subject_of(i);
      if (!subj || *subj > i) continue;
      // Contract onto an adjacent pronoun subject ("We've been").
      if (*subj + 1 == i && perfect_clitic(q.lower(*subj)))
        sites.push_back(Site{i, {*subj, i}});
      else
        sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [lex](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    Query q(s);
    const Token& verb = s.at(site.anchor);
    auto base = base_form(verb);
    if (!base) return std::nullopt;
    const TokenIndex subj = *q.subject_of(site.anchor);
    const bool third = is_third_singular_subject(q, subj);
    Token participle = resurface(verb, lex->participle_of(*base));
    participle.xpos = "VBN";
    if (site.extent.size() == 2) {
      Token pronoun = s.at(subj);
      pronoun.space_after = false;
      Token clitic = synth(*perfect_clitic(q.lower(subj)), "AUX", third ? "VBZ" : "VBP");
      return Rewrite{subj, site.anchor, {pronoun, clitic, participle}, std::nullopt};
    }
    Token have = synth(transfer_capitalization(verb.surface, third ? "has" : "have"), "AUX", third ? "VBZ" : "VBP");
    return Rewrite{site.anchor, site.anchor, {have, participle}, std::nullopt};
  };
  return r;
}

PerturbationRule double_modals() {
  PerturbationRule r;
  r.feature = FeatureId(121);
  r.name = "double_modals";
  r.category = Category::Mood;
  r.precondition = "modal can/could/would/should/will (MD) after the subject, not already preceded by might";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    static constexpr std::string_view kModals[] = {"can", "could", "would", "should", "will"};
    std::vector<Site> sites;
    for (TokenIndex i = 1; i <= q.size(); ++i) {
      if (!q.xpos_in(i, {"MD"}) || std::ranges::find(kModals, q.lower(i)) == std::end(kModals)) continue;
      if (i > 1 && q.lower(i - 1) == "might") continue;
      if (!subject_before(q, q.tok(i).head, i)) continue;
      sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& modal = s.at(site.anchor);
    return Rewrite{site.anchor, site.anchor, {synth("might", "AUX", "MD"), modal}, std::nullopt};
  };
  return r;
}

PerturbationRule present_modals() {
  PerturbationRule r;
  r.feature = FeatureId(123);
  r.name = "present_modals";
  r.category = Category::Mood;
  r.precondition = "past-form modal could/would/might (MD)";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i <= q.size(); ++i) {
      const auto w = q.lower(i);
      if (q.xpos_in(i, {"MD"}) && (w == "could" || w == "would" || w == "might")) sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    static const std::map<std::string, std::string> kPresent = {{"could", "can"}, {"would", "will"}, {"might", "may"}};
    const Token& t = s.at(site.anchor);
    return replace_one(t, transfer_capitalization(t.surface, kPresent.at(to_lower_ascii(t.surface))));
  };
  return r;
}

PerturbationRule regularized_past_tense() {
  PerturbationRule r;
  r.feature = FeatureId(128);
  r.name = "regularized_past_tense";
  r.category = Category::VerbMorphology;
  r.precondition = "irregular past-tense main verb (VBD, not aux; not be/have/do)";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i <= q.size(); ++i) {
      if (!q.xpos_in(i, {"VBD"}) || q.is_aux(i)) continue;
      const auto lemma = q.lemma(i);
      if (lemma == "be" || lemma == "have" || lemma == "do") continue;
      // Without a lemma the site still matches; the rewrite skips it.
      if (q.tok(i).has_lemma() && to_lower_ascii(regular_past(lemma)) == q.lower(i)) continue;
      sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& t = s.at(site.anchor);
    auto base = base_form(t);
    if (!base) return std::nullopt;
    return replace_one(t, transfer_capitalization(t.surface, regular_past(to_lower_ascii(*base))));
  };
  return r;
}

PerturbationRule participle_past_tense(std::shared_ptr<const Lexicon> lex) {
  PerturbationRule r;
  r.feature = FeatureId(131);
  r.name = "participle_past_tense";
  r.category = Category::VerbMorphology;
  r.precondition = "past-tense main verb (VBD, not aux; not be) whose irregular participle differs from its past";
  r.match = [lex](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i <= q.size(); ++i) {
      if (!q.xpos_in(i, {"VBD"}) || q.is_aux(i) || !q.tok(i).has_lemma()) continue;
      const auto lemma = q.lemma(i);
      const auto* forms = lex->irregular(lemma);
      if (lemma == "be" || !forms || forms->participle == forms->past) continue;
      if (q.lower(i) != forms->past) continue;
      sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [lex](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& t = s.at(site.anchor);
    auto base = base_form(t);
    if (!base) return std::nullopt;
    return replace_one(t, transfer_capitalization(t.surface, lex->participle_of(*base)));
  };
  return r;
}

// give passive: "[S] was V-ed by [NP]" -> "[S] give [NP] V". The rewritten
// range must consist solely of the passive auxiliaries, the participle and the
// agent phrase.
PerturbationRule give_passive() {
  PerturbationRule r;
  r.feature = FeatureId(153);
  r.name = "give_passive";
  r.category = Category::VerbMorphology;
  r.precondition =
      "past participle (VBN) with an nsubjpass before it and an agent by-phrase with a pobj; the span from the "
      "first auxiliary to the end of the agent phrase holds nothing else";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex v = 1; v <= q.size(); ++v) {
      if (!q.xpos_in(v, {"VBN"})) continue;
      auto subj = q.child_with(v, {"nsubjpass"});
      auto agent = q.child_with(v, {"agent"});
      if (!subj || !agent || *agent < v) continue;
      if (!q.child_with(*agent, {"pobj"})) continue;
      auto auxes = q.children_with(v, {"auxpass", "aux"});
      TokenIndex first = v;
      for (TokenIndex a : auxes) first = std::min(first, a);
      if (q.subtree_span(*subj).second >= first) continue;
      const TokenIndex last = q.subtree_span(*agent).second;

      std::vector<TokenIndex> expected = q.subtree(*agent);
      expected.push_back(v);
      expected.insert(expected.end(), auxes.begin(), auxes.end());
      std::ranges::sort(expected);
      if (expected.size() != last - first + 1 || expected.front() != first) continue;
      sites.push_back(Site{v, expected});
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    Query q(s);
    const TokenIndex v = site.anchor;
    auto base = base_form(q.tok(v));
    if (!base) return std::nullopt;
    const TokenIndex agent = *q.child_with(v, {"agent"});
    const TokenIndex object = *q.child_with(agent, {"pobj"});

    std::vector<Token> out;
    out.push_back(synth("give", "VERB", "VB"));
    for (TokenIndex i : q.subtree(object)) out.push_back(q.tok(i));
    out.back().space_after = true;
    Token verb = resurface(q.tok(v), *base);
    verb.xpos = "VB";
    const TokenIndex first = site.extent.front();
    const TokenIndex last = site.extent.back();
    if (last == q.size()) {
      // The rebuilt clause closes the sentence: terminate it.
      verb.space_after = false;
      out.push_back(verb);
      out.push_back(synth(".", "PUNCT", "."));
    } else {
      out.push_back(verb);
    }
    return Rewrite{first, last, std::move(out), std::nullopt};
  };
  return r;
}

PerturbationRule uninflect() {
  PerturbationRule r;
  r.feature = FeatureId(170);
  r.name = "uninflect";
  r.category = Category::Agreement;
  r.precondition = "3sg present main verb (VBZ, not aux; not be/have)";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i <= q.size(); ++i) {
      if (!q.xpos_in(i, {"VBZ"}) || q.is_aux(i)) continue;
      const auto lemma = q.lemma(i);
      if (lemma == "be" || lemma == "have" || (q.tok(i).has_lemma() && lemma == q.lower(i))) continue;
      sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& t = s.at(site.anchor);
    auto base = base_form(t);
    if (!base) return std::nullopt;
    Rewrite rw = replace_one(t, transfer_capitalization(t.surface, to_lower_ascii(*base)));
    rw.replacement.front().xpos = "VBP";
    return rw;
  };
  return r;
}

PerturbationRule existential_there() {
  PerturbationRule r;
  r.feature = FeatureId(172);
  r.name = "existential_there";
  r.category = Category::Agreement;
  r.precondition = "expletive there (EX) immediately followed by plural are/were";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i < q.size(); ++i) {
      if (!q.xpos_in(i, {"EX"})) continue;
      const auto next = q.lower(i + 1);
      if (next == "are" || next == "were") sites.push_back(Site{i, {i, i + 1}});
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& there = s.at(site.anchor);
    const Token& verb = s.at(site.anchor + 1);
    if (to_lower_ascii(verb.surface) == "were") {
      Token was = resurface(verb, "was");
      was.xpos = "VBD";
      return Rewrite{verb.index, verb.index, {was}, std::nullopt};
    }
    Token host = there;
    host.space_after = false;
    Token is = resurface(verb, "'s");
    is.xpos = "VBZ";
    return Rewrite{there.index, verb.index, {host, is}, std::nullopt};
  };
  return r;
}

PerturbationRule existential_it() {
  PerturbationRule r;
  r.feature = FeatureId(173);
  r.name = "existential_it";
  r.category = Category::Agreement;
  r.precondition = "expletive there (EX) followed by singular 's/is/was";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i < q.size(); ++i) {
      if (!q.xpos_in(i, {"EX"})) continue;
      const auto next = q.lower(i + 1);
      if (next == "'s" || next == "is" || next == "was") sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& t = s.at(site.anchor);
    Rewrite rw = replace_one(t, transfer_capitalization(t.surface, "it"));
    rw.replacement.front().xpos = "PRP";
    return rw;
  };
  return r;
}

PerturbationRule drop_aux_be_progressive() {
  PerturbationRule r;
  r.feature = FeatureId(174);
  r.name = "drop_aux_be_progressive";
  r.category = Category::Agreement;
  r.precondition = "present-tense auxiliary be (aux) of a progressive (VBG) head, after the subject";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    static constexpr std::string_view kForms[] = {"am", "is", "are", "'m", "'s", "'re"};
    std::vector<Site> sites;
    for (TokenIndex i = 1; i <= q.size(); ++i) {
      if (!q.dep_in(i, {"aux"}) || std::ranges::find(kForms, q.lower(i)) == std::end(kForms)) continue;
      const TokenIndex head = q.tok(i).head;
      if (!q.xpos_in(head, {"VBG"}) || !subject_before(q, head, i)) continue;
      sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence&, const Site& site) -> std::optional<Rewrite> {
    return Rewrite{site.anchor, site.anchor, {}, std::nullopt};
  };
  return r;
}

}  // namespace dialect_forge::rules
