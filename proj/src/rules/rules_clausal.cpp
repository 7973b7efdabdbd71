// Negation, relativization, complementation, adverbial subordination,
// adverb/preposition and word-order rules.

#include <map>
#include <set>

#include "query.hpp"

namespace dialect_forge::rules {
namespace {

// Dependency labels that open a new clause; negation scope stops there.
bool opens_clause(const Query& q, TokenIndex i) {
  if (q.dep_in(i, {"relcl", "advcl", "ccomp", "csubj", "acl", "parataxis"})) return true;
  return q.dep_in(i, {"conj"}) && q.is_verbal(i);
}

const std::map<std::string, std::string>& negative_counterparts() {
  static const std::map<std::string, std::string> kMap = {
      {"any", "no"},         {"anything", "nothing"}, {"anyone", "nobody"},
      {"anybody", "nobody"}, {"ever", "never"},       {"anywhere", "nowhere"},
  };
  return kMap;
}

}  // namespace

// Negation scope: tokens to the right of the negator whose head path reaches
// the negated verb without crossing a clause boundary.
PerturbationRule negative_concord() {
  PerturbationRule r;
  r.feature = FeatureId(154);
  r.name = "negative_concord";
  r.category = Category::Negation;
  r.precondition = "indefinite (any, anything, anyone, anybody, ever, anywhere) right of a clause-mate neg";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::set<TokenIndex> found;
    for (TokenIndex n = 1; n <= q.size(); ++n) {
      if (!q.dep_in(n, {"neg"})) continue;
      const TokenIndex verb = q.tok(n).head;
      for (TokenIndex i = n + 1; i <= q.size(); ++i) {
        if (!negative_counterparts().contains(q.lower(i))) continue;
        TokenIndex cur = i;
        bool in_scope = false;
        while (cur != 0) {
          if (cur == verb) {
            in_scope = true;
            break;
          }
          if (opens_clause(q, cur)) break;
          cur = q.tok(cur).head;
        }
        if (in_scope) found.insert(i);
      }
    }
    std::vector<Site> sites;
    for (TokenIndex i : found) sites.push_back(single_site(i));
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& t = s.at(site.anchor);
    const auto lower = to_lower_ascii(t.surface);
    std::string neg = negative_counterparts().at(lower);
    if (lower == "any" && t.deprel != "det") neg = "none";
    return replace_one(t, transfer_capitalization(t.surface, neg));
  };
  return r;
}

PerturbationRule dont() {
  PerturbationRule r;
  r.feature = FeatureId(158);
  r.name = "dont";
  r.category = Category::Negation;
  r.precondition = "auxiliary does immediately followed by a negator attached to the same verb";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i < q.size(); ++i) {
      if (q.lower(i) != "does" || !q.dep_in(i, {"aux"})) continue;
      if (!q.dep_in(i + 1, {"neg"}) || q.tok(i + 1).head != q.tok(i).head) continue;
      sites.push_back(Site{i, {i, i + 1}});
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& t = s.at(site.anchor);
    Rewrite rw = replace_one(t, transfer_capitalization(t.surface, "do"));
    rw.replacement.front().xpos = "VBP";
    return rw;
  };
  return r;
}

PerturbationRule never_negator(std::shared_ptr<const Lexicon> lex) {
  PerturbationRule r;
  r.feature = FeatureId(159);
  r.name = "never_negator";
  r.category = Category::Negation;
  r.precondition = "did + negator + bare verb (VB) head, contiguous, after the subject";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i + 2 <= q.size(); ++i) {
      if (q.lower(i) != "did" || !q.dep_in(i, {"aux"})) continue;
      const TokenIndex verb = q.tok(i).head;
      if (verb != i + 2 || !q.xpos_in(verb, {"VB"})) continue;
      if (!q.dep_in(i + 1, {"neg"}) || q.tok(i + 1).head != verb) continue;
      auto subj = q.subject_of(verb);
      if (!subj || *subj > i) continue;
      sites.push_back(Site{verb, {i, i + 1, verb}});
    }
    return sites;
  };
  r.rewrite = [lex](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& did = s.at(site.extent.front());
    const Token& verb = s.at(site.anchor);
    auto base = base_form(verb);
    if (!base) return std::nullopt;
    Token never = synth(transfer_capitalization(did.surface, "never"), "ADV", "RB");
    Token past = resurface(verb, lex->past_of(to_lower_ascii(*base)));
    past.xpos = "VBD";
    return Rewrite{did.index, verb.index, {never, past}, std::nullopt};
  };
  return r;
}

PerturbationRule null_relcl() {
  PerturbationRule r;
  r.feature = FeatureId(193);
  r.name = "null_relcl";
  r.category = Category::Relativization;
  r.precondition = "subject relativizer who/that/which opening a relative clause (relcl)";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i <= q.size(); ++i) {
      if (!q.xpos_in(i, {"WP", "WDT"}) || !q.dep_in(i, {"nsubj"})) continue;
      const auto w = q.lower(i);
      if (w != "who" && w != "that" && w != "which") continue;
      const TokenIndex head = q.tok(i).head;
      if (!q.dep_in(head, {"relcl"}) || q.subtree_span(head).first != i) continue;
      sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence&, const Site& site) -> std::optional<Rewrite> {
    return Rewrite{site.anchor, site.anchor, {}, std::nullopt};
  };
  return r;
}

PerturbationRule drop_inf_to() {
  PerturbationRule r;
  r.feature = FeatureId(208);
  r.name = "drop_inf_to";
  r.category = Category::Complementation;
  r.precondition = "infinitival to (TO, aux) directly before a bare-verb xcomp of another verb";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex i = 1; i < q.size(); ++i) {
      if (!q.xpos_in(i, {"TO"}) || !q.dep_in(i, {"aux"})) continue;
      const TokenIndex verb = q.tok(i).head;
      if (verb != i + 1 || !q.xpos_in(verb, {"VB"}) || !q.dep_in(verb, {"xcomp"})) continue;
      const TokenIndex governor = q.tok(verb).head;
      if (governor == 0 || !q.is_verbal(governor)) continue;
      sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence&, const Site& site) -> std::optional<Rewrite> {
    return Rewrite{site.anchor, site.anchor, {}, std::nullopt};
  };
  return r;
}

PerturbationRule to_infinitive() {
  PerturbationRule r;
  r.feature = FeatureId(209);
  r.name = "to_infinitive";
  r.category = Category::Complementation;
  r.precondition =
      "bare infinitive (VB, ccomp/xcomp, no aux) complementing make/let/help/have/see/hear/watch/feel";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    static constexpr std::string_view kGovernors[] = {"make", "let", "help", "have", "see", "hear", "watch", "feel"};
    std::vector<Site> sites;
    for (TokenIndex i = 1; i <= q.size(); ++i) {
      if (!q.xpos_in(i, {"VB"}) || !q.dep_in(i, {"ccomp", "xcomp"})) continue;
      const TokenIndex governor = q.tok(i).head;
      if (governor == 0 || governor > i) continue;
      if (std::ranges::find(kGovernors, q.lemma(governor)) == std::end(kGovernors)) continue;
      if (!q.children_with(i, {"aux", "auxpass", "mark"}).empty()) continue;
      if (q.subtree_span(i).first != i && !q.child_with(i, {"nsubj"})) continue;
      sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& verb = s.at(site.anchor);
    return Rewrite{verb.index, verb.index, {synth("to", "PART", "TO"), verb}, std::nullopt};
  };
  return r;
}

PerturbationRule subord_conjunction_doubling() {
  PerturbationRule r;
  r.feature = FeatureId(215);
  r.name = "subord_conjunction_doubling";
  r.category = Category::AdverbialSubordination;
  r.precondition =
      "fronted adverbial clause marked although/though/because/since, followed by a comma before the main clause";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    for (TokenIndex m = 1; m <= q.size(); ++m) {
      const auto w = q.lower(m);
      if (!q.dep_in(m, {"mark"})) continue;
      if (w != "although" && w != "though" && w != "because" && w != "since") continue;
      const TokenIndex clause = q.tok(m).head;
      if (!q.dep_in(clause, {"advcl"})) continue;
      const TokenIndex main = q.tok(clause).head;
      const TokenIndex comma = q.subtree_span(clause).second + 1;
      if (main == 0 || comma >= main || comma >= q.size()) continue;
      if (q.tok(comma).surface != "," || q.tok(comma).head != main) continue;
      const auto after = q.lower(comma + 1);
      if (after == "but" || after == "so" || after == "yet") continue;
      sites.push_back(Site{m, {m, comma}});
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const auto marker = to_lower_ascii(s.at(site.anchor).surface);
    const bool causal = marker == "because" || marker == "since";
    Token comma = s.at(site.extent.back());
    comma.space_after = true;
    return Rewrite{comma.index, comma.index, {comma, synth(causal ? "so" : "but", "CCONJ", "CC")}, std::nullopt};
  };
  return r;
}

PerturbationRule null_prepositions() {
  PerturbationRule r;
  r.feature = FeatureId(216);
  r.name = "null_prepositions";
  r.category = Category::AdverbsPrepositions;
  r.precondition = "directional to (IN, prep) with a pobj, governed by a motion verb";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    static constexpr std::string_view kMotion[] = {"go", "come", "walk", "drive", "run", "travel",
                                                   "move", "return", "fly", "ride", "head"};
    std::vector<Site> sites;
    for (TokenIndex i = 1; i < q.size(); ++i) {
      if (q.lower(i) != "to" || !q.xpos_in(i, {"IN"}) || !q.dep_in(i, {"prep"})) continue;
      if (!q.child_with(i, {"pobj"})) continue;
      const TokenIndex head = q.tok(i).head;
      if (head == 0 || std::ranges::find(kMotion, q.lemma(head)) == std::end(kMotion)) continue;
      sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence&, const Site& site) -> std::optional<Rewrite> {
    return Rewrite{site.anchor, site.anchor, {}, std::nullopt};
  };
  return r;
}

PerturbationRule flat_adj_for_adv() {
  PerturbationRule r;
  r.feature = FeatureId(221);
  r.name = "flat_adj_for_adv";
  r.category = Category::AdverbsPrepositions;
  r.precondition = "manner adverb in -ly (RB, advmod of a verb), excluding frequency/degree/focus adverbs";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    // Adverbs whose -ly-less form is not the matching adjective.
    static const std::set<std::string, std::less<>> kExcluded = {
        "only", "early", "likely", "daily", "weekly", "monthly", "yearly", "hourly", "really",
        "nearly", "mostly", "merely", "hardly", "lately", "shortly", "barely", "scarcely", "fairly",
        "pretty", "simply", "certainly", "probably", "finally", "actually", "usually", "generally",
        "apparently", "obviously", "clearly", "recently", "currently", "especially", "exactly", "highly",
    };
    std::vector<Site> sites;
    for (TokenIndex i = 1; i <= q.size(); ++i) {
      const auto w = q.lower(i);
      if (!q.xpos_in(i, {"RB"}) || !q.dep_in(i, {"advmod"}) || !w.ends_with("ly")) continue;
      if (kExcluded.contains(w) || adverb_to_adjective(w) == w) continue;
      const TokenIndex head = q.tok(i).head;
      if (head == 0 || !q.tok(head).xpos.starts_with("VB")) continue;
      sites.push_back(single_site(i));
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& t = s.at(site.anchor);
    Rewrite rw = replace_one(t, transfer_capitalization(t.surface, adverb_to_adjective(to_lower_ascii(t.surface))));
    rw.replacement.front().xpos = "JJ";
    return rw;
  };
  return r;
}

PerturbationRule negative_inversion() {
  PerturbationRule r;
  r.feature = FeatureId(226);
  r.name = "negative_inversion";
  r.category = Category::DiscourseWordOrder;
  r.precondition = "negative subject (nobody/nothing/none) directly before its finite verb (VBD/VBZ/VBP, no aux)";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    if (q.is_question()) return sites;
    for (TokenIndex i = 1; i < q.size(); ++i) {
      const auto w = q.lower(i);
      if (w != "nobody" && w != "nothing" && w != "none" && w != "noone") continue;
      if (!q.dep_in(i, {"nsubj"})) continue;
      const TokenIndex verb = q.tok(i).head;
      if (verb != i + 1 || !q.xpos_in(verb, {"VBD", "VBZ", "VBP"})) continue;
      if (!q.children_with(verb, {"aux", "auxpass", "neg"}).empty()) continue;
      if (q.lemma(verb) == "be") continue;
      sites.push_back(Site{verb, {i, verb}});
    }
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site& site) -> std::optional<Rewrite> {
    const Token& subj = s.at(site.extent.front());
    const Token& verb = s.at(site.anchor);
    auto base = base_form(verb);
    if (!base) return std::nullopt;
    const bool past = verb.xpos == "VBD";
    Token aux = synth(transfer_capitalization(subj.surface, past ? "did" : "do"), "AUX", past ? "VBD" : "VBP", false);
    Token neg = synth("n't", "PART", "RB");
    Token moved = resurface(subj, subj.xpos.starts_with("NNP") ? subj.surface : lowercase_first(subj.surface));
    moved.space_after = true;
    Token bare = resurface(verb, to_lower_ascii(*base));
    bare.xpos = "VB";
    return Rewrite{subj.index, verb.index, {aux, neg, moved, bare}, std::nullopt};
  };
  return r;
}

PerturbationRule drop_aux_yn() {
  PerturbationRule r;
  r.feature = FeatureId(229);
  r.name = "drop_aux_yn";
  r.category = Category::DiscourseWordOrder;
  r.precondition =
      "sentence-initial do/does/did (aux) directly followed by the subject of its verb, sentence ends with '?'";
  r.match = [](const ParsedSentence& s) {
    Query q(s);
    std::vector<Site> sites;
    if (q.size() < 3 || !q.is_question()) return sites;
    const auto w = q.lower(1);
    if ((w != "do" && w != "does" && w != "did") || !q.dep_in(1, {"aux"})) return sites;
    const TokenIndex verb = q.tok(1).head;
    auto subj = q.subject_of(verb);
    if (!subj || q.subtree_span(*subj).first != 2) return sites;
    if (q.child_with(verb, {"neg"})) return sites;
    sites.push_back(Site{1, {1, 2}});
    return sites;
  };
  r.rewrite = [](const ParsedSentence& s, const Site&) -> std::optional<Rewrite> {
    const Token& aux = s.at(1);
    const Token& next = s.at(2);
    return Rewrite{1, 2, {resurface(next, transfer_capitalization(aux.surface, next.surface))}, std::nullopt};
  };
  return r;
}

}  // namespace dialect_forge::rules
