#include "corpus.hpp"

#include <map>
#include <sstream>

#include "dialect_forge/dataset.hpp"
#include "dialect_forge/morphology.hpp"
#include "dialect_forge/random.hpp"
#include "json.hpp"

namespace dialect_forge::testing {
namespace {

struct Word {
  const char* surface;
  const char* lemma;
  const char* xpos;
};

// Slot pools. A slot name may carry a digit suffix ($NOUN2) to draw a second,
// independent word from the same pool.
const std::map<std::string, std::vector<Word>>& pools() {
  static const std::map<std::string, std::vector<Word>> kPools = {
      {"SUBJ", {{"I", "I", "PRP"}, {"you", "you", "PRP"}, {"we", "we", "PRP"}, {"they", "they", "PRP"}}},
      {"SUBJP", {{"you", "you", "PRP"}, {"we", "we", "PRP"}, {"they", "they", "PRP"}}},
      {"SUBJSG", {{"he", "he", "PRP"}, {"she", "she", "PRP"}, {"John", "John", "NNP"}, {"Maria", "Maria", "NNP"},
                 {"the teacher", "", ""}}},
      {"PERSON", {{"man", "man", "NN"}, {"woman", "woman", "NN"}, {"teacher", "teacher", "NN"},
                  {"doctor", "doctor", "NN"}, {"farmer", "farmer", "NN"}}},
      {"NOUN", {{"ball", "ball", "NN"}, {"book", "book", "NN"}, {"letter", "letter", "NN"}, {"car", "car", "NN"},
                {"house", "house", "NN"}, {"song", "song", "NN"}, {"report", "report", "NN"}}},
      {"NOUNS", {{"wives", "wife", "NNS"}, {"knives", "knife", "NNS"}, {"leaves", "leaf", "NNS"},
                 {"books", "book", "NNS"}, {"boxes", "box", "NNS"}, {"men", "man", "NNS"},
                 {"children", "child", "NNS"}, {"chairs", "chair", "NNS"}}},
      {"MASS", {{"furniture", "furniture", "NN"}, {"equipment", "equipment", "NN"}, {"luggage", "luggage", "NN"},
                {"advice", "advice", "NN"}, {"mail", "mail", "NN"}, {"evidence", "evidence", "NN"},
                {"water", "water", "NN"}, {"milk", "milk", "NN"}}},
      {"PLACE", {{"town", "town", "NN"}, {"school", "school", "NN"}, {"market", "market", "NN"},
                 {"church", "church", "NN"}, {"station", "station", "NN"}}},
      {"VB", {{"read", "read", "VB"}, {"take", "take", "VB"}, {"find", "find", "VB"}, {"fix", "fix", "VB"},
              {"write", "write", "VB"}, {"carry", "carry", "VB"}, {"watch", "watch", "VB"}}},
      {"VBZ", {{"reads", "read", "VBZ"}, {"takes", "take", "VBZ"}, {"finds", "find", "VBZ"}, {"fixes", "fix", "VBZ"},
               {"writes", "write", "VBZ"}, {"carries", "carry", "VBZ"}, {"watches", "watch", "VBZ"}}},
      {"VBZI", {{"speaks", "speak", "VBZ"}, {"sings", "sing", "VBZ"}, {"walks", "walk", "VBZ"},
                {"works", "work", "VBZ"}, {"talks", "talk", "VBZ"}}},
      {"VBDT", {{"caught", "catch", "VBD"}, {"saw", "see", "VBD"}, {"took", "take", "VBD"},
                {"wrote", "write", "VBD"}, {"found", "find", "VBD"}, {"fixed", "fix", "VBD"},
                {"ate", "eat", "VBD"}, {"carried", "carry", "VBD"}}},
      {"VBDI", {{"came", "come", "VBD"}, {"left", "leave", "VBD"}, {"called", "call", "VBD"},
                {"ran", "run", "VBD"}, {"went", "go", "VBD"}}},
      {"VBN", {{"eaten", "eat", "VBN"}, {"seen", "see", "VBN"}, {"taken", "take", "VBN"},
               {"written", "write", "VBN"}, {"found", "find", "VBN"}, {"fixed", "fix", "VBN"}}},
      {"VBNP", {{"scolded", "scold", "VBN"}, {"praised", "praise", "VBN"}, {"helped", "help", "VBN"},
                {"chosen", "choose", "VBN"}, {"seen", "see", "VBN"}}},
      {"VBG", {{"thinking", "think", "VBG"}, {"talking", "talk", "VBG"}, {"worrying", "worry", "VBG"},
               {"dreaming", "dream", "VBG"}}},
      {"VBGI", {{"coming", "come", "VBG"}, {"leaving", "leave", "VBG"}, {"cooking", "cook", "VBG"},
                {"waiting", "wait", "VBG"}}},
      {"ADVLY", {{"softly", "softly", "RB"}, {"quickly", "quickly", "RB"}, {"quietly", "quietly", "RB"},
                 {"slowly", "slowly", "RB"}, {"carefully", "carefully", "RB"}, {"happily", "happily", "RB"}}},
      {"JJ", {{"friendly", "friendly", "JJ"}, {"smart", "smart", "JJ"}, {"kind", "kind", "JJ"},
              {"tired", "tired", "JJ"}, {"busy", "busy", "JJ"}}},
      {"JJR", {{"easier", "easy", "JJR"}, {"bigger", "big", "JJR"}, {"faster", "fast", "JJR"},
               {"older", "old", "JJR"}, {"cheaper", "cheap", "JJR"}}},
      {"NUM", {{"two", "two", "CD"}, {"three", "three", "CD"}, {"five", "five", "CD"}}},
  };
  return kPools;
}

// Compact parse notation, one token per line: surface lemma xpos head deprel.
// A trailing '~' on the surface marks SpaceAfter=No. Slot tokens ($NAME) take
// surface, lemma and xpos from the pool; "the teacher" style multiword fillers
// are not allowed in templates that use the slot as a single token, so SUBJSG
// fillers are expanded by the det rule below.
const std::vector<std::string>& declaratives() {
  static const std::vector<std::string> kTemplates = {
      // uninflected 3sg
      "$SUBJSG _ _ 2 nsubj\n$VBZ _ _ 0 ROOT\nthe the DT 4 det\n$NOUN~ _ _ 2 dobj\n. . . 2 punct",
      // irregular past, present perfect for past
      "$SUBJ _ _ 2 nsubj\n$VBDT _ _ 0 ROOT\nthe the DT 4 det\n$NOUN~ _ _ 2 dobj\n. . . 2 punct",
      // perfect have
      "$SUBJ _ _ 3 nsubj\nhave have VBP 3 aux\n$VBN _ _ 0 ROOT\nthe the DT 5 det\n$NOUN~ _ _ 3 dobj\n. . . 3 punct",
      // agentive passive with a trailing adjunct
      "The the DT 2 det\n$NOUN _ _ 4 nsubjpass\nwas be VBD 4 auxpass\n$VBNP _ _ 0 ROOT\nby by IN 4 agent\n"
      "the the DT 7 det\n$PERSON _ _ 5 pobj\nyesterday~ yesterday NN 4 npadvmod\n. . . 4 punct",
      // agentive passive closing the sentence
      "The the DT 2 det\n$PERSON _ _ 4 nsubjpass\nwas be VBD 4 auxpass\n$VBNP _ _ 0 ROOT\nby by IN 4 agent\n"
      "his his PRP$ 7 poss\n$PERSON2 _ _ 5 pobj",
      // negative concord
      "$SUBJ _ _ 4 nsubj\ndo~ do VBP 4 aux\nn't not RB 4 neg\nwant want VB 0 ROOT\nany any DT 6 det\n"
      "$MASS~ _ _ 4 dobj\n. . . 4 punct",
      // does n't -> do n't
      "$SUBJSG _ _ 5 nsubj\ndoes~ do VBZ 5 aux\nn't not RB 5 neg\nalways always RB 5 advmod\n$VB _ _ 0 ROOT\n"
      "the the DT 7 det\n$NOUN~ _ _ 5 dobj\n. . . 5 punct",
      // did n't -> never
      "$SUBJSG _ _ 4 nsubj\ndid~ do VBD 4 aux\nn't not RB 4 neg\n$VB _ _ 0 ROOT\nthe the DT 6 det\n"
      "$NOUN~ _ _ 4 dobj\n. . . 4 punct",
      // existential there + plural
      "There there EX 2 expl\nare be VBP 0 ROOT\n$NUM _ _ 4 nummod\n$NOUNS _ _ 2 attr\nin in IN 4 prep\n"
      "the the DT 7 det\n$PLACE~ _ _ 5 pobj\n. . . 2 punct",
      // existential there + singular
      "There~ there EX 2 expl\n's be VBZ 0 ROOT\nsome some DT 4 det\n$MASS _ _ 2 attr\nin in IN 4 prep\n"
      "the the DT 7 det\n$PLACE~ _ _ 5 pobj\n. . . 2 punct",
      // progressive be
      "$SUBJP _ _ 4 nsubj\nare be VBP 4 aux\nalways always RB 4 advmod\n$VBG _ _ 0 ROOT\nabout about IN 4 prep\n"
      "it~ it PRP 5 pobj\n. . . 4 punct",
      // subject relative
      "The the DT 2 det\n$PERSON _ _ 6 nsubj\nwho who WP 4 nsubj\n$VBZI _ _ 2 relcl\nthere there RB 4 advmod\n"
      "is be VBZ 0 ROOT\n$JJ~ _ _ 6 acomp\n. . . 6 punct",
      // infinitival to
      "$SUBJP _ _ 3 nsubjpass\nwere be VBD 3 auxpass\nallowed allow VBN 0 ROOT\nto to TO 5 aux\n$VB _ _ 3 xcomp\n"
      "it~ it PRP 5 dobj\n. . . 3 punct",
      // bare infinitive
      "$SUBJSG _ _ 2 nsubj\nmade make VBD 0 ROOT\nme I PRP 4 nsubj\n$VB _ _ 2 ccomp\nit~ it PRP 4 dobj\n. . . 2 punct",
      // fronted concessive clause
      "Although although IN 3 mark\nyou you PRP 3 nsubj\nare be VBP 9 advcl\n$JJ~ _ _ 3 acomp\n, , , 9 punct\n"
      "you you PRP 9 nsubjpass\nare be VBP 9 auxpass\nnot not RB 9 neg\nappreciated~ appreciate VBN 0 ROOT\n. . . 9 punct",
      // directional to
      "$SUBJP _ _ 3 nsubj\nare be VBP 3 aux\ngoing go VBG 0 ROOT\nto to IN 3 prep\n$PLACE~ _ _ 4 pobj\n. . . 3 punct",
      // manner adverb
      "$SUBJSG _ _ 2 nsubj\n$VBZI _ _ 0 ROOT\nso so RB 4 advmod\n$ADVLY~ _ _ 2 advmod\n. . . 2 punct",
      // negative subject
      "Nobody nobody NN 2 nsubj\n$VBDI~ _ _ 0 ROOT\n. . . 2 punct",
      // modal
      "$SUBJ _ _ 3 nsubj\ncould could MD 3 aux\n$VB _ _ 0 ROOT\nthat~ that DT 3 dobj\n. . . 3 punct",
      // synthetic comparative
      "That that DT 2 nsubj\nis be VBZ 0 ROOT\nso so RB 4 advmod\nmuch much RB 5 npadvmod\n$JJR _ _ 2 acomp\n"
      "to to TO 7 aux\n$VB~ _ _ 5 xcomp\n. . . 2 punct",
      // plain sentence without any catalog site
      "$SUBJ _ _ 2 nsubj\nlike like VBP 0 ROOT\nthe the DT 4 det\n$PLACE~ _ _ 2 dobj\n. . . 2 punct",
  };
  return kTemplates;
}

const std::vector<std::string>& questions() {
  static const std::vector<std::string> kTemplates = {
      "Do do VBP 3 aux\n$SUBJP _ _ 3 nsubj\n$VB _ _ 0 ROOT\nthe the DT 5 det\n$NOUN~ _ _ 3 dobj\n? ? . 3 punct",
      "Does do VBZ 3 aux\n$SUBJSG _ _ 3 nsubj\n$VB _ _ 0 ROOT\nthe the DT 5 det\n$NOUN~ _ _ 3 dobj\n? ? . 3 punct",
      "Did do VBD 3 aux\n$SUBJ _ _ 3 nsubj\n$VB _ _ 0 ROOT\nthe the DT 5 det\n$NOUN~ _ _ 3 dobj\n? ? . 3 punct",
      "Who who WP 2 nsubj\n$VBDT _ _ 0 ROOT\nthe the DT 4 det\n$NOUN~ _ _ 2 dobj\n? ? . 2 punct",
      "Who~ who WP 3 nsubj\n's be VBZ 3 aux\n$VBGI _ _ 0 ROOT\ntoday~ today NN 3 npadvmod\n? ? . 3 punct",
      "What what WP 4 dobj\ndid do VBD 4 aux\n$SUBJ _ _ 4 nsubj\n$VB~ _ _ 0 ROOT\n? ? . 4 punct",
      "Why why WRB 4 advmod\ndid do VBD 4 aux\n$SUBJ _ _ 4 nsubj\ngo go VB 0 ROOT\nto to IN 4 prep\n"
      "the the DT 7 det\n$PLACE~ _ _ 5 pobj\n? ? . 4 punct",
      "Who who WP 4 nsubj\ndoes~ do VBZ 4 aux\nn't not RB 4 neg\nwant want VB 0 ROOT\nany any DT 6 det\n"
      "$MASS~ _ _ 4 dobj\n? ? . 4 punct",
      "How how WRB 4 advmod\ncould could MD 4 aux\n$SUBJ _ _ 4 nsubj\n$VB _ _ 0 ROOT\nit it PRP 4 dobj\n"
      "so so RB 7 advmod\n$ADVLY~ _ _ 4 advmod\n? ? . 4 punct",
      "Who who WP 2 nsubj\n$VBZI _ _ 0 ROOT\nso so RB 4 advmod\n$ADVLY~ _ _ 2 advmod\n? ? . 2 punct",
      "Are be VBP 0 ROOT\nthere there EX 1 expl\nany any DT 4 det\n$NOUNS _ _ 1 attr\nin in IN 4 prep\n"
      "the the DT 7 det\n$PLACE~ _ _ 5 pobj\n? ? . 1 punct",
      "Is be VBZ 0 ROOT\nthe the DT 3 det\n$NOUN _ _ 1 nsubj\n$JJR _ _ 1 acomp\nthan than IN 4 prep\n"
      "the the DT 7 det\n$NOUN2~ _ _ 5 pobj\n? ? . 1 punct",
      "Where where WRB 2 advmod\nis be VBZ 0 ROOT\nthe the DT 4 det\n$NOUN~ _ _ 2 nsubj\n? ? . 2 punct",
      "When when WRB 4 advmod\nwas be VBD 4 auxpass\nthe the DT 4 det\n$NOUN _ _ 5 nsubjpass\n$VBNP~ _ _ 0 ROOT\n? ? . 5 punct",
      "Who who WP 3 nsubj\nhas have VBZ 3 aux\n$VBN _ _ 0 ROOT\nthe the DT 5 det\n$NOUN~ _ _ 3 dobj\n? ? . 3 punct",
  };
  return kTemplates;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

const Word& pick(const std::string& slot, std::map<std::string, const Word*>& chosen, SplitMix64& rng) {
  auto it = chosen.find(slot);
  if (it != chosen.end()) return *it->second;
  std::string pool = slot;
  while (!pool.empty() && std::isdigit(static_cast<unsigned char>(pool.back()))) pool.pop_back();
  const auto& words = pools().at(pool);
  const Word* w = &words[rng.below(words.size())];
  chosen[slot] = w;
  return *w;
}

ParsedSentence instantiate(const std::string& tmpl, SplitMix64& rng, const std::string& sent_id) {
  std::map<std::string, const Word*> chosen;
  struct Row {
    std::string surface, lemma, xpos, deprel;
    long head;
    bool space_after;
    bool determiner_split;
  };
  std::vector<Row> rows;
  for (const auto& line : split(tmpl, '\n')) {
    auto f = split(line, ' ');
    if (f.size() != 5) throw Error("bad template line: " + line);
    Row row{f[0], f[1], f[2], f[4], std::stol(f[3]), true, false};
    if (row.surface.size() > 1 && row.surface.back() == '~') {
      row.surface.pop_back();
      row.space_after = false;
    }
    if (row.surface.starts_with("$")) {
      const Word& w = pick(row.surface.substr(1), chosen, rng);
      row.surface = w.surface;
      row.lemma = w.lemma;
      row.xpos = w.xpos;
      // "the teacher": expand into determiner + noun below.
      row.determiner_split = row.xpos.empty();
    }
    rows.push_back(std::move(row));
  }

  // Expand determiner-noun fillers, renumbering heads.
  std::vector<std::size_t> new_index(rows.size() + 1, 0);
  std::size_t next = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].determiner_split) ++next;
    new_index[i + 1] = next++;
  }
  ParsedSentence s;
  s.sent_id = sent_id;
  s.comments.push_back(" sent_id = " + sent_id);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    const auto head = r.head == 0 ? 0 : new_index[static_cast<std::size_t>(r.head)];
    if (r.determiner_split) {
      const auto words = split(r.surface, ' ');
      Token det;
      det.index = new_index[i + 1] - 1;
      det.surface = words[0];
      det.lemma = "the";
      det.upos = "DET";
      det.xpos = "DT";
      det.head = new_index[i + 1];
      det.deprel = "det";
      s.tokens.push_back(det);
      Token noun;
      noun.index = new_index[i + 1];
      noun.surface = words[1];
      noun.lemma = words[1];
      noun.upos = "NOUN";
      noun.xpos = "NN";
      noun.head = head;
      noun.deprel = r.deprel;
      noun.space_after = r.space_after;
      s.tokens.push_back(noun);
      continue;
    }
    Token t;
    t.index = new_index[i + 1];
    t.surface = r.surface;
    t.lemma = r.lemma;
    t.xpos = r.xpos;
    t.head = head;
    t.deprel = r.deprel;
    t.space_after = r.space_after;
    if (t.xpos.starts_with("VB"))
      t.upos = (t.deprel == "aux" || t.deprel == "auxpass") ? "AUX" : "VERB";
    else if (t.xpos == "MD")
      t.upos = "AUX";
    else if (t.xpos == "NN" || t.xpos == "NNS")
      t.upos = "NOUN";
    else if (t.xpos == "NNP")
      t.upos = "PROPN";
    else if (t.xpos == "PRP" || t.xpos == "WP" || t.xpos == "EX" || t.xpos == "PRP$")
      t.upos = "PRON";
    else if (t.xpos == "DT")
      t.upos = "DET";
    else if (t.xpos.starts_with("JJ"))
      t.upos = "ADJ";
    else if (t.xpos.starts_with("RB") || t.xpos == "WRB")
      t.upos = t.deprel == "neg" ? "PART" : "ADV";
    else if (t.xpos == "IN")
      t.upos = "ADP";
    else if (t.xpos == "TO")
      t.upos = "PART";
    else if (t.xpos == "CD")
      t.upos = "NUM";
    else
      t.upos = "PUNCT";
    s.tokens.push_back(std::move(t));
  }
  s.tokens.front().surface = transfer_capitalization("X", s.tokens.front().surface);
  validate_sentence(s);
  s.comments.push_back(" text = " + detokenize(s.tokens));
  return s;
}

const std::vector<std::string>& templates(Mood mood) { return mood == Mood::Question ? questions() : declaratives(); }

}  // namespace

std::size_t template_count(Mood mood) {
  return mood == Mood::Mixed ? declaratives().size() + questions().size() : templates(mood).size();
}

ParsedSentence from_template(Mood mood, std::size_t index, std::uint64_t seed, const std::string& sent_id) {
  SplitMix64 rng(seed);
  if (mood == Mood::Mixed) {
    if (index < declaratives().size()) return instantiate(declaratives()[index], rng, sent_id);
    return instantiate(questions().at(index - declaratives().size()), rng, sent_id);
  }
  return instantiate(templates(mood).at(index), rng, sent_id);
}

Document synthetic_corpus(std::size_t n, std::uint64_t seed, Mood mood, const std::string& doc_id) {
  Document doc;
  doc.doc_id = doc_id;
  SplitMix64 rng(seed);
  const std::size_t count = template_count(mood);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t t = rng.below(count);
    doc.sentences.push_back(from_template(mood, t, rng.next(), doc_id + "-" + std::to_string(i)));
  }
  return doc;
}

SyntheticDataset synthetic_dataset(std::size_t n, std::uint64_t seed) {
  using json = nlohmann::ordered_json;
  static const char* kStories[] = {
      "Ana's café opened in 1998 … \"the best\" in town.",
      "Line one\nline two\twith a tab and a backslash \\ here.",
      "Plain story about a farmer and his dog.",
      "Emoji \U0001F600 and accents: naïve, résumé.",
  };
  SyntheticDataset out;
  SplitMix64 rng(seed);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string id = "rec-" + std::to_string(r);
    json rec;
    rec["id"] = id;
    rec["source"] = "synthetic";
    rec["story"] = kStories[rng.below(std::size(kStories))];
    rec["questions"] = json::array();
    rec["answers"] = json::array();
    const std::size_t nq = 1 + rng.below(3);
    for (std::size_t q = 0; q < nq; ++q) {
      const std::string field = "questions[" + std::to_string(q) + "].input_text";
      std::string text;
      // Some fields hold a statement followed by a question.
      const std::size_t sentences = rng.below(4) == 0 ? 2 : 1;
      for (std::size_t k = 0; k < sentences; ++k) {
        const bool last = k + 1 == sentences;
        const Mood mood = last ? Mood::Question : Mood::Declarative;
        ParsedSentence s = from_template(mood, rng.below(template_count(mood)), rng.next(), sidecar_sent_id(id, field, k));
        s.comments = {" sent_id = " + s.sent_id};
        if (!text.empty()) text += ' ';
        text += detokenize(s.tokens);
        out.parses.sentences.push_back(std::move(s));
      }
      rec["questions"].push_back({{"turn_id", q + 1}, {"input_text", text}, {"bad_turn", "no"}});
      rec["answers"].push_back(
          {{"turn_id", q + 1}, {"span_start", rng.below(100)}, {"span_text", "it was \"quoted\""}, {"input_text", "yes"}});
    }
    rec["meta"] = {{"score", 0.25 * static_cast<double>(rng.below(5))}, {"tags", {"a", "b"}}, {"empty", json::object()}};
    out.records.push_back(rec.dump());
  }
  return out;
}

}  // namespace dialect_forge::testing
