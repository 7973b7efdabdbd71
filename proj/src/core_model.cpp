#include "dialect_forge/core_model.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace dialect_forge {

void validate_sentence(const ParsedSentence& sentence) {
  const auto& toks = sentence.tokens;
  const std::string where = sentence.sent_id.empty() ? "sentence" : "sentence " + sentence.sent_id;
  if (toks.empty()) throw ParseError(where + ": no tokens");

  std::size_t roots = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.index != i + 1)
      throw ParseError(where + ": token ids must run 1.." + std::to_string(toks.size()));
    if (t.head > toks.size())
      throw ParseError(where + ": token " + std::to_string(t.index) + " has dangling head " +
                       std::to_string(t.head));
    if (t.head == t.index)
      throw ParseError(where + ": token " + std::to_string(t.index) + " heads itself");
    if (t.head == 0) ++roots;
  }
  if (roots != 1)
    throw ParseError(where + ": expected exactly one root, found " + std::to_string(roots));

  // Every token must reach the root within n steps.
  for (const Token& t : toks) {
    TokenIndex cur = t.index;
    std::size_t steps = 0;
    while (cur != 0) {
      cur = toks[cur - 1].head;
      if (++steps > toks.size())
        throw ParseError(where + ": cycle through token " + std::to_string(t.index));
    }
  }
}

FeatureId::FeatureId(int number) : number_(number) {
  if (number < kMin || number > kMax)
    throw Error("feature number " + std::to_string(number) + " outside 1..235");
}

double pervasiveness_to_probability(Pervasiveness p) {
  switch (p) {
    case Pervasiveness::A: return 1.0;
    case Pervasiveness::B: return 0.6;
    case Pervasiveness::C: return 0.3;
    case Pervasiveness::D:
    case Pervasiveness::X:
    case Pervasiveness::U: return 0.0;
  }
  return 0.0;
}

char to_letter(Pervasiveness p) {
  static constexpr char kLetters[] = {'A', 'B', 'C', 'D', 'X', 'U'};
  return kLetters[static_cast<int>(p)];
}

Pervasiveness pervasiveness_from_letter(char letter) {
  switch (letter) {
    case 'A': return Pervasiveness::A;
    case 'B': return Pervasiveness::B;
    case 'C': return Pervasiveness::C;
    case 'D': return Pervasiveness::D;
    case 'X': return Pervasiveness::X;
    case 'U': return Pervasiveness::U;
    default: throw Error(std::string("unknown pervasiveness class '") + letter + "'");
  }
}

Pervasiveness DialectProfile::get(FeatureId f) const {
  auto it = features.find(f);
  return it == features.end() ? Pervasiveness::U : it->second;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

DialectProfile load_profile(std::string_view text, std::string name) {
  DialectProfile profile;
  profile.name = std::move(name);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError("expected <feature>\\t<class>", line_no);
    std::string_view num = trim(line.substr(0, tab));
    std::string_view cls = trim(line.substr(tab + 1));
    int number = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), number);
    if (ec != std::errc() || ptr != num.data() + num.size())
      throw ParseError("feature number '" + std::string(num) + "' is not an integer", line_no);
    if (number < FeatureId::kMin || number > FeatureId::kMax)
      throw ParseError("feature number " + std::to_string(number) + " outside 1..235", line_no);
    if (cls.size() != 1) throw ParseError("class must be one of A B C D X U", line_no);
    Pervasiveness p;
    try {
      p = pervasiveness_from_letter(cls.front());
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
    if (!profile.features.emplace(FeatureId(number), p).second)
      throw DuplicateFeatureError("duplicate feature " + std::to_string(number), line_no);
  }
  return profile;
}

DialectProfile load_profile_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open profile " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  if (auto dot = name.rfind('.'); dot != std::string::npos) name = name.substr(0, dot);
  try {
    return load_profile(buf.str(), name);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string serialize_profile(const DialectProfile& profile) {
  std::string out;
  for (const auto& [f, p] : profile.features) {
    out += std::to_string(f.number());
    out += '\t';
    out += to_letter(p);
    out += '\n';
  }
  return out;
}

DialectProfile merge_multi(const std::vector<DialectProfile>& profiles, std::string name) {
  if (profiles.empty()) throw Error("merge_multi needs at least one profile");
  // Ties on probability (D/X/U) resolve to the earliest enum value so the
  // result does not depend on input order.
  auto rank = [](Pervasiveness p) {
    return std::make_pair(pervasiveness_to_probability(p), -static_cast<int>(p));
  };
  DialectProfile merged;
  merged.name = std::move(name);
  for (const auto& profile : profiles) {
    for (const auto& [f, p] : profile.features) {
      auto [it, inserted] = merged.features.emplace(f, p);
      if (!inserted && rank(p) > rank(it->second)) it->second = p;
    }
  }
  return merged;
}

std::string replay_edits(std::string_view source, const std::vector<Edit>& edits) {
  std::vector<const Edit*> order;
  order.reserve(edits.size());
  for (const auto& e : edits) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(), [](const Edit* a, const Edit* b) {
    return a->original_span.start < b->original_span.start;
  });

  std::string out;
  std::size_t cursor = 0;
  for (const Edit* e : order) {
    const Span& s = e->original_span;
    if (s.start > s.end || s.end > source.size()) throw Error("edit span out of range");
    if (s.start < cursor) throw Error("overlapping edit spans");
    out.append(source.substr(cursor, s.start - cursor));
    out += e->replacement;
    cursor = s.end;
  }
  out.append(source.substr(cursor));
  return out;
}

}  // namespace dialect_forge
