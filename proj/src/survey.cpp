#include "dialect_forge/survey.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace dialect_forge {
namespace {

int rank(Pervasiveness p) {
  switch (p) {
    case Pervasiveness::A: return 3;
    case Pervasiveness::B: return 2;
    case Pervasiveness::C: return 1;
    default: return 0;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

bool BinaryProfile::has(FeatureId f) const {
  auto it = has_feature.find(f);
  return it != has_feature.end() && it->second;
}

BinaryProfile binarize(const DialectProfile& profile, Pervasiveness threshold) {
  if (rank(threshold) == 0) throw Error("binarization threshold must be A, B or C");
  BinaryProfile out;
  out.dialect = profile.name;
  for (const auto& [f, cls] : profile.features) out.has_feature[f] = rank(cls) >= rank(threshold);
  return out;
}

QuestionBank load_question_bank(std::string_view text) {
  QuestionBank bank;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError("expected feature<TAB>sentence", line_no);
    const std::string num(trim(line.substr(0, tab)));
    const std::string_view sentence = trim(line.substr(tab + 1));
    char* end = nullptr;
    const long n = std::strtol(num.c_str(), &end, 10);
    if (num.empty() || *end != '\0') throw ParseError("bad feature number '" + num + "'", line_no);
    if (sentence.empty()) throw ParseError("empty sentence", line_no);
    if (n < FeatureId::kMin || n > FeatureId::kMax) throw ParseError("feature out of range: " + num, line_no);
    const FeatureId f(static_cast<int>(n));
    if (!bank.emplace(f, std::string(sentence)).second)
      throw DuplicateFeatureError("duplicate feature " + num, line_no);
  }
  return bank;
}

QuestionBank load_question_bank_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open question bank " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return load_question_bank(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<DialectProfile> load_profile_dir(const std::string& dir, const std::set<std::string>& exclude) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir);
  std::vector<DialectProfile> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".tsv") continue;
    if (exclude.contains(entry.path().stem().string())) continue;
    out.push_back(load_profile_file(entry.path().string()));
  }
  std::ranges::sort(out, {}, &DialectProfile::name);
  return out;
}

bool SurveyState::was_asked(FeatureId f) const {
  return std::ranges::any_of(asked, [&](const auto& a) { return a.first == f; });
}

SurveyState start_survey(const BinaryProfiles& profiles, QuestionBank bank) {
  if (profiles.empty()) throw Error("survey needs at least one dialect profile");
  SurveyState state;
  for (const auto& [name, _] : profiles) state.candidates.insert(name);
  state.question_bank = std::move(bank);
  return state;
}

std::optional<FeatureId> select_feature(const SurveyState& state, const BinaryProfiles& profiles) {
  if (state.candidates.size() <= 1) return std::nullopt;
  std::optional<FeatureId> best;
  std::size_t best_gap = 0;
  for (const auto& [f, _] : state.question_bank) {
    if (state.was_asked(f)) continue;
    std::size_t with = 0;
    for (const auto& name : state.candidates)
      if (profiles.at(name).has(f)) ++with;
    const std::size_t without = state.candidates.size() - with;
    if (with == 0 || without == 0) continue;
    const std::size_t gap = with > without ? with - without : without - with;
    if (!best || gap < best_gap) {
      best = f;
      best_gap = gap;
    }
  }
  return best;
}

SurveyState update_candidates(const SurveyState& state, const BinaryProfiles& profiles, FeatureId f, bool answer) {
  if (state.was_asked(f)) throw Error("feature " + std::to_string(f.number()) + " was already asked");
  SurveyState next = state;
  next.asked.emplace_back(f, answer);
  std::set<std::string> kept;
  for (const auto& name : state.candidates)
    if (profiles.at(name).has(f) == answer) kept.insert(name);
  if (!kept.empty()) next.candidates = std::move(kept);
  return next;
}

std::set<std::string> run_terminal_survey(const BinaryProfiles& profiles, const QuestionBank& bank, std::istream& in,
                                          std::ostream& out) {
  SurveyState state = start_survey(profiles, bank);
  while (auto f = select_feature(state, profiles)) {
    out << "\n" << state.question_bank.at(*f) << "\n" << kSurveyPrompt << " [y/n] " << std::flush;
    std::optional<bool> answer;
    std::string line;
    while (!answer && std::getline(in, line)) {
      const auto word = trim(line);
      if (word == "y" || word == "Y" || word == "yes") answer = true;
      else if (word == "n" || word == "N" || word == "no") answer = false;
      else out << "Please answer y or n: " << std::flush;
    }
    if (!answer) break;
    state = update_candidates(state, profiles, *f, *answer);
  }
  out << "\nResult:";
  for (const auto& name : state.candidates) out << ' ' << name;
  out << "\n";
  return state.candidates;
}

}  // namespace dialect_forge
