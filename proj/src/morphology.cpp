#include "dialect_forge/morphology.hpp"

#include <cctype>
#include <fstream>

#ifndef DIALECT_FORGE_DATA_DIR
#define DIALECT_FORGE_DATA_DIR "."
#endif

namespace dialect_forge {
namespace {

bool is_vowel(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a': case 'e': case 'i': case 'o': case 'u': return true;
    default: return false;
  }
}

bool is_consonant(char c) { return std::isalpha(static_cast<unsigned char>(c)) && !is_vowel(c); }

// Minimal UTF-8 handling for first-letter case mapping: ASCII, Latin-1,
// Latin Extended-A, Greek and Cyrillic.
char32_t decode_first(std::string_view s, std::size_t& len) {
  if (s.empty()) {
    len = 0;
    return 0;
  }
  auto b = static_cast<unsigned char>(s[0]);
  auto cont = [&](std::size_t i) { return static_cast<char32_t>(static_cast<unsigned char>(s[i]) & 0x3F); };
  if (b < 0x80) {
    len = 1;
    return b;
  }
  if ((b & 0xE0) == 0xC0 && s.size() >= 2) {
    len = 2;
    return (static_cast<char32_t>(b & 0x1F) << 6) | cont(1);
  }
  if ((b & 0xF0) == 0xE0 && s.size() >= 3) {
    len = 3;
    return (static_cast<char32_t>(b & 0x0F) << 12) | (cont(1) << 6) | cont(2);
  }
  if ((b & 0xF8) == 0xF0 && s.size() >= 4) {
    len = 4;
    return (static_cast<char32_t>(b & 0x07) << 18) | (cont(1) << 12) | (cont(2) << 6) | cont(3);
  }
  len = 1;
  return b;
}

std::string encode(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out += static_cast<char>(c);
  } else if (c < 0x800) {
    out += static_cast<char>(0xC0 | (c >> 6));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else if (c < 0x10000) {
    out += static_cast<char>(0xE0 | (c >> 12));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (c >> 18));
    out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  }
  return out;
}

bool is_upper(char32_t c) {
  if (c >= 'A' && c <= 'Z') return true;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return true;
  if (c >= 0x100 && c <= 0x137) return c % 2 == 0;
  if (c >= 0x391 && c <= 0x3A9) return true;
  if (c >= 0x400 && c <= 0x42F) return true;
  return false;
}

char32_t to_upper(char32_t c) {
  if (c >= 'a' && c <= 'z') return c - 32;
  if (c >= 0xE0 && c <= 0xFE && c != 0xF7) return c - 0x20;
  if (c >= 0x101 && c <= 0x137 && c % 2 == 1) return c - 1;
  if (c >= 0x3B1 && c <= 0x3C9 && c != 0x3C2) return c - 0x20;
  if (c >= 0x430 && c <= 0x44F) return c - 0x20;
  if (c >= 0x450 && c <= 0x45F) return c - 0x50;
  return c;
}

char32_t to_lower(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  if (c >= 0x100 && c <= 0x137 && c % 2 == 0) return c + 1;
  if (c >= 0x391 && c <= 0x3A9) return c + 0x20;
  if (c >= 0x410 && c <= 0x42F) return c + 0x20;
  if (c >= 0x400 && c <= 0x40F) return c + 0x50;
  return c;
}

std::string map_first(std::string_view s, char32_t (*fn)(char32_t)) {
  std::size_t len = 0;
  char32_t c = decode_first(s, len);
  if (len == 0) return {};
  return encode(fn(c)) + std::string(s.substr(len));
}

std::string lower_copy(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string to_lower_ascii(std::string_view s) { return lower_copy(s); }

bool starts_upper(std::string_view s) {
  std::size_t len = 0;
  return is_upper(decode_first(s, len));
}

std::string lowercase_first(std::string_view s) { return map_first(s, to_lower); }

std::string transfer_capitalization(std::string_view original, std::string_view replacement) {
  if (!starts_upper(original)) return std::string(replacement);
  return map_first(replacement, to_upper);
}

std::string regular_plural(std::string_view lemma) {
  if (lemma.empty()) return {};
  std::string w(lemma);
  std::string lower = lower_copy(w);
  auto ends = [&](std::string_view suf) { return lower.ends_with(suf); };
  if (ends("s") || ends("x") || ends("z") || ends("ch") || ends("sh")) return w + "es";
  if (lower.size() >= 2 && lower.back() == 'y' && is_consonant(lower[lower.size() - 2]))
    return w.substr(0, w.size() - 1) + "ies";
  return w + "s";
}

std::string regular_past(std::string_view lemma) {
  if (lemma.empty()) return {};
  std::string w(lemma);
  std::string lower = lower_copy(w);
  if (lower.back() == 'e') return w + "d";
  if (lower.size() >= 2 && lower.back() == 'y' && is_consonant(lower[lower.size() - 2]))
    return w.substr(0, w.size() - 1) + "ied";
  return w + "ed";
}

std::optional<std::string> base_form(const Token& token) {
  if (!token.has_lemma()) return std::nullopt;
  return token.lemma;
}

std::string adverb_to_adjective(std::string_view form) {
  std::string w(form);
  std::string lower = lower_copy(w);
  if (!lower.ends_with("ly")) return w;
  std::string out;
  if (lower.ends_with("ily") && lower.size() > 3) {
    out = w.substr(0, w.size() - 3) + "y";  // happily -> happy
  } else if (lower.ends_with("bly")) {
    out = w.substr(0, w.size() - 1) + "e";  // terribly -> terrible
  } else if (lower.ends_with("lly") && !lower.ends_with("ally")) {
    out = w.substr(0, w.size() - 1);  // fully -> full
  } else {
    out = w.substr(0, w.size() - 2);
  }
  if (out.size() < 2 || lower_copy(out).ends_with("ly")) return w;
  return out;
}

bool Lexicon::is_mass_noun(std::string_view lemma) const {
  return mass_nouns_.contains(lower_copy(lemma));
}

const Lexicon::IrregularVerb* Lexicon::irregular(std::string_view lemma) const {
  auto it = irregular_.find(lower_copy(lemma));
  return it == irregular_.end() ? nullptr : &it->second;
}

std::string Lexicon::past_of(std::string_view lemma) const {
  if (const auto* v = irregular(lemma)) return v->past;
  return regular_past(lemma);
}

std::string Lexicon::participle_of(std::string_view lemma) const {
  if (const auto* v = irregular(lemma)) return v->participle;
  return regular_past(lemma);
}

Lexicon Lexicon::load(const std::string& dir) {
  Lexicon lex;
  {
    const std::string path = dir + "/mass_nouns.txt";
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      lex.add_mass_noun(lower_copy(line));
    }
  }
  {
    const std::string path = dir + "/irregular_past.tsv";
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      auto t1 = line.find('\t');
      auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
      if (t2 == std::string::npos) throw ParseError(path + ": expected lemma\\tpast\\tparticiple", line_no);
      lex.add_irregular(line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1), line.substr(t2 + 1));
    }
  }
  return lex;
}

const Lexicon& Lexicon::shipped() {
  static const Lexicon lex = load(std::string(DIALECT_FORGE_DATA_DIR) + "/lexicons");
  return lex;
}

}  // namespace dialect_forge
