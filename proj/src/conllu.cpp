#include "dialect_forge/conllu.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace dialect_forge {
namespace {

constexpr std::string_view kSentIdPrefix = " sent_id = ";
constexpr std::string_view kNewDocPrefix = " newdoc id = ";

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

bool parse_index(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string field_or_empty(std::string_view s) { return std::string(s); }

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Document run() {
    Document doc;
    std::size_t pos = 0;
    while (pos < text_.size()) {
      std::size_t nl = text_.find('\n', pos);
      if (nl == std::string_view::npos) nl = text_.size();
      std::string_view line = text_.substr(pos, nl - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      pos = nl + 1;
      ++line_no_;
      if (line.empty()) {
        flush(doc);
        continue;
      }
      if (line.front() == '#') {
        if (!current_.tokens.empty())
          throw ParseError(where() + ": comment inside token block", line_no_);
        comment(doc, line.substr(1));
        continue;
      }
      token(line);
    }
    flush(doc);
    return doc;
  }

 private:
  std::string where() const {
    return current_.sent_id.empty() ? "sentence " + std::to_string(sentence_no_ + 1)
                                    : "sentence " + current_.sent_id;
  }

  void comment(Document& doc, std::string_view body) {
    if (!in_block_) {
      in_block_ = true;
      block_start_ = line_no_;
    }
    if (body.starts_with(kSentIdPrefix)) current_.sent_id = std::string(body.substr(kSentIdPrefix.size()));
    if (body.starts_with(kNewDocPrefix) && doc.sentences.empty() && doc.doc_id.empty())
      doc.doc_id = std::string(body.substr(kNewDocPrefix.size()));
    current_.comments.emplace_back(body);
  }

  void token(std::string_view line) {
    if (!in_block_) {
      in_block_ = true;
      block_start_ = line_no_;
    }
    auto cols = split(line, '\t');
    if (cols.size() != 10)
      throw ParseError(where() + ": expected 10 columns, got " + std::to_string(cols.size()), line_no_);
    if (cols[0].find('-') != std::string_view::npos)
      throw ParseError(where() + ": multiword token ranges are not supported", line_no_);
    if (cols[0].find('.') != std::string_view::npos)
      throw ParseError(where() + ": empty nodes are not supported", line_no_);

    Token t;
    if (!parse_index(cols[0], t.index) || t.index == 0)
      throw ParseError(where() + ": non-integer ID '" + std::string(cols[0]) + "'", line_no_);
    if (t.index != current_.tokens.size() + 1)
      throw ParseError(where() + ": ID " + std::to_string(t.index) + " out of sequence", line_no_);
    t.surface = field_or_empty(cols[1]);
    if (t.surface.empty()) throw ParseError(where() + ": empty FORM", line_no_);
    t.lemma = field_or_empty(cols[2]);
    t.upos = field_or_empty(cols[3]);
    t.xpos = field_or_empty(cols[4]);
    if (cols[5] != "_") {
      for (auto feat : split(cols[5], '|')) {
        auto eq = feat.find('=');
        if (eq == std::string_view::npos)
          throw ParseError(where() + ": malformed FEATS entry '" + std::string(feat) + "'", line_no_);
        t.morph_features.emplace_back(feat.substr(0, eq), feat.substr(eq + 1));
      }
    }
    if (!parse_index(cols[6], t.head))
      throw ParseError(where() + ": non-integer HEAD '" + std::string(cols[6]) + "'", line_no_);
    t.deprel = field_or_empty(cols[7]);
    if (cols[8] != "_") throw ParseError(where() + ": enhanced dependencies are not supported", line_no_);
    if (cols[9] != "_") {
      for (auto item : split(cols[9], '|')) {
        if (item == "SpaceAfter=No")
          t.space_after = false;
        else
          t.misc.emplace_back(item);
      }
    }
    current_.tokens.push_back(std::move(t));
  }

  void flush(Document& doc) {
    if (!in_block_) return;
    if (current_.tokens.empty())
      throw ParseError(where() + ": comment block without tokens", block_start_);
    try {
      validate_sentence(current_);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), block_start_);
    }
    if (!current_.sent_id.empty() && !seen_ids_.insert(current_.sent_id).second)
      throw ParseError("duplicate sent_id " + current_.sent_id, block_start_);
    doc.sentences.push_back(std::move(current_));
    current_ = {};
    in_block_ = false;
    ++sentence_no_;
  }

  std::string_view text_;
  std::size_t line_no_ = 0;
  std::size_t block_start_ = 0;
  std::size_t sentence_no_ = 0;
  bool in_block_ = false;
  ParsedSentence current_;
  std::set<std::string> seen_ids_;
};

void append_token(std::string& out, const Token& t) {
  out += std::to_string(t.index);
  out += '\t';
  out += t.surface;
  out += '\t';
  out += t.lemma.empty() ? "_" : t.lemma;
  out += '\t';
  out += t.upos.empty() ? "_" : t.upos;
  out += '\t';
  out += t.xpos.empty() ? "_" : t.xpos;
  out += '\t';
  if (t.morph_features.empty()) {
    out += '_';
  } else {
    for (std::size_t i = 0; i < t.morph_features.size(); ++i) {
      if (i) out += '|';
      out += t.morph_features[i].first;
      out += '=';
      out += t.morph_features[i].second;
    }
  }
  out += '\t';
  out += std::to_string(t.head);
  out += '\t';
  out += t.deprel.empty() ? "_" : t.deprel;
  out += "\t_\t";

  std::vector<std::string> misc = t.misc;
  if (!t.space_after) misc.emplace_back("SpaceAfter=No");
  std::stable_sort(misc.begin(), misc.end());
  if (misc.empty()) {
    out += '_';
  } else {
    for (std::size_t i = 0; i < misc.size(); ++i) {
      if (i) out += '|';
      out += misc[i];
    }
  }
  out += '\n';
}

}  // namespace

Document parse_conllu(std::string_view text) { return Reader(text).run(); }

Document read_conllu_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_conllu(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string serialize_conllu(const Document& doc) {
  std::string out;
  for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
    const ParsedSentence& s = doc.sentences[si];
    bool has_newdoc = false;
    bool has_sent_id = false;
    for (const auto& c : s.comments) {
      has_newdoc |= c.starts_with(kNewDocPrefix);
      has_sent_id |= c.starts_with(kSentIdPrefix);
    }
    if (si == 0 && !doc.doc_id.empty() && !has_newdoc) {
      out += "#";
      out += kNewDocPrefix;
      out += doc.doc_id + "\n";
    }
    if (!has_sent_id && !s.sent_id.empty()) {
      out += "#";
      out += kSentIdPrefix;
      out += s.sent_id + "\n";
    }
    for (const auto& c : s.comments) {
      out += '#';
      if (c.starts_with(kSentIdPrefix)) {
        out += kSentIdPrefix;
        out += s.sent_id;
      } else {
        out += c;
      }
      out += '\n';
    }
    for (const Token& t : s.tokens) append_token(out, t);
    out += '\n';
  }
  return out;
}

std::string detokenize(std::span<const Token> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out += tokens[i].surface;
    if (i + 1 < tokens.size() && tokens[i].space_after) out += ' ';
  }
  return out;
}

std::vector<Span> token_offsets(std::span<const Token> tokens) {
  std::vector<Span> spans;
  spans.reserve(tokens.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    spans.push_back({pos, pos + tokens[i].surface.size()});
    pos += tokens[i].surface.size();
    if (i + 1 < tokens.size() && tokens[i].space_after) ++pos;
  }
  return spans;
}

}  // namespace dialect_forge
