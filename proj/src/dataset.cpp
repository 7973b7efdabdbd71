#include "dialect_forge/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "json.hpp"

namespace dialect_forge {
namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kSep = "::";

// Minimal raw-text JSON scanner: finds value boundaries without re-encoding.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : t_(text) {}

  std::size_t skip_ws(std::size_t p) const {
    while (p < t_.size() && (t_[p] == ' ' || t_[p] == '\t' || t_[p] == '\n' || t_[p] == '\r')) ++p;
    return p;
  }

  std::size_t skip_string(std::size_t p) const {
    if (p >= t_.size() || t_[p] != '"') fail(p);
    for (++p; p < t_.size(); ++p) {
      if (t_[p] == '\\') {
        ++p;
      } else if (t_[p] == '"') {
        return p + 1;
      }
    }
    fail(p);
  }

  std::size_t skip_value(std::size_t p) const {
    p = skip_ws(p);
    if (p >= t_.size()) fail(p);
    const char c = t_[p];
    if (c == '"') return skip_string(p);
    if (c == '{' || c == '[') {
      const char close = c == '{' ? '}' : ']';
      p = skip_ws(p + 1);
      if (p < t_.size() && t_[p] == close) return p + 1;
      while (true) {
        if (c == '{') {
          p = skip_ws(skip_string(skip_ws(p)));
          if (p >= t_.size() || t_[p] != ':') fail(p);
          ++p;
        }
        p = skip_ws(skip_value(p));
        if (p >= t_.size()) fail(p);
        if (t_[p] == ',') {
          ++p;
          continue;
        }
        if (t_[p] == close) return p + 1;
        fail(p);
      }
    }
    while (p < t_.size() && t_[p] != ',' && t_[p] != '}' && t_[p] != ']' && t_[p] != ' ' && t_[p] != '\t' &&
           t_[p] != '\n' && t_[p] != '\r')
      ++p;
    return p;
  }

  // Start of the member value for `key` in the object at p.
  std::size_t member(std::size_t p, const std::string& key) const {
    p = skip_ws(p);
    if (p >= t_.size() || t_[p] != '{') fail(p);
    p = skip_ws(p + 1);
    if (p < t_.size() && t_[p] == '}') throw Error("key '" + key + "' not found");
    while (true) {
      p = skip_ws(p);
      const std::size_t key_end = skip_string(p);
      const std::string name = json::parse(t_.substr(p, key_end - p)).get<std::string>();
      p = skip_ws(key_end);
      if (p >= t_.size() || t_[p] != ':') fail(p);
      p = skip_ws(p + 1);
      if (name == key) return p;
      p = skip_ws(skip_value(p));
      if (p < t_.size() && t_[p] == ',') {
        ++p;
        continue;
      }
      throw Error("key '" + key + "' not found");
    }
  }

  std::size_t element(std::size_t p, std::size_t index) const {
    p = skip_ws(p);
    if (p >= t_.size() || t_[p] != '[') fail(p);
    p = skip_ws(p + 1);
    for (std::size_t i = 0;; ++i) {
      if (p >= t_.size() || t_[p] == ']') throw Error("index " + std::to_string(index) + " out of range");
      if (i == index) return p;
      p = skip_ws(skip_value(p));
      if (p < t_.size() && t_[p] == ',') p = skip_ws(p + 1);
    }
  }

 private:
  [[noreturn]] void fail(std::size_t p) const { throw Error("malformed JSON near byte " + std::to_string(p)); }
  std::string_view t_;
};

void expand(const json& node, const std::vector<FieldSelector::Step>& steps, std::size_t i, FieldPath& cur,
            std::vector<FieldPath>& out, const std::string& selector) {
  if (i == steps.size()) {
    if (!node.is_string()) throw Error("selector '" + selector + "' resolves to a non-string value at " + cur.to_string());
    out.push_back(cur);
    return;
  }
  const auto& step = steps[i];
  if (const auto* key = std::get_if<FieldSelector::Key>(&step)) {
    if (!node.is_object() || !node.contains(key->name))
      throw Error("selector '" + selector + "' does not resolve: missing key '" + key->name + "'");
    cur.steps.emplace_back(key->name);
    expand(node.at(key->name), steps, i + 1, cur, out, selector);
    cur.steps.pop_back();
  } else if (const auto* idx = std::get_if<FieldSelector::Index>(&step)) {
    if (!node.is_array() || idx->value >= node.size())
      throw Error("selector '" + selector + "' does not resolve: no element " + std::to_string(idx->value));
    cur.steps.emplace_back(idx->value);
    expand(node.at(idx->value), steps, i + 1, cur, out, selector);
    cur.steps.pop_back();
  } else {
    if (!node.is_array()) throw Error("selector '" + selector + "' does not resolve: [*] on a non-array");
    for (std::size_t k = 0; k < node.size(); ++k) {
      cur.steps.emplace_back(k);
      expand(node.at(k), steps, i + 1, cur, out, selector);
      cur.steps.pop_back();
    }
  }
}

bool blank(std::string_view s) {
  return std::ranges::all_of(s, [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; });
}

}  // namespace

FieldSelector FieldSelector::parse(std::string_view text) {
  FieldSelector sel;
  sel.text_ = std::string(text);
  std::size_t p = 0;
  auto bad = [&](const std::string& why) { return Error("bad field selector '" + std::string(text) + "': " + why); };
  if (text.empty()) throw bad("empty");
  while (p < text.size()) {
    if (text[p] == '[') {
      auto close = text.find(']', p);
      if (close == std::string_view::npos) throw bad("unclosed '['");
      auto inner = text.substr(p + 1, close - p - 1);
      if (inner == "*") {
        sel.steps_.emplace_back(Wildcard{});
      } else {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), v);
        if (inner.empty() || ec != std::errc() || ptr != inner.data() + inner.size()) throw bad("bad index");
        sel.steps_.emplace_back(Index{v});
      }
      p = close + 1;
      if (p < text.size() && text[p] == '.') {
        ++p;
        if (p == text.size()) throw bad("trailing '.'");
      }
      continue;
    }
    auto end = text.find_first_of(".[", p);
    if (end == std::string_view::npos) end = text.size();
    if (end == p) throw bad("empty key");
    sel.steps_.emplace_back(Key{std::string(text.substr(p, end - p))});
    p = end;
    if (p < text.size() && text[p] == '.') {
      ++p;
      if (p == text.size()) throw bad("trailing '.'");
    }
  }
  return sel;
}

std::string FieldPath::to_string() const {
  std::string out;
  for (const auto& step : steps) {
    if (const auto* key = std::get_if<std::string>(&step)) {
      if (!out.empty()) out += '.';
      out += *key;
    } else {
      out += '[' + std::to_string(std::get<std::size_t>(step)) + ']';
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> locate_json_value(std::string_view json_text, const FieldPath& path) {
  Scanner sc(json_text);
  std::size_t p = sc.skip_ws(0);
  for (const auto& step : path.steps) {
    if (const auto* key = std::get_if<std::string>(&step))
      p = sc.member(p, *key);
    else
      p = sc.element(p, std::get<std::size_t>(step));
  }
  return {p, sc.skip_value(p)};
}

std::string sidecar_sent_id(std::string_view record_id, std::string_view field_path, std::size_t sentence_index) {
  std::string out(record_id);
  out += kSep;
  out += field_path;
  out += kSep;
  out += std::to_string(sentence_index);
  return out;
}

DatasetResult transform_dataset(const std::vector<std::string>& jsonl_records, const Document& parses,
                                const DatasetOptions& options, const Transformer& transformer) {
  // "<record>::<field>" -> sentences ordered by index.
  std::map<std::string, std::map<std::size_t, const ParsedSentence*>> sidecar;
  for (const ParsedSentence& s : parses.sentences) {
    auto sep = s.sent_id.rfind(kSep);
    if (sep == std::string::npos) continue;
    std::size_t k = 0;
    std::string_view idx = std::string_view(s.sent_id).substr(sep + kSep.size());
    auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), k);
    if (ec != std::errc() || ptr != idx.data() + idx.size()) continue;
    sidecar[s.sent_id.substr(0, sep)][k] = &s;
  }

  DatasetResult result;
  for (std::size_t line_no = 0; line_no < jsonl_records.size(); ++line_no) {
    const std::string& line = jsonl_records[line_no];
    if (blank(line)) {
      result.records.push_back(line);
      continue;
    }
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error("record " + std::to_string(line_no) + ": " + e.what());
    }
    std::string record_id = std::to_string(line_no);
    if (record.is_object() && record.contains(options.id_field)) {
      const auto& id = record.at(options.id_field);
      record_id = id.is_string() ? id.get<std::string>() : id.dump();
    }

    std::vector<FieldPath> paths;
    for (const auto& sel : options.fields) {
      FieldPath cur;
      try {
        expand(record, sel.steps(), 0, cur, paths, sel.text());
      } catch (const Error& e) {
        throw Error("record " + record_id + ": " + e.what());
      }
    }

    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::string>> replacements;
    for (const FieldPath& path : paths) {
      const std::string field = path.to_string();
      const std::string key = record_id + std::string(kSep) + field;
      std::string value;
      {
        const json* node = &record;
        for (const auto& step : path.steps) {
          if (const auto* k = std::get_if<std::string>(&step))
            node = &node->at(*k);
          else
            node = &node->at(std::get<std::size_t>(step));
        }
        value = node->get<std::string>();
      }
      auto found = sidecar.find(key);
      if (found == sidecar.end()) {
        if (blank(value)) continue;
        throw Error("record " + record_id + ": no parse for field " + field);
      }

      Provenance prov;
      prov.sent_id = key;
      prov.source_text = value;
      prov.seed = derive_seed(transformer.config().global_seed, key, 0);
      std::size_t cursor = 0;
      for (const auto& [k, sentence] : found->second) {
        const std::string text = detokenize(sentence->tokens);
        const std::size_t at = value.find(text, cursor);
        if (at == std::string::npos)
          throw Error("record " + record_id + ": parse " + sentence->sent_id + " does not match the text of " + field);
        SentenceResult r = transformer.transform(*sentence, derive_seed(transformer.config().global_seed, key, k));
        result.stats += r.stats;
        for (Edit e : r.provenance.edits) {
          e.original_span.start += at;
          e.original_span.end += at;
          prov.edits.push_back(std::move(e));
        }
        cursor = at + text.size();
      }
      if (prov.edits.empty()) continue;
      prov.output_text = replay_edits(value, prov.edits);
      replacements.push_back({locate_json_value(line, path), json(prov.output_text).dump()});
      result.provenance.push_back(std::move(prov));
    }

    std::string out = line;
    std::ranges::sort(replacements, std::greater<>{}, [](const auto& r) { return r.first.first; });
    for (const auto& [span, literal] : replacements) out.replace(span.first, span.second - span.first, literal);
    result.records.push_back(std::move(out));
  }
  return result;
}

}  // namespace dialect_forge
