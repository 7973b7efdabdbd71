#include "fixtures.hpp"

#include <fstream>
#include <sstream>

namespace dialect_forge::testing {
namespace {

const ParsedSentence& find(const Document& doc, const std::string& sent_id) {
  for (const auto& s : doc.sentences)
    if (s.sent_id == sent_id) return s;
  throw Error("no fixture sentence " + sent_id);
}

}  // namespace

std::string data_path(const std::string& relative) { return std::string(DIALECT_FORGE_DATA_DIR) + "/" + relative; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<RuleExample> rule_examples() {
  std::vector<RuleExample> out;
  std::istringstream in(read_text(data_path("fixtures/rule_examples.tsv")));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1)
      cols.push_back(line.substr(start, tab - start));
    cols.push_back(line.substr(start));
    if (cols.size() != 4) throw Error("bad fixture row: " + line);
    out.push_back({std::stoi(cols[0]), cols[3], cols[1], cols[2]});
  }
  return out;
}

const Document& rule_example_parses() {
  static const Document doc = read_conllu_file(data_path("fixtures/rule_examples.conllu"));
  return doc;
}

const ParsedSentence& parse_for(const std::string& sent_id) { return find(rule_example_parses(), sent_id); }

const Document& sample_parses() {
  static const Document doc = read_conllu_file(data_path("fixtures/samples.conllu"));
  return doc;
}

const ParsedSentence& sample(const std::string& sent_id) { return find(sample_parses(), sent_id); }

}  // namespace dialect_forge::testing
