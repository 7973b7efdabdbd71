#include "dialect_forge/provenance_json.hpp"

#include "json.hpp"

namespace dialect_forge {
namespace {

using json = nlohmann::ordered_json;

}  // namespace

std::string provenance_to_json(const Provenance& p) {
  json edits = json::array();
  for (const Edit& e : p.edits) {
    edits.push_back({{"feature", e.feature.number()},
                     {"original_span", {e.original_span.start, e.original_span.end}},
                     {"replacement", e.replacement},
                     {"site_token_indices", e.site_token_indices}});
  }
  json out = {{"sent_id", p.sent_id},
              {"source_text", p.source_text},
              {"output_text", p.output_text},
              {"seed", p.seed},
              {"edits", std::move(edits)}};
  return out.dump();
}

Provenance provenance_from_json(std::string_view line) {
  try {
    const json j = json::parse(line);
    Provenance p;
    p.sent_id = j.at("sent_id").get<std::string>();
    p.source_text = j.at("source_text").get<std::string>();
    p.output_text = j.at("output_text").get<std::string>();
    p.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& e : j.at("edits")) {
      const auto& span = e.at("original_span");
      if (!span.is_array() || span.size() != 2) throw Error("original_span must be [start, end]");
      p.edits.push_back(Edit{FeatureId(e.at("feature").get<int>()),
                             Span{span[0].get<std::size_t>(), span[1].get<std::size_t>()},
                             e.at("replacement").get<std::string>(),
                             e.at("site_token_indices").get<std::vector<TokenIndex>>()});
    }
    return p;
  } catch (const json::exception& e) {
    throw Error(std::string("bad provenance record: ") + e.what());
  }
}

std::vector<Provenance> read_provenance_jsonl(std::istream& in) {
  std::vector<Provenance> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(provenance_from_json(line));
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

}  // namespace dialect_forge
