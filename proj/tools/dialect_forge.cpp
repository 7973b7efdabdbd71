// dialect-forge: command-line front end.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "dialect_forge/analytics.hpp"
#include "dialect_forge/dataset.hpp"
#include "dialect_forge/eval.hpp"
#include "dialect_forge/pipeline.hpp"
#include "dialect_forge/provenance_json.hpp"
#include "dialect_forge/survey.hpp"
#include "dialect_forge/survey_service.hpp"
#include "httplib.h"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace dialect_forge;
using json = nlohmann::ordered_json;

namespace {

std::string default_data_dir() {
  if (const char* env = std::getenv("DIALECT_FORGE_DATA")) return env;
  return DIALECT_FORGE_DATA_DIR;
}

// A path, or the name of a shipped profile such as "IndE".
DialectProfile resolve_profile(const std::string& arg, const std::string& data_dir) {
  if (fs::is_regular_file(arg)) return load_profile_file(arg);
  const fs::path shipped = fs::path(data_dir) / "profiles" / (arg + ".tsv");
  if (fs::is_regular_file(shipped)) return load_profile_file(shipped.string());
  throw Error("no profile file or shipped profile named '" + arg + "'");
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  return out;
}

std::vector<std::string> split_fields(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

struct TransformArgs {
  std::string profile, conllu, jsonl, fields, parses, out, provenance;
  std::uint64_t seed = 0;
  double density = 1.0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

int run_transform(const TransformArgs& a, const std::string& data_dir) {
  const Transformer t(TransformConfig{resolve_profile(a.profile, data_dir), a.seed, a.density});
  auto prov_out = open_out(a.provenance);
  auto out = open_out(a.out);
  TransformStats stats;
  if (!a.jsonl.empty()) {
    const std::string sidecar = a.parses.empty() ? a.conllu : a.parses;
    if (sidecar.empty()) throw Error("--jsonl needs a sidecar parse file (--parses)");
    if (a.fields.empty()) throw Error("--jsonl needs --fields");
    DatasetOptions options;
    for (const auto& f : split_fields(a.fields)) options.fields.push_back(FieldSelector::parse(f));
    const auto result = transform_dataset(read_lines(a.jsonl), read_conllu_file(sidecar), options, t);
    for (const auto& r : result.records) out << r << '\n';
    for (const auto& p : result.provenance) prov_out << provenance_to_json(p) << '\n';
    stats = result.stats;
  } else {
    if (a.conllu.empty()) throw Error("one of --conllu or --jsonl is required");
    Document doc = read_conllu_file(a.conllu);
    if (doc.doc_id.empty()) doc.doc_id = fs::path(a.conllu).stem().string();
    for (const auto& r : t.transform_document(doc, a.threads)) {
      out << r.provenance.output_text << '\n';
      prov_out << provenance_to_json(r.provenance) << '\n';
      stats += r.stats;
    }
  }
  std::cerr << "sites matched " << stats.sites_matched << ", applied " << stats.sites_applied << ", blocked "
            << stats.sites_blocked << ", skipped " << stats.sites_skipped << '\n';
  return 0;
}

std::vector<FeatureId> read_universe(const std::string& path) {
  std::vector<FeatureId> out;
  for (const auto& line : read_lines(path)) {
    std::istringstream ss(line.substr(0, line.find('#')));
    for (int n; ss >> n;) out.emplace_back(n);
    if (!ss.eof()) throw Error("bad feature number in " + path + ": " + line);
  }
  return out;
}

int run_distance(const std::string& pa, const std::string& pb, const std::string& universe_path,
                 const std::string& data_dir) {
  const auto a = resolve_profile(pa, data_dir), b = resolve_profile(pb, data_dir);
  const auto universe = universe_path.empty() ? full_universe() : read_universe(universe_path);
  std::cout << manhattan_distance(feature_vector(a, universe), feature_vector(b, universe)) << '\n';
  return 0;
}

int run_density(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  const auto report = density_report(read_provenance_jsonl(in));
  json out;
  out["sentences_total"] = report.sentences_total;
  out["sentences_changed"] = report.sentences_changed;
  out["changed_fraction"] = report.changed_fraction();
  out["edits_per_feature"] = json::object();
  for (const auto& [f, n] : report.edits_per_feature) out["edits_per_feature"][std::to_string(f.number())] = n;
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct SurveyArgs {
  std::string profiles, bank, threshold = "B", host = "127.0.0.1", static_dir;
  std::vector<std::string> exclude;
  bool serve = false;
  int port = 8080;
};

int run_survey(const SurveyArgs& a, const std::string& data_dir) {
  const std::string dir = a.profiles.empty() ? (fs::path(data_dir) / "profiles").string() : a.profiles;
  const std::string bank_path = a.bank.empty() ? (fs::path(data_dir) / "survey" / "bank.tsv").string() : a.bank;
  BinaryProfiles profiles;
  const auto threshold = pervasiveness_from_letter(a.threshold.at(0));
  for (const auto& p : load_profile_dir(dir, {a.exclude.begin(), a.exclude.end()}))
    profiles[p.name] = binarize(p, threshold);
  const auto bank = load_question_bank_file(bank_path);
  if (!a.serve) {
    run_terminal_survey(profiles, bank, std::cin, std::cout);
    return 0;
  }
  SurveyService service(profiles, bank);
  httplib::Server server;
  service.mount(server, a.static_dir);
  std::cerr << "serving on http://" << a.host << ':' << a.port << '\n';
  if (!server.listen(a.host, a.port)) throw Error("cannot listen on " + a.host + ":" + std::to_string(a.port));
  return 0;
}

// One line per example: {"id"?, "text"} or a bare JSON string.
std::vector<std::pair<std::string, std::string>> read_texts(const std::string& path) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t line_no = 0;
  for (const auto& line : read_lines(path)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = json::parse(line);
      if (j.is_string()) {
        out.emplace_back("", j.get<std::string>());
      } else {
        std::string id;
        if (j.contains("id")) id = j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump();
        out.emplace_back(id, j.at("text").get<std::string>());
      }
    } catch (const json::exception& e) {
      throw Error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

int run_eval(const std::string& pred_a, const std::string& pred_b, const std::string& gold_path,
             const std::string& metric, std::size_t resamples, std::uint64_t seed) {
  const auto a = read_texts(pred_a), b = read_texts(pred_b), gold = read_texts(gold_path);
  if (a.size() != gold.size() || b.size() != gold.size())
    throw Error("prediction and gold files differ in length");
  PairedScores scores;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (const auto* p : {&a[i], &b[i]})
      if (!p->first.empty() && !gold[i].first.empty() && p->first != gold[i].first)
        throw Error("id mismatch at example " + std::to_string(i) + ": " + p->first + " vs " + gold[i].first);
    auto score = [&](const std::string& pred) {
      return metric == "em" ? static_cast<double>(exact_match(pred, gold[i].second)) : token_f1(pred, gold[i].second);
    };
    scores.system_a.push_back(score(a[i].second));
    scores.system_b.push_back(score(b[i].second));
  }
  const auto r = paired_bootstrap(scores, resamples, seed);
  json out{{"score_a", r.score_a}, {"score_b", r.score_b}, {"delta", r.mean_delta}, {"p_value", r.p_value}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based dialect transformation, dialect analytics and survey tools"};
  app.require_subcommand(1);
  std::string data_dir = default_data_dir();
  app.add_option("--data-dir", data_dir, "Directory holding profiles/, lexicons/ and survey/");

  TransformArgs t;
  auto* transform = app.add_subcommand("transform", "Transform CoNLL-U sentences or JSON Lines records");
  transform->add_option("--profile", t.profile, "Profile file or shipped profile name")->required();
  transform->add_option("--seed", t.seed, "Global seed");
  transform->add_option("--conllu", t.conllu, "Parsed input sentences");
  transform->add_option("--jsonl", t.jsonl, "JSON Lines records to transform");
  transform->add_option("--fields", t.fields, "Comma-separated field selectors, e.g. questions[*].input_text");
  transform->add_option("--parses", t.parses, "Sidecar CoNLL-U parses for --jsonl");
  transform->add_option("--out", t.out, "Output text (one sentence per line) or records")->required();
  transform->add_option("--provenance", t.provenance, "Provenance JSON Lines output")->required();
  transform->add_option("--density", t.density, "Density scale")->check(CLI::Range(0.0, 1.0));
  transform->add_option("--threads", t.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::string pa, pb, universe;
  auto* distance = app.add_subcommand("distance", "Normalized Manhattan distance between two profiles");
  distance->add_option("--profile-a", pa)->required();
  distance->add_option("--profile-b", pb)->required();
  distance->add_option("--universe", universe, "File of feature numbers (default: all 235)");

  std::string prov_path;
  auto* density = app.add_subcommand("density", "Summarize a provenance file");
  density->add_option("--provenance", prov_path)->required();

  SurveyArgs s;
  auto* survey = app.add_subcommand("survey", "Run the dialect survey in the terminal or over HTTP");
  survey->add_option("--profiles", s.profiles, "Directory of profile .tsv files");
  survey->add_option("--bank", s.bank, "Question bank file");
  survey->add_option("--exclude", s.exclude, "Profile names to leave out");
  survey->add_option("--threshold", s.threshold, "Least pervasive class counted as present")
      ->check(CLI::IsMember({"A", "B", "C"}));
  survey->add_flag("--serve", s.serve, "Serve the HTTP API instead of asking on stdin");
  survey->add_option("--host", s.host);
  survey->add_option("--port", s.port)->check(CLI::Range(1, 65535));
  survey->add_option("--static", s.static_dir, "Directory served at / alongside the API");

  std::string pred_a, pred_b, gold, metric = "f1";
  std::size_t resamples = 10000;
  std::uint64_t eval_seed = 0;
  auto* eval = app.add_subcommand("eval", "Compare two systems with a paired bootstrap test");
  eval->add_option("--pred-a", pred_a)->required();
  eval->add_option("--pred-b", pred_b)->required();
  eval->add_option("--gold", gold)->required();
  eval->add_option("--metric", metric)->check(CLI::IsMember({"f1", "em"}));
  eval->add_option("--resamples", resamples)->check(CLI::PositiveNumber);
  eval->add_option("--seed", eval_seed);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*transform) return run_transform(t, data_dir);
    if (*distance) return run_distance(pa, pb, universe, data_dir);
    if (*density) return run_density(prov_path);
    if (*survey) return run_survey(s, data_dir);
    if (*eval) return run_eval(pred_a, pred_b, gold, metric, resamples, eval_seed);
  } catch (const std::exception& e) {
    std::cerr << "dialect-forge: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
