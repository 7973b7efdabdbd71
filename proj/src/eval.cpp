#include "dialect_forge/eval.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "dialect_forge/core_model.hpp"
#include "dialect_forge/random.hpp"

namespace dialect_forge {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }
char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

}  // namespace

std::vector<std::string> normalize_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (std::string_view tok : split_ws(text)) {
    while (!tok.empty() && is_punct(tok.front())) tok.remove_prefix(1);
    while (!tok.empty() && is_punct(tok.back())) tok.remove_suffix(1);
    if (tok.empty()) continue;
    std::string t(tok);
    std::ranges::transform(t, t.begin(), lower);
    out.push_back(std::move(t));
  }
  return out;
}

double token_f1(std::string_view prediction, std::string_view gold) {
  const auto pred = normalize_tokens(prediction);
  const auto ref = normalize_tokens(gold);
  if (pred.empty() && ref.empty()) return 1.0;
  if (pred.empty() || ref.empty()) return 0.0;
  std::map<std::string_view, std::size_t> counts;
  for (const auto& t : ref) ++counts[t];
  std::size_t common = 0;
  for (const auto& t : pred) {
    auto it = counts.find(t);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++common;
    }
  }
  if (common == 0) return 0.0;
  const double precision = static_cast<double>(common) / static_cast<double>(pred.size());
  const double recall = static_cast<double>(common) / static_cast<double>(ref.size());
  return 2.0 * precision * recall / (precision + recall);
}

int exact_match(std::string_view prediction, std::string_view gold) {
  auto norm = [](std::string_view s) {
    std::string out;
    for (std::string_view w : split_ws(s)) {
      if (!out.empty()) out += ' ';
      for (char c : w) out += lower(c);
    }
    return out;
  };
  return norm(prediction) == norm(gold) ? 1 : 0;
}

BootstrapResult paired_bootstrap(const PairedScores& scores, std::size_t resamples, std::uint64_t seed) {
  const std::size_t n = scores.system_a.size();
  if (n == 0) throw Error("paired bootstrap needs at least one example");
  if (scores.system_b.size() != n)
    throw Error("paired scores differ in length: " + std::to_string(n) + " vs " + std::to_string(scores.system_b.size()));
  if (resamples == 0) throw Error("paired bootstrap needs at least one resample");

  std::vector<double> delta(n);
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = scores.system_a[i];
    const double b = scores.system_b[i];
    if (!std::isfinite(a) || !std::isfinite(b)) throw Error("non-finite score at example " + std::to_string(i));
    sum_a += a;
    sum_b += b;
    delta[i] = a - b;
  }

  BootstrapResult r;
  r.score_a = sum_a / static_cast<double>(n);
  r.score_b = sum_b / static_cast<double>(n);
  r.mean_delta = r.score_a - r.score_b;

  std::size_t below = 0;     // resample delta < 0
  std::size_t at_most = 0;   // <= 0
  std::size_t at_least = 0;  // >= 0
  for (std::size_t k = 0; k < resamples; ++k) {
    SplitMix64 rng(mix64(seed ^ mix64(k)));
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += delta[rng.below(n)];
    const double d = sum / static_cast<double>(n);
    if (d < 0) ++below;
    if (d <= 0) ++at_most;
    if (d >= 0) ++at_least;
  }
  const auto total = static_cast<double>(resamples);
  if (r.mean_delta > 0)
    r.p_value = static_cast<double>(at_most) / total;
  else if (r.mean_delta < 0)
    r.p_value = static_cast<double>(at_least) / total;
  else
    r.p_value = static_cast<double>(below + at_most) / (2.0 * total);
  return r;
}

}  // namespace dialect_forge
