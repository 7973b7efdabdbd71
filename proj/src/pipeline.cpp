#include "dialect_forge/pipeline.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "dialect_forge/random.hpp"

namespace dialect_forge {
namespace {

// Token list under construction plus the edits that produced it.
class Draft {
 public:
  explicit Draft(const ParsedSentence& s)
      : offsets_(token_offsets(s.tokens)), consumed_(s.size(), false) {
    work_.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) work_.push_back({s.tokens[i], i});
    source_text_ = detokenize(s.tokens);
  }

  bool consumed(TokenIndex i) const { return consumed_[i - 1]; }

  bool available(const Site& site) const {
    return std::ranges::none_of(site.extent, [&](TokenIndex i) { return consumed(i); });
  }

  bool apply(FeatureId feature, const Site& site, const Rewrite& rw) {
    const std::size_t n = consumed_.size();
    if (rw.first < 1 || rw.first > rw.last || rw.last > n) return false;
    const std::size_t pf = rw.first - 1;
    const std::size_t pl = rw.last - 1;
    const std::size_t len = pl - pf + 1;
    for (std::size_t p = pf; p <= pl; ++p)
      if (consumed_[p]) return false;
    if (!available(site)) return false;

    auto at = std::ranges::find_if(work_, [&](const Work& w) { return w.source == pf; });
    if (at == work_.end()) return false;
    const std::size_t w = static_cast<std::size_t>(at - work_.begin());
    if (w + len > work_.size()) return false;
    for (std::size_t k = 0; k < len; ++k)
      if (work_[w + k].source != pf + k) return false;

    const bool deletion = rw.replacement.empty();
    const bool leading = deletion || rw.space_before.has_value();
    const bool trailing_space = work_[w + len - 1].token.space_after;

    Span span{offsets_[pf].start, offsets_[pl].end};
    std::string text;
    std::optional<bool> predecessor_space;
    if (leading && pf > 0) {
      if (w == 0) return false;
      span.start = offsets_[pf - 1].end;
      predecessor_space = deletion ? trailing_space : *rw.space_before;
      if (!deletion && *rw.space_before) text = " ";
    } else if (deletion) {
      // Sentence-initial deletion takes the following whitespace instead.
      if (pl + 1 >= n || w + len >= work_.size() || work_[w + len].source != pl + 1) return false;
      span.end = offsets_[pl + 1].start;
    }
    for (const Edit& e : edits_)
      if (span.start < e.original_span.end && e.original_span.start < span.end) return false;

    std::vector<Token> replacement = rw.replacement;
    if (!replacement.empty()) replacement.back().space_after = trailing_space;
    text += detokenize(replacement);

    if (predecessor_space) work_[w - 1].token.space_after = *predecessor_space;
    std::vector<Work> inserted;
    for (Token& t : replacement) inserted.push_back({std::move(t), std::nullopt});
    work_.erase(work_.begin() + static_cast<std::ptrdiff_t>(w), work_.begin() + static_cast<std::ptrdiff_t>(w + len));
    work_.insert(work_.begin() + static_cast<std::ptrdiff_t>(w), inserted.begin(), inserted.end());

    for (std::size_t p = pf; p <= pl; ++p) consumed_[p] = true;
    for (TokenIndex i : site.extent) consumed_[i - 1] = true;
    edits_.push_back(Edit{feature, span, std::move(text), site.extent});
    return true;
  }

  std::vector<Token> tokens() const {
    std::vector<Token> out;
    out.reserve(work_.size());
    for (const Work& w : work_) out.push_back(w.token);
    return out;
  }

  const std::string& source_text() const { return source_text_; }
  std::vector<Edit>& edits() { return edits_; }

 private:
  struct Work {
    Token token;
    std::optional<std::size_t> source;  // position in the original sentence
  };

  std::vector<Span> offsets_;
  std::vector<bool> consumed_;
  std::vector<Work> work_;
  std::vector<Edit> edits_;
  std::string source_text_;
};

}  // namespace

void TransformConfig::validate() const {
  if (!(density_scale >= 0.0 && density_scale <= 1.0))
    throw Error("density scale must lie in [0, 1], got " + std::to_string(density_scale));
}

std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view doc_id, std::uint64_t sentence_index) {
  std::uint64_t s = mix64(global_seed);
  s = mix64(s ^ fnv1a(doc_id));
  return mix64(s ^ sentence_index);
}

double site_draw(std::uint64_t seed, FeatureId feature, TokenIndex anchor) {
  const std::uint64_t key = (static_cast<std::uint64_t>(feature.number()) << 32) | static_cast<std::uint64_t>(anchor);
  const std::uint64_t x = mix64(seed ^ mix64(key));
  return unit_double(x);
}

TransformStats& TransformStats::operator+=(const TransformStats& o) {
  sites_matched += o.sites_matched;
  sites_applied += o.sites_applied;
  sites_blocked += o.sites_blocked;
  sites_skipped += o.sites_skipped;
  return *this;
}

SentenceResult apply_rules(const ParsedSentence& sentence, std::span<const RuleApplication> rules,
                           std::uint64_t seed) {
  Draft draft(sentence);
  TransformStats stats;
  for (const RuleApplication& app : rules) {
    if (app.probability <= 0.0) continue;
    const PerturbationRule& rule = *app.rule;
    for (const Site& site : match_sites(rule, sentence)) {
      ++stats.sites_matched;
      if (!draft.available(site)) {
        ++stats.sites_blocked;
        continue;
      }
      if (site_draw(seed, rule.feature, site.anchor) >= app.probability) continue;
      auto rw = rule.rewrite(sentence, site);
      if (rw && draft.apply(rule.feature, site, *rw))
        ++stats.sites_applied;
      else
        ++stats.sites_skipped;
    }
  }

  SentenceResult result;
  result.tokens = draft.tokens();
  result.provenance.sent_id = sentence.sent_id;
  result.provenance.source_text = draft.source_text();
  result.provenance.output_text = detokenize(result.tokens);
  result.provenance.edits = std::move(draft.edits());
  result.provenance.seed = seed;
  result.stats = stats;
  return result;
}

SentenceResult apply_rule(const PerturbationRule& rule, const ParsedSentence& sentence) {
  const RuleApplication app{&rule, 1.0};
  return apply_rules(sentence, std::span(&app, 1), 0);
}

Transformer::Transformer(TransformConfig config, const std::vector<PerturbationRule>& rules)
    : config_(std::move(config)) {
  config_.validate();
  std::vector<const PerturbationRule*> ordered;
  for (const auto& r : rules) ordered.push_back(&r);
  std::ranges::stable_sort(ordered, {}, [](const PerturbationRule* r) { return r->feature; });
  for (const PerturbationRule* r : ordered) {
    const double p = pervasiveness_to_probability(config_.profile.get(r->feature)) * config_.density_scale;
    if (p > 0.0) schedule_.push_back({r, p});
  }
}

SentenceResult Transformer::transform(const ParsedSentence& sentence, std::uint64_t seed) const {
  return apply_rules(sentence, schedule_, seed);
}

std::vector<SentenceResult> Transformer::transform_document(const Document& doc, unsigned threads) const {
  const std::size_t n = doc.sentences.size();
  std::vector<SentenceResult> out(n);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < n; i += stride)
      out[i] = transform(doc.sentences[i], derive_seed(config_.global_seed, doc.doc_id, i));
  };
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2) {
    work(0, 1);
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  pool.clear();
  return out;
}

Provenance transform_sentence(const ParsedSentence& sentence, const TransformConfig& config, std::uint64_t seed) {
  return Transformer(config).transform(sentence, seed).provenance;
}

}  // namespace dialect_forge
