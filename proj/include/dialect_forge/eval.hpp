#pragma once

// Per-example metrics and the paired bootstrap significance test.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dialect_forge {

/// Lowercased whitespace tokens with leading/trailing ASCII punctuation
/// stripped; tokens that become empty are dropped.
std::vector<std::string> normalize_tokens(std::string_view text);

/// F1 over token multisets. Both empty -> 1, exactly one empty -> 0.
double token_f1(std::string_view prediction, std::string_view gold);

/// 1 iff equal after lowercasing and collapsing whitespace runs.
int exact_match(std::string_view prediction, std::string_view gold);

struct PairedScores {
  std::vector<double> system_a;
  std::vector<double> system_b;
};

struct BootstrapResult {
  double score_a = 0.0;  // mean of system_a
  double score_b = 0.0;
  double mean_delta = 0.0;  // score_a - score_b
  double p_value = 0.0;
};

/// One-sided paired bootstrap. With mean_delta > 0, p is the fraction of
/// resamples whose delta is <= 0; with mean_delta < 0, the fraction >= 0;
/// with mean_delta == 0, the average of the fractions < 0 and <= 0.
/// Resample r draws its indices from a generator seeded by (seed, r).
/// Throws Error on empty or mismatched inputs, non-finite scores or
/// resamples == 0.
BootstrapResult paired_bootstrap(const PairedScores& scores, std::size_t resamples, std::uint64_t seed);

}  // namespace dialect_forge
