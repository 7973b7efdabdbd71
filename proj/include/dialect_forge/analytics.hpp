#pragma once

// Feature vectors, inter-dialect distance and transformation density.

#include <cstddef>
#include <map>
#include <vector>

#include "dialect_forge/core_model.hpp"

namespace dialect_forge {

struct FeatureVector {
  std::vector<FeatureId> universe;
  std::map<FeatureId, double> values;  // one entry per universe feature

  double operator[](FeatureId f) const;
};

/// Sampling probability of every universe feature; absent features are 0.
/// Throws Error on an empty universe or duplicate ids.
FeatureVector feature_vector(const DialectProfile& profile, const std::vector<FeatureId>& universe);

/// Mean absolute coordinate difference, in [0, 1]. Throws Error unless both
/// vectors share the same universe (compared as sets).
double manhattan_distance(const FeatureVector& a, const FeatureVector& b);

/// Every feature number, 1..235.
std::vector<FeatureId> full_universe();

struct DensityReport {
  std::size_t sentences_total = 0;
  std::size_t sentences_changed = 0;
  std::map<FeatureId, std::size_t> edits_per_feature;

  double changed_fraction() const;
  void add(const Provenance& p);
  DensityReport& operator+=(const DensityReport& other);
};

DensityReport density_report(const std::vector<Provenance>& provenances);

}  // namespace dialect_forge
