#include "dialect_forge/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace dialect_forge {

double FeatureVector::operator[](FeatureId f) const {
  auto it = values.find(f);
  if (it == values.end()) throw Error("feature " + std::to_string(f.number()) + " is outside the vector's universe");
  return it->second;
}

FeatureVector feature_vector(const DialectProfile& profile, const std::vector<FeatureId>& universe) {
  if (universe.empty()) throw Error("feature universe is empty");
  FeatureVector v;
  v.universe = universe;
  for (FeatureId f : universe) {
    if (!v.values.emplace(f, pervasiveness_to_probability(profile.get(f))).second)
      throw Error("duplicate feature " + std::to_string(f.number()) + " in universe");
  }
  return v;
}

double manhattan_distance(const FeatureVector& a, const FeatureVector& b) {
  const std::set<FeatureId> ua(a.universe.begin(), a.universe.end());
  const std::set<FeatureId> ub(b.universe.begin(), b.universe.end());
  if (ua != ub || ua.empty()) throw Error("feature vectors are defined over different universes");
  double sum = 0.0;
  for (FeatureId f : ua) sum += std::abs(a[f] - b[f]);
  return sum / static_cast<double>(ua.size());
}

std::vector<FeatureId> full_universe() {
  std::vector<FeatureId> all;
  for (int n = FeatureId::kMin; n <= FeatureId::kMax; ++n) all.emplace_back(n);
  return all;
}

double DensityReport::changed_fraction() const {
  return sentences_total == 0 ? 0.0 : static_cast<double>(sentences_changed) / static_cast<double>(sentences_total);
}

void DensityReport::add(const Provenance& p) {
  ++sentences_total;
  if (!p.edits.empty()) ++sentences_changed;
  for (const Edit& e : p.edits) ++edits_per_feature[e.feature];
}

DensityReport& DensityReport::operator+=(const DensityReport& other) {
  sentences_total += other.sentences_total;
  sentences_changed += other.sentences_changed;
  for (const auto& [f, n] : other.edits_per_feature) edits_per_feature[f] += n;
  return *this;
}

DensityReport density_report(const std::vector<Provenance>& provenances) {
  DensityReport r;
  for (const Provenance& p : provenances) r.add(p);
  return r;
}

}  // namespace dialect_forge
