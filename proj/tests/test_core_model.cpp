#include <filesystem>
#include <random>

#include "doctest.h"
#include "dialect_forge/core_model.hpp"
#include "dialect_forge/random.hpp"
#include "dialect_forge/survey.hpp"
#include "support/fixtures.hpp"

using namespace dialect_forge;

namespace {

DialectProfile make(std::initializer_list<std::pair<int, Pervasiveness>> entries, std::string name = "p") {
  DialectProfile p;
  p.name = std::move(name);
  for (auto [f, c] : entries) p.features[FeatureId(f)] = c;
  return p;
}

DialectProfile random_profile(SplitMix64& rng) {
  static constexpr Pervasiveness kAll[] = {Pervasiveness::A, Pervasiveness::B, Pervasiveness::C,
                                           Pervasiveness::D, Pervasiveness::X, Pervasiveness::U};
  DialectProfile p;
  p.name = "Multi";
  const auto n = rng.below(12);
  for (std::size_t i = 0; i < n; ++i) p.features[FeatureId(1 + static_cast<int>(rng.below(20)))] = kAll[rng.below(6)];
  return p;
}

}  // namespace

TEST_CASE("pervasiveness probabilities") {
  CHECK(pervasiveness_to_probability(Pervasiveness::A) == 1.0);
  CHECK(pervasiveness_to_probability(Pervasiveness::B) == 0.6);
  CHECK(pervasiveness_to_probability(Pervasiveness::C) == 0.3);
  CHECK(pervasiveness_to_probability(Pervasiveness::D) == 0.0);
  CHECK(pervasiveness_to_probability(Pervasiveness::X) == 0.0);
  CHECK(pervasiveness_to_probability(Pervasiveness::U) == 0.0);
  for (char c : std::string("ABCDXU")) CHECK(to_letter(pervasiveness_from_letter(c)) == c);
  CHECK_THROWS_AS(pervasiveness_from_letter('Q'), Error);
}

TEST_CASE("feature ids are limited to 1..235") {
  CHECK(FeatureId(1).number() == 1);
  CHECK(FeatureId(235).number() == 235);
  CHECK_THROWS_AS(FeatureId(0), Error);
  CHECK_THROWS_AS(FeatureId(236), Error);
  CHECK(FeatureId(3) < FeatureId(10));
}

TEST_CASE("load_profile") {
  SUBCASE("direct encoding") {
    const auto p = load_profile("153\tA\n154\tB");
    CHECK(p.features.size() == 2);
    CHECK(p.get(FeatureId(153)) == Pervasiveness::A);
    CHECK(p.get(FeatureId(154)) == Pervasiveness::B);
    CHECK(p.get(FeatureId(155)) == Pervasiveness::U);
  }
  SUBCASE("empty text is the identity dialect") { CHECK(load_profile("").features.empty()); }
  SUBCASE("comments and blank lines") {
    const auto p = load_profile("# header\n\n34\tC\n");
    CHECK(p.features.size() == 1);
  }
  SUBCASE("out of range") { CHECK_THROWS_AS(load_profile("999\tA"), ParseError); }
  SUBCASE("errors carry the line number") {
    try {
      load_profile("1\tA\n2\tQ\n");
      FAIL("expected an error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("duplicate feature") { CHECK_THROWS_AS(load_profile("7\tA\n7\tB\n"), DuplicateFeatureError); }
  SUBCASE("missing class column") { CHECK_THROWS_AS(load_profile("7\n"), ParseError); }
}

TEST_CASE("profile serialization round-trips") {
  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    DialectProfile p = random_profile(rng);
    CHECK(load_profile(serialize_profile(p), p.name) == p);
  }
}

TEST_CASE("merge_multi") {
  using P = Pervasiveness;
  CHECK(merge_multi({make({{153, P::A}}), make({{154, P::B}})}).features ==
        make({{153, P::A}, {154, P::B}}).features);
  CHECK(merge_multi({make({{153, P::C}}), make({{153, P::A}})}).features == make({{153, P::A}}).features);
  CHECK(merge_multi({make({}), make({})}).features.empty());
  CHECK(merge_multi({make({})}).name == "Multi");
  CHECK_THROWS_AS(merge_multi({}), Error);

  SUBCASE("algebraic laws") {
    SplitMix64 rng(5);
    for (int i = 0; i < 300; ++i) {
      const auto a = random_profile(rng), b = random_profile(rng), c = random_profile(rng);
      CHECK(merge_multi({a, b}) == merge_multi({b, a}));
      CHECK(merge_multi({a, a}) == merge_multi({a}));
      CHECK(merge_multi({merge_multi({a, b}), c}) == merge_multi({a, merge_multi({b, c})}));
      for (const auto& [f, cls] : merge_multi({a, b}).features) {
        CHECK(pervasiveness_to_probability(cls) >= pervasiveness_to_probability(a.get(f)));
        CHECK(pervasiveness_to_probability(cls) >= pervasiveness_to_probability(b.get(f)));
      }
    }
  }
}

TEST_CASE("shipped Multi profile is the merge of the dialect profiles") {
  const auto dir = testing::data_path("profiles");
  const auto dialects = load_profile_dir(dir, {"Multi"});
  CHECK(dialects.size() == 7);
  const auto shipped = load_profile_file(dir + "/Multi.tsv");
  CHECK(shipped.name == "Multi");
  CHECK(merge_multi(dialects).features == shipped.features);
  CHECK(load_profile_file(dir + "/SAE.tsv").features.empty());
}

TEST_CASE("validate_sentence") {
  auto tok = [](TokenIndex i, TokenIndex head) {
    Token t;
    t.index = i;
    t.surface = "w" + std::to_string(i);
    t.head = head;
    return t;
  };
  ParsedSentence s;
  s.tokens = {tok(1, 2), tok(2, 0), tok(3, 2)};
  CHECK_NOTHROW(validate_sentence(s));
  s.tokens[0].head = 5;
  CHECK_THROWS_AS(validate_sentence(s), ParseError);
  s.tokens[0].head = 1;
  CHECK_THROWS_AS(validate_sentence(s), ParseError);
  s.tokens[0].head = 0;
  CHECK_THROWS_AS(validate_sentence(s), ParseError);  // two roots
  s.tokens = {tok(1, 2), tok(2, 1), tok(3, 0)};
  CHECK_THROWS_AS(validate_sentence(s), ParseError);  // cycle
  s.tokens = {tok(1, 0), tok(3, 1)};
  CHECK_THROWS_AS(validate_sentence(s), ParseError);  // gap in ids
  s.tokens.clear();
  CHECK_THROWS_AS(validate_sentence(s), ParseError);
}

TEST_CASE("replay_edits") {
  const std::string src = "He speaks English.";
  std::vector<Edit> edits = {Edit{FeatureId(170), Span{3, 9}, "speak", {2}}};
  CHECK(replay_edits(src, edits) == "He speak English.");
  edits.push_back(Edit{FeatureId(34), Span{0, 2}, "They", {1}});
  CHECK(replay_edits(src, edits) == "They speak English.");
  edits.push_back(Edit{FeatureId(34), Span{5, 7}, "x", {2}});
  CHECK_THROWS_AS(replay_edits(src, edits), Error);
  CHECK_THROWS_AS(replay_edits(src, {Edit{FeatureId(1), Span{10, 40}, "", {}}}), Error);
  CHECK(replay_edits(src, {}) == src);
}
