#include "doctest.h"
#include "dialect_forge/morphology.hpp"

using namespace dialect_forge;

TEST_CASE("regular_plural") {
  CHECK(regular_plural("wife") == "wifes");
  CHECK(regular_plural("dog") == "dogs");
  CHECK(regular_plural("box") == "boxes");
  CHECK(regular_plural("church") == "churches");
  CHECK(regular_plural("machinery") == "machineries");
  CHECK(regular_plural("day") == "days");
  CHECK(regular_plural("leaf") == "leafs");
}

TEST_CASE("regular_past") {
  CHECK(regular_past("catch") == "catched");
  CHECK(regular_past("play") == "played");
  CHECK(regular_past("carry") == "carried");
  CHECK(regular_past("bake") == "baked");
}

TEST_CASE("base_form") {
  Token scolded;
  scolded.surface = "scolded";
  scolded.lemma = "scold";
  CHECK(base_form(scolded) == "scold");
  Token go;
  go.surface = "go";
  go.lemma = "go";
  CHECK(base_form(go) == "go");
  Token written;
  written.surface = "written";
  written.lemma = "write";
  CHECK(base_form(written) == "write");
  Token bare;
  bare.surface = "went";
  CHECK_FALSE(base_form(bare).has_value());
}

TEST_CASE("adverb_to_adjective") {
  CHECK(adverb_to_adjective("softly") == "soft");
  CHECK(adverb_to_adjective("really") == "real");
  CHECK(adverb_to_adjective("happily") == "happy");
  CHECK(adverb_to_adjective("terribly") == "terrible");
  CHECK(adverb_to_adjective("fully") == "full");
  CHECK(adverb_to_adjective("ly") == "ly");
  CHECK(adverb_to_adjective("fast") == "fast");
}

TEST_CASE("transfer_capitalization") {
  CHECK(transfer_capitalization("There's", "it's") == "It's");
  CHECK(transfer_capitalization("cat", "dog") == "dog");
  CHECK(transfer_capitalization("Él", "x") == "X");
  CHECK(transfer_capitalization("Do", "you") == "You");
  CHECK(transfer_capitalization("Мир", "ёж") == "Ёж");
  CHECK(transfer_capitalization("", "x") == "x");
  CHECK(lowercase_first("Nobody") == "nobody");
  CHECK(lowercase_first("Élan") == "élan");
}

TEST_CASE("shipped lexicon") {
  const Lexicon& lex = Lexicon::shipped();
  for (const char* noun : {"furniture", "machinery", "equipment", "evidence", "luggage", "advice", "mail", "staff"})
    CHECK(lex.is_mass_noun(noun));
  CHECK_FALSE(lex.is_mass_noun("dog"));
  CHECK(lex.past_of("catch") == "caught");
  CHECK(lex.participle_of("see") == "seen");
  CHECK(lex.past_of("play") == "played");
  CHECK(lex.participle_of("scold") == "scolded");
  CHECK(lex.participle_of("be") == "been");
  REQUIRE(lex.irregular("eat") != nullptr);
  CHECK(lex.irregular("eat")->participle == "eaten");
  CHECK(lex.irregular("walk") == nullptr);
}

TEST_CASE("lexicon loading errors") {
  CHECK_THROWS_AS(Lexicon::load("/nonexistent/lexicon/dir"), Error);
}
