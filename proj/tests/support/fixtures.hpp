#pragma once

// Access to the checked-in fixture files.

#include <string>
#include <vector>

#include "dialect_forge/conllu.hpp"

namespace dialect_forge::testing {

std::string data_path(const std::string& relative);

struct RuleExample {
  int feature = 0;
  std::string sent_id;
  std::string input;
  std::string expected;
};

std::vector<RuleExample> rule_examples();
const Document& rule_example_parses();
const ParsedSentence& parse_for(const std::string& sent_id);

/// Parses of assorted sentences used by the module tests.
const Document& sample_parses();
const ParsedSentence& sample(const std::string& sent_id);

std::string read_text(const std::string& path);

}  // namespace dialect_forge::testing
