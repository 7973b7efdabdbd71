#pragma once

// HTTP JSON front end for the survey; one isolated state machine per session.
//
//   POST /session                 -> {session_id, question, result, progress}
//   POST /session/{id}/answer     body {feature, accept}
//   GET  /session/{id}            -> state summary
//
// Exactly one of `question` / `result` is non-null in every session view.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>

#include "dialect_forge/survey.hpp"

namespace httplib {
class Server;
}

namespace dialect_forge {

struct HttpReply {
  int status = 200;
  std::string body;  // JSON
};

class SurveyService {
 public:
  SurveyService(BinaryProfiles profiles, QuestionBank bank, std::string prompt = std::string(kSurveyPrompt));

  HttpReply create_session();
  HttpReply answer(const std::string& session_id, const std::string& body);
  HttpReply get(const std::string& session_id) const;

  /// Registers the API routes and, when `static_dir` is non-empty, serves
  /// its files at "/".
  void mount(httplib::Server& server, const std::string& static_dir = {});

  std::size_t session_count() const;

 private:
  struct Session {
    SurveyState state;
    std::optional<FeatureId> pending;
  };

  std::string view(const std::string& id, const Session& session, bool detailed) const;

  BinaryProfiles profiles_;
  QuestionBank bank_;
  std::string prompt_;
  mutable std::mutex mutex_;
  std::map<std::string, Session> sessions_;
  std::mt19937_64 ids_;
};

}  // namespace dialect_forge
