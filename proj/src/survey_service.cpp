#include "dialect_forge/survey_service.hpp"

#include <cstdio>

#include "httplib.h"
#include "json.hpp"

namespace dialect_forge {
namespace {

using json = nlohmann::ordered_json;

HttpReply error_reply(int status, const std::string& message) {
  return {status, json{{"error", message}}.dump()};
}

}  // namespace

SurveyService::SurveyService(BinaryProfiles profiles, QuestionBank bank, std::string prompt)
    : profiles_(std::move(profiles)), bank_(std::move(bank)), prompt_(std::move(prompt)), ids_(std::random_device{}()) {
  if (profiles_.empty()) throw Error("survey needs at least one dialect profile");
}

std::string SurveyService::view(const std::string& id, const Session& session, bool detailed) const {
  json out;
  out["session_id"] = id;
  if (session.pending) {
    out["question"] = {{"feature", session.pending->number()},
                       {"sentence", session.state.question_bank.at(*session.pending)},
                       {"prompt", prompt_}};
    out["result"] = nullptr;
  } else {
    out["question"] = nullptr;
    out["result"] = json::array();
    for (const auto& name : session.state.candidates) out["result"].push_back(name);
  }
  out["progress"] = session.state.asked.size();
  if (detailed) {
    out["candidates"] = json::array();
    for (const auto& name : session.state.candidates) out["candidates"].push_back(name);
    out["asked"] = json::array();
    for (const auto& [f, accept] : session.state.asked) out["asked"].push_back({{"feature", f.number()}, {"accept", accept}});
  }
  return out.dump();
}

HttpReply SurveyService::create_session() {
  std::lock_guard lock(mutex_);
  std::string id;
  do {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(ids_()));
    id = buf;
  } while (sessions_.contains(id));
  Session session{start_survey(profiles_, bank_), std::nullopt};
  session.pending = select_feature(session.state, profiles_);
  auto& stored = sessions_.emplace(id, std::move(session)).first->second;
  return {200, view(id, stored, false)};
}

HttpReply SurveyService::answer(const std::string& session_id, const std::string& body) {
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error&) {
    return error_reply(400, "request body is not valid JSON");
  }
  if (!request.is_object() || !request.contains("feature") || !request["feature"].is_number_integer() ||
      !request.contains("accept") || !request["accept"].is_boolean())
    return error_reply(400, "expected {\"feature\": <int>, \"accept\": <bool>}");
  const auto number = request["feature"].get<long long>();
  if (number < FeatureId::kMin || number > FeatureId::kMax) return error_reply(400, "feature out of range");
  const FeatureId f(static_cast<int>(number));

  std::lock_guard lock(mutex_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) return error_reply(404, "unknown session");
  Session& session = it->second;
  if (session.state.was_asked(f)) return error_reply(409, "feature " + std::to_string(number) + " was already answered");
  if (!session.pending) return error_reply(409, "survey is finished");
  if (*session.pending != f)
    return error_reply(409, "expected an answer for feature " + std::to_string(session.pending->number()));
  session.state = update_candidates(session.state, profiles_, f, request["accept"].get<bool>());
  session.pending = select_feature(session.state, profiles_);
  return {200, view(session_id, session, false)};
}

HttpReply SurveyService::get(const std::string& session_id) const {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) return error_reply(404, "unknown session");
  return {200, view(session_id, it->second, true)};
}

std::size_t SurveyService::session_count() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

void SurveyService::mount(httplib::Server& server, const std::string& static_dir) {
  auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  };
  server.Post("/session", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, create_session());
  });
  server.Post(R"(/session/([^/]+)/answer)", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, answer(req.matches[1], req.body));
  });
  server.Get(R"(/session/([^/]+))", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, get(req.matches[1]));
  });
  if (!static_dir.empty() && !server.set_mount_point("/", static_dir))
    throw Error("cannot serve static files from " + static_dir);
}

}  // namespace dialect_forge
