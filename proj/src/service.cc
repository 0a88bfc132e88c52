// Copyright 2026 The zberta Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zberta/service.h"

#include "httplib.h"
#include "zberta/conllu.h"
#include "zberta/errors.h"
#include "zberta/protocol.h"
#include "zberta/records.h"

namespace zberta {
namespace {

using nlohmann::json;

HttpReply ErrorReply(int status, std::string_view kind, std::string_view message) {
  return HttpReply{status, json{{"error",
                                 {{"kind", std::string(kind)},
                                  {"message", std::string(message)}}}}};
}

template <typename Probe>
std::string ProbeStatus(Probe probe) {
  try {
    probe();
    return "ok";
  } catch (const std::exception &e) {
    return std::string("unreachable: ") + e.what();
  }
}

}  // namespace

HttpReply DiscoveryService::Discover(std::string_view request_body) const {
  json request = json::parse(request_body, nullptr, false);
  if (request.is_discarded() || !request.is_object()) {
    return ErrorReply(400, "bad_request", "body must be a JSON object");
  }
  auto utterance_it = request.find("utterance");
  if (utterance_it == request.end() || !utterance_it->is_string() ||
      utterance_it->get<std::string>().empty()) {
    return ErrorReply(400, "bad_request", "\"utterance\" must be a non-empty string");
  }
  const std::string utterance = utterance_it->get<std::string>();

  ParsedUtterance parse;
  auto conllu_it = request.find("conllu");
  if (conllu_it != request.end() && !conllu_it->is_null()) {
    if (!conllu_it->is_string()) {
      return ErrorReply(400, "bad_request", "\"conllu\" must be a string");
    }
    std::vector<ParsedUtterance> parses;
    try {
      parses = ReadConlluString(conllu_it->get<std::string>());
    } catch (const Error &e) {
      return ErrorReply(400, "bad_parse", e.what());
    }
    if (parses.size() != 1) {
      return ErrorReply(400, "bad_parse",
                        "\"conllu\" must hold exactly one sentence, found " +
                            std::to_string(parses.size()));
    }
    parse = std::move(parses.front());
  } else if (const RemoteParser *parser = pipeline_.parser()) {
    try {
      parse = parser->Parse(utterance);
    } catch (const PreconditionError &e) {
      return ErrorReply(400, "bad_request", e.what());
    } catch (const Error &e) {
      return ErrorReply(502, "parser", e.what());
    }
  } else {
    return ErrorReply(400, "parse_required",
                      "no \"conllu\" in the request and no remote parser is "
                      "configured; a dependency parse is required");
  }

  try {
    Pipeline::Discovery d = pipeline_.Discover(parse, utterance);
    json body = PredictionToJson(d.prediction);
    body["low_confidence"] =
        d.prediction.top_score() < pipeline_.config().confidence_floor;
    return HttpReply{200, std::move(body)};
  } catch (const TransportError &e) {
    return ErrorReply(502, "scorer", e.what());
  } catch (const ProtocolError &e) {
    return ErrorReply(502, "scorer", e.what());
  } catch (const ClassificationError &e) {
    return ErrorReply(502, "scorer", e.what());
  } catch (const ValidationError &e) {
    return ErrorReply(502, "scorer", e.what());
  } catch (const Error &e) {
    return ErrorReply(500, "internal", e.what());
  }
}

std::map<std::string, std::string> DiscoveryService::CheckDependencies() const {
  std::map<std::string, std::string> status;
  const PipelineConfig &c = pipeline_.config();
  const std::vector<std::string> probe_text{"ok"};
  if (const RemoteParser *parser = pipeline_.parser()) {
    status["parser"] = ProbeStatus([&] { parser->Parse("ok"); });
  } else {
    status["parser"] = "none";
  }
  if (c.scorer == BackendMode::kRemote) {
    status["scorer"] = ProbeStatus([&] { pipeline_.scorer().Score("ok", probe_text); });
  } else {
    status["scorer"] = "reference";
  }
  if (c.embedder == BackendMode::kRemote) {
    status["embedder"] = ProbeStatus([&] { pipeline_.embedder().Embed(probe_text); });
  } else {
    status["embedder"] = "reference";
  }
  return status;
}

bool DiscoveryService::DependenciesHealthy() const {
  for (const auto &[name, s] : CheckDependencies()) {
    if (s.starts_with("unreachable")) return false;
  }
  return true;
}

HttpReply DiscoveryService::Health() const {
  std::map<std::string, std::string> deps = CheckDependencies();
  bool healthy = true;
  for (const auto &[name, s] : deps) healthy &= !s.starts_with("unreachable");
  return HttpReply{200, json{{"status", healthy ? "ok" : "degraded"},
                             {"dependencies", deps}}};
}

HttpFrontend::HttpFrontend(const DiscoveryService &service)
    : server_(std::make_unique<httplib::Server>()) {
  auto send = [](httplib::Response &res, const HttpReply &reply) {
    res.status = reply.status;
    res.set_content(reply.body.dump(), "application/json");
  };
  server_->Post("/v1/discover", [&service, send](const httplib::Request &req,
                                                 httplib::Response &res) {
    send(res, service.Discover(req.body));
  });
  server_->Get("/healthz", [&service, send](const httplib::Request &,
                                            httplib::Response &res) {
    send(res, service.Health());
  });
}

HttpFrontend::~HttpFrontend() { Stop(); }

int HttpFrontend::Bind(const std::string &host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpFrontend::Listen() { return server_->listen_after_bind(); }

void HttpFrontend::Stop() {
  if (server_ && server_->is_running()) server_->stop();
}

void HttpFrontend::WaitUntilReady() const { server_->wait_until_ready(); }

int RunServer(const Pipeline &pipeline, const std::string &host, int port,
              std::ostream &log) {
  DiscoveryService service(pipeline);
  for (const auto &[name, s] : service.CheckDependencies()) {
    log << "dependency " << name << ": " << s << '\n';
    if (s.starts_with("unreachable")) {
      log << "error: startup health check failed\n";
      return 1;
    }
  }
  HttpFrontend frontend(service);
  int bound = frontend.Bind(host, port);
  if (bound < 0) {
    log << "error: cannot bind " << host << ":" << port << '\n';
    return 2;
  }
  log << "serving on " << host << ":" << bound << '\n';
  return frontend.Listen() ? 0 : 1;
}

}  // namespace zberta
