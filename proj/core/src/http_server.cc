// Copyright 2026 The FacetForge Authors.
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

#include <utility>

#include "facetforge/service.h"
#include "httplib.h"

namespace facetforge {

struct HttpServer::Impl {
  std::shared_ptr<const Service> service;
  std::string cors_origin;
  httplib::Server server;
};

namespace {

void reply(httplib::Response& res, const HttpResult& result) {
  res.status = result.status;
  res.set_content(result.body, "application/json");
}

}  // namespace

HttpServer::HttpServer(std::shared_ptr<const Service> service,
                       std::string cors_origin)
    : impl_(std::make_unique<Impl>()) {
  impl_->service = std::move(service);
  impl_->cors_origin = std::move(cors_origin);
  httplib::Server& s = impl_->server;
  const Service* svc = impl_->service.get();

  // Twice the text limit leaves room for JSON escaping; the handler applies
  // the real limit to the decoded text.
  s.set_payload_max_length(2 * kMaxIndexTextBytes + 4096);
  s.set_default_headers(
      {{"Access-Control-Allow-Origin", impl_->cors_origin},
       {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
       {"Access-Control-Allow-Headers", "Content-Type"}});

  s.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  s.Get("/ontologies", [svc](const httplib::Request&, httplib::Response& res) {
    reply(res, svc->list_ontologies());
  });
  s.Get(R"(/ontologies/([^/]+)/tree)",
        [svc](const httplib::Request& req, httplib::Response& res) {
          std::optional<std::string> facet;
          if (req.has_param("facet")) facet = req.get_param_value("facet");
          reply(res, svc->browse(req.matches[1].str(), facet));
        });
  s.Get(R"(/ontologies/([^/]+)/concepts/([^/]+))",
        [svc](const httplib::Request& req, httplib::Response& res) {
          reply(res, svc->concept_detail(req.matches[1].str(),
                                         req.matches[2].str()));
        });
  s.Get(R"(/ontologies/([^/]+)/search)",
        [svc](const httplib::Request& req, httplib::Response& res) {
          reply(res, svc->search(req.matches[1].str(),
                                 req.get_param_value("q")));
        });
  s.Post(R"(/ontologies/([^/]+)/index)",
         [svc](const httplib::Request& req, httplib::Response& res) {
           reply(res, svc->index(req.matches[1].str(), req.body));
         });
  s.Get(R"(/ontologies/([^/]+)/stats)",
        [svc](const httplib::Request& req, httplib::Response& res) {
          reply(res, svc->stats(req.matches[1].str()));
        });
  s.Get(R"(/ontologies/([^/]+)/validation)",
        [svc](const httplib::Request& req, httplib::Response& res) {
          reply(res, svc->validation(req.matches[1].str()));
        });

  // Unrouted paths and httplib's own rejections (413 and friends) get a JSON
  // body too.
  s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    std::string message = httplib::status_message(res.status);
    res.set_content(error_body(message), "application/json");
  });
  s.set_exception_handler([](const httplib::Request&, httplib::Response& res,
                             std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    res.status = 500;
    res.set_content(error_body(message), "application/json");
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

bool HttpServer::is_running() const { return impl_->server.is_running(); }

}  // namespace facetforge
