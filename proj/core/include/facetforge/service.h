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

#ifndef FACETFORGE_SERVICE_H_
#define FACETFORGE_SERVICE_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "facetforge/index.h"
#include "facetforge/model.h"
#include "facetforge/normalize.h"

namespace facetforge {

inline constexpr std::size_t kMaxIndexTextBytes = std::size_t{1} << 20;

struct RegisteredOntology {
  Ontology ontology;
  MatchAutomaton automaton;
  std::string source;
  std::chrono::system_clock::time_point loaded_at;
};

// Ontologies keyed by name. Filled once, then shared read-only between
// request threads.
class OntologyRegistry {
 public:
  struct LoadReport {
    std::vector<std::string> loaded;
    // "<file>: <diagnostic>" for every skipped file.
    std::vector<std::string> skipped;
  };

  explicit OntologyRegistry(NormalizationConfig config = {});

  // Loads every *.json / *.ttl directly inside `dir`, in file name order.
  // Files that fail to parse or index, or whose name is already taken, are
  // skipped and reported. Throws Error(kIo) when `dir` is not a directory.
  static OntologyRegistry load_directory(const std::filesystem::path& dir,
                                         NormalizationConfig config,
                                         LoadReport* report = nullptr);

  // Throws Error(kDuplicateId) when the name is taken, or whatever
  // build_automaton throws.
  void add(Ontology ontology, std::string source = {});

  const NormalizationConfig& config() const { return config_; }
  const RegisteredOntology* find(std::string_view name) const;
  std::vector<std::string> names() const;
  std::size_t size() const { return entries_.size(); }

 private:
  NormalizationConfig config_;
  std::map<std::string, RegisteredOntology, std::less<>> entries_;
};

struct HttpResult {
  int status = 200;
  std::string body;

  friend bool operator==(const HttpResult&, const HttpResult&) = default;
};

// Transport-free request handlers. Every body is JSON; failures carry
// {"error": "..."}.
class Service {
 public:
  explicit Service(std::shared_ptr<const OntologyRegistry> registry);

  HttpResult list_ontologies() const;
  HttpResult browse(std::string_view name,
                    const std::optional<std::string>& facet) const;
  HttpResult concept_detail(std::string_view name, std::string_view id) const;
  HttpResult search(std::string_view name, std::string_view query) const;
  // `body` is the raw request body, {"text": "..."}.
  HttpResult index(std::string_view name, std::string_view body) const;
  HttpResult stats(std::string_view name) const;
  HttpResult validation(std::string_view name) const;

  const OntologyRegistry& registry() const { return *registry_; }

 private:
  std::shared_ptr<const OntologyRegistry> registry_;
};

std::string error_body(std::string_view message);

// httplib binding. Routes map one-to-one onto Service.
class HttpServer {
 public:
  HttpServer(std::shared_ptr<const Service> service, std::string cors_origin);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool listen();
  void stop();
  bool is_running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace facetforge

#endif  // FACETFORGE_SERVICE_H_
