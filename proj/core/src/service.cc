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

#include "facetforge/service.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "facetforge/error.h"
#include "facetforge/ontology_io.h"
#include "facetforge/validator.h"
#include "json.hpp"

namespace facetforge {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& doc) {
  return doc.dump(2, ' ', false, ordered_json::error_handler_t::replace) +
         "\n";
}

HttpResult not_found(std::string_view what) {
  return {404, error_body(std::string(what) + " not found")};
}

std::string iso_utc(std::chrono::system_clock::time_point t) {
  const std::time_t secs = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<ConceptId> by_label(const Ontology& o, std::vector<ConceptId> ids) {
  std::sort(ids.begin(), ids.end(),
            [&](const ConceptId& a, const ConceptId& b) {
              const std::string& la = o.at(a).pref_label;
              const std::string& lb = o.at(b).pref_label;
              if (la != lb) return la < lb;
              return a < b;
            });
  return ids;
}

// Recursion depth is bounded by the facet tree height; build rejects cycles.
ordered_json tree_node(const Ontology& o, const ConceptId& id) {
  ordered_json node;
  node["concept"] = id.str();
  node["prefLabel"] = o.at(id).pref_label;
  node["children"] = ordered_json::array();
  for (const ConceptId& child : by_label(o, o.children(id))) {
    node["children"].push_back(tree_node(o, child));
  }
  return node;
}

ordered_json edge_json(const Ontology& o, const RelationEdge& e) {
  ordered_json item;
  item["subject"] = e.subject.str();
  item["subjectLabel"] = o.at(e.subject).pref_label;
  item["relation"] = e.relation;
  item["object"] = e.object.str();
  item["objectLabel"] = o.at(e.object).pref_label;
  return item;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string error_body(std::string_view message) {
  ordered_json doc;
  doc["error"] = std::string(message);
  return dump(doc);
}

OntologyRegistry::OntologyRegistry(NormalizationConfig config)
    : config_(config) {}

OntologyRegistry OntologyRegistry::load_directory(
    const std::filesystem::path& dir, NormalizationConfig config,
    LoadReport* report) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIo, dir.string() + " is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string ext = entry.path().extension().string();
    if (entry.is_regular_file() && (ext == ".json" || ext == ".ttl")) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  OntologyRegistry registry(config);
  LoadReport local;
  for (const auto& path : files) {
    try {
      ParseOutcome outcome = parse_ontology(read_file(path));
      const std::string name = outcome.ontology.name();
      registry.add(std::move(outcome.ontology), path.string());
      local.loaded.push_back(path.filename().string() + " -> " + name);
    } catch (const std::exception& e) {
      local.skipped.push_back(path.filename().string() + ": " + e.what());
    }
  }
  if (report != nullptr) *report = std::move(local);
  return registry;
}

void OntologyRegistry::add(Ontology ontology, std::string source) {
  if (entries_.count(ontology.name()) != 0) {
    throw Error(ErrorCode::kDuplicateId,
                "ontology name '" + ontology.name() + "' already registered",
                ontology.name());
  }
  // Build the automaton first so a failure leaves nothing registered.
  MatchAutomaton automaton = build_automaton(ontology, config_);
  std::string name = ontology.name();
  entries_.emplace(std::move(name),
                   RegisteredOntology{std::move(ontology), std::move(automaton),
                                      std::move(source),
                                      std::chrono::system_clock::now()});
}

const RegisteredOntology* OntologyRegistry::find(std::string_view name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> OntologyRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, entry] : entries_) out.push_back(name);
  return out;
}

Service::Service(std::shared_ptr<const OntologyRegistry> registry)
    : registry_(std::move(registry)) {}

HttpResult Service::list_ontologies() const {
  ordered_json doc;
  doc["ontologies"] = ordered_json::array();
  for (const std::string& name : registry_->names()) {
    const RegisteredOntology& r = *registry_->find(name);
    ordered_json item;
    item["name"] = name;
    item["version"] = r.ontology.version();
    item["concepts"] = r.ontology.concepts().size();
    item["edges"] = r.ontology.edges().size();
    item["loadedAt"] = iso_utc(r.loaded_at);
    doc["ontologies"].push_back(std::move(item));
  }
  return {200, dump(doc)};
}

HttpResult Service::browse(std::string_view name,
                           const std::optional<std::string>& facet) const {
  const RegisteredOntology* r = registry_->find(name);
  if (r == nullptr) return not_found("ontology '" + std::string(name) + "'");
  std::vector<FacetTag> facets(kAllFacets.begin(), kAllFacets.end());
  if (facet.has_value()) {
    const std::optional<FacetTag> f = parse_facet(*facet);
    if (!f) return {400, error_body("invalid facet '" + *facet + "'")};
    facets = {*f};
  }
  const Ontology& o = r->ontology;
  ordered_json doc;
  doc["ontology"] = o.name();
  doc["facets"] = ordered_json::array();
  for (FacetTag f : facets) {
    ordered_json item;
    item["facet"] = facet_name(f);
    item["children"] = ordered_json::array();
    for (const ConceptId& root : by_label(o, o.roots(f))) {
      item["children"].push_back(tree_node(o, root));
    }
    doc["facets"].push_back(std::move(item));
  }
  return {200, dump(doc)};
}

HttpResult Service::concept_detail(std::string_view name,
                                   std::string_view id) const {
  const RegisteredOntology* r = registry_->find(name);
  if (r == nullptr) return not_found("ontology '" + std::string(name) + "'");
  const Ontology& o = r->ontology;
  if (!ConceptId::is_valid(id) || o.find(ConceptId(std::string(id))) == nullptr) {
    return not_found("concept '" + std::string(id) + "'");
  }
  const ConceptId cid{std::string(id)};
  const Concept& c = o.at(cid);

  ordered_json doc;
  doc["concept"] = c.id.str();
  doc["prefLabel"] = c.pref_label;
  doc["altLabels"] = c.alt_labels;
  doc["facet"] = facet_name(c.facet);
  doc["parent"] = c.parent ? ordered_json(c.parent->str()) : ordered_json();
  doc["definition"] = c.definition ? ordered_json(*c.definition) : ordered_json();
  doc["ancestors"] = ordered_json::array();
  for (const ConceptId& a : ancestors(o, cid)) {
    ordered_json item;
    item["concept"] = a.str();
    item["prefLabel"] = o.at(a).pref_label;
    doc["ancestors"].push_back(std::move(item));
  }
  const ConceptRelations rel = relations_of(o, cid);
  doc["outgoing"] = ordered_json::array();
  for (const RelationEdge& e : rel.outgoing) {
    doc["outgoing"].push_back(edge_json(o, e));
  }
  doc["incoming"] = ordered_json::array();
  for (const RelationEdge& e : rel.incoming) {
    doc["incoming"].push_back(edge_json(o, e));
  }
  return {200, dump(doc)};
}

HttpResult Service::search(std::string_view name, std::string_view query) const {
  const RegisteredOntology* r = registry_->find(name);
  if (r == nullptr) return not_found("ontology '" + std::string(name) + "'");
  if (query.empty()) return {400, error_body("empty query")};
  const std::string needle = case_fold(query);

  struct Found {
    const ConceptId* id;
    bool pref;
    const std::string* label;
  };
  std::vector<Found> found;
  for (const auto& [id, c] : r->ontology.concepts()) {
    if (case_fold(c.pref_label).find(needle) != std::string::npos) {
      found.push_back({&id, true, &c.pref_label});
      continue;
    }
    for (const std::string& alt : c.alt_labels) {
      if (case_fold(alt).find(needle) != std::string::npos) {
        found.push_back({&id, false, &alt});
        break;
      }
    }
  }
  // Concepts are visited in id order already.
  std::stable_partition(found.begin(), found.end(),
                        [](const Found& f) { return f.pref; });

  ordered_json doc;
  doc["ontology"] = r->ontology.name();
  doc["query"] = std::string(query);
  doc["results"] = ordered_json::array();
  for (const Found& f : found) {
    ordered_json item;
    item["concept"] = f.id->str();
    item["matchedIn"] = f.pref ? "pref" : "alt";
    item["label"] = *f.label;
    doc["results"].push_back(std::move(item));
  }
  return {200, dump(doc)};
}

HttpResult Service::index(std::string_view name, std::string_view body) const {
  const RegisteredOntology* r = registry_->find(name);
  if (r == nullptr) return not_found("ontology '" + std::string(name) + "'");
  const nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    return {400, error_body("body must be a JSON object {\"text\": string}")};
  }
  auto it = doc.find("text");
  if (it == doc.end() || !it->is_string()) {
    return {400, error_body("missing string field 'text'")};
  }
  const std::string& text = it->get_ref<const std::string&>();
  if (text.size() > kMaxIndexTextBytes) {
    return {413, error_body("text exceeds 1 MiB")};
  }
  return {200, index_result_to_json(index_document(r->automaton, text))};
}

HttpResult Service::stats(std::string_view name) const {
  const RegisteredOntology* r = registry_->find(name);
  if (r == nullptr) return not_found("ontology '" + std::string(name) + "'");
  return {200, facet_counts_to_json(facetforge::stats(r->ontology))};
}

HttpResult Service::validation(std::string_view name) const {
  const RegisteredOntology* r = registry_->find(name);
  if (r == nullptr) return not_found("ontology '" + std::string(name) + "'");
  return {200, report_to_json(validate(r->ontology))};
}

}  // namespace facetforge
