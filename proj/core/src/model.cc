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

#include "facetforge/model.h"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <utility>

#include "facetforge/error.h"
#include "facetforge/normalize.h"

namespace facetforge {
namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alnum(char c) { return is_upper(c) || is_lower(c) || is_digit(c); }

const std::vector<ConceptId>& empty_ids() {
  static const std::vector<ConceptId> empty;
  return empty;
}

void check_concept(const Concept& c, std::size_t index) {
  const ItemRef item{ItemRef::Kind::kConcept, index};
  if (c.id.empty()) {
    throw Error(ErrorCode::kInvalidIdentifier, "concept without an id", "",
                std::nullopt, item);
  }
  if (c.pref_label.empty()) {
    throw Error(ErrorCode::kInvalidConcept,
                "concept '" + c.id.str() + "' has an empty prefLabel",
                c.id.str(), std::nullopt, item);
  }
  std::set<std::string> keys{label_key(c.pref_label)};
  for (const std::string& alt : c.alt_labels) {
    if (alt.empty()) {
      throw Error(ErrorCode::kInvalidConcept,
                  "concept '" + c.id.str() + "' has an empty altLabel",
                  c.id.str(), std::nullopt, item);
    }
    if (!keys.insert(label_key(alt)).second) {
      throw Error(ErrorCode::kInvalidConcept,
                  "concept '" + c.id.str() + "' repeats the label '" + alt +
                      "' after normalization",
                  c.id.str(), std::nullopt, item);
    }
  }
}

}  // namespace

std::string_view facet_name(FacetTag facet) {
  switch (facet) {
    case FacetTag::kProcessing: return "Processing";
    case FacetTag::kStructure: return "Structure";
    case FacetTag::kProperty: return "Property";
    case FacetTag::kPerformance: return "Performance";
  }
  return "";
}

std::optional<FacetTag> parse_facet(std::string_view name) {
  for (FacetTag f : kAllFacets) {
    if (facet_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view facet_prefix(FacetTag facet) {
  switch (facet) {
    case FacetTag::kProcessing: return "P";
    case FacetTag::kStructure: return "S";
    case FacetTag::kProperty: return "Pr";
    case FacetTag::kPerformance: return "Pe";
  }
  return "";
}

ConceptId::ConceptId(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) {
    throw Error(ErrorCode::kInvalidIdentifier,
                "'" + value_ +
                    "' is not a concept id (ASCII letters and digits, "
                    "starting with an uppercase letter)",
                value_);
  }
}

bool ConceptId::is_valid(std::string_view value) {
  if (value.empty() || !is_upper(value.front())) return false;
  return std::all_of(value.begin(), value.end(), is_alnum);
}

bool is_valid_relation_name(std::string_view name) {
  if (name.empty() || !is_lower(name.front())) return false;
  return std::all_of(name.begin(), name.end(), is_alnum);
}

bool is_reserved_relation_name(std::string_view name) {
  static constexpr std::string_view kReserved[] = {
      "isA",        "facet",      "name",    "version",
      "relation",   "domainFacet", "rangeFacet", "acyclic"};
  return std::find(std::begin(kReserved), std::end(kReserved), name) !=
         std::end(kReserved);
}

std::string_view canonical_relation_name(std::string_view name) {
  if (name == "isPreceededBy" || name == "isPreceededby") {
    return "isPrecededBy";
  }
  return name;
}

RelationSchema::RelationSchema(std::vector<RelationType> relations)
    : relations_(std::move(relations)) {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const std::string& name = relations_[i].name;
    const ItemRef item{ItemRef::Kind::kRelation, i};
    if (!is_valid_relation_name(name)) {
      throw Error(ErrorCode::kInvalidSchema,
                  "'" + name + "' is not a camelCase relation name", name,
                  std::nullopt, item);
    }
    if (is_reserved_relation_name(name)) {
      throw Error(ErrorCode::kInvalidSchema,
                  "relation name '" + name + "' is reserved", name,
                  std::nullopt, item);
    }
  }
  std::vector<std::size_t> order(relations_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return relations_[a].name < relations_[b].name;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (relations_[order[i]].name == relations_[order[i - 1]].name) {
      const std::string& name = relations_[order[i]].name;
      throw Error(ErrorCode::kInvalidSchema,
                  "relation '" + name + "' is declared twice", name,
                  std::nullopt, ItemRef{ItemRef::Kind::kRelation, order[i]});
    }
  }
  std::sort(relations_.begin(), relations_.end(),
            [](const RelationType& a, const RelationType& b) {
              return a.name < b.name;
            });
}

const RelationType* RelationSchema::find(std::string_view name) const {
  auto it = std::lower_bound(
      relations_.begin(), relations_.end(), name,
      [](const RelationType& r, std::string_view n) { return r.name < n; });
  if (it == relations_.end() || it->name != name) return nullptr;
  return &*it;
}

Ontology build_ontology(std::string name, std::string version,
                        std::vector<Concept> concepts,
                        std::vector<RelationEdge> edges,
                        RelationSchema schema) {
  Ontology o;
  o.name_ = std::move(name);
  o.version_ = std::move(version);
  o.schema_ = std::move(schema);

  std::unordered_map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    check_concept(concepts[i], i);
    if (!index_of.emplace(concepts[i].id.str(), i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "concept id '" + concepts[i].id.str() + "' is used twice",
                  concepts[i].id.str(), std::nullopt,
                  ItemRef{ItemRef::Kind::kConcept, i});
    }
  }

  for (std::size_t i = 0; i < concepts.size(); ++i) {
    const Concept& c = concepts[i];
    if (!c.parent) continue;
    const ItemRef item{ItemRef::Kind::kConcept, i};
    auto it = index_of.find(c.parent->str());
    if (it == index_of.end()) {
      throw Error(ErrorCode::kDanglingReference,
                  "parent '" + c.parent->str() + "' of '" + c.id.str() +
                      "' does not exist",
                  c.parent->str(), std::nullopt, item);
    }
    if (*c.parent == c.id) {
      throw Error(ErrorCode::kParentCycle,
                  "concept '" + c.id.str() + "' is its own parent",
                  c.id.str(), std::nullopt, item);
    }
    const Concept& parent = concepts[it->second];
    if (parent.facet != c.facet) {
      throw Error(ErrorCode::kCrossFacetParent,
                  "'" + c.id.str() + "' (" + std::string(facet_name(c.facet)) +
                      ") cannot have parent '" + parent.id.str() + "' (" +
                      std::string(facet_name(parent.facet)) + ")",
                  c.id.str(), std::nullopt, item);
    }
  }

  // Parent links form a functional graph; colour each chain once.
  enum class Mark : unsigned char { kUnvisited, kOnPath, kDone };
  std::vector<Mark> mark(concepts.size(), Mark::kUnvisited);
  for (std::size_t start = 0; start < concepts.size(); ++start) {
    std::vector<std::size_t> path;
    std::size_t cur = start;
    while (true) {
      if (mark[cur] == Mark::kDone) break;
      if (mark[cur] == Mark::kOnPath) {
        throw Error(ErrorCode::kParentCycle,
                    "parent links of '" + concepts[cur].id.str() +
                        "' form a cycle",
                    concepts[cur].id.str(), std::nullopt,
                    ItemRef{ItemRef::Kind::kConcept, cur});
      }
      mark[cur] = Mark::kOnPath;
      path.push_back(cur);
      if (!concepts[cur].parent) break;
      cur = index_of.at(concepts[cur].parent->str());
    }
    for (std::size_t p : path) mark[p] = Mark::kDone;
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    RelationEdge& e = edges[i];
    const ItemRef item{ItemRef::Kind::kEdge, i};
    for (const ConceptId* end : {&e.subject, &e.object}) {
      if (!index_of.contains(end->str())) {
        throw Error(ErrorCode::kDanglingReference,
                    "edge endpoint '" + end->str() + "' does not exist",
                    end->str(), std::nullopt, item);
      }
    }
    if (o.schema_.find(e.relation) == nullptr) {
      throw Error(ErrorCode::kUnknownRelation,
                  "relation '" + e.relation + "' is not declared in the schema",
                  e.relation, std::nullopt, item);
    }
    if (e.subject == e.object) {
      throw Error(ErrorCode::kSelfEdge,
                  "edge '" + e.relation + "' links '" + e.subject.str() +
                      "' to itself",
                  e.subject.str(), std::nullopt, item);
    }
  }

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  o.edges_ = std::move(edges);

  for (Concept& c : concepts) {
    ConceptId id = c.id;
    o.concepts_.emplace(std::move(id), std::move(c));
  }
  for (const auto& [id, c] : o.concepts_) {
    if (c.parent) {
      o.children_[*c.parent].push_back(id);
    } else {
      o.roots_[facet_index(c.facet)].push_back(id);
    }
  }
  for (std::size_t i = 0; i < o.edges_.size(); ++i) {
    o.outgoing_[o.edges_[i].subject].push_back(i);
    o.incoming_[o.edges_[i].object].push_back(i);
  }
  return o;
}

const Concept* Ontology::find(const ConceptId& id) const {
  auto it = concepts_.find(id);
  return it == concepts_.end() ? nullptr : &it->second;
}

const Concept* Ontology::find(std::string_view id) const {
  if (!ConceptId::is_valid(id)) return nullptr;
  return find(ConceptId(std::string(id)));
}

const Concept& Ontology::at(const ConceptId& id) const {
  const Concept* c = find(id);
  if (c == nullptr) {
    throw Error(ErrorCode::kUnknownConcept,
                "no concept '" + id.str() + "' in ontology '" + name_ + "'",
                id.str());
  }
  return *c;
}

const std::vector<ConceptId>& Ontology::children(const ConceptId& id) const {
  auto it = children_.find(id);
  return it == children_.end() ? empty_ids() : it->second;
}

const std::vector<ConceptId>& Ontology::roots(FacetTag facet) const {
  return roots_[facet_index(facet)];
}

FacetCounts stats(const Ontology& ontology) {
  FacetCounts counts;
  for (const auto& [id, c] : ontology.concepts()) {
    counts.concepts[facet_index(c.facet)] += 1;
    counts.labels[facet_index(c.facet)] += c.label_count();
  }
  for (std::size_t f = 0; f < 4; ++f) {
    counts.total_concepts += counts.concepts[f];
    counts.total_labels += counts.labels[f];
  }
  return counts;
}

std::vector<ConceptId> ancestors(const Ontology& ontology,
                                 const ConceptId& id) {
  std::vector<ConceptId> chain;
  const Concept* c = &ontology.at(id);
  while (c->parent) {
    chain.push_back(*c->parent);
    c = &ontology.at(*c->parent);
  }
  return chain;
}

ConceptRelations relations_of(const Ontology& ontology, const ConceptId& id) {
  ontology.at(id);
  ConceptRelations out;
  if (auto it = ontology.outgoing_.find(id); it != ontology.outgoing_.end()) {
    for (std::size_t i : it->second) out.outgoing.push_back(ontology.edges_[i]);
  }
  if (auto it = ontology.incoming_.find(id); it != ontology.incoming_.end()) {
    for (std::size_t i : it->second) out.incoming.push_back(ontology.edges_[i]);
  }
  std::sort(out.outgoing.begin(), out.outgoing.end(),
            [](const RelationEdge& a, const RelationEdge& b) {
              return std::tie(a.relation, a.object) <
                     std::tie(b.relation, b.object);
            });
  std::sort(out.incoming.begin(), out.incoming.end(),
            [](const RelationEdge& a, const RelationEdge& b) {
              return std::tie(a.relation, a.subject) <
                     std::tie(b.relation, b.subject);
            });
  return out;
}

}  // namespace facetforge
