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

#ifndef FACETFORGE_MODEL_H_
#define FACETFORGE_MODEL_H_

// Faceted ontology data model: concepts sorted into the four PSPP facets,
// is-a trees within each facet, and typed relationships across concepts.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace facetforge {

enum class FacetTag { kProcessing, kStructure, kProperty, kPerformance };

inline constexpr std::array<FacetTag, 4> kAllFacets = {
    FacetTag::kProcessing, FacetTag::kStructure, FacetTag::kProperty,
    FacetTag::kPerformance};

// "Processing", "Structure", "Property", "Performance".
std::string_view facet_name(FacetTag facet);
std::optional<FacetTag> parse_facet(std::string_view name);
// Notation prefix: P, S, Pr, Pe.
std::string_view facet_prefix(FacetTag facet);
inline std::size_t facet_index(FacetTag facet) {
  return static_cast<std::size_t>(facet);
}

// UpperCamelCase ASCII identifier, unique within an ontology.
class ConceptId {
 public:
  ConceptId() = default;
  // Throws Error(kInvalidIdentifier) unless `value` is non-empty ASCII
  // alphanumerics starting with an uppercase letter.
  explicit ConceptId(std::string value);

  static bool is_valid(std::string_view value);

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const ConceptId&, const ConceptId&) = default;
  friend bool operator==(const ConceptId&, const ConceptId&) = default;

 private:
  std::string value_;
};

struct Concept {
  ConceptId id;
  std::string pref_label;
  std::vector<std::string> alt_labels;
  FacetTag facet = FacetTag::kProcessing;
  std::optional<ConceptId> parent;
  std::optional<std::string> definition;

  // Number of labels (pref + alt).
  std::size_t label_count() const { return 1 + alt_labels.size(); }

  friend bool operator==(const Concept&, const Concept&) = default;
};

struct RelationType {
  std::string name;
  FacetTag domain = FacetTag::kProcessing;
  FacetTag range = FacetTag::kProcessing;
  bool acyclic_required = false;

  friend bool operator==(const RelationType&, const RelationType&) = default;
};

// Relation names are camelCase ASCII starting with a lowercase letter. "isA"
// and the names used by the document formats' own vocabulary are reserved.
bool is_valid_relation_name(std::string_view name);
bool is_reserved_relation_name(std::string_view name);

// Maps the alternate spellings of isPrecededBy onto the canonical one.
// Returns `name` unchanged when it is not an alias.
std::string_view canonical_relation_name(std::string_view name);

class RelationSchema {
 public:
  RelationSchema() = default;
  // Throws Error(kInvalidSchema) on duplicate, malformed or reserved names.
  explicit RelationSchema(std::vector<RelationType> relations);

  // Sorted by name.
  const std::vector<RelationType>& relations() const { return relations_; }
  const RelationType* find(std::string_view name) const;
  std::size_t size() const { return relations_.size(); }
  bool empty() const { return relations_.empty(); }

  friend bool operator==(const RelationSchema&,
                         const RelationSchema&) = default;

 private:
  std::vector<RelationType> relations_;
};

struct RelationEdge {
  ConceptId subject;
  std::string relation;
  ConceptId object;

  friend auto operator<=>(const RelationEdge&, const RelationEdge&) = default;
  friend bool operator==(const RelationEdge&, const RelationEdge&) = default;
};

struct FacetCounts {
  std::array<std::size_t, 4> concepts{};
  std::array<std::size_t, 4> labels{};
  std::size_t total_concepts = 0;
  std::size_t total_labels = 0;

  std::size_t concepts_in(FacetTag f) const { return concepts[facet_index(f)]; }
  std::size_t labels_in(FacetTag f) const { return labels[facet_index(f)]; }

  friend bool operator==(const FacetCounts&, const FacetCounts&) = default;
};

struct ConceptRelations {
  std::vector<RelationEdge> outgoing;
  std::vector<RelationEdge> incoming;
};

class Ontology;

Ontology build_ontology(std::string name, std::string version,
                        std::vector<Concept> concepts,
                        std::vector<RelationEdge> edges, RelationSchema schema);

// Immutable once built. Only build_ontology creates instances, so every
// instance satisfies the referential and hierarchy invariants.
class Ontology {
 public:
  const std::string& name() const { return name_; }
  const std::string& version() const { return version_; }
  const std::map<ConceptId, Concept>& concepts() const { return concepts_; }
  // Sorted by (subject, relation, object), duplicates removed.
  const std::vector<RelationEdge>& edges() const { return edges_; }
  const RelationSchema& schema() const { return schema_; }

  const Concept* find(const ConceptId& id) const;
  const Concept* find(std::string_view id) const;
  // Throws Error(kUnknownConcept).
  const Concept& at(const ConceptId& id) const;

  // Direct children of `id`, sorted by id.
  const std::vector<ConceptId>& children(const ConceptId& id) const;
  // Concepts of `facet` without a parent, sorted by id.
  const std::vector<ConceptId>& roots(FacetTag facet) const;

  friend bool operator==(const Ontology& a, const Ontology& b) {
    return a.name_ == b.name_ && a.version_ == b.version_ &&
           a.concepts_ == b.concepts_ && a.edges_ == b.edges_ &&
           a.schema_ == b.schema_;
  }

 private:
  friend Ontology build_ontology(std::string, std::string,
                                 std::vector<Concept>,
                                 std::vector<RelationEdge>, RelationSchema);
  friend ConceptRelations relations_of(const Ontology&, const ConceptId&);
  Ontology() = default;

  std::string name_;
  std::string version_;
  std::map<ConceptId, Concept> concepts_;
  std::vector<RelationEdge> edges_;
  RelationSchema schema_;

  std::map<ConceptId, std::vector<ConceptId>> children_;
  std::array<std::vector<ConceptId>, 4> roots_;
  // Indices into edges_, per concept.
  std::map<ConceptId, std::vector<std::size_t>> outgoing_;
  std::map<ConceptId, std::vector<std::size_t>> incoming_;
};

FacetCounts stats(const Ontology& ontology);

// Parent chain from the nearest parent up to the facet root.
std::vector<ConceptId> ancestors(const Ontology& ontology, const ConceptId& id);

// Every edge touching `id`, split by direction. Each list is sorted by
// (relation, other endpoint).
ConceptRelations relations_of(const Ontology& ontology, const ConceptId& id);

}  // namespace facetforge

#endif  // FACETFORGE_MODEL_H_
