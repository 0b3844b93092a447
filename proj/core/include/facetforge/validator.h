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

#ifndef FACETFORGE_VALIDATOR_H_
#define FACETFORGE_VALIDATOR_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "facetforge/model.h"

namespace facetforge {

// The five PSPP relationships: isSynthesizedBy, isDependentOn,
// isDerivedFrom, isPrecededBy (acyclic) and isAssociatedWith.
RelationSchema default_pspp_schema();

enum class ViolationCode {
  kFacetExclusivity,    // V1
  kHierarchyError,      // V2
  kDomainRangeMismatch, // V3
  kOrderCycle,          // V4
  kLabelCollision,      // V5
  kDanglingReference,   // V6
  kUnreachable,         // V7
};

enum class Severity { kError, kWarning };

// "V1_FacetExclusivity" and so on.
std::string_view violation_code_name(ViolationCode code);
Severity severity_of(ViolationCode code);
std::string_view severity_name(Severity severity);

struct Violation {
  ViolationCode code;
  Severity severity;
  std::vector<std::string> subjects;
  std::string message;
  // Relation involved, for V3 and V4.
  std::optional<std::string> relation;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::string ontology_name;
  std::vector<Violation> violations;
  bool pass = true;

  std::size_t count(ViolationCode code) const;
  std::size_t error_count() const;

  friend bool operator==(const ValidationReport&,
                         const ValidationReport&) = default;
};

// Hierarchies deeper than this are reported as V2.
inline constexpr std::size_t kMaxHierarchyDepth = 64;

// Unchecked ontology contents. validate() on a built Ontology goes through
// this view; it also lets raw, never-built parts be linted directly.
struct OntologyParts {
  std::string name;
  std::vector<Concept> concepts;
  std::vector<RelationEdge> edges;
  RelationSchema schema;
};

OntologyParts decompose(const Ontology& ontology);

// Runs every check and reports all findings, ordered by (code, subjects,
// message). Never throws on data problems.
ValidationReport validate(const Ontology& ontology);
ValidationReport validate(const OntologyParts& parts);

// Human-readable paragraph: what was found, which rule it breaks and why the
// rule exists.
std::string explain(const Violation& violation);

// {"ontology", "pass", "violations": [{"code","severity","subjects","message"}]}
// pretty-printed with a trailing newline.
std::string report_to_json(const ValidationReport& report);

}  // namespace facetforge

#endif  // FACETFORGE_VALIDATOR_H_
