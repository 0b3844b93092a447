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

#ifndef FACETFORGE_ONTOLOGY_IO_H_
#define FACETFORGE_ONTOLOGY_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "facetforge/error.h"
#include "facetforge/model.h"

namespace facetforge {

inline constexpr std::string_view kSkosNamespace =
    "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kMatNamespace =
    "https://facetforge.dev/ns/pspp#";
inline constexpr std::string_view kRdfTypeIri =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

// Non-fatal finding, e.g. an unknown predicate that was skipped.
struct ParseWarning {
  SourceLocation location;
  std::string code;
  std::string message;

  friend bool operator==(const ParseWarning&, const ParseWarning&) = default;
};

struct ParseOutcome {
  Ontology ontology;
  std::vector<ParseWarning> warnings;
};

// All parse functions throw facetforge::Error. Syntax and schema errors, as
// well as errors raised by build_ontology, carry a SourceLocation.
ParseOutcome parse_canonical_json(std::string_view bytes);
// Concepts sorted by id, edges by (subject, relation, object), two-space
// indentation and a trailing newline.
std::string serialize_canonical_json(const Ontology& ontology);

ParseOutcome parse_skos_turtle(std::string_view text);
std::string serialize_skos_turtle(const Ontology& ontology);

enum class OntologyFormat { kJson, kTurtle };

// JSON when the first non-blank byte is '{', Turtle otherwise.
OntologyFormat sniff_format(std::string_view text);
ParseOutcome parse_ontology(std::string_view text);
std::string serialize_ontology(const Ontology& ontology, OntologyFormat format);

// {"concepts": {<facet>: n, ..., "total": n}, "labels": {...}} with a
// trailing newline.
std::string facet_counts_to_json(const FacetCounts& counts);

// Line/column of a byte offset; columns count code points.
SourceLocation location_of(std::string_view text, std::size_t byte_offset);

}  // namespace facetforge

#endif  // FACETFORGE_ONTOLOGY_IO_H_
