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

#ifndef FACETFORGE_TESTS_GENERATORS_H_
#define FACETFORGE_TESTS_GENERATORS_H_

// Seeded random inputs for the property tests. Everything is driven by a
// caller-owned std::mt19937 so failures reproduce from the printed seed.

#include <random>
#include <string>
#include <vector>

#include "facetforge/model.h"
#include "facetforge/validator.h"

namespace facetforge::testing {

struct OntologyShape {
  std::size_t max_concepts = 50;
  std::size_t max_edges = 80;
  // Mix in non-ASCII labels (decomposed accents, sharp s, Greek, CJK).
  bool unicode = true;
  // Edges always respect the relation's domain and range.
  bool schema_conformant = false;
  // Edges of acyclic relations only point from later to earlier concepts.
  bool acyclic_orders = false;
  // Draw a random custom schema instead of the default one.
  bool random_schema = true;
  // Probability that a concept gets a parent.
  double parent_probability = 0.4;
  // Extra labels per concept are drawn from 0..max_alt_labels.
  std::size_t max_alt_labels = 3;
};

// Build inputs that are accepted by build_ontology.
OntologyParts random_parts(std::mt19937& rng, const OntologyShape& shape);
Ontology random_ontology(std::mt19937& rng, const OntologyShape& shape);

// Text assembled from the ontology's labels (with case, punctuation and
// spacing noise), partial phrases and filler words.
std::string random_document(std::mt19937& rng, const Ontology& ontology,
                            std::size_t approx_words);

// Random non-empty UTF-8 string drawn from label fragments.
std::string random_query(std::mt19937& rng, const Ontology& ontology);

// Seed for a property test: $FACETFORGE_SEED if set, else `fallback`.
std::uint32_t test_seed(std::uint32_t fallback);

}  // namespace facetforge::testing

#endif  // FACETFORGE_TESTS_GENERATORS_H_
