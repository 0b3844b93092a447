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

#ifndef FACETFORGE_INDEX_H_
#define FACETFORGE_INDEX_H_

// Dictionary-based concept extraction: a token trie over every normalized
// label, matched greedily (leftmost, longest, non-overlapping) over a
// document's token stream.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "facetforge/model.h"
#include "facetforge/normalize.h"

namespace facetforge {

struct AutomatonEntry {
  // Normalized label tokens joined by single spaces.
  std::string phrase;
  ConceptId concept_id;
  bool is_pref_label = false;

  friend bool operator==(const AutomatonEntry&,
                         const AutomatonEntry&) = default;
};

class MatchAutomaton {
 public:
  struct Candidate {
    ConceptId concept_id;
    FacetTag facet;
    bool is_pref_label;
  };

  struct Match {
    std::size_t token_count = 0;
    // Normalized phrase; empty when nothing matched.
    const std::string* phrase = nullptr;
    // Sorted by concept id.
    const std::vector<Candidate>* candidates = nullptr;
  };

  const NormalizationConfig& config() const { return config_; }
  std::size_t max_phrase_length() const { return max_phrase_length_; }
  // One per (concept, label) pair.
  std::size_t entry_count() const { return entry_count_; }
  std::size_t phrase_count() const { return phrases_.size(); }
  // Distinct (phrase, concept) pairs, sorted by (phrase, concept id).
  std::vector<AutomatonEntry> entries() const;

  // Longest phrase starting at tokens[first].
  Match longest_match(const std::vector<Token>& tokens,
                      std::size_t first) const;

 private:
  friend MatchAutomaton build_automaton(const Ontology&,
                                        const NormalizationConfig&);

  struct Node {
    std::unordered_map<std::uint32_t, std::uint32_t> next;
    // Index into phrases_, or kNoPhrase.
    std::uint32_t phrase = kNoPhrase;
  };
  struct Phrase {
    std::string text;
    std::size_t token_count = 0;
    std::vector<Candidate> candidates;
  };
  static constexpr std::uint32_t kNoPhrase = UINT32_MAX;

  std::uint32_t intern(const std::string& word);
  std::uint32_t lookup(const std::string& word) const;

  NormalizationConfig config_;
  std::unordered_map<std::string, std::uint32_t> vocabulary_;
  std::vector<Node> nodes_{Node{}};
  std::vector<Phrase> phrases_;
  std::size_t max_phrase_length_ = 0;
  std::size_t entry_count_ = 0;
};

// Throws Error(kEmptyLabelAfterNormalization) when a label has no
// alphanumeric content.
MatchAutomaton build_automaton(const Ontology& ontology,
                               const NormalizationConfig& config = {});

struct ConceptHit {
  ConceptId concept_id;
  FacetTag facet;
  std::string matched_surface;
  std::string via_label;
  // Code point offsets, end exclusive.
  std::size_t span_start = 0;
  std::size_t span_end = 0;
  bool ambiguous = false;

  friend bool operator==(const ConceptHit&, const ConceptHit&) = default;
};

struct ConceptScore {
  ConceptId concept_id;
  std::size_t count = 0;
  std::size_t score = 0;

  friend bool operator==(const ConceptScore&, const ConceptScore&) = default;
};

struct DocumentIndexResult {
  std::vector<ConceptHit> hits;
  // Score descending, then id ascending.
  std::vector<ConceptScore> per_concept;
  // Same ordering, split by facet.
  std::array<std::vector<ConceptScore>, 4> per_facet;
  std::string notation;

  friend bool operator==(const DocumentIndexResult&,
                         const DocumentIndexResult&) = default;
};

// Ambiguous phrases yield one hit per candidate concept over the same span.
// A concept scores the token length of each label it was matched through.
DocumentIndexResult index_document(const MatchAutomaton& automaton,
                                   std::string_view text);

// "P:<id>;S:<id>;Pr:<id>;Pe:<id>" from the top entry of each non-empty
// facet; empty facets are omitted.
std::string synthesize_notation(const DocumentIndexResult& result);

// {"hits", "perConcept", "perFacet", "notation"}, pretty-printed with a
// trailing newline.
std::string index_result_to_json(const DocumentIndexResult& result);
// One line per hit plus the notation, for terminals.
std::string index_result_to_text(const DocumentIndexResult& result);

}  // namespace facetforge

#endif  // FACETFORGE_INDEX_H_
