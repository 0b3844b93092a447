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

#include "facetforge/index.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "facetforge/error.h"
#include "json.hpp"

namespace facetforge {
namespace {

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace

std::uint32_t MatchAutomaton::intern(const std::string& word) {
  auto [it, added] = vocabulary_.emplace(
      word, static_cast<std::uint32_t>(vocabulary_.size()));
  return it->second;
}

std::uint32_t MatchAutomaton::lookup(const std::string& word) const {
  auto it = vocabulary_.find(word);
  return it == vocabulary_.end() ? UINT32_MAX : it->second;
}

std::vector<AutomatonEntry> MatchAutomaton::entries() const {
  std::vector<AutomatonEntry> out;
  for (const Phrase& p : phrases_) {
    for (const Candidate& c : p.candidates) {
      out.push_back(AutomatonEntry{p.text, c.concept_id, c.is_pref_label});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const AutomatonEntry& a, const AutomatonEntry& b) {
              return std::tie(a.phrase, a.concept_id) <
                     std::tie(b.phrase, b.concept_id);
            });
  return out;
}

MatchAutomaton::Match MatchAutomaton::longest_match(
    const std::vector<Token>& tokens, std::size_t first) const {
  Match best;
  std::uint32_t node = 0;
  const std::size_t limit =
      std::min(tokens.size(), first + max_phrase_length_);
  for (std::size_t i = first; i < limit; ++i) {
    const std::uint32_t word = lookup(tokens[i].text);
    if (word == UINT32_MAX) break;
    const auto& next = nodes_[node].next;
    auto it = next.find(word);
    if (it == next.end()) break;
    node = it->second;
    if (nodes_[node].phrase != kNoPhrase) {
      const Phrase& phrase = phrases_[nodes_[node].phrase];
      best.token_count = i - first + 1;
      best.phrase = &phrase.text;
      best.candidates = &phrase.candidates;
    }
  }
  return best;
}

MatchAutomaton build_automaton(const Ontology& ontology,
                               const NormalizationConfig& config) {
  MatchAutomaton a;
  a.config_ = config;
  for (const auto& [id, concept_entry] : ontology.concepts()) {
    std::vector<std::pair<const std::string*, bool>> labels{
        {&concept_entry.pref_label, true}};
    for (const std::string& alt : concept_entry.alt_labels) {
      labels.emplace_back(&alt, false);
    }
    for (const auto& [label, is_pref] : labels) {
      const std::vector<std::string> words = normalize_words(*label, config);
      if (words.empty()) {
        throw Error(ErrorCode::kEmptyLabelAfterNormalization,
                    "label '" + *label + "' of " + id.str() +
                        " has no letters or digits",
                    id.str());
      }
      std::uint32_t node = 0;
      for (const std::string& w : words) {
        const std::uint32_t word = a.intern(w);
        auto it = a.nodes_[node].next.find(word);
        if (it == a.nodes_[node].next.end()) {
          const auto child = static_cast<std::uint32_t>(a.nodes_.size());
          a.nodes_[node].next.emplace(word, child);
          a.nodes_.emplace_back();
          node = child;
        } else {
          node = it->second;
        }
      }
      if (a.nodes_[node].phrase == MatchAutomaton::kNoPhrase) {
        a.nodes_[node].phrase = static_cast<std::uint32_t>(a.phrases_.size());
        a.phrases_.push_back({join_words(words), words.size(), {}});
      }
      auto& candidates = a.phrases_[a.nodes_[node].phrase].candidates;
      // Folding can map two labels of one concept onto the same phrase.
      if (candidates.empty() || candidates.back().concept_id != id) {
        candidates.push_back({id, concept_entry.facet, is_pref});
      } else {
        candidates.back().is_pref_label |= is_pref;
      }
      a.max_phrase_length_ = std::max(a.max_phrase_length_, words.size());
      ++a.entry_count_;
    }
  }
  return a;
}

DocumentIndexResult index_document(const MatchAutomaton& automaton,
                                   std::string_view text) {
  DocumentIndexResult result;
  const std::vector<Token> tokens = normalize(text, automaton.config());
  std::map<ConceptId, std::pair<ConceptScore, FacetTag>> totals;

  std::size_t i = 0;
  while (i < tokens.size()) {
    const MatchAutomaton::Match m = automaton.longest_match(tokens, i);
    if (m.token_count == 0) {
      ++i;
      continue;
    }
    const Token& first = tokens[i];
    const Token& last = tokens[i + m.token_count - 1];
    const std::string surface(
        text.substr(first.byte_start, last.byte_end - first.byte_start));
    const bool ambiguous = m.candidates->size() > 1;
    for (const auto& c : *m.candidates) {
      result.hits.push_back(ConceptHit{c.concept_id, c.facet, surface,
                                       *m.phrase, first.start, last.end,
                                       ambiguous});
      auto& [score, facet] = totals[c.concept_id];
      score.concept_id = c.concept_id;
      score.count += 1;
      score.score += m.token_count;
      facet = c.facet;
    }
    i += m.token_count;
  }

  for (const auto& [id, entry] : totals) result.per_concept.push_back(entry.first);
  std::sort(result.per_concept.begin(), result.per_concept.end(),
            [](const ConceptScore& a, const ConceptScore& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.concept_id < b.concept_id;
            });
  for (const ConceptScore& s : result.per_concept) {
    result.per_facet[facet_index(totals.at(s.concept_id).second)].push_back(s);
  }
  result.notation = synthesize_notation(result);
  return result;
}

std::string synthesize_notation(const DocumentIndexResult& result) {
  std::string out;
  for (FacetTag f : kAllFacets) {
    const auto& entries = result.per_facet[facet_index(f)];
    if (entries.empty()) continue;
    if (!out.empty()) out += ';';
    out += facet_prefix(f);
    out += ':';
    out += entries.front().concept_id.str();
  }
  return out;
}

std::string index_result_to_json(const DocumentIndexResult& result) {
  using ordered_json = nlohmann::ordered_json;
  auto score_json = [](const ConceptScore& s) {
    ordered_json item;
    item["concept"] = s.concept_id.str();
    item["count"] = s.count;
    item["score"] = s.score;
    return item;
  };
  ordered_json doc;
  doc["hits"] = ordered_json::array();
  for (const ConceptHit& h : result.hits) {
    ordered_json item;
    item["concept"] = h.concept_id.str();
    item["facet"] = facet_name(h.facet);
    item["surface"] = h.matched_surface;
    item["label"] = h.via_label;
    item["start"] = h.span_start;
    item["end"] = h.span_end;
    item["ambiguous"] = h.ambiguous;
    doc["hits"].push_back(std::move(item));
  }
  doc["perConcept"] = ordered_json::array();
  for (const ConceptScore& s : result.per_concept) {
    doc["perConcept"].push_back(score_json(s));
  }
  doc["perFacet"] = ordered_json::object();
  for (FacetTag f : kAllFacets) {
    const auto& entries = result.per_facet[facet_index(f)];
    if (entries.empty()) continue;
    ordered_json list = ordered_json::array();
    for (const ConceptScore& s : entries) list.push_back(score_json(s));
    doc["perFacet"][std::string(facet_name(f))] = std::move(list);
  }
  doc["notation"] = result.notation;
  return doc.dump(2, ' ', false, ordered_json::error_handler_t::replace) +
         "\n";
}

std::string index_result_to_text(const DocumentIndexResult& result) {
  std::string out;
  for (const ConceptHit& h : result.hits) {
    out += std::to_string(h.span_start) + "-" + std::to_string(h.span_end) +
           "\t" + std::string(facet_name(h.facet)) + "\t" +
           h.concept_id.str() + "\t\"" + h.matched_surface + "\"";
    if (h.ambiguous) out += "\t(ambiguous)";
    out += "\n";
  }
  for (const ConceptScore& s : result.per_concept) {
    out += "score\t" + s.concept_id.str() + "\t" + std::to_string(s.score) +
           " (" + std::to_string(s.count) + " hit" + (s.count == 1 ? "" : "s") +
           ")\n";
  }
  out += "notation\t" + result.notation + "\n";
  return out;
}

}  // namespace facetforge
