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

#include "generators.h"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "facetforge/normalize.h"

namespace facetforge::testing {
namespace {

const std::vector<std::string> kAsciiWords = {
    "thermal", "conductivity", "active", "material", "particle", "size",
    "pore",    "gel",          "drying", "freeze",   "solvent",  "density",
    "cycle",   "life",         "capacity", "layer",  "carbon",   "oxide",
    "binder",  "coating",      "process", "rate",    "glass",    "fiber",
    "surface", "area",         "gas",     "pores",   "materials", "li2o",
    "3d",      "nano",         "open",    "FIBER",   "Gel",      "Layer"};

// Decomposed and precomposed forms, case-fold expansions, ligatures and
// scripts without case.
const std::vector<std::string> kUnicodeWords = {
    "cafe\xcc\x81",           // cafe + combining acute
    "caf\xc3\xa9",            // precomposed
    "Stra\xc3\x9f" "e",       // sharp s
    "STRASSE",
    "\xce\xb1lumina",         // alpha
    "\xc3\x85ngstr\xc3\xb6m",
    "A\xcc\x8angstro\xcc\x88m",
    "\xe7\xb2\xbe\xe5\xaf\x86",  // CJK
    "\xef\xac\x81" "ber",        // fi ligature
    "\xce\xa3\xce\xa5\xce\xa3\xce\xa4\xce\x97\xce\x9c\xce\x91",  // Greek caps
    "\xc4\xb0stanbul",        // dotted capital I
};

const std::vector<std::string> kFillers = {
    "the", "a", "of", "and", "was", "measured", "at", "25", "K", "with",
    "samples", "we", "report", "its", "\xc2\xb0" "C", "\xce\xbcm", "was",
    "x", "GPa", "were", "sintered", "in", "air"};

const std::vector<std::string> kRelationNames = {
    "hasPart",     "relatesTo",        "isCausedBy", "enables",
    "isMeasuredBy", "isPrecededBy",    "isAssociatedWith", "improves",
    "limits",      "isDerivedFrom"};

const std::vector<std::string> kLabelSeparators = {" ", " ", " ", "-", " / "};
const std::vector<std::string> kDocSeparators = {
    " ", " ", " ", " ", ". ", ", ", "\n", " (", ") ", "; ", "\t", " \xe2\x80\x93 "};

template <typename T>
const T& pick(std::mt19937& rng, const std::vector<T>& items) {
  std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
  return items[d(rng)];
}

std::size_t uniform(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(std::mt19937& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

std::string capitalize(std::string word) {
  if (!word.empty() && word[0] >= 'a' && word[0] <= 'z') {
    word[0] = static_cast<char>(word[0] - 'a' + 'A');
  }
  return word;
}

std::string random_word(std::mt19937& rng, bool unicode) {
  if (unicode && chance(rng, 0.2)) return pick(rng, kUnicodeWords);
  return pick(rng, kAsciiWords);
}

std::string random_label(std::mt19937& rng, bool unicode) {
  const std::size_t words = uniform(rng, 1, 3);
  std::string out;
  for (std::size_t i = 0; i < words; ++i) {
    if (i > 0) out += pick(rng, kLabelSeparators);
    out += random_word(rng, unicode);
  }
  if (chance(rng, 0.05)) out = "\"" + out + "\"";
  if (chance(rng, 0.03)) out += " \\ back";
  return out;
}

std::string random_definition(std::mt19937& rng) {
  static const std::vector<std::string> parts = {
      "A process", " in which", " \"quoted\"", " back\\slash", "\nnew line",
      "\ttab", " \xc3\xa9t\xc3\xa9", " \"\"\" triple", " end.", " '",
      " \xf0\x9f\xa7\xaa"};
  std::string out;
  const std::size_t n = uniform(rng, 1, 5);
  for (std::size_t i = 0; i < n; ++i) out += pick(rng, parts);
  return out;
}

std::string ascii_upper(std::string s) {
  for (char& c : s) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return s;
}

std::string ascii_title(std::string s) {
  bool start = true;
  for (char& c : s) {
    const bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    if (start && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    start = !alpha;
  }
  return s;
}

RelationSchema random_schema(std::mt19937& rng) {
  std::vector<RelationType> relations;
  std::set<std::string> used;
  const std::size_t n = uniform(rng, 1, 5);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& name = pick(rng, kRelationNames);
    if (!used.insert(name).second) continue;
    relations.push_back(RelationType{
        name, kAllFacets[uniform(rng, 0, 3)], kAllFacets[uniform(rng, 0, 3)],
        chance(rng, 0.4)});
  }
  return RelationSchema(std::move(relations));
}

}  // namespace

OntologyParts random_parts(std::mt19937& rng, const OntologyShape& shape) {
  OntologyParts parts;
  parts.name = "gen-" + std::to_string(rng() % 100000);
  parts.schema = shape.random_schema && chance(rng, 0.5) ? random_schema(rng)
                                                         : default_pspp_schema();

  const std::size_t n = uniform(rng, 0, shape.max_concepts);
  for (std::size_t i = 0; i < n; ++i) {
    Concept c;
    std::string id = capitalize(pick(rng, kAsciiWords));
    if (chance(rng, 0.5)) id += capitalize(pick(rng, kAsciiWords));
    id += std::to_string(i);
    if (id[0] < 'A' || id[0] > 'Z') id = "X" + id;
    c.id = ConceptId(id);
    c.facet = kAllFacets[uniform(rng, 0, 3)];
    c.pref_label = random_label(rng, shape.unicode);
    std::set<std::string> keys{label_key(c.pref_label)};
    const std::size_t alts = uniform(rng, 0, shape.max_alt_labels);
    for (std::size_t a = 0; a < alts; ++a) {
      std::string alt = random_label(rng, shape.unicode);
      if (keys.insert(label_key(alt)).second) c.alt_labels.push_back(alt);
    }
    if (chance(rng, 0.4)) c.definition = random_definition(rng);
    if (i > 0 && chance(rng, shape.parent_probability)) {
      std::vector<std::size_t> same;
      for (std::size_t j = 0; j < i; ++j) {
        if (parts.concepts[j].facet == c.facet) same.push_back(j);
      }
      if (!same.empty()) c.parent = parts.concepts[pick(rng, same)].id;
    }
    parts.concepts.push_back(std::move(c));
  }

  if (n >= 2 && !parts.schema.empty()) {
    const std::size_t m = uniform(rng, 0, shape.max_edges);
    for (std::size_t k = 0; k < m; ++k) {
      const RelationType& rel = pick(rng, parts.schema.relations());
      std::size_t s = uniform(rng, 0, n - 1);
      std::size_t o = uniform(rng, 0, n - 1);
      if (shape.schema_conformant) {
        std::vector<std::size_t> dom;
        std::vector<std::size_t> ran;
        for (std::size_t j = 0; j < n; ++j) {
          if (parts.concepts[j].facet == rel.domain) dom.push_back(j);
          if (parts.concepts[j].facet == rel.range) ran.push_back(j);
        }
        if (dom.empty() || ran.empty()) continue;
        s = pick(rng, dom);
        o = pick(rng, ran);
      }
      if (s == o) continue;
      if (shape.acyclic_orders && rel.acyclic_required && s < o) {
        // Only the later concept may point at the earlier one; when the
        // facet constraint pins the direction, drop the edge instead.
        if (shape.schema_conformant && rel.domain != rel.range) continue;
        std::swap(s, o);
      }
      parts.edges.push_back(RelationEdge{parts.concepts[s].id, rel.name,
                                         parts.concepts[o].id});
    }
  }
  return parts;
}

Ontology random_ontology(std::mt19937& rng, const OntologyShape& shape) {
  OntologyParts parts = random_parts(rng, shape);
  return build_ontology(parts.name, "1." + std::to_string(rng() % 10),
                        std::move(parts.concepts), std::move(parts.edges),
                        std::move(parts.schema));
}

std::string random_document(std::mt19937& rng, const Ontology& ontology,
                            std::size_t approx_words) {
  std::vector<const Concept*> concepts;
  for (const auto& [id, c] : ontology.concepts()) concepts.push_back(&c);

  std::string out;
  std::size_t words = 0;
  while (words < approx_words) {
    if (!out.empty()) out += pick(rng, kDocSeparators);
    const double roll = std::uniform_real_distribution<double>(0, 1)(rng);
    if (!concepts.empty() && roll < 0.45) {
      const Concept& c = *pick(rng, concepts);
      std::string label = c.pref_label;
      if (!c.alt_labels.empty() && chance(rng, 0.5)) {
        label = pick(rng, c.alt_labels);
      }
      switch (uniform(rng, 0, 3)) {
        case 0: label = ascii_upper(label); break;
        case 1: label = ascii_title(label); break;
        default: break;
      }
      if (chance(rng, 0.15)) label += "s";
      out += label;
      words += 2;
    } else if (!concepts.empty() && roll < 0.6) {
      // Leading words of a label only: exercises trie prefixes that are not
      // phrases themselves.
      const std::string& label = pick(rng, concepts)->pref_label;
      const std::size_t cut = label.find(' ');
      out += label.substr(0, cut);
      words += 1;
    } else if (roll < 0.7) {
      out += random_word(rng, true);
      words += 1;
    } else {
      out += pick(rng, kFillers);
      words += 1;
    }
  }
  return out;
}

std::string random_query(std::mt19937& rng, const Ontology& ontology) {
  std::vector<std::string> labels;
  for (const auto& [id, c] : ontology.concepts()) {
    labels.push_back(c.pref_label);
    labels.insert(labels.end(), c.alt_labels.begin(), c.alt_labels.end());
  }
  if (labels.empty() || chance(rng, 0.1)) return chance(rng, 0.5) ? "zzq" : "a";
  const std::string& label = pick(rng, labels);
  // Cut on code point boundaries only.
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if ((static_cast<unsigned char>(label[i]) & 0xC0) != 0x80) starts.push_back(i);
  }
  starts.push_back(label.size());
  const std::size_t a = uniform(rng, 0, starts.size() - 2);
  const std::size_t b = uniform(rng, a + 1, starts.size() - 1);
  std::string q = label.substr(starts[a], starts[b] - starts[a]);
  if (chance(rng, 0.3)) q = ascii_upper(q);
  return q;
}

std::uint32_t test_seed(std::uint32_t fallback) {
  if (const char* env = std::getenv("FACETFORGE_SEED")) {
    return static_cast<std::uint32_t>(std::strtoul(env, nullptr, 10));
  }
  return fallback;
}

}  // namespace facetforge::testing
