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

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "facetforge/index.h"
#include "facetforge/ontology_io.h"
#include "facetforge/validator.h"

namespace facetforge {
namespace {

const char* const kWords[] = {
    "thermal", "conductivity", "active", "material", "particle", "size",
    "pore", "gel", "drying", "freeze", "solvent", "density", "cycle", "life",
    "capacity", "layer", "carbon", "oxide", "binder", "coating", "surface",
    "area", "aerogel", "cathode", "anode", "electrolyte", "silica", "sintering"};

std::string word(std::mt19937& rng) {
  return kWords[rng() % std::size(kWords)];
}

// Roughly the size of a real domain vocabulary: a few hundred terms with
// one- to three-word labels and shallow hierarchies.
Ontology synthetic(std::size_t concepts, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Concept> out;
  for (std::size_t i = 0; i < concepts; ++i) {
    Concept c;
    c.id = ConceptId("Term" + std::to_string(i));
    c.facet = kAllFacets[i % 4];
    const std::size_t n = 1 + rng() % 3;
    for (std::size_t w = 0; w < n; ++w) {
      c.pref_label += (w ? " " : "") + word(rng);
    }
    c.pref_label += " " + std::to_string(i);
    if (rng() % 2) c.alt_labels.push_back(word(rng) + " alt " + std::to_string(i));
    if (i >= 4 && rng() % 3 == 0) c.parent = out[i - 4 - (rng() % (i / 4)) * 4].id;
    out.push_back(std::move(c));
  }
  std::vector<RelationEdge> edges;
  for (std::size_t i = 1; i < concepts; i += 4) {
    // Structure -> Processing, always in schema.
    edges.push_back({out[i].id, "isSynthesizedBy", out[i - 1].id});
  }
  return build_ontology("bench", "1", std::move(out), std::move(edges),
                        default_pspp_schema());
}

std::string document(std::size_t words, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::string text;
  for (std::size_t i = 0; i < words; ++i) {
    if (i) text += (i % 17 == 0) ? ". " : " ";
    text += word(rng);
    if (rng() % 5 == 0) text += " " + std::to_string(rng() % 400);
  }
  return text;
}

void BM_IndexDocument(benchmark::State& state) {
  const Ontology o = synthetic(400, 1);
  const MatchAutomaton a = build_automaton(o);
  const std::string text = document(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(index_document(a, text));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_IndexDocument)->Arg(100)->Arg(1000)->Arg(10000);

void BM_BuildAutomaton(benchmark::State& state) {
  const Ontology o = synthetic(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_automaton(o));
  }
}
BENCHMARK(BM_BuildAutomaton)->Arg(100)->Arg(1000);

void BM_ParseCanonicalJson(benchmark::State& state) {
  const std::string bytes =
      serialize_canonical_json(synthetic(static_cast<std::size_t>(state.range(0)), 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_canonical_json(bytes));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes.size()));
}
BENCHMARK(BM_ParseCanonicalJson)->Arg(100)->Arg(1000);

void BM_ParseSkosTurtle(benchmark::State& state) {
  const std::string text =
      serialize_skos_turtle(synthetic(static_cast<std::size_t>(state.range(0)), 5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_skos_turtle(text));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseSkosTurtle)->Arg(100)->Arg(1000);

void BM_Validate(benchmark::State& state) {
  const Ontology o = synthetic(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate(o));
  }
}
BENCHMARK(BM_Validate)->Arg(100)->Arg(1000);

}  // namespace
}  // namespace facetforge

BENCHMARK_MAIN();
