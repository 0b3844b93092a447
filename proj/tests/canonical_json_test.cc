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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "facetforge/error.h"
#include "facetforge/ontology_io.h"
#include "facetforge/validator.h"
#include "generators.h"
#include "json.hpp"
#include "test_support.h"

namespace facetforge {
namespace {

const char* const kEmptyDoc = R"({
  "name": "empty",
  "version": "0",
  "schema": [],
  "concepts": [],
  "edges": []
})";

std::string doc_with(const std::string& concepts, const std::string& edges = "",
                     const std::string& extra = "") {
  return R"({"name": "t", "version": "1", "schema": [)"
         R"({"name": "isPrecededBy", "domain": "Processing", "range": "Processing", "acyclic": true}],)" +
         extra + R"( "concepts": [)" + concepts + R"(], "edges": [)" + edges +
         "]}";
}

Error parse_error(std::string_view text) {
  try {
    parse_canonical_json(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << text;
  return Error(ErrorCode::kIo, "none");
}

TEST(CanonicalJson, EmptyArraysGiveEmptyOntology) {
  const ParseOutcome out = parse_canonical_json(kEmptyDoc);
  EXPECT_EQ(out.ontology.name(), "empty");
  EXPECT_EQ(out.ontology.version(), "0");
  EXPECT_TRUE(out.ontology.concepts().empty());
  EXPECT_TRUE(out.ontology.schema().empty());
  EXPECT_TRUE(out.warnings.empty());
}

TEST(CanonicalJson, BatteryFixtureMatchesHandCount) {
  const ParseOutcome out = parse_canonical_json(
      testing::read_file(testing::fixture_path("battery_excerpt.json")));
  EXPECT_TRUE(out.warnings.empty());
  const FacetCounts c = stats(out.ontology);
  EXPECT_EQ(c.total_concepts, 9u);
  EXPECT_EQ(c.total_labels, 12u);
  EXPECT_EQ(out.ontology.edges().size(), 5u);
  EXPECT_EQ(out.ontology.schema(), default_pspp_schema());
}

TEST(CanonicalJson, TruncationReportsItsPosition) {
  const std::string full =
      testing::read_file(testing::fixture_path("battery_excerpt.json"));
  const std::string cut = full.substr(0, 200);
  const Error e = parse_error(cut);
  EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
  ASSERT_TRUE(e.location().has_value());
  EXPECT_EQ(*e.location(), location_of(cut, cut.size()));
}

TEST(CanonicalJson, SyntaxErrorLocation) {
  const Error e = parse_error("{\n  \"name\": \"x\",\n  oops\n}");
  EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
  EXPECT_EQ(e.location(), (SourceLocation{3, 3}));
  // Columns count code points: "é" is one column.
  const Error u = parse_error("{\"n\xc3\xa9\": x}");
  EXPECT_EQ(u.location(), (SourceLocation{1, 8}));
}

TEST(CanonicalJson, SchemaErrors) {
  Error e = parse_error(R"({"name": "t", "version": "1", "schema": [], "concepts": []})");
  EXPECT_EQ(e.code(), ErrorCode::kSchemaError);
  EXPECT_NE(std::string(e.what()).find("edges"), std::string::npos);

  e = parse_error(R"({"name": 5, "version": "1", "schema": [], "concepts": [], "edges": []})");
  EXPECT_EQ(e.code(), ErrorCode::kSchemaError);
  EXPECT_EQ(e.location(), (SourceLocation{1, 10}));

  e = parse_error("[]");
  EXPECT_EQ(e.code(), ErrorCode::kSchemaError);

  e = parse_error(doc_with(R"({"id": "A", "prefLabel": "a", "facet": "Properties"})"));
  EXPECT_EQ(e.code(), ErrorCode::kUnknownFacetValue);
  EXPECT_EQ(e.subject(), "Properties");

  e = parse_error(doc_with(R"({"id": "a b", "prefLabel": "a", "facet": "Property"})"));
  EXPECT_EQ(e.code(), ErrorCode::kInvalidIdentifier);
  ASSERT_TRUE(e.location().has_value());
}

TEST(CanonicalJson, BuildErrorsPointAtTheItem) {
  const std::string text = doc_with(
      R"({"id": "A", "prefLabel": "a", "facet": "Processing"},
{"id": "B", "prefLabel": "b", "facet": "Processing", "parent": "Zed"})");
  const Error e = parse_error(text);
  EXPECT_EQ(e.code(), ErrorCode::kDanglingReference);
  EXPECT_EQ(e.subject(), "Zed");
  ASSERT_TRUE(e.location().has_value());
  EXPECT_EQ(e.location()->line, 2u);

  const Error edge = parse_error(doc_with(
      R"({"id": "A", "prefLabel": "a", "facet": "Processing"})",
      R"({"subject": "A", "relation": "isPrecededBy", "object": "A"})"));
  EXPECT_EQ(edge.code(), ErrorCode::kSelfEdge);
  EXPECT_TRUE(edge.location().has_value());
}

TEST(CanonicalJson, Warnings) {
  const std::string text = doc_with(
      R"({"id": "A", "prefLabel": "Freeze Drying", "altLabels": ["freeze-drying", "lyophilization"], "facet": "Processing", "colour": "red"},
{"id": "B", "prefLabel": "b", "facet": "Processing"})",
      R"({"subject": "B", "relation": "isPreceededby", "object": "A"},
{"subject": "B", "relation": "isPrecededBy", "object": "A"})");
  const ParseOutcome out = parse_canonical_json(text);
  std::vector<std::string> codes;
  for (const ParseWarning& w : out.warnings) codes.push_back(w.code);
  std::sort(codes.begin(), codes.end());
  EXPECT_EQ(codes, (std::vector<std::string>{"DuplicateAltLabel", "DuplicateEdge",
                                             "RelationAlias", "UnknownKey"}));
  EXPECT_EQ(out.ontology.at(ConceptId("A")).alt_labels,
            (std::vector<std::string>{"lyophilization"}));
  ASSERT_EQ(out.ontology.edges().size(), 1u);
  EXPECT_EQ(out.ontology.edges()[0].relation, "isPrecededBy");
}

TEST(CanonicalJson, DuplicateObjectKeyWarns) {
  const ParseOutcome out = parse_canonical_json(
      R"({"name": "a", "name": "b", "version": "1", "schema": [], "concepts": [], "edges": []})");
  ASSERT_EQ(out.warnings.size(), 1u);
  EXPECT_EQ(out.warnings[0].code, "DuplicateKey");
}

TEST(CanonicalJson, GoldenSerialization) {
  const Ontology o = build_ontology(
      "golden", "2.0",
      {testing::make_concept("Drying", "drying", FacetTag::kProcessing),
       testing::make_concept("FreezeDrying", "freeze drying",
                             FacetTag::kProcessing, {"lyophilization"},
                             "Drying")},
      {testing::make_edge("FreezeDrying", "isPrecededBy", "Drying")},
      RelationSchema({{"isPrecededBy", FacetTag::kProcessing,
                       FacetTag::kProcessing, true}}));
  const std::string expected = R"({
  "name": "golden",
  "version": "2.0",
  "schema": [
    {
      "name": "isPrecededBy",
      "domain": "Processing",
      "range": "Processing",
      "acyclic": true
    }
  ],
  "concepts": [
    {
      "id": "Drying",
      "prefLabel": "drying",
      "altLabels": [],
      "facet": "Processing",
      "parent": null,
      "definition": null
    },
    {
      "id": "FreezeDrying",
      "prefLabel": "freeze drying",
      "altLabels": [
        "lyophilization"
      ],
      "facet": "Processing",
      "parent": "Drying",
      "definition": null
    }
  ],
  "edges": [
    {
      "subject": "FreezeDrying",
      "relation": "isPrecededBy",
      "object": "Drying"
    }
  ]
}
)";
  EXPECT_EQ(serialize_canonical_json(o), expected);
}

TEST(CanonicalJson, FixturesAreCanonicalFixedPoints) {
  for (const char* name : {"aerogel_excerpt.json", "battery_excerpt.json"}) {
    const std::string bytes = testing::read_file(testing::fixture_path(name));
    const std::string once =
        serialize_canonical_json(parse_canonical_json(bytes).ontology);
    EXPECT_EQ(once, bytes) << name;
    EXPECT_EQ(serialize_canonical_json(parse_canonical_json(once).ontology),
              once);
  }
}

TEST(CanonicalJson, EntryOrderDoesNotChangeBytes) {
  std::mt19937 rng(testing::test_seed(5));
  for (const char* name : {"aerogel_excerpt.json", "battery_excerpt.json"}) {
    const std::string bytes = testing::read_file(testing::fixture_path(name));
    for (int round = 0; round < 10; ++round) {
      nlohmann::ordered_json doc = nlohmann::ordered_json::parse(bytes);
      for (const char* key : {"schema", "concepts", "edges"}) {
        auto& arr = doc[key];
        std::vector<nlohmann::ordered_json> items(arr.begin(), arr.end());
        std::shuffle(items.begin(), items.end(), rng);
        arr = items;
      }
      const std::string shuffled = doc.dump(1);
      EXPECT_EQ(serialize_canonical_json(parse_canonical_json(shuffled).ontology),
                bytes);
    }
  }
}

TEST(CanonicalJson, SniffAndDispatch) {
  EXPECT_EQ(sniff_format("  \n{"), OntologyFormat::kJson);
  EXPECT_EQ(sniff_format("@prefix"), OntologyFormat::kTurtle);
  EXPECT_EQ(parse_ontology(kEmptyDoc).ontology.name(), "empty");
}

TEST(CanonicalJson, FacetCountsJson) {
  const Ontology o = testing::load_fixture("aerogel_excerpt.json");
  const auto doc = nlohmann::json::parse(facet_counts_to_json(stats(o)));
  EXPECT_EQ(doc["concepts"]["Processing"], 4);
  EXPECT_EQ(doc["concepts"]["total"], 10);
  EXPECT_EQ(doc["labels"]["Structure"], 4);
  EXPECT_EQ(doc["labels"]["total"], 14);
}

TEST(LocationOf, CountsLinesAndCodePoints) {
  EXPECT_EQ(location_of("", 0), (SourceLocation{1, 1}));
  EXPECT_EQ(location_of("ab\ncd", 4), (SourceLocation{2, 2}));
  EXPECT_EQ(location_of("\xc3\xa9x", 2), (SourceLocation{1, 2}));
}

// A syntax error never points past the first byte that broke the document.
TEST(CanonicalJsonProperty, SyntaxErrorsAreLocal) {
  std::mt19937 rng(testing::test_seed(21));
  testing::OntologyShape shape;
  shape.max_concepts = 8;
  shape.max_edges = 8;
  // Control bytes are invalid both inside and outside strings, so the
  // insertion point is the first offending byte.
  const std::string junk = "\x01\x02\x07\x0b\x1f";
  for (int round = 0; round < 300; ++round) {
    const std::string text =
        serialize_canonical_json(testing::random_ontology(rng, shape));
    const std::size_t at =
        std::uniform_int_distribution<std::size_t>(0, text.size() - 1)(rng);
    std::string broken = text;
    if (round % 2 == 0) {
      broken.resize(at);
    } else {
      broken.insert(at, 1, junk[rng() % junk.size()]);
    }
    try {
      parse_canonical_json(broken);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSyntaxError) continue;
      ASSERT_TRUE(e.location().has_value());
      const SourceLocation limit = location_of(broken, at);
      EXPECT_TRUE(e.location()->line < limit.line ||
                  (e.location()->line == limit.line &&
                   e.location()->column <= limit.column))
          << "at " << at << ": " << e.what();
    }
  }
}

}  // namespace
}  // namespace facetforge
