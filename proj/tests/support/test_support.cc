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

#include "test_support.h"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include "facetforge/ontology_io.h"

namespace facetforge::testing {

std::filesystem::path source_dir() { return FACETFORGE_SOURCE_DIR; }

std::filesystem::path fixture_path(const std::string& file_name) {
  return source_dir() / "fixtures" / file_name;
}

std::filesystem::path data_path(const std::string& file_name) {
  return source_dir() / "tests" / "data" / file_name;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << bytes;
}

Ontology load_fixture(const std::string& file_name) {
  return parse_ontology(read_file(fixture_path(file_name))).ontology;
}

std::vector<std::string> read_paragraphs(const std::string& file_name) {
  std::istringstream in(read_file(data_path(file_name)));
  std::vector<std::string> out;
  std::string line;
  std::string current;
  auto flush = [&] {
    while (!current.empty() && current.back() == '\n') current.pop_back();
    if (!current.empty()) out.push_back(current);
    current.clear();
  };
  while (std::getline(in, line)) {
    if (line == "---") {
      flush();
    } else {
      current += line;
      current += '\n';
    }
  }
  flush();
  return out;
}

std::filesystem::path make_temp_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  auto dir = std::filesystem::temp_directory_path() /
             ("facetforge-" + tag + "-" + std::to_string(::getpid()) + "-" +
              std::to_string(counter++));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

Concept make_concept(const std::string& id, const std::string& pref_label,
                     FacetTag facet, std::vector<std::string> alt_labels,
                     std::optional<std::string> parent) {
  Concept c;
  c.id = ConceptId(id);
  c.pref_label = pref_label;
  c.alt_labels = std::move(alt_labels);
  c.facet = facet;
  if (parent) c.parent = ConceptId(*parent);
  return c;
}

RelationEdge make_edge(const std::string& subject, const std::string& relation,
                       const std::string& object) {
  return RelationEdge{ConceptId(subject), relation, ConceptId(object)};
}

}  // namespace facetforge::testing
