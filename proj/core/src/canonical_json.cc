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

// Canonical JSON reader/writer. Parsing goes through a SAX handler that
// records where each value starts, so schema and build errors can point at
// the offending element.

#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <utility>

#include "facetforge/normalize.h"
#include "facetforge/ontology_io.h"
#include "json.hpp"

namespace facetforge {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Input iterator that publishes how many bytes the lexer has pulled.
class CountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator(const char* base, const char* pos, std::size_t* consumed)
      : base_(base), pos_(pos), consumed_(consumed) {}

  reference operator*() const { return *pos_; }
  CountingIterator& operator++() {
    ++pos_;
    *consumed_ = static_cast<std::size_t>(pos_ - base_);
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator tmp = *this;
    ++*this;
    return tmp;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) {
    return a.pos_ == b.pos_;
  }
  friend bool operator!=(const CountingIterator& a, const CountingIterator& b) {
    return a.pos_ != b.pos_;
  }

 private:
  const char* base_;
  const char* pos_;
  std::size_t* consumed_;
};

std::string escape_pointer_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

// Builds a DOM like nlohmann's own SAX DOM parser, plus a map from JSON
// pointer to the byte offset where that value starts.
class LocatingSax {
 public:
  LocatingSax(std::string_view text, const std::size_t& consumed,
              std::vector<ParseWarning>& warnings)
      : text_(text), consumed_(consumed), warnings_(warnings) {}

  bool null() { return value(nullptr); }
  bool boolean(bool v) { return value(v); }
  bool number_integer(json::number_integer_t v) { return value(v); }
  bool number_unsigned(json::number_unsigned_t v) { return value(v); }
  bool number_float(json::number_float_t v, const std::string&) {
    return value(v);
  }
  bool string(json::string_t& v) { return value(std::move(v)); }
  bool binary(json::binary_t& v) { return value(json::binary(std::move(v))); }

  bool start_object(std::size_t) {
    open(json::object());
    return true;
  }
  bool key(json::string_t& k) {
    const std::size_t start = token_start();
    Frame& top = stack_.back();
    if (top.node->contains(k)) {
      warnings_.push_back({location_of(text_, start), "DuplicateKey",
                           "key '" + k + "' repeats; the last value wins"});
    }
    top.key = std::move(k);
    return true;
  }
  bool end_object() {
    token_start();
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    open(json::array());
    return true;
  }
  bool end_array() {
    token_start();
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) {
    const std::size_t offset =
        std::min(position == 0 ? 0 : position - 1, text_.size());
    std::string message = ex.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at ..."
    // prefix; the location is reported separately.
    if (auto colon = message.find(": "); colon != std::string::npos) {
      message = message.substr(colon + 2);
    }
    throw Error(ErrorCode::kSyntaxError, message, "",
                location_of(text_, offset));
  }

  json& root() { return root_; }
  const std::map<std::string, std::size_t>& offsets() const {
    return offsets_;
  }

 private:
  struct Frame {
    json* node;
    std::string pointer;
    std::string key;
  };

  // First byte of the token the parser just reported.
  std::size_t token_start() {
    std::size_t pos = last_end_;
    while (pos < text_.size()) {
      const char c = text_[pos];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',' ||
          c == ':') {
        ++pos;
      } else {
        break;
      }
    }
    last_end_ = consumed_;
    return pos;
  }

  json* place(json v, std::size_t start) {
    if (stack_.empty()) {
      root_ = std::move(v);
      offsets_[""] = start;
      return &root_;
    }
    Frame& top = stack_.back();
    std::string pointer;
    json* slot;
    if (top.node->is_array()) {
      pointer = top.pointer + "/" + std::to_string(top.node->size());
      top.node->push_back(std::move(v));
      slot = &top.node->back();
    } else {
      pointer = top.pointer + "/" + escape_pointer_token(top.key);
      slot = &((*top.node)[top.key] = std::move(v));
    }
    offsets_[pointer] = start;
    return slot;
  }

  template <typename T>
  bool value(T&& v) {
    place(json(std::forward<T>(v)), token_start());
    return true;
  }

  void open(json container) {
    const std::size_t start = token_start();
    std::string pointer;
    if (!stack_.empty()) {
      const Frame& top = stack_.back();
      pointer = top.node->is_array()
                    ? top.pointer + "/" + std::to_string(top.node->size())
                    : top.pointer + "/" + escape_pointer_token(top.key);
    }
    json* slot = place(std::move(container), start);
    stack_.push_back(Frame{slot, std::move(pointer), {}});
  }

  std::string_view text_;
  const std::size_t& consumed_;
  std::vector<ParseWarning>& warnings_;
  std::size_t last_end_ = 0;
  json root_;
  std::vector<Frame> stack_;
  std::map<std::string, std::size_t> offsets_;
};

class DocumentReader {
 public:
  DocumentReader(std::string_view text, const json& root,
                 const std::map<std::string, std::size_t>& offsets,
                 std::vector<ParseWarning>& warnings)
      : text_(text), root_(root), offsets_(offsets), warnings_(warnings) {}

  ParseOutcome read() {
    expect_object(root_, "", "document");
    warn_unknown_keys(root_, "",
                      {"name", "version", "schema", "concepts", "edges"});
    std::string name = require_string(root_, "", "name");
    std::string version = require_string(root_, "", "version");
    std::vector<RelationType> relations = read_schema();
    std::vector<Concept> concepts = read_concepts();
    std::vector<RelationEdge> edges = read_edges();

    try {
      RelationSchema schema(std::move(relations));
      Ontology ontology =
          build_ontology(std::move(name), std::move(version),
                         std::move(concepts), std::move(edges),
                         std::move(schema));
      return ParseOutcome{std::move(ontology), std::move(warnings_)};
    } catch (const Error& e) {
      if (e.location()) throw;
      throw e.at(location_of(text_, offset_of(pointer_for(e))));
    }
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& message,
                         const std::string& pointer,
                         const std::string& subject = {}) const {
    throw Error(code, message, subject,
                location_of(text_, offset_of(pointer)));
  }

  std::size_t offset_of(std::string pointer) const {
    while (true) {
      if (auto it = offsets_.find(pointer); it != offsets_.end()) {
        return it->second;
      }
      if (pointer.empty()) return 0;
      pointer.erase(pointer.rfind('/'));
    }
  }

  void warn(const std::string& pointer, std::string code,
            std::string message) {
    warnings_.push_back(ParseWarning{location_of(text_, offset_of(pointer)),
                                     std::move(code), std::move(message)});
  }

  static std::string describe(const json& v) {
    return std::string(v.type_name());
  }

  void expect_object(const json& v, const std::string& pointer,
                     const std::string& what) const {
    if (!v.is_object()) {
      fail(ErrorCode::kSchemaError,
           what + " must be an object, not " + describe(v), pointer);
    }
  }

  const json& require(const json& obj, const std::string& pointer,
                      const std::string& key) const {
    auto it = obj.find(key);
    if (it == obj.end()) {
      fail(ErrorCode::kSchemaError, "missing required key '" + key + "'",
           pointer);
    }
    return *it;
  }

  std::string require_string(const json& obj, const std::string& pointer,
                             const std::string& key) const {
    const json& v = require(obj, pointer, key);
    if (!v.is_string()) {
      fail(ErrorCode::kSchemaError,
           "'" + key + "' must be a string, not " + describe(v),
           pointer + "/" + key);
    }
    return v.get<std::string>();
  }

  std::optional<std::string> optional_string(const json& obj,
                                             const std::string& pointer,
                                             const std::string& key) const {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) {
      fail(ErrorCode::kSchemaError,
           "'" + key + "' must be a string or null, not " + describe(*it),
           pointer + "/" + key);
    }
    return it->get<std::string>();
  }

  const json& require_array(const json& obj, const std::string& pointer,
                            const std::string& key) const {
    const json& v = require(obj, pointer, key);
    if (!v.is_array()) {
      fail(ErrorCode::kSchemaError,
           "'" + key + "' must be an array, not " + describe(v),
           pointer + "/" + key);
    }
    return v;
  }

  FacetTag require_facet(const json& obj, const std::string& pointer,
                         const std::string& key) const {
    const std::string value = require_string(obj, pointer, key);
    auto facet = parse_facet(value);
    if (!facet) {
      fail(ErrorCode::kUnknownFacetValue,
           "'" + value +
               "' is not a facet (Processing, Structure, Property, "
               "Performance)",
           pointer + "/" + key, value);
    }
    return *facet;
  }

  ConceptId require_id(const json& obj, const std::string& pointer,
                       const std::string& key) const {
    std::string value = require_string(obj, pointer, key);
    try {
      return ConceptId(std::move(value));
    } catch (const Error& e) {
      throw e.at(location_of(text_, offset_of(pointer + "/" + key)));
    }
  }

  void warn_unknown_keys(const json& obj, const std::string& pointer,
                         std::initializer_list<std::string_view> known) {
    for (const auto& [key, unused] : obj.items()) {
      bool found = false;
      for (std::string_view k : known) found = found || k == key;
      if (!found) {
        warn(pointer + "/" + escape_pointer_token(key), "UnknownKey",
             "ignoring unknown key '" + key + "'");
      }
    }
  }

  std::string relation_name(const std::string& raw,
                            const std::string& pointer) {
    std::string canonical(canonical_relation_name(raw));
    if (canonical != raw) {
      warn(pointer, "RelationAlias",
           "relation '" + raw + "' read as '" + canonical + "'");
    }
    return canonical;
  }

  std::vector<RelationType> read_schema() {
    const json& items = require_array(root_, "", "schema");
    std::vector<RelationType> relations;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::string ptr = "/schema/" + std::to_string(i);
      const json& item = items[i];
      expect_object(item, ptr, "relation declaration");
      warn_unknown_keys(item, ptr, {"name", "domain", "range", "acyclic"});
      RelationType rel;
      rel.name = relation_name(require_string(item, ptr, "name"), ptr + "/name");
      rel.domain = require_facet(item, ptr, "domain");
      rel.range = require_facet(item, ptr, "range");
      const json& acyclic = require(item, ptr, "acyclic");
      if (!acyclic.is_boolean()) {
        fail(ErrorCode::kSchemaError,
             "'acyclic' must be a boolean, not " + describe(acyclic),
             ptr + "/acyclic");
      }
      rel.acyclic_required = acyclic.get<bool>();
      relations.push_back(std::move(rel));
    }
    return relations;
  }

  std::vector<Concept> read_concepts() {
    const json& items = require_array(root_, "", "concepts");
    std::vector<Concept> concepts;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::string ptr = "/concepts/" + std::to_string(i);
      const json& item = items[i];
      expect_object(item, ptr, "concept");
      warn_unknown_keys(item, ptr,
                        {"id", "prefLabel", "altLabels", "facet", "parent",
                         "definition"});
      Concept c;
      c.id = require_id(item, ptr, "id");
      c.pref_label = require_string(item, ptr, "prefLabel");
      c.facet = require_facet(item, ptr, "facet");
      if (auto it = item.find("parent"); it != item.end() && !it->is_null()) {
        c.parent = require_id(item, ptr, "parent");
      }
      c.definition = optional_string(item, ptr, "definition");
      if (auto it = item.find("altLabels"); it != item.end()) {
        if (!it->is_array()) {
          fail(ErrorCode::kSchemaError,
               "'altLabels' must be an array, not " + describe(*it),
               ptr + "/altLabels");
        }
        std::set<std::string> seen{label_key(c.pref_label)};
        for (std::size_t j = 0; j < it->size(); ++j) {
          const std::string alt_ptr = ptr + "/altLabels/" + std::to_string(j);
          const json& alt = (*it)[j];
          if (!alt.is_string()) {
            fail(ErrorCode::kSchemaError,
                 "altLabels entries must be strings, not " + describe(alt),
                 alt_ptr);
          }
          std::string label = alt.get<std::string>();
          if (!seen.insert(label_key(label)).second) {
            warn(alt_ptr, "DuplicateAltLabel",
                 "dropping altLabel '" + label + "' of " + c.id.str() +
                     ", which repeats another label after normalization");
            continue;
          }
          c.alt_labels.push_back(std::move(label));
        }
      }
      concepts.push_back(std::move(c));
    }
    return concepts;
  }

  std::vector<RelationEdge> read_edges() {
    const json& items = require_array(root_, "", "edges");
    std::vector<RelationEdge> edges;
    std::set<RelationEdge> seen;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::string ptr = "/edges/" + std::to_string(i);
      const json& item = items[i];
      expect_object(item, ptr, "edge");
      warn_unknown_keys(item, ptr, {"subject", "relation", "object"});
      RelationEdge e;
      e.subject = require_id(item, ptr, "subject");
      e.relation = relation_name(require_string(item, ptr, "relation"),
                                 ptr + "/relation");
      e.object = require_id(item, ptr, "object");
      if (!seen.insert(e).second) {
        warn(ptr, "DuplicateEdge",
             "edge " + e.subject.str() + " " + e.relation + " " +
                 e.object.str() + " repeats");
      }
      edges.push_back(std::move(e));
    }
    return edges;
  }

  std::string pointer_for(const Error& e) const {
    if (!e.item()) return "";
    const std::string index = std::to_string(e.item()->index);
    switch (e.item()->kind) {
      case ItemRef::Kind::kRelation:
        return "/schema/" + index + "/name";
      case ItemRef::Kind::kConcept: {
        const std::string ptr = "/concepts/" + index;
        switch (e.code()) {
          case ErrorCode::kDanglingReference:
          case ErrorCode::kCrossFacetParent:
          case ErrorCode::kParentCycle:
            return ptr + "/parent";
          case ErrorCode::kDuplicateId:
            return ptr + "/id";
          default:
            return ptr;
        }
      }
      case ItemRef::Kind::kEdge: {
        const std::string ptr = "/edges/" + index;
        const json& edge = root_["edges"][e.item()->index];
        switch (e.code()) {
          case ErrorCode::kDanglingReference:
            return edge["subject"] == e.subject() ? ptr + "/subject"
                                                  : ptr + "/object";
          case ErrorCode::kUnknownRelation:
            return ptr + "/relation";
          default:
            return ptr;
        }
      }
    }
    return "";
  }

  std::string_view text_;
  const json& root_;
  const std::map<std::string, std::size_t>& offsets_;
  std::vector<ParseWarning>& warnings_;
};

}  // namespace

SourceLocation location_of(std::string_view text, std::size_t byte_offset) {
  byte_offset = std::min(byte_offset, text.size());
  SourceLocation loc;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < byte_offset; ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      line_start = i + 1;
    }
  }
  loc.column =
      code_point_length(text.substr(line_start, byte_offset - line_start)) + 1;
  return loc;
}

ParseOutcome parse_canonical_json(std::string_view bytes) {
  std::vector<ParseWarning> warnings;
  std::size_t consumed = 0;
  LocatingSax sax(bytes, consumed, warnings);
  CountingIterator first(bytes.data(), bytes.data(), &consumed);
  CountingIterator last(bytes.data(), bytes.data() + bytes.size(), &consumed);
  json::sax_parse(first, last, &sax);
  DocumentReader reader(bytes, sax.root(), sax.offsets(), warnings);
  return reader.read();
}

std::string serialize_canonical_json(const Ontology& ontology) {
  ordered_json doc;
  doc["name"] = ontology.name();
  doc["version"] = ontology.version();
  doc["schema"] = ordered_json::array();
  for (const RelationType& rel : ontology.schema().relations()) {
    ordered_json item;
    item["name"] = rel.name;
    item["domain"] = facet_name(rel.domain);
    item["range"] = facet_name(rel.range);
    item["acyclic"] = rel.acyclic_required;
    doc["schema"].push_back(std::move(item));
  }
  doc["concepts"] = ordered_json::array();
  for (const auto& [id, c] : ontology.concepts()) {
    ordered_json item;
    item["id"] = id.str();
    item["prefLabel"] = c.pref_label;
    item["altLabels"] = c.alt_labels;
    item["facet"] = facet_name(c.facet);
    item["parent"] = c.parent ? ordered_json(c.parent->str()) : nullptr;
    item["definition"] = c.definition ? ordered_json(*c.definition) : nullptr;
    doc["concepts"].push_back(std::move(item));
  }
  doc["edges"] = ordered_json::array();
  for (const RelationEdge& e : ontology.edges()) {
    ordered_json item;
    item["subject"] = e.subject.str();
    item["relation"] = e.relation;
    item["object"] = e.object.str();
    doc["edges"].push_back(std::move(item));
  }
  return doc.dump(2, ' ', false, ordered_json::error_handler_t::replace) +
         "\n";
}

std::string facet_counts_to_json(const FacetCounts& counts) {
  ordered_json doc;
  for (const char* group : {"concepts", "labels"}) {
    const bool labels = std::string_view(group) == "labels";
    ordered_json item;
    for (FacetTag f : kAllFacets) {
      item[std::string(facet_name(f))] =
          labels ? counts.labels_in(f) : counts.concepts_in(f);
    }
    item["total"] = labels ? counts.total_labels : counts.total_concepts;
    doc[group] = std::move(item);
  }
  return doc.dump(2) + "\n";
}

OntologyFormat sniff_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? OntologyFormat::kJson : OntologyFormat::kTurtle;
  }
  return OntologyFormat::kTurtle;
}

ParseOutcome parse_ontology(std::string_view text) {
  return sniff_format(text) == OntologyFormat::kJson ? parse_canonical_json(text)
                                                     : parse_skos_turtle(text);
}

std::string serialize_ontology(const Ontology& ontology,
                               OntologyFormat format) {
  return format == OntologyFormat::kJson ? serialize_canonical_json(ontology)
                                         : serialize_skos_turtle(ontology);
}

}  // namespace facetforge
