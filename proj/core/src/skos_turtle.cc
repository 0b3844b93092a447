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

// SKOS-flavoured Turtle subset. The parser reads a practical slice of Turtle
// (prefixes, predicate/object lists, short and long strings, blank-node
// property lists in object position) into triples, then interprets the
// triples against the skos:/mat: vocabulary.

#include <unicode/utf8.h>

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "facetforge/normalize.h"
#include "facetforge/ontology_io.h"

namespace facetforge {
namespace {

struct Term {
  enum class Kind { kIri, kLiteral, kBlank, kBoolean, kUnsupported };
  Kind kind = Kind::kUnsupported;
  // IRI, literal lexical form, or a description of the unsupported term.
  std::string value;
  std::size_t offset = 0;
  // Index into Parser::blank_nodes_ for kBlank.
  std::size_t blank = 0;
  bool boolean = false;
};

struct Statement {
  Term predicate;
  Term object;
};

struct Triple {
  std::string subject;
  std::size_t subject_offset = 0;
  Statement statement;
};

bool is_name_start(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c >= 0x80;
}

bool is_name_char(unsigned char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '_' || c == '-';
}

class TurtleReader {
 public:
  explicit TurtleReader(std::string_view text) : text_(text) {}

  std::vector<Triple> read() {
    check_utf8();
    while (true) {
      skip_ws();
      if (at_end()) break;
      statement();
    }
    return std::move(triples_);
  }

  const std::vector<std::vector<Statement>>& blank_nodes() const {
    return blank_nodes_;
  }
  std::vector<ParseWarning>& warnings() { return warnings_; }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    fail_at(pos_, message);
  }
  [[noreturn]] void fail_at(std::size_t offset,
                            const std::string& message) const {
    throw Error(ErrorCode::kSyntaxError, message, "",
                location_of(text_, offset));
  }

  void warn(std::size_t offset, std::string code, std::string message) {
    warnings_.push_back(
        {location_of(text_, offset), std::move(code), std::move(message)});
  }

  void check_utf8() const {
    const auto* bytes = reinterpret_cast<const uint8_t*>(text_.data());
    const auto length = static_cast<int32_t>(text_.size());
    int32_t offset = 0;
    while (offset < length) {
      const int32_t start = offset;
      UChar32 c;
      U8_NEXT(bytes, offset, length, c);
      if (c < 0) fail_at(static_cast<std::size_t>(start), "invalid UTF-8");
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void skip_ws() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" +
           (at_end() ? " before end of input" : ""));
    }
    ++pos_;
  }

  bool keyword_ahead(std::string_view word, bool case_insensitive) const {
    if (text_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      char c = text_[pos_ + i];
      if (case_insensitive && c >= 'a' && c <= 'z') c = char(c - 'a' + 'A');
      if (c != word[i]) return false;
    }
    const std::size_t after = pos_ + word.size();
    return after >= text_.size() ||
           (!is_name_char(static_cast<unsigned char>(text_[after])) &&
            text_[after] != ':');
  }

  void statement() {
    if (peek() == '@') {
      if (keyword_ahead("@prefix", false)) {
        pos_ += 7;
        prefix_declaration(true);
      } else if (keyword_ahead("@base", false)) {
        const std::size_t start = pos_;
        pos_ += 5;
        skip_ws();
        iri_ref();
        expect('.');
        warn(start, "UnsupportedBase", "@base is ignored");
      } else {
        fail("unknown directive");
      }
      return;
    }
    if (keyword_ahead("PREFIX", true)) {
      pos_ += 6;
      prefix_declaration(false);
      return;
    }
    if (keyword_ahead("BASE", true)) {
      const std::size_t start = pos_;
      pos_ += 4;
      skip_ws();
      iri_ref();
      warn(start, "UnsupportedBase", "BASE is ignored");
      return;
    }
    triples_statement();
  }

  void prefix_declaration(bool dotted) {
    skip_ws();
    const std::size_t start = pos_;
    std::string prefix;
    while (!at_end() && peek() != ':') {
      const auto c = static_cast<unsigned char>(peek());
      if (!is_name_char(c) && c != '.') fail("malformed prefix name");
      prefix += peek();
      ++pos_;
    }
    if (at_end()) fail_at(start, "expected ':' in prefix declaration");
    ++pos_;
    skip_ws();
    prefixes_[prefix] = iri_ref();
    if (dotted) expect('.');
  }

  std::string iri_ref() {
    if (peek() != '<') fail("expected '<'");
    ++pos_;
    std::string iri;
    while (true) {
      if (at_end()) fail("unterminated IRI");
      const char c = peek();
      if (c == '>') break;
      if (c == ' ' || c == '\n' || c == '\t' || c == '\r' || c == '<' ||
          c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
          c == '`' || c == '\\') {
        fail("character not allowed in IRI");
      }
      iri += c;
      ++pos_;
    }
    ++pos_;
    return iri;
  }

  std::string prefixed_name() {
    const std::size_t start = pos_;
    std::string prefix;
    while (!at_end() && peek() != ':') {
      const auto c = static_cast<unsigned char>(peek());
      if (!(is_name_char(c) || (c == '.' && !prefix.empty()))) {
        fail_at(pos_, "unexpected character");
      }
      prefix += peek();
      ++pos_;
    }
    if (at_end()) fail_at(start, "unexpected end of input");
    ++pos_;
    std::string local;
    while (!at_end()) {
      const auto c = static_cast<unsigned char>(peek());
      if (is_name_char(c) || (c >= '0' && c <= '9') || c == ':') {
        local += peek();
        ++pos_;
      } else if (c == '.' && !local.empty() && pos_ + 1 < text_.size() &&
                 (is_name_char(static_cast<unsigned char>(text_[pos_ + 1])) ||
                  text_[pos_ + 1] == ':')) {
        local += peek();
        ++pos_;
      } else {
        break;
      }
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) {
      fail_at(start, "undeclared prefix '" + prefix + ":'");
    }
    return it->second + local;
  }

  std::string iri() {
    return peek() == '<' ? iri_ref() : prefixed_name();
  }

  void triples_statement() {
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '[' || c == '(' || (c == '_' && peek(1) == ':')) {
      // Blank subjects are read to stay in sync, then dropped.
      Term subject = object_term();
      skip_ws();
      if (peek() != '.') {
        std::vector<Statement> unused;
        predicate_object_list(unused);
      }
      expect('.');
      warn(start, "UnsupportedSubject",
           "dropping statement about " + subject.value);
      return;
    }
    std::string subject = iri();
    std::vector<Statement> statements;
    predicate_object_list(statements);
    expect('.');
    for (Statement& s : statements) {
      triples_.push_back(Triple{subject, start, std::move(s)});
    }
  }

  void predicate_object_list(std::vector<Statement>& out) {
    while (true) {
      skip_ws();
      Term predicate;
      predicate.offset = pos_;
      predicate.kind = Term::Kind::kIri;
      if (peek() == 'a' && keyword_ahead("a", false)) {
        ++pos_;
        predicate.value = std::string(kRdfTypeIri);
      } else {
        predicate.value = iri();
      }
      while (true) {
        skip_ws();
        out.push_back(Statement{predicate, object_term()});
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
      }
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        ++pos_;
        skip_ws();
      }
      if (peek() == '.' || peek() == ']') return;
    }
  }

  Term object_term() {
    Term term;
    term.offset = pos_;
    const char c = peek();
    if (c == '"' || c == '\'') {
      term.kind = Term::Kind::kLiteral;
      term.value = string_literal();
      if (peek() == '@') {
        const std::size_t tag_start = pos_;
        ++pos_;
        while (!at_end() && (is_name_char(static_cast<unsigned char>(peek())))) {
          ++pos_;
        }
        warn(tag_start, "LanguageTagDropped",
             "language tag '" +
                 std::string(text_.substr(tag_start, pos_ - tag_start)) +
                 "' ignored");
      } else if (peek() == '^' && peek(1) == '^') {
        pos_ += 2;
        const std::string datatype = iri();
        if (datatype != "http://www.w3.org/2001/XMLSchema#string") {
          term.kind = Term::Kind::kUnsupported;
          term.value = "a literal typed " + datatype;
        }
      }
      return term;
    }
    if (c == '<') {
      term.kind = Term::Kind::kIri;
      term.value = iri_ref();
      return term;
    }
    if (c == '_' && peek(1) == ':') {
      pos_ += 2;
      std::string label;
      while (!at_end() && is_name_char(static_cast<unsigned char>(peek()))) {
        label += peek();
        ++pos_;
      }
      term.value = "blank node _:" + label;
      return term;
    }
    if (c == '[') {
      ++pos_;
      skip_ws();
      std::vector<Statement> statements;
      if (peek() != ']') predicate_object_list(statements);
      expect(']');
      term.kind = Term::Kind::kBlank;
      term.blank = blank_nodes_.size();
      term.value = "a blank node";
      blank_nodes_.push_back(std::move(statements));
      return term;
    }
    if (c == '(') {
      ++pos_;
      while (true) {
        skip_ws();
        if (at_end()) fail("unterminated collection");
        if (peek() == ')') break;
        object_term();
      }
      ++pos_;
      term.value = "a collection";
      return term;
    }
    if (c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9')) {
      number();
      term.value = "numeric literal " +
                   std::string(text_.substr(term.offset, pos_ - term.offset));
      return term;
    }
    if (keyword_ahead("true", false) || keyword_ahead("false", false)) {
      term.kind = Term::Kind::kBoolean;
      term.boolean = peek() == 't';
      pos_ += term.boolean ? 4 : 5;
      term.value = term.boolean ? "true" : "false";
      return term;
    }
    if (at_end()) fail("expected an object before end of input");
    term.kind = Term::Kind::kIri;
    term.value = prefixed_name();
    return term;
  }

  void number() {
    const std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    std::size_t digits = 0;
    while (peek() >= '0' && peek() <= '9') ++pos_, ++digits;
    if (peek() == '.' && peek(1) >= '0' && peek(1) <= '9') {
      ++pos_;
      while (peek() >= '0' && peek() <= '9') ++pos_, ++digits;
    }
    if (digits == 0) fail_at(start, "malformed number");
    if (peek() == 'e' || peek() == 'E') {
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (!(peek() >= '0' && peek() <= '9')) fail("malformed exponent");
      while (peek() >= '0' && peek() <= '9') ++pos_;
    }
  }

  std::string string_literal() {
    const char quote = peek();
    const bool long_form = peek(1) == quote && peek(2) == quote;
    const std::size_t start = pos_;
    pos_ += long_form ? 3 : 1;
    std::string out;
    while (true) {
      if (at_end()) fail_at(start, "unterminated string literal");
      const char c = peek();
      if (long_form) {
        if (c == quote && peek(1) == quote && peek(2) == quote) {
          pos_ += 3;
          break;
        }
      } else {
        if (c == quote) {
          ++pos_;
          break;
        }
        if (c == '\n' || c == '\r') fail("line break in short string literal");
      }
      if (c == '\\') {
        escape(out);
        continue;
      }
      out += c;
      ++pos_;
    }
    return out;
  }

  void escape(std::string& out) {
    const std::size_t start = pos_;
    ++pos_;
    const char c = peek();
    ++pos_;
    switch (c) {
      case 't': out += '\t'; return;
      case 'b': out += '\b'; return;
      case 'n': out += '\n'; return;
      case 'r': out += '\r'; return;
      case 'f': out += '\f'; return;
      case '"': out += '"'; return;
      case '\'': out += '\''; return;
      case '\\': out += '\\'; return;
      case 'u':
      case 'U': {
        const std::size_t width = c == 'u' ? 4 : 8;
        if (text_.size() - pos_ < width) fail_at(start, "truncated escape");
        uint32_t cp = 0;
        for (std::size_t i = 0; i < width; ++i) {
          const char h = text_[pos_ + i];
          uint32_t v;
          if (h >= '0' && h <= '9') {
            v = uint32_t(h - '0');
          } else if (h >= 'a' && h <= 'f') {
            v = uint32_t(h - 'a' + 10);
          } else if (h >= 'A' && h <= 'F') {
            v = uint32_t(h - 'A' + 10);
          } else {
            fail_at(pos_ + i, "bad hex digit in escape");
          }
          cp = cp * 16 + v;
        }
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
          fail_at(start, "escape is not a Unicode scalar value");
        }
        pos_ += width;
        char buf[4];
        int32_t len = 0;
        U8_APPEND_UNSAFE(reinterpret_cast<uint8_t*>(buf), len,
                         static_cast<UChar32>(cp));
        out.append(buf, static_cast<std::size_t>(len));
        return;
      }
      default:
        fail_at(start, "unknown escape sequence");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, std::string> prefixes_;
  std::vector<Triple> triples_;
  std::vector<std::vector<Statement>> blank_nodes_;
  std::vector<ParseWarning> warnings_;
};

std::string skos(std::string_view local) {
  return std::string(kSkosNamespace) + std::string(local);
}
std::string mat(std::string_view local) {
  return std::string(kMatNamespace) + std::string(local);
}

// Final path segment of an IRI.
std::string local_name(const std::string& iri) {
  const std::size_t cut = iri.find_last_of("/#:");
  return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

std::optional<std::string> mat_local(const std::string& iri) {
  if (iri.size() > kMatNamespace.size() && iri.starts_with(kMatNamespace)) {
    return iri.substr(kMatNamespace.size());
  }
  return std::nullopt;
}

class Interpreter {
 public:
  Interpreter(std::string_view text, TurtleReader& reader,
              std::vector<Triple> triples)
      : text_(text),
        blank_nodes_(reader.blank_nodes()),
        warnings_(reader.warnings()),
        triples_(std::move(triples)) {}

  ParseOutcome run() {
    group_subjects();
    read_header();
    RelationSchema schema = build_schema();
    read_concepts(schema);
    try {
      Ontology ontology =
          build_ontology(name_, version_, std::move(concepts_),
                         std::move(edges_), std::move(schema));
      return ParseOutcome{std::move(ontology), std::move(warnings_)};
    } catch (const Error& e) {
      if (e.location()) throw;
      throw e.at(location_of(text_, offset_for(e)));
    }
  }

 private:
  struct Subject {
    std::string iri;
    std::size_t offset;
    std::vector<std::size_t> triples;
  };

  [[noreturn]] void fail(ErrorCode code, std::size_t offset,
                         const std::string& message,
                         const std::string& subject = {}) const {
    throw Error(code, message, subject, location_of(text_, offset));
  }

  void warn(std::size_t offset, std::string code, std::string message) {
    warnings_.push_back(
        {location_of(text_, offset), std::move(code), std::move(message)});
  }

  void group_subjects() {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < triples_.size(); ++i) {
      const Triple& t = triples_[i];
      auto [it, added] = index.emplace(t.subject, subjects_.size());
      if (added) subjects_.push_back(Subject{t.subject, t.subject_offset, {}});
      subjects_[it->second].triples.push_back(i);
    }
  }

  bool is_header_predicate(const Statement& s) const {
    const std::string& p = s.predicate.value;
    if (p == mat("name") || p == mat("version") || p == mat("relation")) {
      return true;
    }
    return p == kRdfTypeIri && s.object.kind == Term::Kind::kIri &&
           s.object.value == mat("Ontology");
  }

  std::string literal(const Term& t, const std::string& what) const {
    if (t.kind != Term::Kind::kLiteral) {
      fail(ErrorCode::kSchemaError, t.offset,
           what + " must be a string literal, not " + describe(t));
    }
    return t.value;
  }

  std::string iri_object(const Term& t, const std::string& what) const {
    if (t.kind != Term::Kind::kIri) {
      fail(ErrorCode::kSchemaError, t.offset,
           what + " must be an IRI, not " + describe(t));
    }
    return t.value;
  }

  static std::string describe(const Term& t) {
    switch (t.kind) {
      case Term::Kind::kIri: return "<" + t.value + ">";
      case Term::Kind::kLiteral: return "\"" + t.value + "\"";
      case Term::Kind::kBoolean: return t.value;
      default: return t.value;
    }
  }

  FacetTag facet_object(const Term& t, const std::string& what) const {
    const std::string iri = iri_object(t, what);
    auto local = mat_local(iri);
    auto facet = local ? parse_facet(*local) : std::nullopt;
    if (!facet) {
      fail(ErrorCode::kUnknownFacetValue, t.offset,
           "<" + iri + "> is not one of mat:Processing, mat:Structure, "
           "mat:Property, mat:Performance",
           local ? *local : iri);
    }
    return *facet;
  }

  // Drops unsupported objects with a warning; returns false when dropped.
  bool supported(const Statement& s) {
    if (s.object.kind == Term::Kind::kUnsupported ||
        (s.object.kind == Term::Kind::kBlank &&
         s.predicate.value != mat("relation")) ||
        (s.object.kind == Term::Kind::kBoolean &&
         s.predicate.value != mat("acyclic"))) {
      warn(s.object.offset, "UnsupportedTerm",
           "dropping " + s.object.value + " (object of <" +
               s.predicate.value + ">)");
      return false;
    }
    return true;
  }

  void read_header() {
    for (Subject& subject : subjects_) {
      bool header = false;
      for (std::size_t t : subject.triples) {
        header = header || is_header_predicate(triples_[t].statement);
      }
      if (!header) continue;
      if (header_) {
        fail(ErrorCode::kSchemaError, subject.offset,
             "second ontology header <" + subject.iri + ">");
      }
      header_ = subject.iri;
      header_offset_ = subject.offset;
      std::optional<std::string> name, version;
      for (std::size_t t : subject.triples) {
        const Statement& s = triples_[t].statement;
        if (!supported(s)) continue;
        const std::string& p = s.predicate.value;
        if (p == mat("name") || p == mat("version")) {
          auto& slot = p == mat("name") ? name : version;
          if (slot) {
            fail(ErrorCode::kSchemaError, s.predicate.offset,
                 "ontology header repeats <" + p + ">");
          }
          slot = literal(s.object, "<" + p + ">");
        } else if (p == mat("relation")) {
          if (s.object.kind != Term::Kind::kBlank) {
            fail(ErrorCode::kSchemaError, s.object.offset,
                 "mat:relation must be a [ ... ] declaration");
          }
          read_relation(s.object);
        } else if (p == kRdfTypeIri) {
          // mat:Ontology, or a type we do not interpret.
          if (s.object.kind != Term::Kind::kIri ||
              s.object.value != mat("Ontology")) {
            warn(s.object.offset, "UnknownType",
                 "ignoring rdf:type " + describe(s.object));
          }
        } else {
          warn(s.predicate.offset, "UnknownPredicate",
               "ignoring <" + p + "> on the ontology header");
        }
      }
      name_ = name.value_or("");
      version_ = version.value_or("");
      if (!name) {
        warn(subject.offset, "MissingName", "ontology header has no mat:name");
      }
    }
    if (!header_) {
      warn(0, "MissingHeader",
           "no ontology header; name, version and relations are empty");
    }
  }

  void read_relation(const Term& node) {
    std::optional<std::string> name;
    std::optional<FacetTag> domain, range;
    std::optional<bool> acyclic;
    std::size_t name_offset = node.offset;
    for (const Statement& s : blank_nodes_[node.blank]) {
      if (!supported(s)) continue;
      const std::string& p = s.predicate.value;
      if (p == mat("name")) {
        name = literal(s.object, "relation mat:name");
        name_offset = s.object.offset;
      } else if (p == mat("domainFacet")) {
        domain = facet_object(s.object, "mat:domainFacet");
      } else if (p == mat("rangeFacet")) {
        range = facet_object(s.object, "mat:rangeFacet");
      } else if (p == mat("acyclic")) {
        if (s.object.kind != Term::Kind::kBoolean) {
          fail(ErrorCode::kSchemaError, s.object.offset,
               "mat:acyclic must be true or false");
        }
        acyclic = s.object.boolean;
      } else {
        warn(s.predicate.offset, "UnknownPredicate",
             "ignoring <" + p + "> in a relation declaration");
      }
    }
    if (!name || !domain || !range || !acyclic) {
      fail(ErrorCode::kSchemaError, node.offset,
           "relation declarations need mat:name, mat:domainFacet, "
           "mat:rangeFacet and mat:acyclic");
    }
    std::string canonical(canonical_relation_name(*name));
    if (canonical != *name) {
      warn(name_offset, "RelationAlias",
           "relation '" + *name + "' read as '" + canonical + "'");
    }
    relations_.push_back(RelationType{canonical, *domain, *range, *acyclic});
    relation_offsets_.push_back(name_offset);
  }

  RelationSchema build_schema() {
    try {
      return RelationSchema(relations_);
    } catch (const Error& e) {
      throw e.at(location_of(
          text_, e.item() ? relation_offsets_[e.item()->index] : 0));
    }
  }

  void read_concepts(const RelationSchema& schema) {
    for (const Subject& subject : subjects_) {
      if (header_ && subject.iri == *header_) continue;
      std::optional<std::string> pref, definition;
      std::optional<FacetTag> facet;
      std::optional<std::pair<std::string, std::size_t>> parent;
      std::vector<std::pair<std::string, std::size_t>> alts;
      std::vector<std::pair<RelationEdge, std::size_t>> edges;
      bool is_concept = false;
      const std::string id_text = local_name(subject.iri);

      for (std::size_t t : subject.triples) {
        const Statement& s = triples_[t].statement;
        if (!supported(s)) continue;
        const std::string& p = s.predicate.value;
        const std::size_t at = s.predicate.offset;
        if (p == kRdfTypeIri) {
          if (s.object.kind == Term::Kind::kIri &&
              s.object.value == skos("Concept")) {
            is_concept = true;
          } else {
            warn(s.object.offset, "UnknownType",
                 "ignoring rdf:type " + describe(s.object));
          }
        } else if (p == skos("prefLabel")) {
          if (pref) {
            fail(ErrorCode::kSchemaError, at,
                 id_text + " has more than one skos:prefLabel", id_text);
          }
          pref = literal(s.object, "skos:prefLabel");
          is_concept = true;
        } else if (p == skos("altLabel")) {
          alts.emplace_back(literal(s.object, "skos:altLabel"), s.object.offset);
          is_concept = true;
        } else if (p == skos("definition")) {
          if (definition) {
            fail(ErrorCode::kSchemaError, at,
                 id_text + " has more than one skos:definition", id_text);
          }
          definition = literal(s.object, "skos:definition");
          is_concept = true;
        } else if (p == skos("broader")) {
          if (parent) {
            fail(ErrorCode::kSchemaError, at,
                 id_text + " has more than one skos:broader", id_text);
          }
          parent.emplace(local_name(iri_object(s.object, "skos:broader")),
                         s.object.offset);
          is_concept = true;
        } else if (p == mat("facet")) {
          const FacetTag f = facet_object(s.object, "mat:facet");
          if (facet && *facet != f) {
            fail(ErrorCode::kSchemaError, at,
                 id_text + " is placed in more than one facet", id_text);
          }
          facet = f;
          is_concept = true;
        } else if (auto local = mat_local(p);
                   local && schema.find(canonical_relation_name(*local))) {
          const std::string relation(canonical_relation_name(*local));
          if (relation != *local) {
            warn(at, "RelationAlias",
                 "relation '" + *local + "' read as '" + relation + "'");
          }
          const std::string object =
              local_name(iri_object(s.object, "<" + p + ">"));
          edges.push_back({RelationEdge{make_id(id_text, subject.offset),
                                        relation,
                                        make_id(object, s.object.offset)},
                           at});
          is_concept = true;
        } else {
          warn(at, "UnknownPredicate", "ignoring <" + p + ">");
        }
      }
      if (!is_concept) continue;

      Concept c;
      c.id = make_id(id_text, subject.offset);
      if (!facet) {
        fail(ErrorCode::kMissingFacet, subject.offset,
             "concept " + id_text + " has no mat:facet", id_text);
      }
      if (!pref) {
        fail(ErrorCode::kSchemaError, subject.offset,
             "concept " + id_text + " has no skos:prefLabel", id_text);
      }
      c.facet = *facet;
      c.pref_label = *pref;
      c.definition = definition;
      if (parent) c.parent = make_id(parent->first, parent->second);
      std::set<std::string> seen{label_key(c.pref_label)};
      for (auto& [label, offset] : alts) {
        if (!seen.insert(label_key(label)).second) {
          warn(offset, "DuplicateAltLabel",
               "dropping altLabel '" + label + "' of " + id_text +
                   ", which repeats another label after normalization");
          continue;
        }
        c.alt_labels.push_back(std::move(label));
      }
      concepts_.push_back(std::move(c));
      concept_offsets_.push_back(subject.offset);
      parent_offsets_.push_back(parent ? parent->second : subject.offset);
      for (auto& [edge, offset] : edges) {
        edges_.push_back(std::move(edge));
        edge_offsets_.push_back(offset);
      }
    }
  }

  ConceptId make_id(const std::string& text, std::size_t offset) const {
    try {
      return ConceptId(text);
    } catch (const Error& e) {
      throw e.at(location_of(text_, offset));
    }
  }

  std::size_t offset_for(const Error& e) const {
    if (!e.item()) return header_offset_;
    const std::size_t i = e.item()->index;
    switch (e.item()->kind) {
      case ItemRef::Kind::kConcept:
        switch (e.code()) {
          case ErrorCode::kDanglingReference:
          case ErrorCode::kCrossFacetParent:
          case ErrorCode::kParentCycle:
            return parent_offsets_[i];
          default:
            return concept_offsets_[i];
        }
      case ItemRef::Kind::kEdge:
        return edge_offsets_[i];
      case ItemRef::Kind::kRelation:
        return relation_offsets_[i];
    }
    return 0;
  }

  std::string_view text_;
  const std::vector<std::vector<Statement>>& blank_nodes_;
  std::vector<ParseWarning>& warnings_;
  std::vector<Triple> triples_;
  std::vector<Subject> subjects_;

  std::optional<std::string> header_;
  std::size_t header_offset_ = 0;
  std::string name_;
  std::string version_;
  std::vector<RelationType> relations_;
  std::vector<std::size_t> relation_offsets_;
  std::vector<Concept> concepts_;
  std::vector<std::size_t> concept_offsets_;
  std::vector<std::size_t> parent_offsets_;
  std::vector<RelationEdge> edges_;
  std::vector<std::size_t> edge_offsets_;
};

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20 || c == 0x7F) {
          static constexpr char kHex[] = "0123456789ABCDEF";
          out += "\\u00";
          out += kHex[c >> 4];
          out += kHex[c & 0xF];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
  return out;
}

std::string slug(std::string_view name) {
  std::string out;
  for (char c : name) {
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      out += c;
    } else if (c >= 'A' && c <= 'Z') {
      out += static_cast<char>(c - 'A' + 'a');
    } else if (!out.empty() && out.back() != '-') {
      out += '-';
    }
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out.empty() ? "ontology" : out;
}

}  // namespace

ParseOutcome parse_skos_turtle(std::string_view text) {
  TurtleReader reader(text);
  std::vector<Triple> triples = reader.read();
  return Interpreter(text, reader, std::move(triples)).run();
}

std::string serialize_skos_turtle(const Ontology& ontology) {
  std::string out;
  out += "@prefix skos: <" + std::string(kSkosNamespace) + "> .\n";
  out += "@prefix mat: <" + std::string(kMatNamespace) + "> .\n";
  out += "@prefix ex: <https://facetforge.dev/ontologies/" +
         slug(ontology.name()) + "/> .\n\n";

  out += "ex: a mat:Ontology ;\n";
  out += "    mat:name " + quote(ontology.name()) + " ;\n";
  out += "    mat:version " + quote(ontology.version());
  const auto& relations = ontology.schema().relations();
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const RelationType& r = relations[i];
    out += i == 0 ? " ;\n    mat:relation [\n" : " , [\n";
    out += "        mat:name " + quote(r.name) + " ;\n";
    out += "        mat:domainFacet mat:" + std::string(facet_name(r.domain)) +
           " ;\n";
    out += "        mat:rangeFacet mat:" + std::string(facet_name(r.range)) +
           " ;\n";
    out += std::string("        mat:acyclic ") +
           (r.acyclic_required ? "true" : "false") + "\n    ]";
  }
  out += " .\n";

  auto edge = ontology.edges().begin();
  for (const auto& [id, c] : ontology.concepts()) {
    out += "\nex:" + id.str() + " a skos:Concept ;\n";
    out += "    mat:facet mat:" + std::string(facet_name(c.facet)) + " ;\n";
    out += "    skos:prefLabel " + quote(c.pref_label);
    for (const std::string& alt : c.alt_labels) {
      out += " ;\n    skos:altLabel " + quote(alt);
    }
    if (c.parent) out += " ;\n    skos:broader ex:" + c.parent->str();
    if (c.definition) out += " ;\n    skos:definition " + quote(*c.definition);
    while (edge != ontology.edges().end() && edge->subject < id) ++edge;
    for (; edge != ontology.edges().end() && edge->subject == id; ++edge) {
      out += " ;\n    mat:" + edge->relation + " ex:" + edge->object.str();
    }
    out += " .\n";
  }
  return out;
}

}  // namespace facetforge
