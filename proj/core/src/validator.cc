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

#include "facetforge/validator.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "facetforge/normalize.h"
#include "json.hpp"

namespace facetforge {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::string join_ids(const std::vector<std::string>& ids,
                     std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += separator;
    out += ids[i];
  }
  return out;
}

std::string facet_str(FacetTag f) { return std::string(facet_name(f)); }

class Checker {
 public:
  explicit Checker(const OntologyParts& parts) : parts_(parts) {
    for (std::size_t i = 0; i < parts_.concepts.size(); ++i) {
      index_of_.emplace(parts_.concepts[i].id.str(), i);
    }
  }

  std::vector<Violation> run() {
    check_facet_exclusivity();
    check_hierarchy();
    check_edges();
    check_order_cycles();
    check_label_collisions();
    check_reachability();
    std::sort(out_.begin(), out_.end(),
              [](const Violation& a, const Violation& b) {
                return std::tie(a.code, a.subjects, a.message) <
                       std::tie(b.code, b.subjects, b.message);
              });
    return std::move(out_);
  }

 private:
  void add(ViolationCode code, std::vector<std::string> subjects,
           std::string message,
           std::optional<std::string> relation = std::nullopt) {
    out_.push_back(Violation{code, severity_of(code), std::move(subjects),
                             std::move(message), std::move(relation)});
  }

  std::size_t lookup(const ConceptId& id) const {
    auto it = index_of_.find(id.str());
    return it == index_of_.end() ? kNone : it->second;
  }

  std::size_t parent_index(std::size_t i) const {
    const Concept& c = parts_.concepts[i];
    return c.parent ? lookup(*c.parent) : kNone;
  }

  // V1: the same preferred label filed under more than one facet.
  void check_facet_exclusivity() {
    std::map<std::string, std::vector<std::size_t>> by_key;
    for (std::size_t i = 0; i < parts_.concepts.size(); ++i) {
      by_key[label_key(parts_.concepts[i].pref_label)].push_back(i);
    }
    for (const auto& [key, members] : by_key) {
      std::set<FacetTag> facets;
      std::set<std::string> ids;
      for (std::size_t i : members) {
        facets.insert(parts_.concepts[i].facet);
        ids.insert(parts_.concepts[i].id.str());
      }
      if (facets.size() < 2) continue;
      std::vector<std::string> facet_names;
      for (FacetTag f : facets) facet_names.push_back(facet_str(f));
      std::vector<std::string> subjects(ids.begin(), ids.end());
      add(ViolationCode::kFacetExclusivity, subjects,
          "preferred label '" + key + "' is filed under " +
              join_ids(facet_names, " and ") + " (" +
              join_ids(subjects, ", ") + ")");
      v1_sets_[key] = ids;
    }
  }

  // V2 and the parent half of V6.
  void check_hierarchy() {
    const std::size_t n = parts_.concepts.size();
    constexpr long kUnknown = -1, kInProgress = -2, kBroken = -3;
    std::vector<long> depth(n, kUnknown);
    for (std::size_t i = 0; i < n; ++i) {
      const Concept& c = parts_.concepts[i];
      if (!c.parent) continue;
      const std::size_t p = lookup(*c.parent);
      if (p == kNone) {
        add(ViolationCode::kDanglingReference, {c.id.str(), c.parent->str()},
            "parent '" + c.parent->str() + "' of '" + c.id.str() +
                "' does not exist");
      } else if (parts_.concepts[p].facet != c.facet) {
        add(ViolationCode::kHierarchyError, {c.id.str(), c.parent->str()},
            "'" + c.id.str() + "' (" + facet_str(c.facet) +
                ") has parent '" + c.parent->str() + "' in facet " +
                facet_str(parts_.concepts[p].facet));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (depth[i] != kUnknown) continue;
      std::vector<std::size_t> path;
      std::size_t cur = i;
      while (cur != kNone && depth[cur] == kUnknown) {
        depth[cur] = kInProgress;
        path.push_back(cur);
        cur = parent_index(cur);
      }
      long base;
      if (cur == kNone) {
        base = -1;
      } else if (depth[cur] == kInProgress) {
        auto first = std::find(path.begin(), path.end(), cur);
        std::vector<std::string> cycle;
        for (auto it = first; it != path.end(); ++it) {
          cycle.push_back(parts_.concepts[*it].id.str());
        }
        std::sort(cycle.begin(), cycle.end());
        add(ViolationCode::kHierarchyError, cycle,
            "parent links form a cycle through " + join_ids(cycle, ", "));
        base = kBroken;
      } else {
        base = depth[cur];
      }
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        if (base == kBroken) {
          depth[*it] = kBroken;
          continue;
        }
        depth[*it] = base + 1;
        base = depth[*it];
        if (static_cast<std::size_t>(depth[*it]) == kMaxHierarchyDepth + 1) {
          const Concept& c = parts_.concepts[*it];
          add(ViolationCode::kHierarchyError, {c.id.str()},
              "'" + c.id.str() + "' sits " + std::to_string(depth[*it]) +
                  " levels below its facet root; the limit is " +
                  std::to_string(kMaxHierarchyDepth));
        }
      }
    }
  }

  // V3 and the edge half of V6.
  void check_edges() {
    for (const RelationEdge& e : parts_.edges) {
      const std::size_t s = lookup(e.subject);
      const std::size_t o = lookup(e.object);
      bool dangling = false;
      for (auto [idx, id] : {std::pair{s, &e.subject}, std::pair{o, &e.object}}) {
        if (idx == kNone) {
          dangling = true;
          add(ViolationCode::kDanglingReference, {id->str()},
              "edge " + e.subject.str() + " " + e.relation + " " +
                  e.object.str() + " references missing concept '" +
                  id->str() + "'");
        }
      }
      if (dangling) continue;
      const RelationType* rel = parts_.schema.find(e.relation);
      if (rel == nullptr) {
        add(ViolationCode::kDomainRangeMismatch, {e.subject.str(), e.object.str()},
            "relation '" + e.relation + "' is not declared in the schema",
            e.relation);
        continue;
      }
      const FacetTag sf = parts_.concepts[s].facet;
      const FacetTag of = parts_.concepts[o].facet;
      if (sf == rel->domain && of == rel->range) continue;
      std::string message = e.subject.str() + " " + e.relation + " " +
                            e.object.str() + ":";
      if (sf != rel->domain) {
        message += " domain must be " + facet_str(rel->domain) +
                   " but subject is " + facet_str(sf) + ";";
      }
      if (of != rel->range) {
        message += " range must be " + facet_str(rel->range) +
                   " but object is " + facet_str(of) + ";";
      }
      message.pop_back();
      add(ViolationCode::kDomainRangeMismatch, {e.subject.str(), e.object.str()},
          message, e.relation);
    }
  }

  // V4: Tarjan SCCs over each acyclic-required relation.
  void check_order_cycles() {
    for (const RelationType& rel : parts_.schema.relations()) {
      if (!rel.acyclic_required) continue;
      std::map<std::size_t, std::vector<std::size_t>> adj;
      for (const RelationEdge& e : parts_.edges) {
        if (e.relation != rel.name) continue;
        const std::size_t s = lookup(e.subject), o = lookup(e.object);
        if (s == kNone || o == kNone) continue;
        adj[s].push_back(o);
      }
      for (auto& [node, next] : adj) {
        std::sort(next.begin(), next.end(), [&](std::size_t a, std::size_t b) {
          return parts_.concepts[a].id < parts_.concepts[b].id;
        });
      }
      for (const auto& component : strongly_connected(adj)) {
        const bool self_loop =
            component.size() == 1 &&
            std::count(adj[component[0]].begin(), adj[component[0]].end(),
                       component[0]) > 0;
        if (component.size() < 2 && !self_loop) continue;
        std::vector<std::string> cycle = find_cycle(adj, component);
        std::vector<std::string> closed = cycle;
        closed.push_back(cycle.front());
        add(ViolationCode::kOrderCycle, cycle,
            rel.name + " forms a cycle: " + join_ids(closed, " -> ") +
                (component.size() > cycle.size()
                     ? " (" + std::to_string(component.size()) +
                           " concepts are mutually reachable)"
                     : ""),
            rel.name);
      }
    }
  }

  std::vector<std::vector<std::size_t>> strongly_connected(
      std::map<std::size_t, std::vector<std::size_t>>& adj) const {
    std::map<std::size_t, std::size_t> index, low;
    std::set<std::size_t> on_stack;
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    std::size_t counter = 0;
    // Iterative Tarjan: frames of (node, next child position).
    for (const auto& [root, unused] : adj) {
      if (index.contains(root)) continue;
      std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack.insert(root);
      while (!frames.empty()) {
        auto& [node, pos] = frames.back();
        const std::vector<std::size_t>& next = adj[node];
        if (pos < next.size()) {
          const std::size_t child = next[pos++];
          if (!index.contains(child)) {
            index[child] = low[child] = counter++;
            stack.push_back(child);
            on_stack.insert(child);
            frames.emplace_back(child, 0);
          } else if (on_stack.contains(child)) {
            low[node] = std::min(low[node], index[child]);
          }
          continue;
        }
        const std::size_t done = node;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().first] = std::min(low[frames.back().first], low[done]);
        }
        if (low[done] == index[done]) {
          std::vector<std::size_t> component;
          std::size_t member;
          do {
            member = stack.back();
            stack.pop_back();
            on_stack.erase(member);
            component.push_back(member);
          } while (member != done);
          components.push_back(std::move(component));
        }
      }
    }
    return components;
  }

  // Shortest cycle through the smallest-id member of `component`.
  std::vector<std::string> find_cycle(
      std::map<std::size_t, std::vector<std::size_t>>& adj,
      const std::vector<std::size_t>& component) const {
    std::set<std::size_t> members(component.begin(), component.end());
    const std::size_t start = *std::min_element(
        component.begin(), component.end(), [&](std::size_t a, std::size_t b) {
          return parts_.concepts[a].id < parts_.concepts[b].id;
        });
    std::map<std::size_t, std::size_t> came_from;
    std::deque<std::size_t> queue{start};
    std::size_t last = kNone;
    while (!queue.empty() && last == kNone) {
      const std::size_t node = queue.front();
      queue.pop_front();
      for (std::size_t child : adj[node]) {
        if (!members.contains(child)) continue;
        if (child == start) {
          last = node;
          break;
        }
        if (!came_from.contains(child)) {
          came_from[child] = node;
          queue.push_back(child);
        }
      }
    }
    std::vector<std::string> cycle;
    for (std::size_t node = last; node != start; node = came_from.at(node)) {
      cycle.push_back(parts_.concepts[node].id.str());
    }
    cycle.push_back(parts_.concepts[start].id.str());
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
  }

  // V5: a normalized label shared by several concepts, unless the clash is
  // exactly the one already reported as V1.
  void check_label_collisions() {
    std::map<std::string, std::set<std::string>> owners;
    for (const Concept& c : parts_.concepts) {
      owners[label_key(c.pref_label)].insert(c.id.str());
      for (const std::string& alt : c.alt_labels) {
        owners[label_key(alt)].insert(c.id.str());
      }
    }
    for (const auto& [key, ids] : owners) {
      if (ids.size() < 2) continue;
      auto v1 = v1_sets_.find(key);
      if (v1 != v1_sets_.end() && v1->second == ids) continue;
      std::vector<std::string> subjects(ids.begin(), ids.end());
      add(ViolationCode::kLabelCollision, subjects,
          "label '" + key + "' is shared by " + join_ids(subjects, ", "));
    }
  }

  // V7: concepts that a walk down from the facet roots never visits.
  void check_reachability() {
    const std::size_t n = parts_.concepts.size();
    std::vector<std::vector<std::size_t>> children(n);
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i) {
      const Concept& c = parts_.concepts[i];
      if (!c.parent) {
        queue.push_back(i);
        continue;
      }
      const std::size_t p = lookup(*c.parent);
      if (p != kNone && parts_.concepts[p].facet == c.facet) {
        children[p].push_back(i);
      }
    }
    std::vector<bool> seen(n, false);
    for (std::size_t i : queue) seen[i] = true;
    while (!queue.empty()) {
      const std::size_t node = queue.back();
      queue.pop_back();
      for (std::size_t child : children[node]) {
        if (seen[child]) continue;
        seen[child] = true;
        queue.push_back(child);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      const Concept& c = parts_.concepts[i];
      add(ViolationCode::kUnreachable, {c.id.str()},
          "'" + c.id.str() + "' cannot be reached from any " +
              facet_str(c.facet) + " root");
    }
  }

  const OntologyParts& parts_;
  std::unordered_map<std::string, std::size_t> index_of_;
  std::map<std::string, std::set<std::string>> v1_sets_;
  std::vector<Violation> out_;
};

std::string relation_rationale(std::string_view relation) {
  if (relation == "isSynthesizedBy") {
    return "A structure comes out of some processing route, so an "
           "isSynthesizedBy edge starts at a Structure concept and ends at "
           "the Processing concept that makes it.";
  }
  if (relation == "isDependentOn") {
    return "An isDependentOn edge starts at a Property concept and ends at a "
           "Performance concept whose value rests on that property.";
  }
  if (relation == "isDerivedFrom") {
    return "A performance figure is computed from property values, so an "
           "isDerivedFrom edge starts at the Performance concept and ends at "
           "the Property concept it is derived from.";
  }
  if (relation == "isPrecededBy") {
    return "Processing steps happen one after another; an isPrecededBy edge "
           "joins two Processing concepts, pointing at the earlier step, and "
           "may never loop back.";
  }
  if (relation == "isAssociatedWith") {
    return "Characteristics like particle size or morphology describe a "
           "structural component, so both ends of an isAssociatedWith edge "
           "are Structure concepts.";
  }
  return {};
}

}  // namespace

RelationSchema default_pspp_schema() {
  using F = FacetTag;
  return RelationSchema({
      {"isSynthesizedBy", F::kStructure, F::kProcessing, false},
      {"isDependentOn", F::kProperty, F::kPerformance, false},
      {"isDerivedFrom", F::kPerformance, F::kProperty, false},
      {"isPrecededBy", F::kProcessing, F::kProcessing, true},
      {"isAssociatedWith", F::kStructure, F::kStructure, false},
  });
}

std::string_view violation_code_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::kFacetExclusivity: return "V1_FacetExclusivity";
    case ViolationCode::kHierarchyError: return "V2_HierarchyError";
    case ViolationCode::kDomainRangeMismatch: return "V3_DomainRangeMismatch";
    case ViolationCode::kOrderCycle: return "V4_OrderCycle";
    case ViolationCode::kLabelCollision: return "V5_LabelCollision";
    case ViolationCode::kDanglingReference: return "V6_DanglingReference";
    case ViolationCode::kUnreachable: return "V7_Unreachable";
  }
  return "";
}

Severity severity_of(ViolationCode code) {
  switch (code) {
    case ViolationCode::kLabelCollision:
    case ViolationCode::kUnreachable:
      return Severity::kWarning;
    default:
      return Severity::kError;
  }
}

std::string_view severity_name(Severity severity) {
  return severity == Severity::kError ? "Error" : "Warning";
}

std::size_t ValidationReport::count(ViolationCode code) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(),
                    [code](const Violation& v) { return v.code == code; }));
}

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(),
      [](const Violation& v) { return v.severity == Severity::kError; }));
}

OntologyParts decompose(const Ontology& ontology) {
  OntologyParts parts;
  parts.name = ontology.name();
  for (const auto& [id, c] : ontology.concepts()) parts.concepts.push_back(c);
  parts.edges = ontology.edges();
  parts.schema = ontology.schema();
  return parts;
}

ValidationReport validate(const Ontology& ontology) {
  return validate(decompose(ontology));
}

ValidationReport validate(const OntologyParts& parts) {
  ValidationReport report;
  report.ontology_name = parts.name;
  report.violations = Checker(parts).run();
  report.pass = report.error_count() == 0;
  return report;
}

std::string explain(const Violation& v) {
  std::string text = std::string(severity_name(v.severity)) + " " +
                     std::string(violation_code_name(v.code)) + ": " +
                     v.message + ". ";
  switch (v.code) {
    case ViolationCode::kFacetExclusivity:
      text +=
          "Every term belongs to exactly one of Processing, Structure, "
          "Property or Performance; the facets are mutually exclusive. "
          "The same preferred label appearing under two facets means one "
          "term was classified twice; merge the entries or give them "
          "distinct labels.";
      break;
    case ViolationCode::kHierarchyError:
      text += "is-a hierarchies live inside a single facet, must be "
              "acyclic, and may be at most " +
              std::to_string(kMaxHierarchyDepth) +
              " levels deep. Re-parent the listed concepts within their own "
              "facet.";
      break;
    case ViolationCode::kDomainRangeMismatch: {
      text += "Every relationship type constrains the facet of its subject "
              "(domain) and of its object (range); this edge connects "
              "concepts from the wrong facets.";
      const std::string why = v.relation ? relation_rationale(*v.relation) : "";
      if (!why.empty()) text += " " + why;
      break;
    }
    case ViolationCode::kOrderCycle: {
      text += "Ordering relationships describe the sequence of steps in a "
              "procedure, and a sequence cannot return to a step it has "
              "already passed. Remove one edge of the cycle.";
      const std::string why = v.relation ? relation_rationale(*v.relation) : "";
      if (!why.empty()) text += " " + why;
      break;
    }
    case ViolationCode::kLabelCollision:
      text += "A shared label makes text indexing ambiguous: every mention "
              "of it is reported for all of the listed concepts. This is "
              "allowed but usually worth reviewing.";
      break;
    case ViolationCode::kDanglingReference:
      text += "Parents and relationship endpoints must name concepts that "
              "exist in the same ontology.";
      break;
    case ViolationCode::kUnreachable:
      text += "Every concept should be reachable by browsing down from a "
              "facet root; otherwise it never shows up in the hierarchy "
              "display.";
      break;
  }
  return text;
}

std::string report_to_json(const ValidationReport& report) {
  ordered_json doc;
  doc["ontology"] = report.ontology_name;
  doc["pass"] = report.pass;
  doc["violations"] = ordered_json::array();
  for (const Violation& v : report.violations) {
    ordered_json item;
    item["code"] = violation_code_name(v.code);
    item["severity"] = severity_name(v.severity);
    item["subjects"] = v.subjects;
    item["message"] = v.message;
    doc["violations"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

}  // namespace facetforge
