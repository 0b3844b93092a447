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

#ifndef FACETFORGE_ERROR_H_
#define FACETFORGE_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace facetforge {

enum class ErrorCode {
  // Ontology construction.
  kDuplicateId,
  kDanglingReference,
  kCrossFacetParent,
  kParentCycle,
  kUnknownRelation,
  kSelfEdge,
  kInvalidIdentifier,
  kInvalidConcept,
  kInvalidSchema,
  // Queries.
  kUnknownConcept,
  // Parsing.
  kSyntaxError,
  kSchemaError,
  kMissingFacet,
  kUnknownFacetValue,
  // Indexing.
  kEmptyLabelAfterNormalization,
  // Filesystem and environment.
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// 1-based position in a source document. Columns count Unicode code points.
struct SourceLocation {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourceLocation&,
                         const SourceLocation&) = default;
};

// Which build input an error refers to, so parsers can map it back to the
// place in the document the item came from.
struct ItemRef {
  enum class Kind { kConcept, kEdge, kRelation };
  Kind kind;
  std::size_t index;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string subject = {},
        std::optional<SourceLocation> location = std::nullopt,
        std::optional<ItemRef> item = std::nullopt);

  ErrorCode code() const { return code_; }
  // The identifier the error is about (for example the dangling id), if any.
  const std::string& subject() const { return subject_; }
  const std::optional<SourceLocation>& location() const { return location_; }
  const std::optional<ItemRef>& item() const { return item_; }

  // Returns a copy of this error pinned to a source location.
  Error at(SourceLocation location) const;

 private:
  static std::string format(ErrorCode code, const std::string& message,
                            const std::optional<SourceLocation>& location);

  ErrorCode code_;
  std::string message_;
  std::string subject_;
  std::optional<SourceLocation> location_;
  std::optional<ItemRef> item_;
};

}  // namespace facetforge

#endif  // FACETFORGE_ERROR_H_
