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

#include "facetforge/error.h"

#include <utility>

namespace facetforge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kDanglingReference: return "DanglingReference";
    case ErrorCode::kCrossFacetParent: return "CrossFacetParent";
    case ErrorCode::kParentCycle: return "ParentCycle";
    case ErrorCode::kUnknownRelation: return "UnknownRelation";
    case ErrorCode::kSelfEdge: return "SelfEdge";
    case ErrorCode::kInvalidIdentifier: return "InvalidIdentifier";
    case ErrorCode::kInvalidConcept: return "InvalidConcept";
    case ErrorCode::kInvalidSchema: return "InvalidSchema";
    case ErrorCode::kUnknownConcept: return "UnknownConcept";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kMissingFacet: return "MissingFacet";
    case ErrorCode::kUnknownFacetValue: return "UnknownFacetValue";
    case ErrorCode::kEmptyLabelAfterNormalization:
      return "EmptyLabelAfterNormalization";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::string subject,
             std::optional<SourceLocation> location,
             std::optional<ItemRef> item)
    : std::runtime_error(format(code, message, location)),
      code_(code),
      message_(std::move(message)),
      subject_(std::move(subject)),
      location_(location),
      item_(item) {}

Error Error::at(SourceLocation location) const {
  return Error(code_, message_, subject_, location, item_);
}

std::string Error::format(ErrorCode code, const std::string& message,
                          const std::optional<SourceLocation>& location) {
  std::string out(error_code_name(code));
  if (location) {
    out += " at " + std::to_string(location->line) + ":" +
           std::to_string(location->column);
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace facetforge
