// Copyright 2026 The Linkfold Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linkfold/adornment.hpp"
#include "linkfold/errors.hpp"
#include "linkfold/linkage.hpp"
#include "linkfold/order.hpp"

namespace linkfold {

inline constexpr const char* kFormatVersion = "linkfold/1";

/// Malformed document; `where` is a JSON pointer or a byte offset.
class DocumentError : public InputError {
 public:
  DocumentError(const std::string& where, const std::string& message)
      : InputError(where + ": " + message), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct AnnotationEntry {
  EdgeId i = 0;
  EdgeId j = 0;
  Surd value;

  friend bool operator==(const AnnotationEntry& a, const AnnotationEntry& b) {
    return a.i == b.i && a.j == b.j && a.value == b.value;
  }
};

struct LinkageDocument {
  std::string format = kFormatVersion;
  Linkage linkage;
  std::vector<Point> placement;
  std::optional<Rational> epsilon;
  /// Entries that differ from the geometric Ord, sorted by (i, j).
  std::vector<AnnotationEntry> annotations;
  std::vector<Adornment> adornments;
  std::vector<std::vector<Point>> frames;
  std::optional<ExtensionMap> extension_map;

  Configuration configuration() const { return Configuration{placement, epsilon.value_or(Rational(0))}; }
};

/// Strict mode rejects unknown fields and numbers that are not strings.
LinkageDocument parse_linkage_document(std::string_view text, bool strict = false);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string write_linkage_document(const LinkageDocument& doc);

/// Ord of the placement, overridden by the sparse entries.
AnnotationMatrix annotation_matrix(const LinkageDocument& doc);

/// Entries of A that differ from the geometric Ord, in (i, j) order.
std::vector<AnnotationEntry> sparse_annotations(const Linkage& linkage, std::span<const Point> placement,
                                                const AnnotationMatrix& a);

}  // namespace linkfold
