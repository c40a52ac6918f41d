#pragma once

#include <map>
#include <string>

#include "triblock/geometry.hpp"

// JSON exchange format for blockers:
//   {"n": 6, "edges": [[0,3],[1,4]], "metadata": {"family": "..."}}
// Edges are emitted sorted lexicographically and the text ends with a
// newline, so serialized documents diff cleanly.

namespace triblock {

struct BlockerDocument {
  EdgeSet edges;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const BlockerDocument&, const BlockerDocument&) = default;
};

// Throws ParseError with a distinct diagnostic per defect: malformed JSON,
// missing or non-integer n, vertex out of range, boundary edge, duplicate
// edge, malformed metadata.
BlockerDocument parse_document(const std::string& text);

std::string serialize_document(const BlockerDocument& doc);

}  // namespace triblock
