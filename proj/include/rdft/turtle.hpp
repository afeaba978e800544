// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rdft/term.hpp"

namespace rdft {

/// Result of parsing a Turtle document. Triples appear in document order;
/// duplicates are preserved for the caller to deduplicate on insert.
/// `lines` is parallel to `triples` and records the line each triple's
/// object starts on (validation reports point there).
struct TurtleDocument {
    std::vector<Triple> triples;
    std::vector<std::size_t> lines;
    std::map<std::string, std::string> prefixes;
};

/// Parses the supported Turtle subset: @prefix/PREFIX declarations, prefixed
/// names, absolute IRIs in angle brackets, predicate lists (;), object lists
/// (,), string literals with the usual escapes, ^^ datatype annotations,
/// numeric/boolean shorthand literals, `a`, language tags, comments, and _:
/// blank node labels. Relative IRIs resolve naively against `base`.
/// Throws TurtleParseError (with line/column) or UnknownPrefixError.
TurtleDocument parse_turtle(std::string_view text, std::string_view base = "");

}  // namespace rdft
