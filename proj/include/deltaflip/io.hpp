#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "deltaflip/gf2.hpp"
#include "deltaflip/graph.hpp"
#include "deltaflip/interlace.hpp"
#include "deltaflip/matroid.hpp"
#include "deltaflip/polynomial.hpp"
#include "deltaflip/recursion.hpp"
#include "deltaflip/set_system.hpp"

namespace deltaflip {

using Json = nlohmann::ordered_json;

/// Parsed interchange document. Matrices may be rectangular.
using Document = std::variant<SetSystem, Graph, BinaryMatrix, Matroid>;

/// Parses a document with a `type` field in {setsystem, graph, matrix, matroid}.
/// Malformed text throws ParseError; unknown labels, duplicates and the like
/// throw DomainError; invalid matroids throw NotAMatroidError.
Document parse_document(std::string_view text);
Document document_from_json(const Json& json);

std::string document_type(const Document& doc);

Json to_json(const SetSystem& m);
Json to_json(const Graph& g);
Json to_json(const BinaryMatrix& r);
Json to_json(const Matroid& m);
Json to_json(const Document& doc);

/// Ascending coefficients; entries outside the 64-bit range become strings.
Json to_json(const UniPoly& p);
/// [[x-degree, y-degree, coefficient], ...] in (x, y) order.
Json to_json(const BiPoly& p);
Json to_json(const MultiQPoly& q);
Json to_json(const RecursionTrace& trace);
Json to_json(const BigInt& v);

/// Canonical bytes: compact JSON followed by a newline.
std::string emit(const Json& json);
inline std::string emit_document(const Document& doc) { return emit(to_json(doc)); }

/// One token of an operation word such as "+u\u*{p,q}~*s[p,q]".
struct WordToken {
  enum class Kind { Pivot, LoopComplement, DualPivot, Delete, Restrict };
  Kind kind;
  std::vector<std::string> labels;
  /// Bare `V` when the current ground has no element labelled V.
  bool whole_ground = false;
  /// Byte offset in the source text.
  std::size_t position = 0;
};

/// Throws ParseError (with the offending byte offset) on malformed words.
std::vector<WordToken> parse_word(std::string_view text);

/// Applies the tokens left to right. Labels are resolved against the ground
/// at the time the token is applied.
SetSystem apply_word(const SetSystem& m, const std::vector<WordToken>& word);
/// Graphs support the same tokens; deletion and restriction take induced subgraphs.
Graph apply_word(const Graph& g, const std::vector<WordToken>& word);

/// Subset of `ground` named by `{p,q}`, `p`, `p,q` or `V`.
Subset parse_subset(const GroundSet& ground, std::string_view text);

}  // namespace deltaflip
