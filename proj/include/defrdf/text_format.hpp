#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "defrdf/graph.hpp"

namespace defrdf {

// Line-oriented graph syntax:
//
//   p sc b .        strict triple
//   b sc f ?        defeasible triple
//   # comment
//
// Terms are bare identifiers or double-quoted literals ("..." with \" \\ \n
// \t \r escapes, optionally followed by ^^datatype).

enum class ParseErrorKind : std::uint8_t {
  Syntax,
  VocabularyPosition,
  DefeasibleMode,
};

std::string_view to_string(ParseErrorKind kind);

struct Diagnostic {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based, in bytes
  ParseErrorKind kind = ParseErrorKind::Syntax;
  std::string reason;

  std::string to_string() const;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Throws ParseError listing every offending statement.
DefeasibleGraph parse_graph(std::string_view text);

// Parses exactly one statement (used for queries).
Triple parse_triple(std::string_view statement);

std::string format_term(const Term& t);
std::string format_triple(const Triple& t);

// Strict block first, then defeasible; each sorted by (subject, predicate,
// object) in their rendered form.
std::string serialize_graph(const DefeasibleGraph& g);
std::string serialize_triples(const TripleSet& triples);

// Sorts the rendered statements of a triple set the way serialize_graph does.
std::vector<std::string> sorted_statements(const TripleSet& triples);

}  // namespace defrdf
