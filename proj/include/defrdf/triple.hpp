#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "defrdf/term.hpp"

namespace defrdf {

enum class Mode : std::uint8_t { Strict, Defeasible };

struct Triple {
  Term subject;
  Term predicate;
  Term object;
  Mode mode = Mode::Strict;

  bool is_strict() const { return mode == Mode::Strict; }
  bool is_defeasible() const { return mode == Mode::Defeasible; }
  bool has_predicate(Vocab v) const { return predicate.as_vocab() == v; }

  // Same subject/predicate/object, strict mode.
  Triple strict() const { return {subject, predicate, object, Mode::Strict}; }

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

class MalformedTriple : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Triple strict_triple(Term s, Term p, Term o);
Triple defeasible_triple(Term s, Term p, Term o);
// Identifier-only shorthand: t("p", "sc", "b").
Triple t(std::string_view s, std::string_view p, std::string_view o,
         Mode mode = Mode::Strict);
Triple d(std::string_view s, std::string_view p, std::string_view o);

enum class TripleFault : std::uint8_t {
  None,
  VocabularyPosition,  // reserved term as subject or object
  LiteralPredicate,
  DefeasibleMode,      // defeasible triple with predicate other than sc/sp
};

TripleFault triple_fault(const Triple& t);
// Throws MalformedTriple describing the fault, if any.
void validate(const Triple& t);

using TripleSet = std::set<Triple>;

std::size_t hash_value(const Triple& t);

}  // namespace defrdf

template <>
struct std::hash<defrdf::Triple> {
  std::size_t operator()(const defrdf::Triple& t) const {
    return defrdf::hash_value(t);
  }
};
