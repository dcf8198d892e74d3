#include "defrdf/triple.hpp"

#include "defrdf/text_format.hpp"

namespace defrdf {

Triple strict_triple(Term s, Term p, Term o) {
  return {std::move(s), std::move(p), std::move(o), Mode::Strict};
}

Triple defeasible_triple(Term s, Term p, Term o) {
  return {std::move(s), std::move(p), std::move(o), Mode::Defeasible};
}

Triple t(std::string_view s, std::string_view p, std::string_view o,
         Mode mode) {
  return {Term::identifier(std::string(s)), Term::identifier(std::string(p)),
          Term::identifier(std::string(o)), mode};
}

Triple d(std::string_view s, std::string_view p, std::string_view o) {
  return t(s, p, o, Mode::Defeasible);
}

TripleFault triple_fault(const Triple& t) {
  if (t.subject.is_vocabulary() || t.object.is_vocabulary())
    return TripleFault::VocabularyPosition;
  if (t.predicate.is_literal()) return TripleFault::LiteralPredicate;
  if (t.is_defeasible() && !t.has_predicate(Vocab::sc) &&
      !t.has_predicate(Vocab::sp))
    return TripleFault::DefeasibleMode;
  return TripleFault::None;
}

void validate(const Triple& t) {
  switch (triple_fault(t)) {
    case TripleFault::None:
      return;
    case TripleFault::VocabularyPosition:
      throw MalformedTriple("reserved term in subject or object position: " +
                            format_triple(t));
    case TripleFault::LiteralPredicate:
      throw MalformedTriple("literal in predicate position: " +
                            format_triple(t));
    case TripleFault::DefeasibleMode:
      throw MalformedTriple("defeasible triple must use sc or sp: " +
                            format_triple(t));
  }
}

std::size_t hash_value(const Triple& t) {
  std::size_t h = hash_value(t.subject);
  h = h * 0x100000001b3ULL ^ hash_value(t.predicate);
  h = h * 0x100000001b3ULL ^ hash_value(t.object);
  return h ^ static_cast<std::size_t>(t.mode);
}

}  // namespace defrdf
