#include "defrdf/term.hpp"

#include <stdexcept>

namespace defrdf {

namespace {

constexpr std::array<std::string_view, 7> kNames = {
    "sp", "sc", "type", "dom", "range", "botc", "botp"};

bool ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool ident_rest(char c) {
  if (ident_start(c) || (c >= '0' && c <= '9')) return true;
  switch (c) {
    case ':': case '/': case '#': case '.': case '+': case '-':
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string_view vocab_name(Vocab v) {
  return kNames[static_cast<std::size_t>(v)];
}

std::optional<Vocab> vocab_from_name(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == text) return static_cast<Vocab>(i);
  return std::nullopt;
}

bool is_valid_identifier(std::string_view text) {
  if (text.empty() || !ident_start(text.front())) return false;
  for (char c : text.substr(1))
    if (!ident_rest(c)) return false;
  // A trailing dot would be read back as a terminator.
  return text.back() != '.';
}

Term Term::identifier(std::string text) {
  if (!is_valid_identifier(text))
    throw std::invalid_argument("invalid identifier: '" + text + "'");
  return Term(TermKind::Identifier, std::move(text), {});
}

Term Term::literal(std::string text) {
  return Term(TermKind::PlainLiteral, std::move(text), {});
}

Term Term::typed_literal(std::string text, std::string datatype) {
  if (!is_valid_identifier(datatype))
    throw std::invalid_argument("invalid datatype: '" + datatype + "'");
  return Term(TermKind::TypedLiteral, std::move(text), std::move(datatype));
}

Term Term::vocab(Vocab v) {
  return Term(TermKind::Identifier, std::string(vocab_name(v)), {});
}

std::optional<Vocab> Term::as_vocab() const {
  if (kind_ != TermKind::Identifier) return std::nullopt;
  return vocab_from_name(text_);
}

std::size_t hash_value(const Term& t) {
  std::size_t h = std::hash<std::string>{}(t.text());
  h ^= static_cast<std::size_t>(t.kind()) * 0x9e3779b97f4a7c15ULL;
  if (!t.datatype().empty())
    h ^= std::hash<std::string>{}(t.datatype()) + 0x632be59bd9b4e019ULL +
         (h << 6) + (h >> 2);
  return h;
}

}  // namespace defrdf
