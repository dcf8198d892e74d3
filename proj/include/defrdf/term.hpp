#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace defrdf {

// The seven reserved predicates. Their numeric values are also the fixed term
// ids used by the engine.
enum class Vocab : std::uint8_t { sp = 0, sc, type, dom, range, botc, botp };

inline constexpr std::array<Vocab, 7> kVocabulary = {
    Vocab::sp,  Vocab::sc,    Vocab::type, Vocab::dom,
    Vocab::range, Vocab::botc, Vocab::botp};

std::string_view vocab_name(Vocab v);
std::optional<Vocab> vocab_from_name(std::string_view text);

enum class TermKind : std::uint8_t { Identifier, PlainLiteral, TypedLiteral };

class Term {
 public:
  Term() = default;

  // Throws std::invalid_argument if text is not a valid identifier.
  static Term identifier(std::string text);
  static Term literal(std::string text);
  static Term typed_literal(std::string text, std::string datatype);
  static Term vocab(Vocab v);

  TermKind kind() const { return kind_; }
  const std::string& text() const { return text_; }
  const std::string& datatype() const { return datatype_; }

  bool is_identifier() const { return kind_ == TermKind::Identifier; }
  bool is_literal() const { return kind_ != TermKind::Identifier; }
  bool is_vocabulary() const { return as_vocab().has_value(); }
  std::optional<Vocab> as_vocab() const;

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;

 private:
  Term(TermKind kind, std::string text, std::string datatype)
      : kind_(kind), text_(std::move(text)), datatype_(std::move(datatype)) {}

  TermKind kind_ = TermKind::Identifier;
  std::string text_;
  std::string datatype_;
};

bool is_valid_identifier(std::string_view text);

// Shorthands used throughout tests and examples.
inline Term iri(std::string text) { return Term::identifier(std::move(text)); }
inline Term lit(std::string text) { return Term::literal(std::move(text)); }

std::size_t hash_value(const Term& t);

}  // namespace defrdf

template <>
struct std::hash<defrdf::Term> {
  std::size_t operator()(const defrdf::Term& t) const {
    return defrdf::hash_value(t);
  }
};
