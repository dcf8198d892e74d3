#include "defrdf/text_format.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

namespace defrdf {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t'; }

bool ident_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '_' || c == ':' || c == '/' ||
         c == '#' || c == '.' || c == '+' || c == '-';
}

bool ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

struct Token {
  Term term;
  std::size_t column;
};

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no,
             std::vector<Diagnostic>& out)
      : line_(line), line_no_(line_no), out_(out) {}

  // Returns nullopt for blank/comment lines and for rejected statements
  // (in which case a diagnostic was recorded).
  std::optional<Triple> parse() {
    skip_ws();
    if (at_end() || peek() == '#') return std::nullopt;

    std::array<Token, 3> tok;
    for (int i = 0; i < 3; ++i) {
      if (i > 0) {
        if (at_end() || !is_ws(peek())) {
          fail(ParseErrorKind::Syntax,
               at_end() ? "expected three terms before the terminator"
                        : "expected whitespace between terms");
          return std::nullopt;
        }
        skip_ws();
      }
      auto t = term();
      if (!t) return std::nullopt;
      tok[i] = std::move(*t);
    }
    skip_ws();
    if (at_end()) {
      fail(ParseErrorKind::Syntax, "missing terminator '.' or '?'");
      return std::nullopt;
    }
    char term_char = peek();
    if (term_char != '.' && term_char != '?') {
      fail(ParseErrorKind::Syntax,
           std::string("expected terminator '.' or '?', found '") +
               term_char + "'");
      return std::nullopt;
    }
    ++pos_;
    skip_ws();
    if (!at_end()) {
      fail(ParseErrorKind::Syntax, "unexpected text after terminator");
      return std::nullopt;
    }

    Mode mode = term_char == '.' ? Mode::Strict : Mode::Defeasible;
    Triple triple{tok[0].term, tok[1].term, tok[2].term, mode};

    if (tok[0].term.is_vocabulary()) {
      fail_at(tok[0].column, ParseErrorKind::VocabularyPosition,
              "reserved term '" + tok[0].term.text() + "' used as subject");
      return std::nullopt;
    }
    if (tok[2].term.is_vocabulary()) {
      fail_at(tok[2].column, ParseErrorKind::VocabularyPosition,
              "reserved term '" + tok[2].term.text() + "' used as object");
      return std::nullopt;
    }
    if (tok[1].term.is_literal()) {
      fail_at(tok[1].column, ParseErrorKind::Syntax,
              "literal used as predicate");
      return std::nullopt;
    }
    if (mode == Mode::Defeasible && !triple.has_predicate(Vocab::sc) &&
        !triple.has_predicate(Vocab::sp)) {
      fail_at(tok[1].column, ParseErrorKind::DefeasibleMode,
              "defeasible statement with predicate '" + tok[1].term.text() +
                  "' (only sc and sp may be defeasible)");
      return std::nullopt;
    }
    return triple;
  }

 private:
  bool at_end() const {
    return pos_ >= line_.size();
  }
  char peek() const { return line_[pos_]; }
  void skip_ws() {
    while (!at_end() && is_ws(peek())) ++pos_;
  }

  void fail(ParseErrorKind kind, std::string reason) {
    fail_at(pos_ + 1, kind, std::move(reason));
  }
  void fail_at(std::size_t column, ParseErrorKind kind, std::string reason) {
    out_.push_back({line_no_, column, kind, std::move(reason)});
  }

  std::optional<Token> term() {
    std::size_t column = pos_ + 1;
    if (at_end()) {
      fail(ParseErrorKind::Syntax, "expected a term");
      return std::nullopt;
    }
    if (peek() == '"') {
      auto text = quoted();
      if (!text) return std::nullopt;
      if (line_.substr(pos_, 2) == "^^") {
        pos_ += 2;
        auto dt = identifier_text();
        if (!dt) return std::nullopt;
        return Token{Term::typed_literal(std::move(*text), std::move(*dt)),
                     column};
      }
      return Token{Term::literal(std::move(*text)), column};
    }
    auto text = identifier_text();
    if (!text) return std::nullopt;
    return Token{Term::identifier(std::move(*text)), column};
  }

  std::optional<std::string> identifier_text() {
    if (at_end() || !ident_start(peek())) {
      if (at_end())
        fail(ParseErrorKind::Syntax, "expected an identifier");
      else
        fail(ParseErrorKind::Syntax,
             std::string("unexpected character '") + peek() + "'");
      return std::nullopt;
    }
    std::size_t start = pos_;
    while (!at_end() && ident_char(peek())) ++pos_;
    // Trailing dots belong to the terminator, not the identifier.
    while (pos_ > start + 1 && line_[pos_ - 1] == '.') --pos_;
    return std::string(line_.substr(start, pos_ - start));
  }

  std::optional<std::string> quoted() {
    ++pos_;  // opening quote
    std::string out;
    while (!at_end()) {
      char c = peek();
      ++pos_;
      if (c == '"') return out;
      if (c != '\\') {
        out.push_back(c);
        continue;
      }
      if (at_end()) break;
      char e = peek();
      ++pos_;
      switch (e) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        default:
          fail_at(pos_ - 1, ParseErrorKind::Syntax,
                  std::string("unknown escape '\\") + e + "'");
          return std::nullopt;
      }
    }
    fail(ParseErrorKind::Syntax, "unterminated literal");
    return std::nullopt;
  }

  std::string_view line_;
  std::size_t line_no_;
  std::vector<Diagnostic>& out_;
  std::size_t pos_ = 0;
};

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line, line_no);
    if (end == text.size()) break;
    start = end + 1;
    ++line_no;
  }
}

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "syntax error";
    case ParseErrorKind::VocabularyPosition: return "vocabulary position error";
    case ParseErrorKind::DefeasibleMode: return "defeasible mode error";
  }
  return "error";
}

std::string Diagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " +
         std::string(defrdf::to_string(kind)) + ": " + reason;
}

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(diagnostics.empty() ? "parse error"
                                             : diagnostics.front().to_string()),
      diagnostics_(std::move(diagnostics)) {}

DefeasibleGraph parse_graph(std::string_view text) {
  std::vector<Diagnostic> diagnostics;
  DefeasibleGraph g;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (auto triple = LineParser(line, line_no, diagnostics).parse())
      g.insert(*triple);
  });
  if (!diagnostics.empty()) throw ParseError(std::move(diagnostics));
  return g;
}

Triple parse_triple(std::string_view statement) {
  std::vector<Diagnostic> diagnostics;
  std::vector<Triple> found;
  for_each_line(statement, [&](std::string_view line, std::size_t line_no) {
    if (auto triple = LineParser(line, line_no, diagnostics).parse())
      found.push_back(std::move(*triple));
  });
  if (diagnostics.empty() && found.size() != 1)
    diagnostics.push_back({1, 1, ParseErrorKind::Syntax,
                           "expected exactly one statement, found " +
                               std::to_string(found.size())});
  if (!diagnostics.empty()) throw ParseError(std::move(diagnostics));
  return found.front();
}

std::string format_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::Identifier:
      return t.text();
    case TermKind::PlainLiteral:
      return "\"" + escape(t.text()) + "\"";
    case TermKind::TypedLiteral:
      return "\"" + escape(t.text()) + "\"^^" + t.datatype();
  }
  return t.text();
}

std::string format_triple(const Triple& t) {
  return format_term(t.subject) + " " + format_term(t.predicate) + " " +
         format_term(t.object) + (t.is_strict() ? " ." : " ?");
}

std::vector<std::string> sorted_statements(const TripleSet& triples) {
  using Key = std::tuple<int, std::string, std::string, std::string>;
  std::vector<std::pair<Key, const Triple*>> rows;
  rows.reserve(triples.size());
  for (const auto& t : triples)
    rows.push_back({{t.is_strict() ? 0 : 1, format_term(t.subject),
                     format_term(t.predicate), format_term(t.object)},
                    &t});
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(format_triple(*row.second));
  return out;
}

std::string serialize_triples(const TripleSet& triples) {
  std::string out;
  for (const auto& line : sorted_statements(triples)) {
    out += line;
    out += '\n';
  }
  return out;
}

std::string serialize_graph(const DefeasibleGraph& g) {
  return serialize_triples(g.all());
}

}  // namespace defrdf
