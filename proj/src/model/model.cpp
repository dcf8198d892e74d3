#include "defrdf/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "defrdf/closure.hpp"
#include "defrdf/graph.hpp"
#include "defrdf/text_format.hpp"

namespace defrdf::model {

namespace {

using Pairs = std::set<std::pair<Term, Term>>;

const Pairs kNoPairs;
const std::set<Term> kNoTerms;

std::string show(const Term& t) { return format_term(t); }
std::string show(const Term& a, const Term& b) {
  return "(" + show(a) + ", " + show(b) + ")";
}

class Checker {
 public:
  explicit Checker(const Interpretation& i) : i_(i) {}

  ViolationReport run(const TripleSet& g) {
    structure();
    simple(g);
    subproperty();
    subclass();
    typing_one();
    typing_two();
    disjointness_one();
    disjointness_two();
    symmetry();
    transitivity();
    exhaustive();
    return std::move(report_);
  }

 private:
  void add(std::string condition, int item, std::string detail) {
    report_.violations.push_back(
        {std::move(condition), item, std::move(detail)});
  }

  bool in(const std::set<Term>& s, const Term& t) const {
    return s.count(t) > 0;
  }
  const std::set<Term>& cext(const Term& c) const {
    auto it = i_.class_ext.find(c);
    return it == i_.class_ext.end() ? kNoTerms : it->second;
  }
  const Pairs& v(Vocab x) const { return i_.vocab_extension(x); }

  void structure() {
    for (const auto& c : i_.classes)
      if (!in(i_.resources, c))
        add("Interpretation", 0, "class " + show(c) + " not a resource");
    for (const auto& l : i_.literal_values)
      if (!in(i_.resources, l))
        add("Interpretation", 0, "literal " + show(l) + " not a resource");
    for (const auto& [p, ext] : i_.prop_ext)
      if (!in(i_.properties, p))
        add("Interpretation", 0, "extension for non-property " + show(p));
    for (const auto& p : i_.properties)
      if (!i_.prop_ext.count(p))
        add("Interpretation", 0, "property " + show(p) + " has no extension");
    for (const auto& [c, ext] : i_.class_ext)
      if (!in(i_.classes, c))
        add("Interpretation", 0, "extension for non-class " + show(c));
    for (const auto& c : i_.classes)
      if (!i_.class_ext.count(c))
        add("Interpretation", 0, "class " + show(c) + " has no extension");
    for (const auto& [term, value] : i_.denote)
      if (term.kind() == TermKind::PlainLiteral && value != term)
        add("Interpretation", 0,
            "plain literal " + show(term) + " not denoted by itself");
  }

  void simple(const TripleSet& g) {
    for (const auto& t : g)
      if (!satisfies(i_, t)) add("Simple", 1, format_triple(t));
  }

  void subproperty() {
    const Pairs& sp = v(Vocab::sp);
    for (const auto& [a, b] : sp)
      for (const auto& [b2, c] : sp)
        if (b == b2 && in(i_.properties, a) && in(i_.properties, b) &&
            in(i_.properties, c) && !sp.count({a, c}))
          add("Subproperty", 1,
              show(a, b) + ", " + show(b, c) + " without " + show(a, c));
    for (const auto& [p, q] : sp) {
      if (!in(i_.properties, p) || !in(i_.properties, q)) {
        add("Subproperty", 2, show(p, q) + " outside Δ_P");
        continue;
      }
      const Pairs& ep = i_.extension(p);
      const Pairs& eq = i_.extension(q);
      if (!std::includes(eq.begin(), eq.end(), ep.begin(), ep.end()))
        add("Subproperty", 2, "extension of " + show(p) + " not within " +
                                  show(q));
    }
  }

  void subclass() {
    const Pairs& sc = v(Vocab::sc);
    for (const auto& [a, b] : sc)
      for (const auto& [b2, c] : sc)
        if (b == b2 && in(i_.classes, a) && in(i_.classes, b) &&
            in(i_.classes, c) && !sc.count({a, c}))
          add("Subclass", 1,
              show(a, b) + ", " + show(b, c) + " without " + show(a, c));
    for (const auto& [c, d] : sc) {
      if (!in(i_.classes, c) || !in(i_.classes, d)) {
        add("Subclass", 2, show(c, d) + " outside Δ_C");
        continue;
      }
      const auto& ec = cext(c);
      const auto& ed = cext(d);
      if (!std::includes(ed.begin(), ed.end(), ec.begin(), ec.end()))
        add("Subclass", 2, "extension of " + show(c) + " not within " +
                               show(d));
    }
  }

  void typing_one() {
    const Pairs& type = v(Vocab::type);
    for (const auto& c : i_.classes)
      for (const auto& x : cext(c))
        if (!type.count({x, c}))
          add("Typing I", 1, show(x) + " in class " + show(c) +
                                 " without type pair");
    for (const auto& [x, c] : type)
      if (in(i_.classes, c) && !in(cext(c), x))
        add("Typing I", 1, "type pair " + show(x, c) +
                               " without class membership");
    typing_positions(Vocab::dom, 2);
    typing_positions(Vocab::range, 3);
  }

  void typing_positions(Vocab which, int item) {
    for (const auto& [p, c] : v(which))
      for (const auto& [x, y] : i_.extension(p)) {
        const Term& member = which == Vocab::dom ? x : y;
        if (!in(i_.classes, c) || !in(cext(c), member))
          add("Typing I", item, show(member) + " not in class " + show(c) +
                                    " required by " + show(p, c));
      }
  }

  void typing_two() {
    for (Vocab e : kVocabulary) {
      auto it = i_.denote.find(Term::vocab(e));
      if (it == i_.denote.end() || !in(i_.properties, it->second))
        add("Typing II", 1, std::string(vocab_name(e)) + " not a property");
    }
    for (Vocab which : {Vocab::dom, Vocab::range})
      for (const auto& [p, c] : v(which))
        if (!in(i_.properties, p) || !in(i_.classes, c))
          add("Typing II", which == Vocab::dom ? 2 : 3,
              show(p, c) + " with property or class outside its domain");
    for (const auto& [x, c] : v(Vocab::type))
      if (!in(i_.classes, c)) add("Typing II", 4, show(c) + " not a class");
  }

  // Items 2 and 4 (symmetry, sc/sp-transitivity, exhaustiveness) are
  // reported under their own condition labels.
  void disjointness_one() {
    for (const auto& [c, d] : v(Vocab::botc))
      if (!in(i_.classes, c) || !in(i_.classes, d))
        add("Disjointness I", 1, show(c, d) + " outside Δ_C");
    for (const auto& [p, q] : v(Vocab::botp))
      if (!in(i_.properties, p) || !in(i_.properties, q))
        add("Disjointness I", 3, show(p, q) + " outside Δ_P");
  }

  void disjointness_two() {
    const Pairs& botc = v(Vocab::botc);
    const Pairs& botp = v(Vocab::botp);
    int item = 1;
    for (Vocab which : {Vocab::dom, Vocab::range}) {
      const Pairs& ext = v(which);
      for (const auto& [p, c] : ext)
        for (const auto& [q, dd] : ext)
          if (botc.count({c, dd}) && !botp.count({p, q}))
            add("Disjointness II", item,
                show(p, q) + " not disjoint although " + show(c, dd) + " are");
      ++item;
    }
  }

  void symmetry() {
    int item = 1;
    for (Vocab which : {Vocab::botc, Vocab::botp}) {
      const Pairs& ext = v(which);
      for (const auto& [a, b] : ext)
        if (!ext.count({b, a}))
          add("Symmetry", item, show(a, b) + " without " + show(b, a));
      ++item;
    }
  }

  void transitivity() {
    struct Case {
      Vocab bot, sub;
      const char* label;
    };
    for (Case k : {Case{Vocab::botc, Vocab::sc, "sc-Transitivity"},
                   Case{Vocab::botp, Vocab::sp, "sp-Transitivity"}}) {
      const Pairs& bot = v(k.bot);
      for (const auto& [c, d] : bot)
        for (const auto& [e, c2] : v(k.sub))
          if (c2 == c && !bot.count({e, d}))
            add(k.label, 1, show(c, d) + " and " + show(e, c) +
                                " without " + show(e, d));
    }
  }

  void exhaustive() {
    struct Case {
      Vocab bot;
      const std::set<Term>* domain;
      const char* label;
    };
    for (Case k : {Case{Vocab::botc, &i_.classes, "c-Exhaustive"},
                   Case{Vocab::botp, &i_.properties, "p-Exhaustive"}}) {
      const Pairs& bot = v(k.bot);
      for (const auto& [c, c2] : bot) {
        if (c != c2) continue;
        for (const auto& dd : *k.domain)
          if (!bot.count({c, dd}))
            add(k.label, 1, show(c, c) + " without " + show(c, dd));
      }
    }
  }

  const Interpretation& i_;
  ViolationReport report_;
};

}  // namespace

const Pairs& Interpretation::extension(const Term& p) const {
  auto it = prop_ext.find(p);
  return it == prop_ext.end() ? kNoPairs : it->second;
}

const Pairs& Interpretation::vocab_extension(Vocab v) const {
  auto it = denote.find(Term::vocab(v));
  if (it == denote.end() || !properties.count(it->second)) return kNoPairs;
  return extension(it->second);
}

std::string Violation::label() const {
  return item > 0 ? condition + " (" + std::to_string(item) + ")" : condition;
}

std::size_t ViolationReport::count(const std::string& condition) const {
  return std::count_if(
      violations.begin(), violations.end(),
      [&](const Violation& v) { return v.condition == condition; });
}

std::string ViolationReport::to_string() const {
  std::string out;
  for (const auto& v : violations) out += v.label() + ": " + v.detail + "\n";
  return out;
}

bool satisfies(const Interpretation& i, const Triple& t) {
  auto s = i.denote.find(t.subject);
  auto p = i.denote.find(t.predicate);
  auto o = i.denote.find(t.object);
  if (s == i.denote.end() || p == i.denote.end() || o == i.denote.end())
    return false;
  if (!i.properties.count(p->second)) return false;
  return i.extension(p->second).count({s->second, o->second}) > 0;
}

ViolationReport check_conditions(const Interpretation& i,
                                 const TripleSet& g) {
  if (i.resources.empty())
    throw std::invalid_argument("interpretation has an empty resource set");
  return Checker(i).run(g);
}

Interpretation canonical_interpretation(const TripleSet& g) {
  Closure cl(g);
  Interpretation i;
  i.resources = universe(g);
  for (const auto& term : i.resources)
    if (term.is_literal()) i.literal_values.insert(term);
  for (Vocab v : kVocabulary) {
    i.resources.insert(Term::vocab(v));
    i.properties.insert(Term::vocab(v));
  }
  for (const auto& p : cl.property_terms()) i.properties.insert(p);
  i.classes = cl.class_terms();
  for (const auto& p : i.properties) i.prop_ext[p];
  for (const auto& c : i.classes) i.class_ext[c];
  for (const auto& t : cl.derived()) {
    i.prop_ext[t.predicate].insert({t.subject, t.object});
    if (t.has_predicate(Vocab::type)) i.class_ext[t.object].insert(t.subject);
  }
  // An empty property is disjoint from the vocabulary properties too. Those
  // pairs have no triple form, so the closure cannot supply them.
  auto& botp = i.prop_ext[Term::vocab(Vocab::botp)];
  for (const auto& p : cl.empty_properties())
    for (Vocab v : kVocabulary) {
      botp.insert({p, Term::vocab(v)});
      botp.insert({Term::vocab(v), p});
    }
  for (const auto& r : i.resources) i.denote[r] = r;
  return i;
}

}  // namespace defrdf::model
