#include "defrdf/closure.hpp"

#include "defrdf/graph.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace defrdf {

namespace {

using TermId = std::uint32_t;

constexpr TermId kSp = static_cast<TermId>(Vocab::sp);
constexpr TermId kSc = static_cast<TermId>(Vocab::sc);
constexpr TermId kType = static_cast<TermId>(Vocab::type);
constexpr TermId kDom = static_cast<TermId>(Vocab::dom);
constexpr TermId kRange = static_cast<TermId>(Vocab::range);
constexpr TermId kBotc = static_cast<TermId>(Vocab::botc);
constexpr TermId kBotp = static_cast<TermId>(Vocab::botp);
constexpr TermId kVocabSize = 7;

constexpr unsigned kIdBits = 21;
constexpr TermId kMaxTerms = TermId{1} << kIdBits;
constexpr std::uint32_t kNone = ~std::uint32_t{0};

struct Fact {
  TermId s, p, o;
};

std::uint64_t key(TermId s, TermId p, TermId o) {
  return (std::uint64_t{s} << (2 * kIdBits)) | (std::uint64_t{p} << kIdBits) |
         o;
}

std::uint64_t pair_key(TermId p, TermId x) {
  return (std::uint64_t{p} << 32) | x;
}

struct Justification {
  Rule rule = Rule::Leaf;
  std::uint32_t depth = 0;
  std::array<std::uint32_t, 3> premises{kNone, kNone, kNone};
};

const std::vector<TermId> kNoTerms;
const std::vector<std::uint32_t> kNoFacts;

}  // namespace

struct Closure::Impl {
  TripleSet base;
  std::set<Term> universe;

  std::vector<Term> terms;
  std::unordered_map<Term, TermId> ids;
  std::vector<bool> literal;
  std::vector<TermId> uni;  // ids of universe terms, in term order

  std::vector<Fact> facts;
  std::vector<Justification> why;
  std::unordered_map<std::uint64_t, std::uint32_t> index;

  std::unordered_map<std::uint64_t, std::vector<TermId>> by_ps;  // -> objects
  std::unordered_map<std::uint64_t, std::vector<TermId>> by_po;  // -> subjects
  std::vector<std::vector<std::uint32_t>> by_p;                 // -> facts

  std::vector<bool> empty_class;     // by term id
  std::vector<bool> empty_property;  // by term id
  std::size_t rounds = 0;

  TermId intern(const Term& t) {
    auto [it, fresh] = ids.try_emplace(t, static_cast<TermId>(terms.size()));
    if (fresh) {
      if (terms.size() >= kMaxTerms)
        throw std::length_error("too many distinct terms");
      terms.push_back(t);
      literal.push_back(t.is_literal());
    }
    return it->second;
  }

  std::optional<TermId> lookup(const Term& t) const {
    auto it = ids.find(t);
    if (it == ids.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::uint32_t> find(TermId s, TermId p, TermId o) const {
    auto it = index.find(key(s, p, o));
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<TermId>& objects(TermId p, TermId s) const {
    auto it = by_ps.find(pair_key(p, s));
    return it == by_ps.end() ? kNoTerms : it->second;
  }
  const std::vector<TermId>& subjects(TermId p, TermId o) const {
    auto it = by_po.find(pair_key(p, o));
    return it == by_po.end() ? kNoTerms : it->second;
  }
  const std::vector<std::uint32_t>& with_predicate(TermId p) const {
    return p < by_p.size() ? by_p[p] : kNoFacts;
  }

  // Adds a fact unless already known. Indexes are updated in commit(), so a
  // round only joins against facts known before it started.
  void emit(TermId s, TermId p, TermId o, Rule rule, std::uint32_t depth,
            std::uint32_t a, std::uint32_t b = kNone,
            std::uint32_t c = kNone) {
    if (s < kVocabSize || o < kVocabSize || literal[p]) return;
    auto idx = static_cast<std::uint32_t>(facts.size());
    if (!index.try_emplace(key(s, p, o), idx).second) return;
    facts.push_back({s, p, o});
    why.push_back({rule, depth, {a, b, c}});
  }

  void commit(std::uint32_t from) {
    for (std::uint32_t i = from; i < facts.size(); ++i) {
      const Fact& f = facts[i];
      by_ps[pair_key(f.p, f.s)].push_back(f.o);
      by_po[pair_key(f.p, f.o)].push_back(f.s);
      if (f.p >= by_p.size()) by_p.resize(f.p + 1);
      by_p[f.p].push_back(i);
    }
  }

  std::uint32_t id_of(TermId s, TermId p, TermId o) const {
    return index.at(key(s, p, o));
  }

  void fire(Rule rule, std::uint32_t fi, std::uint32_t depth);
  void saturate();
  void build_tree(std::uint32_t fi, ProofTree& out) const;
  Triple triple_of(std::uint32_t fi) const {
    const Fact& f = facts[fi];
    return {terms[f.s], terms[f.p], terms[f.o], Mode::Strict};
  }
};

void Closure::Impl::fire(Rule rule, std::uint32_t fi, std::uint32_t depth) {
  const Fact f = facts[fi];
  switch (rule) {
    case Rule::R2a:
    case Rule::R3a: {
      TermId v = rule == Rule::R2a ? kSp : kSc;
      if (f.p != v) return;
      for (TermId c : objects(v, f.o))
        emit(f.s, v, c, rule, depth, fi, id_of(f.o, v, c));
      for (TermId a : subjects(v, f.s))
        emit(a, v, f.o, rule, depth, id_of(a, v, f.s), fi);
      return;
    }
    case Rule::R2b:
      if (f.p == kSp) {
        for (std::uint32_t gi : with_predicate(f.s)) {
          const Fact g = facts[gi];
          emit(g.s, f.o, g.o, rule, depth, fi, gi);
        }
      } else if (f.p >= kVocabSize) {
        for (TermId e : objects(kSp, f.p))
          emit(f.s, e, f.o, rule, depth, id_of(f.p, kSp, e), fi);
      }
      return;
    case Rule::R3b:
      if (f.p == kSc) {
        for (TermId x : subjects(kType, f.s))
          emit(x, kType, f.o, rule, depth, fi, id_of(x, kType, f.s));
      } else if (f.p == kType) {
        for (TermId b : objects(kSc, f.o))
          emit(f.s, kType, b, rule, depth, id_of(f.o, kSc, b), fi);
      }
      return;
    case Rule::R4a:
    case Rule::R4b: {
      TermId v = rule == Rule::R4a ? kDom : kRange;
      bool dom = rule == Rule::R4a;
      if (f.p == v) {
        for (std::uint32_t gi : with_predicate(f.s)) {
          const Fact g = facts[gi];
          emit(dom ? g.s : g.o, kType, f.o, rule, depth, fi, gi);
        }
      } else if (f.p >= kVocabSize) {
        for (TermId b : objects(v, f.p))
          emit(dom ? f.s : f.o, kType, b, rule, depth, id_of(f.p, v, b), fi);
      }
      return;
    }
    case Rule::R5a:
    case Rule::R6a: {
      TermId bot = rule == Rule::R5a ? kBotc : kBotp;
      if (f.p == bot) emit(f.o, bot, f.s, rule, depth, fi);
      return;
    }
    case Rule::R5b:
    case Rule::R6b: {
      TermId bot = rule == Rule::R5b ? kBotc : kBotp;
      TermId sub = rule == Rule::R5b ? kSc : kSp;
      if (f.p == bot) {
        for (TermId c : subjects(sub, f.s))
          emit(c, bot, f.o, rule, depth, fi, id_of(c, sub, f.s));
      } else if (f.p == sub) {
        for (TermId b : objects(bot, f.o))
          emit(f.s, bot, b, rule, depth, id_of(f.o, bot, b), fi);
      }
      return;
    }
    case Rule::R5c:
    case Rule::R6c: {
      TermId bot = rule == Rule::R5c ? kBotc : kBotp;
      if (f.p == bot && f.s == f.o)
        for (TermId b : uni) emit(f.s, bot, b, rule, depth, fi);
      return;
    }
    case Rule::R7a:
    case Rule::R7b: {
      TermId v = rule == Rule::R7a ? kDom : kRange;
      if (f.p == v) {
        // f as <A,v,C>: needs <C,botc,D>, <B,v,D>.
        for (TermId dd : objects(kBotc, f.o))
          for (TermId b : subjects(v, dd))
            emit(f.s, kBotp, b, rule, depth, fi, id_of(b, v, dd),
                 id_of(f.o, kBotc, dd));
        // f as <B,v,D>: needs <C,botc,D>, <A,v,C>.
        for (TermId cc : subjects(kBotc, f.o))
          for (TermId a : subjects(v, cc))
            emit(a, kBotp, f.s, rule, depth, id_of(a, v, cc), fi,
                 id_of(cc, kBotc, f.o));
      } else if (f.p == kBotc) {
        for (TermId a : subjects(v, f.s))
          for (TermId b : subjects(v, f.o))
            emit(a, kBotp, b, rule, depth, id_of(a, v, f.s),
                 id_of(b, v, f.o), fi);
      }
      return;
    }
    case Rule::Leaf:
      return;
  }
}

void Closure::Impl::saturate() {
  static constexpr std::array<Rule, 14> kOrder = {
      Rule::R2a, Rule::R2b, Rule::R3a, Rule::R3b, Rule::R4a,
      Rule::R4b, Rule::R5a, Rule::R5b, Rule::R5c, Rule::R6a,
      Rule::R6b, Rule::R6c, Rule::R7a, Rule::R7b};

  std::uint32_t delta_begin = 0;
  commit(0);
  while (delta_begin < facts.size()) {
    auto delta_end = static_cast<std::uint32_t>(facts.size());
    auto depth = static_cast<std::uint32_t>(rounds + 1);
    for (Rule rule : kOrder)
      for (std::uint32_t fi = delta_begin; fi < delta_end; ++fi)
        fire(rule, fi, depth);
    if (facts.size() == delta_end) break;
    ++rounds;
    commit(delta_end);
    delta_begin = delta_end;
  }
}

void Closure::Impl::build_tree(std::uint32_t fi, ProofTree& out) const {
  const Justification& j = why[fi];
  out.root = triple_of(fi);
  out.rule = j.rule;
  for (std::uint32_t p : j.premises) {
    if (p == kNone) break;
    out.children.emplace_back();
    build_tree(p, out.children.back());
  }
}

Closure::Closure(const TripleSet& graph) {
  auto impl = std::make_shared<Impl>();
  for (Vocab v : kVocabulary) impl->intern(Term::vocab(v));
  for (const auto& t : graph) {
    if (!t.is_strict())
      throw MalformedTriple("closure input must be strict");
    validate(t);
  }
  impl->base = graph;
  impl->universe = defrdf::universe(graph);
  for (const auto& term : impl->universe)
    impl->uni.push_back(impl->intern(term));
  for (const auto& t : graph) {
    TermId s = impl->intern(t.subject);
    TermId p = impl->intern(t.predicate);
    TermId o = impl->intern(t.object);
    auto idx = static_cast<std::uint32_t>(impl->facts.size());
    impl->index.emplace(key(s, p, o), idx);
    impl->facts.push_back({s, p, o});
    impl->why.push_back({});
  }
  impl->saturate();

  impl->empty_class.assign(impl->terms.size(), false);
  impl->empty_property.assign(impl->terms.size(), false);
  for (const Fact& f : impl->facts) {
    if (f.s != f.o) continue;
    if (f.p == kBotc) impl->empty_class[f.s] = true;
    if (f.p == kBotp) impl->empty_property[f.s] = true;
  }
  impl_ = std::move(impl);
}

const TripleSet& Closure::base() const { return impl_->base; }

TripleSet Closure::derived() const {
  TripleSet out;
  for (std::uint32_t i = 0; i < impl_->facts.size(); ++i)
    out.insert(impl_->triple_of(i));
  return out;
}

std::size_t Closure::size() const { return impl_->facts.size(); }

bool Closure::contains(const Triple& t) const {
  auto s = impl_->lookup(t.subject);
  auto p = impl_->lookup(t.predicate);
  auto o = impl_->lookup(t.object);
  return t.is_strict() && s && p && o && impl_->find(*s, *p, *o).has_value();
}

bool Closure::derives(const Triple& t) const {
  if (!t.is_strict()) throw MalformedTriple("query must be a strict triple");
  validate(t);
  if (contains(t)) return true;
  if (t.has_predicate(Vocab::botc))
    return is_empty_class(t.subject) || is_empty_class(t.object);
  if (t.has_predicate(Vocab::botp))
    return is_empty_property(t.subject) || is_empty_property(t.object);
  return false;
}

std::optional<ProofTree> Closure::proof(const Triple& t) const {
  if (!derives(t)) return std::nullopt;
  const Impl& m = *impl_;
  auto materialized = [&](const Triple& q) {
    auto s = m.lookup(q.subject);
    auto p = m.lookup(q.predicate);
    auto o = m.lookup(q.object);
    ProofTree tree;
    m.build_tree(*m.find(*s, *p, *o), tree);
    return tree;
  };
  if (contains(t)) return materialized(t);

  // Lazy exhaustive step: <s,bot,s> gives <s,bot,o> by (5c)/(6c); an empty
  // object goes through symmetry first.
  bool classes = t.has_predicate(Vocab::botc);
  Rule exhaust = classes ? Rule::R5c : Rule::R6c;
  Rule symmetry = classes ? Rule::R5a : Rule::R6a;
  bool subject_empty =
      classes ? is_empty_class(t.subject) : is_empty_property(t.subject);
  if (subject_empty) {
    Triple self{t.subject, t.predicate, t.subject, Mode::Strict};
    return ProofTree{t, exhaust, {materialized(self)}};
  }
  Triple self{t.object, t.predicate, t.object, Mode::Strict};
  Triple flipped{t.object, t.predicate, t.subject, Mode::Strict};
  ProofTree inner{flipped, exhaust, {materialized(self)}};
  return ProofTree{t, symmetry, {std::move(inner)}};
}

bool Closure::is_empty_class(const Term& t) const {
  auto id = impl_->lookup(t);
  return id && impl_->empty_class[*id];
}

bool Closure::is_empty_property(const Term& t) const {
  auto id = impl_->lookup(t);
  return id && impl_->empty_property[*id];
}

std::set<Term> Closure::empty_classes() const {
  std::set<Term> out;
  for (TermId id : impl_->uni)
    if (impl_->empty_class[id]) out.insert(impl_->terms[id]);
  return out;
}

std::set<Term> Closure::empty_properties() const {
  std::set<Term> out;
  for (TermId id : impl_->uni)
    if (impl_->empty_property[id]) out.insert(impl_->terms[id]);
  return out;
}

std::set<Term> Closure::class_terms() const {
  std::set<Term> out;
  const Impl& m = *impl_;
  for (const Fact& f : m.facts) {
    switch (f.p) {
      case kType: case kDom: case kRange:
        out.insert(m.terms[f.o]);
        break;
      case kSc: case kBotc:
        out.insert(m.terms[f.s]);
        out.insert(m.terms[f.o]);
        break;
      default:
        break;
    }
  }
  return out;
}

std::set<Term> Closure::property_terms() const {
  std::set<Term> out;
  const Impl& m = *impl_;
  for (const Fact& f : m.facts) {
    if (f.p >= kVocabSize) out.insert(m.terms[f.p]);
    switch (f.p) {
      case kDom: case kRange:
        out.insert(m.terms[f.s]);
        break;
      case kSp: case kBotp:
        out.insert(m.terms[f.s]);
        out.insert(m.terms[f.o]);
        break;
      default:
        break;
    }
  }
  return out;
}

const std::set<Term>& Closure::universe() const { return impl_->universe; }

std::size_t Closure::rounds() const { return impl_->rounds; }

bool derives(const TripleSet& g, const Triple& t) {
  return Closure(g).derives(t);
}

std::optional<ProofTree> proof_tree(const TripleSet& g, const Triple& t) {
  return Closure(g).proof(t);
}

std::set<Term> empty_classes(const TripleSet& g) {
  return Closure(g).empty_classes();
}

std::set<Term> empty_properties(const TripleSet& g) {
  return Closure(g).empty_properties();
}

}  // namespace defrdf
