#include "defrdf/defeasible.hpp"

#include "defrdf/text_format.hpp"

namespace defrdf {

namespace {

TripleSet with_strict(const TripleSet& strict, const TripleSet& defeasible) {
  TripleSet out = strict;
  for (const auto& t : defeasible) out.insert(t.strict());
  return out;
}

// Members of `d` whose subject is empty in `cl`.
TripleSet exceptional(const Closure& cl, const TripleSet& d) {
  TripleSet out;
  for (const auto& t : d) {
    bool classes = t.has_predicate(Vocab::sc);
    if (classes ? cl.is_empty_class(t.subject)
                : cl.is_empty_property(t.subject))
      out.insert(t);
  }
  return out;
}

TripleSet only(const TripleSet& d, Vocab v) {
  TripleSet out;
  for (const auto& t : d)
    if (t.has_predicate(v)) out.insert(t);
  return out;
}

Triple self_bottom(const Term& t, bool classes) {
  return {t, Term::vocab(classes ? Vocab::botc : Vocab::botp), t,
          Mode::Strict};
}

void require_defeasible(const Triple& q, Vocab v) {
  validate(q);
  if (!q.is_defeasible() || !q.has_predicate(v))
    throw MalformedTriple("query must be a defeasible " +
                          std::string(vocab_name(v)) +
                          " triple: " + format_triple(q));
}

nlohmann::json statements(const TripleSet& s) {
  return sorted_statements(s);
}

TripleSet statements_from(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a triple array");
  TripleSet out;
  for (const auto& item : j) {
    Triple t = parse_triple(item.get<std::string>());
    if (!t.is_defeasible())
      throw std::invalid_argument("ranking holds a strict triple: " +
                                  format_triple(t));
    out.insert(t);
  }
  return out;
}

}  // namespace

const TripleSet& Ranking::level_or_infinite(std::size_t i) const {
  return i < levels.size() ? levels[i] : infinite;
}

nlohmann::json to_json(const Ranking& rk) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& level : rk.levels) levels.push_back(statements(level));
  return {{"levels", std::move(levels)},
          {"infinite", statements(rk.infinite)}};
}

Ranking ranking_from_json(const nlohmann::json& j, std::uint64_t fingerprint) {
  if (!j.is_object() || !j.contains("levels") || !j.contains("infinite"))
    throw std::invalid_argument("ranking needs 'levels' and 'infinite'");
  Ranking rk;
  for (const auto& level : j.at("levels"))
    rk.levels.push_back(statements_from(level));
  if (rk.levels.empty())
    throw std::invalid_argument("ranking has no levels");
  rk.infinite = statements_from(j.at("infinite"));
  rk.graph_fingerprint = fingerprint;
  return rk;
}

std::string Height::to_string() const {
  return is_infinite() ? "inf" : std::to_string(*value_);
}

Conflicts conflicts(const DefeasibleGraph& g) {
  Closure cl(strict_counterpart(g));
  return {cl.empty_classes(), cl.empty_properties()};
}

bool has_conflict(const DefeasibleGraph& g) { return conflicts(g).any(); }

TripleSet exceptional_c(const DefeasibleGraph& g) {
  return only(exceptional(Closure(strict_counterpart(g)), g.defeasible()),
              Vocab::sc);
}

TripleSet exceptional_p(const DefeasibleGraph& g) {
  return only(exceptional(Closure(strict_counterpart(g)), g.defeasible()),
              Vocab::sp);
}

Ranking ranking(const DefeasibleGraph& g) {
  Ranking rk;
  rk.graph_fingerprint = g.fingerprint();
  std::vector<TripleSet> seq{g.defeasible()};
  for (;;) {
    Closure cl(with_strict(g.strict(), seq.back()));
    TripleSet next = exceptional(cl, seq.back());
    if (next == seq.back()) break;
    seq.push_back(std::move(next));
  }
  rk.infinite = seq.back();
  if (seq.size() > 1) seq.pop_back();
  rk.levels = std::move(seq);
  return rk;
}

Reasoner::Reasoner(DefeasibleGraph g)
    : graph_(std::move(g)), ranking_(defrdf::ranking(graph_)) {}

Reasoner::Reasoner(DefeasibleGraph g, Ranking rk)
    : graph_(std::move(g)), ranking_(std::move(rk)) {
  if (ranking_.graph_fingerprint != graph_.fingerprint() ||
      ranking_.levels.empty() || ranking_.levels.front() != graph_.defeasible())
    throw RankingMismatch("ranking does not belong to this graph");
}

template <typename Build>
Closure Reasoner::cached(const std::string& key, Build&& build) const {
  std::lock_guard lock(mutex_);
  auto it = closures_.find(key);
  if (it == closures_.end())
    it = closures_.emplace(key, Closure(build())).first;
  return it->second;
}

// The scan of heights and escapes runs over D_0..D_n and then D_inf when it
// is a proper subset of D_n.
std::size_t Reasoner::last_level() const {
  return ranking_.n() + (ranking_.has_final_level() ? 1 : 0);
}

Closure Reasoner::level_closure(std::size_t i) const {
  return cached("level:" + std::to_string(i), [&] {
    return with_strict(graph_.strict(), ranking_.level_or_infinite(i));
  });
}

Closure Reasoner::strict_closure() const {
  return cached("strict", [&] {
    TripleSet g = graph_.strict();
    for (const auto& t : ranking_.infinite)
      g.insert(self_bottom(t.subject, t.has_predicate(Vocab::sc)));
    return g;
  });
}

Closure Reasoner::escape_closure(std::size_t j, bool classes) const {
  std::string key = "escape:" + std::to_string(j) + (classes ? "c" : "p");
  return cached(key, [&] {
    TripleSet dp;
    const TripleSet& here = ranking_.level_or_infinite(j);
    const TripleSet& above = ranking_.level_or_infinite(j + 1);
    Vocab v = classes ? Vocab::sc : Vocab::sp;
    for (const auto& t : here)
      if (t.has_predicate(v) && !above.count(t)) dp.insert(t);
    return with_strict(graph_.strict(), dp);
  });
}

Height Reasoner::height(const Term& t, bool classes) const {
  Triple bottom = self_bottom(t, classes);
  for (std::size_t i = 0; i <= last_level(); ++i)
    if (!level_closure(i).derives(bottom)) return Height::finite(i);
  return Height::infinite();
}

Height Reasoner::height_c(const Term& t) const { return height(t, true); }
Height Reasoner::height_p(const Term& t) const { return height(t, false); }

bool Reasoner::strict_min_entailment(const Triple& t) const {
  validate(t);
  if (!t.is_strict()) throw MalformedTriple("query must be strict");
  return strict_closure().derives(t);
}

bool Reasoner::def_min_entailment_c(const Triple& q) const {
  require_defeasible(q, Vocab::sc);
  return def_explain(q).entailed;
}

bool Reasoner::def_min_entailment_p(const Triple& q) const {
  require_defeasible(q, Vocab::sp);
  return def_explain(q).entailed;
}

bool Reasoner::min_entails(const Triple& t) const {
  validate(t);
  if (t.is_strict()) return strict_min_entailment(t);
  return def_explain(t).entailed;
}

Explanation Reasoner::def_explain(const Triple& q) const {
  bool classes = q.has_predicate(Vocab::sc);
  Height h = height(q.subject, classes);
  Explanation out;
  if (h.is_infinite()) {
    out.entailed = true;
    out.reason = format_term(q.subject) +
                 " has infinite height; the query holds vacuously";
    out.proof =
        level_closure(last_level()).proof(self_bottom(q.subject, classes));
    return out;
  }
  Closure cl = escape_closure(h.value(), classes);
  Triple goal = q.strict();
  out.entailed = cl.derives(goal);
  out.reason = "height of " + format_term(q.subject) + " is " + h.to_string();
  if (out.entailed) out.proof = cl.proof(goal);
  return out;
}

Explanation Reasoner::explain(const Triple& t) const {
  validate(t);
  if (!t.is_strict()) return def_explain(t);
  Explanation out;
  Closure cl = strict_closure();
  out.entailed = cl.derives(t);
  out.reason = "derivation from the strict part and the infinite-rank "
               "bottoms";
  if (out.entailed) out.proof = cl.proof(t);
  return out;
}

TripleSet Reasoner::min_closure(const TripleSet& candidates) const {
  TripleSet out;
  for (const auto& t : candidates)
    if (min_entails(t)) out.insert(t);
  return out;
}

Height height_c(const DefeasibleGraph& g, const Ranking& rk, const Term& t) {
  return Reasoner(g, rk).height_c(t);
}

Height height_p(const DefeasibleGraph& g, const Ranking& rk, const Term& t) {
  return Reasoner(g, rk).height_p(t);
}

bool strict_min_entailment(const DefeasibleGraph& g, const Ranking& rk,
                           const Triple& t) {
  return Reasoner(g, rk).strict_min_entailment(t);
}

bool def_min_entailment_c(const DefeasibleGraph& g, const Ranking& rk,
                          const Triple& q) {
  return Reasoner(g, rk).def_min_entailment_c(q);
}

bool def_min_entailment_p(const DefeasibleGraph& g, const Ranking& rk,
                          const Triple& q) {
  return Reasoner(g, rk).def_min_entailment_p(q);
}

bool min_entails(const DefeasibleGraph& g, const Ranking& rk,
                 const Triple& t) {
  return Reasoner(g, rk).min_entails(t);
}

TripleSet min_closure(const DefeasibleGraph& g, const TripleSet& candidates) {
  return Reasoner(g).min_closure(candidates);
}

TripleSet default_candidates(const DefeasibleGraph& g) {
  TripleSet out;
  auto uni = g.universe();
  for (const auto& s : uni)
    for (Vocab v : kVocabulary)
      for (const auto& o : uni) {
        out.insert({s, Term::vocab(v), o, Mode::Strict});
        if (v == Vocab::sc || v == Vocab::sp)
          out.insert({s, Term::vocab(v), o, Mode::Defeasible});
      }
  return out;
}

}  // namespace defrdf
