#include "defrdf/graph.hpp"

#include "defrdf/text_format.hpp"

namespace defrdf {

DefeasibleGraph::DefeasibleGraph(std::initializer_list<Triple> triples) {
  for (const auto& t : triples) insert(t);
}

DefeasibleGraph::DefeasibleGraph(const TripleSet& strict,
                                 const TripleSet& defeasible) {
  for (const auto& t : strict) insert(t);
  for (const auto& t : defeasible) insert(t);
}

bool DefeasibleGraph::insert(const Triple& t) {
  validate(t);
  auto& target = t.is_strict() ? strict_ : defeasible_;
  if (!target.insert(t).second) return false;
  fingerprint_ += triple_fingerprint(t);
  return true;
}

bool DefeasibleGraph::erase(const Triple& t) {
  auto& target = t.is_strict() ? strict_ : defeasible_;
  if (target.erase(t) == 0) return false;
  fingerprint_ -= triple_fingerprint(t);
  return true;
}

bool DefeasibleGraph::contains(const Triple& t) const {
  return (t.is_strict() ? strict_ : defeasible_).count(t) > 0;
}

TripleSet DefeasibleGraph::all() const {
  TripleSet out = strict_;
  out.insert(defeasible_.begin(), defeasible_.end());
  return out;
}

std::set<Term> DefeasibleGraph::universe() const {
  std::set<Term> u = defrdf::universe(strict_);
  for (auto& term : defrdf::universe(defeasible_)) u.insert(term);
  return u;
}

std::set<Term> universe(const TripleSet& g) {
  std::set<Term> u;
  for (const auto& t : g) {
    u.insert(t.subject);
    u.insert(t.object);
    if (!t.predicate.is_vocabulary()) u.insert(t.predicate);
  }
  return u;
}

TripleSet strict_counterpart(const DefeasibleGraph& g) {
  TripleSet out = g.strict();
  for (const auto& t : g.defeasible()) out.insert(t.strict());
  return out;
}

TripleSet strict_counterpart(const TripleSet& defeasible) {
  TripleSet out;
  for (const auto& t : defeasible) out.insert(t.strict());
  return out;
}

std::uint64_t triple_fingerprint(const Triple& t) {
  // FNV-1a over the canonical text, then a splitmix finalizer so that the
  // sum over a set stays well distributed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_triple(t)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

}  // namespace defrdf
