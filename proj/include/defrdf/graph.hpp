#pragma once

#include <cstdint>
#include <initializer_list>
#include <set>

#include "defrdf/triple.hpp"

namespace defrdf {

// A pair (G^str, G^def). Every member is validated on insertion.
class DefeasibleGraph {
 public:
  DefeasibleGraph() = default;
  DefeasibleGraph(std::initializer_list<Triple> triples);
  DefeasibleGraph(const TripleSet& strict, const TripleSet& defeasible);

  // Returns false if the triple was already present.
  bool insert(const Triple& t);
  bool erase(const Triple& t);
  bool contains(const Triple& t) const;

  const TripleSet& strict() const { return strict_; }
  const TripleSet& defeasible() const { return defeasible_; }
  TripleSet all() const;

  std::size_t size() const { return strict_.size() + defeasible_.size(); }
  bool empty() const { return size() == 0; }

  // uni(G): terms in subject, object and non-reserved predicate positions.
  std::set<Term> universe() const;

  // Order-independent content hash, maintained incrementally.
  std::uint64_t fingerprint() const { return fingerprint_; }

  friend bool operator==(const DefeasibleGraph& a, const DefeasibleGraph& b) {
    return a.strict_ == b.strict_ && a.defeasible_ == b.defeasible_;
  }

 private:
  TripleSet strict_;
  TripleSet defeasible_;
  std::uint64_t fingerprint_ = 0;
};

std::set<Term> universe(const TripleSet& g);

// G^s: every triple of G in strict mode.
TripleSet strict_counterpart(const DefeasibleGraph& g);
TripleSet strict_counterpart(const TripleSet& defeasible);

std::uint64_t triple_fingerprint(const Triple& t);

}  // namespace defrdf
