#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>

#include "defrdf/proof_tree.hpp"
#include "defrdf/triple.hpp"

namespace defrdf {

// Cl(G) of a strict graph under rules (2)-(7), materialized by a round-based
// semi-naive fixpoint. The exhaustive rules (5c)/(6c) are instantiated over
// uni(G); derives() answers out-of-universe queries lazily. Immutable and
// cheap to copy once built.
class Closure {
 public:
  // Throws MalformedTriple if any member is defeasible or ill-formed.
  explicit Closure(const TripleSet& graph);

  const TripleSet& base() const;
  TripleSet derived() const;
  std::size_t size() const;

  // Membership in the materialized set.
  bool contains(const Triple& t) const;
  // G |- t. Throws MalformedTriple for a defeasible or ill-formed query.
  bool derives(const Triple& t) const;
  // A minimal-depth proof, or nullopt iff !derives(t).
  std::optional<ProofTree> proof(const Triple& t) const;

  // Terms t of uni(G) with <t,botc,t> (resp. <t,botp,t>) in Cl(G).
  std::set<Term> empty_classes() const;
  std::set<Term> empty_properties() const;
  bool is_empty_class(const Term& t) const;
  bool is_empty_property(const Term& t) const;

  // The class and property domains of the canonical model.
  std::set<Term> class_terms() const;
  std::set<Term> property_terms() const;

  const std::set<Term>& universe() const;
  // Number of rule rounds until the fixpoint (maximum proof depth).
  std::size_t rounds() const;

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

bool derives(const TripleSet& g, const Triple& t);
std::optional<ProofTree> proof_tree(const TripleSet& g, const Triple& t);
std::set<Term> empty_classes(const TripleSet& g);
std::set<Term> empty_properties(const TripleSet& g);

}  // namespace defrdf
