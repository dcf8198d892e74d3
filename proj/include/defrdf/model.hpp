#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "defrdf/triple.hpp"

namespace defrdf::model {

// A finite interpretation. Domain elements are labelled by terms; the
// canonical model uses the graph's own terms.
struct Interpretation {
  std::set<Term> resources;       // Δ_R
  std::set<Term> properties;      // Δ_P
  std::set<Term> classes;         // Δ_C
  std::set<Term> literal_values;  // Δ_L
  std::map<Term, std::set<std::pair<Term, Term>>> prop_ext;
  std::map<Term, std::set<Term>> class_ext;
  std::map<Term, Term> denote;

  const std::set<std::pair<Term, Term>>& extension(const Term& p) const;
  const std::set<std::pair<Term, Term>>& vocab_extension(Vocab v) const;
};

struct Violation {
  std::string condition;  // e.g. "Subproperty"
  int item = 0;           // numbered clause within the condition, 0 if none
  std::string detail;

  std::string label() const;
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool empty() const { return violations.empty(); }
  std::size_t count(const std::string& condition) const;
  std::string to_string() const;
};

// Unknown terms make a triple unsatisfied.
bool satisfies(const Interpretation& i, const Triple& t);

// Checks every condition of the satisfaction relation for `g`. Throws
// std::invalid_argument if Δ_R is empty.
ViolationReport check_conditions(const Interpretation& i, const TripleSet& g);

// The canonical interpretation built from Cl(g).
Interpretation canonical_interpretation(const TripleSet& g);

}  // namespace defrdf::model
