#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "defrdf/closure.hpp"
#include "defrdf/graph.hpp"

namespace defrdf {

// r(G) = {D_0, ..., D_n, D_inf}.
struct Ranking {
  std::vector<TripleSet> levels;  // D_0 .. D_n, strictly decreasing
  TripleSet infinite;             // D_inf
  std::uint64_t graph_fingerprint = 0;

  std::size_t n() const { return levels.size() - 1; }
  // D_i for i <= n, D_inf for i = n + 1.
  const TripleSet& level_or_infinite(std::size_t i) const;
  // D_0 ⊋ D_inf: the last proper level is followed by one more, D_inf.
  bool has_final_level() const { return levels.back() != infinite; }

  friend bool operator==(const Ranking&, const Ranking&) = default;
};

nlohmann::json to_json(const Ranking& rk);
// Throws std::invalid_argument (or ParseError) on malformed input.
Ranking ranking_from_json(const nlohmann::json& j, std::uint64_t fingerprint);

class Height {
 public:
  static Height finite(std::size_t v) { return Height(v); }
  static Height infinite() { return Height(); }

  bool is_infinite() const { return !value_.has_value(); }
  std::size_t value() const { return *value_; }
  std::string to_string() const;

  friend bool operator==(const Height&, const Height&) = default;

 private:
  Height() = default;
  explicit Height(std::size_t v) : value_(v) {}
  std::optional<std::size_t> value_;
};

class RankingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Conflicts {
  std::set<Term> classes;     // t with G^s |- <t,botc,t>
  std::set<Term> properties;  // t with G^s |- <t,botp,t>
  bool any() const { return !classes.empty() || !properties.empty(); }
};

Conflicts conflicts(const DefeasibleGraph& g);
bool has_conflict(const DefeasibleGraph& g);

// Defeasible sc (resp. sp) triples whose subject is empty in G^s.
TripleSet exceptional_c(const DefeasibleGraph& g);
TripleSet exceptional_p(const DefeasibleGraph& g);

Ranking ranking(const DefeasibleGraph& g);

// Why a query was (not) entailed: the graph of the final derivation step and
// its proof when one exists.
struct Explanation {
  bool entailed = false;
  std::string reason;
  std::optional<ProofTree> proof;
};

// A graph with its ranking. Closures of G^str ∪ D_i^s are built on demand and
// cached; queries are safe to run from several threads.
class Reasoner {
 public:
  explicit Reasoner(DefeasibleGraph g);
  // Throws RankingMismatch if rk was computed for another graph.
  Reasoner(DefeasibleGraph g, Ranking rk);

  const DefeasibleGraph& graph() const { return graph_; }
  const Ranking& ranking() const { return ranking_; }

  Height height_c(const Term& t) const;
  Height height_p(const Term& t) const;

  bool strict_min_entailment(const Triple& t) const;
  bool def_min_entailment_c(const Triple& q) const;
  bool def_min_entailment_p(const Triple& q) const;
  bool min_entails(const Triple& t) const;
  Explanation explain(const Triple& t) const;

  TripleSet min_closure(const TripleSet& candidates) const;

 private:
  // Closure of G^str ∪ (D_i)^s; i = n + 1 selects D_inf.
  Closure level_closure(std::size_t i) const;
  // Closure of G': G^str plus bottoms for the subjects of D_inf.
  Closure strict_closure() const;
  // Closure of G^str ∪ (D^p)^s for the level j escape of a query subject.
  Closure escape_closure(std::size_t j, bool classes) const;
  template <typename Build>
  Closure cached(const std::string& key, Build&& build) const;
  Height height(const Term& t, bool classes) const;
  std::size_t last_level() const;
  Explanation def_explain(const Triple& q) const;

  DefeasibleGraph graph_;
  Ranking ranking_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, Closure> closures_;
};

Height height_c(const DefeasibleGraph& g, const Ranking& rk, const Term& t);
Height height_p(const DefeasibleGraph& g, const Ranking& rk, const Term& t);
bool strict_min_entailment(const DefeasibleGraph& g, const Ranking& rk,
                           const Triple& t);
bool def_min_entailment_c(const DefeasibleGraph& g, const Ranking& rk,
                          const Triple& q);
bool def_min_entailment_p(const DefeasibleGraph& g, const Ranking& rk,
                          const Triple& q);
bool min_entails(const DefeasibleGraph& g, const Ranking& rk, const Triple& t);
TripleSet min_closure(const DefeasibleGraph& g, const TripleSet& candidates);

// All strict triples over uni(G) x vocabulary x uni(G), plus their defeasible
// sc/sp variants.
TripleSet default_candidates(const DefeasibleGraph& g);

}  // namespace defrdf
