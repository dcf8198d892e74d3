#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "defrdf/triple.hpp"

namespace defrdf {

// Rules in firing order; Leaf marks a triple taken from the input graph.
enum class Rule : std::uint8_t {
  R2a, R2b, R3a, R3b, R4a, R4b,
  R5a, R5b, R5c, R6a, R6b, R6c,
  R7a, R7b,
  Leaf,
};

std::string_view rule_label(Rule r);
std::optional<Rule> rule_from_label(std::string_view label);

struct ProofTree {
  Triple root;
  Rule rule = Rule::Leaf;
  std::vector<ProofTree> children;

  // Leaves have depth 0.
  std::size_t depth() const;
  std::size_t size() const;
  TripleSet leaves() const;
  TripleSet nodes() const;
};

// Indented text, one node per line: "<triple>  [rule]".
std::string to_text(const ProofTree& tree);
nlohmann::json to_json(const ProofTree& tree);

// Checks that every leaf is in `base` and every internal node is an instance
// of its rule. Returns a description of the first problem found.
std::optional<std::string> check_proof(const ProofTree& tree,
                                       const TripleSet& base);

}  // namespace defrdf
