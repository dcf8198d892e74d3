#include "defrdf/proof_tree.hpp"

#include <algorithm>
#include <array>

#include "defrdf/text_format.hpp"

namespace defrdf {

namespace {

constexpr std::array<std::string_view, 15> kLabels = {
    "2a", "2b", "3a", "3b", "4a", "4b", "5a", "5b",
    "5c", "6a", "6b", "6c", "7a", "7b", "leaf"};

bool is(const Triple& t, Vocab v) { return t.has_predicate(v); }

// Shape check for one rule application. Terms are compared structurally.
bool instance_of(Rule rule, const Triple& r, const std::vector<ProofTree>& c) {
  auto arity = [&](std::size_t n) { return c.size() == n; };
  auto k = [&](std::size_t i) -> const Triple& { return c[i].root; };
  switch (rule) {
    case Rule::R2a:
    case Rule::R3a: {
      Vocab v = rule == Rule::R2a ? Vocab::sp : Vocab::sc;
      return arity(2) && is(k(0), v) && is(k(1), v) && is(r, v) &&
             k(0).object == k(1).subject && r.subject == k(0).subject &&
             r.object == k(1).object;
    }
    case Rule::R2b:
      return arity(2) && is(k(0), Vocab::sp) &&
             k(1).predicate == k(0).subject && r.subject == k(1).subject &&
             r.predicate == k(0).object && r.object == k(1).object;
    case Rule::R3b:
      return arity(2) && is(k(0), Vocab::sc) && is(k(1), Vocab::type) &&
             is(r, Vocab::type) && k(1).object == k(0).subject &&
             r.subject == k(1).subject && r.object == k(0).object;
    case Rule::R4a:
    case Rule::R4b: {
      Vocab v = rule == Rule::R4a ? Vocab::dom : Vocab::range;
      if (!arity(2) || !is(k(0), v) || !is(r, Vocab::type)) return false;
      const Term& x = rule == Rule::R4a ? k(1).subject : k(1).object;
      return k(1).predicate == k(0).subject && r.subject == x &&
             r.object == k(0).object;
    }
    case Rule::R5a:
    case Rule::R6a: {
      Vocab v = rule == Rule::R5a ? Vocab::botc : Vocab::botp;
      return arity(1) && is(k(0), v) && is(r, v) &&
             r.subject == k(0).object && r.object == k(0).subject;
    }
    case Rule::R5b:
    case Rule::R6b: {
      Vocab bot = rule == Rule::R5b ? Vocab::botc : Vocab::botp;
      Vocab sub = rule == Rule::R5b ? Vocab::sc : Vocab::sp;
      return arity(2) && is(k(0), bot) && is(k(1), sub) && is(r, bot) &&
             k(1).object == k(0).subject && r.subject == k(1).subject &&
             r.object == k(0).object;
    }
    case Rule::R5c:
    case Rule::R6c: {
      Vocab bot = rule == Rule::R5c ? Vocab::botc : Vocab::botp;
      return arity(1) && is(k(0), bot) && is(r, bot) &&
             k(0).subject == k(0).object && r.subject == k(0).subject;
    }
    case Rule::R7a:
    case Rule::R7b: {
      Vocab v = rule == Rule::R7a ? Vocab::dom : Vocab::range;
      return arity(3) && is(k(0), v) && is(k(1), v) &&
             is(k(2), Vocab::botc) && is(r, Vocab::botp) &&
             k(2).subject == k(0).object && k(2).object == k(1).object &&
             r.subject == k(0).subject && r.object == k(1).subject;
    }
    case Rule::Leaf:
      return c.empty();
  }
  return false;
}

void text_into(const ProofTree& t, std::size_t indent, std::string& out) {
  out.append(indent * 2, ' ');
  out += format_triple(t.root);
  out += "  [";
  out += rule_label(t.rule);
  out += "]\n";
  for (const auto& c : t.children) text_into(c, indent + 1, out);
}

}  // namespace

std::string_view rule_label(Rule r) {
  return kLabels[static_cast<std::size_t>(r)];
}

std::optional<Rule> rule_from_label(std::string_view label) {
  for (std::size_t i = 0; i < kLabels.size(); ++i)
    if (kLabels[i] == label) return static_cast<Rule>(i);
  return std::nullopt;
}

std::size_t ProofTree::depth() const {
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.depth() + 1);
  return d;
}

std::size_t ProofTree::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

TripleSet ProofTree::leaves() const {
  if (children.empty()) return {root};
  TripleSet out;
  for (const auto& c : children) out.merge(c.leaves());
  return out;
}

TripleSet ProofTree::nodes() const {
  TripleSet out{root};
  for (const auto& c : children) out.merge(c.nodes());
  return out;
}

std::string to_text(const ProofTree& tree) {
  std::string out;
  text_into(tree, 0, out);
  return out;
}

nlohmann::json to_json(const ProofTree& tree) {
  nlohmann::json children = nlohmann::json::array();
  for (const auto& c : tree.children) children.push_back(to_json(c));
  return {{"triple", format_triple(tree.root)},
          {"rule", rule_label(tree.rule)},
          {"children", std::move(children)}};
}

std::optional<std::string> check_proof(const ProofTree& tree,
                                       const TripleSet& base) {
  if (!tree.root.is_strict() || triple_fault(tree.root) != TripleFault::None)
    return "ill-formed node " + format_triple(tree.root);
  if (tree.rule == Rule::Leaf) {
    if (!tree.children.empty())
      return "leaf with children at " + format_triple(tree.root);
    if (!base.count(tree.root))
      return "leaf not in graph: " + format_triple(tree.root);
    return std::nullopt;
  }
  if (!instance_of(tree.rule, tree.root, tree.children))
    return "node " + format_triple(tree.root) + " is not an instance of (" +
           std::string(rule_label(tree.rule)) + ")";
  for (const auto& c : tree.children)
    if (auto err = check_proof(c, base)) return err;
  return std::nullopt;
}

}  // namespace defrdf
