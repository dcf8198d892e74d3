#include "defrdf/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "defrdf/closure.hpp"
#include "defrdf/defeasible.hpp"
#include "defrdf/text_format.hpp"

namespace defrdf::cli {

namespace {

using nlohmann::json;

struct Loaded {
  std::optional<DefeasibleGraph> graph;
  CommandResult error;
};

Loaded load(std::string_view text, const CommandOptions& opts) {
  Loaded out;
  try {
    out.graph = parse_graph(text);
  } catch (const ParseError& e) {
    out.error.exit_code = kError;
    for (const auto& d : e.diagnostics())
      out.error.diagnostics += opts.source_name + ":" + d.to_string() + "\n";
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

std::optional<Ranking> read_cache(const std::string& path,
                                  const DefeasibleGraph& g,
                                  std::string& diagnostics) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.at("fingerprint").get<std::string>() != hex(g.fingerprint())) {
      diagnostics += "note: ranking cache " + path + " is stale; recomputing\n";
      return std::nullopt;
    }
    Ranking rk = ranking_from_json(j.at("ranking"), g.fingerprint());
    if (rk.levels.front() != g.defeasible()) {
      diagnostics += "note: ranking cache " + path +
                     " does not match the graph; recomputing\n";
      return std::nullopt;
    }
    return rk;
  } catch (const std::exception& e) {
    diagnostics += "warning: ignoring unreadable ranking cache " + path +
                   ": " + e.what() + "\n";
    return std::nullopt;
  }
}

void write_cache(const std::string& path, const DefeasibleGraph& g,
                 const Ranking& rk, std::string& diagnostics) {
  std::ofstream out(path, std::ios::trunc);
  out << dump({{"fingerprint", hex(g.fingerprint())},
               {"ranking", to_json(rk)}});
  if (!out)
    diagnostics += "warning: could not write ranking cache " + path + "\n";
}

Reasoner make_reasoner(DefeasibleGraph g, const CommandOptions& opts,
                       std::string& diagnostics) {
  if (!opts.cache_path) return Reasoner(std::move(g));
  if (auto rk = read_cache(*opts.cache_path, g, diagnostics))
    return Reasoner(std::move(g), std::move(*rk));
  Ranking rk = ranking(g);
  write_cache(*opts.cache_path, g, rk, diagnostics);
  return Reasoner(std::move(g), std::move(rk));
}

void warn_infinite(const Ranking& rk, std::string& diagnostics) {
  if (rk.infinite.empty()) return;
  diagnostics += "warning: " + std::to_string(rk.infinite.size()) +
                 " defeasible triple(s) have infinite rank "
                 "(unresolvable conflict)\n";
}

std::string indented(const TripleSet& s) {
  if (s.empty()) return "  (empty)\n";
  std::string out;
  for (const auto& line : sorted_statements(s)) out += "  " + line + "\n";
  return out;
}

}  // namespace

CommandResult cmd_closure(std::string_view text, const CommandOptions& opts) {
  Loaded in = load(text, opts);
  if (!in.graph) return in.error;
  Closure cl(strict_counterpart(*in.graph));
  CommandResult r;
  TripleSet derived = cl.derived();
  r.payload = opts.json ? dump(sorted_statements(derived))
                        : serialize_triples(derived);
  return r;
}

CommandResult cmd_rank(std::string_view text, const CommandOptions& opts) {
  Loaded in = load(text, opts);
  if (!in.graph) return in.error;
  CommandResult r;
  Reasoner reasoner = make_reasoner(std::move(*in.graph), opts, r.diagnostics);
  const Ranking& rk = reasoner.ranking();
  if (opts.json) {
    r.payload = dump(to_json(rk));
  } else {
    for (std::size_t i = 0; i < rk.levels.size(); ++i)
      r.payload += "level " + std::to_string(i) + ":\n" + indented(rk.levels[i]);
    r.payload += "infinite:\n" + indented(rk.infinite);
  }
  warn_infinite(rk, r.diagnostics);
  return r;
}

CommandResult cmd_entails(std::string_view text, std::string_view query,
                          const CommandOptions& opts) {
  Loaded in = load(text, opts);
  if (!in.graph) return in.error;
  CommandResult r;
  Triple q;
  try {
    q = parse_triple(query);
  } catch (const ParseError& e) {
    r.exit_code = kError;
    for (const auto& d : e.diagnostics())
      r.diagnostics += "query:" + d.to_string() + "\n";
    return r;
  }
  Reasoner reasoner = make_reasoner(std::move(*in.graph), opts, r.diagnostics);
  Explanation ex = reasoner.explain(q);
  r.exit_code = ex.entailed ? kYes : kNo;
  if (opts.json) {
    json j = {{"query", format_triple(q)}, {"entailed", ex.entailed}};
    if (opts.explain) {
      j["reason"] = ex.reason;
      j["proof"] = ex.proof ? to_json(*ex.proof) : json(nullptr);
    }
    r.payload = dump(j);
  } else {
    r.payload = ex.entailed ? "yes\n" : "no\n";
    if (opts.explain && ex.entailed) {
      r.payload += ex.reason + "\n";
      if (ex.proof) r.payload += to_text(*ex.proof);
    }
  }
  return r;
}

CommandResult cmd_check(std::string_view text, const CommandOptions& opts) {
  Loaded in = load(text, opts);
  if (!in.graph) return in.error;
  Conflicts c = conflicts(*in.graph);
  CommandResult r;
  r.exit_code = c.any() ? kNo : kYes;
  if (opts.json) {
    json classes = json::array();
    json properties = json::array();
    for (const auto& t : c.classes) classes.push_back(format_term(t));
    for (const auto& t : c.properties) properties.push_back(format_term(t));
    r.payload = dump({{"conflict", c.any()},
                      {"classes", classes},
                      {"properties", properties}});
  } else if (!c.any()) {
    r.payload = "no conflicts\n";
  } else {
    for (const auto& t : c.classes)
      r.payload += "conflict: " + format_term(t) + " (empty class)\n";
    for (const auto& t : c.properties)
      r.payload += "conflict: " + format_term(t) + " (empty property)\n";
  }
  return r;
}

}  // namespace defrdf::cli
