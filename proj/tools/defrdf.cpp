// defrdf: closure, ranking and minimal entailment over graph files.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "defrdf/cli.hpp"

namespace {

bool read_input(const std::string& file, std::string& out) {
  if (file == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(file, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), {});
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace defrdf::cli;

  CLI::App app{"Reasoner for RDFS with disjointness and defeasible triples"};
  app.require_subcommand(1);

  std::string file;
  std::string query;
  CommandOptions opts;
  std::string cache;

  auto* closure = app.add_subcommand("closure", "print the deductive closure");
  auto* rank = app.add_subcommand("rank", "print the exceptionality ranking");
  auto* entails = app.add_subcommand("entails",
                                     "decide minimal entailment of a triple");
  auto* check = app.add_subcommand("check", "list conflicting terms");

  for (auto* sub : {closure, rank, entails, check}) {
    sub->add_option("FILE", file, "graph file, or - for stdin")->required();
    sub->add_flag("--json", opts.json, "JSON output");
  }
  entails->add_option("QUERY", query, "e.g. \"p sc f ?\"")->required();
  entails->add_flag("--explain", opts.explain, "print the proof");
  for (auto* sub : {rank, entails})
    sub->add_option("--cache", cache, "ranking cache file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }

  std::string text;
  if (!read_input(file, text)) {
    std::cerr << "error: cannot read " << file << "\n";
    return kError;
  }
  opts.source_name = file == "-" ? "<stdin>" : file;
  if (!cache.empty()) opts.cache_path = cache;

  CommandResult r;
  if (closure->parsed())
    r = cmd_closure(text, opts);
  else if (rank->parsed())
    r = cmd_rank(text, opts);
  else if (entails->parsed())
    r = cmd_entails(text, query, opts);
  else
    r = cmd_check(text, opts);

  std::cout << r.payload;
  std::cerr << r.diagnostics;
  return r.exit_code;
}
