#include <iostream>

#include "CLI11.hpp"
#include "alginv_cli/cli.hpp"

int main(int argc, char** argv) {
  using alginv::cli::RunConfig;
  CLI::App app{"alginv: exact invariants of nonassociative algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(alginv::cli::version()));
  RunConfig cfg;
  std::vector<std::string> params;
  int m = 0, max_degree = 0;

  auto common = [&](CLI::App* sub, bool group, bool degrees) {
    sub->add_option("--algebra", cfg.algebra, "catalog tag (e.g. table1:A1) or algebra JSON file");
    sub->add_option("--param", params, "parameter assignments k=v[,k=v...] (rational values)");
    if (group) sub->add_option("--group", cfg.group, "auto, trivial, a built-in group tag or a group JSON file");
    if (degrees) {
      sub->add_option("--m", m, "number of slots");
      sub->add_option("--max-degree", max_degree, "maximal total degree D");
    }
    sub->add_flag("--json", cfg.json, "emit the JSON report");
    sub->add_option("--out", cfg.out, "write the report to a file");
  };

  auto* catalog = app.add_subcommand("catalog", "built-in algebras and groups");
  catalog->add_subcommand("list", "list catalog entries");
  catalog->add_flag("--json", cfg.json, "emit the JSON report");
  catalog->add_option("--out", cfg.out, "write the report to a file");

  auto* algebra = app.add_subcommand("algebra", "inspect an algebra");
  common(algebra->add_subcommand("show", "print the multiplication table"), false, false);

  auto* trace = app.add_subcommand("trace", "operator traces");
  common(trace, false, false);
  trace->add_option("--word", cfg.word, "word such as (x1*x0); without it, the two-dimensional trace table");
  trace->add_option("--m", m, "number of slots");

  auto* aut = app.add_subcommand("aut", "automorphisms");
  aut->require_subcommand(1);
  common(aut->add_subcommand("verify", "check a group acts by automorphisms"), true, false);
  common(aut->add_subcommand("solve", "solve for the automorphism group (dimension 2)"), false, false);

  common(app.add_subcommand("simple", "simplicity test (dimension 2)"), false, false);

  auto* inv = app.add_subcommand("invariants", "invariant rings");
  inv->require_subcommand(1);
  common(inv->add_subcommand("gens", "minimal generating set"), true, true);

  common(app.add_subcommand("api", "compare invariants with the trace subalgebra"), true, true);
  common(app.add_subcommand("forms", "invariant nondegenerate bilinear forms"), true, false);

  auto* verify = app.add_subcommand("verify-all", "run the catalogued checks");
  verify->add_option("--scope", cfg.scope, "traces, aut, simple, gens, api, forms or all");
  verify->add_flag("--json", cfg.json, "emit the JSON report");
  verify->add_option("--out", cfg.out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : alginv::cli::kInputError;
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    for (auto* leaf : sub->get_subcommands()) cfg.action = leaf->get_name();
  }
  for (std::size_t i = 0; i < params.size(); ++i) cfg.params += (i ? "," : "") + params[i];
  if (m != 0) cfg.m = m;
  if (max_degree != 0) cfg.max_degree = max_degree;
  return alginv::cli::run(cfg, std::cout, std::cerr);
}
