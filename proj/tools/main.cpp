#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "symrank/commands.hpp"
#include "symrank/error.hpp"
#include "symrank/reproduce.hpp"

using namespace symrank;

int main(int argc, char** argv) {
  CLI::App app{"Symmetric tensor-rank decompositions of finite field multiplication"};
  app.require_subcommand(1);

  GlobalOptions g;
  g.workers = std::max(1u, std::thread::hardware_concurrency());
  app.add_flag("--json", g.json, "Emit one JSON document on stdout");
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cap", g.cap, "Element cap for fields and enumerations")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for the random strategy");

  std::function<int()> run;

  std::uint32_t q = 2, m = 2;
  std::optional<std::string> poly, output;

  auto* construct = app.add_subcommand("construct", "Build a decomposition from the closed-form constructions");
  construct->add_option("--q", q)->required();
  construct->add_option("--m", m)->required();
  construct->add_option("--poly", poly, "Field spec JSON");
  construct->add_option("-o,--output", output, "Write the certificate here");
  construct->callback([&] { run = [&] { return cmd_construct(g, q, m, poly, output, std::cout); }; });

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Search for a decomposition with R terms");
  search->add_option("--q", sa.q)->required();
  search->add_option("--m", sa.m)->required();
  search->add_option("--R", sa.R)->required();
  search->add_option("--strategy", sa.strategy)->check(CLI::IsMember({"powers", "exhaustive", "random"}));
  search->add_option("--budget", sa.budget);
  search->add_option("--seed", g.seed);
  search->add_option("--workers", g.workers)->check(CLI::PositiveNumber);
  search->add_option("--hint", sa.hint, "Exponents of the base element tried first")->delimiter(',');
  search->add_option("--poly", sa.poly_file, "Field spec JSON");
  search->add_option("-o,--output", sa.output, "Write the certificate here");
  search->callback([&] { run = [&] { return cmd_search(g, sa, std::cout); }; });

  std::string path;
  auto* verify = app.add_subcommand("verify", "Check a certificate");
  verify->add_option("cert", path)->required();
  verify->callback([&] { run = [&] { return cmd_verify(g, path, std::cout); }; });

  std::uint32_t qmax = 17;
  auto* ftable = app.add_subcommand("ftable", "Leading terms of the m = 3 determinant polynomial");
  ftable->add_option("--m", m)->required();
  ftable->add_option("--qmax", qmax);
  ftable->callback([&] { run = [&] { return cmd_ftable(g, m, qmax, std::cout); }; });

  std::string format = "json";
  std::optional<std::string> cert;
  auto* exp = app.add_subcommand("export", "Export a certificate with its matrices");
  exp->add_option("--format", format)->check(CLI::IsMember({"json", "matrices"}));
  exp->add_option("--cert", cert, "Certificate file (default: construct for --q/--m)");
  exp->add_option("--q", q);
  exp->add_option("--m", m);
  exp->callback([&] { run = [&] { return cmd_export(g, format, cert, q, m, std::cout); }; });

  auto* known = app.add_subcommand("known", "Known interval for the symmetric bilinear complexity");
  known->add_option("--q", q)->required();
  known->add_option("--m", m)->required();
  known->callback([&] { run = [&] { return cmd_known(g, q, m, std::cout); }; });

  std::string target;
  auto* repro = app.add_subcommand("reproduce", "Recompute a reference table or worked example");
  repro->add_option("target", target)->required()->check(CLI::IsMember(reproduce_targets()));
  repro->callback([&] { run = [&] { return cmd_reproduce(g, target, std::cout); }; });

  auto* code = app.add_subcommand("code", "Symmetric rank-metric codes");
  code->require_subcommand(1);
  std::size_t d = 1, rmax = 10;
  std::uint64_t budget = std::uint64_t{1} << 32;
  auto* sqmd = code->add_subcommand("build-sqmd", "Build the symmetric MRD code with minimum distance d");
  sqmd->add_option("--q", q)->required();
  sqmd->add_option("--m", m)->required();
  sqmd->add_option("--d", d)->required();
  sqmd->add_option("-o,--output", output);
  sqmd->callback([&] { run = [&] { return cmd_code_build_sqmd(g, q, m, d, output, std::cout); }; });
  auto* mindist = code->add_subcommand("mindist", "Minimum rank distance by enumeration");
  mindist->add_option("code", path)->required();
  mindist->callback([&] { run = [&] { return cmd_code_mindist(g, path, std::cout); }; });
  auto* mrd = code->add_subcommand("mrd", "Compare the parameters with the Singleton-type bound");
  mrd->add_option("code", path)->required();
  mrd->callback([&] { run = [&] { return cmd_code_mrd(g, path, std::cout); }; });
  auto* strk = code->add_subcommand("strk", "Exact symmetric tensor rank of a code");
  strk->add_option("code", path)->required();
  strk->add_option("--rmax", rmax);
  strk->add_option("--budget", budget);
  strk->callback([&] { run = [&] { return cmd_code_strk(g, path, rmax, budget, std::cout); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ReproductionMismatch ? kExitMismatch : kExitError;
  }
}
