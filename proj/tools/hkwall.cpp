#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hkwall/report.hpp"
#include "hkwall/verify.hpp"

namespace {

using namespace hkwall;

struct CommonOpts {
  Int genus = 0;
  int div = 1;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool allow_dot) {
  cmd->add_option("--genus", opts.genus, "curve genus g")->required();
  cmd->add_option("--div", opts.div, "divisibility case (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  std::vector<std::string> formats = {"text", "json", "tsv"};
  if (allow_dot) formats.push_back("dot");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember(formats));
  cmd->add_option("--out", opts.out, "output path (default: stdout)");
}

int write_out(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 2;
  }
  os << payload;
  return 0;
}

int run_section(const CommonOpts& opts, const SectionSet& sections) {
  GenusContext ctx = GenusContext::make(
      opts.genus, opts.div == 1 ? DivCase::Div1 : DivCase::Div2);
  const ReportBundle bundle = build_report(ctx, sections);
  std::string payload;
  if (opts.format == "json") {
    payload = emit_json(bundle);
  } else if (opts.format == "tsv") {
    payload = emit_tsv(bundle);
  } else if (opts.format == "dot") {
    payload = emit_chain_dot(*bundle.chain);
  } else {
    payload = emit_text(bundle);
  }
  return write_out(opts.out, payload);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact wall-and-chamber, flop, stratification, fixed-locus and "
      "linearization-sign data for Lagrangian-fibered moduli spaces on a "
      "polarized K3 of genus g"};
  app.require_subcommand(1);

  CommonOpts opts;
  SectionSet pending;

  auto* classes = app.add_subcommand("classes", "distinguished lattice classes");
  add_common(classes, opts, false);
  classes->callback([&] { pending = SectionSet{.classes = true}; });

  auto* walls = app.add_subcommand("walls", "walls of the movable cone");
  add_common(walls, opts, false);
  walls->callback([&] { pending = SectionSet{.walls = true}; });

  auto* strata_cmd = app.add_subcommand("strata", "exceptional-divisor strata");
  add_common(strata_cmd, opts, false);
  strata_cmd->callback([&] { pending = SectionSet{.strata = true}; });

  auto* ledger = app.add_subcommand("ledger", "multiplicity/degree ledger (div 2)");
  add_common(ledger, opts, false);
  ledger->callback([&] { pending = SectionSet{.ledger = true}; });

  auto* fixed_cmd = app.add_subcommand("fixed", "fixed-locus components and signs");
  add_common(fixed_cmd, opts, false);
  fixed_cmd->callback([&] { pending = SectionSet{.fixed = true}; });

  auto* chain = app.add_subcommand("chain", "chain of birational models");
  add_common(chain, opts, true);
  chain->callback([&] { pending = SectionSet{.chain = true}; });

  Int max_genus = 64;
  auto* verify = app.add_subcommand("verify", "run the full invariant suite");
  verify->add_option("--max-genus", max_genus, "sweep all admissible genera up to N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      const auto started = std::chrono::steady_clock::now();
      const VerifyResult result = run_verify(max_genus);
      const auto elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - started)
                               .count();
      for (const auto& f : result.failures) std::cerr << "FAIL: " << f << "\n";
      std::cout << (result.ok ? "ok" : "FAILED") << ": " << result.checks_run
                << " checks, " << result.failures.size() << " failures, max genus "
                << max_genus << " (" << elapsed << " s)\n";
      return result.ok ? 0 : 1;
    }
    return run_section(opts, pending);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
