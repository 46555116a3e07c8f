// Command-line front end: build family instances, verify them with full
// certificates, and reproduce the reference tables.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or parameter error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "negaconv/families.hpp"
#include "negaconv/serial.hpp"

namespace {

using negaconv::Family;
using negaconv::FamilyInstance;
using negaconv::TableReport;
using negaconv::VerifyOptions;

struct Cli {
  std::string family;
  int q = 0;
  int i = 0;
  int table = 0;
  std::optional<uint64_t> budget;
  std::string format = "text";
  std::string out;
  bool seedless = false;
};

uint64_t effective_budget(const Cli& cli) {
  if (cli.budget) return *cli.budget;
  if (const char* env = std::getenv("NEGACONV_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw std::invalid_argument("NEGACONV_BUDGET is not a number");
    }
  }
  return 1000000;
}

void emit(const Cli& cli, const std::string& text) {
  if (cli.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cli.out);
  if (!f) throw std::invalid_argument("cannot open output path " + cli.out);
  f << text;
}

int cmd_build(const Cli& cli) {
  VerifyOptions opt;
  opt.budget = effective_budget(cli);
  opt.light = true;
  FamilyInstance inst = negaconv::build_family(negaconv::parse_family(cli.family), cli.q, cli.i, opt);
  if (cli.format == "json") {
    emit(cli, negaconv::instance_to_json(inst).dump(2) + "\n");
  } else {
    std::string text = negaconv::family_is_quantum(inst.family)
                           ? inst.quantum_tuple_text() + "\n"
                           : inst.classical_tuple_text() + "\n";
    emit(cli, text);
  }
  return inst.cert.overall_pass() ? 0 : 1;
}

int cmd_verify(const Cli& cli) {
  VerifyOptions opt;
  opt.budget = effective_budget(cli);
  FamilyInstance inst = negaconv::build_family(negaconv::parse_family(cli.family), cli.q, cli.i, opt);
  if (cli.format == "json") {
    emit(cli, negaconv::instance_to_json(inst).dump(2) + "\n");
  } else {
    std::string text = negaconv::family_is_quantum(inst.family)
                           ? inst.classical_tuple_text() + "\nquantum " + inst.quantum_tuple_text() + "\n"
                           : inst.classical_tuple_text() + "\n";
    emit(cli, text + inst.cert.to_text());
  }
  return inst.cert.overall_pass() ? 0 : 1;
}

int cmd_table(const Cli& cli) {
  VerifyOptions opt;
  opt.budget = effective_budget(cli);
  TableReport rep = negaconv::reproduce_table(cli.table, opt);
  if (cli.format == "json") {
    emit(cli, negaconv::table_json(rep).dump(2) + "\n");
  } else if (cli.format == "csv") {
    emit(cli, negaconv::table_csv(rep));
  } else {
    emit(cli, negaconv::table_csv(rep) + "\n" + rep.diff_text());
  }
  return (rep.unexpected == 0 && rep.all_pass) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"negaconv: construct and verify negacyclic MDS convolutional code families"};
  app.require_subcommand(1);
  Cli cli;

  auto add_common = [&](CLI::App* sub, bool needs_family) {
    if (needs_family)
      sub->add_option("--family", cli.family, "family I..V")->required();
    sub->add_option("--budget", cli.budget,
                    "enumeration budget (words / column subsets / search edges)");
    sub->add_option("--format", cli.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cli.out, "output path (default stdout)");
    sub->add_flag("--seedless", cli.seedless,
                  "reserved: the pipeline uses no randomness; flag is rejected");
  };

  CLI::App* build = app.add_subcommand("build", "construct an instance, ranks only");
  add_common(build, true);
  build->add_option("--q", cli.q, "base prime power")->required();
  build->add_option("--i", cli.i, "family index")->required();

  CLI::App* verify = app.add_subcommand("verify", "full verification pipeline");
  add_common(verify, true);
  verify->add_option("--q", cli.q, "base prime power")->required();
  verify->add_option("--i", cli.i, "family index")->required();

  CLI::App* table = app.add_subcommand("table", "reproduce a reference table with a diff");
  add_common(table, false);
  table->add_option("--table", cli.table, "table id (1 classical, 2 quantum)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cli.seedless) {
      std::cerr << "error: --seedless is reserved; the pipeline is deterministic and "
                   "accepts no seed\n";
      return 2;
    }
    if (build->parsed()) return cmd_build(cli);
    if (verify->parsed()) return cmd_verify(cli);
    if (table->parsed()) {
      if (cli.table != 1 && cli.table != 2) {
        std::cerr << "error: unknown table " << cli.table << "\n";
        return 2;
      }
      return cmd_table(cli);
    }
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  }
}
