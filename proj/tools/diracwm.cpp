#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "diracwm/cli.hpp"

using namespace diracwm;

int main(int argc, char** argv) {
  CLI::App app{"Dirac cohomology, nilradical cohomology, indices and EP pairings of weight modules"};
  std::string command, config, format = "csv", out;
  unsigned parallel = 1;
  app.add_option("command", command, "describe | cohomology | dirac | index | pair | verify")
      ->required()
      ->check(CLI::IsMember({"describe", "cohomology", "dirac", "index", "pair", "verify"}));
  app.add_option("--config", config, "job file")->required();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "jsonl"}));
  app.add_option("--parallel", parallel, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--out", out, "output file (default stdout)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  cli::Report rep;
  try {
    std::ifstream in(config);
    if (!in) throw std::invalid_argument("cannot read " + config);
    std::stringstream ss;
    ss << in.rdbuf();
    auto cfg = cli::parse_config(ss.str());
    if (cli::to_string(cfg.command.name) != command)
      throw std::invalid_argument("command '" + command + "' does not match the config ([command] name = " +
                                  cli::to_string(cfg.command.name) + ")");
    rep = cli::execute(cfg, parallel);
  } catch (const cli::ConfigError& e) {
    std::cerr << config << ": " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  }

  std::string bytes = cli::emit_report(rep, cli::parse_format(format));
  if (out.empty()) {
    std::cout << bytes;
  } else {
    std::ofstream os(out, std::ios::binary);
    os << bytes;
    if (!os) {
      std::cerr << "error: cannot write " << out << "\n";
      return 1;
    }
  }
  if (!rep.verified) {
    std::cerr << "verification mismatch\n";
    return 3;
  }
  return 0;
}
