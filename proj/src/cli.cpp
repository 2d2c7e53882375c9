#include <fstream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "sirsvk/commands.hpp"

namespace sirsvk {

namespace {

struct Options {
  std::string config_path;
  std::string out_path;
  int paper_figure = 0;  // 0: none
  bool dump = false;
};

void add_common(CLI::App& cmd, Options& opts) {
  cmd.add_option("--config", opts.config_path, "Config document (flat JSON)");
  cmd.add_option("--out", opts.out_path, "Output file (default: stdout)");
  cmd.add_option("--paper-figure", opts.paper_figure, "Load the defaults of figure 2-6")
      ->check(CLI::Range(2, 6));
  cmd.add_flag("--dump-config", opts.dump, "Print the resolved config and exit");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulation and analysis of the SIRS-V_kappa epidemic model"};
  app.require_subcommand(1);
  Options opts;
  auto* simulate = app.add_subcommand("simulate", "Integrate one trajectory (t,S,I,R,V)");
  auto* analyze = app.add_subcommand("analyze", "Equilibria, R0 and the stability verdict");
  auto* sweep = app.add_subcommand("sweep", "Run a kappa sweep experiment");
  auto* compare = app.add_subcommand("compare", "SIRS vs SIRSV vs SIRS-V_kappa trajectories");
  for (auto* cmd : {simulate, analyze, sweep, compare}) {
    add_common(*cmd, opts);
  }

  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    const std::string text = opts.config_path.empty() ? "" : read_file(opts.config_path);
    RunConfig cfg = load_run_config(
        text, opts.paper_figure != 0 ? std::optional<int>(opts.paper_figure) : std::nullopt);
    if (compare->parsed() && !cfg.experiment) {
      RunConfig base = config_from_experiment(default_experiment(ExperimentId::ModelCompare));
      cfg = parse_config(text.empty() ? "{}" : text, base);
    }
    if (!opts.out_path.empty()) {
      cfg.output = opts.out_path;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    if (opts.dump) {
      buffer << dump_config(cfg);
    } else if (simulate->parsed()) {
      code = cmd_simulate(cfg, buffer);
    } else if (analyze->parsed()) {
      code = cmd_analyze(cfg, buffer);
    } else if (sweep->parsed()) {
      code = cmd_sweep(cfg, buffer, err);
    } else {
      code = cmd_compare(cfg, buffer);
    }

    if (cfg.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
      if (!file) {
        throw ConfigError("cannot open output file '" + cfg.output + "'");
      }
      file << buffer.str();
    }
    return code;
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace sirsvk
