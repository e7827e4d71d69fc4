#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chainsim/cli.hpp"

namespace cli = chainsim::cli;

namespace {

struct Flags {
  std::string config_path;
  std::optional<int> n, a, b, points, mq_steps;
  std::optional<double> d, exponent, tmax;
  std::optional<std::string> model, state, engine, out;
};

void add_run_flags(CLI::App& app, Flags& f) {
  app.add_option("--config", f.config_path, "Flat JSON config file; flags override its values");
  app.add_option("--n", f.n, "Number of spins");
  app.add_option("--model", f.model, "Coupling model: nn or dipolar");
  app.add_option("--d", f.d, "Nearest-neighbor coupling (rad/s)");
  app.add_option("--exponent", f.exponent, "Dipolar decay exponent");
  app.add_option("--a", f.a, "Initially polarized spin (1-based)");
  app.add_option("--b", f.b, "Observed spin (1-based, default N)");
  app.add_option("--state", f.state, "Deviation weights, e.g. 1:1,21:1");
  app.add_option("--tmax", f.tmax, "End of the time grid");
  app.add_option("--points", f.points, "Number of time samples");
  app.add_option("--engine", f.engine, "analytic, oracle or both");
  app.add_option("--out", f.out, "Output directory");
  app.add_option("--mq-steps", f.mq_steps, "Phase-cycling steps for the oracle MQC protocol");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw chainsim::ConfigError("cannot read config file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

cli::RunConfig build_config(cli::Command command, const std::string& figure, const Flags& f) {
  cli::RunConfig c;
  c.command = command;
  c.figure = figure;
  std::vector<cli::Violation> violations;
  if (!f.config_path.empty()) {
    c = cli::apply_json(c, read_file(f.config_path), violations);
    c.command = command;
    if (command == cli::Command::Figure && !figure.empty()) c.figure = figure;
  }
  if (f.n) c.n = *f.n;
  if (f.a) c.a = *f.a;
  if (f.b) c.b = *f.b;
  if (f.points) c.n_points = *f.points;
  if (f.mq_steps) c.mq_steps = *f.mq_steps;
  if (f.d) c.d = *f.d;
  if (f.exponent) c.exponent = *f.exponent;
  if (f.tmax) c.t_max = *f.tmax;
  if (f.out) c.out = *f.out;
  try {
    if (f.model) c.model = cli::parse_model(*f.model);
  } catch (const chainsim::ConfigError& e) {
    violations.push_back({e.what()});
  }
  try {
    if (f.engine) c.engine = cli::parse_engine(*f.engine);
  } catch (const chainsim::ConfigError& e) {
    violations.push_back({e.what()});
  }
  try {
    if (f.state) c.state = cli::parse_state(*f.state);
  } catch (const chainsim::ConfigError& e) {
    violations.push_back({e.what()});
  }
  auto more = cli::check_invariants(c);
  violations.insert(violations.end(), more.begin(), more.end());
  if (!violations.empty()) throw cli::InvalidConfig(std::move(violations));
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin-chain polarization transfer and multiple-quantum coherence simulator"};
  app.require_subcommand(1);

  Flags transfer_flags, mqc_flags, figure_flags, verify_flags;
  std::string figure_name;
  auto* transfer = app.add_subcommand("transfer", "P_1N-style transfer curves for XY and DQ chains");
  add_run_flags(*transfer, transfer_flags);
  auto* mqc = app.add_subcommand("mqc", "Zero- and double-quantum intensities under the DQ Hamiltonian");
  add_run_flags(*mqc, mqc_flags);
  auto* figure = app.add_subcommand("figure", "Reproduce a named figure experiment");
  figure->add_option("name", figure_name, "1, 1-inset, 2, longrange or baseline")->required();
  add_run_flags(*figure, figure_flags);
  auto* verify = app.add_subcommand("verify", "Cross-check the analytic and dense engines");
  add_run_flags(*verify, verify_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::exit_code::usage;
  }

  try {
    cli::RunConfig config;
    if (*transfer) config = build_config(cli::Command::Transfer, "", transfer_flags);
    else if (*mqc) config = build_config(cli::Command::Mqc, "", mqc_flags);
    else if (*figure) config = build_config(cli::Command::Figure, figure_name, figure_flags);
    else config = build_config(cli::Command::Verify, "", verify_flags);
    return cli::run(config, std::cout, std::cerr);
  } catch (const cli::InvalidConfig& e) {
    std::cerr << e.what() << '\n';
    return e.resource_only() ? cli::exit_code::resource : cli::exit_code::usage;
  } catch (const chainsim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code::usage;
  }
}
