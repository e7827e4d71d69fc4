#include "chainsim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

#include "chainsim/dense_oracle.hpp"
#include "chainsim/experiments.hpp"
#include "chainsim/fermion_analytic.hpp"

namespace chainsim::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kFigures = {"1", "1-inset", "2", "longrange", "baseline"};

bool needs_oracle_only(const RunConfig& c) {
  return c.command == Command::Figure && (c.figure == "longrange" || c.figure == "baseline");
}

std::string describe(const RunConfig& c) {
  std::ostringstream s;
  s << "n=" << resolved_n(c);
  return s.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Parsing

InvalidConfig::InvalidConfig(std::vector<Violation> violations)
    : ConfigError([&] {
        std::string msg = "invalid configuration:";
        for (const auto& v : violations) msg += "\n  - " + v.message;
        return msg;
      }()),
      violations_(std::move(violations)) {}

bool InvalidConfig::resource_only() const {
  return !violations_.empty() &&
         std::all_of(violations_.begin(), violations_.end(),
                     [](const Violation& v) { return v.resource; });
}

int resolved_n(const RunConfig& c) {
  if (c.n) return *c.n;
  return needs_oracle_only(c) || c.command == Command::Verify ? 6 : 21;
}

double resolved_t_max(const RunConfig& c) {
  if (c.t_max) return *c.t_max;
  return c.command == Command::Verify ? 20.0 : 40.0;
}

int resolved_n_points(const RunConfig& c) {
  if (c.n_points) return *c.n_points;
  return c.command == Command::Verify ? 100 : 2000;
}

Command parse_command(std::string_view name) {
  if (name == "transfer") return Command::Transfer;
  if (name == "mqc") return Command::Mqc;
  if (name == "figure") return Command::Figure;
  if (name == "verify") return Command::Verify;
  throw ConfigError("unknown command '" + std::string(name) + "'");
}

CouplingModel parse_model(std::string_view name) {
  if (name == "nn") return CouplingModel::NearestNeighbor;
  if (name == "dipolar") return CouplingModel::Dipolar;
  throw ConfigError("unknown coupling model '" + std::string(name) + "' (nn|dipolar)");
}

Engine parse_engine(std::string_view name) {
  if (name == "analytic") return Engine::Analytic;
  if (name == "oracle") return Engine::Oracle;
  if (name == "both") return Engine::Both;
  throw ConfigError("unknown engine '" + std::string(name) + "' (analytic|oracle|both)");
}

std::string_view to_string(Engine engine) {
  switch (engine) {
    case Engine::Analytic: return "analytic";
    case Engine::Oracle: return "oracle";
    case Engine::Both: return "both";
  }
  return "?";
}

std::map<int, double> parse_state(std::string_view text) {
  std::map<int, double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    int index = 0;
    double weight = 1.0;
    const std::string_view idx_text = item.substr(0, colon);
    auto r = std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), index);
    if (r.ec != std::errc() || r.ptr != idx_text.data() + idx_text.size()) {
      throw ConfigError("bad state entry '" + std::string(item) + "' (expected index[:weight])");
    }
    if (colon != std::string_view::npos) {
      const std::string_view w = item.substr(colon + 1);
      auto rw = std::from_chars(w.data(), w.data() + w.size(), weight);
      if (rw.ec != std::errc() || rw.ptr != w.data() + w.size()) {
        throw ConfigError("bad state weight '" + std::string(w) + "'");
      }
    }
    out[index] += weight;
    pos = comma + 1;
  }
  return out;
}

RunConfig apply_json(RunConfig c, std::string_view raw, std::vector<Violation>& violations) {
  json doc;
  try {
    doc = json::parse(raw.begin(), raw.end());
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, raw.size());
    const auto line = 1 + std::count(raw.begin(), raw.begin() + static_cast<long>(upto), '\n');
    throw ConfigError("config parse error at line " + std::to_string(line) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("config must be a flat JSON object");
  }
  auto bad = [&](const std::string& key, const std::string& what) {
    violations.push_back({"'" + key + "': " + what});
  };
  auto as_int = [&](const std::string& key, const json& v) -> std::optional<int> {
    if (!v.is_number_integer()) {
      bad(key, "expected an integer");
      return std::nullopt;
    }
    return v.get<int>();
  };
  auto as_double = [&](const std::string& key, const json& v) -> std::optional<double> {
    if (!v.is_number()) {
      bad(key, "expected a number");
      return std::nullopt;
    }
    return v.get<double>();
  };
  auto as_string = [&](const std::string& key, const json& v) -> std::optional<std::string> {
    if (!v.is_string()) {
      bad(key, "expected a string");
      return std::nullopt;
    }
    return v.get<std::string>();
  };

  for (const auto& [key, value] : doc.items()) {
    try {
      if (key == "command") {
        if (auto s = as_string(key, value)) c.command = parse_command(*s);
      } else if (key == "figure" || key == "experiment") {
        if (auto s = as_string(key, value)) c.figure = *s;
      } else if (key == "n" || key == "n_spins") {
        if (auto v = as_int(key, value)) c.n = *v;
      } else if (key == "model") {
        if (auto s = as_string(key, value)) c.model = parse_model(*s);
      } else if (key == "d") {
        if (auto v = as_double(key, value)) c.d = *v;
      } else if (key == "exponent") {
        if (auto v = as_double(key, value)) c.exponent = *v;
      } else if (key == "a") {
        if (auto v = as_int(key, value)) c.a = *v;
      } else if (key == "b") {
        if (auto v = as_int(key, value)) c.b = *v;
      } else if (key == "state") {
        if (value.is_string()) {
          c.state = parse_state(value.get<std::string>());
        } else if (value.is_object()) {
          c.state.clear();
          for (const auto& [idx, w] : value.items()) {
            int index = 0;
            auto r = std::from_chars(idx.data(), idx.data() + idx.size(), index);
            if (r.ec != std::errc() || r.ptr != idx.data() + idx.size() || !w.is_number()) {
              bad(key, "entries must map spin index to a number");
              continue;
            }
            c.state[index] = w.get<double>();
          }
        } else {
          bad(key, "expected an object {\"index\": weight} or a string \"1:1,21:1\"");
        }
      } else if (key == "t_max" || key == "tmax") {
        if (auto v = as_double(key, value)) c.t_max = *v;
      } else if (key == "n_points" || key == "points") {
        if (auto v = as_int(key, value)) c.n_points = *v;
      } else if (key == "engine") {
        if (auto s = as_string(key, value)) c.engine = parse_engine(*s);
      } else if (key == "out") {
        if (auto s = as_string(key, value)) c.out = *s;
      } else if (key == "mq_steps") {
        if (auto v = as_int(key, value)) c.mq_steps = *v;
      } else {
        bad(key, "unknown key");
      }
    } catch (const ConfigError& e) {
      bad(key, e.what());
    }
  }
  return c;
}

std::vector<Violation> check_invariants(const RunConfig& c) {
  std::vector<Violation> v;
  const int n = resolved_n(c);
  auto add = [&](std::string msg, bool resource = false) { v.push_back({std::move(msg), resource}); };

  if (n < 2) add("n must be at least 2 (got " + std::to_string(n) + ")");
  if (!std::isfinite(c.d) || c.d == 0.0) add("d must be finite and nonzero");
  if (!(c.exponent > 0.0)) add("exponent must be positive");
  if (!(resolved_t_max(c) > 0.0)) add("t_max must be positive");
  if (resolved_n_points(c) < 2) add("points must be at least 2");
  if (c.mq_steps < 1) add("mq-steps must be at least 1");
  if (c.a < 1 || c.a > n) add("a=" + std::to_string(c.a) + " outside 1.." + std::to_string(n));
  if (c.b && (*c.b < 1 || *c.b > n)) {
    add("b=" + std::to_string(*c.b) + " outside 1.." + std::to_string(n));
  }
  if (!c.state.empty()) {
    bool nonzero = false;
    for (const auto& [idx, w] : c.state) {
      if (idx < 1 || idx > n) {
        add("state index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
      }
      nonzero = nonzero || w != 0.0;
    }
    if (!nonzero) add("state needs at least one nonzero weight");
  }

  if (c.command == Command::Figure &&
      std::find(kFigures.begin(), kFigures.end(), c.figure) == kFigures.end()) {
    add("unknown figure '" + c.figure + "' (1, 1-inset, 2, longrange, baseline)");
  }

  const bool analytic_path = (c.command == Command::Transfer || c.command == Command::Mqc)
                                 ? c.engine != Engine::Oracle
                                 : !needs_oracle_only(c);
  if (analytic_path && c.model == CouplingModel::Dipolar) {
    std::ostringstream msg;
    msg << "engine=" << to_string(c.engine)
        << " requires nearest-neighbor couplings; model=dipolar (exponent=" << c.exponent
        << ") adds long-range terms that make the fermion picture non-quadratic; use "
           "--engine oracle";
    add(msg.str());
  }

  const bool oracle_path = (c.command == Command::Transfer || c.command == Command::Mqc)
                               ? c.engine != Engine::Analytic
                               : (c.command == Command::Verify || needs_oracle_only(c));
  int cap = oracle::kDefaultCap;
  try {
    cap = oracle::oracle_cap();
  } catch (const Error& e) {
    add(e.what());
  }
  if (oracle_path && n > cap) {
    add("n=" + std::to_string(n) + " exceeds the dense oracle cap of " + std::to_string(cap) +
            " (set CHAINSIM_ORACLE_CAP to raise it)",
        true);
  }
  return v;
}

RunConfig validate_config(std::string_view raw, RunConfig base) {
  std::vector<Violation> violations;
  RunConfig c = apply_json(std::move(base), raw, violations);
  auto more = check_invariants(c);
  violations.insert(violations.end(), more.begin(), more.end());
  if (!violations.empty()) throw InvalidConfig(std::move(violations));
  return c;
}

// ---------------------------------------------------------------------------
// Execution

namespace {

using experiments::ExperimentReport;

CouplingTable make_table(const RunConfig& c) {
  const int n = resolved_n(c);
  return c.model == CouplingModel::NearestNeighbor ? nearest_neighbor_couplings(n, c.d)
                                                   : dipolar_couplings(n, c.d, c.exponent);
}

DeviationState make_state(const RunConfig& c) {
  const int n = resolved_n(c);
  if (c.state.empty()) return DeviationState::single(n, c.a);
  return DeviationState(n, c.state);
}

std::string model_label(const RunConfig& c) {
  return c.model == CouplingModel::NearestNeighbor ? "nn" : "dipolar";
}

void compare(const std::string& what, const std::vector<double>& a, const std::vector<double>& b) {
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
  if (!(diff <= experiments::kCrossCheckTolerance)) {
    throw CrossCheckFailure(what + ": engines differ by " + format_double(diff));
  }
}

void fill_metadata(TimeSeries& s, const RunConfig& c, const std::string& state) {
  auto& m = s.metadata();
  m["experiment"] = s.name();
  m["n"] = std::to_string(resolved_n(c));
  m["engine"] = std::string(to_string(c.engine));
  m["model"] = model_label(c);
  m["d"] = format_double(c.d);
  if (c.model == CouplingModel::Dipolar) m["exponent"] = format_double(c.exponent);
  m["state"] = state;
  m["t_max"] = format_double(resolved_t_max(c));
  m["n_points"] = std::to_string(resolved_n_points(c));
}

ExperimentReport run_transfer(const RunConfig& c) {
  const int n = resolved_n(c);
  const int b = c.b.value_or(n);
  const auto t = uniform_grid(resolved_t_max(c), resolved_n_points(c));
  std::vector<double> p_xy, p_dq;
  if (c.engine != Engine::Oracle) {
    p_xy = analytic::polarization_xy_series(c.a, b, n, c.d, t);
    p_dq = analytic::polarization_dq_series(c.a, b, n, c.d, t);
  }
  if (c.engine != Engine::Analytic) {
    const auto table = make_table(c);
    const auto rho0 = oracle::SpinOperator::sigma_z(n, c.a);
    const auto target = oracle::SpinOperator::sigma_z(n, b);
    auto o_xy = oracle::Propagator(oracle::build_hamiltonian(HamiltonianKind::XY, table))
                    .expectation_series(rho0, target, t);
    auto o_dq = oracle::Propagator(oracle::build_hamiltonian(HamiltonianKind::DQ, table))
                    .expectation_series(rho0, target, t);
    if (c.engine == Engine::Both) {
      compare("P_xy", p_xy, o_xy);
      compare("P_dq", p_dq, o_dq);
    } else {
      p_xy = std::move(o_xy);
      p_dq = std::move(o_dq);
    }
  }
  ExperimentReport report;
  report.name = "transfer";
  report.summary["max_P_xy"] = *std::max_element(p_xy.begin(), p_xy.end());
  report.summary["max_abs_P_dq"] = std::abs(*std::max_element(
      p_dq.begin(), p_dq.end(), [](double x, double y) { return std::abs(x) < std::abs(y); }));
  TimeSeries s("transfer", t);
  s.add_channel("P_xy", std::move(p_xy));
  s.add_channel("P_dq", std::move(p_dq));
  fill_metadata(s, c, std::to_string(c.a) + ":1");
  s.metadata()["b"] = std::to_string(b);
  report.series.push_back(std::move(s));
  return report;
}

ExperimentReport run_mqc(const RunConfig& c) {
  const int n = resolved_n(c);
  const auto t = uniform_grid(resolved_t_max(c), resolved_n_points(c));
  const DeviationState state = make_state(c);
  std::string state_text;
  for (const auto& [a, w] : state.weights()) {
    state_text += (state_text.empty() ? "" : ";") + std::to_string(a) + ":" + format_double(w);
  }

  std::map<std::string, std::vector<double>> analytic_channels;
  if (c.engine != Engine::Oracle) {
    for (double tt : t) {
      const auto per_spin = analytic::mqc_intensities_state(state, c.d, tt);
      const auto coll = analytic::mqc_intensities_state_collective(state, c.d, tt);
      analytic_channels["J0"].push_back(per_spin.zero);
      analytic_channels["J2"].push_back(per_spin.double_quantum);
      analytic_channels["J0_collective"].push_back(coll.zero);
      analytic_channels["J2_collective"].push_back(coll.double_quantum);
    }
  }

  std::map<std::string, std::vector<double>> oracle_channels;
  int top_order = 2;
  if (c.engine != Engine::Analytic) {
    top_order = c.model == CouplingModel::NearestNeighbor ? 2 : n - n % 2;
    const int steps = std::max(c.mq_steps, oracle::required_phase_steps(top_order));
    const oracle::Propagator prop(oracle::build_hamiltonian(HamiltonianKind::DQ, make_table(c)));
    const auto rho0 = oracle::SpinOperator::from_state(state);
    const auto z0 = oracle::SpinOperator::total_z(n);
    for (double tt : t) {
      const auto per_spin = oracle::mqc_protocol(prop, rho0, rho0, tt, steps);
      const auto coll = oracle::mqc_protocol(prop, rho0, z0, tt, steps);
      for (int q = 0; q <= top_order; q += 2) {
        oracle_channels["J" + std::to_string(q)].push_back(per_spin.at(q));
        oracle_channels["J" + std::to_string(q) + "_collective"].push_back(coll.at(q));
      }
    }
  }

  auto& channels = c.engine == Engine::Analytic ? analytic_channels : oracle_channels;
  if (c.engine == Engine::Both) {
    for (const auto& [name, values] : analytic_channels) {
      compare(name, values, oracle_channels.at(name));
    }
  }

  ExperimentReport report;
  report.name = "mqc";
  TimeSeries s("mqc", t);
  for (int q = 0; q <= top_order; q += 2) {
    s.add_channel("J" + std::to_string(q), channels.at("J" + std::to_string(q)));
  }
  for (int q = 0; q <= top_order; q += 2) {
    const std::string name = "J" + std::to_string(q) + "_collective";
    s.add_channel(name, channels.at(name));
  }
  const auto& j2 = s.channel("J2");
  report.summary["max_J2"] = *std::max_element(j2.begin(), j2.end());
  fill_metadata(s, c, state_text);
  s.metadata()["mq_steps"] = std::to_string(c.mq_steps);
  report.series.push_back(std::move(s));
  return report;
}

ExperimentReport run_figure(const RunConfig& c) {
  const int n = resolved_n(c);
  const experiments::GridSpec grid{resolved_t_max(c), resolved_n_points(c)};
  if (c.figure == "1") return experiments::figure1_transfer(n, grid, c.d);
  if (c.figure == "1-inset") {
    const int even = n % 2 == 0 ? n : n - 1;
    return experiments::figure1_inset_parity(even, even + 1, grid, c.d);
  }
  if (c.figure == "2") return experiments::figure2_mqc(n, grid, c.d);
  if (c.figure == "longrange") return experiments::longrange_comparison(n, c.exponent, grid, c.d);
  return experiments::dipolar_baseline(n, grid, c.d);
}

}  // namespace

int run(const RunConfig& config, std::ostream& summary, std::ostream& diagnostics) {
  try {
    auto violations = check_invariants(config);
    if (!violations.empty()) throw InvalidConfig(std::move(violations));

    ExperimentReport report;
    std::string label;
    switch (config.command) {
      case Command::Transfer:
        report = run_transfer(config);
        label = "transfer";
        break;
      case Command::Mqc:
        report = run_mqc(config);
        label = "mqc";
        break;
      case Command::Figure:
        report = run_figure(config);
        label = "figure " + config.figure;
        break;
      case Command::Verify:
        report = experiments::verify_engines(
            resolved_n(config), {resolved_t_max(config), resolved_n_points(config)}, config.d);
        label = "verify";
        break;
    }
    const auto written = report.write(config.out);
    summary << label << ": " << describe(config);
    if (config.command == Command::Transfer || config.command == Command::Mqc) {
      summary << " engine=" << to_string(config.engine);
    }
    if (config.command == Command::Verify) {
      summary << (report.summary.at("passed") == 1.0 ? " passed" : " FAILED");
    }
    summary << " -> ";
    for (std::size_t i = 0; i < written.size(); ++i) {
      summary << (i ? ", " : "") << written[i].string();
    }
    summary << '\n';
    if (config.command == Command::Verify && report.summary.at("passed") != 1.0) {
      diagnostics << "verify: analytic and oracle engines disagree beyond "
                  << format_double(experiments::kCrossCheckTolerance) << '\n';
      return exit_code::cross_check;
    }
    return exit_code::ok;
  } catch (const InvalidConfig& e) {
    diagnostics << e.what() << '\n';
    return e.resource_only() ? exit_code::resource : exit_code::usage;
  } catch (const ResourceLimit& e) {
    diagnostics << "resource limit: " << e.what() << '\n';
    return exit_code::resource;
  } catch (const CrossCheckFailure& e) {
    diagnostics << "cross-check failed: " << e.what() << '\n';
    return exit_code::cross_check;
  } catch (const Error& e) {
    diagnostics << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
}

}  // namespace chainsim::cli
