#include "chainsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>
#include "json.hpp"

#include "chainsim/dense_oracle.hpp"
#include "chainsim/fermion_analytic.hpp"

namespace chainsim::experiments {

namespace {

using nlohmann::json;

void tag(TimeSeries& s, const std::string& experiment, int n, const std::string& engine,
         const std::string& model, const std::string& state, double d, const GridSpec& grid) {
  auto& m = s.metadata();
  m["experiment"] = experiment;
  m["n"] = std::to_string(n);
  m["engine"] = engine;
  m["model"] = model;
  m["state"] = state;
  m["d"] = format_double(d);
  m["t_max"] = format_double(grid.t_max);
  m["n_points"] = std::to_string(grid.n_points);
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void cross_check(const std::string& what, const std::vector<double>& analytic,
                 const std::vector<double>& oracle_values) {
  const double diff = max_abs_diff(analytic, oracle_values);
  if (!(diff <= kCrossCheckTolerance)) {
    throw CrossCheckFailure(what + ": analytic and oracle differ by " + format_double(diff));
  }
}

bool cross_check_enabled(int n) {
  return n <= kCrossCheckMaxSpins && n <= oracle::oracle_cap();
}

// Every stride-th sample, used where the oracle needs a dense rho(t) per point.
std::vector<std::size_t> subsample(std::size_t count, std::size_t max_points = 100) {
  const std::size_t stride = std::max<std::size_t>(1, (count + max_points - 1) / max_points);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < count; i += stride) idx.push_back(i);
  return idx;
}

std::string state_label(const DeviationState& state) {
  std::string out;
  for (const auto& [a, w] : state.weights()) {
    if (!out.empty()) out += ";";
    out += std::to_string(a) + ":" + format_double(w);
  }
  return out;
}

// Oracle MQC intensities (per-spin and collective) of a deviation state under NN H_dq.
struct OracleMqc {
  std::vector<double> j0, j2, j0_collective, j2_collective;
};

OracleMqc oracle_mqc(const DeviationState& state, double d, const std::vector<double>& times) {
  const int n = state.n_spins();
  const oracle::Propagator prop(
      oracle::build_hamiltonian(HamiltonianKind::DQ, nearest_neighbor_couplings(n, d)));
  const auto rho0 = oracle::SpinOperator::from_state(state);
  const auto z0 = oracle::SpinOperator::total_z(n);
  const double self_norm = rho0.normalized_trace_product(rho0).real();
  const double coll_norm = rho0.normalized_trace_product(z0).real();
  OracleMqc out;
  for (double t : times) {
    const auto rho = oracle::coherence_decompose(prop.evolve(rho0, t), 2, 8);
    const auto z = oracle::coherence_decompose(prop.evolve(z0, t), 2, 8);
    out.j0.push_back(rho.intensity(0) / self_norm);
    out.j2.push_back(rho.intensity(2) / self_norm);
    out.j0_collective.push_back(
        rho.components.at(0).normalized_trace_product(z.components.at(0).adjoint()).real() /
        coll_norm);
    out.j2_collective.push_back(
        rho.components.at(2).normalized_trace_product(z.components.at(2).adjoint()).real() /
        coll_norm);
  }
  return out;
}

std::vector<double> pick(const std::vector<double>& v, const std::vector<std::size_t>& idx) {
  std::vector<double> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(v[i]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Report plumbing

const TimeSeries& ExperimentReport::find_series(const std::string& series_name) const {
  for (const auto& s : series) {
    if (s.name() == series_name) return s;
  }
  throw InvalidInput("report '" + name + "' has no series '" + series_name + "'");
}

std::string ExperimentReport::to_json() const {
  json doc;
  doc["experiment"] = name;
  json summary_json = json::object();
  for (const auto& [k, v] : summary) summary_json[k] = v;
  doc["summary"] = summary_json;
  json list = json::array();
  for (const auto& s : series) {
    json entry;
    entry["name"] = s.name();
    entry["metadata"] = s.metadata();
    json labels = json::array();
    for (const auto& [label, values] : s.channels()) labels.push_back(label);
    entry["channels"] = labels;
    entry["n_samples"] = s.t().size();
    list.push_back(entry);
  }
  doc["series"] = list;
  return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> ExperimentReport::write(const std::filesystem::path& dir) const {
  std::vector<std::filesystem::path> written;
  for (const auto& s : series) {
    const auto& m = s.metadata();
    const std::string n = m.count("n") ? m.at("n") : "0";
    const std::string engine = m.count("engine") ? m.at("engine") : "analytic";
    const auto path = dir / (s.name() + "_" + n + "_" + engine + ".csv");
    write_text_file(path, s.to_csv());
    written.push_back(path);
  }
  const auto report_path = dir / (name + ".json");
  write_text_file(report_path, to_json());
  written.push_back(report_path);
  return written;
}

// ---------------------------------------------------------------------------
// Peak helpers

std::vector<std::size_t> local_maxima(const std::vector<double>& y) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i] > y[i - 1] && y[i] >= y[i + 1]) {
      // plateau: only keep it if it eventually descends
      std::size_t j = i;
      while (j + 1 < y.size() && y[j + 1] == y[i]) ++j;
      if (j + 1 < y.size() && y[j + 1] < y[i]) out.push_back(i);
    }
  }
  return out;
}

std::vector<std::size_t> local_minima(const std::vector<double>& y) {
  std::vector<double> neg(y.size());
  std::transform(y.begin(), y.end(), neg.begin(), [](double v) { return -v; });
  return local_maxima(neg);
}

double prominence(const std::vector<double>& y, std::size_t i) {
  double left_min = y[i];
  for (std::size_t j = i; j-- > 0;) {
    if (y[j] > y[i]) break;
    left_min = std::min(left_min, y[j]);
  }
  double right_min = y[i];
  for (std::size_t j = i + 1; j < y.size(); ++j) {
    if (y[j] > y[i]) break;
    right_min = std::min(right_min, y[j]);
  }
  return y[i] - std::max(left_min, right_min);
}

std::vector<std::size_t> prominent_maxima(const std::vector<double>& y, double relative) {
  const auto peaks = local_maxima(y);
  std::vector<double> prom;
  prom.reserve(peaks.size());
  double best = 0.0;
  for (std::size_t i : peaks) {
    prom.push_back(prominence(y, i));
    best = std::max(best, prom.back());
  }
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < peaks.size(); ++p) {
    if (prom[p] >= relative * best && prom[p] > 0.0) out.push_back(peaks[p]);
  }
  return out;
}

std::vector<std::size_t> beat_maxima(const std::vector<double>& y, double floor) {
  const auto peaks = local_maxima(y);
  std::vector<double> prom;
  prom.reserve(peaks.size());
  for (std::size_t i : peaks) prom.push_back(prominence(y, i));
  if (prom.empty()) return {};
  const double best = *std::max_element(prom.begin(), prom.end());
  if (best <= 0.0) return {};
  std::vector<double> sorted;
  for (double p : prom) {
    if (p >= floor * best) sorted.push_back(p);
  }
  std::sort(sorted.rbegin(), sorted.rend());
  double cut = sorted.back();
  double widest = 1.0;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const double ratio = sorted[i] / sorted[i + 1];
    if (ratio > widest) {
      widest = ratio;
      cut = sorted[i];
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < peaks.size(); ++p) {
    if (prom[p] >= cut) out.push_back(peaks[p]);
  }
  return out;
}

double mean_spacing(const std::vector<double>& t, const std::vector<std::size_t>& peaks) {
  if (peaks.size() < 2) return 0.0;
  return (t[peaks.back()] - t[peaks.front()]) / static_cast<double>(peaks.size() - 1);
}

std::optional<std::size_t> first_significant_extremum(const std::vector<double>& y,
                                                      double relative) {
  double scale = 0.0;
  for (double v : y) scale = std::max(scale, std::abs(v));
  auto extrema = local_maxima(y);
  const auto minima = local_minima(y);
  extrema.insert(extrema.end(), minima.begin(), minima.end());
  std::sort(extrema.begin(), extrema.end());
  for (std::size_t i : extrema) {
    if (std::abs(y[i]) >= relative * scale) return i;
  }
  return std::nullopt;
}

std::pair<double, double> refine_maximum(const std::function<double(double)>& f, double lo,
                                         double hi) {
  const auto res = boost::math::tools::brent_find_minima([&](double t) { return -f(t); }, lo, hi,
                                                         std::numeric_limits<double>::digits);
  return {res.first, -res.second};
}

// ---------------------------------------------------------------------------
// Experiments

ExperimentReport figure1_transfer(int n, GridSpec grid, double d) {
  const auto t = uniform_grid(grid.t_max, grid.n_points);
  auto p_xy = analytic::polarization_xy_series(1, n, n, d, t);
  auto p_dq = analytic::polarization_dq_series(1, n, n, d, t);

  std::string engine = "analytic";
  if (cross_check_enabled(n)) {
    const auto table = nearest_neighbor_couplings(n, d);
    const auto rho0 = oracle::SpinOperator::sigma_z(n, 1);
    const auto target = oracle::SpinOperator::sigma_z(n, n);
    cross_check("figure1 P_xy_1N",
                p_xy,
                oracle::Propagator(oracle::build_hamiltonian(HamiltonianKind::XY, table))
                    .expectation_series(rho0, target, t));
    cross_check("figure1 P_dq_1N",
                p_dq,
                oracle::Propagator(oracle::build_hamiltonian(HamiltonianKind::DQ, table))
                    .expectation_series(rho0, target, t));
    engine = "both";
  }

  ExperimentReport report;
  report.name = "figure1_transfer";
  const auto peak = std::max_element(p_xy.begin(), p_xy.end()) - p_xy.begin();
  const double step = t[1] - t[0];
  const auto [t_star, p_star] = refine_maximum(
      [&](double tt) { return analytic::polarization_xy(1, n, n, d, tt); },
      std::max(0.0, t[peak] - step), std::min(grid.t_max, t[peak] + step));
  report.summary["max_abs_diff"] = max_abs_diff(p_xy, p_dq);
  report.summary["peak_transfer"] = p_xy[peak];
  report.summary["peak_time"] = t[peak];
  report.summary["refined_peak_transfer"] = p_star;
  report.summary["refined_peak_time"] = t_star;

  TimeSeries s("figure1_transfer", t);
  s.add_channel("P_xy_1N", std::move(p_xy));
  s.add_channel("P_dq_1N", std::move(p_dq));
  tag(s, report.name, n, engine, "nn", "1:1", d, grid);
  report.series.push_back(std::move(s));
  return report;
}

ExperimentReport figure1_inset_parity(int n_even, int n_odd, GridSpec grid, double d) {
  if (n_even % 2 != 0 || n_odd % 2 != 1) {
    throw InvalidInput("figure1_inset_parity needs an even and an odd chain length");
  }
  const auto t = uniform_grid(grid.t_max, grid.n_points);
  ExperimentReport report;
  report.name = "figure1_inset_parity";
  for (const auto& [n, label] : {std::pair{n_even, std::string("even")},
                                 std::pair{n_odd, std::string("odd")}}) {
    auto p_dq = analytic::polarization_dq_series(1, n, n, d, t);
    std::string engine = "analytic";
    if (cross_check_enabled(n)) {
      cross_check("inset P_dq_1N", p_dq,
                  oracle::Propagator(oracle::build_hamiltonian(HamiltonianKind::DQ,
                                                               nearest_neighbor_couplings(n, d)))
                      .expectation_series(oracle::SpinOperator::sigma_z(n, 1),
                                          oracle::SpinOperator::sigma_z(n, n), t));
      engine = "both";
    }
    const auto first = first_significant_extremum(p_dq);
    double sign = 0.0;
    if (first) {
      sign = p_dq[*first] > 0 ? 1.0 : -1.0;
      report.summary["first_extremum_time_" + label] = t[*first];
      report.summary["first_extremum_value_" + label] = p_dq[*first];
    }
    report.summary["sign_" + label] = sign;
    report.summary["n_" + label] = n;

    TimeSeries s("figure1_inset_" + label, t);
    s.add_channel("P_dq_1N", std::move(p_dq));
    tag(s, report.name, n, engine, "nn", "1:1", d, grid);
    report.series.push_back(std::move(s));
  }
  report.summary["signs_differ"] =
      report.summary["sign_even"] * report.summary["sign_odd"] < 0 ? 1.0 : 0.0;
  return report;
}

ExperimentReport figure2_mqc(int n, GridSpec grid, double d) {
  const auto t = uniform_grid(grid.t_max, grid.n_points);
  const DeviationState ends = DeviationState::both_ends(n);
  const DeviationState first = DeviationState::single(n, 1);
  const ModeGrid modes = mode_grid(n);
  const auto ends0 = analytic::initial_observable(ends, modes);

  std::vector<double> j0, j2, j0c, j2c, j0_single, j2_single, p_n_state;
  for (double tt : t) {
    const auto a = analytic::mqc_intensities_state(ends, d, tt);
    const auto c = analytic::mqc_intensities_state_collective(ends, d, tt);
    const auto s = analytic::mqc_intensities(1, n, d, tt);
    j0.push_back(a.zero);
    j2.push_back(a.double_quantum);
    j0c.push_back(c.zero);
    j2c.push_back(c.double_quantum);
    j0_single.push_back(s.zero);
    j2_single.push_back(s.double_quantum);
    p_n_state.push_back(analytic::site_polarization(analytic::evolve_dq(ends0, d, tt), n));
  }
  auto p_1n = analytic::polarization_xy_series(1, n, n, d, t);

  std::string engine = "analytic";
  if (cross_check_enabled(n)) {
    const auto idx = subsample(t.size());
    const auto sub_t = pick(t, idx);
    const auto ends_mqc = oracle_mqc(ends, d, sub_t);
    const auto single_mqc = oracle_mqc(first, d, sub_t);
    cross_check("figure2 J0", pick(j0, idx), ends_mqc.j0);
    cross_check("figure2 J2", pick(j2, idx), ends_mqc.j2);
    cross_check("figure2 J0 collective", pick(j0c, idx), ends_mqc.j0_collective);
    cross_check("figure2 J2 collective", pick(j2c, idx), ends_mqc.j2_collective);
    cross_check("figure2 J0 single", pick(j0_single, idx), single_mqc.j0);
    cross_check("figure2 J2 single", pick(j2_single, idx), single_mqc.j2);
    cross_check("figure2 P_1N", p_1n,
                oracle::Propagator(oracle::build_hamiltonian(HamiltonianKind::XY,
                                                             nearest_neighbor_couplings(n, d)))
                    .expectation_series(oracle::SpinOperator::sigma_z(n, 1),
                                        oracle::SpinOperator::sigma_z(n, n), t));
    engine = "both";
  }

  ExperimentReport report;
  report.name = "figure2_mqc";
  const double step = t[1] - t[0];
  const auto beats = beat_maxima(j0);
  const auto beats_single = beat_maxima(j0_single);
  const double period = mean_spacing(t, beats);
  const double period_single = mean_spacing(t, beats_single);
  report.summary["grid_step"] = step;
  report.summary["beat_count"] = static_cast<double>(beats.size());
  report.summary["beat_count_single_end"] = static_cast<double>(beats_single.size());
  report.summary["beat_period"] = period;
  report.summary["beat_period_single_end"] = period_single;
  report.summary["beat_period_ratio"] = period_single > 0 ? period / period_single : 0.0;
  report.summary["period_halving_error"] = std::abs(period - 0.5 * period_single);
  report.summary["period_halved_within_step"] =
      std::abs(period - 0.5 * period_single) <= step ? 1.0 : 0.0;
  for (std::size_t b = 0; b < beats.size() && b < 8; ++b) {
    report.summary["beat_time_" + std::to_string(b + 1)] = t[beats[b]];
  }

  const auto transfer_peaks = local_maxima(p_1n);
  const auto arrivals = prominent_maxima(p_1n);
  for (std::size_t b = 0; b < arrivals.size() && b < 4; ++b) {
    report.summary["transfer_arrival_" + std::to_string(b + 1)] = t[arrivals[b]];
  }
  double worst_offset = 0.0;
  std::size_t checked = 0;
  for (std::size_t b = 1; b < beats.size(); b += 2) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t p : transfer_peaks) nearest = std::min(nearest, std::abs(t[p] - t[beats[b]]));
    worst_offset = std::max(worst_offset, nearest);
    ++checked;
  }
  report.summary["aligned_beats_checked"] = static_cast<double>(checked);
  report.summary["max_alignment_offset"] = checked ? worst_offset : 0.0;
  report.summary["every_second_beat_aligned"] =
      checked > 0 && worst_offset <= step * (1 + 1e-9) ? 1.0 : 0.0;

  double sum_rule = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    sum_rule = std::max({sum_rule, std::abs(j0[i] + 2 * j2[i] - 1.0),
                         std::abs(j0c[i] + 2 * j2c[i] - 1.0),
                         std::abs(j0_single[i] + 2 * j2_single[i] - 1.0)});
  }
  report.summary["sum_rule_max_error"] = sum_rule;

  TimeSeries s("figure2_mqc", t);
  s.add_channel("J0", std::move(j0));
  s.add_channel("J2", std::move(j2));
  s.add_channel("J0_collective", std::move(j0c));
  s.add_channel("J2_collective", std::move(j2c));
  s.add_channel("J0_single_end", std::move(j0_single));
  s.add_channel("J2_single_end", std::move(j2_single));
  s.add_channel("P_1N", std::move(p_1n));
  s.add_channel("P_N_state", std::move(p_n_state));
  tag(s, report.name, n, engine, "nn", state_label(ends), d, grid);
  report.series.push_back(std::move(s));
  return report;
}

ExperimentReport longrange_comparison(int n, double exponent, GridSpec grid, double d) {
  oracle::require_within_cap(n);
  const auto t = uniform_grid(grid.t_max, grid.n_points);
  const auto nn = nearest_neighbor_couplings(n, d);
  const auto lr = dipolar_couplings(n, d, exponent);
  const auto rho0 = oracle::SpinOperator::sigma_z(n, 1);
  const auto target = oracle::SpinOperator::sigma_z(n, n);
  const oracle::Propagator prop_nn(oracle::build_hamiltonian(HamiltonianKind::DQ, nn));
  const oracle::Propagator prop_lr(oracle::build_hamiltonian(HamiltonianKind::DQ, lr));
  auto p_nn = prop_nn.expectation_series(rho0, target, t);
  auto p_lr = prop_lr.expectation_series(rho0, target, t);

  if (cross_check_enabled(n)) {
    cross_check("longrange NN P_dq_1N", analytic::polarization_dq_series(1, n, n, d, t), p_nn);
  }

  ExperimentReport report;
  report.name = "longrange_comparison";
  double nn_peak = 0.0;
  for (double v : p_nn) nn_peak = std::max(nn_peak, std::abs(v));
  auto first_arrival = [&](const std::vector<double>& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (std::abs(p[i]) > 0.5 * nn_peak) return t[i];
    }
    return -1.0;
  };
  report.summary["exponent"] = exponent;
  report.summary["first_arrival_nn"] = first_arrival(p_nn);
  report.summary["first_arrival_longrange"] = first_arrival(p_lr);
  report.summary["max_deviation"] = max_abs_diff(p_nn, p_lr);

  // Highest coherence order reached, sampled on a coarse subset of the grid.
  int order_nn = 0;
  int order_lr = 0;
  for (std::size_t i : subsample(t.size(), 20)) {
    order_nn = std::max(order_nn, oracle::max_coherence_order(prop_nn.evolve(rho0, t[i]), 1e-10));
    order_lr = std::max(order_lr, oracle::max_coherence_order(prop_lr.evolve(rho0, t[i]), 1e-10));
  }
  report.summary["max_order_nn"] = order_nn;
  report.summary["max_order_longrange"] = order_lr;

  TimeSeries s("longrange_comparison", t);
  s.add_channel("P_dq_1N_nn", std::move(p_nn));
  s.add_channel("P_dq_1N_longrange", std::move(p_lr));
  tag(s, report.name, n, "oracle", "dipolar", "1:1", d, grid);
  s.metadata()["exponent"] = format_double(exponent);
  report.series.push_back(std::move(s));
  return report;
}

ExperimentReport dipolar_baseline(int n, GridSpec grid, double d) {
  oracle::require_within_cap(n);
  const auto t = uniform_grid(grid.t_max, grid.n_points);
  const auto table = nearest_neighbor_couplings(n, d);
  TimeSeries s = oracle::dipolar_transport_baseline(n, table, t);
  auto p_xy = oracle::Propagator(oracle::build_hamiltonian(HamiltonianKind::XY, table))
                  .expectation_series(oracle::SpinOperator::sigma_z(n, 1),
                                      oracle::SpinOperator::sigma_z(n, n), t);
  if (cross_check_enabled(n)) {
    cross_check("baseline P_xy_1N", analytic::polarization_xy_series(1, n, n, d, t), p_xy);
  }
  ExperimentReport report;
  report.name = "dipolar_baseline";
  const auto& p_dip = s.channel("P_1N_dipolar");
  report.summary["max_P_1N_dipolar"] = *std::max_element(p_dip.begin(), p_dip.end());
  report.summary["max_P_1N_xy"] = *std::max_element(p_xy.begin(), p_xy.end());
  s.add_channel("P_1N_xy", std::move(p_xy));
  tag(s, report.name, n, "oracle", "nn", "1:1", d, grid);
  report.series.push_back(std::move(s));
  return report;
}

}  // namespace chainsim::experiments

namespace chainsim::experiments {

ExperimentReport verify_engines(int n, GridSpec grid, double d, double tolerance) {
  oracle::require_within_cap(n);
  const auto t = uniform_grid(grid.t_max, grid.n_points);
  const auto table = nearest_neighbor_couplings(n, d);
  const oracle::Propagator xy(oracle::build_hamiltonian(HamiltonianKind::XY, table));
  const oracle::Propagator dq(oracle::build_hamiltonian(HamiltonianKind::DQ, table));

  double dev_pxy = 0.0, dev_pdq = 0.0;
  for (int a = 1; a <= n; ++a) {
    const auto rho0 = oracle::SpinOperator::sigma_z(n, a);
    for (int b = 1; b <= n; ++b) {
      const auto target = oracle::SpinOperator::sigma_z(n, b);
      dev_pxy = std::max(dev_pxy, max_abs_diff(analytic::polarization_xy_series(a, b, n, d, t),
                                               xy.expectation_series(rho0, target, t)));
      dev_pdq = std::max(dev_pdq, max_abs_diff(analytic::polarization_dq_series(a, b, n, d, t),
                                               dq.expectation_series(rho0, target, t)));
    }
  }

  double dev_j0 = 0.0, dev_j2 = 0.0, dev_c0 = 0.0, dev_c2 = 0.0;
  std::vector<oracle::Propagator::PreparedState> initial;
  for (int a = 1; a <= n; ++a) initial.push_back(dq.prepare(oracle::SpinOperator::sigma_z(n, a)));
  const auto z0 = oracle::SpinOperator::total_z(n);
  const auto z0_prepared = dq.prepare(z0);
  for (double tt : t) {
    const auto z = oracle::coherence_decompose(dq.evolve(z0_prepared, tt), 2, 8);
    for (int a = 1; a <= n; ++a) {
      const auto rho = oracle::coherence_decompose(dq.evolve(initial[a - 1], tt), 2, 8);
      const auto per_spin = analytic::mqc_intensities(a, n, d, tt);
      const auto collective = analytic::mqc_intensities_collective(a, n, d, tt);
      dev_j0 = std::max(dev_j0, std::abs(per_spin.zero - rho.intensity(0)));
      // the two double-quantum orders must carry equal weight
      dev_j2 = std::max({dev_j2, std::abs(per_spin.double_quantum - rho.intensity(2)),
                         std::abs(per_spin.double_quantum - rho.intensity(-2))});
      for (int q : {-2, 0, 2}) {
        const double oracle_value =
            rho.components.at(q).normalized_trace_product(z.components.at(q).adjoint()).real();
        const double analytic_value = q == 0 ? collective.zero : collective.double_quantum;
        double& dev = q == 0 ? dev_c0 : dev_c2;
        dev = std::max(dev, std::abs(analytic_value - oracle_value));
      }
    }
  }

  // Phase-encoded experiment vs analytic, on a subset of the grid.
  double dev_protocol = 0.0;
  const auto rho1 = oracle::SpinOperator::sigma_z(n, 1);
  for (std::size_t i : subsample(t.size(), 10)) {
    const auto spectrum = oracle::mqc_protocol(dq, rho1, rho1, t[i], 8);
    const auto coll = oracle::mqc_protocol(dq, rho1, z0, t[i], 8);
    const auto per_spin = analytic::mqc_intensities(1, n, d, t[i]);
    const auto collective = analytic::mqc_intensities_collective(1, n, d, t[i]);
    dev_protocol = std::max({dev_protocol, std::abs(spectrum.at(0) - per_spin.zero),
                             std::abs(spectrum.at(2) - per_spin.double_quantum),
                             std::abs(spectrum.at(-2) - per_spin.double_quantum),
                             std::abs(coll.at(0) - collective.zero),
                             std::abs(coll.at(2) - collective.double_quantum)});
  }

  ExperimentReport report;
  report.name = "verify";
  report.summary["n"] = n;
  report.summary["tolerance"] = tolerance;
  report.summary["max_dev_P_xy"] = dev_pxy;
  report.summary["max_dev_P_dq"] = dev_pdq;
  report.summary["max_dev_J0"] = dev_j0;
  report.summary["max_dev_J2"] = dev_j2;
  report.summary["max_dev_J0_collective"] = dev_c0;
  report.summary["max_dev_J2_collective"] = dev_c2;
  report.summary["max_dev_protocol"] = dev_protocol;
  const double worst =
      std::max({dev_pxy, dev_pdq, dev_j0, dev_j2, dev_c0, dev_c2, dev_protocol});
  report.summary["max_dev"] = worst;
  report.summary["passed"] = worst <= tolerance ? 1.0 : 0.0;
  return report;
}

}  // namespace chainsim::experiments
