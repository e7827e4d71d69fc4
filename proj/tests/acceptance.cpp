// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "chainsim/cli.hpp"
#include "chainsim/dense_oracle.hpp"
#include "chainsim/experiments.hpp"
#include "chainsim/fermion_analytic.hpp"

using namespace chainsim;
using oracle::SpinOperator;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

double max_entry(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const auto r = experiments::verify_engines(n, {20.0, 100});
    worst = std::max(worst, r.summary.at("max_dev"));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-10 && elapsed < 60.0,
          "max deviation " + fmt(worst) + " over N=2..8, " + fmt(elapsed) + " s"};
}

Outcome conjugation_identity() {
  double worst_nn = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const auto table = nearest_neighbor_couplings(n, 1.0);
    const auto u = oracle::similarity_transform(n);
    const auto mapped = u * oracle::build_hamiltonian(HamiltonianKind::DQ, table) * u.adjoint();
    worst_nn = std::max(worst_nn, max_entry(mapped.matrix() - oracle::build_hamiltonian(HamiltonianKind::XY, table).matrix()));
  }
  const auto lr = dipolar_couplings(6, 1.0, 3.0);
  const auto u = oracle::similarity_transform(6);
  const auto mapped = u * oracle::build_hamiltonian(HamiltonianKind::DQ, lr) * u.adjoint();
  const double lr_gap = max_entry(mapped.matrix() - oracle::build_hamiltonian(HamiltonianKind::XY, lr).matrix());
  return {worst_nn < 1e-12 && lr_gap >= 1e-3,
          "NN residual " + fmt(worst_nn) + " (N<=10), power-law residual " + fmt(lr_gap)};
}

Outcome parity_relation() {
  const auto t = uniform_grid(20.0, 200);
  double worst = 0.0;
  for (int n : {6, 7}) {
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        const auto xy = analytic::polarization_xy_series(a, b, n, 1.0, t);
        const auto dq = analytic::polarization_dq_series(a, b, n, 1.0, t);
        for (std::size_t i = 0; i < t.size(); ++i) {
          worst = std::max(worst, std::abs(xy[i] - std::abs(dq[i])));
          if ((b - a) % 2 == 0) worst = std::max(worst, std::abs(xy[i] - dq[i]));
        }
      }
    }
  }
  return {worst < 1e-12, "max deviation " + fmt(worst)};
}

Outcome perfect_transfer() {
  auto p = [](int n) { return [n](double t) { return analytic::polarization_xy(1, n, n, 1.0, t); }; };
  const auto [t2, p2] = experiments::refine_maximum(p(2), 1.0, 2.0);
  const auto [t3, p3] = experiments::refine_maximum(p(3), 1.5, 3.0);
  const double want2 = std::numbers::pi / 2.0;
  const double want3 = std::numbers::pi / std::sqrt(2.0);
  bool ok = std::abs(p2 - 1.0) <= 1e-9 && std::abs(p3 - 1.0) <= 1e-9 &&
            std::abs(t2 - want2) < 1e-6 && std::abs(t3 - want3) < 1e-6;
  std::string detail = "N=2 max " + fmt(p2) + " at " + fmt(t2) + ", N=3 max " + fmt(p3) + " at " + fmt(t3);
  const auto grid = uniform_grid(40.0, 40001);
  double worst = 0.0;
  for (int n = 4; n <= 8; ++n) {
    const auto curve = analytic::polarization_xy_series(1, n, n, 1.0, grid);
    worst = std::max(worst, *std::max_element(curve.begin(), curve.end()));
  }
  ok = ok && worst < 0.999;
  return {ok, detail + ", N=4..8 max " + fmt(worst)};
}

Outcome sum_rule() {
  const auto t = uniform_grid(40.0, 2000);
  double worst = 0.0;
  bool initial_ok = true;
  for (int n : {2, 3, 8, 21}) {
    for (int a = 1; a <= n; ++a) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        const auto j = analytic::mqc_intensities(a, n, 1.0, t[i]);
        const auto c = analytic::mqc_intensities_collective(a, n, 1.0, t[i]);
        worst = std::max({worst, std::abs(j.zero + 2.0 * j.double_quantum - 1.0),
                          std::abs(c.zero + 2.0 * c.double_quantum - 1.0)});
        if (i == 0) {
          initial_ok = initial_ok && std::abs(j.zero - 1.0) < 1e-12 && std::abs(j.double_quantum) < 1e-12 &&
                       std::abs(c.zero - 1.0) < 1e-12 && std::abs(c.double_quantum) < 1e-12;
        }
      }
    }
  }
  return {worst <= 1e-12 && initial_ok, "max |J0 + 2 J2 - 1| = " + fmt(worst)};
}

Outcome coherence_support() {
  const std::vector<double> times = {0.5, 1.7, 4.0, 9.3};
  double nn_leak = 0.0;
  {
    const int n = 8;
    const oracle::Propagator prop(oracle::build_hamiltonian(HamiltonianKind::DQ, nearest_neighbor_couplings(n, 1.0)));
    const auto rho0 = SpinOperator::sigma_z(n, 1);
    for (double t : times) {
      for (const auto& [q, j] : oracle::mqc_protocol(prop, rho0, rho0, t, oracle::required_phase_steps(n))) {
        if (q != 0 && std::abs(q) != 2) nn_leak = std::max(nn_leak, std::abs(j));
      }
    }
  }
  double four_quantum = 0.0;
  {
    const int n = 6;
    const oracle::Propagator prop(oracle::build_hamiltonian(HamiltonianKind::DQ, dipolar_couplings(n, 1.0, 3.0)));
    const auto rho0 = SpinOperator::sigma_z(n, 1);
    for (double t : times) {
      const auto s = oracle::mqc_protocol(prop, rho0, rho0, t, oracle::required_phase_steps(n));
      four_quantum = std::max({four_quantum, s.at(4), s.at(-4)});
    }
  }
  double xy_leak = 0.0;
  {
    const int n = 8;
    const oracle::Propagator prop(oracle::build_hamiltonian(HamiltonianKind::XY, nearest_neighbor_couplings(n, 1.0)));
    const auto rho0 = SpinOperator::sigma_z(n, 1);
    for (double t : times) {
      for (const auto& [q, j] : oracle::mqc_protocol(prop, rho0, rho0, t, oracle::required_phase_steps(n))) {
        if (q != 0) xy_leak = std::max(xy_leak, std::abs(j));
      }
    }
  }
  return {nn_leak < 1e-12 && four_quantum > 1e-6 && xy_leak < 1e-12,
          "NN DQ |q|!=0,2 max " + fmt(nn_leak) + ", power-law |q|=4 max " + fmt(four_quantum) +
              ", XY q!=0 max " + fmt(xy_leak)};
}

Outcome figure1() {
  const auto r = experiments::figure1_transfer(21);
  const auto inset = experiments::figure1_inset_parity(20, 21);
  const auto smallest = experiments::figure1_inset_parity(2, 3, {5.0, 500});
  const bool ok = r.summary.at("max_abs_diff") < 1e-12 && inset.summary.at("sign_even") == -1.0 &&
                  inset.summary.at("sign_odd") == 1.0 && smallest.summary.at("sign_even") == -1.0 &&
                  smallest.summary.at("sign_odd") == 1.0;
  return {ok, "max |P_xy - P_dq| " + fmt(r.summary.at("max_abs_diff")) + ", first-extremum signs even " +
                  fmt(inset.summary.at("sign_even")) + " odd " + fmt(inset.summary.at("sign_odd"))};
}

Outcome figure2() {
  const auto r = experiments::figure2_mqc(21);
  const auto& s = r.summary;
  const bool ok = s.at("period_halved_within_step") == 1.0 && s.at("every_second_beat_aligned") == 1.0;
  return {ok, "beat period " + fmt(s.at("beat_period")) + " vs single-end " + fmt(s.at("beat_period_single_end")) +
                  " (halving error " + fmt(s.at("period_halving_error")) + ", grid step " + fmt(s.at("grid_step")) +
                  "), worst beat/P_1N offset " + fmt(s.at("max_alignment_offset"))};
}

Outcome spectrum_equality() {
  double worst_21 = 0.0;
  {
    const int n = 21;
    const auto states = oracle::magnetization_sector(n, n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        oracle::sector_hamiltonian(HamiltonianKind::XY, nearest_neighbor_couplings(n, 1.0), states));
    std::vector<double> expected;
    for (int m = 1; m <= n; ++m) expected.push_back(2.0 * std::cos(std::numbers::pi * m / 22.0));
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < n; ++i) worst_21 = std::max(worst_21, std::abs(es.eigenvalues()(i) - expected[i]));
  }
  double worst_modes = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const auto states = oracle::magnetization_sector(n, n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        oracle::sector_hamiltonian(HamiltonianKind::XY, nearest_neighbor_couplings(n, 1.0), states));
    auto omega = analytic::spectrum(HamiltonianKind::XY, n, 1.0).eigenfrequencies;
    std::sort(omega.begin(), omega.end());
    for (int i = 0; i < n; ++i) worst_modes = std::max(worst_modes, std::abs(es.eigenvalues()(i) - omega[i]));
  }
  double worst_full = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const auto table = nearest_neighbor_couplings(n, 1.0);
    const auto xy = oracle::Propagator(oracle::build_hamiltonian(HamiltonianKind::XY, table)).eigenvalues();
    const auto dq = oracle::Propagator(oracle::build_hamiltonian(HamiltonianKind::DQ, table)).eigenvalues();
    for (std::size_t i = 0; i < xy.size(); ++i) worst_full = std::max(worst_full, std::abs(xy[i] - dq[i]));
  }
  return {worst_21 < 1e-10 && worst_modes < 1e-10 && worst_full < 1e-10,
          "N=21 one-excitation " + fmt(worst_21) + ", analytic vs oracle N<=10 " + fmt(worst_modes) +
              ", XY vs DQ multisets N<=8 " + fmt(worst_full)};
}

Outcome scale() {
  const auto dir = std::filesystem::temp_directory_path() / "chainsim_acceptance_scale";
  std::ostringstream out, err;

  cli::RunConfig big;
  big.command = cli::Command::Transfer;
  big.n = 1000;
  big.t_max = 600.0;
  big.n_points = 2000;
  big.engine = cli::Engine::Analytic;
  big.out = dir;
  auto start = Clock::now();
  const int rc_big = cli::run(big, out, err);
  const double t_big = seconds_since(start);

  cli::RunConfig dense;
  dense.command = cli::Command::Transfer;
  dense.n = 12;
  dense.t_max = 20.0;
  dense.n_points = 100;
  dense.engine = cli::Engine::Oracle;
  dense.out = dir;
  start = Clock::now();
  const int rc_dense = cli::run(dense, out, err);
  const double t_dense = seconds_since(start);
  std::filesystem::remove_all(dir);

  return {rc_big == 0 && rc_dense == 0 && t_big < 10.0 && t_dense < 600.0,
          "analytic N=1000: " + fmt(t_big) + " s, oracle N=12: " + fmt(t_dense) + " s" +
              (err.str().empty() ? "" : " (" + err.str() + ")")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"conjugation identity", conjugation_identity},
      {"parity relation", parity_relation},
      {"perfect transfer", perfect_transfer},
      {"MQC sum rule", sum_rule},
      {"coherence support", coherence_support},
      {"transfer figure", figure1},
      {"two-end MQC figure", figure2},
      {"spectrum equality", spectrum_equality},
      {"scale and performance", scale},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << index << ". " << name << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
