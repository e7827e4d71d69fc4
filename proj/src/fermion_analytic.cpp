#include "chainsim/fermion_analytic.hpp"

#include <algorithm>
#include <cmath>

namespace chainsim::analytic {

namespace {

// S_kj = sqrt(2/(N+1)) sin(k j); real, symmetric and orthogonal.
Eigen::MatrixXd sine_transform(const ModeGrid& grid) {
  const int n = grid.n_spins;
  const double norm = std::sqrt(2.0 / (n + 1));
  Eigen::MatrixXd s(n, n);
  for (int m = 0; m < n; ++m) {
    for (int j = 0; j < n; ++j) {
      s(m, j) = norm * std::sin(grid.k_values[m] * (j + 1));
    }
  }
  return s;
}

void require_index(int a, int n, const char* what) {
  if (a < 1 || a > n) {
    throw InvalidState(std::string(what) + " index " + std::to_string(a) + " outside 1.." +
                       std::to_string(n));
  }
}

// Restores exact Hermiticity of P and antisymmetry of Q after evolution.
void symmetrize(QuadraticObservable& obs) {
  obs.P = (0.5 * (obs.P + obs.P.adjoint())).eval();
  obs.Q = (0.5 * (obs.Q - obs.Q.transpose())).eval();
}

double frobenius2(const Eigen::MatrixXcd& m) { return m.squaredNorm(); }

double overlap(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return a.cwiseProduct(b.conjugate()).sum().real();
}

std::vector<double> sin2_profile(const ModeGrid& grid, int a) {
  std::vector<double> s(grid.k_values.size());
  for (std::size_t m = 0; m < s.size(); ++m) {
    const double v = std::sin(grid.k_values[m] * a);
    s[m] = v * v;
  }
  return s;
}

}  // namespace

std::vector<double> mode_phases(const ModeGrid& grid, double d, double t) {
  std::vector<double> psi(grid.k_values.size());
  for (std::size_t m = 0; m < psi.size(); ++m) {
    psi[m] = 2.0 * d * t * std::cos(grid.k_values[m]);
  }
  return psi;
}

double QuadraticObservable::identity_component() const {
  return scalar + 0.5 * P.trace().real();
}

Eigen::MatrixXcd QuadraticObservable::site_P() const {
  const Eigen::MatrixXcd s = sine_transform(mode_grid(n_modes())).cast<cplx>();
  return s.transpose() * P * s;
}

Eigen::MatrixXcd QuadraticObservable::site_Q() const {
  const Eigen::MatrixXcd s = sine_transform(mode_grid(n_modes())).cast<cplx>();
  return s.transpose() * Q * s;
}

QuadraticObservable initial_observable(const DeviationState& state, const ModeGrid& grid) {
  const int n = grid.n_spins;
  if (state.n_spins() != n) {
    throw InvalidState("state defined on " + std::to_string(state.n_spins()) +
                       " spins, grid has " + std::to_string(n));
  }
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  double scalar = 0.0;
  for (const auto& [a, w] : state.weights()) {
    require_index(a, n, "spin");
    Eigen::VectorXd v(n);
    for (int m = 0; m < n; ++m) v(m) = std::sin(grid.k_values[m] * a);
    p -= (2.0 / (n + 1)) * w * v * v.transpose();
    scalar += 0.5 * w;
  }
  QuadraticObservable obs;
  obs.scalar = scalar;
  obs.P = p.cast<cplx>();
  obs.Q = Eigen::MatrixXcd::Zero(n, n);
  return obs;
}

QuadraticObservable evolve_xy(const QuadraticObservable& obs, double d, double t) {
  const int n = obs.n_modes();
  const auto psi = mode_phases(mode_grid(n), d, t);
  Eigen::VectorXcd phase(n);
  for (int m = 0; m < n; ++m) phase(m) = std::polar(1.0, -psi[m]);

  QuadraticObservable out;
  out.scalar = obs.scalar;
  out.P = phase.asDiagonal() * obs.P * phase.conjugate().asDiagonal();
  out.Q = phase.asDiagonal() * obs.Q * phase.asDiagonal();
  symmetrize(out);
  return out;
}

QuadraticObservable evolve_dq(const QuadraticObservable& obs, double d, double t) {
  const int n = obs.n_modes();
  const auto psi = mode_phases(mode_grid(n), d, t);
  std::vector<double> c(n);
  std::vector<cplx> beta(n);
  for (int m = 0; m < n; ++m) {
    c[m] = std::cos(psi[m]);
    beta[m] = cplx(0.0, std::sin(psi[m]));
  }
  auto partner = [n](int m) { return n - 1 - m; };

  // Nambu matrix M over (a_1..a_N, a_1^dag..a_N^dag):
  //   M = [[P, Q], [Q^dag, -P^T]],  O = scalar + 1/2 Tr P + 1/2 alpha^dag M alpha.
  // Substitution alpha -> T alpha with
  //   T[k][k] = c_k, T[k][N+kbar] = beta_k, T[N+k][N+k] = c_k, T[N+k][kbar] = conj(beta_k)
  // gives M' = T^dag M T. T has two entries per row and column, so this is O(N^2).
  const int n2 = 2 * n;
  Eigen::MatrixXcd m(n2, n2);
  m.topLeftCorner(n, n) = obs.P;
  m.topRightCorner(n, n) = obs.Q;
  m.bottomLeftCorner(n, n) = obs.Q.adjoint();
  m.bottomRightCorner(n, n) = -obs.P.transpose();

  Eigen::MatrixXcd x(n2, n2);  // M T
  for (int j = 0; j < n; ++j) {
    const int jb = partner(j);
    for (int i = 0; i < n2; ++i) {
      x(i, j) = m(i, j) * c[j] + m(i, n + jb) * std::conj(beta[jb]);
      x(i, n + j) = m(i, n + j) * c[j] + m(i, jb) * beta[jb];
    }
  }

  QuadraticObservable out;
  out.P.resize(n, n);
  out.Q.resize(n, n);
  for (int i = 0; i < n; ++i) {
    const int ib = partner(i);
    for (int j = 0; j < n2; ++j) {
      const cplx v = c[i] * x(i, j) + beta[ib] * x(n + ib, j);
      if (j < n) {
        out.P(i, j) = v;
      } else {
        out.Q(i, j - n) = v;
      }
    }
  }
  symmetrize(out);
  out.scalar = obs.identity_component() - 0.5 * out.P.trace().real();
  return out;
}

double site_polarization(const QuadraticObservable& obs, int b) {
  const int n = obs.n_modes();
  require_index(b, n, "spin");
  const Eigen::MatrixXd s = sine_transform(mode_grid(n));
  const Eigen::VectorXd row = s.col(b - 1);
  return -(row.cast<cplx>().dot(obs.P * row.cast<cplx>())).real();
}

cplx transfer_amplitude(int a, int b, int n, double d, double t) {
  const ModeGrid grid = mode_grid(n);
  require_index(a, n, "source");
  require_index(b, n, "target");
  cplx sum = 0.0;
  for (double k : grid.k_values) {
    sum += std::sin(k * a) * std::sin(k * b) * std::polar(1.0, -2.0 * d * t * std::cos(k));
  }
  return sum;
}

double polarization_xy(int a, int b, int n, double d, double t) {
  const double pref = 4.0 / ((n + 1.0) * (n + 1.0));
  return pref * std::norm(transfer_amplitude(a, b, n, d, t));
}

double polarization_dq(int a, int b, int n, double d, double t) {
  const double pref = 4.0 / ((n + 1.0) * (n + 1.0));
  const cplx s = transfer_amplitude(a, b, n, d, t);
  return pref * (s * s).real();
}

namespace {

template <typename Reduce>
std::vector<double> transfer_series(int a, int b, int n, double d,
                                    std::span<const double> times, Reduce reduce) {
  const ModeGrid grid = mode_grid(n);
  require_index(a, n, "source");
  require_index(b, n, "target");
  std::vector<double> weight(n), freq(n);
  for (int m = 0; m < n; ++m) {
    const double k = grid.k_values[m];
    weight[m] = std::sin(k * a) * std::sin(k * b);
    freq[m] = 2.0 * d * std::cos(k);
  }
  const double pref = 4.0 / ((n + 1.0) * (n + 1.0));
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    cplx sum = 0.0;
    for (int m = 0; m < n; ++m) sum += weight[m] * std::polar(1.0, -freq[m] * t);
    out.push_back(pref * reduce(sum));
  }
  return out;
}

}  // namespace

std::vector<double> polarization_xy_series(int a, int b, int n, double d,
                                           std::span<const double> times) {
  return transfer_series(a, b, n, d, times, [](cplx s) { return std::norm(s); });
}

std::vector<double> polarization_dq_series(int a, int b, int n, double d,
                                           std::span<const double> times) {
  return transfer_series(a, b, n, d, times, [](cplx s) { return (s * s).real(); });
}

MqcIntensities mqc_intensities(int a, int n, double d, double t) {
  const ModeGrid grid = mode_grid(n);
  require_index(a, n, "spin");
  const auto s = sin2_profile(grid, a);
  const auto psi = mode_phases(grid, d, t);
  // sum_{k,h} s_k s_h cos(2 psi_k + 2 psi_h) = Re z^2,  z = sum_k s_k e^{2 i psi_k}
  double total = 0.0;
  cplx z = 0.0;
  for (int m = 0; m < n; ++m) {
    total += s[m];
    z += s[m] * std::polar(1.0, 2.0 * psi[m]);
  }
  const double pref = 1.0 / ((n + 1.0) * (n + 1.0));
  const double cross = (z * z).real();
  return {2.0 * pref * (total * total + cross), pref * (total * total - cross)};
}

MqcIntensities mqc_intensities_collective(int a, int n, double d, double t) {
  const ModeGrid grid = mode_grid(n);
  require_index(a, n, "spin");
  const auto s = sin2_profile(grid, a);
  const auto psi = mode_phases(grid, d, t);
  double j0 = 0.0;
  double j2 = 0.0;
  for (int m = 0; m < n; ++m) {
    const double cs = std::cos(2.0 * psi[m]);
    const double sn = std::sin(2.0 * psi[m]);
    j0 += s[m] * cs * cs;
    j2 += s[m] * sn * sn;
  }
  return {2.0 * j0 / (n + 1), j2 / (n + 1)};
}

MqcIntensities mqc_intensities_state(const DeviationState& state, double d, double t) {
  const ModeGrid grid = mode_grid(state.n_spins());
  const QuadraticObservable initial = initial_observable(state, grid);
  const QuadraticObservable evolved = evolve_dq(initial, d, t);
  const double norm = frobenius2(initial.P);
  return {frobenius2(evolved.P) / norm, 0.5 * frobenius2(evolved.Q) / norm};
}

MqcIntensities mqc_intensities_state_collective(const DeviationState& state, double d,
                                                double t) {
  const int n = state.n_spins();
  const ModeGrid grid = mode_grid(n);
  std::map<int, double> all;
  for (int j = 1; j <= n; ++j) all[j] = 1.0;
  const QuadraticObservable rho0 = initial_observable(state, grid);
  const QuadraticObservable z0 = initial_observable(DeviationState(n, all), grid);
  const double norm = overlap(rho0.P, z0.P);
  if (norm == 0.0) {
    throw InvalidState("state has no overlap with the total magnetization");
  }
  const QuadraticObservable rho = evolve_dq(rho0, d, t);
  const QuadraticObservable z = evolve_dq(z0, d, t);
  return {overlap(rho.P, z.P) / norm, 0.5 * overlap(rho.Q, z.Q) / norm};
}

Spectrum spectrum(HamiltonianKind kind, int n, double d) {
  if (kind == HamiltonianKind::Dipolar) {
    throw UnsupportedModel("dipolar Hamiltonian is not quadratic in fermions");
  }
  const ModeGrid grid = mode_grid(n);
  const double sign = kind == HamiltonianKind::XY ? 1.0 : -1.0;
  Spectrum out;
  out.eigenfrequencies.reserve(grid.k_values.size());
  for (double k : grid.k_values) out.eigenfrequencies.push_back(sign * 2.0 * d * std::cos(k));
  return out;
}

double require_nearest_neighbor(const CouplingTable& table) {
  const auto d = table.uniform_nearest_neighbor();
  if (!d) {
    throw UnsupportedModel(
        "analytic engine needs uniform nearest-neighbor couplings; use the dense oracle");
  }
  return *d;
}

Spectrum spectrum(HamiltonianKind kind, const CouplingTable& table) {
  return spectrum(kind, table.n_spins(), require_nearest_neighbor(table));
}

}  // namespace chainsim::analytic
