#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "chainsim/chain_model.hpp"

// Closed-form engine for uniform nearest-neighbor chains.
//
// Jordan-Wigner fermions c_j are expanded in the open-chain sine modes
//   a_k = sqrt(2/(N+1)) sum_j sin(k j) c_j,   k = pi n / (N+1).
// H_xy is diagonal in a_k with frequency 2 d cos k. H_dq pairs each mode k
// with its reflection pi - k (index n <-> N + 1 - n); a state evolves by
//   a_k -> cos(psi_k) a_k + i sin(psi_k) a_{pi-k}^dag,   psi_k = 2 d t cos k.
//
// The pairing block produced by this rule equals the one of the literal
// spin-space H_dq up to conjugation by sigma_z on sites 3,4, 7,8, 11,12, ...
// That diagonal gauge leaves every sigma_z-diagonal observable and every
// coherence-order intensity unchanged, which is all this engine reports.
namespace chainsim::analytic {

using cplx = std::complex<double>;

struct Spectrum {
  std::vector<double> eigenfrequencies;
};

/// psi_k(t) = 2 d t cos(k) for every mode of the grid.
std::vector<double> mode_phases(const ModeGrid& grid, double d, double t);

/// Operator  scalar + sum P_kh a_k^dag a_h + 1/2 sum (Q_kh a_k^dag a_h^dag + h.c.)
/// in the mode basis. P is Hermitian and Q antisymmetric.
struct QuadraticObservable {
  double scalar = 0.0;
  Eigen::MatrixXcd P;
  Eigen::MatrixXcd Q;

  int n_modes() const { return static_cast<int>(P.rows()); }
  /// Identity component Tr(O) / 2^N.
  double identity_component() const;
  /// P and Q expressed in the site basis c_j.
  Eigen::MatrixXcd site_P() const;
  Eigen::MatrixXcd site_Q() const;
};

/// Mode-space image of  sum_a w_a (1/2 - n_a):
///   P_kh = -(2/(N+1)) sum_a w_a sin(k a) sin(h a),  Q = 0,  scalar = sum_a w_a / 2.
QuadraticObservable initial_observable(const DeviationState& state, const ModeGrid& grid);

QuadraticObservable evolve_xy(const QuadraticObservable& obs, double d, double t);
QuadraticObservable evolve_dq(const QuadraticObservable& obs, double d, double t);

/// Polarization on spin b of an observable built by initial_observable,
/// normalized so that the unit single-spin state reads 1 on its own site.
double site_polarization(const QuadraticObservable& obs, int b);

/// sum_k sin(k a) sin(k b) exp(-i psi_k(t)).
cplx transfer_amplitude(int a, int b, int n, double d, double t);

double polarization_xy(int a, int b, int n, double d, double t);
double polarization_dq(int a, int b, int n, double d, double t);

/// Transfer curve over a time grid; O(N) per point.
std::vector<double> polarization_xy_series(int a, int b, int n, double d,
                                           std::span<const double> times);
std::vector<double> polarization_dq_series(int a, int b, int n, double d,
                                           std::span<const double> times);

/// Zero-quantum intensity and the intensity of one double-quantum order
/// (the +2 and -2 orders carry equal weight, so J0 + 2 J2 = 1).
struct MqcIntensities {
  double zero = 0.0;
  double double_quantum = 0.0;
};

/// Per-spin intensities Tr[(rho^(q))^2] for the state sigma_z^a under H_dq.
MqcIntensities mqc_intensities(int a, int n, double d, double t);

/// Intensities read out through the total magnetization,
/// Tr[rho^(q)(t) (U sum sigma_z U^dag)^(-q)].
MqcIntensities mqc_intensities_collective(int a, int n, double d, double t);

/// General deviation state through QuadraticObservable, normalized so J0(0) = 1.
MqcIntensities mqc_intensities_state(const DeviationState& state, double d, double t);
MqcIntensities mqc_intensities_state_collective(const DeviationState& state, double d,
                                                double t);

/// One-fermion frequencies 2 d cos k (XY) or -2 d cos k (DQ), in mode order.
Spectrum spectrum(HamiltonianKind kind, int n, double d);

/// Throws UnsupportedModel unless the table is uniform nearest-neighbor and
/// kind is XY or DQ.
Spectrum spectrum(HamiltonianKind kind, const CouplingTable& table);

/// Uniform nearest-neighbor coupling of the table or UnsupportedModel.
double require_nearest_neighbor(const CouplingTable& table);

}  // namespace chainsim::analytic
