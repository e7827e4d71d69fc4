#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "chainsim/chain_model.hpp"
#include "chainsim/time_series.hpp"

// Brute-force 2^N Hilbert-space engine used to verify the analytic one.
//
// Basis state s has spin j (1-based) in bit N - j; bit 0 is spin up, so the
// Kronecker order puts spin 1 most significant. Coherence order of the matrix
// element |m><n| is popcount(n) - popcount(m), which gives sigma^+ order +1.
namespace chainsim::oracle {

using cplx = std::complex<double>;

inline constexpr int kDefaultCap = 12;

/// Maximum chain length for dense operators; CHAINSIM_ORACLE_CAP overrides.
int oracle_cap();

/// Throws ResourceLimit if n exceeds the cap.
void require_within_cap(int n, int cap = oracle_cap());

/// Dense 2^N x 2^N operator on an N-spin chain.
class SpinOperator {
 public:
  SpinOperator(int n_spins, Eigen::MatrixXcd matrix);

  static SpinOperator zero(int n_spins);
  static SpinOperator identity(int n_spins);
  /// sigma_z^site, sigma_x^site, sigma_+^site, sigma_-^site.
  static SpinOperator sigma_z(int n_spins, int site);
  static SpinOperator sigma_x(int n_spins, int site);
  static SpinOperator sigma_plus(int n_spins, int site);
  static SpinOperator sigma_minus(int n_spins, int site);
  static SpinOperator total_z(int n_spins);
  static SpinOperator from_state(const DeviationState& state);

  int n_spins() const { return n_; }
  Eigen::Index dim() const { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  SpinOperator adjoint() const { return {n_, m_.adjoint()}; }
  /// max |H - H^dag|
  double hermiticity_error() const;
  /// Tr(A B) / 2^N
  cplx normalized_trace_product(const SpinOperator& other) const;

  friend SpinOperator operator*(const SpinOperator& a, const SpinOperator& b);
  friend SpinOperator operator+(const SpinOperator& a, const SpinOperator& b);
  friend SpinOperator operator-(const SpinOperator& a, const SpinOperator& b);
  friend SpinOperator operator*(cplx s, const SpinOperator& a);

 private:
  int n_;
  Eigen::MatrixXcd m_;
};

/// Pair sum over i < j:
///   Dipolar: d_ij [zz - (xx + yy)/2],  XY: d_ij/2 (xx + yy),  DQ: d_ij/2 (xx - yy).
SpinOperator build_hamiltonian(HamiltonianKind kind, const CouplingTable& table,
                               int cap = oracle_cap());

/// The same Hamiltonian restricted to an explicit list of basis states.
/// No cap; the sector must be closed under the Hamiltonian.
Eigen::MatrixXd sector_hamiltonian(HamiltonianKind kind, const CouplingTable& table,
                                   std::span<const std::uint64_t> states);

/// Basis states with exactly `n_up` spins up.
std::vector<std::uint64_t> magnetization_sector(int n_spins, int n_up);

/// Pi rotation about x on the even sites 2, 4, ...; maps NN H_dq onto H_xy.
SpinOperator similarity_transform(int n_spins, int cap = oracle_cap());

/// Eigendecomposition of a Hermitian operator, split into the connected
/// blocks of its sparsity graph. Built once and reused over a time grid.
class Propagator {
 public:
  explicit Propagator(const SpinOperator& hamiltonian);

  int n_spins() const { return n_; }
  /// All eigenvalues, ascending.
  std::vector<double> eigenvalues() const;

  /// rho0 rotated into the eigenbasis, block by block. Preparing once and
  /// evolving many times skips half the matrix products per step.
  struct PreparedState {
    int n_spins = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Eigen::MatrixXcd> tilde;
  };
  PreparedState prepare(const SpinOperator& rho0) const;

  /// exp(-iHt) rho0 exp(iHt)
  SpinOperator evolve(const SpinOperator& rho0, double t) const;
  SpinOperator evolve(const PreparedState& prepared, double t) const;

  /// Re Tr(rho(t) O) / 2^N over a time grid without forming rho(t).
  std::vector<double> expectation_series(const SpinOperator& rho0, const SpinOperator& observable,
                                         std::span<const double> times) const;

 private:
  struct Block {
    std::vector<Eigen::Index> states;
    Eigen::VectorXd energies;
    Eigen::MatrixXcd vectors;
    std::optional<Eigen::MatrixXd> real_vectors;
  };

  Eigen::MatrixXcd gather(const Eigen::MatrixXcd& m, const Block& row, const Block& col) const;

  int n_;
  Eigen::Index dim_;
  std::vector<Block> blocks_;
};

SpinOperator evolve(const SpinOperator& hamiltonian, const SpinOperator& rho0, double t);

/// Tr(rho sigma_z^b) / 2^N.
double polarization(const SpinOperator& rho, int b);

/// Largest |q| carried by rho above `tolerance` (relative to max |rho_mn|).
int max_coherence_order(const SpinOperator& rho, double tolerance = 1e-10);

/// Smallest phase-step count that separates orders -max_order..max_order
/// with headroom: 2 * max_order + 2.
int required_phase_steps(int max_order);

struct CoherenceDecomposition {
  int n_spins = 0;
  std::map<int, SpinOperator> components;

  SpinOperator reconstruct() const;
  /// Tr(rho^(q)^dag rho^(q)) / 2^N; zero for absent orders.
  double intensity(int q) const;
};

/// rho^(q) = (1/M) sum_k e^{i q phi_k} R(phi_k) rho R(phi_k)^dag with
/// R(phi) = exp(-i phi sum_j sigma_z^j / 2), phi_k = 2 pi k / M.
/// Throws AliasingError if M <= 2 * max_order or rho carries orders beyond max_order.
CoherenceDecomposition coherence_decompose(const SpinOperator& rho, int max_order,
                                           int phase_steps);

/// Phase-encoded MQC experiment: prepare rho(t) = e^{-iHt} rho0 e^{iHt},
/// rotate by phi_k about z, evolve back for t, read out `readout`, and
/// Fourier-analyze over the M phases. Intensities are normalized by the
/// t = 0 signal, so they sum to 1 over q.
std::map<int, double> mqc_protocol(const Propagator& propagator, const SpinOperator& rho0,
                                   const SpinOperator& readout, double t, int phase_steps);

/// Per-spin intensities Tr(rho^(q) rho^(q)^dag): readout is rho0 itself.
std::map<int, double> mqc_protocol(const SpinOperator& rho0, const SpinOperator& hamiltonian,
                                   double t, int phase_steps);

/// End-to-end polarization P_1N(t) of sigma_z^1 under the secular dipolar
/// Hamiltonian. Channel "P_1N_dipolar"; metadata "max_P_1N".
TimeSeries dipolar_transport_baseline(int n, const CouplingTable& table,
                                      std::span<const double> times);

}  // namespace chainsim::oracle
