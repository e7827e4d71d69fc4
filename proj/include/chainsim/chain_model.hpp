#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "chainsim/errors.hpp"

namespace chainsim {

// Spins are indexed 1..N everywhere in the public API.

/// Symmetric table of pair couplings d_ij (angular frequency), zero diagonal.
class CouplingTable {
 public:
  /// Throws InvalidChain for n < 2, InvalidInput if `d` is not exactly
  /// symmetric or has a nonzero diagonal.
  static CouplingTable from_matrix(Eigen::MatrixXd d);

  int n_spins() const { return static_cast<int>(d_.rows()); }
  double operator()(int i, int j) const { return d_(i - 1, j - 1); }
  const Eigen::MatrixXd& matrix() const { return d_; }

  /// Coupling strength if the table is uniform nearest-neighbor, else nullopt.
  std::optional<double> uniform_nearest_neighbor() const;

 private:
  explicit CouplingTable(Eigen::MatrixXd d) : d_(std::move(d)) {}
  Eigen::MatrixXd d_;
};

CouplingTable nearest_neighbor_couplings(int n, double d);

/// d_ij = d / |i-j|^exponent.
CouplingTable dipolar_couplings(int n, double d, double exponent);

enum class HamiltonianKind { Dipolar, XY, DQ };

std::string_view to_string(HamiltonianKind kind);
HamiltonianKind parse_hamiltonian_kind(std::string_view name);

/// Deviation operator sum_a w_a sigma_z^a.
class DeviationState {
 public:
  DeviationState(int n_spins, std::map<int, double> weights);

  static DeviationState single(int n_spins, int a);
  /// sigma_z^1 + sigma_z^N
  static DeviationState both_ends(int n_spins);

  int n_spins() const { return n_spins_; }
  const std::map<int, double>& weights() const { return weights_; }
  double total_weight() const;

 private:
  int n_spins_;
  std::map<int, double> weights_;
};

/// Open-chain fermion modes k_n = pi n / (N + 1), n = 1..N.
struct ModeGrid {
  int n_spins = 0;
  std::vector<double> k_values;
};

ModeGrid mode_grid(int n);

}  // namespace chainsim
