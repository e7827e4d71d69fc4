#include "chainsim/chain_model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace chainsim {

namespace {

void require_chain_length(int n) {
  if (n < 2) {
    throw InvalidChain("chain needs at least 2 spins, got " + std::to_string(n));
  }
}

}  // namespace

CouplingTable CouplingTable::from_matrix(Eigen::MatrixXd d) {
  if (d.rows() != d.cols()) {
    throw InvalidInput("coupling table must be square");
  }
  require_chain_length(static_cast<int>(d.rows()));
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    if (d(i, i) != 0.0) {
      throw InvalidInput("coupling table diagonal must be zero");
    }
    for (Eigen::Index j = i + 1; j < d.cols(); ++j) {
      if (d(i, j) != d(j, i)) {
        std::ostringstream msg;
        msg << "coupling table not symmetric at (" << i + 1 << "," << j + 1 << ")";
        throw InvalidInput(msg.str());
      }
    }
  }
  return CouplingTable(std::move(d));
}

std::optional<double> CouplingTable::uniform_nearest_neighbor() const {
  const Eigen::Index n = d_.rows();
  const double d = d_(0, 1);
  if (d == 0.0) return std::nullopt;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double expected = (j == i + 1) ? d : 0.0;
      if (d_(i, j) != expected) return std::nullopt;
    }
  }
  return d;
}

CouplingTable nearest_neighbor_couplings(int n, double d) {
  require_chain_length(n);
  if (d == 0.0) throw InvalidInput("nearest-neighbor coupling must be nonzero");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = d;
    m(i + 1, i) = d;
  }
  return CouplingTable::from_matrix(std::move(m));
}

CouplingTable dipolar_couplings(int n, double d, double exponent) {
  require_chain_length(n);
  if (!(exponent > 0.0)) throw InvalidInput("dipolar exponent must be positive");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = d / std::pow(static_cast<double>(j - i), exponent);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return CouplingTable::from_matrix(std::move(m));
}

std::string_view to_string(HamiltonianKind kind) {
  switch (kind) {
    case HamiltonianKind::Dipolar: return "dipolar";
    case HamiltonianKind::XY: return "xy";
    case HamiltonianKind::DQ: return "dq";
  }
  return "?";
}

HamiltonianKind parse_hamiltonian_kind(std::string_view name) {
  if (name == "dipolar") return HamiltonianKind::Dipolar;
  if (name == "xy") return HamiltonianKind::XY;
  if (name == "dq") return HamiltonianKind::DQ;
  throw InvalidInput("unknown Hamiltonian kind '" + std::string(name) + "'");
}

DeviationState::DeviationState(int n_spins, std::map<int, double> weights)
    : n_spins_(n_spins), weights_(std::move(weights)) {
  require_chain_length(n_spins);
  bool any_nonzero = false;
  for (const auto& [a, w] : weights_) {
    if (a < 1 || a > n_spins_) {
      throw InvalidState("spin index " + std::to_string(a) + " outside 1.." +
                         std::to_string(n_spins_));
    }
    any_nonzero = any_nonzero || w != 0.0;
  }
  if (!any_nonzero) throw InvalidState("deviation state has no nonzero weight");
}

DeviationState DeviationState::single(int n_spins, int a) {
  return DeviationState(n_spins, {{a, 1.0}});
}

DeviationState DeviationState::both_ends(int n_spins) {
  return DeviationState(n_spins, {{1, 1.0}, {n_spins, 1.0}});
}

double DeviationState::total_weight() const {
  double s = 0.0;
  for (const auto& [a, w] : weights_) s += w;
  return s;
}

ModeGrid mode_grid(int n) {
  require_chain_length(n);
  ModeGrid grid;
  grid.n_spins = n;
  grid.k_values.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    grid.k_values.push_back(std::numbers::pi * i / (n + 1));
  }
  return grid;
}

}  // namespace chainsim
