#include "doctest.h"

#include "chainsim/chain_model.hpp"
#include "chainsim/errors.hpp"

#include <cmath>
#include <numbers>

using namespace chainsim;

TEST_CASE("nearest-neighbor table has only adjacent entries") {
  const auto t = nearest_neighbor_couplings(5, 2.5);
  CHECK(t.n_spins() == 5);
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      CHECK(t(i, j) == (std::abs(i - j) == 1 ? 2.5 : 0.0));
    }
  }
  REQUIRE(t.uniform_nearest_neighbor().has_value());
  CHECK(*t.uniform_nearest_neighbor() == 2.5);
}

TEST_CASE("dipolar table decays with the exponent") {
  const auto t = dipolar_couplings(6, 1.0, 3.0);
  CHECK(t(1, 2) == doctest::Approx(1.0));
  CHECK(t(1, 3) == doctest::Approx(1.0 / 8.0));
  CHECK(t(2, 6) == doctest::Approx(1.0 / 64.0));
  CHECK(t(4, 4) == 0.0);
  CHECK_FALSE(t.uniform_nearest_neighbor().has_value());
  CHECK_THROWS_AS(dipolar_couplings(4, 1.0, 0.0), InvalidInput);
}

TEST_CASE("coupling tables are validated") {
  Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(3, 3);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(CouplingTable::from_matrix(asym), InvalidInput);

  Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(3, 3);
  diag(1, 1) = 0.5;
  CHECK_THROWS_AS(CouplingTable::from_matrix(diag), InvalidInput);

  CHECK_THROWS_AS(CouplingTable::from_matrix(Eigen::MatrixXd::Zero(2, 3)), InvalidInput);
  CHECK_THROWS_AS(CouplingTable::from_matrix(Eigen::MatrixXd::Zero(1, 1)), InvalidChain);
  CHECK_THROWS_AS(nearest_neighbor_couplings(4, 0.0), InvalidInput);
  CHECK_THROWS_AS(nearest_neighbor_couplings(1, 1.0), InvalidChain);
}

TEST_CASE("a table with a missing bond is not uniform") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  m(0, 1) = m(1, 0) = 1.0;
  m(2, 3) = m(3, 2) = 1.0;
  CHECK_FALSE(CouplingTable::from_matrix(m).uniform_nearest_neighbor().has_value());
}

TEST_CASE("hamiltonian kind names round-trip") {
  for (auto k : {HamiltonianKind::Dipolar, HamiltonianKind::XY, HamiltonianKind::DQ}) {
    CHECK(parse_hamiltonian_kind(to_string(k)) == k);
  }
  CHECK_THROWS(parse_hamiltonian_kind("heisenberg"));
}

TEST_CASE("deviation states") {
  const auto s = DeviationState::both_ends(21);
  CHECK(s.weights().size() == 2);
  CHECK(s.weights().at(1) == 1.0);
  CHECK(s.weights().at(21) == 1.0);
  CHECK(s.total_weight() == 2.0);

  CHECK(DeviationState::single(4, 3).weights().at(3) == 1.0);
  CHECK_THROWS_AS(DeviationState::single(4, 5), InvalidState);
  CHECK_THROWS_AS(DeviationState::single(4, 0), InvalidState);
  CHECK_THROWS_AS(DeviationState(4, {{2, 0.0}}), InvalidState);
  CHECK_THROWS_AS(DeviationState(4, {}), InvalidState);
}

TEST_CASE("mode grid") {
  const auto g = mode_grid(7);
  REQUIRE(g.k_values.size() == 7);
  for (int m = 1; m <= 7; ++m) {
    CHECK(g.k_values[m - 1] == doctest::Approx(std::numbers::pi * m / 8.0));
  }
}
