#include "chainsim/dense_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <string>
#include <unordered_map>

namespace chainsim::oracle {

namespace {

using Index = Eigen::Index;

std::uint64_t site_mask(int n, int site) { return std::uint64_t{1} << (n - site); }

// sigma_z eigenvalue of `site` in basis state s.
double z_value(std::uint64_t s, int n, int site) {
  return (s & site_mask(n, site)) ? -1.0 : 1.0;
}

int popcount(std::uint64_t s) { return std::popcount(s); }

void require_site(int n, int site) {
  if (site < 1 || site > n) {
    throw InvalidInput("site " + std::to_string(site) + " outside 1.." + std::to_string(n));
  }
}

Index dimension(int n) { return Index{1} << n; }

// Calls emit(from, to, value) for every nonzero matrix element <to|H|from>
// contributed by the pair (i, j).
template <typename Emit>
void pair_elements(HamiltonianKind kind, int n, int i, int j, double d, std::uint64_t s,
                   Emit&& emit) {
  const std::uint64_t mi = site_mask(n, i);
  const std::uint64_t mj = site_mask(n, j);
  const bool bi = s & mi;
  const bool bj = s & mj;
  const std::uint64_t flipped = s ^ mi ^ mj;
  switch (kind) {
    case HamiltonianKind::Dipolar:
      emit(s, s, d * (bi == bj ? 1.0 : -1.0));
      if (bi != bj) emit(s, flipped, -d);
      break;
    case HamiltonianKind::XY:
      if (bi != bj) emit(s, flipped, d);
      break;
    case HamiltonianKind::DQ:
      if (bi == bj) emit(s, flipped, d);
      break;
  }
}

struct DisjointSet {
  explicit DisjointSet(Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Index{0});
  }
  Index find(Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(Index a, Index b) { parent[find(a)] = find(b); }
  std::vector<Index> parent;
};

}  // namespace

int oracle_cap() {
  if (const char* env = std::getenv("CHAINSIM_ORACLE_CAP")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 2 && cap <= 30) return cap;
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string("CHAINSIM_ORACLE_CAP must be an integer in 2..30, got '") +
                       env + "'");
  }
  return kDefaultCap;
}

void require_within_cap(int n, int cap) {
  if (n > cap) {
    throw ResourceLimit("dense oracle limited to " + std::to_string(cap) + " spins, asked for " +
                        std::to_string(n));
  }
}

// ---------------------------------------------------------------------------
// SpinOperator

SpinOperator::SpinOperator(int n_spins, Eigen::MatrixXcd matrix)
    : n_(n_spins), m_(std::move(matrix)) {
  if (m_.rows() != dimension(n_) || m_.cols() != dimension(n_)) {
    throw InvalidInput("operator dimension does not match 2^" + std::to_string(n_));
  }
}

SpinOperator SpinOperator::zero(int n) {
  return {n, Eigen::MatrixXcd::Zero(dimension(n), dimension(n))};
}

SpinOperator SpinOperator::identity(int n) {
  return {n, Eigen::MatrixXcd::Identity(dimension(n), dimension(n))};
}

SpinOperator SpinOperator::sigma_z(int n, int site) {
  require_site(n, site);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dimension(n), dimension(n));
  for (Index s = 0; s < m.rows(); ++s) m(s, s) = z_value(s, n, site);
  return {n, std::move(m)};
}

SpinOperator SpinOperator::sigma_x(int n, int site) {
  require_site(n, site);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dimension(n), dimension(n));
  const std::uint64_t mask = site_mask(n, site);
  for (Index s = 0; s < m.rows(); ++s) m(static_cast<Index>(s ^ mask), s) = 1.0;
  return {n, std::move(m)};
}

SpinOperator SpinOperator::sigma_plus(int n, int site) {
  require_site(n, site);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dimension(n), dimension(n));
  const std::uint64_t mask = site_mask(n, site);
  for (Index s = 0; s < m.rows(); ++s) {
    if (s & mask) m(static_cast<Index>(s ^ mask), s) = 1.0;
  }
  return {n, std::move(m)};
}

SpinOperator SpinOperator::sigma_minus(int n, int site) { return sigma_plus(n, site).adjoint(); }

SpinOperator SpinOperator::total_z(int n) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dimension(n), dimension(n));
  for (Index s = 0; s < m.rows(); ++s) m(s, s) = n - 2.0 * popcount(s);
  return {n, std::move(m)};
}

SpinOperator SpinOperator::from_state(const DeviationState& state) {
  const int n = state.n_spins();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dimension(n), dimension(n));
  for (Index s = 0; s < m.rows(); ++s) {
    double v = 0.0;
    for (const auto& [a, w] : state.weights()) v += w * z_value(s, n, a);
    m(s, s) = v;
  }
  return {n, std::move(m)};
}

double SpinOperator::hermiticity_error() const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff(); }

cplx SpinOperator::normalized_trace_product(const SpinOperator& other) const {
  // Tr(AB) = sum_mn A_mn B_nm
  return m_.cwiseProduct(other.m_.transpose()).sum() / static_cast<double>(dim());
}

SpinOperator operator*(const SpinOperator& a, const SpinOperator& b) {
  return {a.n_, a.m_ * b.m_};
}
SpinOperator operator+(const SpinOperator& a, const SpinOperator& b) {
  return {a.n_, a.m_ + b.m_};
}
SpinOperator operator-(const SpinOperator& a, const SpinOperator& b) {
  return {a.n_, a.m_ - b.m_};
}
SpinOperator operator*(cplx s, const SpinOperator& a) { return {a.n_, s * a.m_}; }

// ---------------------------------------------------------------------------
// Hamiltonians

SpinOperator build_hamiltonian(HamiltonianKind kind, const CouplingTable& table, int cap) {
  const int n = table.n_spins();
  require_within_cap(n, cap);
  const Index dim = dimension(n);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const double d = table(i, j);
      if (d == 0.0) continue;
      for (Index s = 0; s < dim; ++s) {
        pair_elements(kind, n, i, j, d, static_cast<std::uint64_t>(s),
                      [&](std::uint64_t from, std::uint64_t to, double v) {
                        h(static_cast<Index>(to), static_cast<Index>(from)) += v;
                      });
      }
    }
  }
  return {n, std::move(h)};
}

Eigen::MatrixXd sector_hamiltonian(HamiltonianKind kind, const CouplingTable& table,
                                   std::span<const std::uint64_t> states) {
  const int n = table.n_spins();
  if (n > 63) throw ResourceLimit("sector basis limited to 63 spins");
  std::unordered_map<std::uint64_t, Index> index;
  for (std::size_t i = 0; i < states.size(); ++i) index.emplace(states[i], static_cast<Index>(i));
  const Index dim = static_cast<Index>(states.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const double d = table(i, j);
      if (d == 0.0) continue;
      for (Index col = 0; col < dim; ++col) {
        pair_elements(kind, n, i, j, d, states[col],
                      [&](std::uint64_t, std::uint64_t to, double v) {
                        const auto it = index.find(to);
                        if (it == index.end()) {
                          throw InvalidInput("basis sector is not closed under the Hamiltonian");
                        }
                        h(it->second, col) += v;
                      });
      }
    }
  }
  return h;
}

std::vector<std::uint64_t> magnetization_sector(int n, int n_up) {
  if (n < 1 || n > 63) throw InvalidInput("sector basis needs 1..63 spins");
  if (n_up < 0 || n_up > n) throw InvalidInput("n_up outside 0..n");
  // Bit set means spin down.
  const int n_down = n - n_up;
  std::vector<std::uint64_t> out;
  std::uint64_t s = n_down == 0 ? 0 : (std::uint64_t{1} << n_down) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (s < limit) {
    out.push_back(s);
    if (s == 0) break;
    // next integer with the same popcount
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

SpinOperator similarity_transform(int n, int cap) {
  require_within_cap(n, cap);
  std::uint64_t mask = 0;
  int flipped = 0;
  for (int site = 2; site <= n; site += 2) {
    mask |= site_mask(n, site);
    ++flipped;
  }
  // exp(-i pi/2 sigma_x) = -i sigma_x on each flipped site
  const cplx phase = std::pow(cplx(0.0, -1.0), flipped);
  const Index dim = dimension(n);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (Index s = 0; s < dim; ++s) u(static_cast<Index>(s ^ mask), s) = phase;
  return {n, std::move(u)};
}

// ---------------------------------------------------------------------------
// Propagator

Propagator::Propagator(const SpinOperator& hamiltonian)
    : n_(hamiltonian.n_spins()), dim_(hamiltonian.dim()) {
  const Eigen::MatrixXcd& h = hamiltonian.matrix();
  if (hamiltonian.hermiticity_error() > 1e-12) {
    throw InvalidInput("Hamiltonian is not Hermitian");
  }
  DisjointSet sets(dim_);
  for (Index c = 0; c < dim_; ++c) {
    for (Index r = c + 1; r < dim_; ++r) {
      if (h(r, c) != cplx(0.0)) sets.unite(r, c);
    }
  }
  std::unordered_map<Index, std::size_t> root_to_block;
  for (Index s = 0; s < dim_; ++s) {
    const Index root = sets.find(s);
    auto [it, inserted] = root_to_block.emplace(root, blocks_.size());
    if (inserted) blocks_.emplace_back();
    blocks_[it->second].states.push_back(s);
  }
  for (Block& b : blocks_) {
    const Index m = static_cast<Index>(b.states.size());
    Eigen::MatrixXcd sub(m, m);
    for (Index i = 0; i < m; ++i) {
      for (Index j = 0; j < m; ++j) sub(i, j) = h(b.states[i], b.states[j]);
    }
    if (sub.imag().cwiseAbs().maxCoeff() == 0.0) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sub.real());
      if (solver.info() != Eigen::Success) throw Error("eigendecomposition failed");
      b.energies = solver.eigenvalues();
      b.vectors = solver.eigenvectors().cast<cplx>();
      b.real_vectors = solver.eigenvectors();
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sub);
      if (solver.info() != Eigen::Success) throw Error("eigendecomposition failed");
      b.energies = solver.eigenvalues();
      b.vectors = solver.eigenvectors();
    }
  }
}

std::vector<double> Propagator::eigenvalues() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(dim_));
  for (const Block& b : blocks_) {
    for (Index i = 0; i < b.energies.size(); ++i) out.push_back(b.energies(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::MatrixXcd Propagator::gather(const Eigen::MatrixXcd& m, const Block& row,
                                    const Block& col) const {
  Eigen::MatrixXcd sub(static_cast<Index>(row.states.size()),
                       static_cast<Index>(col.states.size()));
  for (Index i = 0; i < sub.rows(); ++i) {
    for (Index j = 0; j < sub.cols(); ++j) sub(i, j) = m(row.states[i], col.states[j]);
  }
  return sub;
}

namespace {

// L^dag X R, exploiting real eigenvectors and real X where possible.
Eigen::MatrixXcd sandwich(const Eigen::MatrixXcd& lc, const std::optional<Eigen::MatrixXd>& lr,
                          const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& rc,
                          const std::optional<Eigen::MatrixXd>& rr) {
  if (!lr || !rr) return lc.adjoint() * x * rc;
  const Eigen::MatrixXd re = lr->transpose() * x.real() * *rr;
  if (x.imag().cwiseAbs().maxCoeff() == 0.0) return re.cast<cplx>();
  const Eigen::MatrixXd im = lr->transpose() * x.imag() * *rr;
  Eigen::MatrixXcd out(re.rows(), re.cols());
  out.real() = re;
  out.imag() = im;
  return out;
}

// L X R^dag
Eigen::MatrixXcd unsandwich(const Eigen::MatrixXcd& lc, const std::optional<Eigen::MatrixXd>& lr,
                            const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& rc,
                            const std::optional<Eigen::MatrixXd>& rr) {
  if (!lr || !rr) return lc * x * rc.adjoint();
  Eigen::MatrixXcd out(lr->rows(), rr->rows());
  out.real() = *lr * x.real() * rr->transpose();
  out.imag() = *lr * x.imag() * rr->transpose();
  return out;
}

}  // namespace

Propagator::PreparedState Propagator::prepare(const SpinOperator& rho0) const {
  if (rho0.n_spins() != n_) throw InvalidInput("state and Hamiltonian sizes differ");
  PreparedState p;
  p.n_spins = n_;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      const Block& bi = blocks_[i];
      const Block& bj = blocks_[j];
      const Eigen::MatrixXcd sub = gather(rho0.matrix(), bi, bj);
      if (sub.cwiseAbs().maxCoeff() == 0.0) continue;
      p.pairs.emplace_back(i, j);
      p.tilde.push_back(sandwich(bi.vectors, bi.real_vectors, sub, bj.vectors, bj.real_vectors));
    }
  }
  return p;
}

SpinOperator Propagator::evolve(const SpinOperator& rho0, double t) const {
  if (rho0.n_spins() != n_) throw InvalidInput("state and Hamiltonian sizes differ");
  if (t == 0.0) return rho0;
  return evolve(prepare(rho0), t);
}

SpinOperator Propagator::evolve(const PreparedState& prepared, double t) const {
  if (prepared.n_spins != n_) throw InvalidInput("state and Hamiltonian sizes differ");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (std::size_t k = 0; k < prepared.pairs.size(); ++k) {
    const Block& bi = blocks_[prepared.pairs[k].first];
    const Block& bj = blocks_[prepared.pairs[k].second];
    const Eigen::VectorXcd ui = (bi.energies * cplx(0.0, -t)).array().exp().matrix();
    const Eigen::VectorXcd uj = (bj.energies * cplx(0.0, t)).array().exp().matrix();
    const Eigen::MatrixXcd tilde = ui.asDiagonal() * prepared.tilde[k] * uj.asDiagonal();
    const Eigen::MatrixXcd sub =
        unsandwich(bi.vectors, bi.real_vectors, tilde, bj.vectors, bj.real_vectors);
    for (Index j = 0; j < sub.cols(); ++j) {
      for (Index i = 0; i < sub.rows(); ++i) out(bi.states[i], bj.states[j]) = sub(i, j);
    }
  }
  return {n_, std::move(out)};
}

std::vector<double> Propagator::expectation_series(const SpinOperator& rho0,
                                                   const SpinOperator& observable,
                                                   std::span<const double> times) const {
  if (rho0.n_spins() != n_ || observable.n_spins() != n_) {
    throw InvalidInput("operator sizes differ from the Hamiltonian");
  }
  // Tr(rho(t) O) = sum_{IJ} u_I(t)^T W_IJ conj(u_J(t)),
  // W_IJ = (V_I^dag rho0_IJ V_J) o (V_J^dag O_JI V_I)^T
  struct Term {
    const Block* row;
    const Block* col;
    Eigen::MatrixXcd weight;
  };
  std::vector<Term> terms;
  for (const Block& bi : blocks_) {
    for (const Block& bj : blocks_) {
      const Eigen::MatrixXcd r = gather(rho0.matrix(), bi, bj);
      if (r.cwiseAbs().maxCoeff() == 0.0) continue;
      const Eigen::MatrixXcd o = gather(observable.matrix(), bj, bi);
      if (o.cwiseAbs().maxCoeff() == 0.0) continue;
      const Eigen::MatrixXcd rt = bi.vectors.adjoint() * r * bj.vectors;
      const Eigen::MatrixXcd ot = bj.vectors.adjoint() * o * bi.vectors;
      terms.push_back({&bi, &bj, rt.cwiseProduct(ot.transpose())});
    }
  }
  std::vector<double> out;
  out.reserve(times.size());
  const double norm = static_cast<double>(dim_);
  for (double t : times) {
    cplx acc = 0.0;
    for (const Term& term : terms) {
      const Eigen::VectorXcd ui = (term.row->energies * cplx(0.0, -t)).array().exp().matrix();
      const Eigen::VectorXcd uj = (term.col->energies * cplx(0.0, t)).array().exp().matrix();
      acc += (ui.transpose() * (term.weight * uj)).value();
    }
    out.push_back(acc.real() / norm);
  }
  return out;
}

SpinOperator evolve(const SpinOperator& hamiltonian, const SpinOperator& rho0, double t) {
  if (hamiltonian.n_spins() != rho0.n_spins()) {
    throw InvalidInput("state and Hamiltonian sizes differ");
  }
  return Propagator(hamiltonian).evolve(rho0, t);
}

double polarization(const SpinOperator& rho, int b) {
  const int n = rho.n_spins();
  require_site(n, b);
  double acc = 0.0;
  for (Index s = 0; s < rho.dim(); ++s) acc += rho.matrix()(s, s).real() * z_value(s, n, b);
  return acc / static_cast<double>(rho.dim());
}

// ---------------------------------------------------------------------------
// Coherence orders

int max_coherence_order(const SpinOperator& rho, double tolerance) {
  const Eigen::MatrixXcd& m = rho.matrix();
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0;
  int q_max = 0;
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index r = 0; r < m.rows(); ++r) {
      if (std::abs(m(r, c)) > tolerance * scale) {
        q_max = std::max(q_max, std::abs(popcount(c) - popcount(r)));
      }
    }
  }
  return q_max;
}

int required_phase_steps(int max_order) { return 2 * max_order + 2; }

namespace {

// R(phi) rho R(phi)^dag for R = exp(-i phi sum sigma_z / 2); diagonal, so elementwise.
Eigen::MatrixXcd rotate_z(const Eigen::MatrixXcd& rho, int n, double phi) {
  const Index dim = rho.rows();
  Eigen::VectorXcd r(dim);
  for (Index s = 0; s < dim; ++s) r(s) = std::polar(1.0, -0.5 * phi * (n - 2.0 * popcount(s)));
  return r.asDiagonal() * rho * r.conjugate().asDiagonal();
}

void require_resolvable(int present_order, int phase_steps) {
  if (phase_steps <= 2 * present_order) {
    throw AliasingError("state carries coherence order " + std::to_string(present_order) +
                        "; " + std::to_string(phase_steps) +
                        " phase steps would fold it (need more than " +
                        std::to_string(2 * present_order) + ")");
  }
}

}  // namespace

SpinOperator CoherenceDecomposition::reconstruct() const {
  SpinOperator sum = SpinOperator::zero(n_spins);
  for (const auto& [q, part] : components) sum = sum + part;
  return sum;
}

double CoherenceDecomposition::intensity(int q) const {
  const auto it = components.find(q);
  if (it == components.end()) return 0.0;
  const SpinOperator& part = it->second;
  return part.matrix().squaredNorm() / static_cast<double>(part.dim());
}

CoherenceDecomposition coherence_decompose(const SpinOperator& rho, int max_order,
                                           int phase_steps) {
  if (max_order < 0) throw InvalidInput("max_order must be non-negative");
  require_resolvable(max_order, phase_steps);
  const int present = max_coherence_order(rho);
  if (present > max_order) {
    throw AliasingError("state carries coherence order " + std::to_string(present) +
                        " above max_order " + std::to_string(max_order));
  }
  const int n = rho.n_spins();
  // The rotation multiplies element (r, c) by exp(-i phi q_rc), so the phase
  // sum collapses to one weight per (q, q_rc) pair.
  const auto weight = [&](int q, int q_rc) {
    cplx w = 0.0;
    for (int k = 0; k < phase_steps; ++k) {
      w += std::polar(1.0, (q - q_rc) * 2.0 * std::numbers::pi * k / phase_steps);
    }
    return w / static_cast<double>(phase_steps);
  };
  const Index dim = rho.dim();
  std::vector<int> pop(static_cast<std::size_t>(dim));
  for (Index s = 0; s < dim; ++s) pop[static_cast<std::size_t>(s)] = popcount(s);

  CoherenceDecomposition out;
  out.n_spins = n;
  for (int q = -max_order; q <= max_order; ++q) {
    std::vector<cplx> w(static_cast<std::size_t>(2 * n + 1));
    for (int q_rc = -n; q_rc <= n; ++q_rc) w[static_cast<std::size_t>(q_rc + n)] = weight(q, q_rc);
    Eigen::MatrixXcd acc(dim, dim);
    for (Index c = 0; c < dim; ++c) {
      for (Index r = 0; r < dim; ++r) {
        const int q_rc = pop[static_cast<std::size_t>(c)] - pop[static_cast<std::size_t>(r)];
        acc(r, c) = w[static_cast<std::size_t>(q_rc + n)] * rho.matrix()(r, c);
      }
    }
    out.components.emplace(q, SpinOperator(n, std::move(acc)));
  }
  return out;
}

std::map<int, double> mqc_protocol(const Propagator& propagator, const SpinOperator& rho0,
                                   const SpinOperator& readout, double t, int phase_steps) {
  const int n = rho0.n_spins();
  if (readout.n_spins() != n || propagator.n_spins() != n) {
    throw InvalidInput("operator sizes differ");
  }
  const double reference = rho0.normalized_trace_product(readout).real();
  if (reference == 0.0) throw InvalidInput("readout has no overlap with the initial state");

  const SpinOperator prepared = propagator.evolve(rho0, t);
  require_resolvable(max_coherence_order(prepared), phase_steps);

  std::vector<cplx> signal(static_cast<std::size_t>(phase_steps));
  for (int k = 0; k < phase_steps; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / phase_steps;
    const SpinOperator encoded(n, rotate_z(prepared.matrix(), n, phi));
    const SpinOperator echo = propagator.evolve(encoded, -t);
    signal[k] = echo.normalized_trace_product(readout);
  }
  std::map<int, double> out;
  const int half = (phase_steps - 1) / 2;
  for (int q = -half; q <= half; ++q) {
    cplx acc = 0.0;
    for (int k = 0; k < phase_steps; ++k) {
      acc += std::polar(1.0, 2.0 * std::numbers::pi * q * k / phase_steps) * signal[k];
    }
    out[q] = acc.real() / phase_steps / reference;
  }
  return out;
}

std::map<int, double> mqc_protocol(const SpinOperator& rho0, const SpinOperator& hamiltonian,
                                   double t, int phase_steps) {
  return mqc_protocol(Propagator(hamiltonian), rho0, rho0, t, phase_steps);
}

TimeSeries dipolar_transport_baseline(int n, const CouplingTable& table,
                                      std::span<const double> times) {
  if (table.n_spins() != n) throw InvalidInput("coupling table size differs from n");
  const Propagator prop(build_hamiltonian(HamiltonianKind::Dipolar, table));
  const auto values = prop.expectation_series(SpinOperator::sigma_z(n, 1),
                                              SpinOperator::sigma_z(n, n), times);
  TimeSeries series("dipolar_baseline", std::vector<double>(times.begin(), times.end()));
  series.add_channel("P_1N_dipolar", values);
  series.metadata()["n"] = std::to_string(n);
  series.metadata()["engine"] = "oracle";
  series.metadata()["model"] = "dipolar";
  series.metadata()["max_P_1N"] = format_double(*std::max_element(values.begin(), values.end()));
  return series;
}

}  // namespace chainsim::oracle
