#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <variant>
#include <vector>

#include "qlsim/algebra.hpp"
#include "qlsim/errors.hpp"

namespace qlsim::entanglement {

using Complex = std::complex<double>;

/// Normalized pure state of n qubits. Bit j of an amplitude index is the
/// state of qubit j; a set bit is spin up.
struct PureQubitState {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;
};

struct DensityMatrix {
  int n_qubits = 0;
  Eigen::MatrixXcd matrix;
};

namespace detail {

inline void check_norm(const PureQubitState& psi, const char* where) {
  if (psi.amplitudes.size() != Eigen::Index{1} << psi.n_qubits)
    throw DomainError(std::string(where) + ": amplitude count != 2^N");
  if (std::abs(psi.amplitudes.norm() - 1.0) > 1e-8)
    throw DomainError(std::string(where) + ": state is not normalized");
}

}  // namespace detail

inline PureQubitState make_pure(int n_qubits, Eigen::VectorXcd amplitudes) {
  PureQubitState psi{n_qubits, std::move(amplitudes)};
  detail::check_norm(psi, "make_pure");
  return psi;
}

inline PureQubitState ghz_state() {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(8);
  a(0) = a(7) = 1.0 / std::sqrt(2.0);
  return {3, std::move(a)};
}

inline PureQubitState w_state() {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(8);
  a(3) = a(5) = a(6) = 1.0 / std::sqrt(3.0);  // two-up configurations
  return {3, std::move(a)};
}

inline DensityMatrix density_of(const PureQubitState& psi) {
  detail::check_norm(psi, "density_of");
  return {psi.n_qubits, psi.amplitudes * psi.amplitudes.adjoint()};
}

namespace detail {

inline std::vector<int> checked_keep(int n_qubits, std::vector<int> keep,
                                     const char* where) {
  if (keep.empty()) throw DomainError(std::string(where) + ": empty keep set");
  std::sort(keep.begin(), keep.end());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n_qubits)
      throw DomainError(std::string(where) + ": qubit index out of range");
    if (i > 0 && keep[i] == keep[i - 1])
      throw DomainError(std::string(where) + ": duplicate qubit index");
  }
  return keep;
}

// Scatters the bits of `sub` into the qubit positions listed in `positions`.
inline int scatter_bits(int sub, const std::vector<int>& positions) {
  int idx = 0;
  for (std::size_t p = 0; p < positions.size(); ++p)
    idx |= ((sub >> p) & 1) << positions[p];
  return idx;
}

}  // namespace detail

inline DensityMatrix partial_trace(const PureQubitState& psi,
                                   const std::vector<int>& keep_in) {
  detail::check_norm(psi, "partial_trace");
  const auto keep = detail::checked_keep(psi.n_qubits, keep_in, "partial_trace");
  std::vector<int> traced;
  for (int q = 0; q < psi.n_qubits; ++q)
    if (!std::binary_search(keep.begin(), keep.end(), q)) traced.push_back(q);
  const int dk = 1 << keep.size();
  const int dt = 1 << traced.size();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dk, dk);
  for (int a = 0; a < dk; ++a) {
    const int ia = detail::scatter_bits(a, keep);
    for (int b = 0; b < dk; ++b) {
      const int ib = detail::scatter_bits(b, keep);
      Complex acc(0.0, 0.0);
      for (int t = 0; t < dt; ++t) {
        const int it = detail::scatter_bits(t, traced);
        acc += psi.amplitudes(ia | it) * std::conj(psi.amplitudes(ib | it));
      }
      rho(a, b) = acc;
    }
  }
  return {static_cast<int>(keep.size()), std::move(rho)};
}

inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const std::vector<int>& keep_in) {
  if (rho.matrix.rows() != Eigen::Index{1} << rho.n_qubits)
    throw DomainError("partial_trace: dimension != 2^N");
  const auto keep = detail::checked_keep(rho.n_qubits, keep_in, "partial_trace");
  std::vector<int> traced;
  for (int q = 0; q < rho.n_qubits; ++q)
    if (!std::binary_search(keep.begin(), keep.end(), q)) traced.push_back(q);
  const int dk = 1 << keep.size();
  const int dt = 1 << traced.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  for (int a = 0; a < dk; ++a) {
    const int ia = detail::scatter_bits(a, keep);
    for (int b = 0; b < dk; ++b) {
      const int ib = detail::scatter_bits(b, keep);
      Complex acc(0.0, 0.0);
      for (int t = 0; t < dt; ++t) {
        const int it = detail::scatter_bits(t, traced);
        acc += rho.matrix(ia | it, ib | it);
      }
      out(a, b) = acc;
    }
  }
  return {static_cast<int>(keep.size()), std::move(out)};
}

inline double purity(const DensityMatrix& rho) {
  return (rho.matrix * rho.matrix).trace().real();
}

/// Multipartite concurrence for pure states,
///   C_N = 2^{1-N/2} sqrt((2^N - 2) - sum_S Tr rho_S^2),
/// summed over all 2^N - 2 proper nonempty subsystem reductions.
inline double multipartite_concurrence(const PureQubitState& psi) {
  detail::check_norm(psi, "multipartite_concurrence");
  const int n = psi.n_qubits;
  double purity_sum = 0.0;
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    std::vector<int> keep;
    for (int q = 0; q < n; ++q)
      if (mask & (1 << q)) keep.push_back(q);
    purity_sum += purity(partial_trace(psi, keep));
  }
  const double gap = static_cast<double>((1 << n) - 2) - purity_sum;
  return std::pow(2.0, 1.0 - 0.5 * n) * std::sqrt(std::max(0.0, gap));
}

/// Three-tangle via the Cayley hyperdeterminant, tau = 4 |d1 - 2 d2 + 4 d3|,
/// clamped to [0, 1].
inline double three_tangle(const PureQubitState& psi) {
  detail::check_norm(psi, "three_tangle");
  if (psi.n_qubits != 3) throw DomainError("three_tangle: requires N = 3");
  const auto a = [&psi](int i, int j, int k) {
    return psi.amplitudes(i + 2 * j + 4 * k);
  };
  const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                     a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                     a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                     a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                     a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  const double tau = 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
  return std::clamp(tau, 0.0, 1.0);
}

/// Wootters concurrence of a two-qubit density matrix.
inline double bipartite_concurrence(const DensityMatrix& rho) {
  if (rho.n_qubits != 2 || rho.matrix.rows() != 4 || rho.matrix.cols() != 4)
    throw DomainError("bipartite_concurrence: requires a 2-qubit state");
  if ((rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
    throw DomainError("bipartite_concurrence: matrix not Hermitian");
  if (std::abs(rho.matrix.trace().real() - 1.0) > 1e-8)
    throw DomainError("bipartite_concurrence: trace != 1");
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> herm(rho.matrix,
                                                         Eigen::EigenvaluesOnly);
    if (herm.eigenvalues().minCoeff() < -1e-8)
      throw DomainError("bipartite_concurrence: matrix not positive semidefinite");
  }
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Eigen::Matrix4cd flipped = yy * rho.matrix.conjugate() * yy;
  const Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(rho.matrix * flipped,
                                                           false);
  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i)
    lambda[static_cast<std::size_t>(i)] =
        std::sqrt(std::max(0.0, solver.eigenvalues()(i).real()));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

enum class PhotonPolicy { kProjectQubitComponent, kTracePhoton };

/// Coherent qubit-side state of a dressed cluster eigenvector: each photon
/// number n carries a distinct projection m = u - n, so
/// sum_n c_n |dicke(r, u - n)> is well defined; renormalized.
inline PureQubitState project_qubit_component(const Eigen::VectorXd& c,
                                              const algebra::ClusterBasis& basis) {
  if (c.size() != basis.dimension())
    throw DomainError("project_qubit_component: coefficient count != cluster dimension");
  const int n_qubits = basis.r.twice();
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  for (int n = 0; n < basis.dimension(); ++n) {
    const auto dicke = algebra::dicke_amplitudes(
        basis.r, basis.states[static_cast<std::size_t>(n)].projection, n_qubits);
    for (Eigen::Index b = 0; b < amp.size(); ++b)
      amp(b) += c(n) * dicke[static_cast<std::size_t>(b)];
  }
  const double norm = amp.norm();
  if (norm < 1e-12)
    throw DegenerateStateError("project_qubit_component: zero-norm projection");
  return {n_qubits, amp / norm};
}

/// Proper partial trace over the photon: the |c_n|^2-weighted mixture of the
/// Dicke components.
inline DensityMatrix trace_photon(const Eigen::VectorXd& c,
                                  const algebra::ClusterBasis& basis) {
  if (c.size() != basis.dimension())
    throw DomainError("trace_photon: coefficient count != cluster dimension");
  const int n_qubits = basis.r.twice();
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < basis.dimension(); ++n) {
    const auto dicke = algebra::dicke_amplitudes(
        basis.r, basis.states[static_cast<std::size_t>(n)].projection, n_qubits);
    Eigen::VectorXcd v(dim);
    for (Eigen::Index b = 0; b < dim; ++b) v(b) = dicke[static_cast<std::size_t>(b)];
    rho += (c(n) * c(n)) * (v * v.adjoint());
  }
  return {n_qubits, std::move(rho)};
}

inline std::variant<PureQubitState, DensityMatrix> qubit_state_from_cluster(
    const Eigen::VectorXd& c, const algebra::ClusterBasis& basis,
    PhotonPolicy policy) {
  if (policy == PhotonPolicy::kProjectQubitComponent)
    return project_qubit_component(c, basis);
  return trace_photon(c, basis);
}

}  // namespace qlsim::entanglement
