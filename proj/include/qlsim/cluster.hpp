#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "qlsim/algebra.hpp"
#include "qlsim/errors.hpp"
#include "qlsim/half_int.hpp"

namespace qlsim::cluster {

/// One fixed-excitation cluster of the deformed model: basis, qubit-photon
/// detuning (omega_0 - omega_q), coupling amplitude g and deformation factor f.
struct ClusterProblem {
  algebra::ClusterBasis basis;
  double detuning = 0.0;
  double g = 1.0;
  double f = 1.0;

  void validate() const {
    if (basis.dimension() < 1) throw DomainError("ClusterProblem: empty basis");
    if (!(f > 0.0)) throw DomainError("ClusterProblem: deformation factor must be > 0");
  }
};

/// Symmetric tridiagonal restriction of the deformed Hamiltonian to one
/// cluster, in the frame rotating at omega_q * u.
struct TridiagonalMatrix {
  Eigen::VectorXd diagonal;      // detuning * n
  Eigen::VectorXd off_diagonal;  // t_n = g sqrt(n f) alpha_{r, u-n}

  Eigen::MatrixXd dense() const {
    const auto d = diagonal.size();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    m.diagonal() = diagonal;
    for (Eigen::Index n = 1; n < d; ++n) {
      m(n - 1, n) = off_diagonal(n - 1);
      m(n, n - 1) = off_diagonal(n - 1);
    }
    return m;
  }
};

/// Splittings eps_k (ascending) with unit-norm coefficient vectors as
/// columns; each column's first nonzero entry is fixed positive.
struct ClusterSpectrum {
  Eigen::VectorXd splittings;
  Eigen::MatrixXd vectors;
};

/// Coupling entry n connects photon numbers n-1 and n. With m = u - n this
/// is the unique symmetric tridiagonal whose eigen-equations reproduce the
/// cluster's three-term recursion.
inline TridiagonalMatrix build_cluster_matrix(const ClusterProblem& p) {
  p.validate();
  const int d = p.basis.dimension();
  TridiagonalMatrix t;
  t.diagonal.resize(d);
  t.off_diagonal.resize(d > 1 ? d - 1 : 0);
  for (int n = 0; n < d; ++n) t.diagonal(n) = p.detuning * n;
  for (int n = 1; n < d; ++n)
    t.off_diagonal(n - 1) = p.g * std::sqrt(n * p.f) *
                            algebra::alpha(p.basis.r, p.basis.u - HalfInt(n));
  return t;
}

namespace detail {

inline void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  const double peak = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12 * peak) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

}  // namespace detail

inline ClusterSpectrum solve_cluster(const ClusterProblem& p) {
  const TridiagonalMatrix t = build_cluster_matrix(p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(t.diagonal, t.off_diagonal,
                                Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw NumericError("solve_cluster: tridiagonal eigensolver failed");
  ClusterSpectrum s{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index k = 0; k < s.vectors.cols(); ++k)
    detail::fix_sign(s.vectors.col(k));
  return s;
}

/// Coefficients generated by the cluster recursion with c_{-1} = 0, c_0 = 1,
/// plus the (dimensionless) boundary value assigned at index u+r+1. The
/// residual vanishes exactly when eps is a splitting of the cluster.
struct RecursionResult {
  Eigen::VectorXd coefficients;
  double boundary_residual = 0.0;
};

inline RecursionResult recursion_coefficients(double eps,
                                              const ClusterProblem& p) {
  p.validate();
  const TridiagonalMatrix t = build_cluster_matrix(p);
  const int d = p.basis.dimension();
  Eigen::VectorXd c(d);
  c(0) = 1.0;
  for (int n = 1; n < d; ++n) {
    const double coupling = t.off_diagonal(n - 1);
    if (!(coupling > 0.0))
      throw DegenerateChainError(
          "recursion_coefficients: vanishing ladder coupling at n = " +
          std::to_string(n));
    const double prev2 = n >= 2 ? c(n - 2) : 0.0;
    const double t_prev = n >= 2 ? t.off_diagonal(n - 2) : 0.0;
    c(n) = ((eps - t.diagonal(n - 1)) * c(n - 1) - t_prev * prev2) / coupling;
  }
  // The recursion's step at n = d has a vanishing ladder element, so the
  // boundary value is the (un-divided) numerator, normalized to be
  // dimensionless and scale-free.
  const double raw = (eps - t.diagonal(d - 1)) * c(d - 1) -
                     (d >= 2 ? t.off_diagonal(d - 2) * c(d - 2) : 0.0);
  const double scale =
      d >= 2 ? t.off_diagonal.cwiseAbs().maxCoeff() : std::max(1.0, std::abs(eps));
  const double peak = c.cwiseAbs().maxCoeff();
  return {c, std::abs(raw) / (scale * peak)};
}

/// Closed-form ratio c_0 / c_3 for the 3-qubit u = r = 3/2 cluster:
///   6 sqrt(6) g^3 f^{3/2}
///   / [eps (eps - dw)(eps - 2 dw) - (11 eps - 6 dw) g^2 f].
inline double ratio_c0_c3(double eps, double detuning, double g, double f) {
  const double numerator = 6.0 * std::sqrt(6.0) * g * g * g * f * std::sqrt(f);
  const double denominator =
      eps * (eps - detuning) * (eps - 2.0 * detuning) -
      (11.0 * eps - 6.0 * detuning) * g * g * f;
  if (std::abs(denominator) < std::numeric_limits<double>::min())
    throw SingularRatioError("ratio_c0_c3: denominator at a pole");
  return numerator / denominator;
}

/// Dressed-cluster energy E_u = omega_q * u + eps.
inline double energy(HalfInt u, double omega_q, double eps) {
  return omega_q * u.value() + eps;
}

}  // namespace qlsim::cluster
