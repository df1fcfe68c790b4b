#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qlsim/errors.hpp"
#include "qlsim/rng.hpp"

namespace qlsim::lattice {

/// Quasi-lattice geometry: N qubits on integer coordinates j, a relative
/// spacing ell = 2 L_q / lambda_p, Gaussian dislocation spread sigma and the
/// coupling amplitude g (angular frequency units).
struct LatticeSpec {
  int n_qubits = 1;
  double rel_spacing = 0.0;
  double sigma = 0.0;
  double g_max = 1.0;
  std::optional<std::vector<double>> dislocations;

  void validate() const {
    if (n_qubits < 1) throw DomainError("LatticeSpec: n_qubits must be >= 1");
    if (sigma < 0.0) throw DomainError("LatticeSpec: sigma must be >= 0");
    if (dislocations &&
        dislocations->size() != static_cast<std::size_t>(n_qubits))
      throw DomainError("LatticeSpec: dislocation list length != n_qubits");
  }
};

/// Realized coupling weights eta_j = cos((j + x_j) pi ell), so eta_0 = 1
/// whenever the first qubit sits on its equilibrium coordinate.
struct CouplingProfile {
  std::vector<double> eta;
};

enum class DeformationMethod { kSample, kClosedForm, kExactGaussian };

struct DeformationFactor {
  double value = 1.0;
  DeformationMethod method = DeformationMethod::kSample;
};

/// I.i.d. mean-zero Gaussian offsets with standard deviation sigma.
/// Draw j depends only on (seed, j).
inline std::vector<double> sample_dislocations(int n, double sigma,
                                               std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_dislocations: n must be >= 1");
  if (sigma < 0.0) throw DomainError("sample_dislocations: sigma must be >= 0");
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  if (sigma == 0.0) return x;
  const CounterRng rng(seed);
  for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = sigma * rng.normal(static_cast<std::uint64_t>(j));
  return x;
}

inline CouplingProfile coupling_profile(const LatticeSpec& spec,
                                        const std::vector<double>& x) {
  spec.validate();
  if (x.size() != static_cast<std::size_t>(spec.n_qubits))
    throw DomainError("coupling_profile: dislocation length != n_qubits");
  CouplingProfile p;
  p.eta.resize(x.size());
  for (int j = 0; j < spec.n_qubits; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    p.eta[idx] =
        std::cos((j + x[idx]) * std::numbers::pi * spec.rel_spacing);
  }
  return p;
}

/// Uses the spec's explicit dislocation list when present, otherwise the
/// equilibrium coordinates.
inline CouplingProfile coupling_profile(const LatticeSpec& spec) {
  spec.validate();
  if (spec.dislocations) return coupling_profile(spec, *spec.dislocations);
  return coupling_profile(
      spec, std::vector<double>(static_cast<std::size_t>(spec.n_qubits), 0.0));
}

/// Deformation of the realized profile: mean of eta_j^2 over the N qubits.
inline DeformationFactor deformation_sample(const CouplingProfile& profile) {
  if (profile.eta.empty()) throw DomainError("deformation_sample: empty profile");
  double sum = 0.0;
  for (const double e : profile.eta) sum += e * e;
  return {sum / static_cast<double>(profile.eta.size()),
          DeformationMethod::kSample};
}

namespace detail {

// sin((2n-1) pi ell) / sin(pi ell), expanded as the Dirichlet cosine sum
// 1 + 2 sum_{k=1}^{n-1} cos(2 k pi ell). The two sides agree as real
// functions; the sum form is finite at sin(pi ell) = 0 (where it equals the
// analytic limit (2n-1) cos((2n-1) pi ell)/cos(pi ell)) and stays within a
// few ulp of the directly sampled profile average, which the quotient form
// does not once sin(pi ell) is small.
inline double dirichlet_ratio(int n, double ell) {
  double acc = 1.0;
  for (int k = 1; k < n; ++k)
    acc += 2.0 * std::cos(2.0 * k * std::numbers::pi * ell);
  return acc;
}

}  // namespace detail

/// Expected deformation factor, printed closed form:
///   f = (1 + (pi ell sigma)^2)/2
///     + (1 - (pi ell sigma)^2)/(4N) * (1 + sin((2N-1) pi ell)/sin(pi ell)).
inline DeformationFactor deformation_closed_form(int n, double ell,
                                                 double sigma) {
  if (n < 1) throw DomainError("deformation_closed_form: n must be >= 1");
  const double t = std::pow(std::numbers::pi * ell * sigma, 2);
  const double bracket = 1.0 + detail::dirichlet_ratio(n, ell);
  return {0.5 * (1.0 + t) + (1.0 - t) / (4.0 * n) * bracket,
          DeformationMethod::kClosedForm};
}

/// Exact Gaussian expectation of the sampled deformation factor,
///   E[f~] = 1/2 + exp(-2 (pi ell sigma)^2)/(4N) * (1 + sin((2N-1) pi ell)/sin(pi ell)),
/// from E[cos(2 (j+x) pi ell)] = cos(2 j pi ell) exp(-2 (pi ell sigma)^2).
/// Serves as the cross-check oracle for the closed form above.
inline DeformationFactor deformation_exact_gaussian(int n, double ell,
                                                    double sigma) {
  if (n < 1) throw DomainError("deformation_exact_gaussian: n must be >= 1");
  if (sigma < 0.0)
    throw DomainError("deformation_exact_gaussian: sigma must be >= 0");
  const double t = std::pow(std::numbers::pi * ell * sigma, 2);
  const double bracket = 1.0 + detail::dirichlet_ratio(n, ell);
  return {0.5 + std::exp(-2.0 * t) / (4.0 * n) * bracket,
          DeformationMethod::kExactGaussian};
}

}  // namespace qlsim::lattice
