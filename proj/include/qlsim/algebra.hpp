#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "qlsim/errors.hpp"
#include "qlsim/half_int.hpp"

namespace qlsim::algebra {

/// Total spin r and projection m of a collective (Dicke) state.
struct SpinQuantum {
  HalfInt r;
  HalfInt m;
};

/// Ladder matrix element alpha_{r,m} = sqrt((r - m)(r + m + 1)).
/// The factors are exact integers for any valid (r, m) pair.
inline double alpha(HalfInt r, HalfInt m) {
  if ((r.twice() - m.twice()) % 2 != 0)
    throw DomainError("alpha: r and m must have equal parity");
  if (m.twice() > r.twice() || m.twice() < -r.twice())
    throw DomainError("alpha: |m| > r");
  const auto lower = static_cast<std::int64_t>((r.twice() - m.twice()) / 2);
  const auto raise = static_cast<std::int64_t>((r.twice() + m.twice()) / 2 + 1);
  return std::sqrt(static_cast<double>(lower * raise));
}

struct ClusterState {
  int photons = 0;       // n
  HalfInt projection;    // m = u - n
};

/// Basis of the fixed-excitation cluster |u>: photon numbers n = 0..u+r with
/// spin projection m = u - n, ordered by ascending n.
struct ClusterBasis {
  HalfInt u;
  HalfInt r;
  std::vector<ClusterState> states;

  int dimension() const { return static_cast<int>(states.size()); }
};

inline ClusterBasis cluster_basis(HalfInt u, HalfInt r) {
  if (r.twice() < 0) throw DomainError("cluster_basis: r must be >= 0");
  if ((u.twice() + r.twice()) % 2 != 0)
    throw DomainError("cluster_basis: u and r must have equal parity");
  if (u < -r) throw DomainError("cluster_basis: u below the global ground state");
  if (u > r)
    throw UnsupportedRegimeError(
        "cluster_basis: photon-rich clusters with u > r are not modeled");
  ClusterBasis basis{u, r, {}};
  const int dim = (u.twice() + r.twice()) / 2 + 1;
  basis.states.reserve(static_cast<std::size_t>(dim));
  for (int n = 0; n < dim; ++n)
    basis.states.push_back({n, u - HalfInt(n)});
  return basis;
}

namespace detail {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i)
    c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

}  // namespace detail

/// Amplitudes of the symmetric Dicke state |r = N/2, m> over the 2^N
/// computational basis (bit j of the index = qubit j, set bit = spin up):
/// every configuration with r + m up-spins carries 1/sqrt(C(N, r+m)).
inline std::vector<std::complex<double>> dicke_amplitudes(HalfInt r, HalfInt m,
                                                          int n_qubits) {
  if (n_qubits < 1 || n_qubits > 20)
    throw DomainError("dicke_amplitudes: n_qubits out of range");
  if (r.twice() != n_qubits)
    throw DomainError("dicke_amplitudes: only the fully symmetric sector r = N/2");
  if ((r.twice() - m.twice()) % 2 != 0 || m.twice() > r.twice() ||
      m.twice() < -r.twice())
    throw DomainError("dicke_amplitudes: invalid projection m");
  const int ups = (r.twice() + m.twice()) / 2;
  const double amp =
      1.0 / std::sqrt(static_cast<double>(detail::binomial(n_qubits, ups)));
  std::vector<std::complex<double>> out(std::size_t{1} << n_qubits,
                                        std::complex<double>(0.0, 0.0));
  for (std::size_t b = 0; b < out.size(); ++b)
    if (std::popcount(b) == ups) out[b] = amp;
  return out;
}

}  // namespace qlsim::algebra
