// Closed-form asymptotic maps: the one-qubit Bloch fixed point, the two-qubit
// conditional expectation onto span{stationary product, singlet}, and the
// three-qubit images of the identity, the pair-singlet projections, and the
// depolarized-ancilla protocol family.
#pragma once

#include "symbath/lindblad.hpp"

namespace symbath {

/// Bloch-vector dynamics rdot = -2 (drift r - pump) of the one-qubit
/// generator; stationary() solves drift r = pump.
struct BlochSystem {
  Eigen::Matrix3d drift;
  Eigen::Vector3d pump;

  Eigen::Vector3d stationary() const;
};

BlochSystem bloch_system(const EnvironmentParams& p);

/// The unique full-rank one-qubit stationary state
/// (1/2)(1 + r sigma_3) with r = b/a. Refuses degenerate parameters.
DensityMatrix one_qubit_stationary(const EnvironmentParams& p);

/// n-fold tensor power of the one-qubit stationary state (plain matrix).
Mat stationary_product_matrix(const EnvironmentParams& p, int qubit_count);

/// Projector onto the two-qubit singlet (|01> - |10>)/sqrt(2).
const Mat& singlet_projector();

/// On three qubits: singlet projector on the pair (qa, qb) tensored with the
/// one-qubit stationary state on the remaining qubit, in global qubit order.
Mat singlet_pair_with_stationary(int qa, int qb, const EnvironmentParams& p);

/// One-parameter initial family: alpha 1 + (1 - 4 alpha) P_singlet on two
/// qubits, optionally extended by a depolarized third qubit. alpha must lie
/// in [0, 1/3].
DensityMatrix alpha_family_state(double alpha, int qubit_count);

/// The two-qubit asymptotic map:
///   E[rho] = 4(1 - p)/(3 + r^2) rho_inf (x) rho_inf
///          + (4 p - 1 + r^2)/(3 + r^2) P_singlet,   p = Tr(rho P_singlet).
/// Idempotent, linear, trace preserving.
DensityMatrix two_qubit_conditional_expectation(const DensityMatrix& rho,
                                                const EnvironmentParams& p);

/// Image of the (unnormalized) identity under the three-qubit asymptotic map:
///   8/(1+r^2) rho_inf^(x3) + 8 r^2/(3(1+r^2)) sum_{a<b} P^(ab) rho_inf^(c).
/// Trace 8.
Mat three_qubit_map_of_identity(const EnvironmentParams& p);

/// Asymptote of the protocol family alpha_family_state(alpha, 3):
///   4 alpha/(1+r^2) rho_inf^(x3)
///   + 4 alpha r^2/(3(1+r^2)) sum_{a<b} P^(ab) rho_inf^(c)
///   + (1 - 4 alpha) P^(12) rho_inf^(3).
DensityMatrix three_qubit_protocol_asymptote(double alpha, const EnvironmentParams& p);

/// Entries of the reduced two-qubit asymptote in X form: the matrix is
/// diag(x_plus, y, y, x_minus)/(1+r^2) with -u/(1+r^2) on the middle
/// antidiagonal.
struct XFormEntries {
  double x_plus = 0.0;
  double x_minus = 0.0;
  double y = 0.0;
  double u = 0.0;
};

struct ReducedProtocolState {
  DensityMatrix state;
  XFormEntries entries;
};

/// Partial trace of the protocol asymptote over the ancilla qubit, assembled
/// in closed form and cross-checked entrywise (1e-12) against its X-form
/// entries. Throws std::logic_error if the two constructions disagree.
ReducedProtocolState reduced_protocol_state(double alpha, const EnvironmentParams& p);

}  // namespace symbath
