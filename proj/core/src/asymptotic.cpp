#include "symbath/asymptotic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace symbath {

Eigen::Vector3d BlochSystem::stationary() const { return drift.colPivHouseholderQr().solve(pump); }

BlochSystem bloch_system(const EnvironmentParams& p) {
  p.validate();
  BlochSystem sys;
  sys.drift << p.a + p.c, p.omega / 2.0, 0.0,
               -p.omega / 2.0, p.a + p.c, 0.0,
               0.0, 0.0, 2.0 * p.a;
  sys.pump << 0.0, 0.0, 2.0 * p.b;
  return sys;
}

DensityMatrix one_qubit_stationary(const EnvironmentParams& p) {
  p.require_nondegenerate();
  const double r = p.r_infinity();
  Mat m(2, 2);
  m << (1.0 + r) / 2.0, 0.0, 0.0, (1.0 - r) / 2.0;
  return DensityMatrix::from_matrix(std::move(m));
}

Mat stationary_product_matrix(const EnvironmentParams& p, int qubit_count) {
  if (qubit_count < 1 || qubit_count > 3) {
    throw std::invalid_argument("stationary_product_matrix: qubit count must be 1..3");
  }
  p.validate();
  const double r = p.r_infinity();
  Mat one(2, 2);
  one << (1.0 + r) / 2.0, 0.0, 0.0, (1.0 - r) / 2.0;
  Mat out = one;
  for (int k = 1; k < qubit_count; ++k) out = kron(out, one);
  return out;
}

const Mat& singlet_projector() {
  static const Mat proj = [] {
    CVec psi = CVec::Zero(4);
    psi(1) = 1.0 / std::sqrt(2.0);
    psi(2) = -1.0 / std::sqrt(2.0);
    return Mat(psi * psi.adjoint());
  }();
  return proj;
}

Mat singlet_pair_with_stationary(int qa, int qb, const EnvironmentParams& p) {
  if (qa > qb) std::swap(qa, qb);
  if (qa < 1 || qb > 3 || qa == qb) {
    throw std::invalid_argument("singlet_pair_with_stationary: pair must be two of 1..3");
  }
  const int qc = 6 - qa - qb;
  const InvariantOperatorSet ops = invariant_operators();
  Mat stationary(2, 2);
  const double r = p.r_infinity();
  stationary << (1.0 + r) / 2.0, 0.0, 0.0, (1.0 - r) / 2.0;
  // P^(ab) acts as identity on qubit c, so the product is the tensor factorization.
  return ops.p_ab(qa, qb) * embed_single_qubit(stationary, qc, 3);
}

DensityMatrix alpha_family_state(double alpha, int qubit_count) {
  if (!(alpha >= 0.0 && alpha <= 1.0 / 3.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1/3], got " + std::to_string(alpha));
  }
  if (qubit_count != 2 && qubit_count != 3) {
    throw std::invalid_argument("alpha family is defined on 2 or 3 qubits");
  }
  Mat two = alpha * Mat::Identity(4, 4) + (1.0 - 4.0 * alpha) * singlet_projector();
  if (qubit_count == 2) return DensityMatrix::from_matrix(std::move(two));
  return DensityMatrix::from_matrix(kron(two, 0.5 * Mat::Identity(2, 2)));
}

DensityMatrix two_qubit_conditional_expectation(const DensityMatrix& rho,
                                                const EnvironmentParams& p) {
  if (rho.qubit_count() != 2) {
    throw std::invalid_argument("two_qubit_conditional_expectation: two-qubit state required");
  }
  p.require_nondegenerate();
  const double r = p.r_infinity();
  const double r2 = r * r;
  const double rho_p = expectation(rho, singlet_projector());
  Mat out = (4.0 * (1.0 - rho_p) / (3.0 + r2)) * stationary_product_matrix(p, 2) +
            ((4.0 * rho_p - 1.0 + r2) / (3.0 + r2)) * singlet_projector();
  return DensityMatrix::from_matrix(std::move(out));
}

Mat three_qubit_map_of_identity(const EnvironmentParams& p) {
  p.require_nondegenerate();
  const double r2 = p.r_infinity() * p.r_infinity();
  Mat out = (8.0 / (1.0 + r2)) * stationary_product_matrix(p, 3);
  const Mat pair_sum = singlet_pair_with_stationary(1, 2, p) +
                       singlet_pair_with_stationary(1, 3, p) +
                       singlet_pair_with_stationary(2, 3, p);
  out += (8.0 * r2 / (3.0 * (1.0 + r2))) * pair_sum;
  return out;
}

DensityMatrix three_qubit_protocol_asymptote(double alpha, const EnvironmentParams& p) {
  if (!(alpha >= 0.0 && alpha <= 1.0 / 3.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1/3], got " + std::to_string(alpha));
  }
  p.require_nondegenerate();
  const double r2 = p.r_infinity() * p.r_infinity();
  const Mat pair_sum = singlet_pair_with_stationary(1, 2, p) +
                       singlet_pair_with_stationary(1, 3, p) +
                       singlet_pair_with_stationary(2, 3, p);
  Mat out = (4.0 * alpha / (1.0 + r2)) * stationary_product_matrix(p, 3) +
            (4.0 * alpha * r2 / (3.0 * (1.0 + r2))) * pair_sum +
            (1.0 - 4.0 * alpha) * singlet_pair_with_stationary(1, 2, p);
  return DensityMatrix::from_matrix(std::move(out));
}

ReducedProtocolState reduced_protocol_state(double alpha, const EnvironmentParams& p) {
  if (!(alpha >= 0.0 && alpha <= 1.0 / 3.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1/3], got " + std::to_string(alpha));
  }
  p.require_nondegenerate();
  const double r = p.r_infinity();
  const double r2 = r * r;

  // Assembled form: stationary product + singlet + one-sided stationary mixtures.
  const Mat stationary2 = stationary_product_matrix(p, 2);
  const Mat one = stationary_product_matrix(p, 1);
  const Mat id2 = Mat::Identity(2, 2);
  const double singlet_weight = (4.0 * alpha * r2 + 3.0 * (1.0 - 4.0 * alpha) * (1.0 + r2)) /
                                (3.0 * (1.0 + r2));
  Mat assembled = (4.0 * alpha / (1.0 + r2)) * stationary2 +
                  singlet_weight * singlet_projector() +
                  (2.0 * alpha * r2 / (3.0 * (1.0 + r2))) * (kron(id2, one) + kron(one, id2));

  XFormEntries e;
  e.x_plus = (alpha / 3.0) * (1.0 + r) * (3.0 * (1.0 + r) + 2.0 * r2);
  e.x_minus = (alpha / 3.0) * (1.0 - r) * (3.0 * (1.0 - r) + 2.0 * r2);
  e.y = (3.0 * (1.0 + r2) - 2.0 * alpha * (3.0 + 5.0 * r2)) / 6.0;
  e.u = (3.0 * (1.0 + r2) - 4.0 * alpha * (3.0 + 2.0 * r2)) / 6.0;

  Mat xform = Mat::Zero(4, 4);
  xform(0, 0) = e.x_plus;
  xform(1, 1) = e.y;
  xform(2, 2) = e.y;
  xform(1, 2) = -e.u;
  xform(2, 1) = -e.u;
  xform(3, 3) = e.x_minus;
  xform /= (1.0 + r2);

  const double mismatch = max_abs_diff(assembled, xform);
  if (mismatch > 1e-12) {
    throw std::logic_error("reduced_protocol_state: X-form entries disagree with assembled matrix by " +
                           std::to_string(mismatch));
  }
  return ReducedProtocolState{DensityMatrix::from_matrix(std::move(assembled)), e};
}

}  // namespace symbath
