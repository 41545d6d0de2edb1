#include "symbath/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace symbath {

ConcurrenceBreakdown concurrence_oracle(const DensityMatrix& rho) {
  if (rho.qubit_count() != 2) {
    throw std::invalid_argument("concurrence_oracle: two-qubit state required");
  }
  static const Mat flip = kron(pauli(2), pauli(2));

  // The lambda_i are the square-rooted eigenvalues of rho rho~ with
  // rho~ = (s2 x s2) conj(rho) (s2 x s2). Equivalently they are the singular
  // values of sqrt(rho) (s2 x s2) conj(sqrt(rho)): with s = sqrt(rho),
  //   rho rho~ ~ s (s2 x s2) conj(rho) (s2 x s2) s = A A^dag,
  // which keeps the small lambda_i at full absolute accuracy instead of
  // taking square roots of eigenvalues computed near zero.
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.matrix());
  Mat clamped = Mat::Zero(4, 4);
  for (int k = 0; k < 4; ++k) {
    const double ev = std::max(es.eigenvalues()(k), -1e-12);
    clamped(k, k) = std::sqrt(std::max(0.0, ev));
  }
  const Mat root = es.eigenvectors() * clamped * es.eigenvectors().adjoint();
  const Mat a = root * flip * root.conjugate();
  Eigen::JacobiSVD<Mat> svd(a);

  std::array<double, 4> lambdas{};
  for (int k = 0; k < 4; ++k) lambdas[static_cast<std::size_t>(k)] = svd.singularValues()(k);
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  const double value =
      std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
  return ConcurrenceBreakdown{value, lambdas, "oracle"};
}

double concurrence_alpha_family(double alpha) { return std::max(0.0, 1.0 - 6.0 * alpha); }

double closed_form_asymptotic_concurrence(double alpha, double r) {
  const double r2 = r * r;
  return 0.5 - 3.0 * alpha * (3.0 - r2) / (3.0 + r2);
}

double closed_form_general_concurrence(double rho_p, double r) {
  const double r2 = r * r;
  const double inner = 2.0 * std::abs(4.0 * rho_p - (1.0 - r2)) -
                       2.0 * (1.0 - rho_p) * (1.0 - r2);
  return std::max(0.0, inner) / (2.0 * (3.0 + r2));
}

double delta_of_r(double r) {
  const double r2 = r * r;
  return (1.0 - r2) * ((3.0 + 2.0 * r2) * (3.0 + 2.0 * r2) - 9.0 * r2);
}

double reduced_radicand(double r, Radicand which) {
  const double r2 = r * r;
  if (which == Radicand::Derived) return delta_of_r(r);
  return (1.0 - r2) * (9.0 + 9.0 * r2 + 4.0 * r2 * r2);
}

double reduced_state_concurrence(double alpha, double r, Radicand which) {
  const double r2 = r * r;
  const double inner = std::abs(3.0 * (1.0 + r2) - 4.0 * alpha * (3.0 + 2.0 * r2)) -
                       2.0 * alpha * std::sqrt(reduced_radicand(r, which));
  return std::max(0.0, inner / (3.0 * (1.0 + r2)));
}

ThresholdSet thresholds(double r) {
  if (!(std::abs(r) <= 1.0)) {
    throw std::invalid_argument("thresholds: |r| <= 1 required");
  }
  const double r2 = r * r;
  ThresholdSet t;
  t.delta_r = delta_of_r(r);
  t.alpha_sep = (3.0 + r2) / (6.0 * (3.0 - r2));
  t.alpha_gain = (3.0 + r2) / (18.0 * (1.0 + r2));
  const double root = std::sqrt(t.delta_r);
  t.alpha_plus = 3.0 * (1.0 + r2) / (4.0 * (3.0 + 2.0 * r2) + 2.0 * root);
  t.alpha_minus = 3.0 * (1.0 + r2) / (4.0 * (3.0 + 2.0 * r2) - 2.0 * root);
  return t;
}

double critical_r(Radicand which, double tol) {
  const auto alpha_minus = [which](double r) {
    const double r2 = r * r;
    return 3.0 * (1.0 + r2) /
           (4.0 * (3.0 + 2.0 * r2) - 2.0 * std::sqrt(reduced_radicand(r, which)));
  };
  // alpha_minus decreases from 1/2 at r = 0 to 3/10 at r = 1.
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (alpha_minus(mid) > 1.0 / 3.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double oracle_critical_r(double resolution) {
  const auto entangled_at_third = [](double r) {
    EnvironmentParams p{1.0, r, 1.0, 1.0};
    return concurrence_oracle(reduced_protocol_state(1.0 / 3.0, p).state).value > 0.0;
  };
  double lo = 0.0, hi = 0.9999999;
  if (!entangled_at_third(hi)) {
    throw std::logic_error("oracle_critical_r: no entanglement onset below r = 1");
  }
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    if (entangled_at_third(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

DeltaSet delta_quantities(double alpha, double r, ConcurrenceMode mode) {
  if (!(alpha >= 0.0 && alpha <= 1.0 / 3.0)) {
    throw std::invalid_argument("delta_quantities: alpha must lie in [0, 1/3]");
  }
  if (!(std::abs(r) < 1.0)) {
    throw std::invalid_argument("delta_quantities: |r| < 1 required");
  }
  double c_init = 0.0, c_asym = 0.0, c_red = 0.0;
  if (mode == ConcurrenceMode::Oracle) {
    const EnvironmentParams p{1.0, r, 1.0, 1.0};
    const DensityMatrix initial = alpha_family_state(alpha, 2);
    c_init = concurrence_oracle(initial).value;
    c_asym = concurrence_oracle(two_qubit_conditional_expectation(initial, p)).value;
    c_red = concurrence_oracle(reduced_protocol_state(alpha, p).state).value;
  } else {
    c_init = concurrence_alpha_family(alpha);
    c_asym = std::max(0.0, closed_form_asymptotic_concurrence(alpha, r));
    c_red = reduced_state_concurrence(alpha, r);
  }
  return DeltaSet{c_asym - c_init, c_red - c_init, c_red - c_asym};
}

}  // namespace symbath
