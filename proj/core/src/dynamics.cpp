#include "symbath/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <string>

namespace symbath {

CVec vec(const Mat& m) {
  CVec v(m.size());
  Eigen::Index k = 0;
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    v.segment(k, m.rows()) = m.col(col);
    k += m.rows();
  }
  return v;
}

Mat unvec(const CVec& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(v.size()))));
  if (d * d != v.size()) {
    throw std::invalid_argument("unvec: length is not a perfect square");
  }
  Mat m(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    m.col(col) = v.segment(col * d, d);
  }
  return m;
}

Superoperator vectorize(const LindbladGenerator& gen) {
  const Eigen::Index d = gen.dim();
  Mat sup(d * d, d * d);
  Mat unit = Mat::Zero(d, d);
  for (Eigen::Index k = 0; k < d * d; ++k) {
    unit(k % d, k / d) = 1.0;
    sup.col(k) = vec(gen.apply(unit));
    unit(k % d, k / d) = 0.0;
  }
  return Superoperator{std::move(sup), gen.qubit_count(), gen.degenerate()};
}

Mat propagator(const Superoperator& s, double t) {
  if (t < 0.0) {
    throw std::invalid_argument("propagator: time must be nonnegative (semigroup only)");
  }
  return Mat(t * s.matrix).exp();
}

Mat apply_propagator(const Mat& prop, const Mat& rho) { return unvec(prop * vec(rho)); }

namespace {

DensityMatrix state_from_vec(const CVec& v) {
  Mat m = unvec(v);
  m = 0.5 * (m + Mat(m.adjoint()));
  m /= m.trace().real();
  return DensityMatrix::from_matrix(std::move(m));
}

}  // namespace

ConvergenceResult asymptotic_state(const Superoperator& s, const DensityMatrix& rho0,
                                   double tol) {
  if (s.degenerate) {
    throw std::invalid_argument(
        "asymptotic_state: degenerate generator, convergence not guaranteed");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("asymptotic_state: tolerance must be positive");
  }
  if (rho0.dim() != s.dim()) {
    throw std::invalid_argument("asymptotic_state: state dimension mismatch");
  }

  constexpr int kMaxDoublings = 60;
  Mat prop = propagator(s, 1.0);
  const CVec v0 = vec(rho0.matrix());
  CVec prev = prop * v0;
  double horizon = 1.0;
  double residual = 0.0;
  for (int k = 1; k <= kMaxDoublings; ++k) {
    prop = prop * prop;
    horizon *= 2.0;
    const CVec cur = prop * v0;
    residual = (cur - prev).cwiseAbs().maxCoeff();
    if (residual < tol) {
      return ConvergenceResult{state_from_vec(cur), horizon, residual, k};
    }
    prev = cur;
  }
  throw NonConvergenceError(
      "asymptotic_state: no convergence after 60 horizon doublings, last residual " +
      std::to_string(residual),
      residual);
}

Mat time_average(const Superoperator& s, const Mat& x0, double horizon, int steps) {
  if (!(horizon > 0.0)) {
    throw std::invalid_argument("time_average: horizon must be positive");
  }
  if (steps < 2) {
    throw std::invalid_argument("time_average: at least 2 steps required");
  }
  const double h = horizon / steps;
  const Mat step = Mat(h * s.matrix.adjoint()).exp();
  CVec v = vec(x0);
  CVec acc = 0.5 * v;
  for (int k = 1; k < steps; ++k) {
    v = step * v;
    acc += v;
  }
  v = step * v;
  acc += 0.5 * v;
  return unvec(CVec(acc / steps));
}

Mat heisenberg_limit(const Superoperator& s, const Mat& x0, double tol) {
  constexpr int kMaxDoublings = 60;
  Mat prop = Mat(s.matrix.adjoint()).exp();
  const CVec v0 = vec(x0);
  CVec prev = prop * v0;
  double residual = 0.0;
  for (int k = 1; k <= kMaxDoublings; ++k) {
    prop = prop * prop;
    const CVec cur = prop * v0;
    residual = (cur - prev).cwiseAbs().maxCoeff();
    if (residual < tol) return unvec(cur);
    prev = cur;
  }
  throw NonConvergenceError(
      "heisenberg_limit: no convergence after 60 horizon doublings, last residual " +
      std::to_string(residual),
      residual);
}

double spectral_abscissa(const Superoperator& s) {
  Eigen::ComplexEigenSolver<Mat> es(s.matrix, false);
  return es.eigenvalues().real().maxCoeff();
}

int kernel_dimension(const Superoperator& s, double singular_tol) {
  Eigen::JacobiSVD<Mat> svd(s.matrix);
  return static_cast<int>((svd.singularValues().array() < singular_tol).count());
}

Mat choi_matrix(const Mat& prop) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(prop.rows()))));
  Mat choi = Mat::Zero(d * d, d * d);
  Mat unit = Mat::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index l = 0; l < d; ++l) {
      unit(k, l) = 1.0;
      const Mat image = apply_propagator(prop, unit);
      unit(k, l) = 0.0;
      choi.block(k * d, l * d, d, d) = image;
    }
  }
  return choi;
}

}  // namespace symbath
