// Superoperator machinery: vectorization of generators (column stacking),
// matrix-exponential propagation, convergence-detected asymptotic states via
// repeated squaring, and Heisenberg-picture time averages.
#pragma once

#include "symbath/lindblad.hpp"

#include <stdexcept>

namespace symbath {

/// Matrix form of a generator on the 4^n-dimensional operator space,
/// column-stacking convention: column k of `matrix` is vec(L[E_k]) for the
/// k-th matrix unit. Immutable; all operations on it are pure.
struct Superoperator {
  Mat matrix;
  int qubit_count = 0;
  bool degenerate = false;

  Eigen::Index dim() const { return Eigen::Index{1} << qubit_count; }
};

/// Column-stacking vec and its inverse (square matrices).
CVec vec(const Mat& m);
Mat unvec(const CVec& v);

Superoperator vectorize(const LindbladGenerator& gen);

/// exp(t L) as a matrix on operator space (scaling-and-squaring, Pade core).
/// t must be nonnegative: the maps form a one-parameter semigroup only.
Mat propagator(const Superoperator& s, double t);

/// Apply an operator-space matrix to a density matrix.
Mat apply_propagator(const Mat& prop, const Mat& rho);

struct ConvergenceResult {
  DensityMatrix state;
  double horizon = 0.0;   // final evolution time reached
  double residual = 0.0;  // max-abs change over the last horizon doubling
  int doublings = 0;
};

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double residual_)
      : std::runtime_error(what), residual(residual_) {}
  double residual;
};

/// Long-time limit of exp(tL)[rho0] by repeated squaring of the base-horizon
/// propagator (t = 1, 2, 4, ...), stopping when consecutive states differ by
/// less than tol in max-abs. Throws NonConvergenceError after 60 doublings;
/// refuses degenerate generators, whose convergence is not guaranteed.
ConvergenceResult asymptotic_state(const Superoperator& s, const DensityMatrix& rho0,
                                   double tol = 1e-10);

/// Trapezoidal approximation of (1/T) int_0^T exp(t L^dag)[x] dt, the
/// Heisenberg-picture time average. Converges to the conditional expectation
/// onto the invariant algebra as T grows, at a Cesaro O(1/T) rate for
/// observables with a transient part.
Mat time_average(const Superoperator& s, const Mat& x0, double horizon, int steps);

/// Heisenberg-picture long-time limit of an observable via repeated squaring
/// of the adjoint propagator.
Mat heisenberg_limit(const Superoperator& s, const Mat& x0, double tol = 1e-10);

/// Largest real part over the superoperator spectrum; nonpositive (up to
/// round-off) for a valid generator.
double spectral_abscissa(const Superoperator& s);

/// Dimension of the null space (singular values below `singular_tol`); equals
/// the dimension of the invariant algebra for the generators built here.
int kernel_dimension(const Superoperator& s, double singular_tol = 1e-10);

/// Choi matrix of the map rho -> unvec(prop vec(rho)); positive semidefinite
/// exactly when the map is completely positive.
Mat choi_matrix(const Mat& prop);

}  // namespace symbath
