// Dense complex-matrix primitives for few-qubit operator algebra:
// Pauli/tensor constructions, density matrices, partial traces, the
// permutation-invariant operator family on three qubits, and a brute-force
// commutant solver on operator space.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace symbath {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Default absolute tolerance for matrix equality checks.
inline constexpr double kDefaultMatchTol = 1e-10;

double max_abs(const Mat& a);
double max_abs_diff(const Mat& a, const Mat& b);
bool approx_equal(const Mat& a, const Mat& b, double tol = kDefaultMatchTol);

Mat dagger(const Mat& a);

/// Hilbert-Schmidt inner product Tr(a^dagger b).
Cplx hs_inner(const Mat& a, const Mat& b);

/// Max-abs deviation of a from its own adjoint.
double hermiticity_defect(const Mat& a);

/// Smallest eigenvalue of the Hermitian part (a + a^dagger)/2.
double min_eigenvalue(const Mat& a);

/// Pauli matrices in the eigenbasis of sigma_3, with sigma_3|0> = +|0>.
/// Index 0 is the 2x2 identity. Throws std::invalid_argument otherwise.
Mat pauli(int index);

/// Kronecker product; the left factor is the slow (most significant) index.
/// This fixes the qubit-ordering convention project-wide: qubit 1 is the
/// slowest tensor slot.
Mat kron(const Mat& a, const Mat& b);

/// op acting on `qubit` (1-based) of `qubit_count` qubits, identity elsewhere.
Mat embed_single_qubit(const Mat& op, int qubit, int qubit_count);

/// Collective spin component S_i = sum_a sigma_i^(a), i in 1..3.
Mat global_spin(int i, int qubit_count);

/// A validated quantum state of 1..3 qubits: Hermitian (1e-12), unit trace
/// (1e-12), and positive semidefinite (smallest eigenvalue >= -1e-10).
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kEigenvalueFloor = -1e-10;

  /// Validates and wraps; throws std::invalid_argument naming the violated
  /// invariant.
  static DensityMatrix from_matrix(Mat m);

  const Mat& matrix() const { return mat_; }
  int qubit_count() const { return qubits_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  DensityMatrix(Mat m, int qubits) : mat_(std::move(m)), qubits_(qubits) {}

  Mat mat_;
  int qubits_ = 0;
};

/// Reduced matrix on the kept qubits (1-based labels, any order given is
/// normalized to ascending). Keeping all qubits is allowed; an empty keep set
/// throws.
Mat partial_trace(const Mat& m, const std::vector<int>& keep, int qubit_count);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Expectation value Tr(rho x), real part.
double expectation(const DensityMatrix& rho, const Mat& x);

/// Bloch vector (Tr(rho sigma_1), Tr(rho sigma_2), Tr(rho sigma_3)) of a
/// one-qubit state.
Eigen::Vector3d bloch_vector(const DensityMatrix& rho);

/// The operators spanning the commutant of the three-qubit collective spins:
/// pair exchange operators S^(ab) = sum_i sigma_i^(a) sigma_i^(b), the scalar
/// chirality S = sum_{ijk} eps_{ijk} sigma_i^(1) sigma_j^(2) sigma_k^(3), the
/// central sum T, the rank-2 singlet projections P^(ab) = (1 - S^(ab))/4, the
/// rank-4 mixed-symmetry projection P = (2/3) sum P^(ab), and Q = 1 - P
/// (the totally symmetric, spin-3/2 sector).
struct InvariantOperatorSet {
  Mat s12, s13, s23;
  Mat s;
  Mat t;
  Mat p12, p13, p23;
  Mat p;
  Mat q;

  const Mat& s_ab(int qa, int qb) const;
  const Mat& p_ab(int qa, int qb) const;
};

InvariantOperatorSet invariant_operators();

/// Orthonormal (Hilbert-Schmidt) basis of {x : [x, g] = 0 for all g}, found
/// as the common null space of the stacked commutator maps on the
/// d^2-dimensional operator space. Singular values below `singular_tol`
/// count as zero.
std::vector<Mat> brute_force_commutant(const std::vector<Mat>& generators,
                                       double singular_tol = 1e-10);

/// Projection of x onto the span of a Hilbert-Schmidt-orthonormal basis.
Mat project_onto_span(const Mat& x, const std::vector<Mat>& basis);

using Rng = std::mt19937_64;

/// Random Hermitian matrix with entries of order one.
Mat random_hermitian(int dim, Rng& rng);

/// Random full-rank density matrix, Hilbert-Schmidt distributed.
DensityMatrix random_density_matrix(int qubit_count, Rng& rng);

/// Random complex matrix, Gaussian entries.
Mat random_matrix(int dim, Rng& rng);

}  // namespace symbath
