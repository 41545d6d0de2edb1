// Construction and validation of the collective-environment master-equation
// generators: the replicated-block Kossakowski matrix, the generator acting
// through global spin operators, its jump-operator (diagonal) form, and the
// pairwise decomposition over qubit pairs.
#pragma once

#include "symbath/algebra.hpp"

#include <array>
#include <optional>
#include <vector>

namespace symbath {

/// Environment rates (a, b, c) and Larmor frequency omega, all in
/// environment-correlation units. Constraints: a > 0, c >= 0, |b| <= a.
/// The derived ratio r_infinity = b/a sets every stationary state.
///
/// |b| = a and c = 0 pass validation but are flagged degenerate: the
/// convergence-to-asymptote argument needs |b| < a and c > 0, so asymptotic
/// operations refuse such parameters.
struct EnvironmentParams {
  double a = 1.0;
  double b = 0.0;
  double c = 1.0;
  double omega = 1.0;

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;

  bool degenerate() const;

  /// validate() plus rejection of degenerate parameter sets.
  void require_nondegenerate() const;

  double r_infinity() const { return b / a; }
};

/// The 3x3 dissipative coupling matrix shared by every qubit and qubit pair,
/// over Pauli indices 1..3:
///
///   [  a  -ib   0 ]
///   [ ib    a   0 ]
///   [  0    0   c ]
///
/// Its eigenvalues are a-|b|, a+|b|, c, so validity of the parameters is
/// exactly positive semidefiniteness.
Mat coupling_matrix(const EnvironmentParams& p);

/// 9x9 Hermitian positive-semidefinite coefficient matrix of the general
/// three-qubit generator, blocked as 3x3 blocks C^(ab) over the qubit pair
/// (a, b) with Pauli indices inside each block.
class KossakowskiMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kEigenvalueFloor = -1e-10;

  /// Validates Hermiticity and positivity; the error message reports the
  /// most negative eigenvalue.
  static KossakowskiMatrix from_matrix(Mat k);

  const Mat& matrix() const { return k_; }

  /// Block C^(ab), 1-based qubit labels.
  Mat block(int qa, int qb) const;

 private:
  explicit KossakowskiMatrix(Mat k) : k_(std::move(k)) {}
  Mat k_;
};

/// The fully symmetric choice: every block C^(ab) equals coupling_matrix(p).
/// Equivalently 3 P (x) A where P projects onto (1,1,1)/sqrt(3).
KossakowskiMatrix symmetric_kossakowski(const EnvironmentParams& p);

/// Schroedinger-picture generator rho -> L[rho]. Immutable after
/// construction; apply() is a pure function, safe for shared concurrent use.
class LindbladGenerator {
 public:
  Mat apply(const Mat& rho) const;

  int qubit_count() const { return qubits_; }
  Eigen::Index dim() const { return hamiltonian_.rows(); }
  const Mat& hamiltonian() const { return hamiltonian_; }
  bool degenerate() const { return degenerate_; }
  const std::optional<EnvironmentParams>& params() const { return params_; }

  struct DissipativeTerm {
    Cplx coefficient;
    Mat left;        // sandwich factor on the left of rho
    Mat right;       // sandwich factor on the right of rho
    Mat right_left;  // cached right * left for the anticommutator
  };

  LindbladGenerator(int qubits, Mat hamiltonian, std::vector<DissipativeTerm> terms,
                    bool degenerate, std::optional<EnvironmentParams> params);

 private:
  int qubits_;
  Mat hamiltonian_;
  std::vector<DissipativeTerm> terms_;
  bool degenerate_;
  std::optional<EnvironmentParams> params_;
};

/// Collective generator on 1..3 qubits:
///   L[rho] = -i (omega/2) [S_3, rho]
///            + sum_ij A_ij (S_i rho S_j - (1/2){S_j S_i, rho})
/// with S_i the global spin operators and A = coupling_matrix(p).
LindbladGenerator build_generator(const EnvironmentParams& p, int qubit_count);

/// General three-qubit generator with per-qubit frequencies and an arbitrary
/// valid Kossakowski matrix; used for validation and extension tests.
LindbladGenerator build_general_generator(const KossakowskiMatrix& k,
                                          const std::array<double, 3>& omegas);

/// Jump operators diagonalizing the dissipative part:
///   sqrt(2(a-b)) S_-, sqrt(2(a+b)) S_+, sqrt(c) S_3,
/// with S_± = (S_1 ± i S_2)/2. Their dissipator reconstructs the coupling
/// form exactly.
std::vector<Mat> kraus_operators(const EnvironmentParams& p, int qubit_count);

/// Splitting L = sum_{a,b} L_ab where L_ab involves only qubits a and b;
/// the Hamiltonian is carried by the diagonal terms L_aa. The block
/// L_aa + L_bb + L_ab + L_ba is the two-qubit generator embedded on the pair
/// (a, b), which annihilates stationary products on that pair.
class PairwiseDecomposition {
 public:
  PairwiseDecomposition(const EnvironmentParams& p, int qubit_count);

  Mat apply_term(int qa, int qb, const Mat& rho) const;

  /// L^(ab) = L_aa + L_bb + L_ab + L_ba.
  Mat apply_pair(int qa, int qb, const Mat& rho) const;

  /// Sum of all terms; equals the full generator.
  Mat apply_total(const Mat& rho) const;

  int qubit_count() const { return qubits_; }

 private:
  int qubits_;
  EnvironmentParams params_;
  std::vector<Mat> sigma_;  // sigma_i^(a), indexed [3*(a-1) + (i-1)]
};

PairwiseDecomposition pairwise_decomposition(const EnvironmentParams& p, int qubit_count = 3);

}  // namespace symbath
