#include "symbath/lindblad.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <string>

namespace symbath {

void EnvironmentParams::validate() const {
  if (!(a > 0.0)) {
    throw std::invalid_argument("environment params: a > 0 required, got a = " +
                                std::to_string(a));
  }
  if (!(c >= 0.0)) {
    throw std::invalid_argument("environment params: c >= 0 required, got c = " +
                                std::to_string(c));
  }
  if (!(std::abs(b) <= a)) {
    throw std::invalid_argument(
        "environment params: |b| <= a required (coupling matrix has eigenvalue a - |b|), got b = " +
        std::to_string(b) + ", a = " + std::to_string(a));
  }
}

bool EnvironmentParams::degenerate() const { return c == 0.0 || std::abs(b) == a; }

void EnvironmentParams::require_nondegenerate() const {
  validate();
  if (degenerate()) {
    throw std::invalid_argument(
        "environment params degenerate (need |b| < a and c > 0): asymptotics not guaranteed");
  }
}

Mat coupling_matrix(const EnvironmentParams& p) {
  p.validate();
  const Cplx i(0.0, 1.0);
  Mat m(3, 3);
  m << p.a, -i * p.b, 0.0,
       i * p.b, p.a, 0.0,
       0.0, 0.0, p.c;
  return m;
}

KossakowskiMatrix KossakowskiMatrix::from_matrix(Mat k) {
  if (k.rows() != 9 || k.cols() != 9) {
    throw std::invalid_argument("Kossakowski matrix must be 9x9");
  }
  const double herm = hermiticity_defect(k);
  if (herm > kHermitianTol) {
    throw std::invalid_argument("Kossakowski matrix not Hermitian: defect " +
                                std::to_string(herm));
  }
  const double lam_min = min_eigenvalue(k);
  if (lam_min < kEigenvalueFloor) {
    throw std::invalid_argument(
        "Kossakowski matrix not positive semidefinite: most negative eigenvalue " +
        std::to_string(lam_min));
  }
  return KossakowskiMatrix(std::move(k));
}

Mat KossakowskiMatrix::block(int qa, int qb) const {
  if (qa < 1 || qa > 3 || qb < 1 || qb > 3) {
    throw std::invalid_argument("Kossakowski block labels must be in 1..3");
  }
  return k_.block(3 * (qa - 1), 3 * (qb - 1), 3, 3);
}

KossakowskiMatrix symmetric_kossakowski(const EnvironmentParams& p) {
  // 3 P (x) A with P = ones(3,3)/3; every block comes out equal to A.
  Mat ones = Mat::Constant(3, 3, Cplx(1.0, 0.0));
  return KossakowskiMatrix::from_matrix(kron(ones, coupling_matrix(p)));
}

LindbladGenerator::LindbladGenerator(int qubits, Mat hamiltonian,
                                     std::vector<DissipativeTerm> terms, bool degenerate,
                                     std::optional<EnvironmentParams> params)
    : qubits_(qubits),
      hamiltonian_(std::move(hamiltonian)),
      terms_(std::move(terms)),
      degenerate_(degenerate),
      params_(std::move(params)) {}

Mat LindbladGenerator::apply(const Mat& rho) const {
  if (rho.rows() != dim() || rho.cols() != dim()) {
    throw std::invalid_argument("generator applied to matrix of wrong dimension");
  }
  const Cplx i(0.0, 1.0);
  Mat out = -i * (hamiltonian_ * rho - rho * hamiltonian_);
  for (const auto& term : terms_) {
    out += term.coefficient * (term.left * rho * term.right -
                               0.5 * (term.right_left * rho + rho * term.right_left));
  }
  return out;
}

LindbladGenerator build_generator(const EnvironmentParams& p, int qubit_count) {
  p.validate();
  if (qubit_count < 1 || qubit_count > 3) {
    throw std::invalid_argument("build_generator: qubit count must be 1..3");
  }
  const Mat a_mat = coupling_matrix(p);
  std::array<Mat, 4> spin;
  for (int i = 1; i <= 3; ++i) spin[i] = global_spin(i, qubit_count);

  std::vector<LindbladGenerator::DissipativeTerm> terms;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const Cplx coeff = a_mat(i - 1, j - 1);
      if (coeff == Cplx(0.0, 0.0)) continue;
      terms.push_back({coeff, spin[i], spin[j], spin[j] * spin[i]});
    }
  }
  Mat h = (p.omega / 2.0) * spin[3];
  return LindbladGenerator(qubit_count, std::move(h), std::move(terms), p.degenerate(), p);
}

LindbladGenerator build_general_generator(const KossakowskiMatrix& k,
                                          const std::array<double, 3>& omegas) {
  constexpr int n = 3;
  std::vector<Mat> sigma;  // sigma_i^(a) for a = 1..3, i = 1..3
  sigma.reserve(9);
  for (int a = 1; a <= n; ++a) {
    for (int i = 1; i <= 3; ++i) sigma.push_back(embed_single_qubit(pauli(i), a, n));
  }

  std::vector<LindbladGenerator::DissipativeTerm> terms;
  for (int row = 0; row < 9; ++row) {
    for (int col = 0; col < 9; ++col) {
      const Cplx coeff = k.matrix()(row, col);
      if (coeff == Cplx(0.0, 0.0)) continue;
      const Mat& left = sigma[row];
      const Mat& right = sigma[col];
      terms.push_back({coeff, left, right, right * left});
    }
  }
  Mat h = Mat::Zero(8, 8);
  for (int a = 1; a <= n; ++a) {
    h += (omegas[a - 1] / 2.0) * embed_single_qubit(pauli(3), a, n);
  }
  return LindbladGenerator(n, std::move(h), std::move(terms), false, std::nullopt);
}

std::vector<Mat> kraus_operators(const EnvironmentParams& p, int qubit_count) {
  p.validate();
  const Cplx i(0.0, 1.0);
  const Mat s1 = global_spin(1, qubit_count);
  const Mat s2 = global_spin(2, qubit_count);
  const Mat s3 = global_spin(3, qubit_count);
  const Mat s_plus = 0.5 * (s1 + i * s2);
  const Mat s_minus = 0.5 * (s1 - i * s2);
  return {
      std::sqrt(2.0 * (p.a - p.b)) * s_minus,
      std::sqrt(2.0 * (p.a + p.b)) * s_plus,
      std::sqrt(p.c) * s3,
  };
}

PairwiseDecomposition::PairwiseDecomposition(const EnvironmentParams& p, int qubit_count)
    : qubits_(qubit_count), params_(p) {
  p.validate();
  if (qubit_count < 1 || qubit_count > 3) {
    throw std::invalid_argument("pairwise decomposition: qubit count must be 1..3");
  }
  sigma_.reserve(3 * qubit_count);
  for (int a = 1; a <= qubit_count; ++a) {
    for (int i = 1; i <= 3; ++i) sigma_.push_back(embed_single_qubit(pauli(i), a, qubit_count));
  }
}

Mat PairwiseDecomposition::apply_term(int qa, int qb, const Mat& rho) const {
  if (qa < 1 || qa > qubits_ || qb < 1 || qb > qubits_) {
    throw std::invalid_argument("pairwise term labels out of range");
  }
  const Mat a_mat = coupling_matrix(params_);
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const Cplx coeff = a_mat(i - 1, j - 1);
      if (coeff == Cplx(0.0, 0.0)) continue;
      const Mat& left = sigma_[3 * (qa - 1) + (i - 1)];
      const Mat& right = sigma_[3 * (qb - 1) + (j - 1)];
      const Mat right_left = right * left;
      out += coeff * (left * rho * right - 0.5 * (right_left * rho + rho * right_left));
    }
  }
  if (qa == qb) {
    const Cplx im(0.0, 1.0);
    const Mat& s3_local = sigma_[3 * (qa - 1) + 2];
    out += -im * (params_.omega / 2.0) * (s3_local * rho - rho * s3_local);
  }
  return out;
}

Mat PairwiseDecomposition::apply_pair(int qa, int qb, const Mat& rho) const {
  return apply_term(qa, qa, rho) + apply_term(qb, qb, rho) + apply_term(qa, qb, rho) +
         apply_term(qb, qa, rho);
}

Mat PairwiseDecomposition::apply_total(const Mat& rho) const {
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (int a = 1; a <= qubits_; ++a) {
    for (int b = 1; b <= qubits_; ++b) {
      out += apply_term(a, b, rho);
    }
  }
  return out;
}

PairwiseDecomposition pairwise_decomposition(const EnvironmentParams& p, int qubit_count) {
  return PairwiseDecomposition(p, qubit_count);
}

}  // namespace symbath
