#include "symbath/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace symbath {

namespace {

int qubit_count_for_dim(Eigen::Index d) {
  switch (d) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default:
      throw std::invalid_argument("density matrix dimension must be 2, 4 or 8, got " +
                                  std::to_string(d));
  }
}

}  // namespace

double max_abs(const Mat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double max_abs_diff(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return max_abs(a - b);
}

bool approx_equal(const Mat& a, const Mat& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}

Mat dagger(const Mat& a) { return a.adjoint(); }

Cplx hs_inner(const Mat& a, const Mat& b) { return (a.adjoint() * b).trace(); }

double hermiticity_defect(const Mat& a) { return max_abs(a - a.adjoint()); }

double min_eigenvalue(const Mat& a) {
  const Mat h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Mat pauli(int index) {
  Mat m(2, 2);
  const Cplx i(0.0, 1.0);
  switch (index) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default:
      throw std::invalid_argument("pauli index must be in 0..3, got " + std::to_string(index));
  }
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Mat embed_single_qubit(const Mat& op, int qubit, int qubit_count) {
  if (op.rows() != 2 || op.cols() != 2) {
    throw std::invalid_argument("embed_single_qubit: operator must be 2x2");
  }
  if (qubit < 1 || qubit > qubit_count) {
    throw std::invalid_argument("embed_single_qubit: qubit " + std::to_string(qubit) +
                                " out of range 1.." + std::to_string(qubit_count));
  }
  const auto identity = [](int n) { return Mat::Identity(1 << n, 1 << n); };
  return kron(kron(identity(qubit - 1), op), identity(qubit_count - qubit));
}

Mat global_spin(int i, int qubit_count) {
  if (i < 1 || i > 3) {
    throw std::invalid_argument("global_spin: component must be in 1..3");
  }
  const Eigen::Index d = Eigen::Index{1} << qubit_count;
  Mat out = Mat::Zero(d, d);
  for (int a = 1; a <= qubit_count; ++a) {
    out += embed_single_qubit(pauli(i), a, qubit_count);
  }
  return out;
}

DensityMatrix DensityMatrix::from_matrix(Mat m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  const int qubits = qubit_count_for_dim(m.rows());
  const double herm = hermiticity_defect(m);
  if (herm > kHermitianTol) {
    throw std::invalid_argument("density matrix not Hermitian: defect " + std::to_string(herm));
  }
  const double trace_err = std::abs(m.trace() - Cplx(1.0, 0.0));
  if (trace_err > kTraceTol) {
    throw std::invalid_argument("density matrix trace differs from 1 by " +
                                std::to_string(trace_err));
  }
  const double lam_min = min_eigenvalue(m);
  if (lam_min < kEigenvalueFloor) {
    throw std::invalid_argument("density matrix not positive semidefinite: min eigenvalue " +
                                std::to_string(lam_min));
  }
  return DensityMatrix(std::move(m), qubits);
}

Mat partial_trace(const Mat& m, const std::vector<int>& keep, int qubit_count) {
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set must be nonempty");
  }
  const Eigen::Index d = Eigen::Index{1} << qubit_count;
  if (m.rows() != d || m.cols() != d) {
    throw std::invalid_argument("partial_trace: matrix dimension does not match qubit count");
  }
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::unique(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: repeated qubit in keep set");
  }
  for (int q : kept) {
    if (q < 1 || q > qubit_count) {
      throw std::invalid_argument("partial_trace: qubit " + std::to_string(q) + " out of range");
    }
  }

  std::vector<int> traced;
  for (int q = 1; q <= qubit_count; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  // Qubit q occupies bit (qubit_count - q): qubit 1 is the most significant.
  const auto bit_of = [qubit_count](int q) { return qubit_count - q; };
  const int nk = static_cast<int>(kept.size());
  const int nt = static_cast<int>(traced.size());
  const Eigen::Index dk = Eigen::Index{1} << nk;
  const Eigen::Index dt = Eigen::Index{1} << nt;

  const auto full_index = [&](Eigen::Index kept_bits, Eigen::Index traced_bits) {
    Eigen::Index idx = 0;
    for (int pos = 0; pos < nk; ++pos) {
      if ((kept_bits >> (nk - 1 - pos)) & 1) idx |= Eigen::Index{1} << bit_of(kept[pos]);
    }
    for (int pos = 0; pos < nt; ++pos) {
      if ((traced_bits >> (nt - 1 - pos)) & 1) idx |= Eigen::Index{1} << bit_of(traced[pos]);
    }
    return idx;
  };

  Mat out = Mat::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r) {
    for (Eigen::Index c = 0; c < dk; ++c) {
      Cplx sum = 0.0;
      for (Eigen::Index t = 0; t < dt; ++t) {
        sum += m(full_index(r, t), full_index(c, t));
      }
      out(r, c) = sum;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  return DensityMatrix::from_matrix(partial_trace(rho.matrix(), keep, rho.qubit_count()));
}

double expectation(const DensityMatrix& rho, const Mat& x) {
  return (rho.matrix() * x).trace().real();
}

Eigen::Vector3d bloch_vector(const DensityMatrix& rho) {
  if (rho.qubit_count() != 1) {
    throw std::invalid_argument("bloch_vector: one-qubit state required");
  }
  Eigen::Vector3d r;
  for (int i = 1; i <= 3; ++i) r(i - 1) = expectation(rho, pauli(i));
  return r;
}

const Mat& InvariantOperatorSet::s_ab(int qa, int qb) const {
  if (qa > qb) std::swap(qa, qb);
  if (qa == 1 && qb == 2) return s12;
  if (qa == 1 && qb == 3) return s13;
  if (qa == 2 && qb == 3) return s23;
  throw std::invalid_argument("s_ab: pair must be one of (1,2), (1,3), (2,3)");
}

const Mat& InvariantOperatorSet::p_ab(int qa, int qb) const {
  if (qa > qb) std::swap(qa, qb);
  if (qa == 1 && qb == 2) return p12;
  if (qa == 1 && qb == 3) return p13;
  if (qa == 2 && qb == 3) return p23;
  throw std::invalid_argument("p_ab: pair must be one of (1,2), (1,3), (2,3)");
}

InvariantOperatorSet invariant_operators() {
  InvariantOperatorSet ops;
  const Mat id8 = Mat::Identity(8, 8);

  const auto pair_exchange = [](int qa, int qb) {
    Mat out = Mat::Zero(8, 8);
    for (int i = 1; i <= 3; ++i) {
      out += embed_single_qubit(pauli(i), qa, 3) * embed_single_qubit(pauli(i), qb, 3);
    }
    return out;
  };
  ops.s12 = pair_exchange(1, 2);
  ops.s13 = pair_exchange(1, 3);
  ops.s23 = pair_exchange(2, 3);

  // Scalar chirality: one term per permutation of (1,2,3), signed.
  ops.s = Mat::Zero(8, 8);
  constexpr int perms[6][4] = {{1, 2, 3, +1}, {2, 3, 1, +1}, {3, 1, 2, +1},
                               {1, 3, 2, -1}, {3, 2, 1, -1}, {2, 1, 3, -1}};
  for (const auto& p : perms) {
    ops.s += static_cast<double>(p[3]) *
             kron(kron(pauli(p[0]), pauli(p[1])), pauli(p[2]));
  }

  ops.t = ops.s12 + ops.s13 + ops.s23;
  ops.p12 = (id8 - ops.s12) / 4.0;
  ops.p13 = (id8 - ops.s13) / 4.0;
  ops.p23 = (id8 - ops.s23) / 4.0;
  ops.p = (2.0 / 3.0) * (ops.p12 + ops.p13 + ops.p23);
  ops.q = id8 - ops.p;
  return ops;
}

std::vector<Mat> brute_force_commutant(const std::vector<Mat>& generators,
                                       double singular_tol) {
  if (generators.empty()) {
    throw std::invalid_argument("brute_force_commutant: no generators");
  }
  const Eigen::Index d = generators.front().rows();
  for (const Mat& g : generators) {
    if (g.rows() != d || g.cols() != d) {
      throw std::invalid_argument("brute_force_commutant: generators must share one dimension");
    }
  }

  // vec([g, x]) = (1 (x) g - g^T (x) 1) vec(x) under column stacking.
  const Mat id = Mat::Identity(d, d);
  Mat stacked(static_cast<Eigen::Index>(generators.size()) * d * d, d * d);
  for (std::size_t k = 0; k < generators.size(); ++k) {
    stacked.middleRows(static_cast<Eigen::Index>(k) * d * d, d * d) =
        kron(id, generators[k]) - kron(generators[k].transpose(), id);
  }

  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::vector<Mat> basis;
  for (Eigen::Index k = 0; k < d * d; ++k) {
    const double sigma = k < sv.size() ? sv(k) : 0.0;
    if (sigma < singular_tol) {
      Mat b(d, d);
      for (Eigen::Index col = 0; col < d; ++col) {
        b.col(col) = svd.matrixV().col(k).segment(col * d, d);
      }
      basis.push_back(std::move(b));
    }
  }
  return basis;
}

Mat project_onto_span(const Mat& x, const std::vector<Mat>& basis) {
  Mat out = Mat::Zero(x.rows(), x.cols());
  for (const Mat& b : basis) {
    out += hs_inner(b, x) * b;
  }
  return out;
}

Mat random_matrix(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = Cplx(gauss(rng), gauss(rng));
    }
  }
  return g;
}

Mat random_hermitian(int dim, Rng& rng) {
  const Mat g = random_matrix(dim, rng);
  return 0.5 * (g + g.adjoint());
}

DensityMatrix random_density_matrix(int qubit_count, Rng& rng) {
  const int d = 1 << qubit_count;
  const Mat g = random_matrix(d, rng);
  Mat m = g * g.adjoint();
  m /= m.trace();
  // round-off can leave a tiny imaginary part on the diagonal
  m = 0.5 * (m + Mat(m.adjoint()));
  return DensityMatrix::from_matrix(std::move(m));
}

}  // namespace symbath
