#include "symbath/algebra.hpp"

#include <doctest.h>

#include <cmath>

using namespace symbath;

namespace {
const Cplx kI(0.0, 1.0);
}

TEST_CASE("pauli matrices: basis convention and algebra") {
  CHECK(max_abs_diff(pauli(0), Mat::Identity(2, 2)) == 0.0);

  // sigma_3 |0> = +|0>
  CVec e0 = CVec::Zero(2);
  e0(0) = 1.0;
  CHECK((pauli(3) * e0 - e0).cwiseAbs().maxCoeff() == 0.0);

  for (int i = 1; i <= 3; ++i) {
    CHECK(std::abs(pauli(i).trace()) == 0.0);
    CHECK(hermiticity_defect(pauli(i)) == 0.0);
    CHECK(max_abs_diff(pauli(i) * pauli(i), Mat::Identity(2, 2)) == 0.0);
  }
  // sigma_1 sigma_2 = i sigma_3
  CHECK(max_abs_diff(pauli(1) * pauli(2), kI * pauli(3)) == 0.0);

  CHECK_THROWS_AS(pauli(4), std::invalid_argument);
  CHECK_THROWS_AS(pauli(-1), std::invalid_argument);
}

TEST_CASE("kron: left factor is the slow index") {
  CHECK(max_abs_diff(kron(Mat::Identity(2, 2), Mat::Identity(2, 2)), Mat::Identity(4, 4)) == 0.0);

  const Mat z1 = kron(pauli(3), Mat::Identity(2, 2));
  CHECK(z1(0, 0) == Cplx(1.0));
  CHECK(z1(1, 1) == Cplx(1.0));
  CHECK(z1(2, 2) == Cplx(-1.0));
  CHECK(z1(3, 3) == Cplx(-1.0));

  const Mat big = kron(pauli(1), Mat::Identity(4, 4));
  CHECK(big.rows() == 8);
  CHECK(big.cols() == 8);
}

TEST_CASE("embed_single_qubit and global spins") {
  const Mat s3_total = global_spin(3, 3);
  CVec e0 = CVec::Zero(8);
  e0(0) = 1.0;  // |000>
  CHECK((s3_total * e0 - 3.0 * e0).cwiseAbs().maxCoeff() == 0.0);

  CHECK(std::abs(embed_single_qubit(pauli(1), 2, 3).trace()) == 0.0);
  CHECK(max_abs_diff(embed_single_qubit(Mat::Identity(2, 2), 2, 3), Mat::Identity(8, 8)) == 0.0);
  CHECK_THROWS_AS(embed_single_qubit(pauli(1), 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(embed_single_qubit(Mat::Identity(4, 4), 1, 3), std::invalid_argument);

  // n = 1 reduces to the bare Pauli
  CHECK(max_abs_diff(global_spin(3, 1), pauli(3)) == 0.0);

  // spin algebra [S_1, S_2] = 2i S_3
  for (int n = 1; n <= 3; ++n) {
    const Mat s1 = global_spin(1, n), s2 = global_spin(2, n), s3 = global_spin(3, n);
    CHECK(max_abs_diff(s1 * s2 - s2 * s1, 2.0 * kI * s3) < 1e-14);
  }
}

TEST_CASE("density matrix validation") {
  Mat good = Mat::Zero(2, 2);
  good(0, 0) = 0.75;
  good(1, 1) = 0.25;
  CHECK(DensityMatrix::from_matrix(good).qubit_count() == 1);

  Mat off_trace = 0.9 * good;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(off_trace), std::invalid_argument);

  Mat non_herm = good;
  non_herm(0, 1) = Cplx(0.0, 1e-6);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(non_herm), std::invalid_argument);

  Mat negative = Mat::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(negative), std::invalid_argument);

  Mat odd = Mat::Identity(3, 3) / 3.0;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(odd), std::invalid_argument);
}

TEST_CASE("partial trace: product states and the singlet marginal") {
  Rng rng(11);
  const DensityMatrix left = random_density_matrix(1, rng);
  const DensityMatrix right = random_density_matrix(2, rng);
  const Mat prod = kron(left.matrix(), right.matrix());

  CHECK(max_abs_diff(partial_trace(prod, {1}, 3), left.matrix()) < 1e-14);
  CHECK(max_abs_diff(partial_trace(prod, {2, 3}, 3), right.matrix()) < 1e-14);

  CVec psi = CVec::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  const Mat singlet = psi * psi.adjoint();
  CHECK(max_abs_diff(partial_trace(singlet, {1}, 2), 0.5 * Mat::Identity(2, 2)) < 1e-15);
  CHECK(max_abs_diff(partial_trace(singlet, {2}, 2), 0.5 * Mat::Identity(2, 2)) < 1e-15);

  // keeping everything is the identity operation
  CHECK(max_abs_diff(partial_trace(prod, {1, 2, 3}, 3), prod) == 0.0);

  CHECK_THROWS_AS(partial_trace(prod, {}, 3), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(prod, {4}, 3), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(prod, {1, 1}, 3), std::invalid_argument);
}

TEST_CASE("partial trace preserves trace and positivity on random states") {
  Rng rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + (trial % 2);
    const DensityMatrix rho = random_density_matrix(n, rng);
    const std::vector<int> keep = (trial % 4 < 2) ? std::vector<int>{1}
                                                  : std::vector<int>{n - 1, n};
    const DensityMatrix reduced = partial_trace(rho, keep);  // revalidates on construction
    CHECK(std::abs(reduced.matrix().trace().real() - 1.0) < 1e-12);
    CHECK(min_eigenvalue(reduced.matrix()) > -1e-12);
  }
}

TEST_CASE("invariant operators: projections and singlet factorization") {
  const InvariantOperatorSet ops = invariant_operators();

  CHECK(std::abs(ops.p12.trace().real() - 2.0) < 1e-14);
  CHECK(std::abs(ops.p.trace().real() - 4.0) < 1e-14);
  CHECK(max_abs_diff(ops.p * ops.p, ops.p) < 1e-14);
  CHECK(max_abs_diff(ops.q * ops.q, ops.q) < 1e-14);

  // P^(12) is the two-qubit singlet projector extended by the identity
  CVec psi = CVec::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  const Mat singlet = psi * psi.adjoint();
  CHECK(max_abs_diff(ops.p12, kron(singlet, Mat::Identity(2, 2))) < 1e-15);

  // integer entries, Hermitian
  for (const Mat* m : {&ops.s12, &ops.s13, &ops.s23, &ops.s, &ops.t}) {
    CHECK(hermiticity_defect(*m) == 0.0);
    for (Eigen::Index i = 0; i < m->rows(); ++i) {
      for (Eigen::Index j = 0; j < m->cols(); ++j) {
        const Cplx z = (*m)(i, j);
        CHECK(std::abs(z.real() - std::round(z.real())) == 0.0);
        CHECK(std::abs(z.imag() - std::round(z.imag())) == 0.0);
      }
    }
  }
}

TEST_CASE("invariant operators: exchange and chirality identities") {
  const InvariantOperatorSet ops = invariant_operators();
  const Mat id8 = Mat::Identity(8, 8);
  const auto comm = [](const Mat& x, const Mat& y) { return Mat(x * y - y * x); };
  const auto anti = [](const Mat& x, const Mat& y) { return Mat(x * y + y * x); };

  // commutators of two exchanges close on the chirality operator
  CHECK(max_abs_diff(comm(ops.s12, ops.s13), 2.0 * kI * ops.s) == 0.0);
  CHECK(max_abs_diff(comm(ops.s12, ops.s23), -2.0 * kI * ops.s) == 0.0);
  CHECK(max_abs_diff(comm(ops.s13, ops.s23), 2.0 * kI * ops.s) == 0.0);

  // the commutant is genuinely noncommutative
  CHECK(max_abs(comm(ops.s12, ops.s13)) > 1.0);

  // anticommutators close on the remaining exchange
  CHECK(max_abs_diff(anti(ops.s12, ops.s13), 2.0 * ops.s23) == 0.0);
  CHECK(max_abs_diff(anti(ops.s12, ops.s23), 2.0 * ops.s13) == 0.0);
  CHECK(max_abs_diff(anti(ops.s13, ops.s23), 2.0 * ops.s12) == 0.0);

  // chirality commutators, cyclic in the omitted qubit
  CHECK(max_abs_diff(comm(ops.s12, ops.s), 4.0 * kI * (ops.s23 - ops.s13)) == 0.0);
  CHECK(max_abs_diff(comm(ops.s13, ops.s), 4.0 * kI * (ops.s12 - ops.s23)) == 0.0);
  CHECK(max_abs_diff(comm(ops.s23, ops.s), 4.0 * kI * (ops.s13 - ops.s12)) == 0.0);

  // T is central within the commutant
  for (const Mat* m : {&ops.s12, &ops.s13, &ops.s23, &ops.s}) {
    CHECK(max_abs(comm(ops.t, *m)) == 0.0);
  }

  // square relations
  for (const Mat* m : {&ops.s12, &ops.s13, &ops.s23}) {
    CHECK(max_abs_diff(*m * *m, 3.0 * id8 - 2.0 * *m) == 0.0);
  }
  CHECK(max_abs_diff(ops.s * ops.s, 2.0 * (3.0 * id8 - ops.t)) == 0.0);

  // the symmetric sector absorbs exchanges and kills the chirality
  for (const Mat* m : {&ops.s12, &ops.s13, &ops.s23}) {
    CHECK(max_abs_diff(ops.q * *m, ops.q) < 1e-15);
  }
  CHECK(max_abs(ops.q * ops.s) < 1e-15);
}

TEST_CASE("brute-force commutant dimensions and spans") {
  SUBCASE("two qubits: span of identity and the exchange sum") {
    std::vector<Mat> gens;
    for (int i = 1; i <= 3; ++i) gens.push_back(global_spin(i, 2));
    const auto basis = brute_force_commutant(gens);
    REQUIRE(basis.size() == 2);

    Mat t2 = Mat::Zero(4, 4);
    for (int i = 1; i <= 3; ++i) t2 += kron(pauli(i), pauli(i));
    CHECK(max_abs_diff(project_onto_span(Mat::Identity(4, 4), basis), Mat::Identity(4, 4)) < 1e-10);
    CHECK(max_abs_diff(project_onto_span(t2, basis), t2) < 1e-10);
  }

  SUBCASE("three qubits: dimension five, matching the 1^2 + 2^2 multiplicity count") {
    std::vector<Mat> gens;
    for (int i = 1; i <= 3; ++i) gens.push_back(global_spin(i, 3));
    const auto basis = brute_force_commutant(gens);
    REQUIRE(basis.size() == 5);

    const InvariantOperatorSet ops = invariant_operators();
    for (const Mat* m : {&ops.s12, &ops.s13, &ops.s23, &ops.s}) {
      CHECK(max_abs_diff(project_onto_span(*m, basis), *m) < 1e-10);
    }
    CHECK(max_abs_diff(project_onto_span(Mat::Identity(8, 8), basis), Mat::Identity(8, 8)) < 1e-10);

    // Hilbert-Schmidt orthonormality of the returned basis
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const double expected = i == j ? 1.0 : 0.0;
        CHECK(std::abs(hs_inner(basis[i], basis[j]) - expected) < 1e-12);
      }
    }
  }

  SUBCASE("identity generator leaves the whole operator space") {
    const auto basis = brute_force_commutant({Mat::Identity(2, 2)});
    CHECK(basis.size() == 4);
  }
}
