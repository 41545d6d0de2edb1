#include "symbath/dynamics.hpp"

#include "symbath/asymptotic.hpp"

#include <doctest.h>

#include <cmath>

using namespace symbath;

namespace {

Superoperator pure_hamiltonian_superop() {
  const auto k = KossakowskiMatrix::from_matrix(Mat::Zero(9, 9));
  return vectorize(build_general_generator(k, {1.0, 1.0, 1.0}));
}

}  // namespace

TEST_CASE("vectorization matches the generator action") {
  Rng rng(31);
  const EnvironmentParams p{1.0, 0.5, 1.0, 1.0};
  for (int n = 1; n <= 3; ++n) {
    const auto gen = build_generator(p, n);
    const Superoperator sup = vectorize(gen);
    for (int trial = 0; trial < 50; ++trial) {
      const Mat rho = random_density_matrix(n, rng).matrix();
      CHECK(max_abs_diff(unvec(CVec(sup.matrix * vec(rho))), gen.apply(rho)) < 1e-12);
    }
  }
}

TEST_CASE("superoperator structure") {
  const EnvironmentParams p{1.0, 0.5, 1.0, 1.0};

  SUBCASE("one-qubit stationary state spans the kernel") {
    const Superoperator sup = vectorize(build_generator(p, 1));
    const Mat stat = one_qubit_stationary(p).matrix();
    CHECK((sup.matrix * vec(stat)).cwiseAbs().maxCoeff() < 1e-11);
  }

  SUBCASE("vectorized identity is a left null vector (trace preservation)") {
    for (int n = 1; n <= 3; ++n) {
      const Superoperator sup = vectorize(build_generator(p, n));
      const Eigen::Index d = sup.dim();
      const CVec id_vec = vec(Mat::Identity(d, d));
      CHECK((id_vec.adjoint() * sup.matrix).cwiseAbs().maxCoeff() < 1e-11);
    }
  }

  SUBCASE("zero generator vectorizes to the zero matrix") {
    const auto k = KossakowskiMatrix::from_matrix(Mat::Zero(9, 9));
    const Superoperator sup = vectorize(build_general_generator(k, {0.0, 0.0, 0.0}));
    CHECK(max_abs(sup.matrix) == 0.0);
  }

  SUBCASE("spectral abscissa vanishes up to round-off; kernels match the commutant") {
    for (int n = 1; n <= 3; ++n) {
      const Superoperator sup = vectorize(build_generator(p, n));
      CHECK(spectral_abscissa(sup) < 1e-10);
    }
    CHECK(kernel_dimension(vectorize(build_generator(p, 1))) == 1);
    CHECK(kernel_dimension(vectorize(build_generator(p, 2))) == 2);
    CHECK(kernel_dimension(vectorize(build_generator(p, 3))) == 5);
  }
}

TEST_CASE("propagator") {
  const EnvironmentParams p{1.0, 0.5, 1.0, 1.0};
  const Superoperator sup = vectorize(build_generator(p, 2));

  SUBCASE("t = 0 is the identity; negative time refused") {
    CHECK(max_abs_diff(propagator(sup, 0.0), Mat::Identity(16, 16)) < 1e-15);
    CHECK_THROWS_AS(propagator(sup, -1.0), std::invalid_argument);
  }

  SUBCASE("semigroup property") {
    Rng rng(32);
    std::uniform_real_distribution<double> uni(0.0, 10.0);
    for (int trial = 0; trial < 5; ++trial) {
      const double s = uni(rng), t = uni(rng);
      CHECK(max_abs_diff(propagator(sup, s + t), propagator(sup, s) * propagator(sup, t)) <
            1e-9);
    }
  }

  SUBCASE("propagation preserves the state invariants") {
    Rng rng(33);
    const DensityMatrix rho = random_density_matrix(2, rng);
    for (double t : {0.1, 1.0, 10.0}) {
      const Mat evolved = apply_propagator(propagator(sup, t), rho.matrix());
      CHECK(std::abs(evolved.trace().real() - 1.0) < 1e-12);
      CHECK(hermiticity_defect(evolved) < 1e-12);
      CHECK(min_eigenvalue(evolved) > -1e-9);
    }
  }

  SUBCASE("long-time propagation lands on the two-qubit conditional expectation") {
    const DensityMatrix initial = alpha_family_state(0.1, 2);
    const Mat evolved = apply_propagator(propagator(sup, 50.0), initial.matrix());
    const DensityMatrix closed = two_qubit_conditional_expectation(initial, p);
    CHECK(max_abs_diff(evolved, closed.matrix()) < 1e-8);
  }
}

TEST_CASE("asymptotic state by horizon doubling") {
  const EnvironmentParams p{1.0, 0.5, 1.0, 1.0};

  SUBCASE("stationary input converges immediately") {
    const Superoperator sup = vectorize(build_generator(p, 2));
    const DensityMatrix stat =
        DensityMatrix::from_matrix(stationary_product_matrix(p, 2));
    const ConvergenceResult res = asymptotic_state(sup, stat);
    CHECK(res.doublings <= 2);
    CHECK(max_abs_diff(res.state.matrix(), stat.matrix()) < 1e-10);
  }

  SUBCASE("the singlet is stationary") {
    const Superoperator sup = vectorize(build_generator(p, 2));
    const DensityMatrix singlet = DensityMatrix::from_matrix(singlet_projector());
    const ConvergenceResult res = asymptotic_state(sup, singlet);
    CHECK(max_abs_diff(res.state.matrix(), singlet_projector()) < 1e-10);
  }

  SUBCASE("protocol family lands on its closed-form asymptote") {
    const EnvironmentParams strong{1.0, 0.9, 1.0, 1.0};
    const Superoperator sup = vectorize(build_generator(strong, 3));
    const ConvergenceResult res = asymptotic_state(sup, alpha_family_state(0.2, 3));
    CHECK(max_abs_diff(res.state.matrix(),
                       three_qubit_protocol_asymptote(0.2, strong).matrix()) < 1e-8);
    // the asymptote is genuinely stationary
    const auto gen = build_generator(strong, 3);
    CHECK(max_abs(gen.apply(res.state.matrix())) < 1e-9);
  }

  SUBCASE("input validation") {
    const Superoperator sup = vectorize(build_generator(p, 2));
    CHECK_THROWS_AS(asymptotic_state(sup, alpha_family_state(0.1, 2), 0.0),
                    std::invalid_argument);
    const Superoperator degenerate = vectorize(build_generator(EnvironmentParams{1.0, 1.0, 1.0, 1.0}, 2));
    CHECK_THROWS_AS(asymptotic_state(degenerate, alpha_family_state(0.1, 2)),
                    std::invalid_argument);
  }

  SUBCASE("purely Hamiltonian motion never converges") {
    const Superoperator sup = pure_hamiltonian_superop();
    Mat coherent = Mat::Zero(8, 8);
    coherent(0, 0) = 0.5;
    coherent(1, 1) = 0.5;
    coherent(0, 1) = 0.5;
    coherent(1, 0) = 0.5;
    const DensityMatrix rho = DensityMatrix::from_matrix(coherent);
    CHECK_THROWS_AS(asymptotic_state(sup, rho), NonConvergenceError);
    try {
      asymptotic_state(sup, rho);
    } catch (const NonConvergenceError& e) {
      CHECK(e.residual > 0.0);
    }
  }
}

TEST_CASE("Heisenberg time averages") {
  const EnvironmentParams p{1.0, 0.5, 1.0, 1.0};

  SUBCASE("invariant operators are fixed points of the average") {
    const Superoperator sup3 = vectorize(build_generator(p, 3));
    const InvariantOperatorSet ops = invariant_operators();
    for (const Mat* x : {&ops.s12, &ops.s13, &ops.s23, &ops.s, &ops.t}) {
      CHECK(max_abs_diff(time_average(sup3, *x, 200.0, 200), *x) < 1e-8);
    }
    const Mat id8 = Mat::Identity(8, 8);
    CHECK(max_abs_diff(time_average(sup3, id8, 200.0, 200), id8) < 1e-10);
  }

  SUBCASE("transverse observable relaxes to zero; the average follows at Cesaro rate") {
    const Superoperator sup = vectorize(build_generator(p, 1));
    const Mat limit = heisenberg_limit(sup, pauli(1));
    CHECK(max_abs(limit) < 1e-6);

    const double gap200 = max_abs_diff(time_average(sup, pauli(1), 200.0, 400), limit);
    const double gap400 = max_abs_diff(time_average(sup, pauli(1), 400.0, 800), limit);
    CHECK(gap200 < 2e-2);
    CHECK(gap400 < 0.6 * gap200);  // O(1/T) decay
    CHECK(gap400 > 0.3 * gap200);
  }

  SUBCASE("module property over the invariant algebra") {
    const Superoperator sup = vectorize(build_generator(p, 2));
    Mat t2 = Mat::Zero(4, 4);
    for (int i = 1; i <= 3; ++i) t2 += kron(pauli(i), pauli(i));
    Rng rng(34);
    const Mat x = random_hermitian(4, rng);
    const Mat averaged = time_average(sup, x, 200.0, 400);
    const Mat sandwiched = time_average(sup, Mat(t2 * x * t2), 200.0, 400);
    CHECK(max_abs_diff(sandwiched, t2 * averaged * t2) < 1e-6);
  }

  SUBCASE("argument validation") {
    const Superoperator sup = vectorize(build_generator(p, 1));
    CHECK_THROWS_AS(time_average(sup, pauli(1), -1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(time_average(sup, pauli(1), 1.0, 1), std::invalid_argument);
  }
}

TEST_CASE("duality between the time average and the asymptotic state") {
  const EnvironmentParams p{1.0, 0.5, 1.0, 1.0};
  const Superoperator sup = vectorize(build_generator(p, 2));
  Mat t2 = Mat::Zero(4, 4);
  for (int i = 1; i <= 3; ++i) t2 += kron(pauli(i), pauli(i));
  Rng rng(35);
  std::normal_distribution<double> gauss(0.0, 1.0);

  SUBCASE("exact on the invariant algebra") {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const DensityMatrix rho = random_density_matrix(2, rng);
      const Mat x = gauss(rng) * Mat::Identity(4, 4) + gauss(rng) * t2;
      const Mat averaged = time_average(sup, x, 200.0, 400);
      const DensityMatrix limit = asymptotic_state(sup, rho).state;
      worst = std::max(worst, std::abs((rho.matrix() * averaged).trace() -
                                       (limit.matrix() * x).trace()));
    }
    CHECK(worst < 1e-7);
  }

  SUBCASE("generic observables keep an O(1/T) truncation gap") {
    const DensityMatrix rho = random_density_matrix(2, rng);
    const Mat x = random_hermitian(4, rng);
    const DensityMatrix limit = asymptotic_state(sup, rho).state;
    const auto gap_at = [&](double horizon, int steps) {
      const Mat averaged = time_average(sup, x, horizon, steps);
      return std::abs((rho.matrix() * averaged).trace() - (limit.matrix() * x).trace());
    };
    const double gap200 = gap_at(200.0, 400);
    const double gap400 = gap_at(400.0, 800);
    CHECK(gap200 < 1e-2);
    CHECK(gap400 < 0.75 * gap200);
  }
}
