#include "symbath/verify.hpp"

#include "symbath/io.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace symbath {

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(claims.begin(), claims.end(), [](const ClaimResult& c) {
    return c.status == ClaimStatus::Pass;
  }));
}

int VerificationReport::failed() const {
  return static_cast<int>(std::count_if(claims.begin(), claims.end(), [](const ClaimResult& c) {
    return c.status == ClaimStatus::Fail;
  }));
}

int VerificationReport::flagged() const {
  return static_cast<int>(std::count_if(claims.begin(), claims.end(), [](const ClaimResult& c) {
    return c.status == ClaimStatus::Flag;
  }));
}

bool VerificationReport::ok() const { return failed() == 0; }

std::vector<EnvironmentParams> default_params_list() {
  std::vector<EnvironmentParams> out;
  for (double b : {0.0, 0.5, -0.5, 0.9, 0.99}) {
    out.push_back(EnvironmentParams{1.0, b, 1.0, 1.0});
  }
  return out;
}

namespace {

std::vector<double> alpha_checkpoints() {
  return {0.0, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 1.0 / 3.0};
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(count);
  for (int k = 0; k < count; ++k) out[k] = lo + (hi - lo) * k / (count - 1);
  return out;
}

/// alpha at which the oracle concurrence of the two-qubit asymptote family
/// turns off, located by predicate bisection.
double oracle_separability_crossing(const EnvironmentParams& p) {
  const auto entangled = [&p](double alpha) {
    const DensityMatrix state =
        two_qubit_conditional_expectation(alpha_family_state(alpha, 2), p);
    return concurrence_oracle(state).value > 0.0;
  };
  double lo = 0.0, hi = 1.0 / 3.0;
  if (!entangled(lo)) return lo;
  if (entangled(hi)) return hi;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (entangled(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct ClaimCheck {
  std::string id;
  std::string description;
  double tolerance;
  bool flag;  // reported, not asserted
  std::function<double()> residual;
};

}  // namespace

VerificationReport verify_all(const VerifyOptions& options) {
  const std::vector<EnvironmentParams> params_list =
      options.params_list.empty() ? default_params_list() : options.params_list;
  for (const EnvironmentParams& p : params_list) p.require_nondegenerate();

  std::vector<ClaimCheck> checks;

  checks.push_back(
      {"stationarity-product-states",
       "generator annihilates the stationary product state for n = 1, 2, 3",
       1e-11, false, [&params_list] {
         double worst = 0.0;
         for (const EnvironmentParams& p : params_list) {
           for (int n = 1; n <= 3; ++n) {
             const LindbladGenerator gen = build_generator(p, n);
             worst = std::max(worst, max_abs(gen.apply(stationary_product_matrix(p, n))));
           }
         }
         return worst;
       }});

  checks.push_back(
      {"one-qubit-bloch-fixed-point",
       "numeric one-qubit asymptote has Bloch vector (0, 0, b/a)",
       1e-9, false, [&params_list] {
         double worst = 0.0;
         Mat plus(2, 2);
         plus << 0.5, 0.5, 0.5, 0.5;
         const DensityMatrix start = DensityMatrix::from_matrix(plus);
         for (const EnvironmentParams& p : params_list) {
           const Superoperator sup = vectorize(build_generator(p, 1));
           const Eigen::Vector3d bloch = bloch_vector(asymptotic_state(sup, start).state);
           const Eigen::Vector3d target(0.0, 0.0, p.r_infinity());
           worst = std::max(worst, (bloch - target).cwiseAbs().maxCoeff());
         }
         return worst;
       }});

  checks.push_back(
      {"two-qubit-asymptote-closed-form",
       "numeric asymptote of the alpha family matches the two-qubit conditional expectation",
       1e-8, false, [&params_list] {
         double worst = 0.0;
         for (const EnvironmentParams& p : params_list) {
           const Superoperator sup = vectorize(build_generator(p, 2));
           for (double alpha : alpha_checkpoints()) {
             const DensityMatrix initial = alpha_family_state(alpha, 2);
             const DensityMatrix numeric = asymptotic_state(sup, initial).state;
             const DensityMatrix closed = two_qubit_conditional_expectation(initial, p);
             worst = std::max(worst, max_abs_diff(numeric.matrix(), closed.matrix()));
           }
         }
         return worst;
       }});

  checks.push_back(
      {"three-qubit-protocol-closed-form",
       "numeric asymptote of the protocol family matches the closed form, and its ancilla "
       "trace matches the X-form entries",
       1e-8, false, [&params_list] {
         double worst = 0.0;
         for (const EnvironmentParams& p : params_list) {
           const Superoperator sup = vectorize(build_generator(p, 3));
           for (double alpha : alpha_checkpoints()) {
             const DensityMatrix numeric =
                 asymptotic_state(sup, alpha_family_state(alpha, 3)).state;
             const DensityMatrix closed = three_qubit_protocol_asymptote(alpha, p);
             worst = std::max(worst, max_abs_diff(numeric.matrix(), closed.matrix()));
             const DensityMatrix reduced_numeric = partial_trace(numeric, {1, 2});
             const ReducedProtocolState reduced_closed = reduced_protocol_state(alpha, p);
             worst = std::max(worst, max_abs_diff(reduced_numeric.matrix(),
                                                  reduced_closed.state.matrix()));
           }
         }
         return worst;
       }});

  checks.push_back(
      {"reduced-concurrence-oracle-match",
       "closed-form reduced-state concurrence (derived radicand) equals the Wootters oracle "
       "on a 50x50 (alpha, r) grid",
       1e-10, false, [] {
         double worst = 0.0;
         for (double r : linspace(0.0, 0.99, 50)) {
           const EnvironmentParams p{1.0, r, 1.0, 1.0};
           for (double alpha : linspace(0.0, 1.0 / 3.0, 50)) {
             const double oracle =
                 concurrence_oracle(reduced_protocol_state(alpha, p).state).value;
             worst = std::max(worst,
                              std::abs(oracle - reduced_state_concurrence(alpha, r)));
           }
         }
         return worst;
       }});

  checks.push_back(
      {"threshold-endpoints",
       "threshold curves hit their exact endpoints: alpha_sep 1/6..1/3, alpha_gain 1/6..1/9, "
       "alpha_minus 1/2..3/10, alpha_plus 1/6..3/10",
       1e-12, false, [] {
         const ThresholdSet at0 = thresholds(0.0);
         const ThresholdSet at1 = thresholds(1.0);
         double worst = 0.0;
         worst = std::max(worst, std::abs(at0.alpha_sep - 1.0 / 6.0));
         worst = std::max(worst, std::abs(at1.alpha_sep - 1.0 / 3.0));
         worst = std::max(worst, std::abs(at0.alpha_gain - 1.0 / 6.0));
         worst = std::max(worst, std::abs(at1.alpha_gain - 1.0 / 9.0));
         worst = std::max(worst, std::abs(at0.alpha_minus - 0.5));
         worst = std::max(worst, std::abs(at1.alpha_minus - 0.3));
         worst = std::max(worst, std::abs(at0.alpha_plus - 1.0 / 6.0));
         worst = std::max(worst, std::abs(at1.alpha_plus - 0.3));
         return worst;
       }});

  checks.push_back(
      {"separability-zero-crossing",
       "oracle concurrence of the asymptote family vanishes exactly at alpha_sep(r) "
       "(bisection agreement; the printed magnitude is NOT asserted)",
       1e-8, false, [] {
         double worst = 0.0;
         for (double r : {0.0, 0.5, 0.9}) {
           const EnvironmentParams p{1.0, r, 1.0, 1.0};
           const double crossing = oracle_separability_crossing(p);
           worst = std::max(worst, std::abs(crossing - thresholds(r).alpha_sep));
         }
         return worst;
       }});

  checks.push_back(
      {"headline-entanglement-gain",
       "at r = 0.99 there is alpha in (alpha_minus, 1/3] whose initial and direct-asymptote "
       "concurrences vanish while the reduced protocol state stays entangled",
       1e-12, false, [] {
         const EnvironmentParams p{1.0, 0.99, 1.0, 1.0};
         const ThresholdSet t = thresholds(0.99);
         const double lo = std::max({t.alpha_minus, t.alpha_sep, 1.0 / 6.0});
         const double alpha = 0.5 * (lo + 1.0 / 3.0);
         const DensityMatrix initial = alpha_family_state(alpha, 2);
         const double c_init = concurrence_oracle(initial).value;
         const double c_asym =
             concurrence_oracle(two_qubit_conditional_expectation(initial, p)).value;
         const double c_red =
             concurrence_oracle(reduced_protocol_state(alpha, p).state).value;
         if (!(alpha > t.alpha_minus && alpha <= 1.0 / 3.0) || c_red <= 0.0) return 1.0;
         return std::max(c_init, c_asym);
       }});

  checks.push_back(
      {"critical-r-bisection",
       "bisection root of alpha_minus(r) = 1/3 (derived radicand, resolution 1e-10) agrees "
       "with the oracle onset of reduced-state entanglement at alpha = 1/3",
       1e-4, false, [] {
         const double root = critical_r(Radicand::Derived, 1e-10);
         const double oracle = oracle_critical_r(1e-6);
         return std::abs(root - oracle);
       }});

  checks.push_back(
      {"invariant-algebra-identities",
       "exchange/chirality operator identities hold exactly and the commutant and "
       "superoperator-kernel dimensions are 2 (n = 2) and 5 (n = 3)",
       1e-12, false, [] {
         const InvariantOperatorSet ops = invariant_operators();
         const Cplx i(0.0, 1.0);
         const auto comm = [](const Mat& x, const Mat& y) { return Mat(x * y - y * x); };
         const auto anti = [](const Mat& x, const Mat& y) { return Mat(x * y + y * x); };
         const Mat id8 = Mat::Identity(8, 8);

         double worst = 0.0;
         // pair-exchange commutators close on the chirality operator
         worst = std::max(worst, max_abs(comm(ops.s12, ops.s13) - 2.0 * i * ops.s));
         worst = std::max(worst, max_abs(comm(ops.s12, ops.s23) + 2.0 * i * ops.s));
         worst = std::max(worst, max_abs(comm(ops.s13, ops.s23) - 2.0 * i * ops.s));
         // anticommutators close on the third exchange
         worst = std::max(worst, max_abs(anti(ops.s12, ops.s13) - 2.0 * ops.s23));
         worst = std::max(worst, max_abs(anti(ops.s12, ops.s23) - 2.0 * ops.s13));
         worst = std::max(worst, max_abs(anti(ops.s13, ops.s23) - 2.0 * ops.s12));
         // chirality commutators, cyclic in the omitted qubit
         worst = std::max(worst, max_abs(comm(ops.s12, ops.s) - 4.0 * i * (ops.s23 - ops.s13)));
         worst = std::max(worst, max_abs(comm(ops.s13, ops.s) - 4.0 * i * (ops.s12 - ops.s23)));
         worst = std::max(worst, max_abs(comm(ops.s23, ops.s) - 4.0 * i * (ops.s13 - ops.s12)));
         // centrality of T and the square relations
         for (const Mat* m : {&ops.s12, &ops.s13, &ops.s23, &ops.s}) {
           worst = std::max(worst, max_abs(comm(ops.t, *m)));
         }
         for (const Mat* m : {&ops.s12, &ops.s13, &ops.s23}) {
           worst = std::max(worst, max_abs(Mat(*m * *m) - (3.0 * id8 - 2.0 * *m)));
         }
         worst = std::max(worst, max_abs(Mat(ops.s * ops.s) - 2.0 * (3.0 * id8 - ops.t)));
         // symmetric-sector projection absorbs the exchanges and kills the chirality
         for (const Mat* m : {&ops.s12, &ops.s13, &ops.s23}) {
           worst = std::max(worst, max_abs(Mat(ops.q * *m) - ops.q));
         }
         worst = std::max(worst, max_abs(Mat(ops.q * ops.s)));

         // commutant dimensions and spans; any structural violation is a
         // hard failure regardless of the algebraic tolerance
         for (int n : {2, 3}) {
           std::vector<Mat> gens;
           for (int k = 1; k <= 3; ++k) gens.push_back(global_spin(k, n));
           const std::vector<Mat> basis = brute_force_commutant(gens);
           const int expected = n == 2 ? 2 : 5;
           if (static_cast<int>(basis.size()) != expected) return 1.0;
           std::vector<Mat> spanning;
           if (n == 2) {
             Mat t2 = Mat::Zero(4, 4);
             for (int k = 1; k <= 3; ++k) t2 += kron(pauli(k), pauli(k));
             spanning = {Mat::Identity(4, 4), t2};
           } else {
             spanning = {Mat::Identity(8, 8), ops.s12, ops.s13, ops.s23, ops.s};
           }
           for (const Mat& m : spanning) {
             if (max_abs_diff(project_onto_span(m, basis), m) > 1e-10) return 1.0;
           }
         }

         // superoperator kernels and spectral abscissa
         const EnvironmentParams p{1.0, 0.5, 1.0, 1.0};
         for (int n : {2, 3}) {
           const Superoperator sup = vectorize(build_generator(p, n));
           const int expected = n == 2 ? 2 : 5;
           if (kernel_dimension(sup) != expected) return 1.0;
           if (spectral_abscissa(sup) > 1e-10) return 1.0;
         }
         return worst;
       }});

  checks.push_back(
      {"figure-presets",
       "figure grids 1-3 are nonempty and deterministic; the reduced-state surface is "
       "positive near (r -> 1, alpha -> 1/3); delta1 > 0 occurs below alpha_gain; "
       "delta2 > 0 occurs above alpha_gain",
       0.5, false, [] {
         for (int fig = 1; fig <= 3; ++fig) {
           const auto grid = figure_grid(fig);
           if (grid.empty()) return 1.0;
           const auto records = sweep(grid, Method::Analytic);
           const auto records_again = sweep(grid, Method::Analytic);
           const std::string csv = protocol_csv(records, ConcurrenceMode::Paper, {});
           if (csv != protocol_csv(records_again, ConcurrenceMode::Paper, {})) return 1.0;
           bool feature = false;
           for (const ProtocolRecord& rec : records) {
             if (fig == 1) {
               feature = feature || (rec.r >= 0.985 && rec.alpha >= 1.0 / 3.0 - 1e-9 &&
                                     rec.c_reduced_3q_paper > 0.0);
             } else if (fig == 2) {
               feature = feature || rec.deltas_paper.delta1 > 0.0;
             } else {
               feature = feature || rec.deltas_paper.delta2 > 0.0;
             }
           }
           if (!feature) return 1.0;
         }
         return 0.0;
       }});

  checks.push_back(
      {"conditional-expectation-duality",
       "Tr(rho E^[x]) = Tr(E[rho] x) for 20 random states and invariant-algebra observables, "
       "E^ the trapezoidal time average at T = 200",
       1e-7, false, [] {
         const EnvironmentParams p{1.0, 0.5, 1.0, 1.0};
         const Superoperator sup = vectorize(build_generator(p, 2));
         Mat t2 = Mat::Zero(4, 4);
         for (int k = 1; k <= 3; ++k) t2 += kron(pauli(k), pauli(k));
         Rng rng(20240517);
         std::normal_distribution<double> gauss(0.0, 1.0);
         double worst = 0.0;
         for (int trial = 0; trial < 20; ++trial) {
           const DensityMatrix rho = random_density_matrix(2, rng);
           const Mat x = gauss(rng) * Mat::Identity(4, 4) + gauss(rng) * t2;
           const Mat averaged = time_average(sup, x, 200.0, 400);
           const DensityMatrix limit = asymptotic_state(sup, rho).state;
           const Cplx lhs = (rho.matrix() * averaged).trace();
           const Cplx rhs = (limit.matrix() * x).trace();
           worst = std::max(worst, std::abs(lhs - rhs));
         }
         return worst;
       }});

  // Flagged reproductions of printed formulas: residuals are reported, not asserted.
  checks.push_back(
      {"flag-printed-asymptotic-concurrence",
       "printed magnitude of the asymptote-family concurrence vs the Wootters oracle "
       "(half the oracle value; 0.5 at alpha = 0, r = 0)",
       0.0, true, [] {
         double worst = 0.0;
         for (double r : {0.0, 0.5, 0.9}) {
           const EnvironmentParams p{1.0, r, 1.0, 1.0};
           for (double alpha : alpha_checkpoints()) {
             const double oracle =
                 concurrence_oracle(
                     two_qubit_conditional_expectation(alpha_family_state(alpha, 2), p))
                     .value;
             const double printed =
                 std::max(0.0, closed_form_asymptotic_concurrence(alpha, r));
             worst = std::max(worst, std::abs(oracle - printed));
           }
         }
         return worst;
       }});

  checks.push_back(
      {"flag-printed-general-concurrence",
       "printed general-asymptote concurrence (singlet-weight form) vs the Wootters oracle",
       0.0, true, [] {
         double worst = 0.0;
         for (double r : {0.0, 0.5, 0.9}) {
           const EnvironmentParams p{1.0, r, 1.0, 1.0};
           for (double alpha : alpha_checkpoints()) {
             const DensityMatrix initial = alpha_family_state(alpha, 2);
             const double rho_p = expectation(initial, singlet_projector());
             const double oracle =
                 concurrence_oracle(two_qubit_conditional_expectation(initial, p)).value;
             worst = std::max(
                 worst, std::abs(oracle - closed_form_general_concurrence(rho_p, r)));
           }
         }
         return worst;
       }});

  checks.push_back(
      {"flag-published-radicand",
       "printed reduced-state radicand (1-r^2)(9+9r^2+4r^4) vs the Wootters oracle on the "
       "50x50 grid (the derived radicand passes the same check at 1e-10)",
       0.0, true, [] {
         double worst = 0.0;
         for (double r : linspace(0.0, 0.99, 50)) {
           const EnvironmentParams p{1.0, r, 1.0, 1.0};
           for (double alpha : linspace(0.0, 1.0 / 3.0, 50)) {
             const double oracle =
                 concurrence_oracle(reduced_protocol_state(alpha, p).state).value;
             worst = std::max(worst, std::abs(oracle - reduced_state_concurrence(
                                                           alpha, r, Radicand::Published)));
           }
         }
         return worst;
       }});

  checks.push_back(
      {"flag-published-critical-r",
       "published critical r value 0.980965 vs the bisection root of alpha_minus(r) = 1/3",
       0.0, true, [] {
         return std::abs(critical_r(Radicand::Derived, 1e-10) - kPublishedCriticalR);
       }});

  VerificationReport report;
  for (const ClaimCheck& check : checks) {
    if (!options.claim_filter.empty() &&
        check.id.find(options.claim_filter) == std::string::npos) {
      continue;
    }
    ClaimResult result;
    result.id = check.id;
    result.description = check.description;
    result.tolerance = check.flag ? check.tolerance
                       : options.tolerance_override > 0.0 ? options.tolerance_override
                                                          : check.tolerance;
    result.max_residual = check.residual();
    if (check.flag) {
      result.status = ClaimStatus::Flag;
    } else {
      result.status = result.max_residual <= result.tolerance ? ClaimStatus::Pass
                                                              : ClaimStatus::Fail;
    }
    report.claims.push_back(std::move(result));
  }
  return report;
}

const char* to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Flag: return "flag";
  }
  return "?";
}

std::string report_table(const VerificationReport& report) {
  std::ostringstream out;
  std::size_t width = 0;
  for (const ClaimResult& c : report.claims) width = std::max(width, c.id.size());
  for (const ClaimResult& c : report.claims) {
    out << "[" << to_string(c.status) << "] " << c.id
        << std::string(width - c.id.size() + 2, ' ') << "residual " << format_float(c.max_residual);
    if (c.status != ClaimStatus::Flag) {
      out << "  (tol " << format_float(c.tolerance) << ")";
    } else {
      out << "  (reported, not asserted)";
    }
    out << "\n      " << c.description << "\n";
  }
  out << "summary: " << report.passed() << " passed, " << report.failed() << " failed, "
      << report.flagged() << " flagged\n";
  return out.str();
}

std::string report_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "claim,status,max_residual,tolerance,description\n";
  for (const ClaimResult& c : report.claims) {
    std::string desc = c.description;
    std::replace(desc.begin(), desc.end(), ',', ';');
    out << c.id << "," << to_string(c.status) << "," << format_float(c.max_residual) << ","
        << format_float(c.tolerance) << "," << desc << "\n";
  }
  return out.str();
}

}  // namespace symbath
