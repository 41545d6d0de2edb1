// Command line front end: steady states, finite-time evolution, protocol
// sweeps with figure presets, the verification suite, and the critical-r
// report. Exit codes: 0 success, 2 validation error, 3 non-convergence.
#include "symbath/symbath.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace symbath;

struct ParamFlags {
  double a = 1.0;
  double b = 0.0;
  double c = 1.0;
  double omega = 1.0;
  std::optional<double> r;
  bool b_given = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--a", a, "rate a (> 0)")->capture_default_str();
    cmd->add_option("--b", b, "rate b (|b| <= a)")->each([this](const std::string&) {
      b_given = true;
    });
    cmd->add_option("--c", c, "rate c (>= 0)")->capture_default_str();
    cmd->add_option("--omega", omega, "Larmor frequency")->capture_default_str();
    cmd->add_option("--r", r, "stationary ratio r = b/a; implies a = 1, b = r");
  }

  EnvironmentParams resolve() const {
    if (r.has_value() && b_given) {
      throw std::invalid_argument("give exactly one of --b or --r");
    }
    if (!r.has_value() && !b_given) {
      throw std::invalid_argument("give exactly one of --b or --r");
    }
    EnvironmentParams p;
    if (r.has_value()) {
      p = EnvironmentParams{1.0, *r, c, omega};
    } else {
      p = EnvironmentParams{a, b, c, omega};
    }
    p.validate();
    return p;
  }
};

struct Range {
  double lo = 0.0, hi = 0.0, step = 0.0;
};

Range parse_range(const std::string& text) {
  Range range;
  char colon1 = 0, colon2 = 0;
  std::istringstream in(text);
  if (!(in >> range.lo >> colon1 >> range.hi >> colon2 >> range.step) || colon1 != ':' ||
      colon2 != ':') {
    throw std::invalid_argument("range must be lo:hi:step, got '" + text + "'");
  }
  if (!(range.lo <= range.hi) || !(range.step > 0.0)) {
    throw std::invalid_argument("range needs lo <= hi and step > 0: '" + text + "'");
  }
  return range;
}

DensityMatrix load_initial_state(int n, const std::optional<double>& alpha,
                                 const std::string& input_path) {
  if (alpha.has_value() && !input_path.empty()) {
    throw std::invalid_argument("give at most one of --alpha and --input");
  }
  if (alpha.has_value()) {
    if (n < 2) {
      throw std::invalid_argument("--alpha defines a 2- or 3-qubit state; use --input for n = 1");
    }
    return alpha_family_state(*alpha, n);
  }
  if (!input_path.empty()) {
    const DensityMatrix rho = DensityMatrix::from_matrix(read_matrix_file(input_path));
    if (rho.qubit_count() != n) {
      throw std::invalid_argument("input state has " + std::to_string(rho.qubit_count()) +
                                  " qubits, expected " + std::to_string(n));
    }
    return rho;
  }
  if (n == 1) {
    return DensityMatrix::from_matrix(0.5 * Mat::Identity(2, 2));
  }
  throw std::invalid_argument("an initial state is required for n >= 2: --alpha or --input");
}

void emit(const std::string& output_path, const std::string& content) {
  if (output_path.empty()) {
    std::cout << content;
  } else {
    write_text_file_atomic(output_path, content);
  }
}

int cmd_steady(int n, const ParamFlags& flags, const std::optional<double>& alpha,
               const std::string& input, const std::string& method, double tol,
               const std::string& output) {
  const EnvironmentParams p = flags.resolve();
  const DensityMatrix initial = load_initial_state(n, alpha, input);

  DensityMatrix limit = initial;
  std::ostringstream info;
  if (method == "numeric") {
    const Superoperator sup = vectorize(build_generator(p, n));
    const ConvergenceResult res = asymptotic_state(sup, initial, tol);
    limit = res.state;
    info << "horizon " << format_float(res.horizon) << ", doublings " << res.doublings
         << ", residual " << format_float(res.residual) << "\n";
  } else if (method == "analytic") {
    p.require_nondegenerate();
    if (n == 1) {
      limit = one_qubit_stationary(p);
    } else if (n == 2) {
      limit = two_qubit_conditional_expectation(initial, p);
    } else {
      if (!alpha.has_value()) {
        throw std::invalid_argument(
            "the analytic three-qubit asymptote is available for the --alpha family only");
      }
      limit = three_qubit_protocol_asymptote(*alpha, p);
    }
  } else {
    throw std::invalid_argument("--method must be analytic or numeric");
  }

  const double generator_residual = max_abs(build_generator(p, n).apply(limit.matrix()));
  std::cout << "asymptotic state, n = " << n << ", method = " << method << "\n"
            << matrix_to_text(limit.matrix()) << "max |L[rho_inf]| = "
            << format_float(generator_residual) << "\n"
            << info.str();
  if (!output.empty()) {
    write_text_file_atomic(output, matrix_to_text(limit.matrix()));
  }
  return 0;
}

int cmd_evolve(int n, const ParamFlags& flags, double t, const std::optional<double>& alpha,
               const std::string& input, const std::string& output) {
  const EnvironmentParams p = flags.resolve();
  const DensityMatrix initial = load_initial_state(n, alpha, input);
  const Superoperator sup = vectorize(build_generator(p, n));
  const Mat evolved = apply_propagator(propagator(sup, t), initial.matrix());
  std::cout << "evolved state, n = " << n << ", t = " << format_float(t) << "\n"
            << matrix_to_text(evolved);
  if (!output.empty()) {
    write_text_file_atomic(output, matrix_to_text(evolved));
  }
  return 0;
}

int cmd_protocol(const std::optional<double>& r_point, const std::string& r_range_text,
                 const std::optional<double>& alpha_point, const std::string& alpha_range_text,
                 int figure, double alpha_floor, double r_step, double alpha_step,
                 std::string mode_name, const std::string& method_name,
                 const std::string& output) {
  const Method method = [&] {
    if (method_name == "analytic") return Method::Analytic;
    if (method_name == "numeric") return Method::Numeric;
    throw std::invalid_argument("--method must be analytic or numeric");
  }();

  std::vector<GridPoint> grid;
  if (figure != 0) {
    grid = figure_grid(figure, alpha_floor, r_step, alpha_step);
    if (mode_name.empty()) mode_name = "paper";
  } else {
    std::vector<double> rs;
    if (r_point.has_value() && r_range_text.empty()) {
      rs = {*r_point};
    } else if (!r_point.has_value() && !r_range_text.empty()) {
      const Range range = parse_range(r_range_text);
      rs = linear_grid(range.lo, range.hi, range.step);
    } else {
      throw std::invalid_argument("give exactly one of --r or --r-range (or use --figure)");
    }
    std::vector<double> alphas;
    if (alpha_point.has_value() && alpha_range_text.empty()) {
      alphas = {*alpha_point};
    } else if (!alpha_point.has_value() && !alpha_range_text.empty()) {
      const Range range = parse_range(alpha_range_text);
      alphas = linear_grid(range.lo, range.hi, range.step);
    } else {
      throw std::invalid_argument("give exactly one of --alpha or --alpha-range (or use --figure)");
    }
    grid = product_grid(rs, alphas);
    if (mode_name.empty()) mode_name = "oracle";
  }

  const ConcurrenceMode mode = [&] {
    if (mode_name == "paper") return ConcurrenceMode::Paper;
    if (mode_name == "oracle") return ConcurrenceMode::Oracle;
    throw std::invalid_argument("--mode must be paper or oracle");
  }();

  std::vector<std::pair<std::string, std::string>> echo;
  echo.emplace_back("subcommand", "protocol");
  if (figure != 0) {
    echo.emplace_back("figure", std::to_string(figure));
    echo.emplace_back("alpha_floor", format_float(alpha_floor));
    echo.emplace_back("r_step", format_float(r_step));
    echo.emplace_back("alpha_step", format_float(alpha_step));
  }
  echo.emplace_back("mode", mode_name);
  echo.emplace_back("method", method_name);
  echo.emplace_back("points", std::to_string(grid.size()));

  const std::vector<ProtocolRecord> records = sweep(std::move(grid), method);
  emit(output, protocol_csv(records, mode, echo));
  return 0;
}

int cmd_verify(double tol, const std::string& claims, const std::vector<double>& b_values,
               const std::string& csv_path) {
  VerifyOptions opts;
  opts.tolerance_override = tol;
  opts.claim_filter = claims;
  for (double b : b_values) {
    opts.params_list.push_back(EnvironmentParams{1.0, b, 1.0, 1.0});
  }
  const VerificationReport report = verify_all(opts);
  std::cout << report_table(report);
  if (!csv_path.empty()) {
    write_text_file_atomic(csv_path, report_csv(report));
  }
  return report.ok() ? 0 : 1;
}

int cmd_critical_r(const std::string& radicand_name, double resolution) {
  const Radicand radicand = [&] {
    if (radicand_name == "derived") return Radicand::Derived;
    if (radicand_name == "published") return Radicand::Published;
    throw std::invalid_argument("--radicand must be derived or published");
  }();
  const double root = critical_r(radicand, resolution);
  const double alpha_minus_at_root = thresholds(root).alpha_minus;
  const double onset = oracle_critical_r(1e-6);

  std::cout << "bisection root of alpha_minus(r) = 1/3 (" << radicand_name
            << " radicand): " << format_float(root) << "\n"
            << "alpha_minus(root) = " << format_float(alpha_minus_at_root) << "\n"
            << "oracle onset of reduced-state entanglement at alpha = 1/3: "
            << format_float(onset) << "  (|root - onset| = " << format_float(std::abs(root - onset))
            << ")\n"
            << "published value 0.980965: |root - published| = "
            << format_float(std::abs(root - kPublishedCriticalR)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"collective-environment qubit dissipation: steady states, protocol sweeps, "
               "verification"};
  app.require_subcommand(1);

  // steady
  auto* steady = app.add_subcommand("steady", "asymptotic state of an initial condition");
  int steady_n = 1;
  ParamFlags steady_params;
  std::optional<double> steady_alpha;
  std::string steady_input, steady_output, steady_method = "numeric";
  double steady_tol = 1e-10;
  steady->add_option("--n", steady_n, "qubit count")->required()->check(CLI::Range(1, 3));
  steady_params.attach(steady);
  steady->add_option("--alpha", steady_alpha, "initial alpha-family state (n = 2, 3)");
  steady->add_option("--input", steady_input, "initial state from a matrix file");
  steady->add_option("--method", steady_method, "analytic | numeric")->capture_default_str();
  steady->add_option("--tol", steady_tol, "convergence tolerance")->capture_default_str();
  steady->add_option("--output", steady_output, "write the state as a matrix file");

  // evolve
  auto* evolve = app.add_subcommand("evolve", "propagate an initial state to time t");
  int evolve_n = 1;
  ParamFlags evolve_params;
  std::optional<double> evolve_alpha;
  std::string evolve_input, evolve_output;
  double evolve_t = 0.0;
  evolve->add_option("--n", evolve_n, "qubit count")->required()->check(CLI::Range(1, 3));
  evolve_params.attach(evolve);
  evolve->add_option("--t", evolve_t, "evolution time (>= 0)")->required();
  evolve->add_option("--alpha", evolve_alpha, "initial alpha-family state (n = 2, 3)");
  evolve->add_option("--input", evolve_input, "initial state from a matrix file");
  evolve->add_option("--output", evolve_output, "write the state as a matrix file");

  // protocol
  auto* protocol = app.add_subcommand("protocol", "ancilla protocol sweep, CSV output");
  std::optional<double> protocol_r, protocol_alpha;
  std::string protocol_r_range, protocol_alpha_range, protocol_output;
  std::string protocol_mode, protocol_method = "analytic";
  int protocol_figure = 0;
  double protocol_alpha_floor = 0.2, protocol_r_step = 0.02, protocol_alpha_step = 0.005;
  protocol->add_option("--r", protocol_r, "single r value");
  protocol->add_option("--r-range", protocol_r_range, "r grid lo:hi:step");
  protocol->add_option("--alpha", protocol_alpha, "single alpha value");
  protocol->add_option("--alpha-range", protocol_alpha_range, "alpha grid lo:hi:step");
  protocol->add_option("--figure", protocol_figure, "figure preset 1 | 2 | 3")
      ->check(CLI::Range(1, 3));
  protocol->add_option("--alpha-floor", protocol_alpha_floor,
                       "alpha lower bound for figure 1")->capture_default_str();
  protocol->add_option("--r-step", protocol_r_step, "r step for figure presets")
      ->capture_default_str();
  protocol->add_option("--alpha-step", protocol_alpha_step, "alpha step for figure presets")
      ->capture_default_str();
  protocol->add_option("--mode", protocol_mode,
                       "paper | oracle delta columns (default: oracle; figures: paper)");
  protocol->add_option("--method", protocol_method, "analytic | numeric")->capture_default_str();
  protocol->add_option("--output", protocol_output, "CSV path (default: stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  double verify_tol = 0.0;
  std::string verify_claims, verify_csv;
  std::vector<double> verify_b;
  verify->add_option("--tol", verify_tol, "override every claim tolerance");
  verify->add_option("--claims", verify_claims, "substring filter on claim ids");
  verify->add_option("--b", verify_b, "b values for the parameter-sweep claims (a = c = 1)");
  verify->add_option("--csv", verify_csv, "write the machine-readable report here");

  // critical-r
  auto* critical = app.add_subcommand("critical-r", "onset of reduced-state entanglement at "
                                                    "alpha = 1/3");
  std::string critical_radicand = "derived";
  double critical_resolution = 1e-10;
  critical->add_option("--radicand", critical_radicand, "derived | published")
      ->capture_default_str();
  critical->add_option("--resolution", critical_resolution, "bisection resolution")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (steady->parsed()) {
      return cmd_steady(steady_n, steady_params, steady_alpha, steady_input, steady_method,
                        steady_tol, steady_output);
    }
    if (evolve->parsed()) {
      return cmd_evolve(evolve_n, evolve_params, evolve_t, evolve_alpha, evolve_input,
                        evolve_output);
    }
    if (protocol->parsed()) {
      return cmd_protocol(protocol_r, protocol_r_range, protocol_alpha, protocol_alpha_range,
                          protocol_figure, protocol_alpha_floor, protocol_r_step,
                          protocol_alpha_step, protocol_mode, protocol_method, protocol_output);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_tol, verify_claims, verify_b, verify_csv);
    }
    if (critical->parsed()) {
      return cmd_critical_r(critical_radicand, critical_resolution);
    }
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const symbath::NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
