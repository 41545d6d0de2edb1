// End-to-end protocol runs over (r, alpha) grids: append a depolarized
// ancilla, relax to the asymptote (closed form or numeric propagation), trace
// the ancilla out, and quantify the entanglement balance with regime labels.
#pragma once

#include "symbath/dynamics.hpp"
#include "symbath/entanglement.hpp"

#include <string>
#include <utility>
#include <vector>

namespace symbath {

enum class Method { Analytic, Numeric };

struct ProtocolRecord {
  double r = 0.0;
  double alpha = 0.0;
  double c_initial = 0.0;
  double c_asymptotic_2q_oracle = 0.0;
  double c_asymptotic_2q_paper = 0.0;
  double c_reduced_3q_oracle = 0.0;
  double c_reduced_3q_paper = 0.0;
  DeltaSet deltas_oracle;
  DeltaSet deltas_paper;
  std::string regime;
  /// method = Numeric: max-abs gap between the numeric and closed-form
  /// three-qubit asymptotes. method = Analytic: internal consistency residual
  /// (partial trace of the asymptote vs the closed-form reduced state).
  double residual_analytic_vs_numeric = 0.0;
};

ProtocolRecord run_protocol_point(double alpha, const EnvironmentParams& p, Method method);

using GridPoint = std::pair<double, double>;  // (r, alpha)

/// lo, lo+step, ... up to hi (inclusive within a small slack).
std::vector<double> linear_grid(double lo, double hi, double step);

/// Row-major product grid: r outer, alpha inner.
std::vector<GridPoint> product_grid(const std::vector<double>& r_values,
                                    const std::vector<double>& alpha_values);

/// r = 0, 0.02, ..., 0.98 plus 0.99.
std::vector<double> default_r_grid();

/// Figure presets over default_r_grid():
///  1: concurrence of the reduced asymptote on alpha in
///     [max(alpha_floor, alpha_sep(r)), 1/3];
///  2: delta1 on alpha in [0, alpha_gain(r)];
///  3: delta2 on alpha in [alpha_gain(r), 1/3].
std::vector<GridPoint> figure_grid(int figure, double alpha_floor = 0.2,
                                   double r_step = 0.02, double alpha_step = 0.005);

/// One record per grid point, every point validated before any computation,
/// output ordered row-major by (r, alpha).
std::vector<ProtocolRecord> sweep(std::vector<GridPoint> grid, Method method);

/// CSV with `# key=value` echo lines, the fixed header
/// r,alpha,C_init,C_asym2q_oracle,C_asym2q_paper,C_red3q_oracle,C_red3q_paper,
/// delta,delta1,delta2,regime,residual
/// and 17-significant-digit floats. The delta columns follow `mode`; both
/// concurrence families are always present.
std::string protocol_csv(const std::vector<ProtocolRecord>& records, ConcurrenceMode mode,
                         const std::vector<std::pair<std::string, std::string>>& config_echo);

}  // namespace symbath
