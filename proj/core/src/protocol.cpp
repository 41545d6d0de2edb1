#include "symbath/protocol.hpp"

#include "symbath/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symbath {

namespace {

std::string classify_regime(double c_init, double c_asym, double c_red) {
  constexpr double eps = 1e-12;
  std::string base;
  if (c_init > eps && c_asym > eps) {
    base = "both-entangled";
  } else if (c_init <= eps && c_asym > eps) {
    base = "dissipatively-entangled";
  } else if (c_init <= eps && c_asym <= eps) {
    base = "both-separable";
  } else {
    base = "asymptotically-separable";
  }
  if (c_red > eps) base += "+reduced-entangled";
  if (c_red >= 1.0 - 1e-6) base += "+singlet-preserved";
  return base;
}

}  // namespace

ProtocolRecord run_protocol_point(double alpha, const EnvironmentParams& p, Method method) {
  p.require_nondegenerate();
  if (!(alpha >= 0.0 && alpha <= 1.0 / 3.0)) {
    throw std::invalid_argument("run_protocol_point: alpha must lie in [0, 1/3]");
  }
  const double r = p.r_infinity();

  const DensityMatrix initial2q = alpha_family_state(alpha, 2);
  const DensityMatrix analytic3q = three_qubit_protocol_asymptote(alpha, p);
  const ReducedProtocolState reduced_closed = reduced_protocol_state(alpha, p);

  ProtocolRecord rec;
  rec.r = r;
  rec.alpha = alpha;

  DensityMatrix asym3q = analytic3q;
  DensityMatrix asym2q = two_qubit_conditional_expectation(initial2q, p);
  if (method == Method::Numeric) {
    const Superoperator sup3 = vectorize(build_generator(p, 3));
    asym3q = asymptotic_state(sup3, alpha_family_state(alpha, 3)).state;
    const Superoperator sup2 = vectorize(build_generator(p, 2));
    asym2q = asymptotic_state(sup2, initial2q).state;
    rec.residual_analytic_vs_numeric = max_abs_diff(asym3q.matrix(), analytic3q.matrix());
  } else {
    rec.residual_analytic_vs_numeric =
        max_abs_diff(partial_trace(analytic3q, {1, 2}).matrix(), reduced_closed.state.matrix());
  }
  const DensityMatrix reduced = partial_trace(asym3q, {1, 2});

  rec.c_initial = concurrence_oracle(initial2q).value;
  rec.c_asymptotic_2q_oracle = concurrence_oracle(asym2q).value;
  rec.c_asymptotic_2q_paper = std::max(0.0, closed_form_asymptotic_concurrence(alpha, r));
  rec.c_reduced_3q_oracle = concurrence_oracle(reduced).value;
  rec.c_reduced_3q_paper = reduced_state_concurrence(alpha, r);

  rec.deltas_oracle = DeltaSet{rec.c_asymptotic_2q_oracle - rec.c_initial,
                               rec.c_reduced_3q_oracle - rec.c_initial,
                               rec.c_reduced_3q_oracle - rec.c_asymptotic_2q_oracle};
  const double c_init_paper = concurrence_alpha_family(alpha);
  rec.deltas_paper = DeltaSet{rec.c_asymptotic_2q_paper - c_init_paper,
                              rec.c_reduced_3q_paper - c_init_paper,
                              rec.c_reduced_3q_paper - rec.c_asymptotic_2q_paper};
  rec.regime =
      classify_regime(rec.c_initial, rec.c_asymptotic_2q_oracle, rec.c_reduced_3q_oracle);
  return rec;
}

std::vector<double> linear_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(lo <= hi)) {
    throw std::invalid_argument("linear_grid: need lo <= hi and step > 0");
  }
  std::vector<double> out;
  for (int k = 0;; ++k) {
    const double v = lo + k * step;
    if (v > hi + 1e-12) break;
    out.push_back(std::min(v, hi));
  }
  // the range is closed: keep the upper endpoint when the step overshoots it
  if (hi - out.back() > 1e-12) out.push_back(hi);
  return out;
}

std::vector<GridPoint> product_grid(const std::vector<double>& r_values,
                                    const std::vector<double>& alpha_values) {
  std::vector<GridPoint> grid;
  grid.reserve(r_values.size() * alpha_values.size());
  for (double r : r_values) {
    for (double alpha : alpha_values) grid.emplace_back(r, alpha);
  }
  return grid;
}

std::vector<double> default_r_grid() {
  std::vector<double> rs = linear_grid(0.0, 0.98, 0.02);
  rs.push_back(0.99);
  return rs;
}

std::vector<GridPoint> figure_grid(int figure, double alpha_floor, double r_step,
                                   double alpha_step) {
  if (figure < 1 || figure > 3) {
    throw std::invalid_argument("figure preset must be 1, 2 or 3");
  }
  std::vector<double> rs = linear_grid(0.0, 0.98, r_step);
  rs.push_back(0.99);
  std::vector<GridPoint> grid;
  for (double r : rs) {
    const ThresholdSet t = thresholds(r);
    double lo = 0.0, hi = 1.0 / 3.0;
    if (figure == 1) {
      lo = std::max(alpha_floor, t.alpha_sep);
    } else if (figure == 2) {
      hi = t.alpha_gain;
    } else {
      lo = t.alpha_gain;
    }
    for (double alpha : linear_grid(lo, hi, alpha_step)) grid.emplace_back(r, alpha);
  }
  return grid;
}

std::vector<ProtocolRecord> sweep(std::vector<GridPoint> grid, Method method) {
  if (grid.empty()) {
    throw std::invalid_argument("sweep: empty grid");
  }
  for (const auto& [r, alpha] : grid) {
    if (!(std::abs(r) < 1.0) || !(alpha >= 0.0 && alpha <= 1.0 / 3.0)) {
      throw std::invalid_argument("sweep: invalid grid point (r = " + format_float(r) +
                                  ", alpha = " + format_float(alpha) + ")");
    }
  }
  std::stable_sort(grid.begin(), grid.end());
  std::vector<ProtocolRecord> records;
  records.reserve(grid.size());
  for (const auto& [r, alpha] : grid) {
    records.push_back(run_protocol_point(alpha, EnvironmentParams{1.0, r, 1.0, 1.0}, method));
  }
  return records;
}

std::string protocol_csv(const std::vector<ProtocolRecord>& records, ConcurrenceMode mode,
                         const std::vector<std::pair<std::string, std::string>>& config_echo) {
  std::ostringstream out;
  for (const auto& [key, value] : config_echo) {
    out << "# " << key << "=" << value << "\n";
  }
  out << "r,alpha,C_init,C_asym2q_oracle,C_asym2q_paper,C_red3q_oracle,C_red3q_paper,"
         "delta,delta1,delta2,regime,residual\n";
  for (const ProtocolRecord& rec : records) {
    const DeltaSet& d = mode == ConcurrenceMode::Oracle ? rec.deltas_oracle : rec.deltas_paper;
    out << format_float(rec.r) << "," << format_float(rec.alpha) << ","
        << format_float(rec.c_initial) << "," << format_float(rec.c_asymptotic_2q_oracle) << ","
        << format_float(rec.c_asymptotic_2q_paper) << ","
        << format_float(rec.c_reduced_3q_oracle) << "," << format_float(rec.c_reduced_3q_paper)
        << "," << format_float(d.delta) << "," << format_float(d.delta1) << ","
        << format_float(d.delta2) << "," << rec.regime << ","
        << format_float(rec.residual_analytic_vs_numeric) << "\n";
  }
  return out.str();
}

}  // namespace symbath
