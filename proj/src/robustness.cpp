#include "gqg/robustness.hpp"

#include <cmath>
#include <sstream>

namespace gqg {

namespace {

constexpr double kFitEpsMin = 1e-2;
constexpr double kFitEpsMax = 1e-1;
constexpr std::size_t kFitPoints = 20;
constexpr std::size_t kMinFitRows = 5;

bool axes_collinear(const PulseSequence &seq) {
  const BlochVector &first = seq.segments.front().axis;
  for (const Segment &s : seq.segments)
    if (first.cross(s.axis).norm() > kCompensationTolerance)
      return false;
  return true;
}

} // namespace

Unitary2 apply_error(const PulseSequence &seq, double eps) {
  Unitary2 u = Unitary2::Identity();
  for (const Segment &s : seq.segments)
    u = rotation(s.axis, s.angle * (1.0 + eps)) * u;
  return u;
}

double infidelity(const PulseSequence &seq, const Unitary2 &target,
                  double eps) {
  // 1 - |Tr|/2 == d^2/4, and d is computed without cancellation.
  const double d = distance_up_to_phase(target, apply_error(seq, eps));
  const double value = 0.25 * d * d;
  return value < kInfidelityFloor ? 0.0 : value;
}

std::vector<SweepRow> sweep(const PulseSequence &seq, const Unitary2 &target,
                            std::span<const double> eps_grid) {
  if (eps_grid.empty())
    throw DomainError("sweep: empty epsilon grid");
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    const double e = eps_grid[i];
    if (!std::isfinite(e) || e < 0.0 || e >= kSeriesRegimeLimit)
      throw DomainError("sweep: epsilon values must lie in [0, 0.5)");
    if (i > 0 && !(e > eps_grid[i - 1]))
      throw DomainError("sweep: epsilon grid must be strictly increasing");
  }
  std::vector<SweepRow> rows;
  rows.reserve(eps_grid.size());
  for (double e : eps_grid) {
    const Unitary2 u = apply_error(seq, e);
    const double d = distance_up_to_phase(u, target);
    const double inf = 0.25 * d * d;
    rows.push_back({e, inf < kInfidelityFloor ? 0.0 : inf, d});
  }
  return rows;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0 && hi > lo) || n < 2)
    throw DomainError("log_spaced: need 0 < lo < hi and at least 2 points");
  std::vector<double> out(n);
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) /
                                    static_cast<double>(n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

double fit_order(std::span<const SweepRow> rows) {
  std::vector<double> xs, ys;
  for (const SweepRow &r : rows) {
    if (r.epsilon > 0.0 && r.infidelity > kFitFloor) {
      xs.push_back(std::log(r.epsilon));
      ys.push_back(std::log(r.infidelity));
    }
  }
  if (xs.size() < kMinFitRows) {
    std::ostringstream msg;
    msg << "fit_order: only " << xs.size() << " rows above the infidelity "
        << "floor (need " << kMinFitRows << "); widen the epsilon range "
        << "towards larger values";
    throw DomainError(msg.str());
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0)
    throw DomainError("fit_order: all usable rows share one epsilon");
  return sxy / sxx;
}

Unitary2 reference_target(const PulseSequence &seq) {
  return seq.target ? rotation(*seq.target) : compose(seq);
}

std::string to_string(Classification c) {
  switch (c) {
  case Classification::naive:
    return "naive";
  case Classification::gqg_fully_compensating:
    return "gqg_fully_compensating";
  case Classification::gqg_not_fully_compensating:
    return "gqg_not_fully_compensating";
  case Classification::non_gqg:
    return "non_gqg";
  }
  return "unknown";
}

RobustnessReport first_order_report(const PulseSequence &seq,
                                    std::optional<BlochVector> n0) {
  if (seq.empty())
    throw DomainError("first-order report needs a non-empty sequence");

  RobustnessReport r;
  r.generator = error_generator(seq);
  if (n0) {
    require_unit(*n0, "n0");
    r.n0 = n0->normalized();
  } else {
    r.n0 = cyclic_states(compose(seq)).n0;
  }
  r.dyn_sum = dynamic_phase_sum(seq, r.n0).sum;
  r.trace_part = r.generator.trace_part();
  r.traceless_norm = r.generator.traceless_norm();

  const Spinor up = spinor_of(r.n0);
  const Spinor down = spinor_of(-r.n0);
  r.diag_part = (up.adjoint() * r.generator.matrix * up)(0).real() -
                r.trace_part;
  r.offdiag_part = std::abs((down.adjoint() * r.generator.matrix * up)(0));

  try {
    const auto grid = log_spaced(kFitEpsMin, kFitEpsMax, kFitPoints);
    const auto rows = sweep(seq, reference_target(seq), grid);
    r.fitted_order = fit_order(rows);
  } catch (const DomainError &) {
    r.fitted_order.reset();
  }

  r.is_fully_compensating = r.traceless_norm < kCompensationTolerance;
  const bool zero_dyn = std::abs(r.dyn_sum) < kCompensationTolerance;
  if (zero_dyn)
    r.classification = r.is_fully_compensating
                           ? Classification::gqg_fully_compensating
                           : Classification::gqg_not_fully_compensating;
  else
    r.classification = axes_collinear(seq) ? Classification::naive
                                           : Classification::non_gqg;
  return r;
}

TheoremVerdict verify_theorem(const PulseSequence &seq, const Unitary2 &target,
                              std::optional<BlochVector> n0) {
  TheoremVerdict v;
  v.report = first_order_report(seq, n0);
  v.target_distance = distance_up_to_phase(compose(seq), target);
  v.zero_dynamic_phase = std::abs(v.report.dyn_sum) < kCompensationTolerance;
  v.implication_holds = !v.report.is_fully_compensating || v.zero_dynamic_phase;
  v.converse_violated = v.zero_dynamic_phase && !v.report.is_fully_compensating;

  if (!v.implication_holds)
    v.summary = "VIOLATED: fully compensating but dynamic-phase sum is nonzero";
  else if (v.report.is_fully_compensating)
    v.summary = "consistent: fully compensating with zero dynamic-phase sum";
  else if (v.converse_violated)
    v.summary = "consistent (converse violated at operator level): zero "
                "dynamic-phase sum but first-order error remains";
  else
    v.summary = "consistent (vacuous): not fully compensating, nonzero "
                "dynamic-phase sum";
  return v;
}

Unitary2 exp_minus_i(const Matrix2 &hermitian, double t) {
  const double a0 = 0.5 * hermitian.trace().real();
  const BlochVector h{0.5 * (hermitian * pauli_x()).trace().real(),
                      0.5 * (hermitian * pauli_y()).trace().real(),
                      0.5 * (hermitian * pauli_z()).trace().real()};
  const double mag = h.norm();
  const double c = std::cos(t * mag);
  const double s_over = mag > 0.0 ? std::sin(t * mag) / mag : t;
  const Unitary2 su =
      c * Unitary2::Identity() - Complex(0.0, s_over) * pauli_dot(h);
  return std::polar(1.0, -t * a0) * su;
}

double trotter_defect(std::span<const Matrix2> generators, double eps) {
  Unitary2 product = Unitary2::Identity();
  Matrix2 total = Matrix2::Zero();
  for (const Matrix2 &a : generators) {
    product = product * exp_minus_i(a, eps);
    total += a;
  }
  return operator_norm(product - exp_minus_i(total, eps));
}

} // namespace gqg
