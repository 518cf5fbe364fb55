#ifndef GQG_ROBUSTNESS_HPP
#define GQG_ROBUSTNESS_HPP

// Systematic amplitude-error model theta -> theta (1 + eps), applied to every
// segment of a sequence, and the tools built on it: eps sweeps, log-log
// scaling fits, the first-order report and the dynamic-phase theorem check.
//
// Gates are compared up to global phase throughout.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gqg/phase.hpp"
#include "gqg/su2.hpp"

namespace gqg {

/// Sweeps and fits refuse |eps| at or above this value.
inline constexpr double kSeriesRegimeLimit = 0.5;
/// Absolute tolerance on traceless_norm(H') and on the dynamic-phase sum.
inline constexpr double kCompensationTolerance = 1e-9;
/// Infidelities below this are reported as exactly zero.
inline constexpr double kInfidelityFloor = 1e-14;
/// fit_order ignores rows at or below this infidelity.
inline constexpr double kFitFloor = 1e-13;

/// compose() with every segment angle scaled by (1 + eps).
Unitary2 apply_error(const PulseSequence &seq, double eps);

/// 1 - trace_fidelity(target, apply_error(seq, eps)), clamped to 0 below
/// kInfidelityFloor.
double infidelity(const PulseSequence &seq, const Unitary2 &target,
                  double eps);

struct SweepRow {
  double epsilon;
  double infidelity;
  double operator_error; // distance_up_to_phase(apply_error, target)
};

/// One row per grid point; rows are computed independently of each other.
/// The grid must be non-empty, non-negative, strictly increasing and below
/// kSeriesRegimeLimit.
std::vector<SweepRow> sweep(const PulseSequence &seq, const Unitary2 &target,
                            std::span<const double> eps_grid);

/// n points log-spaced between lo and hi inclusive.
std::vector<double> log_spaced(double lo, double hi, std::size_t n);

/// Least-squares slope of log(infidelity) against log(eps) over the rows
/// whose infidelity exceeds kFitFloor.  Needs at least 5 such rows.
double fit_order(std::span<const SweepRow> rows);

/// The target a sequence is judged against: its declared target rotation if
/// any, otherwise the ideal composite itself.
Unitary2 reference_target(const PulseSequence &seq);

enum class Classification {
  naive,
  gqg_fully_compensating,
  gqg_not_fully_compensating,
  non_gqg,
};

std::string to_string(Classification c);

struct RobustnessReport {
  HermitianGenerator generator;
  BlochVector n0;
  double dyn_sum;
  double trace_part;
  double diag_part;    // <n0|H'|n0> - trace_part
  double offdiag_part; // |<-n0|H'|n0>|
  double traceless_norm;
  /// Slope over eps in [1e-2, 1e-1]; empty if the sequence is too robust for
  /// the infidelity to clear the floor.
  std::optional<double> fitted_order;
  bool is_fully_compensating;
  Classification classification;
};

/// n0 defaults to the cyclic state of compose(seq); a gate proportional to
/// the identity needs it supplied (DegenerateError otherwise).
RobustnessReport first_order_report(const PulseSequence &seq,
                                    std::optional<BlochVector> n0 = {});

struct TheoremVerdict {
  RobustnessReport report;
  double target_distance;       // distance_up_to_phase(compose, target)
  bool zero_dynamic_phase;      // |dyn_sum| < tolerance
  bool implication_holds;       // fully compensating => zero dynamic phase
  bool converse_violated;       // zero dynamic phase but not compensating
  std::string summary;
};

/// Checks "fully compensating implies vanishing dynamic-phase sum" for one
/// sequence.  A zero dynamic phase without first-order compensation is
/// reported as data, not as a failure.
TheoremVerdict verify_theorem(const PulseSequence &seq, const Unitary2 &target,
                              std::optional<BlochVector> n0 = {});

/// exp(-i t H) for a Hermitian H.
Unitary2 exp_minus_i(const Matrix2 &hermitian, double t);

/// || prod_i exp(-i A_i eps) - exp(-i (sum_i A_i) eps) ||_2, the product
/// taken left to right in list order.
double trotter_defect(std::span<const Matrix2> generators, double eps);

} // namespace gqg

#endif // GQG_ROBUSTNESS_HPP
