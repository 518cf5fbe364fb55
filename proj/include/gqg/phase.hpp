#ifndef GQG_PHASE_HPP
#define GQG_PHASE_HPP

// Phase analysis of pulse sequences: cyclic states of the composite gate,
// dynamic phases accumulated segment by segment, the geometric
// (Aharonov-Anandan) remainder, the first-order amplitude-error generator,
// and a solid-angle route to the geometric phase that works only from the
// sampled Bloch-sphere path.
//
// All phases are reported for the "+" cyclic state |n0> and live in
// (-pi, pi] unless stated otherwise.  Segment durations never enter: a
// constant segment contributes -(theta/2) m.n whatever its length.

#include <optional>
#include <vector>

#include "gqg/su2.hpp"

namespace gqg {

struct CyclicStates {
  BlochVector n0;     // Bloch vector of the "+" eigenstate
  double gamma_plus;  // U|n0>  = e^{i gamma_plus}  |n0>
  double gamma_minus; // U|-n0> = e^{i gamma_minus} |-n0>
  Spinor plus_state;
  Spinor minus_state;
};

struct CyclicAmplitudes {
  Complex plus;
  Complex minus;
};

struct DynamicPhases {
  std::vector<double> per_segment;
  double sum = 0.0;
};

struct PhaseDecomposition {
  BlochVector n0;
  double gamma_total;              // wrapped
  double gamma_dynamic;            // raw sum of the per-segment phases
  std::vector<double> per_segment; // gamma_{d,j}
  double gamma_geometric;          // gamma_total - gamma_dynamic, wrapped
};

/// First-order generator H' of the amplitude error:
/// U(eps) = U(0) (I - i eps H') + O(eps^2).
struct HermitianGenerator {
  Matrix2 matrix;

  /// Tr(H') / 2
  [[nodiscard]] double trace_part() const;
  /// Operator norm of H' - trace_part I.
  [[nodiscard]] double traceless_norm() const;
  /// h with H' - trace_part I = h . sigma
  [[nodiscard]] BlochVector pauli_components() const;
  /// <n|H'|n> for the spin-up state along n (real).
  [[nodiscard]] double expectation(const BlochVector &n) const;
};

struct BlochTrajectory {
  std::vector<BlochVector> samples;
  std::vector<std::size_t> segment_starts; // index of each segment's first sample
  double max_step = 0.0;

  [[nodiscard]] bool closed(double tol) const;
};

inline constexpr double kDefaultTrajectoryStep = 1e-3;

/// Eigen-decomposition of a non-degenerate gate.  n0 is the rotation axis
/// reported by axis_angle_of, so gamma_plus = global_phase - angle/2.
/// Throws DegenerateError when every state is cyclic (U proportional to I).
CyclicStates cyclic_states(const Unitary2 &u);

CyclicAmplitudes project_cyclic(const Spinor &state, const CyclicStates &cs);

/// e^{i g+}|n0><n0| + e^{i g-}|-n0><-n0|
Unitary2 reconstruct_gate(const CyclicStates &cs);

/// -(theta/2) m.n
double segment_dynamic_phase(const Segment &seg, const BlochVector &n);

/// Propagates n0 through the sequence and records each segment's dynamic
/// phase, evaluated at the Bloch vector the segment starts from.
DynamicPhases dynamic_phase_sum(const PulseSequence &seq,
                                const BlochVector &n0);
/// Same, starting from the cyclic state of compose(seq).
DynamicPhases dynamic_phase_sum(const PulseSequence &seq);

PhaseDecomposition phase_decomposition(const PulseSequence &seq);
/// Decomposition for a caller-supplied cyclic state; required for gates
/// proportional to the identity.  Throws DomainError if n0 is not cyclic.
PhaseDecomposition phase_decomposition(const PulseSequence &seq,
                                       const BlochVector &n0);

HermitianGenerator error_generator(const PulseSequence &seq);

BlochTrajectory bloch_trajectory(const PulseSequence &seq,
                                 const BlochVector &n0,
                                 double max_step = kDefaultTrajectoryStep);

/// Signed solid angle swept by a closed path, counter-clockwise positive
/// when viewed from outside the sphere; defined modulo 4 pi.
double enclosed_solid_angle(const BlochTrajectory &traj);

/// -Omega/2 reduced to (-pi, pi].  Throws DomainError for open paths.
double solid_angle_geometric_phase(const BlochTrajectory &traj);

} // namespace gqg

#endif // GQG_PHASE_HPP
