#include "gqg/phase.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace gqg {

namespace {

Spinor orthogonal_spinor(const Spinor &psi) {
  Spinor out;
  out << -std::conj(psi(1)), std::conj(psi(0));
  return out;
}

// Reference poles for the spherical-excess sum; the one farthest from the
// antipodes of the path is used.
std::vector<BlochVector> candidate_poles() {
  std::vector<BlochVector> poles;
  for (int x = -1; x <= 1; ++x)
    for (int y = -1; y <= 1; ++y)
      for (int z = -1; z <= 1; ++z)
        if (x != 0 || y != 0 || z != 0)
          poles.push_back(BlochVector(x, y, z).normalized());
  return poles;
}

// Signed area of the spherical triangle (p, a, b).
double triangle_excess(const BlochVector &p, const BlochVector &a,
                       const BlochVector &b) {
  const double num = p.dot(a.cross(b));
  const double den = 1.0 + p.dot(a) + a.dot(b) + b.dot(p);
  return 2.0 * std::atan2(num, den);
}

} // namespace

double HermitianGenerator::trace_part() const {
  return 0.5 * matrix.trace().real();
}

double HermitianGenerator::traceless_norm() const {
  return pauli_components().norm();
}

BlochVector HermitianGenerator::pauli_components() const {
  return {0.5 * (matrix * pauli_x()).trace().real(),
          0.5 * (matrix * pauli_y()).trace().real(),
          0.5 * (matrix * pauli_z()).trace().real()};
}

double HermitianGenerator::expectation(const BlochVector &n) const {
  const Spinor psi = spinor_of(n);
  return (psi.adjoint() * matrix * psi)(0).real();
}

bool BlochTrajectory::closed(double tol) const {
  return !samples.empty() && (samples.front() - samples.back()).norm() <= tol;
}

CyclicStates cyclic_states(const Unitary2 &u) {
  AxisAngle aa;
  try {
    aa = axis_angle_of(u);
  } catch (const DegenerateError &) {
    throw DegenerateError("gate is proportional to the identity: every state "
                          "is cyclic, supply n0 explicitly");
  }
  CyclicStates cs;
  cs.n0 = aa.axis;
  cs.gamma_plus = wrap_phase(aa.global_phase - aa.angle / 2.0);
  cs.gamma_minus = wrap_phase(aa.global_phase + aa.angle / 2.0);
  cs.plus_state = spinor_of(aa.axis);
  cs.minus_state = orthogonal_spinor(cs.plus_state);
  return cs;
}

CyclicAmplitudes project_cyclic(const Spinor &state, const CyclicStates &cs) {
  return {cs.plus_state.dot(state), cs.minus_state.dot(state)};
}

Unitary2 reconstruct_gate(const CyclicStates &cs) {
  return std::polar(1.0, cs.gamma_plus) * cs.plus_state *
             cs.plus_state.adjoint() +
         std::polar(1.0, cs.gamma_minus) * cs.minus_state *
             cs.minus_state.adjoint();
}

double segment_dynamic_phase(const Segment &seg, const BlochVector &n) {
  return -0.5 * seg.angle * seg.axis.dot(n);
}

DynamicPhases dynamic_phase_sum(const PulseSequence &seq,
                                const BlochVector &n0) {
  require_unit(n0, "n0");
  DynamicPhases out;
  out.per_segment.reserve(seq.size());
  BlochVector n = n0;
  for (const Segment &seg : seq.segments) {
    const double g = segment_dynamic_phase(seg, n);
    out.per_segment.push_back(g);
    out.sum += g;
    n = rotate_bloch(seg.axis, seg.angle, n);
  }
  return out;
}

DynamicPhases dynamic_phase_sum(const PulseSequence &seq) {
  return dynamic_phase_sum(seq, cyclic_states(compose(seq)).n0);
}

PhaseDecomposition phase_decomposition(const PulseSequence &seq) {
  if (seq.empty())
    throw DomainError("phase decomposition needs a non-empty sequence");
  const CyclicStates cs = cyclic_states(compose(seq));
  DynamicPhases dyn = dynamic_phase_sum(seq, cs.n0);
  PhaseDecomposition out;
  out.n0 = cs.n0;
  out.gamma_total = cs.gamma_plus;
  out.gamma_dynamic = dyn.sum;
  out.per_segment = std::move(dyn.per_segment);
  out.gamma_geometric = wrap_phase(out.gamma_total - out.gamma_dynamic);
  return out;
}

PhaseDecomposition phase_decomposition(const PulseSequence &seq,
                                       const BlochVector &n0) {
  if (seq.empty())
    throw DomainError("phase decomposition needs a non-empty sequence");
  require_unit(n0, "n0");
  const Spinor psi = spinor_of(n0);
  const Complex overlap = (psi.adjoint() * compose(seq) * psi)(0);
  if (std::abs(overlap) < 1.0 - 1e-8)
    throw DomainError("n0 is not a cyclic state of the composite gate");
  DynamicPhases dyn = dynamic_phase_sum(seq, n0);
  PhaseDecomposition out;
  out.n0 = n0.normalized();
  out.gamma_total = std::arg(overlap);
  out.gamma_dynamic = dyn.sum;
  out.per_segment = std::move(dyn.per_segment);
  out.gamma_geometric = wrap_phase(out.gamma_total - out.gamma_dynamic);
  return out;
}

HermitianGenerator error_generator(const PulseSequence &seq) {
  Matrix2 h = Matrix2::Zero();
  Unitary2 v = Unitary2::Identity(); // V_{j-1}
  for (const Segment &seg : seq.segments) {
    h += v.adjoint() * (0.5 * seg.angle * pauli_dot(seg.axis)) * v;
    v = rotation(seg) * v;
  }
  // Hermitian by construction; symmetrize rounding.
  return {0.5 * (h + h.adjoint())};
}

BlochTrajectory bloch_trajectory(const PulseSequence &seq,
                                 const BlochVector &n0, double max_step) {
  require_unit(n0, "n0");
  if (!(max_step > 0.0 && max_step <= 0.1))
    throw DomainError("max_step must lie in (0, 0.1]");
  BlochTrajectory traj;
  traj.max_step = max_step;
  traj.samples.push_back(n0);
  for (const Segment &seg : seq.segments) {
    const BlochVector start = traj.samples.back();
    traj.segment_starts.push_back(traj.samples.size() - 1);
    const auto steps = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(std::abs(seg.angle) / max_step)));
    for (std::size_t i = 1; i <= steps; ++i) {
      const double a = seg.angle * static_cast<double>(i) /
                       static_cast<double>(steps);
      traj.samples.push_back(rotate_bloch(seg.axis, a, start));
    }
  }
  return traj;
}

double enclosed_solid_angle(const BlochTrajectory &traj) {
  const auto &pts = traj.samples;
  if (pts.size() < 2)
    return 0.0;

  BlochVector pole = unit_z();
  double best = -std::numeric_limits<double>::infinity();
  for (const BlochVector &p : candidate_poles()) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const BlochVector &s : pts)
      nearest = std::min(nearest, 1.0 + p.dot(s));
    if (nearest > best) {
      best = nearest;
      pole = p;
    }
  }

  double omega = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    omega += triangle_excess(pole, pts[i], pts[i + 1]);
  omega += triangle_excess(pole, pts.back(), pts.front());
  return omega;
}

double solid_angle_geometric_phase(const BlochTrajectory &traj) {
  if (!traj.closed(1e-6))
    throw DomainError("trajectory is not closed; start from a cyclic state");
  return wrap_phase(-0.5 * enclosed_solid_angle(traj));
}

} // namespace gqg
