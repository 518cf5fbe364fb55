#include "gqg/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gqg {

namespace {

constexpr double kValidationTolerance = 1e-10;

double branch_sign(SynthesisBranch b) {
  return b == SynthesisBranch::principal ? 1.0 : -1.0;
}

// Compatibility of the zero-dynamic-phase condition with the two
// <x|U|x> = e^{-i theta/2} relations; increasing on [pi/2, pi].
double scrofulous_condition(double theta, double theta1) {
  return std::cos(theta / 2.0) - kPi * std::sin(theta1) / (2.0 * theta1);
}

double bisect(double theta, double lo, double hi) {
  double flo = scrofulous_condition(theta, lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    const double fmid = scrofulous_condition(theta, mid);
    if (fmid == 0.0)
      return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<double> solve_theta1(double theta) {
  // Scan [pi/2, 2pi]; the first bracket is the principal solution.
  constexpr int kCells = 64;
  constexpr double kZero = 1e-14;
  const double lo = kPi / 2.0;
  const double hi = 2.0 * kPi;
  double a = lo;
  double fa = scrofulous_condition(theta, a);
  if (std::abs(fa) < kZero)
    return a;
  for (int i = 1; i <= kCells; ++i) {
    // Land exactly on pi, where the theta = pi root sits.
    const double b = (i == kCells / 3) ? kPi : lo + (hi - lo) * i / kCells;
    if (b <= a)
      continue;
    const double fb = scrofulous_condition(theta, b);
    if (std::abs(fb) < kZero)
      return b;
    if ((fa < 0.0) != (fb < 0.0))
      return bisect(theta, a, b);
    a = b;
    fa = fb;
  }
  return std::nullopt;
}

std::array<double, 3> scrofulous_residuals(double theta, double theta1,
                                           double phi1, double phi2) {
  const double delta = phi1 - phi2;
  return {std::cos(theta1) - std::tan(delta) / std::tan(phi1),
          std::sin(theta / 2.0) - std::sin(delta) / std::sin(phi1),
          2.0 * theta1 * std::cos(delta) + kPi};
}

void require_finite(double v, const char *what) {
  if (!std::isfinite(v))
    throw DomainError(std::string(what) + " must be finite");
}

} // namespace

ScrofulousPulse scrofulous(double theta, SynthesisBranch branch,
                           double phase_shift) {
  require_finite(phase_shift, "phase shift");
  if (!(theta > 0.0 && theta <= kPi))
    throw DomainError("scrofulous: theta must lie in (0, pi]");

  const auto root = solve_theta1(theta);
  if (!root) {
    std::ostringstream msg;
    msg << "scrofulous: no bracketing root for theta = " << theta
        << " (condition at pi/2: " << scrofulous_condition(theta, kPi / 2.0)
        << ", at 2pi: " << scrofulous_condition(theta, 2.0 * kPi) << ")";
    throw SynthesisError(msg.str());
  }
  const double theta1 = *root;
  const double delta = std::acos(std::clamp(-kPi / (2.0 * theta1), -1.0, 1.0));
  const double cos_phi1 = std::clamp(
      std::cos(delta) * std::cos(theta1) / std::sin(theta / 2.0), -1.0, 1.0);
  const double sign = branch_sign(branch);
  const double phi1 = sign * std::acos(cos_phi1);
  const double phi2 = phi1 - sign * delta;

  ScrofulousPulse out;
  out.params = {theta, theta1, phi1, phi2, phase_shift,
                scrofulous_residuals(theta, theta1, phi1, phi2)};

  const BlochVector m1 = xy_axis(phi1 + phase_shift);
  const BlochVector m2 = xy_axis(phi2 + phase_shift);
  out.sequence.segments = {Segment(m1, theta1), Segment(m2, kPi),
                           Segment(m1, theta1)};
  out.sequence.target = Rotation{xy_axis(phase_shift), theta};
  out.sequence.label = "scrofulous";

  const double miss = distance_up_to_phase(compose(out.sequence),
                                           rotation(*out.sequence.target));
  const double worst = std::max({std::abs(out.params.residuals[0]),
                                 std::abs(out.params.residuals[1]),
                                 std::abs(out.params.residuals[2])});
  if (!(miss < kValidationTolerance)) {
    std::ostringstream msg;
    msg << "scrofulous: composite misses the target by " << miss
        << " (theta1 = " << theta1 << ", phi1 = " << phi1
        << ", phi2 = " << phi2 << ", max residual " << worst << ")";
    throw SynthesisError(msg.str());
  }
  return out;
}

PulseSequence w1(double theta, SynthesisBranch branch, double phase_shift) {
  require_finite(phase_shift, "phase shift");
  if (!(theta >= 0.0 && theta <= 4.0 * kPi))
    throw DomainError("w1: theta must lie in [0, 4 pi]");
  const double phi1 = branch_sign(branch) * std::acos(-theta / (4.0 * kPi));
  const double phi2 = 3.0 * phi1;
  const BlochVector m1 = xy_axis(phi1 + phase_shift);
  const BlochVector m2 = xy_axis(phi2 + phase_shift);

  PulseSequence seq;
  seq.segments = {Segment(m1, kPi), Segment(m2, 2.0 * kPi), Segment(m1, kPi)};
  // Identity gate; the axis records the state the sequence is built around.
  seq.target = Rotation{xy_axis(phase_shift), 0.0};
  seq.label = "w1";
  return seq;
}

PulseSequence w1_sandwich(double theta, SynthesisBranch branch,
                          double phase_shift) {
  if (!(theta > 0.0 && theta < 4.0 * kPi))
    throw DomainError("w1-sandwich: theta must lie in (0, 4 pi)");
  const PulseSequence core = w1(theta, branch, phase_shift);
  const BlochVector axis = xy_axis(phase_shift);

  PulseSequence seq;
  seq.segments.reserve(core.size() + 2);
  seq.segments.emplace_back(axis, theta / 2.0);
  seq.segments.insert(seq.segments.end(), core.segments.begin(),
                      core.segments.end());
  seq.segments.emplace_back(axis, theta / 2.0);
  seq.target = Rotation{axis, theta};
  seq.label = "w1-sandwich";
  return seq;
}

PulseSequence trotter_suzuki(double theta, double phase_shift) {
  require_finite(phase_shift, "phase shift");
  if (!(theta > 0.0 && theta <= 4.0 * kPi))
    throw DomainError("trotter-suzuki: theta must lie in (0, 4 pi]");
  const double phi = std::acos(theta / (4.0 * kPi));
  const BlochVector axis = xy_axis(phase_shift);

  PulseSequence seq;
  seq.segments = {Segment(axis, theta),
                  Segment(xy_axis(phase_shift - phi), -2.0 * kPi),
                  Segment(xy_axis(phase_shift + phi), -2.0 * kPi)};
  seq.target = Rotation{axis, theta};
  seq.label = "trotter-suzuki";
  return seq;
}

std::array<Matrix2, 2> trotter_generators(double theta, double phase_shift) {
  const PulseSequence seq = trotter_suzuki(theta, phase_shift);
  const Segment &minus = seq.segments[1];
  const Segment &plus = seq.segments[2];
  return {0.5 * plus.angle * pauli_dot(plus.axis),
          0.5 * minus.angle * pauli_dot(minus.axis)};
}

PulseSequence naive(const BlochVector &axis, double theta) {
  PulseSequence seq;
  seq.segments = {Segment(axis, theta)};
  seq.target = Rotation{axis, theta};
  seq.label = "naive";
  return seq;
}

PulseSequence ohta() {
  PulseSequence seq;
  seq.segments = {Segment(unit_x(), kPi / 2.0), Segment(unit_y(), kPi),
                  Segment(unit_x(), kPi / 2.0)};
  seq.target = Rotation{unit_y(), kPi};
  seq.label = "ohta";
  return seq;
}

} // namespace gqg
