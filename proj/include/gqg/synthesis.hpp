#ifndef GQG_SYNTHESIS_HPP
#define GQG_SYNTHESIS_HPP

// Constructors for composite pulse families that realize an xy-plane
// rotation robustly against amplitude errors, plus two reference fixtures.
//
// Every family targets rotation(xy_axis(phase_shift), theta).  With the
// default phase_shift = 0 the target axis is x; a non-zero shift rotates
// all pulse phases by the same amount.

#include <array>
#include <stdexcept>

#include "gqg/su2.hpp"

namespace gqg {

/// Raised when the nonlinear solve cannot produce a valid sequence.
class SynthesisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Selects between the two sign branches of a family's phase solution.
/// `mirrored` negates every pulse phase of the `principal` solution.
enum class SynthesisBranch { principal, mirrored };

struct ScrofulousParams {
  double theta;  // target angle
  double theta1; // angle of the outer pulses
  double phi1;   // phase of the outer pulses (before phase_shift)
  double phi2;   // phase of the central pi pulse (before phase_shift)
  double phase_shift;
  /// Defining relations evaluated at the solution:
  ///   cos(theta1) - tan(phi1 - phi2) / tan(phi1)
  ///   sin(theta/2) - sin(phi1 - phi2) / sin(phi1)
  ///   2 theta1 cos(phi1 - phi2) + pi
  std::array<double, 3> residuals;
};

struct ScrofulousPulse {
  PulseSequence sequence;
  ScrofulousParams params;
};

/// Three-pulse sequence theta1(phi1) pi(phi2) theta1(phi1) equal to
/// rotation(x, theta) and accumulating no net dynamic phase on x.
///
/// theta1 solves cos(theta/2) = pi sin(theta1) / (2 theta1) on [pi/2, pi],
/// which is what remains of the three defining relations once the phase
/// difference phi1 - phi2 = arccos(-pi / (2 theta1)) (zero dynamic phase)
/// and phi1 are eliminated.  The principal branch is the one that reaches
/// (pi, pi/3, -pi/3) at theta = pi.
///
/// Requires theta in (0, pi]; throws DomainError otherwise and
/// SynthesisError if the root cannot be bracketed or the resulting
/// composite misses the target by more than 1e-10.
ScrofulousPulse scrofulous(double theta,
                           SynthesisBranch branch = SynthesisBranch::principal,
                           double phase_shift = 0.0);

/// pi(phi1) 2pi(3 phi1) pi(phi1) with phi1 = +-arccos(-theta / 4pi).
/// Composes to the identity; its dynamic phase on x is theta/2.
/// theta in [0, 4pi].
PulseSequence w1(double theta,
                 SynthesisBranch branch = SynthesisBranch::principal,
                 double phase_shift = 0.0);

/// theta/2 pulse, W1(theta), theta/2 pulse: composes to rotation(x, theta)
/// with zero net dynamic phase.  theta in (0, 4pi).
PulseSequence w1_sandwich(double theta,
                          SynthesisBranch branch = SynthesisBranch::principal,
                          double phase_shift = 0.0);

/// theta(0), then -2pi pulses about m- and m+, m+- = (cos phi, +-sin phi, 0),
/// phi = arccos(theta / 4pi).  theta in (0, 4pi].
PulseSequence trotter_suzuki(double theta, double phase_shift = 0.0);

/// Generators A+ and A- (in that order) of the two correction pulses,
/// A+- = -2pi (m+- . sigma) / 2.  They satisfy theta sigma_x / 2 + A+ + A- = 0.
std::array<Matrix2, 2> trotter_generators(double theta,
                                          double phase_shift = 0.0);

/// Single uncompensated pulse.
PulseSequence naive(const BlochVector &axis, double theta);

/// x(pi/2) y(pi) x(pi/2) = rotation(y, pi); no dynamic phase at any point
/// for its cyclic states, yet not first-order robust.
PulseSequence ohta();

} // namespace gqg

#endif // GQG_SYNTHESIS_HPP
