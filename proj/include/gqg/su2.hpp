#ifndef GQG_SU2_HPP
#define GQG_SU2_HPP

// Single-qubit SU(2)/U(2) algebra: rotations, pulse sequences and their
// composition, axis-angle extraction, Bloch-vector action and phase-blind
// distances between gates.
//
// Conventions
//   rotation(m, theta) = exp(-i theta (m . sigma) / 2)
//   Bloch rotations are right-handed: rotating x about z by +pi/2 gives y.
//   A PulseSequence is stored in TEMPORAL order: segments[0] acts first, so
//   compose() returns R_N ... R_2 R_1 (new factors accumulate on the left).
//   This is the reverse of reading an operator product left to right.

#include <complex>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gqg {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Unitary2 = Eigen::Matrix2cd;
using Spinor = Eigen::Vector2cd;
using BlochVector = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;

/// Thrown when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Thrown when a gate is proportional to the identity, so that its rotation
/// axis (and its cyclic states) are not determined by the gate alone.
class DegenerateError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Tolerance used to accept user-supplied axes as unit vectors.
inline constexpr double kUnitTolerance = 1e-9;
/// Below this |sin(angle/2)| the rotation axis is considered undefined.
inline constexpr double kDegenerateSin = 1e-8;

struct Rotation {
  BlochVector axis;
  double angle; // radians
};

/// One rectangular pulse: rotation by `angle` about `axis`, lasting
/// `duration`.  Only the product angle * axis ever enters a result.
struct Segment {
  BlochVector axis;
  double angle;
  double duration;

  Segment(const BlochVector &axis, double angle, double duration = 1.0);
};

struct PulseSequence {
  std::vector<Segment> segments; // temporal order
  std::optional<Rotation> target;
  std::string label;

  [[nodiscard]] bool empty() const { return segments.empty(); }
  [[nodiscard]] std::size_t size() const { return segments.size(); }
};

const Matrix2 &pauli_x();
const Matrix2 &pauli_y();
const Matrix2 &pauli_z();

/// m . sigma
Matrix2 pauli_dot(const BlochVector &m);

BlochVector unit_x();
BlochVector unit_y();
BlochVector unit_z();
/// (cos phase, sin phase, 0)
BlochVector xy_axis(double phase);

bool is_unit(const BlochVector &v, double tol = kUnitTolerance);
/// Throws DomainError unless `v` is a unit vector.
void require_unit(const BlochVector &v, const char *what);

constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// Reduces an angle to (-pi, pi].
double wrap_phase(double phase);
/// Signed distance between two phases, reduced to (-pi, pi].
double phase_difference(double a, double b);

Unitary2 rotation(const BlochVector &axis, double angle);
Unitary2 rotation(const Rotation &r);
Unitary2 rotation(const Segment &s);

/// Product of the segments in temporal order.  An empty sequence yields the
/// identity and, if `empty_warning` is given, sets it to true.
Unitary2 compose(std::span<const Segment> segments,
                 bool *empty_warning = nullptr);
Unitary2 compose(const PulseSequence &seq, bool *empty_warning = nullptr);

struct AxisAngle {
  BlochVector axis;
  double angle;        // in (0, 2 pi)
  double global_phase; // in (-pi/2, pi/2]
};

/// Factorizes U = exp(i global_phase) rotation(axis, angle).
/// Throws DegenerateError when U is proportional to the identity.
AxisAngle axis_angle_of(const Unitary2 &u);

/// Rodrigues rotation of `n`; the adjoint action of rotation(axis, angle).
BlochVector rotate_bloch(const BlochVector &axis, double angle,
                         const BlochVector &n);

/// min over alpha of || U - e^{i alpha} V ||_F  (= sqrt(4 - 2|Tr U^dag V|)).
double distance_up_to_phase(const Unitary2 &u, const Unitary2 &v);

/// |Tr(U^dag V)| / 2
double trace_fidelity(const Unitary2 &u, const Unitary2 &v);

/// Spinor whose Bloch vector is `n` (fixed but arbitrary phase).
Spinor spinor_of(const BlochVector &n);
BlochVector bloch_of(const Spinor &psi);

/// Largest singular value.
double operator_norm(const Matrix2 &m);

} // namespace gqg

#endif // GQG_SU2_HPP
