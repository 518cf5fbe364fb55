#include "gqg/su2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gqg {

Segment::Segment(const BlochVector &axis_, double angle_, double duration_)
    : axis(axis_), angle(angle_), duration(duration_) {
  require_unit(axis, "segment axis");
  if (!std::isfinite(angle))
    throw DomainError("segment angle must be finite");
  if (!(duration > 0.0) || !std::isfinite(duration))
    throw DomainError("segment duration must be positive");
}

const Matrix2 &pauli_x() {
  static const Matrix2 m = (Matrix2() << 0, 1, 1, 0).finished();
  return m;
}

const Matrix2 &pauli_y() {
  static const Matrix2 m =
      (Matrix2() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  return m;
}

const Matrix2 &pauli_z() {
  static const Matrix2 m = (Matrix2() << 1, 0, 0, -1).finished();
  return m;
}

Matrix2 pauli_dot(const BlochVector &m) {
  Matrix2 out;
  out << m.z(), Complex(m.x(), -m.y()), Complex(m.x(), m.y()), -m.z();
  return out;
}

BlochVector unit_x() { return BlochVector::UnitX(); }
BlochVector unit_y() { return BlochVector::UnitY(); }
BlochVector unit_z() { return BlochVector::UnitZ(); }

BlochVector xy_axis(double phase) {
  return {std::cos(phase), std::sin(phase), 0.0};
}

bool is_unit(const BlochVector &v, double tol) {
  return v.allFinite() && std::abs(v.norm() - 1.0) <= tol;
}

void require_unit(const BlochVector &v, const char *what) {
  if (!is_unit(v))
    throw DomainError(std::string(what) + " must be a unit vector (norm " +
                      std::to_string(v.norm()) + ")");
}

double wrap_phase(double phase) {
  double r = std::remainder(phase, 2.0 * kPi);
  if (r <= -kPi)
    r += 2.0 * kPi;
  return r;
}

double phase_difference(double a, double b) { return wrap_phase(a - b); }

Unitary2 rotation(const BlochVector &axis, double angle) {
  require_unit(axis, "rotation axis");
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Unitary2 u;
  // cos(a/2) I - i sin(a/2) (m . sigma)
  u << Complex(c, -s * axis.z()), Complex(-s * axis.y(), -s * axis.x()),
      Complex(s * axis.y(), -s * axis.x()), Complex(c, s * axis.z());
  return u;
}

Unitary2 rotation(const Rotation &r) { return rotation(r.axis, r.angle); }

Unitary2 rotation(const Segment &s) { return rotation(s.axis, s.angle); }

Unitary2 compose(std::span<const Segment> segments, bool *empty_warning) {
  if (empty_warning)
    *empty_warning = segments.empty();
  Unitary2 u = Unitary2::Identity();
  for (const Segment &s : segments)
    u = rotation(s) * u;
  return u;
}

Unitary2 compose(const PulseSequence &seq, bool *empty_warning) {
  return compose(std::span<const Segment>(seq.segments), empty_warning);
}

AxisAngle axis_angle_of(const Unitary2 &u) {
  const Complex det = u.determinant();
  const double phase = std::arg(det) / 2.0;
  const Unitary2 v = u * std::polar(1.0, -phase);

  const double c = 0.5 * v.trace().real();
  // For v = c I - i s (m . sigma):  Tr(v sigma_k) = -2 i s m_k.
  const BlochVector sm{-0.5 * (v * pauli_x()).trace().imag(),
                       -0.5 * (v * pauli_y()).trace().imag(),
                       -0.5 * (v * pauli_z()).trace().imag()};
  const double s = sm.norm();
  if (s < kDegenerateSin)
    throw DegenerateError("degenerate: axis undefined (gate is proportional "
                          "to the identity)");
  return {sm / s, 2.0 * std::atan2(s, c), phase};
}

BlochVector rotate_bloch(const BlochVector &axis, double angle,
                         const BlochVector &n) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return n * c + axis.cross(n) * s + axis * (axis.dot(n) * (1.0 - c));
}

double distance_up_to_phase(const Unitary2 &u, const Unitary2 &v) {
  const Complex overlap = (v.adjoint() * u).trace();
  const double mag = std::abs(overlap);
  if (mag == 0.0)
    return std::sqrt(std::max(0.0, u.squaredNorm() + v.squaredNorm()));
  return (u - v * (overlap / mag)).norm();
}

double trace_fidelity(const Unitary2 &u, const Unitary2 &v) {
  return std::min(1.0, 0.5 * std::abs((u.adjoint() * v).trace()));
}

Spinor spinor_of(const BlochVector &n) {
  require_unit(n, "Bloch vector");
  // +1 eigenvector of n . sigma; pick the column that stays away from zero.
  Spinor psi;
  if (n.z() >= 0.0)
    psi << 1.0 + n.z(), Complex(n.x(), n.y());
  else
    psi << Complex(n.x(), -n.y()), 1.0 - n.z();
  return psi.normalized();
}

BlochVector bloch_of(const Spinor &psi) {
  const Complex a = psi(0);
  const Complex b = psi(1);
  const Complex ab = std::conj(a) * b;
  return {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)};
}

double operator_norm(const Matrix2 &m) {
  const Matrix2 g = m.adjoint() * m;
  const double tr = g.trace().real();
  const double det = g.determinant().real();
  const double disc = std::max(0.0, tr * tr - 4.0 * det);
  return std::sqrt(std::max(0.0, 0.5 * (tr + std::sqrt(disc))));
}

} // namespace gqg
