#include <gtest/gtest.h>

#include "gqg/su2.hpp"
#include "oracles.hpp"

using namespace gqg;

namespace {

const Complex I1(0.0, 1.0);

} // namespace

TEST(Rotation, PiAboutXIsMinusISigmaX) {
  Unitary2 expected;
  expected << 0, -I1, -I1, 0;
  EXPECT_LT(oracle::max_abs(rotation(unit_x(), kPi) - expected), 1e-15);
}

TEST(Rotation, ZeroAndTwoPi) {
  EXPECT_LT(oracle::max_abs(rotation(unit_z(), 0.0) - Unitary2::Identity()),
            1e-15);
  EXPECT_LT(oracle::max_abs(rotation(unit_z(), 2 * kPi) + Unitary2::Identity()),
            1e-15);
}

TEST(Rotation, MatchesMatrixExponential) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const BlochVector m = oracle::random_axis(rng);
    const double a = angle(rng);
    const Unitary2 u = rotation(m, a);
    EXPECT_LT(oracle::max_abs(u - oracle::expm_rotation(m, a)), 1e-12);
    EXPECT_LT(std::abs(u.determinant() - 1.0), 1e-12);
    EXPECT_LT((u.adjoint() * u - Unitary2::Identity()).norm(), 1e-12);
  }
}

TEST(Rotation, SameAxisAngleAdditivity) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);
  for (int i = 0; i < 200; ++i) {
    const BlochVector m = oracle::random_axis(rng);
    const double a = angle(rng), b = angle(rng);
    EXPECT_LT((rotation(m, a) * rotation(m, b) - rotation(m, a + b)).norm(),
              1e-12);
  }
}

TEST(Rotation, RejectsNonUnitAxis) {
  EXPECT_THROW(rotation(BlochVector(1, 1, 0), 1.0), DomainError);
  EXPECT_THROW(Segment(BlochVector(0, 0, 0), 1.0), DomainError);
  EXPECT_THROW(Segment(unit_x(), 1.0, 0.0), DomainError);
}

TEST(Compose, OhtaProductByHand) {
  // R(x,pi/2) R(y,pi) R(x,pi/2) multiplied out entry by entry.
  const double c = std::sqrt(0.5);
  Unitary2 rx;
  rx << c, -I1 * c, -I1 * c, c;
  Unitary2 ry;
  ry << 0, -1, 1, 0;
  const Unitary2 hand = rx * ry * rx;
  Unitary2 minus_i_sigma_y;
  minus_i_sigma_y << 0, -1, 1, 0;
  EXPECT_LT(oracle::max_abs(hand - minus_i_sigma_y), 1e-15);

  const std::vector<Segment> segs{{unit_x(), kPi / 2}, {unit_y(), kPi},
                                  {unit_x(), kPi / 2}};
  EXPECT_LT(oracle::max_abs(compose(segs) - minus_i_sigma_y), 1e-15);
}

TEST(Compose, TemporalOrderAccumulatesOnTheLeft) {
  const std::vector<Segment> segs{{unit_x(), 0.3}, {unit_z(), 1.1}};
  const Unitary2 expected = rotation(unit_z(), 1.1) * rotation(unit_x(), 0.3);
  EXPECT_LT(oracle::max_abs(compose(segs) - expected), 1e-15);
}

TEST(Compose, SingleAndEmpty) {
  const std::vector<Segment> one{{unit_x(), 0.7}};
  EXPECT_LT(oracle::max_abs(compose(one) - rotation(unit_x(), 0.7)), 1e-15);

  bool warned = false;
  EXPECT_EQ(compose(std::vector<Segment>{}, &warned), Unitary2::Identity());
  EXPECT_TRUE(warned);
  compose(one, &warned);
  EXPECT_FALSE(warned);
}

TEST(Compose, MatchesExpmProductOnRandomSequences) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto segs = oracle::random_segments(rng);
    EXPECT_LT(oracle::max_abs(compose(segs) - oracle::expm_compose(segs)),
              1e-12);
  }
}

TEST(AxisAngle, KnownGates) {
  Unitary2 minus_i_sigma_x;
  minus_i_sigma_x << 0, -I1, -I1, 0;
  const AxisAngle a = axis_angle_of(minus_i_sigma_x);
  EXPECT_LT((a.axis - unit_x()).norm(), 1e-12);
  EXPECT_NEAR(a.angle, kPi, 1e-12);
  EXPECT_NEAR(a.global_phase, 0.0, 1e-12);

  const AxisAngle b =
      axis_angle_of(std::polar(1.0, kPi / 4) * rotation(unit_z(), kPi / 2));
  EXPECT_LT((b.axis - unit_z()).norm(), 1e-12);
  EXPECT_NEAR(b.angle, kPi / 2, 1e-12);
  EXPECT_NEAR(b.global_phase, kPi / 4, 1e-12);
}

TEST(AxisAngle, IdentityIsDegenerate) {
  EXPECT_THROW(axis_angle_of(Unitary2::Identity()), DegenerateError);
  EXPECT_THROW(axis_angle_of(-Unitary2::Identity()), DegenerateError);
  EXPECT_THROW(axis_angle_of(std::polar(1.0, 0.4) * Unitary2::Identity()),
               DegenerateError);
}

TEST(AxisAngle, RecoversRandomRotationsUpToBranch) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(1e-3, 2 * kPi - 1e-3);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  for (int i = 0; i < 500; ++i) {
    const BlochVector m = oracle::random_axis(rng);
    const double a = angle(rng);
    const double g = phase(rng);
    const Unitary2 u = std::polar(1.0, g) * rotation(m, a);
    const AxisAngle r = axis_angle_of(u);
    EXPECT_GT(r.angle, 0.0);
    EXPECT_LT(r.angle, 2 * kPi);
    EXPECT_GT(r.global_phase, -kPi / 2 - 1e-15);
    EXPECT_LE(r.global_phase, kPi / 2 + 1e-15);
    // Either (m, a) or the (-m, 2pi - a) representative.
    const bool same = (r.axis - m).norm() < 1e-9 && std::abs(r.angle - a) < 1e-9;
    const bool flipped =
        (r.axis + m).norm() < 1e-9 && std::abs(r.angle - (2 * kPi - a)) < 1e-9;
    EXPECT_TRUE(same || flipped) << "angle " << a;
    EXPECT_LT(oracle::max_abs(std::polar(1.0, r.global_phase) *
                                  rotation(r.axis, r.angle) -
                              u),
              1e-10);
  }
}

TEST(RotateBloch, SignConvention) {
  EXPECT_LT((rotate_bloch(unit_z(), kPi / 2, unit_x()) - unit_y()).norm(),
            1e-15);
  EXPECT_LT((rotate_bloch(unit_x(), kPi, unit_y()) + unit_y()).norm(), 1e-15);
  EXPECT_LT((rotate_bloch(unit_x(), kPi, unit_z()) + unit_z()).norm(), 1e-15);
}

TEST(RotateBloch, MatchesSpinorConjugation) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);
  for (int i = 0; i < 300; ++i) {
    const BlochVector m = oracle::random_axis(rng);
    const BlochVector n = oracle::random_axis(rng);
    const double a = angle(rng);
    const Spinor psi = oracle::expm_rotation(m, a) * spinor_of(n);
    const BlochVector expected = bloch_of(psi);
    const BlochVector got = rotate_bloch(m, a, n);
    EXPECT_LT((got - expected).norm(), 1e-12);
    EXPECT_NEAR(got.norm(), 1.0, 1e-12);
  }
  // Reflection formula for pi rotations.
  for (int i = 0; i < 50; ++i) {
    const BlochVector m = oracle::random_axis(rng);
    const BlochVector n = oracle::random_axis(rng);
    EXPECT_LT((rotate_bloch(m, kPi, n) - (2 * m.dot(n) * m - n)).norm(), 1e-12);
  }
}

TEST(ComposeBlochAction, SegmentwiseEqualsComposite) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const auto segs = oracle::random_segments(rng);
    AxisAngle aa;
    try {
      aa = axis_angle_of(compose(segs));
    } catch (const DegenerateError &) {
      continue;
    }
    const BlochVector n0 = oracle::random_axis(rng);
    BlochVector n = n0;
    for (const Segment &s : segs)
      n = rotate_bloch(s.axis, s.angle, n);
    EXPECT_LT((n - rotate_bloch(aa.axis, aa.angle, n0)).norm(), 1e-10);
    ++checked;
  }
  EXPECT_GT(checked, 250);
}

TEST(Distance, BasicValues) {
  const Unitary2 u = rotation(BlochVector(0.6, 0.0, 0.8), 1.3);
  EXPECT_NEAR(distance_up_to_phase(u, u), 0.0, 1e-15);
  EXPECT_NEAR(distance_up_to_phase(u, -u), 0.0, 1e-15);
  Unitary2 minus_i_sigma_x;
  minus_i_sigma_x << 0, -I1, -I1, 0;
  EXPECT_NEAR(distance_up_to_phase(Unitary2::Identity(), minus_i_sigma_x), 2.0,
              1e-15);
}

TEST(Distance, AgreesWithTraceFormulaAndIsSymmetric) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const Unitary2 u = compose(oracle::random_segments(rng));
    const Unitary2 v = compose(oracle::random_segments(rng));
    const double d = distance_up_to_phase(u, v);
    const double via_trace =
        std::sqrt(std::max(0.0, 4.0 - 2.0 * std::abs((u.adjoint() * v).trace())));
    EXPECT_NEAR(d, via_trace, 1e-7);
    EXPECT_NEAR(d, distance_up_to_phase(v, u), 1e-13);
    // Brute-force minimum over a phase grid is never below it.
    double best = 1e9;
    for (int k = 0; k < 720; ++k)
      best = std::min(best, (u - std::polar(1.0, k * kPi / 360) * v).norm());
    EXPECT_LE(d, best + 1e-12);
    EXPECT_LT(best - d, 0.02);
  }
}

TEST(Distance, ZeroIffFidelityOne) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  for (int i = 0; i < 200; ++i) {
    const Unitary2 u = compose(oracle::random_segments(rng));
    const Unitary2 v = std::polar(1.0, phase(rng)) * u;
    EXPECT_LT(distance_up_to_phase(u, v), 1e-12);
    EXPECT_NEAR(trace_fidelity(u, v), 1.0, 1e-12);
    const Unitary2 w = compose(oracle::random_segments(rng));
    if (distance_up_to_phase(u, w) > 1e-6)
      EXPECT_LT(trace_fidelity(u, w), 1.0);
  }
}

TEST(TraceFidelity, Values) {
  const Unitary2 u = rotation(unit_y(), 0.4);
  EXPECT_NEAR(trace_fidelity(u, u), 1.0, 1e-15);
  for (double theta : {0.1, 1.0, 2.5, 4.0, 6.0})
    EXPECT_NEAR(trace_fidelity(Unitary2::Identity(), rotation(unit_x(), theta)),
                std::abs(std::cos(theta / 2)), 1e-15);
  EXPECT_NEAR(trace_fidelity(Unitary2::Identity(), -Unitary2::Identity()), 1.0,
              1e-15);
}

TEST(Phases, WrapIntoHalfOpenInterval) {
  EXPECT_DOUBLE_EQ(wrap_phase(kPi), kPi);
  EXPECT_DOUBLE_EQ(wrap_phase(-kPi), kPi);
  EXPECT_NEAR(wrap_phase(3 * kPi / 2), -kPi / 2, 1e-15);
  EXPECT_NEAR(wrap_phase(-5.0), -5.0 + 2 * kPi, 1e-15);
  EXPECT_NEAR(phase_difference(0.1, 2 * kPi + 0.05), 0.05, 1e-14);
}

TEST(Spinors, BlochRoundTrip) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    const BlochVector n = oracle::random_axis(rng);
    const Spinor psi = spinor_of(n);
    EXPECT_NEAR(psi.norm(), 1.0, 1e-14);
    EXPECT_LT((bloch_of(psi) - n).norm(), 1e-14);
  }
  EXPECT_LT((bloch_of(spinor_of(-unit_z())) + unit_z()).norm(), 1e-15);
}
