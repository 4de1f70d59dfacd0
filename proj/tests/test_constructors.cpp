#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numbers>

#include "framekit/framekit.hpp"
#include "support/oracles.hpp"

using namespace framekit;

namespace {

constexpr double pi = std::numbers::pi;

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

// S_3 as permutations of {0, 1, 2}, elements listed in lexicographic order.
GroupTable symmetric3() {
  std::vector<std::array<int, 3>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index = [&](const std::array<int, 3>& p) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      mul[a][b] = index(c);
    }
  return GroupTable(mul, 0);
}

// Permutation matrices of S_3 on K^3.
Representation symmetric3_matrices() {
  const auto g = symmetric3();
  std::vector<std::array<int, 3>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<Mat> mats;
  for (const auto& p : perms) {
    Mat m = Mat::Zero(3, 3);
    for (int i = 0; i < 3; ++i) m(p[i], i) = 1.0;
    mats.push_back(m);
  }
  return Representation(g, mats);
}

}  // namespace

TEST(GroupTable, ValidatesLaw) {
  EXPECT_EQ(cyclic_group(5).order(), 5);
  EXPECT_EQ(cyclic_group(5).inverse(2), 3);
  EXPECT_EQ(symmetric3().order(), 6);
  EXPECT_EQ(kind_of([] { GroupTable({{0, 1}, {1, 1}}, 0); }), ErrorKind::InvalidGroup);
  EXPECT_EQ(kind_of([] { GroupTable({{0, 1}, {1, 0}}, 1); }), ErrorKind::InvalidGroup);
  EXPECT_EQ(kind_of([] { GroupTable({{0, 1}, {1, 2}}, 0); }), ErrorKind::InvalidGroup);
  EXPECT_EQ(kind_of([] { GroupTable({}, 0); }), ErrorKind::InvalidGroup);
  // Identity and inverses fine but not associative.
  EXPECT_EQ(kind_of([] { GroupTable({{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}, 0); }), ErrorKind::InvalidGroup);
}

TEST(Representation, RejectsNonHomomorphism) {
  std::vector<Mat> mats{identity(2), identity(2)};
  mats[1](0, 0) = -1.0;  // diag(-1, 1) squares to I: fine
  EXPECT_NO_THROW(Representation(cyclic_group(2), mats));
  mats[1] *= 2.0;
  EXPECT_EQ(kind_of([&] { Representation(cyclic_group(2), mats); }), ErrorKind::InvalidRepresentation);
  EXPECT_EQ(kind_of([] { Representation(cyclic_group(3), {identity(1)}); }), ErrorKind::InvalidRepresentation);
  Mat rot(2, 2);
  rot << 0, -1, 1, 0;
  EXPECT_EQ(kind_of([&] { Representation(cyclic_group(2), {identity(2), rot}); }), ErrorKind::InvalidRepresentation);
}

TEST(CircularGeneral, Examples) {
  const double t = 2 * pi / 3;
  auto r = circular_general({1, 1, 1}, {0, t, 2 * t}, {1, 1, 1}, {0, t, 2 * t});
  EXPECT_TRUE(r.tight);
  EXPECT_NEAR(r.constant, 1.5, 1e-12);
  EXPECT_LE(max_abs(frame_operator(r.fp) - 1.5 * identity(2)), 1e-12);

  r = circular_general({1, 1}, {0, pi}, {1, 1}, {0, pi});
  EXPECT_FALSE(r.tight);
  EXPECT_NEAR(r.residual[0], 2.0, 1e-12);
  EXPECT_NEAR(r.residual[2], 0.0, 1e-12);

  r = circular_general({1}, {0}, {1}, {0});
  EXPECT_FALSE(r.tight);
  EXPECT_NEAR(r.residual[0], 1.0, 1e-15);

  EXPECT_EQ(kind_of([] { circular_general({-1}, {0}, {1}, {0}); }), ErrorKind::NegativeRadius);
  EXPECT_EQ(kind_of([] { circular_general({1, 1}, {0}, {1}, {0}); }), ErrorKind::CountMismatch);
}

TEST(CircularGeneral, TightVerdictMatchesFrameOperator) {
  oracle::Rng rng(201);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.integer(1, 6);
    std::vector<double> a, th, b, ph;
    for (int j = 0; j < n; ++j) {
      a.push_back(rng.uniform(0, 2));
      b.push_back(rng.uniform(0, 2));
      th.push_back(rng.uniform(0, 2 * pi));
      ph.push_back(rng.coin() ? th.back() : rng.uniform(0, 2 * pi));
    }
    const auto r = circular_general(a, th, b, ph);
    // S = constant I exactly when the residual vanishes.
    const Mat s = frame_operator(r.fp);
    const Mat c = r.constant * identity(2);
    const bool scalar = max_abs(s - c) <= 1e-9;
    EXPECT_EQ(r.residual.norm() <= 1e-9, scalar) << max_abs(s - c) << " " << r.residual.norm();
    if (r.tight) {
      const auto rep = verify(r.fp);
      EXPECT_TRUE(rep.tight);
      EXPECT_NEAR(rep.lower_a, r.constant, 1e-9);
    }
  }
}

TEST(CircularKl, SquareFamiliesAreTight) {
  for (int k = 3; k <= 7; ++k) {
    const auto r = circular_kl(k, k);
    EXPECT_TRUE(r.tight);
    EXPECT_NEAR(r.constant, k * k / 2.0, 1e-9);
    const auto rep = verify(r.fp);
    EXPECT_TRUE(rep.tight);
    EXPECT_NEAR(rep.lower_a, k * k / 2.0, 1e-9);
  }
}

TEST(CircularKl, DegenerateFamilies) {
  const auto r31 = circular_kl(3, 1);
  EXPECT_FALSE(r31.tight);
  EXPECT_NEAR(r31.constant, 0.0, 1e-12);
  EXPECT_LE(max_abs(frame_operator(r31.fp)), 1e-12);

  const auto r22 = circular_kl(2, 2);
  EXPECT_FALSE(r22.tight);
  Mat e11 = Mat::Zero(2, 2);
  e11(0, 0) = 4.0;
  EXPECT_LE(max_abs(frame_operator(r22.fp) - e11), 1e-12);

  EXPECT_EQ(kind_of([] { circular_kl(1, 2); }), ErrorKind::BadKL);
  EXPECT_EQ(kind_of([] { circular_kl(0, 5); }), ErrorKind::BadKL);
}

TEST(LeftRegular, Examples) {
  const auto z1 = left_regular(cyclic_group(1));
  EXPECT_LE(max_abs(z1.mats[0] - identity(1)), 0.0);
  const auto z2 = left_regular(cyclic_group(2));
  Mat swap(2, 2);
  swap << 0, 1, 1, 0;
  EXPECT_LE(max_abs(z2.mats[1] - swap), 0.0);
  const auto z3 = left_regular(cyclic_group(3));
  EXPECT_LE(max_abs(z3.mats[1] * z3.mats[1] * z3.mats[1] - identity(3)), 0.0);
  EXPECT_GT(max_abs(z3.mats[1] - identity(3)), 0.5);
  EXPECT_NO_THROW(left_regular(symmetric3()));
}

TEST(GroupFrame, RotationGeneratorsAreTight) {
  for (int n = 3; n <= 8; ++n) {
    const auto gf = group_frame(rotation_representation(n), vec2(1, 0), vec2(1, 0));
    EXPECT_TRUE(gf.report.tight);
    EXPECT_NEAR(gf.report.lower_a, n / 2.0, 1e-9);
    ASSERT_TRUE(gf.generator_bound_ok.has_value());
    EXPECT_TRUE(*gf.generator_bound_ok);
    EXPECT_TRUE(check_group_invariance(gf.fp, cyclic_group(n)));
  }
}

TEST(GroupFrame, Examples) {
  const auto trivial = group_frame(Representation(cyclic_group(1), {identity(1)}), Vec::Constant(1, 2.0),
                                   Vec::Constant(1, 3.0));
  EXPECT_TRUE(trivial.report.is_frame);
  EXPECT_NEAR(trivial.report.lower_a, 6.0, 1e-15);

  const auto zero = group_frame(rotation_representation(3), vec2(0, 0), vec2(1, 0));
  EXPECT_FALSE(zero.report.is_frame);
  ASSERT_TRUE(zero.generator_bound_ok.has_value());
  EXPECT_TRUE(*zero.generator_bound_ok);

  EXPECT_EQ(kind_of([] { group_frame(rotation_representation(3), Vec::Ones(3), Vec::Ones(3)); }),
            ErrorKind::DimMismatch);

  // Complex inner product: the generator bound does not apply.
  Vec x(1), t(1);
  x << cplx(1, 0);
  t << cplx(0, 1);
  EXPECT_FALSE(group_frame(Representation(cyclic_group(1), {identity(1)}), x, t).generator_bound_ok.has_value());
}

TEST(GroupFrame, InvarianceOnRandomGenerators) {
  oracle::Rng rng(202);
  const auto s3 = symmetric3_matrices();
  for (int t = 0; t < 1000; ++t) {
    const bool use_s3 = rng.coin(0.2);
    const Representation rep = use_s3 ? s3 : rotation_representation(rng.integer(1, 8));
    Vec x = rng.vec(rep.dim, Field::Real), tau = rng.vec(rep.dim, Field::Real);
    x /= x.norm();
    tau /= tau.norm();
    const auto gf = group_frame(rep, x, tau);
    EXPECT_TRUE(check_group_invariance(gf.fp, rep.group));
    if (gf.generator_bound_ok) EXPECT_TRUE(*gf.generator_bound_ok);
  }
}

TEST(GroupInvariance, DetectsPerturbation) {
  auto gf = group_frame(rotation_representation(4), vec2(1, 0), vec2(1, 0));
  FramePair bent = gf.fp;
  bent.x(0, 2) += 0.1;
  EXPECT_FALSE(check_group_invariance(bent, cyclic_group(4)));
  EXPECT_TRUE(check_group_invariance(FramePair(Field::Real, Mat::Ones(2, 1), Mat::Ones(2, 1)), cyclic_group(1)));
  EXPECT_EQ(kind_of([&] { check_group_invariance(gf.fp, cyclic_group(3)); }), ErrorKind::CountMismatch);
}

TEST(Synthesize, MercedesRecoversRotations) {
  const auto rot = rotation_representation(3);
  const auto gf = group_frame(rot, vec2(1, 0), vec2(1, 0));
  const auto pv = parsevalize(gf.fp, ParsevalMode::Split);
  const auto syn = synthesize_representation(pv, cyclic_group(3));
  EXPECT_TRUE(syn.pi_reproduces);
  for (int g = 0; g < 3; ++g) EXPECT_LE(max_abs(syn.rep.mats[g] - rot.mats[g]), 1e-9);

  const auto triv = synthesize_representation(FramePair(Field::Real, identity(1), identity(1)), cyclic_group(1));
  EXPECT_LE(max_abs(triv.rep.mats[0] - identity(1)), 1e-15);

  EXPECT_EQ(kind_of([&] { synthesize_representation(gf.fp, cyclic_group(3)); }), ErrorKind::NotParseval);
  // Parseval but the Gram matrices do not respect Z_3.
  Mat x(2, 3), t(2, 3);
  x << 1, 0, 0, 0, 1, 0;
  t = x;
  EXPECT_EQ(kind_of([&] { synthesize_representation(FramePair(Field::Real, x, t), cyclic_group(3)); }),
            ErrorKind::NotInvariant);
}

TEST(Synthesize, RoundTripOnRandomGroupFrames) {
  oracle::Rng rng(203);
  for (int t = 0; t < 100; ++t) {
    const Representation rep = rng.coin(0.3) ? symmetric3_matrices() : rotation_representation(rng.integer(3, 8));
    const auto gf = group_frame(rep, rng.vec(rep.dim, Field::Real), rng.vec(rep.dim, Field::Real));
    if (!gf.report.is_frame) continue;
    if (!spectral(frame_operator(gf.fp)).is_pd) continue;
    const auto pv = parsevalize(gf.fp, ParsevalMode::Split);
    const auto syn = synthesize_representation(pv, rep.group);
    EXPECT_TRUE(syn.pi_reproduces);
    const int e = rep.group.identity();
    for (int g = 0; g < rep.group.order(); ++g)
      EXPECT_LE(max_abs(syn.rep.mats[g] * pv.x.col(e) - pv.x.col(g)), 1e-8);
  }
}
