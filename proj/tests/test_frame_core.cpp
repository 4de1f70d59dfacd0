#include <gtest/gtest.h>

#include "framekit/framekit.hpp"
#include "support/oracles.hpp"

using namespace framekit;

namespace {

Mat cols(std::initializer_list<std::initializer_list<double>> cs) {
  const auto n = static_cast<Eigen::Index>(cs.size());
  const auto m = static_cast<Eigen::Index>(cs.begin()->size());
  Mat out(m, n);
  Eigen::Index j = 0;
  for (const auto& c : cs) {
    Eigen::Index i = 0;
    for (double v : c) out(i++, j) = v;
    ++j;
  }
  return out;
}

Mat diag(std::initializer_list<double> d) {
  Vec v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v[i++] = x;
  return v.asDiagonal();
}

FramePair real_pair(const Mat& x, const Mat& t) { return FramePair(Field::Real, x, t); }

FramePair mercedes() {
  const double h = std::sqrt(3.0) / 2.0;
  const Mat x = cols({{1, 0}, {-0.5, h}, {-0.5, -h}});
  return real_pair(x, x);
}

FramePair standard(Eigen::Index m) { return real_pair(identity(m), identity(m)); }

FramePair diag12() { return real_pair(identity(2), diag({1, 2})); }

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;  // sentinel: nothing thrown
}

}  // namespace

TEST(FrameOperator, Examples) {
  EXPECT_LE(max_abs(frame_operator(standard(2)) - identity(2)), 0.0);
  EXPECT_LE(max_abs(frame_operator(mercedes()) - 1.5 * identity(2)), 1e-15);
  EXPECT_LE(max_abs(frame_operator(diag12()) - diag({1, 2})), 0.0);
}

TEST(FrameOperator, RankOneSumAndSymmetry) {
  oracle::Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index m = rng.integer(1, 6), n = rng.integer(static_cast<int>(m), 8);
    auto [fp, s0] = oracle::random_frame(rng, m, n, rng.field());
    Mat sum = Mat::Zero(m, m);
    for (Eigen::Index j = 0; j < n; ++j) sum += fp.tau.col(j) * fp.x.col(j).adjoint();
    EXPECT_LE(max_abs(frame_operator(fp) - sum), 1e-12);
    // theta_tau^* theta_x = theta_x^* theta_tau for a frame.
    EXPECT_LE(max_abs(fp.analysis_tau().adjoint() * fp.analysis_x() - fp.analysis_x().adjoint() * fp.analysis_tau()),
              1e-9);
  }
}

TEST(Verify, Examples) {
  const auto s = verify(standard(2));
  EXPECT_TRUE(s.is_frame);
  EXPECT_TRUE(s.parseval);
  EXPECT_DOUBLE_EQ(s.lower_a, 1.0);

  const auto mb = verify(mercedes());
  EXPECT_TRUE(mb.tight);
  EXPECT_FALSE(mb.parseval);
  EXPECT_NEAR(mb.lower_a, 1.5, 1e-12);
  EXPECT_NEAR(mb.upper_b, 1.5, 1e-12);

  const auto swap = verify(real_pair(identity(2), cols({{0, 1}, {1, 0}})));
  EXPECT_TRUE(swap.self_adjoint);
  EXPECT_FALSE(swap.psd);
  EXPECT_FALSE(swap.is_frame);
  EXPECT_EQ(swap.lower_a, 0.0);
  EXPECT_EQ(swap.upper_b, 0.0);
}

TEST(Verify, NonHermitianIsNotBessel) {
  const auto r = verify(real_pair(identity(2), cols({{1, 1}, {0, 1}})));
  EXPECT_FALSE(r.self_adjoint);
  EXPECT_FALSE(r.is_bessel);
  EXPECT_FALSE(r.is_frame);
}

TEST(Verify, ReportInvariants) {
  oracle::Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Index m = rng.integer(1, 5), n = rng.integer(1, 7);
    const Field f = rng.field();
    const FramePair fp = rng.coin() ? oracle::random_frame(rng, m, std::max(m, n), f).first
                                    : FramePair(f, rng.gaussian(m, n, f), rng.gaussian(m, n, f));
    const auto r = verify(fp);
    if (r.is_frame) {
      EXPECT_GT(r.lower_a, 0.0);
      EXPECT_LE(r.lower_a, r.upper_b);
    }
    if (r.parseval) {
      EXPECT_TRUE(r.tight);
      EXPECT_NEAR(r.lower_a, 1.0, 1e-8);
    }
    EXPECT_EQ(r.is_frame, r.self_adjoint && r.psd && r.invertible);
    EXPECT_EQ(r.is_bessel, r.self_adjoint && r.psd);
  }
}

TEST(Verify, AgreesWithCharacteristicPolynomial) {
  oracle::Rng rng(3);
  int frames = 0;
  for (int t = 0; t < 500; ++t) {
    const Eigen::Index m = rng.integer(1, 4), n = rng.integer(1, 6);
    const Field f = rng.field();
    FramePair fp = rng.coin(0.7) ? oracle::random_frame(rng, m, std::max(m, n), f).first
                                 : oracle::hypothesis_pair(rng, m, n, f);
    const auto r = verify(fp);
    const Mat s = frame_operator(fp);
    const bool herm = max_abs(s - s.adjoint()) <= 1e-9 * std::max(1.0, max_abs(s));
    const auto [lo, hi] = oracle::extreme_eigenvalues(s);
    const bool brute = herm && lo > 1e-9;
    EXPECT_EQ(r.is_frame, brute) << "trial " << t;
    if (r.is_frame && brute) {
      ++frames;
      EXPECT_NEAR(r.lower_a, lo, 1e-8 * std::max(1.0, hi));
      EXPECT_NEAR(r.upper_b, hi, 1e-8 * std::max(1.0, hi));
    }
  }
  EXPECT_GT(frames, 200);
}

TEST(CanonicalDual, Examples) {
  const auto p = canonical_dual(standard(2));
  EXPECT_LE(max_abs(p.x - identity(2)), 1e-15);

  const auto d = canonical_dual(diag12());
  EXPECT_LE(max_abs(d.x - diag({1, 0.5})), 1e-15);
  EXPECT_LE(max_abs(d.tau - identity(2)), 1e-15);

  const auto mb = canonical_dual(mercedes());
  EXPECT_LE(max_abs(mb.x - (2.0 / 3.0) * mercedes().x), 1e-15);

  EXPECT_EQ(kind_of([] { canonical_dual(real_pair(identity(2), cols({{0, 1}, {1, 0}}))); }), ErrorKind::NotAFrame);
}

TEST(CanonicalDual, Laws) {
  oracle::Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Index m = rng.integer(1, 6), n = rng.integer(static_cast<int>(m), 8);
    auto [fp, s0] = oracle::random_frame(rng, m, n, rng.field());
    const auto r = verify(fp);
    const auto d = canonical_dual(fp);
    EXPECT_TRUE(is_dual(fp, d));
    const auto rd = verify(d);
    EXPECT_NEAR(rd.lower_a, 1.0 / r.upper_b, 1e-8 / r.upper_b);
    EXPECT_NEAR(rd.upper_b, 1.0 / r.lower_a, 1e-8 / r.lower_a);
    EXPECT_LE(max_abs(frame_operator(d) - s0.inverse()), 1e-9);
    const auto dd = canonical_dual(d);
    EXPECT_LE(max_abs(dd.x - fp.x), 1e-8 * std::max(1.0, max_abs(fp.x)));
    EXPECT_LE(max_abs(dd.tau - fp.tau), 1e-8 * std::max(1.0, max_abs(fp.tau)));
  }
}

TEST(IsDual, Examples) {
  oracle::Rng rng(5);
  const auto p = oracle::random_parseval(rng, 2, 4, Field::Real);
  EXPECT_TRUE(is_dual(p, p));
  EXPECT_FALSE(is_dual(p, FramePair(Field::Real, 2.0 * p.x, 2.0 * p.tau)));
  EXPECT_EQ(kind_of([&] { is_dual(p, standard(2)); }), ErrorKind::ShapeMismatch);
}

TEST(MakeDual, ZeroParamsGiveCanonical) {
  const auto fp = mercedes();
  const auto d = make_dual_from_params(fp, Mat::Zero(2, 3), Mat::Zero(2, 3));
  EXPECT_LE(max_abs(d.x - canonical_dual(fp).x), 1e-14);
}

TEST(MakeDual, SmallParamsAdmissible) {
  const auto fp = standard(2);
  const Mat u = 0.1 * fp.x;
  const auto d = make_dual_from_params(fp, u, u);
  EXPECT_TRUE(is_dual(fp, d));
}

TEST(MakeDual, NegativeConditionRejected) {
  // Parseval pair with n > m leaves room for U, V; V = -U with large norm
  // makes the condition matrix I - U U^* + ... indefinite.
  oracle::Rng rng(6);
  const auto fp = oracle::random_parseval(rng, 2, 4, Field::Real);
  const Mat u = 5.0 * rng.gaussian(2, 4, Field::Real);
  EXPECT_EQ(kind_of([&] { make_dual_from_params(fp, u, -u); }), ErrorKind::ParamNotAdmissible);
}

TEST(MakeDual, RandomAdmissibleParamsAreDuals) {
  oracle::Rng rng(7);
  int admitted = 0;
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index m = rng.integer(1, 4), n = rng.integer(static_cast<int>(m), 6);
    const Field f = rng.field();
    auto [fp, s0] = oracle::random_frame(rng, m, n, f);
    const Mat u = 0.2 * rng.gaussian(m, n, f), v = 0.2 * rng.gaussian(m, n, f);
    try {
      const auto d = make_dual_from_params(fp, u, v);
      EXPECT_TRUE(is_dual(fp, d));
      ++admitted;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParamNotAdmissible);
    }
  }
  EXPECT_GT(admitted, 0);
}

namespace {

// x = tau = (e1, e2, 0, 0) and (0, 0, e1, e2): orthogonal Parseval pairs for R^2.
std::pair<FramePair, FramePair> complementary(double s1, double s2) {
  Mat a = Mat::Zero(2, 4), b = Mat::Zero(2, 4);
  a(0, 0) = a(1, 1) = 1;
  b(0, 2) = b(1, 3) = 1;
  return {FramePair(Field::Real, a, s1 * a), FramePair(Field::Real, b, s2 * b)};
}

}  // namespace

TEST(Orthogonality, DisjointSupports) {
  auto [a, b] = complementary(1, 1);
  EXPECT_TRUE(is_orthogonal(a, b));
  EXPECT_FALSE(is_orthogonal(mercedes(), mercedes()));
  const FramePair zero(Field::Real, Mat::Zero(2, 3), Mat::Zero(2, 3));
  EXPECT_TRUE(is_orthogonal(mercedes(), zero));
}

TEST(CommonDual, OrthogonalFramesOnComplementaryCoordinates) {
  auto [fp, gq] = complementary(1, 1);
  EXPECT_TRUE(is_orthogonal(fp, gq));
  const auto z = common_dual(fp, gq);
  EXPECT_TRUE(is_dual(fp, z));
  EXPECT_TRUE(is_dual(gq, z));

  auto [fp2, gq2] = complementary(2, 3);
  const auto z2 = common_dual(fp2, gq2);
  EXPECT_TRUE(is_dual(fp2, z2));
  EXPECT_TRUE(is_dual(gq2, z2));
  EXPECT_LE(max_abs(frame_operator(z2) - (0.5 + 1.0 / 3.0) * identity(2)), 1e-14);

  EXPECT_EQ(kind_of([&] { common_dual(fp, fp); }), ErrorKind::NotOrthogonal);
}

TEST(Idempotent, Examples) {
  EXPECT_LE(max_abs(frame_idempotent(standard(3)) - identity(3)), 1e-15);
  const Mat p = frame_idempotent(mercedes());
  EXPECT_NEAR(p.trace().real(), 2.0, 1e-12);
  EXPECT_LE(max_abs(p * p - p), 1e-12);
  EXPECT_LE(max_abs(frame_idempotent(diag12()) - identity(2)), 1e-15);
}

TEST(Idempotent, RandomIdempotence) {
  oracle::Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Index m = rng.integer(1, 8), n = rng.integer(static_cast<int>(m), 8);
    auto [fp, s0] = oracle::random_frame(rng, m, n, rng.field());
    const Mat p = frame_idempotent(fp);
    EXPECT_LE(max_abs(p * p - p), 10 * 1e-9 * std::max(1.0, max_abs(p)));
    EXPECT_NEAR(p.trace().real(), static_cast<double>(m), 1e-8);
  }
}

TEST(Classify, Examples) {
  const auto s = classify(standard(2));
  EXPECT_TRUE(s.riesz_frame);
  EXPECT_TRUE(s.orthonormal_frame);
  const auto mb = classify(mercedes());
  EXPECT_FALSE(mb.riesz_frame);
  EXPECT_FALSE(mb.orthonormal_frame);
  const auto d = classify(diag12());
  EXPECT_TRUE(d.riesz_frame);
  EXPECT_FALSE(d.orthonormal_frame);
  EXPECT_NEAR(d.cross_gram(1, 1).real(), 2.0, 0.0);
}

TEST(DirectSum, Examples) {
  auto [fp, gq] = complementary(1, 1);
  const auto sum = direct_sum(fp, gq);
  EXPECT_EQ(sum.dim(), 4);
  EXPECT_TRUE(verify(sum).parseval);

  const auto twice = direct_sum(mercedes(), mercedes());
  EXPECT_FALSE(verify(twice).is_frame);
  EXPECT_EQ(kind_of([] { direct_sum(mercedes(), standard(2)); }), ErrorKind::CountMismatch);
}

TEST(TensorProduct, Examples) {
  EXPECT_TRUE(verify(tensor_product(standard(2), standard(2))).parseval);
  const auto mm = verify(tensor_product(mercedes(), mercedes()));
  EXPECT_TRUE(mm.tight);
  EXPECT_NEAR(mm.lower_a, 2.25, 1e-12);
  const auto d = tensor_product(diag12(), standard(2));
  EXPECT_LE(max_abs(frame_operator(d) - kron(diag({1, 2}), identity(2))), 1e-15);
}

TEST(TensorProduct, ExtremesMultiply) {
  oracle::Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const Field f = rng.field();
    auto [a, sa] = oracle::random_frame(rng, rng.integer(1, 3), 4, f);
    auto [b, sb] = oracle::random_frame(rng, rng.integer(1, 3), 4, f);
    const auto ra = verify(a), rb = verify(b), rt = verify(tensor_product(a, b));
    EXPECT_NEAR(rt.lower_a, ra.lower_a * rb.lower_a, 1e-9 * rt.upper_b);
    EXPECT_NEAR(rt.upper_b, ra.upper_b * rb.upper_b, 1e-9 * rt.upper_b);
    EXPECT_LE(max_abs(frame_operator(tensor_product(a, b)) - kron(sa, sb)), 1e-9);
  }
}

TEST(Interpolate, Examples) {
  auto [fp, gq] = complementary(1, 1);
  const Mat i = identity(2), z = Mat::Zero(2, 2);
  const auto same = interpolate_parseval(fp, gq, i, z, i, z);
  EXPECT_LE(max_abs(same.x - fp.x), 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  const auto mix = interpolate_parseval(fp, gq, r * i, r * i, r * i, r * i);
  EXPECT_TRUE(verify(mix).parseval);
  EXPECT_EQ(kind_of([&] { interpolate_parseval(fp, gq, 2 * i, z, 2 * i, z); }), ErrorKind::BadCoefficients);
  EXPECT_EQ(kind_of([&] { interpolate_parseval(fp, fp, i, z, i, z); }), ErrorKind::NotOrthogonal);
}

TEST(Similarity, Examples) {
  const auto fp = mercedes();
  const auto s = similarity_detect(fp, FramePair(Field::Real, 2.0 * fp.x, 3.0 * fp.tau));
  ASSERT_TRUE(s.has_value());
  EXPECT_LE(max_abs(s->txy - 2.0 * identity(2)), 1e-14);
  EXPECT_LE(max_abs(s->ttw - 3.0 * identity(2)), 1e-14);
  const auto self = similarity_detect(fp, fp);
  ASSERT_TRUE(self.has_value());
  EXPECT_LE(max_abs(self->txy - identity(2)), 1e-14);
  EXPECT_EQ(kind_of([&] { similarity_detect(standard(2), fp); }), ErrorKind::ShapeMismatch);
}

TEST(Similarity, MatchesIdempotentEquality) {
  oracle::Rng rng(10);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index m = rng.integer(1, 4), n = rng.integer(static_cast<int>(m) + 1, 6);
    const Field f = rng.field();
    auto [fp, s0] = oracle::random_frame(rng, m, n, f);
    FramePair gq;
    if (rng.coin()) {
      const Mat a = identity(m) + 0.3 * rng.gaussian(m, m, f);
      const Mat b = rng.hpd(m, f) * a.adjoint().inverse();  // keeps T' X'^* Hermitian pd
      gq = FramePair(f, a * fp.x, b * fp.tau);
    } else {
      gq = oracle::random_frame(rng, m, n, f).first;
    }
    if (!verify(gq).is_frame) continue;
    const bool detected = similarity_detect(fp, gq).has_value();
    const bool same_p = max_abs(frame_idempotent(fp) - frame_idempotent(gq)) <= 1e-8;
    EXPECT_EQ(detected, same_p) << "trial " << t;
  }
}

TEST(Parsevalize, Examples) {
  for (auto mode : {ParsevalMode::LeftOnX, ParsevalMode::Split, ParsevalMode::LeftOnT}) {
    const auto p = parsevalize(standard(2), mode);
    EXPECT_LE(max_abs(p.x - identity(2)), 1e-15);
  }
  const auto mb = parsevalize(mercedes(), ParsevalMode::Split);
  EXPECT_LE(max_abs(mb.x - std::sqrt(2.0 / 3.0) * mercedes().x), 1e-14);
  EXPECT_TRUE(verify(mb).parseval);
  const auto d = parsevalize(diag12(), ParsevalMode::LeftOnX);
  EXPECT_LE(max_abs(d.x - diag({1, 0.5})), 1e-15);
  EXPECT_TRUE(verify(d).parseval);
}

TEST(Parsevalize, OutputIsParsevalAndSimilar) {
  oracle::Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const Eigen::Index m = rng.integer(1, 5), n = rng.integer(static_cast<int>(m), 7);
    auto [fp, s0] = oracle::random_frame(rng, m, n, rng.field());
    for (auto mode : {ParsevalMode::LeftOnX, ParsevalMode::Split, ParsevalMode::LeftOnT}) {
      const auto p = parsevalize(fp, mode);
      EXPECT_TRUE(verify(p).parseval);
      EXPECT_TRUE(similarity_detect(fp, p).has_value());
    }
  }
}

TEST(Dilate, Examples) {
  const auto triv = dilate(standard(2));
  EXPECT_EQ(triv.embed_dim, 2);
  EXPECT_LE(max_abs(triv.big.x - identity(2)), 1e-15);

  const double r = 1.0 / std::sqrt(2.0);
  const Mat x = cols({{r}, {r}});
  const auto line = dilate(FramePair(Field::Real, x, x));
  EXPECT_EQ(line.embed_dim, 2);
  EXPECT_TRUE(classify(line.big).orthonormal_frame);
  EXPECT_NEAR(std::abs(line.big.x(1, 0)), r, 1e-14);
  EXPECT_NEAR(line.big.x(1, 0).real(), -line.big.x(1, 1).real(), 1e-14);

  const auto mb = dilate(parsevalize(mercedes(), ParsevalMode::Split));
  EXPECT_EQ(mb.embed_dim, 3);
  EXPECT_TRUE(classify(mb.big).orthonormal_frame);
  EXPECT_EQ(mb.big.field, Field::Real);

  EXPECT_EQ(kind_of([] { dilate(mercedes()); }), ErrorKind::NotParseval);
}

TEST(Dilate, RangesMustAgree) {
  // Parseval pair with x != tau whose analysis ranges differ.
  const Mat x = cols({{1, 0}, {0, 1}, {0, 0}});
  const Mat t = cols({{1, 0}, {0, 1}, {1, 0}});
  const FramePair fp(Field::Real, x, t);
  ASSERT_TRUE(verify(fp).parseval);
  EXPECT_EQ(kind_of([&] { dilate(fp); }), ErrorKind::RangesDiffer);
}

TEST(Dilate, RandomSelfParseval) {
  oracle::Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index m = rng.integer(1, 5), n = rng.integer(static_cast<int>(m), 8);
    const auto fp = oracle::random_parseval_self(rng, m, n, rng.field());
    const auto d = dilate(fp);
    EXPECT_EQ(d.embed_dim, n);
    EXPECT_TRUE(classify(d.big).orthonormal_frame);
    EXPECT_LE(max_abs(d.big.x.topRows(m) - fp.x), 0.0);
  }
}
