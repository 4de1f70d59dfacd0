#ifndef FRAMEKIT_FRAME_CORE_HPP_
#define FRAMEKIT_FRAME_CORE_HPP_

// Frames for K^m taken with respect to a second family: a pair of m x n
// matrices X, T whose columns are x_j and tau_j. The frame operator is
// S = T X^*, i.e. h -> sum_j <h, x_j> tau_j.

#include "framekit/numerics.hpp"

#include <optional>
#include <utility>

namespace framekit {

struct FramePair {
  Field field = Field::Real;
  Mat x;    // m x n, column j = x_j
  Mat tau;  // m x n, column j = tau_j
  Tolerance tol{};

  FramePair() = default;
  FramePair(Field f, Mat xs, Mat taus, Tolerance t = {})
      : field(f), x(std::move(xs)), tau(std::move(taus)), tol(t) {
    validate();
  }

  Eigen::Index dim() const { return x.rows(); }
  Eigen::Index count() const { return x.cols(); }

  // theta_x : h -> (<h, x_j>)_j
  Mat analysis_x() const { return x.adjoint(); }
  Mat analysis_tau() const { return tau.adjoint(); }

  void validate() const {
    if (x.rows() != tau.rows() || x.cols() != tau.cols())
      throw Error(ErrorKind::ShapeMismatch, "x and tau families must share shape");
    if (x.rows() < 1 || x.cols() < 1) throw Error(ErrorKind::InvalidArgument, "dim and count must be positive");
    if (!all_finite(x) || !all_finite(tau)) throw Error(ErrorKind::InvalidArgument, "non-finite entry");
    if (field == Field::Real && (!is_real_valued(x) || !is_real_valued(tau)))
      throw Error(ErrorKind::InvalidArgument, "real-field pair has imaginary parts");
    if (tol.abs_tol < 0 || tol.rel_tol < 0) throw Error(ErrorKind::InvalidArgument, "negative tolerance");
  }
};

struct FrameReport {
  bool self_adjoint = false;
  bool psd = false;
  bool invertible = false;
  bool is_frame = false;
  bool is_bessel = false;
  double lower_a = 0.0;
  double upper_b = 0.0;
  bool tight = false;
  bool parseval = false;
};

// Verdict for an operator S that plays the role of a frame operator. Shared
// by sequential and operator-valued pairs.
inline FrameReport report_for_operator(const Mat& s, const Tolerance& tol) {
  FrameReport r;
  r.self_adjoint = is_hermitian(s, tol);
  if (!r.self_adjoint) return r;
  const auto he = hermitian_eigen(s);
  const double lo = he.values[0];
  const double hi = he.values[he.values.size() - 1];
  r.psd = lo >= -tol.abs_tol;
  r.invertible = std::abs(lo) > tol.abs_tol && r.psd;
  r.is_bessel = r.psd;
  r.is_frame = r.psd && r.invertible;
  if (!r.is_frame) return r;
  r.lower_a = lo;
  r.upper_b = hi;
  r.tight = (hi - lo) <= tol.bound(hi);
  r.parseval = r.tight && std::abs(hi - 1.0) <= tol.bound(1.0);
  return r;
}

inline Mat frame_operator(const FramePair& fp) { return fp.tau * fp.x.adjoint(); }

inline FrameReport verify(const FramePair& fp) { return report_for_operator(frame_operator(fp), fp.tol); }

namespace detail {

inline void require_frame(const FramePair& fp, const char* who) {
  if (!verify(fp).is_frame) throw Error(ErrorKind::NotAFrame, std::string(who) + ": input is not a frame");
}

inline void require_parseval(const FramePair& fp, const char* who) {
  if (!verify(fp).parseval) throw Error(ErrorKind::NotParseval, std::string(who) + ": input is not Parseval");
}

inline void require_same_shape(const FramePair& a, const FramePair& b, const char* who) {
  if (a.dim() != b.dim() || a.count() != b.count())
    throw Error(ErrorKind::ShapeMismatch, std::string(who) + ": pairs differ in dim or count");
}

inline Field join(Field a, Field b) { return a == Field::Real && b == Field::Real ? Field::Real : Field::Complex; }

// Inverse of a Hermitian positive definite frame operator.
inline Mat frame_inverse(const Mat& s) {
  Mat inv = s.ldlt().solve(identity(s.rows()));
  return 0.5 * (inv + inv.adjoint());
}

inline double scale_of(const Mat& a, const Mat& b) { return a.norm() * b.norm(); }

}  // namespace detail

inline FramePair canonical_dual(const FramePair& fp) {
  detail::require_frame(fp, "canonical_dual");
  const Mat sinv = detail::frame_inverse(frame_operator(fp));
  return FramePair(fp.field, sinv * fp.x, sinv * fp.tau, fp.tol);
}

// gq = (Y, Omega) is dual to fp when Omega X^* = I and Y T^* = I.
inline bool is_dual(const FramePair& fp, const FramePair& gq) {
  detail::require_same_shape(fp, gq, "is_dual");
  const Mat i = identity(fp.dim());
  return max_abs(gq.tau * fp.x.adjoint() - i) <= fp.tol.bound(1.0) &&
         max_abs(gq.x * fp.tau.adjoint() - i) <= fp.tol.bound(1.0);
}

inline bool is_orthogonal(const FramePair& fp, const FramePair& gq) {
  detail::require_same_shape(fp, gq, "is_orthogonal");
  return max_abs(gq.tau * fp.x.adjoint()) <= fp.tol.bound(detail::scale_of(gq.tau, fp.x)) &&
         max_abs(gq.x * fp.tau.adjoint()) <= fp.tol.bound(detail::scale_of(gq.x, fp.tau));
}

// Every dual of fp arises this way for some U, V : l^2(n) -> K^m, provided
// the resulting frame operator is positive and invertible.
inline FramePair make_dual_from_params(const FramePair& fp, const Mat& u, const Mat& v) {
  detail::require_frame(fp, "make_dual_from_params");
  if (u.rows() != fp.dim() || u.cols() != fp.count() || v.rows() != fp.dim() || v.cols() != fp.count())
    throw Error(ErrorKind::ShapeMismatch, "U and V must be m x n");
  const Mat sinv = detail::frame_inverse(frame_operator(fp));
  const Mat in = identity(fp.count());
  const Mat y = sinv * fp.x + v * (in - fp.tau.adjoint() * sinv * fp.x);
  const Mat omega = sinv * fp.tau + u * (in - fp.x.adjoint() * sinv * fp.tau);
  const Mat cond = sinv + u * v.adjoint() - u * fp.x.adjoint() * sinv * fp.tau * v.adjoint();
  const auto rep = spectral(cond, fp.tol);
  if (!rep.is_pd) throw Error(ErrorKind::ParamNotAdmissible, "resulting frame operator is not positive invertible");
  const Field f = is_real_valued(u) && is_real_valued(v) ? fp.field : Field::Complex;
  return FramePair(f, y, omega, fp.tol);
}

inline FramePair common_dual(const FramePair& fp, const FramePair& gq) {
  detail::require_frame(fp, "common_dual");
  detail::require_frame(gq, "common_dual");
  detail::require_same_shape(fp, gq, "common_dual");
  if (!is_orthogonal(fp, gq)) throw Error(ErrorKind::NotOrthogonal, "common_dual: pairs are not orthogonal");
  const Mat s1 = detail::frame_inverse(frame_operator(fp));
  const Mat s2 = detail::frame_inverse(frame_operator(gq));
  return FramePair(detail::join(fp.field, gq.field), s1 * fp.x + s2 * gq.x, s1 * fp.tau + s2 * gq.tau, fp.tol);
}

// P = theta_x S^{-1} theta_tau^*, an idempotent on coefficient space.
inline Mat frame_idempotent(const FramePair& fp) {
  detail::require_frame(fp, "frame_idempotent");
  return fp.x.adjoint() * detail::frame_inverse(frame_operator(fp)) * fp.tau;
}

struct Classification {
  bool riesz_frame = false;
  bool orthonormal_frame = false;
  Mat cross_gram;  // (k, j) entry is <x_j, tau_k>
};

inline Classification classify(const FramePair& fp) {
  const auto rep = verify(fp);
  if (!rep.is_frame) throw Error(ErrorKind::NotAFrame, "classify: input is not a frame");
  Classification c;
  c.cross_gram = fp.tau.adjoint() * fp.x;
  const Mat in = identity(fp.count());
  c.riesz_frame = max_abs(frame_idempotent(fp) - in) <= fp.tol.bound(1.0);
  c.orthonormal_frame = rep.parseval && max_abs(c.cross_gram - in) <= fp.tol.bound(1.0);
  return c;
}

inline FramePair direct_sum(const FramePair& fp, const FramePair& gq) {
  if (fp.count() != gq.count()) throw Error(ErrorKind::CountMismatch, "direct_sum: counts differ");
  const Eigen::Index m1 = fp.dim(), m2 = gq.dim(), n = fp.count();
  Mat x(m1 + m2, n), t(m1 + m2, n);
  x << fp.x, gq.x;
  t << fp.tau, gq.tau;
  return FramePair(detail::join(fp.field, gq.field), x, t, fp.tol);
}

// Columns x_j (x) y_l in row-major (j, l) order.
inline FramePair tensor_product(const FramePair& fp, const FramePair& gq) {
  const Eigen::Index n1 = fp.count(), n2 = gq.count();
  Mat x(fp.dim() * gq.dim(), n1 * n2), t(fp.dim() * gq.dim(), n1 * n2);
  for (Eigen::Index j = 0; j < n1; ++j)
    for (Eigen::Index l = 0; l < n2; ++l) {
      x.col(j * n2 + l) = kron(fp.x.col(j), gq.x.col(l));
      t.col(j * n2 + l) = kron(fp.tau.col(j), gq.tau.col(l));
    }
  return FramePair(detail::join(fp.field, gq.field), x, t, fp.tol);
}

// ({A x_j + B y_j}, {C tau_j + D omega_j}) for orthogonal Parseval pairs with
// A C^* + B D^* = I.
inline FramePair interpolate_parseval(const FramePair& fp, const FramePair& gq, const Mat& a, const Mat& b,
                                      const Mat& c, const Mat& d) {
  detail::require_same_shape(fp, gq, "interpolate_parseval");
  detail::require_parseval(fp, "interpolate_parseval");
  detail::require_parseval(gq, "interpolate_parseval");
  if (!is_orthogonal(fp, gq)) throw Error(ErrorKind::NotOrthogonal, "interpolate_parseval: pairs are not orthogonal");
  const Eigen::Index m = fp.dim();
  for (const Mat* k : {&a, &b, &c, &d})
    if (k->rows() != m || k->cols() != m) throw Error(ErrorKind::ShapeMismatch, "coefficients must be m x m");
  const Mat mix = a * c.adjoint() + b * d.adjoint();
  if (max_abs(mix - identity(m)) > fp.tol.bound(1.0))
    throw Error(ErrorKind::BadCoefficients, "A C^* + B D^* differs from I");
  Field f = detail::join(fp.field, gq.field);
  for (const Mat* k : {&a, &b, &c, &d})
    if (!is_real_valued(*k)) f = Field::Complex;
  return FramePair(f, a * fp.x + b * gq.x, c * fp.tau + d * gq.tau, fp.tol);
}

struct Similarity {
  Mat txy;  // y_j = txy x_j
  Mat ttw;  // omega_j = ttw tau_j
};

inline std::optional<Similarity> similarity_detect(const FramePair& fp, const FramePair& gq) {
  detail::require_same_shape(fp, gq, "similarity_detect");
  detail::require_frame(fp, "similarity_detect");
  detail::require_frame(gq, "similarity_detect");
  const Mat sinv = detail::frame_inverse(frame_operator(fp));
  Similarity s{gq.x * fp.tau.adjoint() * sinv, gq.tau * fp.x.adjoint() * sinv};
  if (!is_invertible(s.txy, fp.tol) || !is_invertible(s.ttw, fp.tol)) return std::nullopt;
  if (max_abs(s.txy * fp.x - gq.x) > fp.tol.bound(max_abs(gq.x))) return std::nullopt;
  if (max_abs(s.ttw * fp.tau - gq.tau) > fp.tol.bound(max_abs(gq.tau))) return std::nullopt;
  return s;
}

enum class ParsevalMode { LeftOnX, Split, LeftOnT };

inline FramePair parsevalize(const FramePair& fp, ParsevalMode mode) {
  detail::require_frame(fp, "parsevalize");
  const Mat s = frame_operator(fp);
  switch (mode) {
    case ParsevalMode::LeftOnX: return FramePair(fp.field, detail::frame_inverse(s) * fp.x, fp.tau, fp.tol);
    case ParsevalMode::LeftOnT: return FramePair(fp.field, fp.x, detail::frame_inverse(s) * fp.tau, fp.tol);
    case ParsevalMode::Split: break;
  }
  const auto he = hermitian_eigen(s);
  Mat root = hermitian_apply(he, [](double v) { return 1.0 / std::sqrt(v); });
  if (fp.field == Field::Real) root = root.real().cast<cplx>();
  return FramePair(fp.field, root * fp.x, root * fp.tau, fp.tol);
}

namespace detail {

// ran(a) == ran(b) via mutual projection residuals.
inline bool same_column_space(const Mat& a, const Mat& b, const Tolerance& tol) {
  const Mat qa = range_basis(a, tol);
  const Mat qb = range_basis(b, tol);
  if (qa.cols() != qb.cols()) return false;
  const double ra = max_abs(b - qa * (qa.adjoint() * b));
  const double rb = max_abs(a - qb * (qb.adjoint() * a));
  return ra <= tol.bound(max_abs(b)) && rb <= tol.bound(max_abs(a));
}

inline bool is_orthogonal_projection(const Mat& p, const Tolerance& tol) {
  return max_abs(p - p.adjoint()) <= tol.bound(1.0) && max_abs(p * p - p) <= tol.bound(1.0);
}

}  // namespace detail

struct Dilation {
  FramePair big;
  Eigen::Index embed_dim = 0;
};

// Embeds a Parseval pair as the compression of an orthonormal frame on
// K^m (+) ran(theta_x)^perp, with y_j = x_j (+) W^* e_j where the columns of
// W span ran(I - P).
inline Dilation dilate(const FramePair& fp) {
  detail::require_parseval(fp, "dilate");
  if (!detail::same_column_space(fp.x.adjoint(), fp.tau.adjoint(), fp.tol))
    throw Error(ErrorKind::RangesDiffer, "ranges of the analysis operators differ");
  const Mat p = fp.x.adjoint() * fp.tau;
  if (!detail::is_orthogonal_projection(p, fp.tol))
    throw Error(ErrorKind::IdempotentNotProjection, "frame idempotent is not an orthogonal projection");
  const Mat w = complement_basis(p);
  const Eigen::Index m = fp.dim(), n = fp.count(), k = w.cols();
  Mat x(m + k, n), t(m + k, n);
  x << fp.x, w.adjoint();
  t << fp.tau, w.adjoint();
  Field f = fp.field;
  if (f == Field::Real) {
    x = x.real().cast<cplx>();
    t = t.real().cast<cplx>();
  }
  return {FramePair(f, x, t, fp.tol), m + k};
}

}  // namespace framekit

#endif  // FRAMEKIT_FRAME_CORE_HPP_
