#ifndef FRAMEKIT_PFRAMES_HPP_
#define FRAMEKIT_PFRAMES_HPP_

// Frames on l^p_m = (K^m, ||.||_p): rows of F are functionals f_j, columns of
// T are vectors tau_j, and S = T F is h -> sum_j f_j(h) tau_j. Bounds are read
// off the principal power S^{1/p}; l^p operator norms are only available as
// certified intervals, exact at p = 2.

#include "framekit/numerics.hpp"

#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace framekit {

struct PFramePair {
  double p = 2.0;
  Field field = Field::Real;
  Mat f;    // n x m, row j = f_j
  Mat tau;  // m x n, column j = tau_j
  Tolerance tol{};

  PFramePair() = default;
  PFramePair(double pp, Field fld, Mat fs, Mat taus, Tolerance t = {})
      : p(pp), field(fld), f(std::move(fs)), tau(std::move(taus)), tol(t) {
    validate();
  }

  Eigen::Index dim() const { return tau.rows(); }
  Eigen::Index count() const { return tau.cols(); }
  Mat frame_operator() const { return tau * f; }

  void validate() const {
    if (!(p >= 1.0) || !std::isfinite(p)) throw Error(ErrorKind::BadExponent, "p must be a finite real >= 1");
    if (f.rows() != tau.cols() || f.cols() != tau.rows())
      throw Error(ErrorKind::ShapeMismatch, "F must be n x m when T is m x n");
    if (tau.rows() < 1 || tau.cols() < 1) throw Error(ErrorKind::InvalidArgument, "dim and count must be positive");
    if (!all_finite(f) || !all_finite(tau)) throw Error(ErrorKind::InvalidArgument, "non-finite entry");
    if (field == Field::Real && (!is_real_valued(f) || !is_real_valued(tau)))
      throw Error(ErrorKind::InvalidArgument, "real-field pair has imaginary parts");
  }
};

struct PReport {
  bool resolvent_ok = false;
  bool tight = false;
  bool parseval = false;
  std::optional<NormInterval> lower_a;
  std::optional<NormInterval> upper_b;
};

inline PReport p_verify(const PFramePair& pf, int samples = 256, std::uint64_t seed = 0) {
  const Tolerance& tol = pf.tol;
  const Mat s = pf.frame_operator();
  const Eigen::Index m = pf.dim();
  PReport r;
  Eigen::ComplexEigenSolver<Mat> es(s, false);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::EigenFailure, "eigensolver did not converge");
  r.resolvent_ok = true;
  for (Eigen::Index i = 0; i < m; ++i) r.resolvent_ok = r.resolvent_ok && distance_to_cut(es.eigenvalues()[i]) > tol.abs_tol;
  const cplx alpha = s.trace() / static_cast<double>(m);
  const bool scalar = max_abs(s - alpha * identity(m)) <= tol.bound(std::abs(alpha));
  r.tight = r.resolvent_ok && scalar;
  r.parseval = scalar && std::abs(alpha - 1.0) <= tol.bound(1.0);
  if (!r.resolvent_ok) return r;
  Mat root;
  try {
    root = principal_power(s, 1.0 / pf.p, tol);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotDiagonalizable) return r;
    throw;
  }
  const Mat root_inv = root.inverse();
  const NormInterval fwd = pnorm_estimate(root, pf.p, samples, seed);
  const NormInterval bwd = pnorm_estimate(root_inv, pf.p, samples, seed);
  r.upper_b = NormInterval{std::pow(fwd.lower, pf.p), std::pow(fwd.upper, pf.p)};
  r.lower_a = NormInterval{1.0 / std::pow(bwd.upper, pf.p), 1.0 / std::pow(bwd.lower, pf.p)};
  return r;
}

struct POrthonormalCheck {
  bool consistent = true;
  std::optional<Vec> witness;
};

// Searches for coefficients with ||sum c_j x_j||_p^p != sum |c_j|^p: every
// +-1 pattern when n <= 12, then `trials` random vectors. Finding none is
// evidence, not proof.
inline POrthonormalCheck p_orthonormal_check(const Mat& vectors, double p, int trials = 256, std::uint64_t seed = 0,
                                             const Tolerance& tol = {}) {
  if (!(p >= 1.0)) throw Error(ErrorKind::BadExponent, "p must be >= 1");
  const Eigen::Index n = vectors.cols();
  POrthonormalCheck out;
  auto violates = [&](const Vec& c) {
    double want = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) want += std::pow(std::abs(c[j]), p);
    const double got = std::pow(pnorm(vectors * c, p), p);
    return std::abs(got - want) > tol.bound(want);
  };
  auto fail = [&](const Vec& c) {
    out.consistent = false;
    out.witness = c;
    return out;
  };
  for (Eigen::Index j = 0; j < n; ++j)
    if (violates(Vec::Unit(n, j))) return fail(Vec::Unit(n, j));
  if (n <= 12) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Vec c(n);
      for (Eigen::Index j = 0; j < n; ++j) c[j] = (mask >> j) & 1u ? -1.0 : 1.0;
      if (violates(c)) return fail(c);
    }
  }
  const bool real_input = is_real_valued(vectors);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  for (int t = 0; t < trials; ++t) {
    Vec c(n);
    for (Eigen::Index j = 0; j < n; ++j) c[j] = real_input ? cplx(g(rng), 0.0) : cplx(g(rng), g(rng));
    if (violates(c)) return fail(c);
  }
  return out;
}

struct RieszBounds {
  NormInterval a;
  NormInterval b;
};

// a sum|c_j|^p <= ||sum c_j x_j||^p <= b sum|c_j|^p with optimal a, b
// bracketed. The certified lower end of a comes from the pseudo-inverse as a
// left inverse; its upper end is the smallest ratio seen while sampling.
inline RieszBounds riesz_p_bounds(const Mat& vectors, double p, int trials = 256, std::uint64_t seed = 0,
                                  const Tolerance& tol = {}) {
  if (!(p >= 1.0)) throw Error(ErrorKind::BadExponent, "p must be >= 1");
  const Eigen::Index n = vectors.cols();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "no vectors");
  if (numerical_rank(vectors, tol) < n) throw Error(ErrorKind::RankDeficient, "vectors are linearly dependent");
  RieszBounds out;
  if (p == 2.0) {
    const auto sv = singular_values(vectors);
    const double lo = sv[n - 1] * sv[n - 1], hi = sv[0] * sv[0];
    out.a = {lo, lo};
    out.b = {hi, hi};
    return out;
  }
  const NormInterval fwd = pnorm_estimate(vectors, p, trials, seed);
  out.b = {std::pow(fwd.lower, p), std::pow(fwd.upper, p)};
  const Mat left = vectors.completeOrthogonalDecomposition().pseudoInverse();
  const NormInterval back = pnorm_estimate(left, p, trials, seed);
  out.a.lower = 1.0 / std::pow(back.upper, p);

  double best = INFINITY;
  auto consider = [&](const Vec& c) {
    const double nc = pnorm(c, p);
    if (nc == 0.0) return;
    best = std::min(best, std::pow(pnorm(vectors * c, p) / nc, p));
  };
  for (Eigen::Index j = 0; j < n; ++j) consider(Vec::Unit(n, j));
  if (n <= 12) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Vec c(n);
      for (Eigen::Index j = 0; j < n; ++j) c[j] = (mask >> j) & 1u ? -1.0 : 1.0;
      consider(c);
    }
  }
  const bool real_input = is_real_valued(vectors);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> g;
  for (int t = 0; t < trials; ++t) {
    Vec c(n);
    for (Eigen::Index j = 0; j < n; ++j) c[j] = real_input ? cplx(g(rng), 0.0) : cplx(g(rng), g(rng));
    consider(c);
  }
  out.a.upper = std::max(best, out.a.lower);
  return out;
}

struct PaleyWiener {
  double lambda_upper = 0.0;
  bool concluded = false;
  std::optional<bool> riesz;  // present when concluded
};

// ||sum c_j (x_j - y_j)|| <= lambda ||c||_p with lambda < 1 around a
// p-orthonormal base makes {y_j} a Riesz p-basis.
inline PaleyWiener paley_wiener_check(const Mat& base, const Mat& y, double p, int trials = 256,
                                      std::uint64_t seed = 0, const Tolerance& tol = {}) {
  if (base.rows() != y.rows() || base.cols() != y.cols())
    throw Error(ErrorKind::ShapeMismatch, "base and perturbed families must share shape");
  if (!p_orthonormal_check(base, p, trials, seed, tol).consistent)
    throw Error(ErrorKind::BaseNotOrthonormal, "base family is not p-orthonormal");
  PaleyWiener out;
  const Mat diff = base - y;
  out.lambda_upper = pnorm_estimate(diff, p, trials, seed).upper;
  out.concluded = out.lambda_upper < 1.0;
  if (out.concluded) {
    const Mat d = base.completeOrthogonalDecomposition().pseudoInverse() * diff;
    const Mat gap = identity(d.rows()) - d;
    out.riesz = is_invertible(gap, tol) && numerical_rank(y, tol) == y.cols();
  }
  return out;
}

struct PDual {
  PFramePair dual;
  bool is_dual = false;
};

inline bool p_is_dual(const PFramePair& pf, const PFramePair& gq) {
  const Tolerance& tol = pf.tol;
  const Eigen::Index m = pf.dim();
  const double e1 = max_abs(gq.tau * pf.f - identity(m));
  const double e2 = max_abs(pf.tau * gq.f - identity(m));
  const double sc = std::max({1.0, max_abs(gq.tau) * max_abs(pf.f), max_abs(pf.tau) * max_abs(gq.f)}) *
                    static_cast<double>(pf.count());
  return e1 <= tol.bound(sc) && e2 <= tol.bound(sc);
}

inline PDual p_canonical_dual(const PFramePair& pf) {
  const auto rep = p_verify(pf, 0, 0);
  const Mat s = pf.frame_operator();
  if (!rep.resolvent_ok || !is_invertible(s, pf.tol))
    throw Error(ErrorKind::NotPFrame, "S has spectrum on (-inf, 0] or is singular");
  const Mat sinv = s.inverse();
  Mat f = pf.f * sinv, t = sinv * pf.tau;
  if (pf.field == Field::Real) {
    f = f.real().cast<cplx>();
    t = t.real().cast<cplx>();
  }
  PDual out{PFramePair(pf.p, pf.field, f, t, pf.tol), false};
  out.is_dual = p_is_dual(pf, out.dual);
  return out;
}

struct FourLaws {
  bool ineq4_ok = false;
  double ineq4_lhs = 0.0;
  double ineq4_rhs = 0.0;
  bool pl4_ok = false;
  double pl4_lhs = 0.0;
  double pl4_rhs = 0.0;
};

inline FourLaws four_laws_check(const Vec& x, const Vec& y, const Tolerance& tol = {}) {
  if (x.size() != y.size()) throw Error(ErrorKind::DimMismatch, "vectors differ in length");
  const double nx = pnorm(x, 4.0), ny = pnorm(y, 4.0);
  const double sum4 = std::pow(pnorm(x + y, 4.0), 4.0), dif4 = std::pow(pnorm(x - y, 4.0), 4.0);
  FourLaws r;
  r.ineq4_lhs = (sum4 - dif4) / 8.0;
  r.ineq4_rhs = (nx * nx + ny * ny) * nx * ny;
  r.ineq4_ok = r.ineq4_lhs <= r.ineq4_rhs + tol.bound(std::max(sum4, dif4));
  r.pl4_lhs = sum4 + dif4;
  r.pl4_rhs = 2.0 * (std::pow(nx, 4.0) + std::pow(ny, 4.0)) + 12.0 * nx * nx * ny * ny;
  r.pl4_ok = r.pl4_lhs <= r.pl4_rhs + tol.bound(r.pl4_rhs);
  return r;
}

struct LineProjection {
  double t_star = 0.0;
  double dist = 0.0;
};

// Minimizes ||x - t y||_4 over real t. The quartic is flat near its minimum,
// so the search bisects on the sign of the derivative instead of comparing
// function values.
inline LineProjection project_line_l4(const Vec& x, const Vec& y, const Tolerance& tol = {}) {
  if (x.size() != y.size()) throw Error(ErrorKind::DimMismatch, "vectors differ in length");
  if (!is_real_valued(x) || !is_real_valued(y)) throw Error(ErrorKind::NotReal, "project_line_l4 is real-valued");
  const Eigen::VectorXd xr = x.real(), yr = y.real();
  const double ny = yr.array().pow(4).sum();
  if (!(ny > 0.0)) throw Error(ErrorKind::ZeroDirection, "direction vector is zero");
  auto slope = [&](double t) { return -4.0 * ((xr - t * yr).array().pow(3) * yr.array()).sum(); };
  const double bound = 1.0 + 2.0 * pnorm(x, 4.0) / std::pow(ny, 0.25);
  double lo = -bound, hi = bound;
  for (int it = 0; it < 200 && hi - lo > tol.abs_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) > 0.0 ? hi : lo) = mid;
  }
  LineProjection r;
  r.t_star = 0.5 * (lo + hi);
  r.dist = pnorm((xr - r.t_star * yr).cast<cplx>(), 4.0);
  return r;
}

struct BanachFormulas {
  cplx dim_sum;
  bool dim_ok = false;
  std::optional<cplx> trace_lhs;  // trace(M)
  std::optional<cplx> trace_rhs;  // sum_j f_j(M tau_j)
  std::optional<bool> trace_ok;
};

inline BanachFormulas banach_formulas(const PFramePair& pf, const std::optional<Mat>& m = std::nullopt) {
  const Tolerance& tol = pf.tol;
  const Eigen::Index dim = pf.dim();
  if (max_abs(pf.frame_operator() - identity(dim)) > tol.bound(1.0))
    throw Error(ErrorKind::NotParseval, "banach_formulas needs T F = I");
  BanachFormulas r;
  r.dim_sum = (pf.f * pf.tau).trace();
  r.dim_ok = std::abs(r.dim_sum - static_cast<double>(dim)) <= tol.bound(static_cast<double>(dim));
  if (m) {
    if (m->rows() != dim || m->cols() != dim) throw Error(ErrorKind::ShapeMismatch, "M must be m x m");
    r.trace_lhs = m->trace();
    r.trace_rhs = (pf.f * *m * pf.tau).trace();
    r.trace_ok = std::abs(*r.trace_lhs - *r.trace_rhs) <= tol.bound(opnorm2(*m) * static_cast<double>(dim));
  }
  return r;
}

}  // namespace framekit

#endif  // FRAMEKIT_PFRAMES_HPP_
