#ifndef FRAMEKIT_ANALYSIS_HPP_
#define FRAMEKIT_ANALYSIS_HPP_

// Algorithms and certificates on frame pairs: the reconstruction iteration,
// tight extensions, the span characterization, trace/dimension/variation
// identities, perturbation certificates and real <-> complex conversion.

#include "framekit/frame_core.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace framekit {

struct IterationTrace {
  std::vector<Vec> iterates;
  std::vector<double> errors;
  std::vector<double> bound_curve;
  double lower_a = 0.0;
  double upper_b = 0.0;
};

// h_0 = 0, h_n = h_{n-1} + 2/(a+b) S (h - h_{n-1}); ||h_n - h|| is bounded by
// ((b-a)/(b+a))^n ||h||.
inline IterationTrace iterate_reconstruct(const FramePair& fp, const Vec& h, int steps) {
  const auto rep = verify(fp);
  if (!rep.is_frame) throw Error(ErrorKind::NotAFrame, "iterate_reconstruct: input is not a frame");
  if (h.size() != fp.dim()) throw Error(ErrorKind::DimMismatch, "vector dimension differs from the frame");
  if (steps < 0) throw Error(ErrorKind::InvalidArgument, "steps must be nonnegative");
  const Mat s = frame_operator(fp);
  const double a = rep.lower_a, b = rep.upper_b;
  const double relax = 2.0 / (a + b);
  const double ratio = (b - a) / (b + a);
  IterationTrace tr;
  tr.lower_a = a;
  tr.upper_b = b;
  Vec cur = Vec::Zero(h.size());
  const double hn = h.norm();
  for (int n = 0; n <= steps; ++n) {
    if (n > 0) cur = cur + relax * (s * (h - cur));
    tr.iterates.push_back(cur);
    tr.errors.push_back((cur - h).norm());
    tr.bound_curve.push_back(std::pow(ratio, n) * hn);
  }
  return tr;
}

// Appends y_l = (lambda I - S)^{1/2} e_l, l = 1..m, to both families.
inline FramePair extend_tight_append(const FramePair& fp, double lambda) {
  const auto rep = verify(fp);
  if (!rep.is_bessel) throw Error(ErrorKind::NotBessel, "extend_tight_append: input is not Bessel");
  const auto he = hermitian_eigen(frame_operator(fp));
  const double top = he.values[he.values.size() - 1];
  if (!(lambda > top + fp.tol.bound(top)))
    throw Error(ErrorKind::LambdaTooSmall, "lambda must exceed the norm of the frame operator");
  Mat b = hermitian_apply(he, [lambda](double v) { return std::sqrt(std::max(lambda - v, 0.0)); });
  if (fp.field == Field::Real) b = b.real().cast<cplx>();
  const Eigen::Index m = fp.dim(), n = fp.count();
  Mat x(m, n + m), t(m, n + m);
  x << fp.x, b;
  t << fp.tau, b;
  return FramePair(fp.field, x, t, fp.tol);
}

// For a self-dual frame, appends sqrt(l_1 - l_j) v_j for every eigenpair
// (l_j, v_j) of S strictly below the top eigenvalue l_1.
inline FramePair extend_tight_minimal(const FramePair& fp) {
  detail::require_frame(fp, "extend_tight_minimal");
  if (max_abs(fp.x - fp.tau) > fp.tol.bound(max_abs(fp.x)))
    throw Error(ErrorKind::NotSelfPair, "extend_tight_minimal needs x_j = tau_j");
  const auto he = hermitian_eigen(frame_operator(fp));
  const Eigen::Index m = fp.dim();
  const double top = he.values[m - 1];
  std::vector<Vec> extra;
  for (Eigen::Index j = 0; j < m; ++j) {
    const double gap = top - he.values[j];
    if (gap > fp.tol.bound(top)) extra.push_back(std::sqrt(gap) * he.vectors.col(j));
  }
  const auto k = static_cast<Eigen::Index>(extra.size());
  Mat x(m, fp.count() + k);
  x.leftCols(fp.count()) = fp.x;
  for (Eigen::Index j = 0; j < k; ++j) x.col(fp.count() + j) = extra[static_cast<std::size_t>(j)];
  if (fp.field == Field::Real) x = x.real().cast<cplx>();
  return FramePair(fp.field, x, x, fp.tol);
}

struct SpanResult {
  bool is_frame = false;
  // use_tau[j] tells whether tau_j (rather than x_j) was selected.
  std::optional<std::vector<bool>> witness;
};

// Under tau_j x_j^* = x_j tau_j^* >= 0 for every j, the pair is a frame iff
// every mixed selection of one vector from each {x_j, tau_j} spans K^m.
inline SpanResult span_characterization(const FramePair& fp) {
  const Eigen::Index m = fp.dim(), n = fp.count();
  if (n > 20) throw Error(ErrorKind::TooManyVectors, "span characterization enumerates 2^n selections; n <= 20");
  const Tolerance& tol = fp.tol;
  for (Eigen::Index j = 0; j < n; ++j) {
    const Mat r = fp.tau.col(j) * fp.x.col(j).adjoint();
    const double sc = fp.tau.col(j).norm() * fp.x.col(j).norm();
    if (max_abs(r - r.adjoint()) > tol.bound(sc) || !spectral(r, tol).is_psd)
      throw Error(ErrorKind::HypothesisFails, "tau_j x_j^* is not Hermitian positive for j = " + std::to_string(j));
  }
  double scale = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) scale = std::max({scale, fp.x.col(j).norm(), fp.tau.col(j).norm()});
  SpanResult out;
  Mat sel(m, n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (Eigen::Index j = 0; j < n; ++j) sel.col(j) = (mask >> j) & 1u ? fp.tau.col(j) : fp.x.col(j);
    const auto sv = singular_values(sel);
    const Eigen::Index k = std::min(m, n);
    const bool spans = n >= m && sv[k - 1] > tol.bound(scale);
    if (!spans) {
      std::vector<bool> w(static_cast<std::size_t>(n));
      for (Eigen::Index j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = (mask >> j) & 1u;
      out.witness = w;
      return out;
    }
  }
  out.is_frame = true;
  return out;
}

struct FormulasReport {
  cplx trace_s;      // trace of S computed directly
  cplx sum_inner;    // sum_j <x_j, tau_j>
  bool trace_ok = false;
  cplx trace_s2;     // trace of S^2 computed directly
  cplx double_sum;   // sum_{j,k} <tau_j, x_k> <tau_k, x_j>
  bool trace_s2_ok = false;
  std::optional<bool> variation_ok;    // present iff tight
  std::optional<bool> dim_formula_ok;  // present iff Parseval
  std::optional<double> equal_diag_b;  // b m / n, present iff tight with equal <x_j, tau_j>
  std::optional<bool> equal_diag_ok;
};

inline FormulasReport formulas_report(const FramePair& fp) {
  const Tolerance& tol = fp.tol;
  const Mat s = frame_operator(fp);
  const Mat cross = fp.tau.adjoint() * fp.x;  // (k, j) = <x_j, tau_k>
  const auto m = static_cast<double>(fp.dim());
  const auto n = static_cast<double>(fp.count());
  FormulasReport r;
  r.trace_s = s.trace();
  r.sum_inner = cross.diagonal().sum();
  r.trace_s2 = (s * s).trace();
  // <tau_j, x_k> <tau_k, x_j> = conj(cross(j, k)) conj(cross(k, j)).
  r.double_sum = 0.0;
  for (Eigen::Index j = 0; j < cross.rows(); ++j)
    for (Eigen::Index k = 0; k < cross.cols(); ++k) r.double_sum += std::conj(cross(j, k)) * std::conj(cross(k, j));
  r.trace_ok = std::abs(r.trace_s - r.sum_inner) <= tol.bound(std::abs(r.trace_s));
  r.trace_s2_ok = std::abs(r.trace_s2 - r.double_sum) <= tol.bound(std::abs(r.trace_s2));
  const auto rep = verify(fp);
  if (rep.tight) {
    const cplx rhs = r.sum_inner * r.sum_inner / m;
    r.variation_ok = std::abs(r.double_sum - rhs) <= tol.bound(std::abs(rhs));
    const cplx first = cross(0, 0);
    bool equal = true;
    for (Eigen::Index j = 0; j < cross.rows(); ++j)
      equal = equal && std::abs(cross(j, j) - first) <= tol.bound(std::abs(first));
    if (equal) {
      r.equal_diag_b = rep.upper_b * m / n;
      r.equal_diag_ok = std::abs(*r.equal_diag_b - first) <= tol.bound(std::abs(first));
    }
  }
  if (rep.parseval) r.dim_formula_ok = std::abs(r.sum_inner - m) <= tol.bound(m);
  return r;
}

struct TraceFormula {
  cplx lhs;       // trace(M)
  cplx rhs;       // sum_j tau_j^* M x_j
  cplx mirrored;  // sum_j x_j^* M tau_j
  bool ok = false;
};

inline TraceFormula trace_formula(const FramePair& fp, const Mat& m) {
  detail::require_parseval(fp, "trace_formula");
  if (m.rows() != fp.dim() || m.cols() != fp.dim()) throw Error(ErrorKind::ShapeMismatch, "M must be m x m");
  TraceFormula r;
  r.lhs = m.trace();
  r.rhs = (fp.tau.adjoint() * m * fp.x).trace();
  r.mirrored = (fp.x.adjoint() * m * fp.tau).trace();
  const double cut = fp.tol.bound(opnorm2(m) * static_cast<double>(fp.dim()));
  r.ok = std::abs(r.lhs - r.rhs) <= cut && std::abs(r.lhs - r.mirrored) <= cut;
  return r;
}

// tau_j = c_j x_j with {x_j} orthonormal: I - sum (2 - c_j) c_j x_j x_j^* >= 0.
inline bool weighted_onb_check(const FramePair& fp, const std::vector<double>& c) {
  const Tolerance& tol = fp.tol;
  if (static_cast<Eigen::Index>(c.size()) != fp.count())
    throw Error(ErrorKind::CountMismatch, "one weight per vector is required");
  for (double w : c)
    if (w > 2.0) throw Error(ErrorKind::WeightTooLarge, "weights must not exceed 2");
  if (max_abs(fp.x.adjoint() * fp.x - identity(fp.count())) > tol.bound(1.0))
    throw Error(ErrorKind::NotWeightedOnb, "{x_j} is not orthonormal");
  for (Eigen::Index j = 0; j < fp.count(); ++j)
    if (max_abs(fp.tau.col(j) - c[static_cast<std::size_t>(j)] * fp.x.col(j)) > tol.bound(max_abs(fp.tau.col(j))))
      throw Error(ErrorKind::NotWeightedOnb, "tau_j differs from c_j x_j");
  Mat d = identity(fp.dim());
  for (Eigen::Index j = 0; j < fp.count(); ++j) {
    const double w = c[static_cast<std::size_t>(j)];
    d -= (2.0 - w) * w * fp.x.col(j) * fp.x.col(j).adjoint();
  }
  return spectral(d, tol).is_psd;
}

enum class PerturbKind { Quadratic, NormSum, SampledLinear, SampledBessel };

inline std::string_view perturb_kind_name(PerturbKind k) {
  switch (k) {
    case PerturbKind::Quadratic: return "Quadratic";
    case PerturbKind::NormSum: return "NormSum";
    case PerturbKind::SampledLinear: return "SampledLinear";
    case PerturbKind::SampledBessel: return "SampledBessel";
  }
  return "Quadratic";
}

struct PerturbCertificate {
  PerturbKind kind = PerturbKind::Quadratic;
  bool hypothesis_ok = false;
  double predicted_lower = 0.0;
  double predicted_upper = 0.0;
  bool actual_is_frame = false;
  double actual_lower = 0.0;
  double actual_upper = 0.0;
  // Actual bounds inside the predicted window (vacuously true when the
  // hypothesis fails or, for sampled kinds, the perturbed pair is no frame).
  bool window_ok = true;
  std::optional<Vec> counterexample;  // sampled kinds only
};

namespace detail {

// tau_j y_j^* Hermitian and positive for every j.
inline bool perturb_side_conditions(const FramePair& fp, const Mat& y) {
  const Tolerance& tol = fp.tol;
  for (Eigen::Index j = 0; j < fp.count(); ++j) {
    const Mat r = fp.tau.col(j) * y.col(j).adjoint();
    const double sc = fp.tau.col(j).norm() * y.col(j).norm();
    if (max_abs(r - r.adjoint()) > tol.bound(sc)) return false;
    if (!spectral(r, tol).is_psd) return false;
  }
  return true;
}

struct PerturbContext {
  Mat s, sinv;
  double sinv_norm, theta_x_norm, theta_tau_norm, theta_tau_sinv_norm;
  FrameReport rep;
};

inline PerturbContext perturb_context(const FramePair& fp, const Mat& y, const char* who) {
  PerturbContext c;
  c.rep = verify(fp);
  if (!c.rep.is_frame) throw Error(ErrorKind::NotAFrame, std::string(who) + ": input is not a frame");
  if (y.rows() != fp.dim() || y.cols() != fp.count())
    throw Error(ErrorKind::ShapeMismatch, std::string(who) + ": Y must be m x n");
  c.s = frame_operator(fp);
  c.sinv = frame_inverse(c.s);
  c.sinv_norm = opnorm2(c.sinv);
  c.theta_x_norm = opnorm2(fp.x);
  c.theta_tau_norm = opnorm2(fp.tau);
  c.theta_tau_sinv_norm = opnorm2(fp.tau.adjoint() * c.sinv);
  return c;
}

inline void fill_actual(PerturbCertificate& cert, const FramePair& fp, const Mat& y, bool check_window) {
  const Field f = fp.field == Field::Real && is_real_valued(y) ? Field::Real : Field::Complex;
  const auto rep = verify(FramePair(f, y, fp.tau, fp.tol));
  cert.actual_is_frame = rep.is_frame;
  cert.actual_lower = rep.lower_a;
  cert.actual_upper = rep.upper_b;
  if (!check_window) return;
  const double r = fp.tol.rel_tol, ab = fp.tol.abs_tol;
  cert.window_ok = rep.is_frame && cert.actual_lower >= cert.predicted_lower * (1.0 - r) - ab &&
                   cert.actual_upper <= cert.predicted_upper * (1.0 + r) + ab;
}

}  // namespace detail

// Sum_j ||x_j - y_j|| ||S^{-1} tau_j|| < 1 together with the alignment
// conditions certifies that (Y, T) is a frame.
inline PerturbCertificate perturb_quadratic(const FramePair& fp, const Mat& y) {
  const auto c = detail::perturb_context(fp, y, "perturb_quadratic");
  PerturbCertificate cert;
  cert.kind = PerturbKind::Quadratic;
  double beta = 0.0, sq = 0.0;
  for (Eigen::Index j = 0; j < fp.count(); ++j) {
    const double dj = (fp.x.col(j) - y.col(j)).norm();
    beta += dj * (c.sinv * fp.tau.col(j)).norm();
    sq += dj * dj;
  }
  cert.hypothesis_ok = detail::perturb_side_conditions(fp, y) && beta < 1.0;
  cert.predicted_lower = (1.0 - beta) / c.sinv_norm;
  // ||theta_y|| <= ||theta_x|| + (sum ||x_j - y_j||^2)^{1/2} by Cauchy-Schwarz.
  cert.predicted_upper = c.theta_tau_norm * (std::sqrt(sq) + c.theta_x_norm);
  detail::fill_actual(cert, fp, y, cert.hypothesis_ok);
  return cert;
}

inline PerturbCertificate perturb_normsum(const FramePair& fp, const Mat& y) {
  const auto c = detail::perturb_context(fp, y, "perturb_normsum");
  PerturbCertificate cert;
  cert.kind = PerturbKind::NormSum;
  double r = 0.0;
  for (Eigen::Index j = 0; j < fp.count(); ++j) r += (fp.x.col(j) - y.col(j)).squaredNorm();
  const double k = c.theta_tau_sinv_norm;
  cert.hypothesis_ok = detail::perturb_side_conditions(fp, y) && r * k * k < 1.0;
  cert.predicted_lower = (1.0 - std::sqrt(r) * k) / c.sinv_norm;
  cert.predicted_upper = c.theta_tau_norm * (c.theta_x_norm + std::sqrt(r));
  detail::fill_actual(cert, fp, y, cert.hypothesis_ok);
  return cert;
}

struct SampledParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  int samples = 1000;
  std::uint64_t seed = 0;
};

// The (alpha, beta, gamma) hypotheses quantify over all coefficient vectors
// (SampledLinear) or all h (SampledBessel). They are searched for violations
// by random sampling; hypothesis_ok means "not falsified", not "proved".
inline PerturbCertificate perturb_sampled(const FramePair& fp, const Mat& y, PerturbKind kind,
                                          const SampledParams& prm) {
  if (kind != PerturbKind::SampledLinear && kind != PerturbKind::SampledBessel)
    throw Error(ErrorKind::InvalidArgument, "perturb_sampled handles the sampled kinds only");
  const auto c = detail::perturb_context(fp, y, "perturb_sampled");
  const double al = prm.alpha, be = prm.beta, ga = prm.gamma;
  if (al < 0 || be < 0 || ga < 0) throw Error(ErrorKind::BadParams, "alpha, beta, gamma must be nonnegative");
  const double a = c.rep.lower_a, b = c.rep.upper_b;
  const Tolerance& tol = fp.tol;
  PerturbCertificate cert;
  cert.kind = kind;
  const bool cplx_field = fp.field == Field::Complex || !is_real_valued(y);
  std::mt19937_64 rng(prm.seed);
  std::normal_distribution<double> g;
  std::bernoulli_distribution keep(0.7);
  auto draw = [&](Eigen::Index len, bool sparse) {
    Vec v(len);
    for (Eigen::Index i = 0; i < len; ++i) {
      v[i] = cplx_field ? cplx(g(rng), g(rng)) : cplx(g(rng), 0.0);
      if (sparse && !keep(rng)) v[i] = 0.0;
    }
    return v;
  };

  bool falsified = false;
  if (kind == PerturbKind::SampledLinear) {
    if (std::max(al + ga * c.theta_tau_sinv_norm, be) >= 1.0)
      throw Error(ErrorKind::BadParams, "max{alpha + gamma ||theta_tau S^-1||, beta} must be < 1");
    falsified = !detail::perturb_side_conditions(fp, y);
    const Mat diff = fp.x - y;
    auto violates = [&](const Vec& cf) {
      const double lhs = (diff * cf).norm();
      const double rhs = al * (fp.x * cf).norm() + ga * cf.norm() + be * (y * cf).norm();
      return lhs > rhs + tol.bound(rhs);
    };
    for (Eigen::Index j = 0; !falsified && j < fp.count(); ++j)
      if (violates(Vec::Unit(fp.count(), j))) {
        falsified = true;
        cert.counterexample = Vec::Unit(fp.count(), j);
      }
    for (int s = 0; !falsified && s < prm.samples; ++s) {
      const Vec cf = draw(fp.count(), s % 2 == 1);
      if (violates(cf)) {
        falsified = true;
        cert.counterexample = cf;
      }
    }
    cert.predicted_lower = (1.0 - (al + ga * c.theta_tau_sinv_norm)) / ((1.0 + be) * c.sinv_norm);
    cert.predicted_upper = c.theta_tau_norm * ((1.0 + al) * c.theta_x_norm + ga) / (1.0 - be);
  } else {
    if (std::max(al + ga / std::sqrt(a), be) >= 1.0)
      throw Error(ErrorKind::BadParams, "max{alpha + gamma / sqrt(a), beta} must be < 1");
    const Mat sy = fp.tau * y.adjoint();
    // <S_y h, h> >= 0 for every h: Hermitian positive over C, positive
    // symmetric part over R.
    const Mat herm = cplx_field ? sy : Mat(0.5 * (sy + sy.transpose()));
    const auto srep = spectral(herm, tol);
    falsified = !srep.is_psd;
    const Mat sdiff = c.s - sy;
    auto violates = [&](const Vec& h) {
      const double lhs = std::sqrt(std::abs(h.dot(sdiff * h)));
      const double qx = std::abs(h.dot(c.s * h));
      const double qy = std::abs(h.dot(sy * h));
      const double rhs = al * std::sqrt(qx) + be * std::sqrt(qy) + ga * h.norm();
      return lhs > rhs + tol.bound(rhs);
    };
    for (Eigen::Index j = 0; !falsified && j < fp.dim(); ++j)
      if (violates(Vec::Unit(fp.dim(), j))) {
        falsified = true;
        cert.counterexample = Vec::Unit(fp.dim(), j);
      }
    for (int s = 0; !falsified && s < prm.samples; ++s) {
      const Vec h = draw(fp.dim(), false);
      if (violates(h)) {
        falsified = true;
        cert.counterexample = h;
      }
    }
    const double ql = (al + be + ga / std::sqrt(a)) / (1.0 + be);
    const double qu = (al + be + ga / std::sqrt(b)) / (1.0 - be);
    cert.predicted_lower = a * (1.0 - ql) * (1.0 - ql);
    cert.predicted_upper = b * (1.0 + qu) * (1.0 + qu);
  }
  cert.hypothesis_ok = !falsified;
  detail::fill_actual(cert, fp, y, false);
  if (cert.hypothesis_ok && cert.actual_is_frame) detail::fill_actual(cert, fp, y, true);
  return cert;
}

// Same columns retagged complex; needs sum_j tau_j x_j^T symmetric.
inline FramePair real_to_complex(const FramePair& fp) {
  if (fp.field != Field::Real) throw Error(ErrorKind::NotReal, "real_to_complex needs a real pair");
  const Mat s = frame_operator(fp);
  if (max_abs(s - s.transpose()) > fp.tol.bound(max_abs(s)))
    throw Error(ErrorKind::HypothesisFails, "sum tau_j x_j^T is not symmetric");
  return FramePair(Field::Complex, fp.x, fp.tau, fp.tol);
}

// ({Re x_j} u {Im x_j}, {Re tau_j} u {Im tau_j}) with real parts first; needs
// sum Im(tau_j) Re(x_j)^T = sum Re(tau_j) Im(x_j)^T.
inline FramePair complex_to_real(const FramePair& fp) {
  const Eigen::MatrixXd xr = fp.x.real(), xi = fp.x.imag(), tr = fp.tau.real(), ti = fp.tau.imag();
  const Eigen::MatrixXd lhs = ti * xr.transpose();
  const Eigen::MatrixXd rhs = tr * xi.transpose();
  const double scale = std::max(lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff());
  if ((lhs - rhs).cwiseAbs().maxCoeff() > fp.tol.bound(scale))
    throw Error(ErrorKind::HypothesisFails, "imaginary part of the frame operator does not vanish");
  const Eigen::Index m = fp.dim(), n = fp.count();
  Eigen::MatrixXd x(m, 2 * n), t(m, 2 * n);
  x << xr, xi;
  t << tr, ti;
  return FramePair(Field::Real, x.cast<cplx>(), t.cast<cplx>(), fp.tol);
}

}  // namespace framekit

#endif  // FRAMEKIT_ANALYSIS_HPP_
