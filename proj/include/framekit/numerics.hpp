#ifndef FRAMEKIT_NUMERICS_HPP_
#define FRAMEKIT_NUMERICS_HPP_

// Dense spectral primitives shared by every other module: Hermitian tests,
// eigendecompositions, Hermitian functional calculus, principal fractional
// powers and l^p operator-norm intervals.

#include "framekit/types.hpp"

#include <random>
#include <vector>

namespace framekit {

struct SpectralReport {
  bool is_hermitian = false;
  std::vector<cplx> eigenvalues;  // ascending by real part
  double min_real_eig = 0.0;
  bool is_psd = false;
  bool is_pd = false;
};

struct NormInterval {
  double lower = 0.0;
  double upper = 0.0;
};

inline void require_square(const Mat& m, const char* who) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::NonSquare, std::string(who) + ": matrix is " + std::to_string(m.rows()) +
                                          "x" + std::to_string(m.cols()));
}

inline double hermitian_residual(const Mat& m) { return max_abs(m - m.adjoint()); }

inline bool is_hermitian(const Mat& m, const Tolerance& tol) {
  return m.rows() == m.cols() && hermitian_residual(m) <= tol.bound(max_abs(m));
}

// Eigendecomposition of the Hermitian part of m.
struct HermitianEigen {
  RealVec values;  // ascending
  Mat vectors;     // columns are orthonormal eigenvectors
};

inline HermitianEigen hermitian_eigen(const Mat& m) {
  require_square(m, "hermitian_eigen");
  const Mat h = 0.5 * (m + m.adjoint());
  if (is_real_valued(h)) {
    // Keeps eigenvectors real for real symmetric input.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.real());
    if (es.info() != Eigen::Success) throw Error(ErrorKind::EigenFailure, "Hermitian eigensolver did not converge");
    return {es.eigenvalues(), es.eigenvectors().cast<cplx>()};
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::EigenFailure, "Hermitian eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

inline SpectralReport spectral(const Mat& m, const Tolerance& tol = {}) {
  require_square(m, "spectral");
  SpectralReport r;
  r.is_hermitian = is_hermitian(m, tol);
  if (m.rows() == 0) return r;
  if (r.is_hermitian) {
    const auto he = hermitian_eigen(m);
    for (Eigen::Index i = 0; i < he.values.size(); ++i) r.eigenvalues.emplace_back(he.values[i], 0.0);
  } else {
    Eigen::ComplexEigenSolver<Mat> es(m, false);
    if (es.info() != Eigen::Success) throw Error(ErrorKind::EigenFailure, "eigensolver did not converge");
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) r.eigenvalues.push_back(es.eigenvalues()[i]);
    std::sort(r.eigenvalues.begin(), r.eigenvalues.end(),
              [](cplx a, cplx b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); });
  }
  r.min_real_eig = r.eigenvalues.front().real();
  r.is_psd = r.is_hermitian && r.min_real_eig >= -tol.abs_tol;
  r.is_pd = r.is_hermitian && r.min_real_eig > tol.abs_tol;
  return r;
}

// f applied to the spectrum of a Hermitian matrix.
template <typename F>
Mat hermitian_apply(const HermitianEigen& he, F&& f) {
  RealVec d(he.values.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d[i] = f(he.values[i]);
  return he.vectors * d.cast<cplx>().asDiagonal() * he.vectors.adjoint();
}

inline Mat herm_sqrt(const Mat& m, const Tolerance& tol = {}) {
  const auto rep = spectral(m, tol);
  if (!rep.is_psd) throw Error(ErrorKind::NotPsd, "herm_sqrt needs a Hermitian positive semidefinite matrix");
  const auto he = hermitian_eigen(m);
  return hermitian_apply(he, [](double v) { return v <= 0.0 ? 0.0 : std::sqrt(v); });
}

// Distance from z to the closed half-line (-inf, 0].
inline double distance_to_cut(cplx z) {
  return z.real() <= 0.0 ? std::abs(z.imag()) : std::abs(z);
}

inline Mat principal_power(const Mat& m, double alpha, const Tolerance& tol = {}) {
  require_square(m, "principal_power");
  const Eigen::Index n = m.rows();
  if (n == 0) return m;
  if (is_hermitian(m, tol)) {
    const auto he = hermitian_eigen(m);
    for (Eigen::Index i = 0; i < n; ++i)
      if (distance_to_cut(he.values[i]) <= tol.abs_tol)
        throw Error(ErrorKind::SpectrumOnCut, "eigenvalue " + std::to_string(he.values[i]) + " lies on (-inf, 0]");
    return hermitian_apply(he, [alpha](double v) { return std::pow(v, alpha); });
  }
  Eigen::ComplexEigenSolver<Mat> es(m, true);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::EigenFailure, "eigensolver did not converge");
  const Vec& lam = es.eigenvalues();
  for (Eigen::Index i = 0; i < n; ++i)
    if (distance_to_cut(lam[i]) <= tol.abs_tol)
      throw Error(ErrorKind::SpectrumOnCut, "an eigenvalue lies within tolerance of (-inf, 0]");
  const Mat& v = es.eigenvectors();
  Eigen::JacobiSVD<Mat> svd(v);
  const auto& sv = svd.singularValues();
  const double cond = sv[sv.size() - 1] > 0.0 ? sv[0] / sv[sv.size() - 1] : INFINITY;
  if (!(cond <= 1.0 / tol.abs_tol))
    throw Error(ErrorKind::NotDiagonalizable, "eigenvector matrix condition number " + std::to_string(cond));
  Vec d(n);
  for (Eigen::Index i = 0; i < n; ++i) d[i] = std::pow(lam[i], alpha);
  Mat out = v * d.asDiagonal() * v.inverse();
  // A real matrix has a real principal power; drop round-off imaginary parts.
  if (is_real_valued(m) && max_abs(out.imag().cast<cplx>()) <= tol.bound(max_abs(out)))
    out = out.real().cast<cplx>();
  return out;
}

inline RealVec singular_values(const Mat& m) {
  if (m.size() == 0) return RealVec();
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues();
}

// Largest singular value.
inline double opnorm2(const Mat& m) {
  const auto sv = singular_values(m);
  return sv.size() == 0 ? 0.0 : sv[0];
}

inline Eigen::Index numerical_rank(const Mat& m, const Tolerance& tol) {
  const auto sv = singular_values(m);
  if (sv.size() == 0) return 0;
  const double cut = tol.bound(sv[0]);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cut) ++r;
  return r;
}

inline bool is_invertible(const Mat& m, const Tolerance& tol) {
  return m.rows() == m.cols() && numerical_rank(m, tol) == m.rows();
}

// Orthonormal basis (columns) of the column space of m.
inline Mat range_basis(const Mat& m, const Tolerance& tol) {
  if (m.size() == 0) return Mat(m.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cut = tol.bound(sv.size() ? sv[0] : 0.0);
  Eigen::Index r = 0;
  while (r < sv.size() && sv[r] > cut) ++r;
  return svd.matrixU().leftCols(r);
}

// Orthonormal basis of ran(I - P) for an orthogonal projection P.
inline Mat complement_basis(const Mat& projection) {
  const Eigen::Index n = projection.rows();
  const Mat comp = identity(n) - projection;
  const auto he = hermitian_eigen(comp);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < n; ++i)
    if (he.values[i] > 0.5) keep.push_back(i);
  Mat w(n, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) w.col(static_cast<Eigen::Index>(k)) = he.vectors.col(keep[k]);
  return w;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline double pnorm(const Vec& v, double p) {
  if (p == 2.0) return v.norm();
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]), p);
  return std::pow(s, 1.0 / p);
}

namespace detail {

// Dual vector of y in l^p: the unit l^q vector attaining <y, z> = ||y||_p.
inline Vec pnorm_dual(const Vec& y, double p) {
  const double ny = pnorm(y, p);
  Vec z = Vec::Zero(y.size());
  if (ny == 0.0) return z;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const double a = std::abs(y[i]);
    if (a == 0.0) continue;
    z[i] = (y[i] / a) * std::pow(a / ny, p - 1.0);
  }
  return z;
}

inline double max_col_sum(const Mat& m) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) best = std::max(best, m.col(j).cwiseAbs().sum());
  return best;
}

inline double max_row_sum(const Mat& m) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) best = std::max(best, m.row(i).cwiseAbs().sum());
  return best;
}

}  // namespace detail

// Certified interval for the l^p -> l^p operator norm of m. The lower end is
// attained by an explicit unit vector; the upper end is the Riesz-Thorin
// interpolation bound (exact largest singular value at p = 2).
inline NormInterval pnorm_estimate(const Mat& m, double p, int samples = 256, std::uint64_t seed = 0) {
  if (!(p >= 1.0)) throw Error(ErrorKind::BadExponent, "p must be >= 1");
  const Eigen::Index n = m.cols();
  if (m.size() == 0) return {0.0, 0.0};
  if (p == 2.0) {
    const double s = opnorm2(m);
    return {s, s};
  }
  NormInterval out;
  out.upper = std::pow(detail::max_col_sum(m), 1.0 / p) * std::pow(detail::max_row_sum(m), 1.0 - 1.0 / p);

  double best = 0.0;
  Vec best_x = Vec::Zero(n);
  auto consider = [&](Vec x) {
    const double nx = pnorm(x, p);
    if (nx == 0.0) return;
    x /= nx;
    const double v = pnorm(m * x, p);
    if (v > best) {
      best = v;
      best_x = x;
    }
  };
  for (Eigen::Index j = 0; j < n; ++j) consider(Vec::Unit(n, j));
  if (n <= 12) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Vec x(n);
      for (Eigen::Index j = 0; j < n; ++j) x[j] = (mask >> j) & 1u ? -1.0 : 1.0;
      consider(x);
    }
  }
  const bool real_input = is_real_valued(m);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  for (int s = 0; s < samples; ++s) {
    Vec x(n);
    for (Eigen::Index j = 0; j < n; ++j) x[j] = real_input ? cplx(g(rng), 0.0) : cplx(g(rng), g(rng));
    consider(x);
  }
  // Power iteration for p-norms, started from the best sample.
  if (p > 1.0) {
    const double q = p / (p - 1.0);
    Vec x = best_x;
    int stale = 0;
    for (int it = 0; it < 100 && stale < 3; ++it) {
      const Vec z = m.adjoint() * detail::pnorm_dual(m * x, p);
      if (z.isZero(0.0)) break;
      x = detail::pnorm_dual(z, q);
      const double before = best;
      consider(x);
      stale = best > before * (1.0 + 1e-14) ? 0 : stale + 1;
    }
  }
  out.lower = std::min(best, out.upper);
  return out;
}

}  // namespace framekit

#endif  // FRAMEKIT_NUMERICS_HPP_
