#ifndef FRAMEKIT_CONSTRUCTORS_HPP_
#define FRAMEKIT_CONSTRUCTORS_HPP_

// Frame factories: circular pairs on R^2 and frames generated by unitary
// representations of finite groups.

#include "framekit/frame_core.hpp"

#include <numbers>
#include <vector>

namespace framekit {

class GroupTable {
 public:
  GroupTable() = default;
  GroupTable(std::vector<std::vector<int>> mul, int identity) : mul_(std::move(mul)), identity_(identity) {
    validate();
  }

  int order() const { return static_cast<int>(mul_.size()); }
  int identity() const { return identity_; }
  int mul(int g, int h) const { return mul_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
  int inverse(int g) const { return inverse_[static_cast<std::size_t>(g)]; }
  const std::vector<std::vector<int>>& table() const { return mul_; }

 private:
  void validate() {
    const int n = order();
    if (n < 1) throw Error(ErrorKind::InvalidGroup, "group must have at least one element");
    if (identity_ < 0 || identity_ >= n) throw Error(ErrorKind::InvalidGroup, "identity index out of range");
    for (const auto& row : mul_) {
      if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidGroup, "table is not square");
      for (int v : row)
        if (v < 0 || v >= n) throw Error(ErrorKind::InvalidGroup, "table entry out of range");
    }
    for (int g = 0; g < n; ++g)
      if (mul(identity_, g) != g || mul(g, identity_) != g)
        throw Error(ErrorKind::InvalidGroup, "declared identity does not act trivially");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error(ErrorKind::InvalidGroup, "table is not associative");
    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int g = 0; g < n; ++g) {
      for (int h = 0; h < n; ++h)
        if (mul(g, h) == identity_ && mul(h, g) == identity_) {
          if (inverse_[static_cast<std::size_t>(g)] != -1) throw Error(ErrorKind::InvalidGroup, "inverse not unique");
          inverse_[static_cast<std::size_t>(g)] = h;
        }
      if (inverse_[static_cast<std::size_t>(g)] == -1) throw Error(ErrorKind::InvalidGroup, "element without inverse");
    }
  }

  std::vector<std::vector<int>> mul_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

inline GroupTable cyclic_group(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidGroup, "cyclic group order must be positive");
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return GroupTable(mul, 0);
}

struct Representation {
  GroupTable group;
  Eigen::Index dim = 0;
  std::vector<Mat> mats;
  Tolerance tol{};

  Representation() = default;
  Representation(GroupTable g, std::vector<Mat> ms, Tolerance t = {})
      : group(std::move(g)), dim(ms.empty() ? 0 : ms.front().rows()), mats(std::move(ms)), tol(t) {
    validate();
  }

  // Unitary homomorphism check; throws InvalidRepresentation on failure.
  void validate() const {
    const int n = group.order();
    if (static_cast<int>(mats.size()) != n) throw Error(ErrorKind::InvalidRepresentation, "one matrix per element");
    for (const auto& m : mats)
      if (m.rows() != dim || m.cols() != dim) throw Error(ErrorKind::InvalidRepresentation, "matrices must be dim x dim");
    const Mat i = identity(dim);
    for (int g = 0; g < n; ++g)
      if (max_abs(mats[static_cast<std::size_t>(g)].adjoint() * mats[static_cast<std::size_t>(g)] - i) > tol.bound(1.0))
        throw Error(ErrorKind::InvalidRepresentation, "pi_" + std::to_string(g) + " is not unitary");
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        const Mat& pgh = mats[static_cast<std::size_t>(group.mul(g, h))];
        if (max_abs(pgh - mats[static_cast<std::size_t>(g)] * mats[static_cast<std::size_t>(h)]) > tol.bound(1.0))
          throw Error(ErrorKind::InvalidRepresentation, "pi is not multiplicative");
      }
  }
};

// lambda_g chi_q = chi_{g q}.
inline Representation left_regular(const GroupTable& g, Tolerance tol = {}) {
  const int n = g.order();
  std::vector<Mat> mats;
  for (int a = 0; a < n; ++a) {
    Mat m = Mat::Zero(n, n);
    for (int q = 0; q < n; ++q) m(g.mul(a, q), q) = 1.0;
    mats.push_back(m);
  }
  return Representation(g, mats, tol);
}

// Z_n acting on R^2 by rotations through 2 pi k / n.
inline Representation rotation_representation(int n, Tolerance tol = {}) {
  std::vector<Mat> mats;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    Mat r(2, 2);
    r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    mats.push_back(r);
  }
  return Representation(cyclic_group(n), mats, tol);
}

struct CircularResult {
  FramePair fp;
  bool tight = false;
  double constant = 0.0;
  Eigen::Vector3d residual = Eigen::Vector3d::Zero();
};

// x_j = a_j (cos theta_j, sin theta_j), tau_j = b_j (cos phi_j, sin phi_j).
inline CircularResult circular_general(const std::vector<double>& a, const std::vector<double>& theta,
                                       const std::vector<double>& b, const std::vector<double>& phi,
                                       Tolerance tol = {}) {
  const std::size_t n = a.size();
  if (n == 0 || theta.size() != n || b.size() != n || phi.size() != n)
    throw Error(ErrorKind::CountMismatch, "circular_general: parameter lists must share a positive length");
  Mat x(2, static_cast<Eigen::Index>(n)), t(2, static_cast<Eigen::Index>(n));
  CircularResult r;
  double scale = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] < 0 || b[j] < 0) throw Error(ErrorKind::NegativeRadius, "radii must be nonnegative");
    const auto jj = static_cast<Eigen::Index>(j);
    x(0, jj) = a[j] * std::cos(theta[j]);
    x(1, jj) = a[j] * std::sin(theta[j]);
    t(0, jj) = b[j] * std::cos(phi[j]);
    t(1, jj) = b[j] * std::sin(phi[j]);
    const double ab = a[j] * b[j];
    r.residual += Eigen::Vector3d(ab * std::cos(theta[j] + phi[j]), ab * std::sin(theta[j] + phi[j]),
                                  ab * std::sin(theta[j] - phi[j]));
    r.constant += 0.5 * ab * std::cos(theta[j] - phi[j]);
    scale += ab;
  }
  r.fp = FramePair(Field::Real, x, t, tol);
  r.tight = r.residual.norm() <= tol.bound(scale) && r.constant > tol.bound(scale);
  return r;
}

// kl members: x_j at angle 2 pi j / k, tau_j at angle 2 pi j / l.
inline CircularResult circular_kl(int k, int l, Tolerance tol = {}) {
  if (k < 1 || l < 1 || k * l < 3) throw Error(ErrorKind::BadKL, "need k, l >= 1 and kl >= 3");
  const int n = k * l;
  std::vector<double> ones(static_cast<std::size_t>(n), 1.0), theta, phi;
  for (int j = 0; j < n; ++j) {
    theta.push_back(2.0 * std::numbers::pi * (j % k) / k);
    phi.push_back(2.0 * std::numbers::pi * (j % l) / l);
  }
  return circular_general(ones, theta, ones, phi, tol);
}

struct GroupFrame {
  FramePair fp;
  FrameReport report;
  // Absent when <x, tau> is not real, in which case the bound does not apply.
  std::optional<bool> generator_bound_ok;
};

inline GroupFrame group_frame(const Representation& rep, const Vec& x, const Vec& tau) {
  if (x.size() != rep.dim || tau.size() != rep.dim)
    throw Error(ErrorKind::DimMismatch, "generator dimension differs from the representation");
  const int n = rep.group.order();
  Mat xs(rep.dim, n), ts(rep.dim, n);
  for (int g = 0; g < n; ++g) {
    xs.col(g) = rep.mats[static_cast<std::size_t>(g)] * x;
    ts.col(g) = rep.mats[static_cast<std::size_t>(g)] * tau;
  }
  bool real = is_real_valued(xs) && is_real_valued(ts);
  GroupFrame out{FramePair(real ? Field::Real : Field::Complex, xs, ts, rep.tol), {}, std::nullopt};
  out.report = verify(out.fp);
  const cplx ip = tau.dot(x);  // <x, tau> = tau^* x
  const Tolerance& tol = rep.tol;
  if (std::abs(ip.imag()) <= tol.bound(std::abs(ip))) {
    if (!out.report.is_frame) {
      out.generator_bound_ok = true;
    } else {
      const double v = static_cast<double>(n) / static_cast<double>(rep.dim) * ip.real();
      out.generator_bound_ok = out.report.lower_a <= v + tol.bound(v) && v <= out.report.upper_b + tol.bound(v);
    }
  }
  return out;
}

// <x_{gp}, x_{gq}> = <x_p, x_q>, and likewise for the mixed and tau Gram
// matrices, for all g, p, q.
inline bool check_group_invariance(const FramePair& fp, const GroupTable& g) {
  const int n = g.order();
  if (fp.count() != n) throw Error(ErrorKind::CountMismatch, "one vector per group element is required");
  const Mat gxx = fp.x.adjoint() * fp.x;      // (q, p) = <x_p, x_q>
  const Mat gxt = fp.tau.adjoint() * fp.x;    // (q, p) = <x_p, tau_q>
  const Mat gtt = fp.tau.adjoint() * fp.tau;  // (q, p) = <tau_p, tau_q>
  const double scale = std::max({max_abs(gxx), max_abs(gxt), max_abs(gtt)});
  const double cut = fp.tol.bound(scale);
  for (int a = 0; a < n; ++a)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const int ap = g.mul(a, p), aq = g.mul(a, q);
        if (std::abs(gxx(aq, ap) - gxx(q, p)) > cut || std::abs(gxt(aq, ap) - gxt(q, p)) > cut ||
            std::abs(gtt(aq, ap) - gtt(q, p)) > cut)
          return false;
      }
  return true;
}

struct SynthesizedRepresentation {
  Representation rep;
  bool pi_reproduces = false;
};

// pi_g = theta_tau^* lambda_g theta_x.
inline SynthesizedRepresentation synthesize_representation(const FramePair& fp, const GroupTable& g) {
  if (fp.count() != g.order()) throw Error(ErrorKind::CountMismatch, "one vector per group element is required");
  if (!verify(fp).parseval) throw Error(ErrorKind::NotParseval, "synthesize_representation: input is not Parseval");
  if (!check_group_invariance(fp, g)) throw Error(ErrorKind::NotInvariant, "Gram matrices are not group invariant");
  const auto lambda = left_regular(g, fp.tol);
  std::vector<Mat> mats;
  for (int a = 0; a < g.order(); ++a) {
    Mat pi = fp.tau * lambda.mats[static_cast<std::size_t>(a)] * fp.x.adjoint();
    if (fp.field == Field::Real) pi = pi.real().cast<cplx>();
    mats.push_back(pi);
  }
  SynthesizedRepresentation out{Representation(g, mats, fp.tol), true};
  const int e = g.identity();
  for (int a = 0; a < g.order(); ++a) {
    const Mat& pi = out.rep.mats[static_cast<std::size_t>(a)];
    if (max_abs(pi * fp.x.col(e) - fp.x.col(a)) > fp.tol.bound(max_abs(fp.x)) ||
        max_abs(pi * fp.tau.col(e) - fp.tau.col(a)) > fp.tol.bound(max_abs(fp.tau)))
      out.pi_reproduces = false;
  }
  return out;
}

}  // namespace framekit

#endif  // FRAMEKIT_CONSTRUCTORS_HPP_
