#ifndef FRAMEKIT_OVF_HPP_
#define FRAMEKIT_OVF_HPP_

// Operator-valued frame pairs: operators A_j, Psi_j : K^m -> K^{d_j} with
// frame operator S = sum_j Psi_j^* A_j. Members normally share one codomain
// dimension d; tight extension appends a member whose codomain is K^m, so
// codomains are tracked per member.

#include "framekit/frame_core.hpp"

#include <numeric>
#include <vector>

namespace framekit {

struct OvfPair {
  Field field = Field::Real;
  Eigen::Index m = 0;  // domain dimension
  std::vector<Mat> a;
  std::vector<Mat> psi;
  Tolerance tol{};

  OvfPair() = default;
  OvfPair(Field f, Eigen::Index domain, std::vector<Mat> as, std::vector<Mat> psis, Tolerance t = {})
      : field(f), m(domain), a(std::move(as)), psi(std::move(psis)), tol(t) {
    validate();
  }

  Eigen::Index count() const { return static_cast<Eigen::Index>(a.size()); }
  Eigen::Index codomain(Eigen::Index j) const { return a[static_cast<std::size_t>(j)].rows(); }
  Eigen::Index total_codomain() const {
    Eigen::Index s = 0;
    for (const auto& x : a) s += x.rows();
    return s;
  }
  // Shared codomain dimension, or 0 when members differ.
  Eigen::Index uniform_codomain() const {
    for (const auto& x : a)
      if (x.rows() != a.front().rows()) return 0;
    return a.empty() ? 0 : a.front().rows();
  }
  // Row offset of member j inside the stacked analysis operator.
  Eigen::Index offset(Eigen::Index j) const {
    Eigen::Index s = 0;
    for (Eigen::Index k = 0; k < j; ++k) s += codomain(k);
    return s;
  }

  void validate() const {
    if (m < 1 || a.empty()) throw Error(ErrorKind::InvalidArgument, "domain dim and count must be positive");
    if (a.size() != psi.size()) throw Error(ErrorKind::ShapeMismatch, "A and Psi counts differ");
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j].cols() != m || psi[j].cols() != m || a[j].rows() != psi[j].rows() || a[j].rows() < 1)
        throw Error(ErrorKind::ShapeMismatch, "member " + std::to_string(j) + " has inconsistent shape");
      if (!all_finite(a[j]) || !all_finite(psi[j])) throw Error(ErrorKind::InvalidArgument, "non-finite entry");
      if (field == Field::Real && (!is_real_valued(a[j]) || !is_real_valued(psi[j])))
        throw Error(ErrorKind::InvalidArgument, "real-field pair has imaginary parts");
    }
  }
};

namespace detail {

inline Mat stack(const std::vector<Mat>& ops, Eigen::Index m) {
  Eigen::Index rows = 0;
  for (const auto& o : ops) rows += o.rows();
  Mat out(rows, m);
  Eigen::Index r = 0;
  for (const auto& o : ops) {
    out.middleRows(r, o.rows()) = o;
    r += o.rows();
  }
  return out;
}

inline void require_same_layout(const OvfPair& p, const OvfPair& q, const char* who) {
  bool ok = p.m == q.m && p.count() == q.count();
  for (Eigen::Index j = 0; ok && j < p.count(); ++j) ok = p.codomain(j) == q.codomain(j);
  if (!ok) throw Error(ErrorKind::ShapeMismatch, std::string(who) + ": pairs differ in shape");
}

}  // namespace detail

struct OvfOperators {
  Mat s;          // m x m
  Mat theta_a;    // (sum d_j) x m
  Mat theta_psi;  // (sum d_j) x m
  std::optional<Mat> p;
};

inline Mat ovf_frame_operator(const OvfPair& op) {
  Mat s = Mat::Zero(op.m, op.m);
  for (Eigen::Index j = 0; j < op.count(); ++j) s += op.psi[j].adjoint() * op.a[j];
  return s;
}

inline OvfOperators ovf_operators(const OvfPair& op) {
  OvfOperators r{ovf_frame_operator(op), detail::stack(op.a, op.m), detail::stack(op.psi, op.m), std::nullopt};
  if (is_invertible(r.s, op.tol)) r.p = r.theta_a * r.s.inverse() * r.theta_psi.adjoint();
  return r;
}

struct OvfReport {
  FrameReport frame;
  bool riesz_ovf = false;
  bool orthonormal_ovf = false;
};

inline OvfReport verify_ovf(const OvfPair& op) {
  OvfReport r;
  const auto ops = ovf_operators(op);
  r.frame = report_for_operator(ops.s, op.tol);
  if (!r.frame.is_frame) return r;
  const Eigen::Index big = ops.theta_a.rows();
  r.riesz_ovf = ops.p && max_abs(*ops.p - identity(big)) <= op.tol.bound(1.0);
  if (r.frame.parseval) {
    bool ok = true;
    for (Eigen::Index j = 0; ok && j < op.count(); ++j)
      for (Eigen::Index k = 0; ok && k < op.count(); ++k) {
        Mat g = op.a[j] * op.psi[k].adjoint();
        if (j == k) g -= identity(op.codomain(j));
        ok = max_abs(g) <= op.tol.bound(1.0);
      }
    r.orthonormal_ovf = ok;
  }
  return r;
}

namespace detail {

inline OvfReport require_ovf_frame(const OvfPair& op, const char* who) {
  auto r = verify_ovf(op);
  if (!r.frame.is_frame) throw Error(ErrorKind::NotAFrame, std::string(who) + ": input is not an operator-valued frame");
  return r;
}

}  // namespace detail

inline OvfPair canonical_dual_ovf(const OvfPair& op) {
  detail::require_ovf_frame(op, "canonical_dual_ovf");
  const Mat sinv = detail::frame_inverse(ovf_frame_operator(op));
  OvfPair out = op;
  for (Eigen::Index j = 0; j < op.count(); ++j) {
    out.a[j] = op.a[j] * sinv;
    out.psi[j] = op.psi[j] * sinv;
  }
  return out;
}

struct DualityRelation {
  bool dual = false;
  bool orthogonal = false;
};

// op1 = (A, Psi), op2 = (B, Phi): dual when sum Phi_j^* A_j = sum B_j^* Psi_j = I,
// orthogonal when both sums vanish.
inline DualityRelation duality_relation(const OvfPair& op1, const OvfPair& op2) {
  detail::require_same_layout(op1, op2, "duality_relation");
  Mat s1 = Mat::Zero(op1.m, op1.m), s2 = Mat::Zero(op1.m, op1.m);
  double scale = 0.0;
  for (Eigen::Index j = 0; j < op1.count(); ++j) {
    s1 += op2.psi[j].adjoint() * op1.a[j];
    s2 += op2.a[j].adjoint() * op1.psi[j];
    scale = std::max({scale, op2.psi[j].norm() * op1.a[j].norm(), op2.a[j].norm() * op1.psi[j].norm()});
  }
  const Mat i = identity(op1.m);
  DualityRelation r;
  r.dual = max_abs(s1 - i) <= op1.tol.bound(1.0) && max_abs(s2 - i) <= op1.tol.bound(1.0);
  r.orthogonal = max_abs(s1) <= op1.tol.bound(scale) && max_abs(s2) <= op1.tol.bound(scale);
  return r;
}

// A_j = Psi_j = rows [j d, (j + 1) d) of the identity on K^{n d}.
inline OvfPair onb_blocks(Eigen::Index n, Eigen::Index d, Tolerance tol = {}) {
  if (n < 1 || d < 1) throw Error(ErrorKind::InvalidArgument, "onb_blocks needs n, d >= 1");
  const Mat id = identity(n * d);
  std::vector<Mat> blocks;
  for (Eigen::Index j = 0; j < n; ++j) blocks.push_back(id.middleRows(j * d, d));
  return OvfPair(Field::Real, n * d, blocks, blocks, tol);
}

// Orthonormal basis identities: F_j F_k^* = delta_{jk} I and sum F_j^* F_j = I.
inline bool is_orthonormal_basis(const std::vector<Mat>& f, Eigen::Index m, const Tolerance& tol) {
  Mat sum = Mat::Zero(m, m);
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j].cols() != m) return false;
    sum += f[j].adjoint() * f[j];
    for (std::size_t k = 0; k < f.size(); ++k) {
      Mat g = f[j] * f[k].adjoint();
      if (j == k) {
        if (g.rows() != g.cols()) return false;
        g -= identity(g.rows());
      }
      if (max_abs(g) > tol.bound(1.0)) return false;
    }
  }
  return max_abs(sum - identity(m)) <= tol.bound(1.0);
}

enum class OvfClass { None, Bessel, Frame, RieszOvf, RieszBasis, OrthonormalOvf, OnbPair };

inline std::string_view ovf_class_name(OvfClass c) {
  switch (c) {
    case OvfClass::None: return "None";
    case OvfClass::Bessel: return "Bessel";
    case OvfClass::Frame: return "Frame";
    case OvfClass::RieszOvf: return "RieszOvf";
    case OvfClass::RieszBasis: return "RieszBasis";
    case OvfClass::OrthonormalOvf: return "OrthonormalOvf";
    case OvfClass::OnbPair: return "OnbPair";
  }
  return "None";
}

struct Factorization {
  Mat u;  // sum F_j^* A_j
  Mat v;  // sum F_j^* Psi_j
  bool reproduces = false;  // F_j U = A_j and F_j V = Psi_j
  bool bessel = false;
  bool frame = false;
  bool riesz_ovf = false;
  bool orthonormal_ovf = false;
  bool riesz_basis = false;
  bool onb_pair = false;
  OvfClass strongest = OvfClass::None;
};

inline Factorization factorize_against_onb(const OvfPair& op, const OvfPair& onb) {
  const Tolerance& tol = op.tol;
  detail::require_same_layout(op, onb, "factorize_against_onb");
  if (op.m != op.total_codomain() || !is_orthonormal_basis(onb.a, onb.m, tol))
    throw Error(ErrorKind::NotOnb, "reference family is not an orthonormal basis of matching shape");
  Factorization f;
  f.u = Mat::Zero(op.m, op.m);
  f.v = Mat::Zero(op.m, op.m);
  for (Eigen::Index j = 0; j < op.count(); ++j) {
    f.u += onb.a[j].adjoint() * op.a[j];
    f.v += onb.a[j].adjoint() * op.psi[j];
  }
  f.reproduces = true;
  for (Eigen::Index j = 0; j < op.count(); ++j)
    f.reproduces = f.reproduces && max_abs(onb.a[j] * f.u - op.a[j]) <= tol.bound(max_abs(op.a[j])) &&
                   max_abs(onb.a[j] * f.v - op.psi[j]) <= tol.bound(max_abs(op.psi[j]));

  const Mat i = identity(op.m);
  const Mat vu = f.v.adjoint() * f.u;
  const auto rep = spectral(vu, tol);
  f.bessel = rep.is_psd;
  f.frame = rep.is_pd;
  if (f.frame) f.riesz_ovf = max_abs(f.u * vu.inverse() * f.v.adjoint() - i) <= tol.bound(1.0);
  f.orthonormal_ovf = max_abs(vu - i) <= tol.bound(1.0) && max_abs(f.u * f.v.adjoint() - i) <= tol.bound(1.0);
  f.riesz_basis = is_invertible(f.u, tol) && is_invertible(f.v, tol) && rep.is_pd;

  // Orthonormal basis pair: U unitary and Psi_j = c_j A_j with c_j > 0.
  if (max_abs(f.u.adjoint() * f.u - i) <= tol.bound(1.0)) {
    bool ok = true;
    for (Eigen::Index j = 0; ok && j < op.count(); ++j) {
      const double na = op.a[j].squaredNorm();
      if (na == 0.0) {
        ok = false;
        break;
      }
      const cplx c = (op.a[j].adjoint() * op.psi[j]).trace() / na;
      ok = std::abs(c.imag()) <= tol.bound(std::abs(c)) && c.real() > tol.abs_tol &&
           max_abs(op.psi[j] - c.real() * op.a[j]) <= tol.bound(max_abs(op.psi[j]));
    }
    f.onb_pair = ok;
  }

  if (f.onb_pair) f.strongest = OvfClass::OnbPair;
  else if (f.orthonormal_ovf) f.strongest = OvfClass::OrthonormalOvf;
  else if (f.riesz_basis) f.strongest = OvfClass::RieszBasis;
  else if (f.riesz_ovf) f.strongest = OvfClass::RieszOvf;
  else if (f.frame) f.strongest = OvfClass::Frame;
  else if (f.bessel) f.strongest = OvfClass::Bessel;
  return f;
}

struct BesselCheck {
  bool holds = false;
  Mat deficiency;
};

// Psi_j = c_j A_j with {A_j} an orthonormal set and c_j <= 2:
// deficiency = I - sum (2 - c_j) Psi_j^* A_j must be positive.
inline BesselCheck weighted_onb_bessel_check(const OvfPair& op, const std::vector<double>& c) {
  const Tolerance& tol = op.tol;
  if (static_cast<Eigen::Index>(c.size()) != op.count())
    throw Error(ErrorKind::CountMismatch, "one weight per member is required");
  for (double w : c)
    if (w > 2.0) throw Error(ErrorKind::WeightTooLarge, "weights must not exceed 2");
  for (Eigen::Index j = 0; j < op.count(); ++j) {
    if (max_abs(op.psi[j] - c[j] * op.a[j]) > tol.bound(max_abs(op.psi[j])))
      throw Error(ErrorKind::NotWeightedOnb, "Psi_j differs from c_j A_j");
    for (Eigen::Index k = 0; k < op.count(); ++k) {
      Mat g = op.a[j] * op.a[k].adjoint();
      if (j == k) {
        if (g.rows() != g.cols()) throw Error(ErrorKind::NotWeightedOnb, "A_j is not a coisometry");
        g -= identity(g.rows());
      }
      if (max_abs(g) > tol.bound(1.0)) throw Error(ErrorKind::NotWeightedOnb, "{A_j} is not an orthonormal set");
    }
  }
  BesselCheck r;
  r.deficiency = identity(op.m);
  for (Eigen::Index j = 0; j < op.count(); ++j) r.deficiency -= (2.0 - c[j]) * op.psi[j].adjoint() * op.a[j];
  r.holds = spectral(r.deficiency, tol).is_psd;
  return r;
}

struct RightSimilarity {
  Mat rab;      // B_j = A_j rab
  Mat rpsiphi;  // Phi_j = Psi_j rpsiphi
};

inline std::optional<RightSimilarity> right_similarity_detect(const OvfPair& op1, const OvfPair& op2) {
  detail::require_same_layout(op1, op2, "right_similarity_detect");
  detail::require_ovf_frame(op1, "right_similarity_detect");
  detail::require_ovf_frame(op2, "right_similarity_detect");
  const auto o1 = ovf_operators(op1);
  const Mat theta_b = detail::stack(op2.a, op2.m);
  const Mat theta_phi = detail::stack(op2.psi, op2.m);
  const Mat sinv = detail::frame_inverse(o1.s);
  RightSimilarity r{sinv * o1.theta_psi.adjoint() * theta_b, sinv * o1.theta_a.adjoint() * theta_phi};
  const Tolerance& tol = op1.tol;
  if (!is_invertible(r.rab, tol) || !is_invertible(r.rpsiphi, tol)) return std::nullopt;
  for (Eigen::Index j = 0; j < op1.count(); ++j) {
    if (max_abs(op1.a[j] * r.rab - op2.a[j]) > tol.bound(max_abs(op2.a[j]))) return std::nullopt;
    if (max_abs(op1.psi[j] * r.rpsiphi - op2.psi[j]) > tol.bound(max_abs(op2.psi[j]))) return std::nullopt;
  }
  return r;
}

// outer: K^d -> K^e, inner: K^m -> K^d. Members C_(l, j) = B_l A_j with l
// outer-major.
inline OvfPair compose_ovf(const OvfPair& outer, const OvfPair& inner) {
  const Eigen::Index d = inner.uniform_codomain();
  if (d == 0 || outer.m != d) throw Error(ErrorKind::ShapeMismatch, "inner codomain must equal outer domain");
  std::vector<Mat> c, xi;
  for (Eigen::Index l = 0; l < outer.count(); ++l)
    for (Eigen::Index j = 0; j < inner.count(); ++j) {
      c.push_back(outer.a[l] * inner.a[j]);
      xi.push_back(outer.psi[l] * inner.psi[j]);
    }
  return OvfPair(detail::join(outer.field, inner.field), inner.m, c, xi, inner.tol);
}

// Members A_j (x) B_l in row-major (j, l) order.
inline OvfPair tensor_ovf(const OvfPair& op1, const OvfPair& op2) {
  std::vector<Mat> c, xi;
  for (Eigen::Index j = 0; j < op1.count(); ++j)
    for (Eigen::Index l = 0; l < op2.count(); ++l) {
      c.push_back(kron(op1.a[j], op2.a[l]));
      xi.push_back(kron(op1.psi[j], op2.psi[l]));
    }
  return OvfPair(detail::join(op1.field, op2.field), op1.m * op2.m, c, xi, op1.tol);
}

// Appends B = (lambda I - S)^{1/2} to both families, giving S' = lambda I.
inline OvfPair extend_tight_ovf(const OvfPair& op, double lambda) {
  const Mat s = ovf_frame_operator(op);
  const auto rep = report_for_operator(s, op.tol);
  if (!rep.is_bessel) throw Error(ErrorKind::NotBessel, "extend_tight_ovf: frame operator is not positive");
  const auto he = hermitian_eigen(s);
  const double top = he.values[he.values.size() - 1];
  if (!(lambda > top + op.tol.bound(top)))
    throw Error(ErrorKind::LambdaTooSmall, "lambda must exceed the norm of the frame operator");
  Mat b = hermitian_apply(he, [lambda](double v) { return std::sqrt(std::max(lambda - v, 0.0)); });
  if (op.field == Field::Real) b = b.real().cast<cplx>();
  OvfPair out = op;
  out.a.push_back(b);
  out.psi.push_back(b);
  return out;
}

// Parseval OVF with matching analysis ranges and an orthogonal frame
// idempotent becomes an orthonormal OVF on K^m (+) ran(theta_A)^perp via
// B_j = [A_j | L_j^* W].
inline OvfPair dilate_ovf(const OvfPair& op) {
  const auto rep = verify_ovf(op);
  if (!rep.frame.parseval) throw Error(ErrorKind::NotParseval, "dilate_ovf: input is not Parseval");
  const auto ops = ovf_operators(op);
  if (!detail::same_column_space(ops.theta_a, ops.theta_psi, op.tol))
    throw Error(ErrorKind::RangesDiffer, "ranges of the analysis operators differ");
  const Mat p = ops.theta_a * ops.theta_psi.adjoint();
  if (!detail::is_orthogonal_projection(p, op.tol))
    throw Error(ErrorKind::IdempotentNotProjection, "frame idempotent is not an orthogonal projection");
  const Mat w = complement_basis(p);
  const Eigen::Index k = w.cols();
  std::vector<Mat> b, phi;
  for (Eigen::Index j = 0; j < op.count(); ++j) {
    const Eigen::Index d = op.codomain(j);
    Mat bj(d, op.m + k), pj(d, op.m + k);
    bj << op.a[j], w.middleRows(op.offset(j), d);
    pj << op.psi[j], w.middleRows(op.offset(j), d);
    if (op.field == Field::Real) {
      bj = bj.real().cast<cplx>();
      pj = pj.real().cast<cplx>();
    }
    b.push_back(bj);
    phi.push_back(pj);
  }
  return OvfPair(op.field, op.m + k, b, phi, op.tol);
}

// A_j = x_j^*, Psi_j = tau_j^*.
inline OvfPair ovf_bridge(const FramePair& fp) {
  std::vector<Mat> a, psi;
  for (Eigen::Index j = 0; j < fp.count(); ++j) {
    a.push_back(fp.x.col(j).adjoint());
    psi.push_back(fp.tau.col(j).adjoint());
  }
  return OvfPair(fp.field, fp.dim(), a, psi, fp.tol);
}

inline FramePair frame_from_ovf(const OvfPair& op) {
  if (op.uniform_codomain() != 1) throw Error(ErrorKind::CodomainNotOneDim, "bridge needs one-dimensional codomains");
  Mat x(op.m, op.count()), t(op.m, op.count());
  for (Eigen::Index j = 0; j < op.count(); ++j) {
    x.col(j) = op.a[j].adjoint();
    t.col(j) = op.psi[j].adjoint();
  }
  return FramePair(op.field, x, t, op.tol);
}

}  // namespace framekit

#endif  // FRAMEKIT_OVF_HPP_
