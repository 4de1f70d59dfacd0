#ifndef FRAMEKIT_TYPES_HPP_
#define FRAMEKIT_TYPES_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace framekit {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

enum class Field { Real, Complex };

inline std::string_view field_name(Field f) {
  return f == Field::Real ? "real" : "complex";
}

// Comparisons are made against abs_tol + rel_tol * scale, where scale is the
// largest magnitude among the operands being compared.
struct Tolerance {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;

  double bound(double scale) const { return abs_tol + rel_tol * std::abs(scale); }
  bool close(double a, double b) const {
    return std::abs(a - b) <= bound(std::max(std::abs(a), std::abs(b)));
  }
};

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  IoError,
  NonSquare,
  EigenFailure,
  NotPsd,
  SpectrumOnCut,
  NotDiagonalizable,
  BadExponent,
  NotAFrame,
  NotBessel,
  NotParseval,
  ShapeMismatch,
  CountMismatch,
  DimMismatch,
  ParamNotAdmissible,
  NotOrthogonal,
  BadCoefficients,
  RangesDiffer,
  IdempotentNotProjection,
  NotOnb,
  NotWeightedOnb,
  WeightTooLarge,
  LambdaTooSmall,
  CodomainNotOneDim,
  NegativeRadius,
  BadKL,
  InvalidGroup,
  InvalidRepresentation,
  NotInvariant,
  NotSelfPair,
  HypothesisFails,
  TooManyVectors,
  BadParams,
  NotReal,
  RankDeficient,
  BaseNotOrthonormal,
  NotPFrame,
  ZeroDirection,
};

inline std::string_view error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::NotPsd: return "NotPsd";
    case ErrorKind::SpectrumOnCut: return "SpectrumOnCut";
    case ErrorKind::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::NotBessel: return "NotBessel";
    case ErrorKind::NotParseval: return "NotParseval";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::ParamNotAdmissible: return "ParamNotAdmissible";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::BadCoefficients: return "BadCoefficients";
    case ErrorKind::RangesDiffer: return "RangesDiffer";
    case ErrorKind::IdempotentNotProjection: return "IdempotentNotProjection";
    case ErrorKind::NotOnb: return "NotOnb";
    case ErrorKind::NotWeightedOnb: return "NotWeightedOnb";
    case ErrorKind::WeightTooLarge: return "WeightTooLarge";
    case ErrorKind::LambdaTooSmall: return "LambdaTooSmall";
    case ErrorKind::CodomainNotOneDim: return "CodomainNotOneDim";
    case ErrorKind::NegativeRadius: return "NegativeRadius";
    case ErrorKind::BadKL: return "BadKL";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotSelfPair: return "NotSelfPair";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::TooManyVectors: return "TooManyVectors";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NotReal: return "NotReal";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::BaseNotOrthonormal: return "BaseNotOrthonormal";
    case ErrorKind::NotPFrame: return "NotPFrame";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

inline double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool all_finite(const Mat& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const cplx v = m.data()[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

inline bool is_real_valued(const Mat& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (m.data()[i].imag() != 0.0) return false;
  return true;
}

inline Mat identity(Eigen::Index n) { return Mat::Identity(n, n); }

}  // namespace framekit

#endif  // FRAMEKIT_TYPES_HPP_
