#pragma once

// Common scalar/matrix aliases and numeric tolerances shared by every module.
//
// All linear algebra is done over std::complex<double>, even for models whose
// matrix entries are real; real-field models validate realness at the point
// where group elements are produced.  Keeping a single scalar type avoids a
// template parameter that would otherwise infect every signature for no
// numerical benefit at these sizes (matrices are at most 4x4, algebra
// dimensions at most 6).

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace drinfeld {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;   // group elements / embedded algebra elements
using Vec = Eigen::VectorXcd;   // not used for coordinates; kept for io
using RVec = Eigen::VectorXd;   // coordinate vectors w.r.t. a chosen basis
using RMat = Eigen::MatrixXd;   // real coefficient matrices (bivectors, frames)

// Field of definition of a matrix model.
enum class Field { Real, Complex };

// Error used for structural failures (bad dimensions, failed validation).
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// --- tolerances ------------------------------------------------------------
// Two tiers: identities that are exact in exact arithmetic get the algebraic
// tolerance; identities probed by finite differences get the looser one.
inline constexpr double kAlgebraicTol = 1e-9;   // exact identities, sampled
inline constexpr double kDerivativeTol = 1e-6;  // finite-difference residuals
inline constexpr double kMembershipTol = 1e-10; // subgroup membership
inline constexpr double kConstraintTol = 1e-8;  // groupoid constraint drift
inline constexpr double kStrictTol = 1e-12;     // structure-constant identities
inline constexpr double kFdStep = 1e-5;         // central-difference step

inline double sup_norm(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}
inline double sup_norm(const RMat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}
inline double sup_norm(const RVec& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

}  // namespace drinfeld
