#include "drinfeld/group.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>
#include <utility>

namespace drinfeld {

namespace {

constexpr double kRankThreshold = 1e-10;

std::string tag_key(SubgroupTag tag) { return subgroup_name(tag); }

}  // namespace

// Left-frame Poisson-Lie bivector matrix at g: the pairing contraction of the
// g- and g*-components of Ad_g applied to the dual basis,
//   B_l[a][b] = < pr_g(Ad_g xi^a), pr_g*(Ad_g xi^b) >.
RMat poisson_g_left_matrix(const MatrixGroupModel& model, const Mat& g) {
  const int n = model.n();
  const RMat ad = model.adjoint_matrix(g);
  const RMat p = ad.block(0, n, n, n);   // g-components of Ad_g xi^a
  const RMat q = ad.block(n, n, n, n);   // g*-components of Ad_g xi^a
  RMat b = p.transpose() * q;
  const double asym = sup_norm(RMat(b + b.transpose()));
  if (asym > kConstraintTol) {
    throw ModelError("left-frame bivector is not antisymmetric (residual " +
                     std::to_string(asym) + ")");
  }
  return 0.5 * (b - b.transpose());
}

std::string subgroup_name(SubgroupTag tag) {
  switch (tag) {
    case SubgroupTag::D: return "D";
    case SubgroupTag::G: return "G";
    case SubgroupTag::Gstar: return "Gstar";
    case SubgroupTag::L: return "L";
    case SubgroupTag::H: return "H";
  }
  return "?";
}

MatrixGroupModel::MatrixGroupModel(
    std::string name, int N, Field field, DoubleAlgebra dd,
    std::vector<Mat> emb_basis,
    std::map<SubgroupTag, SubgroupDescriptor> subgroups,
    std::string oracle_name,
    std::function<std::pair<Mat, Mat>(const Mat&)> factorize)
    : name_(std::move(name)),
      N_(N),
      field_(field),
      dd_(std::move(dd)),
      emb_basis_(std::move(emb_basis)),
      subgroups_(std::move(subgroups)),
      oracle_name_(std::move(oracle_name)),
      factorize_(std::move(factorize)) {
  const int dim = dd_.d.dim();
  if (static_cast<int>(emb_basis_.size()) != dim) {
    throw ModelError("model " + name_ + ": expected " + std::to_string(dim) +
                     " embedding matrices, got " +
                     std::to_string(emb_basis_.size()));
  }
  for (const Mat& m : emb_basis_) {
    if (m.rows() != N_ || m.cols() != N_) {
      throw ModelError("model " + name_ + ": embedding matrix is not " +
                       std::to_string(N_) + "x" + std::to_string(N_));
    }
  }

  emb_stack_.resize(2 * N_ * N_, dim);
  for (int a = 0; a < dim; ++a) {
    Eigen::Map<const Vec> v(emb_basis_[a].data(), N_ * N_);
    emb_stack_.col(a).head(N_ * N_) = v.real();
    emb_stack_.col(a).tail(N_ * N_) = v.imag();
  }
  emb_qr_ = Eigen::ColPivHouseholderQR<RMat>(emb_stack_);
  emb_qr_.setThreshold(kRankThreshold);
  if (emb_qr_.rank() != dim) {
    throw ModelError("model " + name_ + ": embedding is not injective");
  }

  const Validation v = validate();
  if (v.emb_hom_residual > kConstraintTol) {
    throw ModelError("model " + name_ + ": embedding homomorphism residual " +
                     std::to_string(v.emb_hom_residual));
  }
  if (v.subalgebra_closure > kConstraintTol) {
    throw ModelError("model " + name_ + ": subalgebra closure residual " +
                     std::to_string(v.subalgebra_closure));
  }
  if (v.h_containment > kConstraintTol) {
    throw ModelError("model " + name_ + ": h is not contained in g and l");
  }
}

Mat MatrixGroupModel::emb(const RVec& x) const {
  if (x.size() != dim()) {
    throw ModelError("emb: expected a vector of length " +
                     std::to_string(dim()));
  }
  Mat m = Mat::Zero(N_, N_);
  for (int a = 0; a < dim(); ++a) m += x[a] * emb_basis_[a];
  return m;
}

Mat MatrixGroupModel::emb_g(const RVec& u) const {
  return emb(dd_.lift_g(u));
}

Mat MatrixGroupModel::emb_gstar(const RVec& xi) const {
  return emb(dd_.lift_gstar(xi));
}

RVec MatrixGroupModel::pullback(const Mat& m, double* residual) const {
  RVec rhs(2 * N_ * N_);
  Eigen::Map<const Vec> v(m.data(), N_ * N_);
  rhs.head(N_ * N_) = v.real();
  rhs.tail(N_ * N_) = v.imag();
  RVec x = emb_qr_.solve(rhs);
  if (residual != nullptr) {
    *residual = sup_norm(Mat(emb(x) - m));
  }
  return x;
}

const SubgroupDescriptor& MatrixGroupModel::subgroup(SubgroupTag tag) const {
  auto it = subgroups_.find(tag);
  if (it == subgroups_.end()) {
    throw ModelError("model " + name_ + " has no subgroup " + tag_key(tag));
  }
  return it->second;
}

MatrixGroupModel::Validation MatrixGroupModel::validate() const {
  Validation v;
  const int dim = dd_.d.dim();
  for (int a = 0; a < dim; ++a) {
    for (int b = a + 1; b < dim; ++b) {
      const Mat commutator = emb_basis_[a] * emb_basis_[b] -
                             emb_basis_[b] * emb_basis_[a];
      const RVec br =
          dd_.d.bracket(RVec::Unit(dim, a), RVec::Unit(dim, b));
      v.emb_hom_residual =
          std::max(v.emb_hom_residual, sup_norm(Mat(emb(br) - commutator)));
    }
  }
  for (const auto& [tag, sub] : subgroups_) {
    const RMat& basis = sub.algebra.basis();
    for (int a = 0; a < basis.cols(); ++a) {
      for (int b = a + 1; b < basis.cols(); ++b) {
        const RVec br = dd_.d.bracket(basis.col(a), basis.col(b));
        v.subalgebra_closure = std::max(
            v.subalgebra_closure, sub.algebra.membership_residual(br));
      }
    }
  }
  if (has_subgroup(SubgroupTag::H)) {
    const SubgroupDescriptor& h = subgroup(SubgroupTag::H);
    for (int a = 0; a < h.algebra.dim(); ++a) {
      const RVec x = h.algebra.basis_vector(a);
      v.h_containment =
          std::max(v.h_containment, dd_.g_part.membership_residual(x));
      if (has_subgroup(SubgroupTag::L)) {
        v.h_containment = std::max(
            v.h_containment,
            subgroup(SubgroupTag::L).algebra.membership_residual(x));
      }
    }
  }
  return v;
}

GroupElement MatrixGroupModel::exp(const RVec& x) const {
  return exp_in(SubgroupTag::D, x);
}

GroupElement MatrixGroupModel::exp_in(SubgroupTag tag, const RVec& x) const {
  const SubgroupDescriptor& sub = subgroup(tag);
  const double mem = sub.algebra.membership_residual(x);
  if (mem > kMembershipTol) {
    throw ModelError("exp_in(" + tag_key(tag) +
                     "): vector is outside the subalgebra (residual " +
                     std::to_string(mem) + ")");
  }
  Mat m;
  if (sub.closed_exp) {
    m = sub.closed_exp(x);
  } else {
    m = emb(x).exp();
  }
  return element(tag, std::move(m));
}

GroupElement MatrixGroupModel::element(SubgroupTag tag, Mat m,
                                       double tol) const {
  const SubgroupDescriptor& sub = subgroup(tag);
  if (m.rows() != N_ || m.cols() != N_ || !m.allFinite()) {
    throw ModelError("element(" + tag_key(tag) + "): bad matrix");
  }
  const double res = sub.membership(m);
  if (!(res <= tol)) {
    throw ModelError("element(" + tag_key(tag) + "): membership residual " +
                     std::to_string(res) + " exceeds " + std::to_string(tol));
  }
  return GroupElement{this, tag, std::move(m)};
}

RVec MatrixGroupModel::adjoint(const Mat& g, const RVec& x, double tol) const {
  double res = 0.0;
  RVec y = pullback(g * emb(x) * g.inverse(), &res);
  if (res > tol * std::max(1.0, sup_norm(x))) {
    throw ModelError("adjoint: embedded double is not Ad-stable (residual " +
                     std::to_string(res) + ")");
  }
  return y;
}

RMat MatrixGroupModel::adjoint_matrix(const Mat& g, double tol) const {
  const int d = dim();
  RMat a(d, d);
  const Mat ginv = g.inverse();
  for (int c = 0; c < d; ++c) {
    double res = 0.0;
    a.col(c) = pullback(g * emb_basis_[c] * ginv, &res);
    if (res > tol) {
      throw ModelError("adjoint_matrix: pullback residual " +
                       std::to_string(res));
    }
  }
  return a;
}

RVec MatrixGroupModel::coadjoint(const Mat& g, const RVec& xi) const {
  const int m = n();
  const RMat a = adjoint_matrix(g);
  const double leak = sup_norm(RMat(a.block(m, 0, m, m)));
  if (leak > kConstraintTol) {
    throw ModelError("coadjoint: Ad_g does not preserve g (residual " +
                     std::to_string(leak) + ")");
  }
  return a.block(0, 0, m, m).transpose() * xi;
}

RVec MatrixGroupModel::maurer(const GroupElement& g, const Mat& X, Side side,
                              double tol) const {
  const Mat translate =
      side == Side::Right ? Mat(X * g.inverse()) : Mat(g.inverse() * X);
  double res = 0.0;
  RVec coords = pullback(translate, &res);
  const double mem =
      subgroup(g.tag).algebra.membership_residual(coords);
  if (res + mem > tol * std::max(1.0, sup_norm(coords))) {
    throw ModelError("maurer: X is not tangent to " + tag_key(g.tag) +
                     " at g (residual " + std::to_string(res + mem) + ")");
  }
  return coords;
}

GroupElement MatrixGroupModel::random_element(SubgroupTag tag, double radius,
                                              SplitMix64& rng) const {
  const SubgroupDescriptor& sub = subgroup(tag);
  const RVec c = rng.next_vec(sub.algebra.dim());
  RVec x = sub.algebra.basis() * (radius * c);
  const double s = sup_norm(x);
  if (s > radius) x *= radius / s;
  return exp_in(tag, x);
}

GroupElement MatrixGroupModel::random_element(SubgroupTag tag, double radius,
                                              std::uint64_t seed) const {
  SplitMix64 rng(seed);
  return random_element(tag, radius, rng);
}

std::pair<GroupElement, GroupElement> MatrixGroupModel::factorize(
    const Mat& d) const {
  if (!factorize_) {
    throw ModelError("model " + name_ + " has no factorization oracle");
  }
  auto [vm, gm] = factorize_(d);
  GroupElement v = element(SubgroupTag::Gstar, std::move(vm));
  GroupElement g = element(SubgroupTag::G, std::move(gm));
  const double res = sup_norm(Mat(v.matrix * g.matrix - d));
  if (res > kConstraintTol * std::max(1.0, sup_norm(d))) {
    throw ModelError("factorize: recomposition residual " +
                     std::to_string(res));
  }
  return {std::move(v), std::move(g)};
}

double verify_gond1(const MatrixGroupModel& model, const GroupElement& g,
                    const RVec& u, const RVec& xi) {
  const int n = model.n();
  const DoubleAlgebra& dd = model.dd();

  const RMat ad = model.adjoint_matrix(g.matrix);
  const RVec lhs = ad * (dd.lift_g(u) + dd.lift_gstar(xi));

  // xi' = xi o Ad_{g^{-1}}, the coAdjoint transport of the covector.
  const RVec xi_prime = model.coadjoint(g.inverse(), xi);

  const RMat a_gg = ad.block(0, 0, n, n);
  const RMat b_left = poisson_g_left_matrix(model, g.matrix);
  const RMat b_right = a_gg * b_left * a_gg.transpose();

  RVec rhs(2 * n);
  rhs.head(n) = a_gg * u - b_right * xi_prime;
  rhs.tail(n) = xi_prime;
  return sup_norm(RVec(lhs - rhs));
}

}  // namespace drinfeld
