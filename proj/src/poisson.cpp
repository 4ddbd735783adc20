#include "drinfeld/poisson.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace drinfeld {

namespace {

RMat validated_antisymmetric(RMat b, const char* what) {
  const double asym = sup_norm(RMat(b + b.transpose()));
  if (asym > kConstraintTol) {
    throw ModelError(std::string(what) +
                     ": coefficient matrix is not antisymmetric (residual " +
                     std::to_string(asym) + ")");
  }
  return 0.5 * (b - b.transpose());
}

// Mirror of poisson_g_left_matrix: left-frame bivector matrix on G*,
//   B*_l[i][j] = < pr_g*(Ad_v e_i), pr_g(Ad_v e_j) >.
RMat pi_gstar_left_matrix(const MatrixGroupModel& model, const Mat& v) {
  const int n = model.n();
  const RMat ad = model.adjoint_matrix(v);
  const RMat p = ad.block(n, 0, n, n);  // g*-components of Ad_v e_i
  const RMat q = ad.block(0, 0, n, n);  // g-components of Ad_v e_i
  return validated_antisymmetric(p.transpose() * q, "pi_Gstar");
}

}  // namespace

BivectorValue pi_G_at(const MatrixGroupModel& model, const GroupElement& g) {
  return BivectorValue{SubgroupTag::G, Side::Left, g.matrix,
                       poisson_g_left_matrix(model, g.matrix)};
}

BivectorValue pi_Gstar_at(const MatrixGroupModel& model,
                          const GroupElement& v) {
  const int n = model.n();
  const RMat b_left = pi_gstar_left_matrix(model, v.matrix);
  const RMat a = model.adjoint_matrix(v.matrix).block(n, n, n, n);
  return BivectorValue{SubgroupTag::Gstar, Side::Right, v.matrix,
                       RMat(a * b_left * a.transpose())};
}

Mat pi_gstar_sharp(const MatrixGroupModel& model, const GroupElement& v,
                   const RVec& w) {
  const DoubleAlgebra& dd = model.dd();
  const RVec moved =
      model.adjoint(v.inverse(), dd.lift_g(w));
  return v.matrix * model.emb(-dd.lift_gstar(dd.pr_gstar(moved)));
}

BivectorValue pi_D_at(const MatrixGroupModel& model, const GroupElement& d) {
  const RMat ad = model.adjoint_matrix(d.matrix);
  const RMat& r = model.dd().R;
  return BivectorValue{
      SubgroupTag::D, Side::Right, d.matrix,
      validated_antisymmetric(RMat(r - ad * r * ad.transpose()), "pi_D")};
}

RMat pi_right_matrix(const MatrixGroupModel& model, SubgroupTag which,
                     const Mat& point) {
  const int n = model.n();
  switch (which) {
    case SubgroupTag::G: {
      const RMat b_left = poisson_g_left_matrix(model, point);
      const RMat a = model.adjoint_matrix(point).block(0, 0, n, n);
      return a * b_left * a.transpose();
    }
    case SubgroupTag::Gstar: {
      const RMat b_left = pi_gstar_left_matrix(model, point);
      const RMat a = model.adjoint_matrix(point).block(n, n, n, n);
      return a * b_left * a.transpose();
    }
    case SubgroupTag::D: {
      const RMat ad = model.adjoint_matrix(point);
      const RMat& r = model.dd().R;
      return r - ad * r * ad.transpose();
    }
    default:
      throw ModelError("pi_right_matrix: no bivector is attached to " +
                       subgroup_name(which));
  }
}

double multiplicativity_residual(const MatrixGroupModel& model,
                                 SubgroupTag which, const GroupElement& a,
                                 const GroupElement& b) {
  const int n = model.n();
  const Mat ab = a.matrix * b.matrix;
  const RMat pi_ab = pi_right_matrix(model, which, ab);
  const RMat pi_a = pi_right_matrix(model, which, a.matrix);
  const RMat pi_b = pi_right_matrix(model, which, b.matrix);

  RMat t;  // covector transport for l_a in the right frame
  const RMat ad = model.adjoint_matrix(a.matrix);
  switch (which) {
    case SubgroupTag::G: t = ad.block(0, 0, n, n); break;
    case SubgroupTag::Gstar: t = ad.block(n, n, n, n); break;
    default: t = ad; break;
  }
  return sup_norm(RMat(pi_ab - pi_a - t * pi_b * t.transpose()));
}

Mat dressing(const MatrixGroupModel& model, const RVec& z,
             const GroupElement& g) {
  const DoubleAlgebra& dd = model.dd();
  const RVec u = dd.pr_g(z);
  const RVec xi = dd.pr_gstar(z);
  const RMat b_left = poisson_g_left_matrix(model, g.matrix);
  return -(g.matrix * model.emb_g(RVec(u - b_left * xi)));
}

Mat dressing_via_adjoint(const MatrixGroupModel& model, const RVec& z,
                         const GroupElement& g) {
  const DoubleAlgebra& dd = model.dd();
  const RVec moved = model.adjoint(g.matrix, z);
  return -(model.emb_g(dd.pr_g(moved)) * g.matrix);
}

GroupElement dressing_flow(const MatrixGroupModel& model, const RVec& z,
                           const GroupElement& g, double t) {
  const Mat moved = g.matrix * model.emb(RVec(-t * z)).exp();
  auto [v, gt] = model.factorize(moved);
  return gt;
}

DiracElement dirac_E_at(const MatrixGroupModel& model, const Subspace& l,
                        const GroupElement& g, const RVec& z) {
  const double mem = l.membership_residual(z);
  if (mem > kMembershipTol) {
    throw ModelError("dirac_E_at: z is not in l (residual " +
                     std::to_string(mem) + ")");
  }
  const DoubleAlgebra& dd = model.dd();
  return DiracElement{g.matrix, z, dressing(model, z, g),
                      RVec(-dd.pr_gstar(z))};
}

int dirac_rank(const MatrixGroupModel& model, const Subspace& l,
               const GroupElement& g) {
  const DoubleAlgebra& dd = model.dd();
  const int n = model.n();
  RMat stacked(2 * n, l.dim());
  for (int k = 0; k < l.dim(); ++k) {
    const RVec z = l.basis_vector(k);
    const Mat x = dressing(model, z, g);
    // Right-frame coordinates of the tangent vector...
    const RVec theta = model.maurer(g, x, Side::Right);
    stacked.col(k).head(n) = dd.pr_g(theta);
    stacked.col(k).tail(n) = -dd.pr_gstar(z);
  }
  Eigen::ColPivHouseholderQR<RMat> qr(stacked);
  qr.setThreshold(1e-8);
  return static_cast<int>(qr.rank());
}

Subspace kernel_E_at(const MatrixGroupModel& model, const Subspace& l,
                     const GroupElement& g) {
  const DoubleAlgebra& dd = model.dd();
  const int n = model.n();
  const Subspace core = Subspace::intersect(l, dd.g_part);
  if (core.dim() == 0) {
    return Subspace(n, RMat::Zero(n, 0));
  }
  RMat dirs(n, core.dim());
  for (int k = 0; k < core.dim(); ++k) {
    const Mat x = dressing(model, core.basis_vector(k), g);
    const RVec theta = model.maurer(g, x, Side::Right);
    dirs.col(k) = dd.pr_g(theta);
  }
  return Subspace(n, std::move(dirs));
}

double pushforward_pi_quotient(const MatrixGroupModel& model,
                               const Subspace& l, const Subspace& h,
                               const GroupElement& g, const RVec& beta1,
                               const RVec& beta2) {
  const DoubleAlgebra& dd = model.dd();
  const int n = model.n();

  for (const RVec* b : {&beta1, &beta2}) {
    for (int k = 0; k < h.dim(); ++k) {
      if (std::abs(b->dot(dd.pr_g(h.basis_vector(k)))) > kMembershipTol) {
        throw ModelError("pushforward_pi_quotient: covector not in Ann(h)");
      }
    }
  }

  // Solve mu(z) = beta^l, i.e. pr_g*(z) = -beta, inside l; the g-part is
  // determined up to l intersect g = h, which beta2 annihilates.
  auto solve = [&](const RVec& beta) {
    RMat a(n, l.dim());
    for (int k = 0; k < l.dim(); ++k) {
      a.col(k) = dd.pr_gstar(l.basis_vector(k));
    }
    Eigen::ColPivHouseholderQR<RMat> qr(a);
    qr.setThreshold(1e-10);
    const RVec coeff = qr.solve(RVec(-beta));
    const RVec z = l.basis() * coeff;
    if (sup_norm(RVec(dd.pr_gstar(z) + beta)) > kMembershipTol) {
      throw ModelError(
          "pushforward_pi_quotient: beta is not in the image of mu");
    }
    return z;
  };

  auto evaluate = [&](const RVec& ba, const RVec& bb) {
    const RVec z = solve(ba);
    const Mat x = dressing(model, z, g);
    // Left-frame g-coordinates of the dressing vector.
    const RVec theta = model.maurer(g, x, Side::Left);
    return bb.dot(dd.pr_g(theta));
  };

  return 0.5 * (evaluate(beta1, beta2) - evaluate(beta2, beta1));
}

Subspace pairing_perp(const DoubleAlgebra& dd, const Subspace& s) {
  // x perp_B s  iff  (B s-basis) annihilates x euclideanly.
  return Subspace::euclidean_annihilator(
      Subspace(dd.d.dim(), RMat(dd.pairing.matrix * s.basis())));
}

double pi_DQ_at(const MatrixGroupModel& model, const Subspace& q,
                const GroupElement& d, const RVec& beta1, const RVec& beta2) {
  const DoubleAlgebra& dd = model.dd();
  const Subspace perp = pairing_perp(dd, q);
  for (int k = 0; k < perp.dim(); ++k) {
    if (q.membership_residual(perp.basis_vector(k)) > kMembershipTol) {
      throw ModelError("pi_DQ_at: q is not coisotropic");
    }
  }
  const RMat ann = Subspace::euclidean_annihilator(q).projector();
  for (const RVec* b : {&beta1, &beta2}) {
    if (sup_norm(RVec(ann * (*b) - *b)) > kMembershipTol) {
      throw ModelError("pi_DQ_at: covector is not in Ann(q)");
    }
  }
  const RMat m = model.adjoint_matrix(d.inverse());
  const RVec b1 = m.transpose() * beta1;
  const RVec b2 = m.transpose() * beta2;
  return b1.dot(dd.R * b2);
}

}  // namespace drinfeld
