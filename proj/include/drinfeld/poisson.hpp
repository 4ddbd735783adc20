#pragma once

// Pointwise evaluation of the Poisson bivectors on G, G*, and D, the
// dressing action, affine Dirac structures, and pushforward Poisson
// evaluation on quotients.
//
// Frame conventions: a BivectorValue stores the coefficient matrix of the
// bivector against covector coordinates in the declared frame; the value on
// covectors a, b is a^T * matrix * b.  Covector coordinates are the
// functional's values on the coordinate basis (g-covectors are g*-vectors
// and vice versa; d-covectors are 2n-vectors).  All residual comparisons
// translate to the right frame first.

#include "drinfeld/algebra.hpp"
#include "drinfeld/group.hpp"
#include "drinfeld/types.hpp"

namespace drinfeld {

struct BivectorValue {
  SubgroupTag group;
  Side frame;
  Mat base;     // base point, ambient matrix
  RMat matrix;  // antisymmetric coefficients

  double operator()(const RVec& a, const RVec& b) const {
    return a.dot(matrix * b);
  }
};

// One leg of the affine Dirac structure E = I(l_G) at g: the pair
// (X, alpha) = (rho_d(z)|_g, -(xi)^l|_g) attached to z = u + xi in l.
struct DiracElement {
  Mat base;        // g
  RVec z;          // double coordinates, member of l
  Mat x;           // ambient tangent matrix at g
  RVec alpha;      // covector in left-frame coordinates (= -xi)
};

// pi_G at g in G, left frame:
//   pi_G(xi1^l, xi2^l)|_g = < pr_g(Ad_g xi1), pr_g*(Ad_g xi2) >.
BivectorValue pi_G_at(const MatrixGroupModel& model, const GroupElement& g);

// pi_G* at v in G*, right frame (the mirror formula with the roles of g and
// g* exchanged, transported by the g*-block of Ad_v).
BivectorValue pi_Gstar_at(const MatrixGroupModel& model,
                          const GroupElement& v);

// Sharp form: pi_G*^#(w^r)|_v = -(pr_g*(Ad_{v^{-1}} w))^l|_v as an ambient
// tangent matrix at v.
Mat pi_gstar_sharp(const MatrixGroupModel& model, const GroupElement& v,
                   const RVec& w);

// pi_D at d in D, right frame: R^r - R^l, i.e. R - Ad(d) R Ad(d)^T.
BivectorValue pi_D_at(const MatrixGroupModel& model, const GroupElement& d);

// Right-frame coefficient matrix of the bivector on the tagged subgroup.
RMat pi_right_matrix(const MatrixGroupModel& model, SubgroupTag which,
                     const Mat& point);

// || pi|_{ab} - l_a(pi|_b) - r_b(pi|_a) ||_inf, evaluated in the right frame.
double multiplicativity_residual(const MatrixGroupModel& model,
                                 SubgroupTag which, const GroupElement& a,
                                 const GroupElement& b);

// Dressing vector field of the double: rho_d(u + xi)|_g =
// -(u^l + pi_G^#(xi^l))|_g, as an ambient tangent matrix at g.
Mat dressing(const MatrixGroupModel& model, const RVec& z,
             const GroupElement& g);

// Independent route: rho_d(z)|_g = -emb(pr_g(Ad_g z)) * g.  Agrees with
// dressing() exactly when the Ad-decomposition identity holds.
Mat dressing_via_adjoint(const MatrixGroupModel& model, const RVec& z,
                         const GroupElement& g);

// Flow of the dressing field through g: the G-factor of g * exp(-t z).
// Requires the factorization oracle.
GroupElement dressing_flow(const MatrixGroupModel& model, const RVec& z,
                           const GroupElement& g, double t);

DiracElement dirac_E_at(const MatrixGroupModel& model, const Subspace& l,
                        const GroupElement& g, const RVec& z);

// Rank of z -> (rho_d(z), mu(z)) over a basis of l; equals dim(l) exactly
// when E is realized transversally at g.
int dirac_rank(const MatrixGroupModel& model, const Subspace& l,
               const GroupElement& g);

// Ker(E)|_g = { rho_d(z)|_g : z in l intersect g }, returned as the span of
// the right-frame g-coordinates of the kernel directions.
Subspace kernel_E_at(const MatrixGroupModel& model, const Subspace& l,
                     const GroupElement& g);

// Pushforward Poisson structure on G/H evaluated at gH on covectors
// beta1, beta2 in Ann(h) (g*-coordinates), transported to g by left
// translation.  Solves mu(z1) = q* beta1 inside l and pairs the dressing
// vector with beta2; antisymmetrized over the two routes.
double pushforward_pi_quotient(const MatrixGroupModel& model,
                               const Subspace& l, const Subspace& h,
                               const GroupElement& g, const RVec& beta1,
                               const RVec& beta2);

// Poisson structure on D/Q for a coisotropic subalgebra q: the pushforward
// of R^r evaluated at dQ on covectors beta1, beta2 in Ann(q) (double
// coordinates, realized by left translation).  Throws when q is not
// coisotropic (q_perp not contained in q).
double pi_DQ_at(const MatrixGroupModel& model, const Subspace& q,
                const GroupElement& d, const RVec& beta1, const RVec& beta2);

// Orthogonal complement with respect to the double pairing.
Subspace pairing_perp(const DoubleAlgebra& dd, const Subspace& s);

}  // namespace drinfeld
