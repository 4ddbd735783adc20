#pragma once

// Matrix realizations of the double D and its subgroups G, G*, L, H:
// exponentials, Adjoint/coAdjoint operators, Maurer-Cartan translations, and
// optional global G* x G factorization oracles.
//
// Matrix conventions: l_g(h) = gh, r_g(h) = hg, u^r|_g = u*g, u^l|_g = g*u,
// Ad_g u = g u g^{-1}.  The coAdjoint dictionary used throughout is
// Ad*_{g^{-1}} xi = xi o Ad_{g^{-1}}, certified against the honest Ad of the
// ambient double by the Gond-1 residual below.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/algebra.hpp"
#include "drinfeld/rng.hpp"
#include "drinfeld/types.hpp"

namespace drinfeld {

enum class SubgroupTag { D, G, Gstar, L, H };
enum class Side { Left, Right };

std::string subgroup_name(SubgroupTag tag);

struct SubgroupDescriptor {
  std::string name;
  Subspace algebra;  // subalgebra of the double, in double coordinates
  // Residual-valued membership predicate; <= tol means member.
  std::function<double(const Mat&)> membership;
  // Optional closed-form exponential (input: double coordinates in the
  // subalgebra); empty means use the generic matrix exponential.
  std::function<Mat(const RVec&)> closed_exp;
};

class MatrixGroupModel;

struct GroupElement {
  const MatrixGroupModel* model = nullptr;
  SubgroupTag tag = SubgroupTag::D;
  Mat matrix;

  Mat inverse() const { return matrix.inverse(); }
};

class MatrixGroupModel {
 public:
  MatrixGroupModel(std::string name, int N, Field field, DoubleAlgebra dd,
                   std::vector<Mat> emb_basis,
                   std::map<SubgroupTag, SubgroupDescriptor> subgroups,
                   std::string oracle_name,
                   std::function<std::pair<Mat, Mat>(const Mat&)> factorize);

  const std::string& name() const { return name_; }
  int N() const { return N_; }
  Field field() const { return field_; }
  const DoubleAlgebra& dd() const { return dd_; }
  int n() const { return dd_.n(); }
  int dim() const { return dd_.d.dim(); }

  const Mat& emb_basis(int A) const { return emb_basis_[A]; }
  Mat emb(const RVec& x) const;          // x in double coordinates
  Mat emb_g(const RVec& u) const;        // u in g coordinates
  Mat emb_gstar(const RVec& xi) const;   // xi in g* coordinates
  // Least-squares pullback through emb; *residual (if given) receives the
  // sup-norm defect of the reconstruction.
  RVec pullback(const Mat& m, double* residual = nullptr) const;

  bool has_subgroup(SubgroupTag tag) const {
    return subgroups_.count(tag) > 0;
  }
  const SubgroupDescriptor& subgroup(SubgroupTag tag) const;

  bool has_factorize() const { return static_cast<bool>(factorize_); }
  const std::string& oracle_name() const { return oracle_name_; }

  // --- validation ----------------------------------------------------------
  struct Validation {
    double emb_hom_residual = 0.0;      // emb([x,y]) vs [emb x, emb y]
    double subalgebra_closure = 0.0;    // worst bracket-closure defect
    double h_containment = 0.0;         // h inside both g and l
  };
  Validation validate() const;

  // --- operations ----------------------------------------------------------
  GroupElement exp(const RVec& x) const;  // tag D
  // x in double coordinates, must lie in the subalgebra of `tag`.
  GroupElement exp_in(SubgroupTag tag, const RVec& x) const;
  GroupElement element(SubgroupTag tag, Mat m, double tol = kConstraintTol)
      const;

  // Coordinates of g * emb(x) * g^{-1}; throws when the pullback defect
  // exceeds tol (the embedded double would not be Ad-stable).
  RVec adjoint(const Mat& g, const RVec& x, double tol = kConstraintTol) const;
  // Matrix of Ad_g on double coordinates, columns = adjoint of basis vectors.
  RMat adjoint_matrix(const Mat& g, double tol = kConstraintTol) const;
  // xi o Ad_g on g, for g in G (uses the g-block of the Adjoint matrix).
  RVec coadjoint(const Mat& g, const RVec& xi) const;

  // theta^r(X) = coords(X g^{-1}) or theta^l(X) = coords(g^{-1} X); checks
  // that the translate lies in the subalgebra of g's tag.
  RVec maurer(const GroupElement& g, const Mat& X, Side side,
              double tol = kConstraintTol) const;

  GroupElement random_element(SubgroupTag tag, double radius,
                              SplitMix64& rng) const;
  GroupElement random_element(SubgroupTag tag, double radius,
                              std::uint64_t seed) const;

  // Splits d = v * g with v in G*, g in G; requires the oracle.
  std::pair<GroupElement, GroupElement> factorize(const Mat& d) const;

 private:
  std::string name_;
  int N_;
  Field field_;
  DoubleAlgebra dd_;
  std::vector<Mat> emb_basis_;
  std::map<SubgroupTag, SubgroupDescriptor> subgroups_;
  std::string oracle_name_;
  std::function<std::pair<Mat, Mat>(const Mat&)> factorize_;

  // Precomputed real least-squares system for pullback: stacked
  // [Re(emb); Im(emb)] as a (2 N^2) x dim matrix with its QR factorization.
  RMat emb_stack_;
  Eigen::ColPivHouseholderQR<RMat> emb_qr_;
};

// Left-frame Poisson-Lie bivector matrix at g in G,
//   B_l[a][b] = < pr_g(Ad_g xi^a), pr_g*(Ad_g xi^b) >,
// validated antisymmetric.  The higher-level bivector evaluators wrap this.
RMat poisson_g_left_matrix(const MatrixGroupModel& model, const Mat& g);

// Residual of Ad_g(u + xi) = Ad_g u + i_{Ad*_{g^{-1}} xi}(r_{g^{-1}} piG|_g)
// + Ad*_{g^{-1}} xi for one sample (u, xi) at g in G.  This is the identity
// that certifies the matrix model is a genuine Drinfeld double.
double verify_gond1(const MatrixGroupModel& model, const GroupElement& g,
                    const RVec& u, const RVec& xi);

}  // namespace drinfeld
