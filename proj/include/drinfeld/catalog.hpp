#pragma once

// Worked examples: concrete matrix models of doubles with their subgroup
// data, lagrangian cases, and factorization oracles.
//
//   su2_iwasawa       D = SL(2,C), G = SU(2), G* = AN (upper triangular,
//                     positive real diagonal); cases l = g* and l = t + n.
//   cp1_bruhat        same model plus H = U(1) diagonal torus, Lambda = 0,
//                     l = t + n, L = upper triangular with U(1) diagonal.
//   trivial_bialgebra g = sl2(R) with zero cobracket, D = G x g* as block
//                     matrices, G* abelian; cases l = g* and l = g.
//   affine_poisson    su2_iwasawa restricted to l = g* (symplectic case).

#include <functional>
#include <string>
#include <vector>

#include "drinfeld/algebra.hpp"
#include "drinfeld/group.hpp"

namespace drinfeld {

struct LagrangianCase {
  std::string name;           // which L is plugged into the model
  int expected_l_cap_g_dim;   // dim(l intersect g)
  bool symplectic;            // true when the case has full-rank omega
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::vector<LagrangianCase> cases;
  bool has_h = false;
  RMat lambda;                // homogeneous-space bivector at the base point
                              // (rows/cols indexed by the complement of h in
                              // g); empty when the entry carries no H.
  std::function<MatrixGroupModel(int case_index)> build;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& find_entry(const std::string& name);

// Direct builders (the catalog wraps these).
LieBialgebra su2_standard_bialgebra();
LieBialgebra sl2_trivial_bialgebra();

// l_case: "gstar" or "tn".  with_h adds the U(1) diagonal torus.
MatrixGroupModel make_su2_model(const std::string& l_case, bool with_h);
// l_case: "gstar" or "g".
MatrixGroupModel make_trivial_model(const std::string& l_case);

}  // namespace drinfeld
