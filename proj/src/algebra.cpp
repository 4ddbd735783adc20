#include "drinfeld/algebra.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace drinfeld {

namespace {
constexpr double kRankThreshold = 1e-10;
}  // namespace

// ---------------------------------------------------------------------------
// LieAlgebra
// ---------------------------------------------------------------------------

LieAlgebra::LieAlgebra(int dim, Field field, std::vector<std::string> labels)
    : dim_(dim),
      field_(field),
      c_(static_cast<std::size_t>(dim) * dim * dim, 0.0),
      labels_(std::move(labels)) {
  if (dim <= 0) throw ModelError("LieAlgebra: dimension must be positive");
  if (labels_.empty()) {
    for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != dim)
    throw ModelError("LieAlgebra: label count does not match dimension");
}

LieAlgebra LieAlgebra::from_triples(
    int dim, Field field,
    const std::vector<std::tuple<int, int, int, double>>& triples,
    std::vector<std::string> labels) {
  LieAlgebra a(dim, field, std::move(labels));
  for (const auto& [i, j, k, value] : triples) {
    if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim)
      throw ModelError("LieAlgebra: bracket triple index out of range");
    if (i == j)
      throw ModelError("LieAlgebra: diagonal bracket triple must vanish");
    a.c_[a.index(i, j, k)] = value;
    a.c_[a.index(j, i, k)] = -value;
  }
  return a;
}

RVec LieAlgebra::bracket(const RVec& x, const RVec& y) const {
  RVec out = RVec::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0.0) continue;
      const double xy = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) out[k] += xy * c(i, j, k);
    }
  }
  return out;
}

RMat LieAlgebra::ad(const RVec& x) const {
  RMat m = RMat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) m(k, j) += x[i] * c(i, j, k);
  }
  return m;
}

double LieAlgebra::antisymmetry_residual() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        worst = std::max(worst, std::abs(c(i, j, k) + c(j, i, k)));
  return worst;
}

double jacobi_residual(const LieAlgebra& a) {
  const int n = a.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    RVec ei = RVec::Unit(n, i);
    for (int j = i + 1; j < n; ++j) {
      RVec ej = RVec::Unit(n, j);
      RVec bij = a.bracket(ei, ej);
      for (int k = j + 1; k < n; ++k) {
        RVec ek = RVec::Unit(n, k);
        RVec total = a.bracket(bij, ek) + a.bracket(a.bracket(ej, ek), ei) +
                     a.bracket(a.bracket(ek, ei), ej);
        worst = std::max(worst, sup_norm(total));
      }
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// BilinearForm
// ---------------------------------------------------------------------------

double BilinearForm::min_singular_value() const {
  Eigen::JacobiSVD<RMat> svd(matrix);
  return svd.singularValues().size() == 0
             ? 0.0
             : svd.singularValues().tail(1)(0);
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace::Subspace(int ambient_dim, RMat basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  if (basis_.rows() != ambient_dim)
    throw ModelError("Subspace: basis rows do not match ambient dimension");
  if (basis_.cols() > 0) {
    Eigen::ColPivHouseholderQR<RMat> qr(basis_);
    qr.setThreshold(kRankThreshold);
    if (qr.rank() != basis_.cols())
      throw ModelError("Subspace: basis vectors are linearly dependent");
    // Orthonormal column span for a stable projector.
    RMat q = Eigen::HouseholderQR<RMat>(basis_)
                 .householderQ() *
             RMat::Identity(ambient_dim_, basis_.cols());
    projector_ = q * q.transpose();
  } else {
    projector_ = RMat::Zero(ambient_dim_, ambient_dim_);
  }
}

Subspace Subspace::from_vectors(int ambient_dim,
                                const std::vector<RVec>& vs) {
  RMat b(ambient_dim, static_cast<int>(vs.size()));
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) b.col(i) = vs[i];
  return Subspace(ambient_dim, std::move(b));
}

Subspace Subspace::coordinate_axes(int ambient_dim,
                                   const std::vector<int>& idx) {
  RMat b = RMat::Zero(ambient_dim, static_cast<int>(idx.size()));
  for (int i = 0; i < static_cast<int>(idx.size()); ++i) {
    if (idx[i] < 0 || idx[i] >= ambient_dim)
      throw ModelError("Subspace: coordinate index out of range");
    b(idx[i], i) = 1.0;
  }
  return Subspace(ambient_dim, std::move(b));
}

RVec Subspace::coefficients(const RVec& x) const {
  if (dim() == 0) return RVec::Zero(0);
  return basis_.colPivHouseholderQr().solve(x);
}

double Subspace::distance_to(const Subspace& other) const {
  return sup_norm(RMat(projector_ - other.projector()));
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw ModelError("Subspace: ambient dimension mismatch in intersect");
  if (a.dim() == 0 || b.dim() == 0)
    return Subspace(a.ambient_dim(), RMat::Zero(a.ambient_dim(), 0));
  RMat joint(a.ambient_dim(), a.dim() + b.dim());
  joint.leftCols(a.dim()) = a.basis();
  joint.rightCols(b.dim()) = -b.basis();
  Eigen::FullPivLU<RMat> lu(joint);
  lu.setThreshold(kRankThreshold);
  RMat ker = lu.kernel();  // columns (x; y) with A x = B y
  if (lu.dimensionOfKernel() == 0)
    return Subspace(a.ambient_dim(), RMat::Zero(a.ambient_dim(), 0));
  RMat vecs = a.basis() * ker.topRows(a.dim());
  // Re-orthonormalize to drop numerically dependent columns.
  Eigen::ColPivHouseholderQR<RMat> qr(vecs);
  qr.setThreshold(kRankThreshold);
  int r = static_cast<int>(qr.rank());
  RMat q = qr.householderQ() * RMat::Identity(a.ambient_dim(), r);
  return Subspace(a.ambient_dim(), std::move(q));
}

Subspace Subspace::euclidean_annihilator(const Subspace& s) {
  const int n = s.ambient_dim();
  if (s.dim() == 0) return Subspace(n, RMat::Identity(n, n));
  Eigen::FullPivLU<RMat> lu(RMat(s.basis().transpose()));
  lu.setThreshold(kRankThreshold);
  if (lu.dimensionOfKernel() == 0) return Subspace(n, RMat::Zero(n, 0));
  RMat ker = lu.kernel();
  return Subspace(n, std::move(ker));
}

// ---------------------------------------------------------------------------
// LieBialgebra
// ---------------------------------------------------------------------------

LieBialgebra::LieBialgebra(LieAlgebra g, std::vector<double> d)
    : g_(std::move(g)), d_(std::move(d)) {}

LieBialgebra LieBialgebra::from_cobracket_triples(
    LieAlgebra g,
    const std::vector<std::tuple<int, int, int, double>>& triples) {
  const int n = g.dim();
  std::vector<double> d(static_cast<std::size_t>(n) * n * n, 0.0);
  auto at = [n](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * n + j) * n + k;
  };
  for (const auto& [i, j, k, value] : triples) {
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
      throw ModelError("LieBialgebra: cobracket triple index out of range");
    if (j == k)
      throw ModelError("LieBialgebra: cobracket wedge indices must differ");
    d[at(i, j, k)] = value;
    d[at(i, k, j)] = -value;
  }
  return LieBialgebra(std::move(g), std::move(d));
}

LieAlgebra LieBialgebra::dual_algebra() const {
  const int n = g_.dim();
  std::vector<std::tuple<int, int, int, double>> triples;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int i = 0; i < n; ++i) {
        const double cs = -d(i, a, b);  // delta(u)(xi,eta) = -u([xi,eta])
        if (cs != 0.0) triples.emplace_back(a, b, i, cs);
      }
  std::vector<std::string> labels;
  for (const auto& name : g_.labels()) labels.push_back(name + "*");
  return LieAlgebra::from_triples(n, g_.field(), triples, std::move(labels));
}

double LieBialgebra::cobracket_antisymmetry_residual() const {
  const int n = g_.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(d(i, j, k) + d(i, k, j)));
  return worst;
}

// ---------------------------------------------------------------------------
// DoubleAlgebra
// ---------------------------------------------------------------------------

RVec DoubleAlgebra::lift_g(const RVec& u) const {
  RVec x = RVec::Zero(d.dim());
  x.head(n()) = u;
  return x;
}

RVec DoubleAlgebra::lift_gstar(const RVec& xi) const {
  RVec x = RVec::Zero(d.dim());
  x.tail(n()) = xi;
  return x;
}

DoubleAlgebra double_from_bialgebra(const LieBialgebra& b) {
  if (b.cobracket_antisymmetry_residual() != 0.0)
    throw ModelError("double_from_bialgebra: cobracket not antisymmetric");
  const LieAlgebra& g = b.g();
  const LieAlgebra gstar = b.dual_algebra();
  if (gstar.antisymmetry_residual() != 0.0)
    throw ModelError("double_from_bialgebra: dual bracket not antisymmetric");
  const int n = g.dim();
  const int dim = 2 * n;

  std::vector<std::tuple<int, int, int, double>> triples;
  // [e_i, e_j] = c[i][j][k] e_k
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.c(i, j, k) != 0.0) triples.emplace_back(i, j, k, g.c(i, j, k));
  // [xi^a, xi^b] = cstar[a][b][i] xi^i
  for (int a = 0; a < n; ++a)
    for (int bb = a + 1; bb < n; ++bb)
      for (int i = 0; i < n; ++i)
        if (gstar.c(a, bb, i) != 0.0)
          triples.emplace_back(n + a, n + bb, n + i, gstar.c(a, bb, i));
  // [e_i, xi^b] = -ad*_{xi^b} e_i + ad*_{e_i} xi^b
  //            = -sum_a cstar[a][b][i] e_a + sum_a c[a][i][b] xi^a
  for (int i = 0; i < n; ++i)
    for (int bb = 0; bb < n; ++bb) {
      for (int a = 0; a < n; ++a) {
        const double cg = -gstar.c(a, bb, i);
        if (cg != 0.0) triples.emplace_back(i, n + bb, a, cg);
        const double cs = g.c(a, i, bb);
        if (cs != 0.0) triples.emplace_back(i, n + bb, n + a, cs);
      }
    }

  std::vector<std::string> labels = g.labels();
  for (const auto& name : gstar.labels()) labels.push_back(name);
  LieAlgebra d =
      LieAlgebra::from_triples(dim, g.field(), triples, std::move(labels));

  BilinearForm pairing;
  pairing.matrix = RMat::Zero(dim, dim);
  pairing.matrix.topRightCorner(n, n) = RMat::Identity(n, n);
  pairing.matrix.bottomLeftCorner(n, n) = RMat::Identity(n, n);
  pairing.quadratic = true;

  RMat R = RMat::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    R(i, n + i) = -0.5;
    R(n + i, i) = 0.5;
  }

  std::vector<int> gidx(n), sidx(n);
  for (int i = 0; i < n; ++i) {
    gidx[i] = i;
    sidx[i] = n + i;
  }
  return DoubleAlgebra{std::move(d), std::move(pairing),
                       Subspace::coordinate_axes(dim, gidx),
                       Subspace::coordinate_axes(dim, sidx), std::move(R)};
}

RVec ad_star_g(const DoubleAlgebra& dd, const RVec& u, const RVec& eta) {
  const int n = dd.n();
  RVec out = RVec::Zero(n);
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb)
      for (int k = 0; k < n; ++k)
        out[a] += u[bb] * dd.c_g(a, bb, k) * eta[k];
  return out;
}

RVec ad_star_gstar(const DoubleAlgebra& dd, const RVec& xi, const RVec& w) {
  const int n = dd.n();
  RVec out = RVec::Zero(n);
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb)
      for (int i = 0; i < n; ++i)
        out[a] += xi[bb] * dd.c_gstar(a, bb, i) * w[i];
  return out;
}

RVec reassembled_bracket(const DoubleAlgebra& dd, const RVec& x,
                         const RVec& y) {
  const int n = dd.n();
  RVec u = dd.pr_g(x), xi = dd.pr_gstar(x);
  RVec w = dd.pr_g(y), eta = dd.pr_gstar(y);

  // Brackets of the halves, in their own coordinates.
  RVec guw = RVec::Zero(n), sxe = RVec::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        guw[k] += u[i] * w[j] * dd.c_g(i, j, k);
        sxe[k] += xi[i] * eta[j] * dd.c_gstar(i, j, k);
      }

  RVec g_part = guw + ad_star_gstar(dd, xi, w) - ad_star_gstar(dd, eta, u);
  RVec s_part = sxe + ad_star_g(dd, u, eta) - ad_star_g(dd, w, xi);
  RVec out(2 * n);
  out.head(n) = g_part;
  out.tail(n) = s_part;
  return out;
}

double pairing_ad_invariance_residual(const DoubleAlgebra& dd) {
  const int dim = dd.d.dim();
  double worst = 0.0;
  for (int a = 0; a < dim; ++a) {
    RVec ea = RVec::Unit(dim, a);
    for (int b = 0; b < dim; ++b) {
      RVec eb = RVec::Unit(dim, b);
      RVec ab = dd.d.bracket(ea, eb);
      for (int c = 0; c < dim; ++c) {
        RVec ec = RVec::Unit(dim, c);
        double r = dd.pair(ab, ec) + dd.pair(eb, dd.d.bracket(ea, ec));
        worst = std::max(worst, std::abs(r));
      }
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Lagrangian subalgebras
// ---------------------------------------------------------------------------

LagrangianReport is_lagrangian_subalgebra(const DoubleAlgebra& dd,
                                          const Subspace& s, double tol) {
  if (s.ambient_dim() != dd.d.dim())
    throw ModelError("is_lagrangian_subalgebra: ambient dimension mismatch");
  LagrangianReport rep;
  rep.half_dim = (s.dim() == dd.n());
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j)
      rep.isotropy_residual =
          std::max(rep.isotropy_residual,
                   std::abs(dd.pair(s.basis_vector(i), s.basis_vector(j))));
  rep.isotropic = rep.isotropy_residual <= tol;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) {
      RVec br = dd.d.bracket(s.basis_vector(i), s.basis_vector(j));
      rep.closure_residual =
          std::max(rep.closure_residual, s.membership_residual(br));
    }
  rep.closed = rep.closure_residual <= tol;
  return rep;
}

SplittingReport is_lagrangian_splitting(const DoubleAlgebra& dd,
                                        const Subspace& s1, const Subspace& s2,
                                        double tol) {
  SplittingReport rep;
  rep.first = is_lagrangian_subalgebra(dd, s1, tol);
  rep.second = is_lagrangian_subalgebra(dd, s2, tol);
  RMat joint(dd.d.dim(), s1.dim() + s2.dim());
  joint.leftCols(s1.dim()) = s1.basis();
  joint.rightCols(s2.dim()) = s2.basis();
  Eigen::ColPivHouseholderQR<RMat> qr(joint);
  qr.setThreshold(kRankThreshold);
  rep.complementary = (qr.rank() == dd.d.dim());
  return rep;
}

// ---------------------------------------------------------------------------
// Schouten square of R
// ---------------------------------------------------------------------------

namespace {

// Adds coeff * (x ^ y ^ z) to the full antisymmetric array T.
void add_wedge3(std::vector<double>& T, int dim, double coeff, const RVec& x,
                const RVec& y, const RVec& z) {
  if (coeff == 0.0) return;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c) {
        const double det = x[a] * (y[b] * z[c] - y[c] * z[b]) -
                           x[b] * (y[a] * z[c] - y[c] * z[a]) +
                           x[c] * (y[a] * z[b] - y[b] * z[a]);
        T[(static_cast<std::size_t>(a) * dim + b) * dim + c] += coeff * det;
      }
}

}  // namespace

std::vector<double> schouten_rr(const DoubleAlgebra& dd) {
  const int dim = dd.d.dim();
  const int n = dd.n();
  std::vector<double> T(static_cast<std::size_t>(dim) * dim * dim, 0.0);
  // R = (1/2) sum_i xi^i ^ e_i; [R,R] = (1/4) sum_{ij} [xi^i ^ e_i, xi^j ^
  // e_j], each term expanded with the standard Schouten formula for
  // decomposables:
  //   [x1^x2, y1^y2] = [x1,y1]^x2^y2 - [x1,y2]^x2^y1
  //                  - [x2,y1]^x1^y2 + [x2,y2]^x1^y1.
  for (int i = 0; i < n; ++i) {
    RVec x1 = RVec::Unit(dim, n + i);  // xi^i
    RVec x2 = RVec::Unit(dim, i);      // e_i
    for (int j = 0; j < n; ++j) {
      RVec y1 = RVec::Unit(dim, n + j);
      RVec y2 = RVec::Unit(dim, j);
      add_wedge3(T, dim, 0.25, dd.d.bracket(x1, y1), x2, y2);
      add_wedge3(T, dim, -0.25, dd.d.bracket(x1, y2), x2, y1);
      add_wedge3(T, dim, -0.25, dd.d.bracket(x2, y1), x1, y2);
      add_wedge3(T, dim, 0.25, dd.d.bracket(x2, y2), x1, y1);
    }
  }
  return T;
}

double rr_check(const DoubleAlgebra& dd, double /*tol*/) {
  const int dim = dd.d.dim();
  const std::vector<double> T = schouten_rr(dd);
  const RMat& B = dd.pairing.matrix;

  // <T, a^b^c> is the Gram-determinant pairing; for a full antisymmetric
  // component array it equals the plain contraction of each slot of T with
  // the pairing images B a, B b, B c.
  auto pair_vec = [&](const RVec& v) { return RVec(B * v); };

  double worst = 0.0;
  for (int a = 0; a < dim; ++a) {
    RVec ea = RVec::Unit(dim, a);
    RVec pa = pair_vec(ea);
    for (int b = 0; b < dim; ++b) {
      RVec eb = RVec::Unit(dim, b);
      RVec pb = pair_vec(eb);
      for (int c = 0; c < dim; ++c) {
        RVec ec = RVec::Unit(dim, c);
        RVec pc = pair_vec(ec);
        double lhs = 0.0;
        for (int p = 0; p < dim; ++p) {
          if (pa[p] == 0.0 && pb[p] == 0.0 && pc[p] == 0.0) continue;
          for (int q = 0; q < dim; ++q)
            for (int r = 0; r < dim; ++r) {
              const double t =
                  T[(static_cast<std::size_t>(p) * dim + q) * dim + r];
              if (t == 0.0) continue;
              lhs += t * pa[p] * pb[q] * pc[r];
            }
        }
        const double rhs = dd.pair(ea, dd.d.bracket(eb, ec));
        worst = std::max(worst, std::abs(-4.0 * lhs - 2.0 * rhs));
      }
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Drinfeld lagrangian subalgebra
// ---------------------------------------------------------------------------

RMat quotient_complement_basis(int n, const Subspace& h) {
  if (h.dim() == 0) return RMat::Identity(n, n);
  Eigen::HouseholderQR<RMat> qr(h.basis());
  RMat q = qr.householderQ();
  return q.rightCols(n - h.dim());
}

Subspace drinfeld_subalgebra(const DoubleAlgebra& dd, const Subspace& h,
                             const RMat& Lambda) {
  const int n = dd.n();
  if (h.ambient_dim() != n)
    throw ModelError("drinfeld_subalgebra: h must live in g coordinates");
  const int k = h.dim();
  const RMat comp = quotient_complement_basis(n, h);  // n x (n-k)
  if (Lambda.rows() != n - k || Lambda.cols() != n - k)
    throw ModelError("drinfeld_subalgebra: Lambda has wrong size for g/h");
  if (sup_norm(RMat(Lambda + Lambda.transpose())) > kMembershipTol)
    throw ModelError("drinfeld_subalgebra: Lambda must be antisymmetric");

  // Ann(h) in g* coordinates.
  const Subspace ann = Subspace::euclidean_annihilator(h);
  if (ann.dim() != n - k)
    throw ModelError("drinfeld_subalgebra: annihilator has wrong dimension");

  RMat basis = RMat::Zero(2 * n, n);
  // h itself, embedded in g.
  for (int i = 0; i < k; ++i) basis.col(i).head(n) = h.basis_vector(i);
  // For xi in Ann(h): u = representative of i_xi Lambda, coords Lambda^T
  // (restriction of xi to the complement).
  for (int a = 0; a < ann.dim(); ++a) {
    RVec xi = ann.basis_vector(a);
    RVec xi_bar = comp.transpose() * xi;          // coords in (g/h)*
    RVec u = comp * (Lambda.transpose() * xi_bar);  // representative in g
    basis.col(k + a).head(n) = u;
    basis.col(k + a).tail(n) = xi;
  }
  Subspace out(2 * n, std::move(basis));
  if (out.dim() != n)
    throw ModelError("drinfeld_subalgebra: constructed space has wrong dim");
  return out;
}

}  // namespace drinfeld
