#include "drinfeld/catalog.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <utility>

namespace drinfeld {

namespace {

using std::abs;
using std::imag;
using std::real;

const Complex kI(0.0, 1.0);

Mat mat2(Complex a, Complex b, Complex c, Complex d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

// --- SU(2) / SL(2,C) model ---------------------------------------------------

// Basis of su(2): E0 = (i/2) sigma3, E1 = (1/2)[[0,1],[-1,0]],
// E2 = (i/2) sigma1.  Dual basis of the upper-triangular an:
// xi0 = (1/2)[[1,0],[0,-1]], xi1 = [[0,-i],[0,0]], xi2 = [[0,1],[0,0]].
// These satisfy <E_i, xi^j> = delta_ij for <x,y> = 2 Im tr(xy).
std::vector<Mat> su2_embedding() {
  std::vector<Mat> e;
  e.push_back(mat2(0.5 * kI, 0, 0, -0.5 * kI));
  e.push_back(mat2(0, 0.5, -0.5, 0));
  e.push_back(mat2(0, 0.5 * kI, 0.5 * kI, 0));
  e.push_back(mat2(0.5, 0, 0, -0.5));
  e.push_back(mat2(0, -kI, 0, 0));
  e.push_back(mat2(0, 1, 0, 0));
  return e;
}

double det2_residual(const Mat& g) {
  return abs(g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) - Complex(1.0));
}

double su2_membership(const Mat& g) {
  return sup_norm(Mat(g.adjoint() * g - Mat::Identity(2, 2))) +
         det2_residual(g);
}

double an_membership(const Mat& g) {
  return abs(g(1, 0)) + abs(imag(g(0, 0))) + abs(imag(g(1, 1))) +
         std::max(0.0, -real(g(0, 0))) + std::max(0.0, -real(g(1, 1))) +
         det2_residual(g);
}

// Upper triangular with diagonal in U(1): [[lam, b], [0, conj(lam)]].
double tn_membership(const Mat& g) {
  return abs(g(1, 0)) + abs(abs(g(0, 0)) - 1.0) +
         abs(g(1, 1) - std::conj(g(0, 0)));
}

double u1_membership(const Mat& g) {
  return abs(g(0, 1)) + abs(g(1, 0)) + abs(abs(g(0, 0)) - 1.0) +
         abs(g(1, 1) - std::conj(g(0, 0)));
}

// Gram-Schmidt factorization d = v g with g in SU(2) and v upper triangular
// with positive real diagonal: orthonormalize the bottom row of d.
std::pair<Mat, Mat> su2_an_factorize(const Mat& d) {
  const Complex c = d(1, 0);
  const Complex dd = d(1, 1);
  const double norm = std::sqrt(std::norm(c) + std::norm(dd));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw ModelError("factorize: singular bottom row");
  }
  const double r = 1.0 / norm;
  const Complex alpha = r * std::conj(dd);
  const Complex beta = -r * std::conj(c);
  Mat g = mat2(alpha, beta, -std::conj(beta), std::conj(alpha));
  Mat v = d * g.adjoint();
  // Clean the structural zeros/reals so membership residuals reflect the
  // factorization quality, not accumulation in entries known exactly.
  v(1, 0) = Complex(0.0);
  v(0, 0) = Complex(real(v(0, 0)));
  v(1, 1) = Complex(real(v(1, 1)));
  return {std::move(v), std::move(g)};
}

// --- trivial bialgebra model -------------------------------------------------

// g = sl2(R) in the basis (h, e, f); K(x, y) = tr(xy) in the 2x2 realization.
RMat sl2_trace_form() {
  RMat k = RMat::Zero(3, 3);
  k(0, 0) = 2.0;
  k(1, 2) = 1.0;
  k(2, 1) = 1.0;
  return k;
}

double block_shape_residual(const Mat& m) {
  // Deviation from [[*, 0], [*, 1]] block shape in gl(4).
  double r = abs(m(3, 3) - Complex(1.0));
  for (int i = 0; i < 3; ++i) r += abs(m(i, 3));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r += abs(imag(m(i, j)));
  return r;
}

double form_preservation_residual(const Mat& m) {
  const RMat k = sl2_trace_form();
  const RMat a = m.block(0, 0, 3, 3).real();
  return sup_norm(RMat(a.transpose() * k * a - k)) +
         abs(a.determinant() - 1.0);
}

double trivial_g_membership(const Mat& m) {
  double r = block_shape_residual(m) + form_preservation_residual(m);
  for (int j = 0; j < 3; ++j) r += abs(m(3, j));
  return r;
}

double trivial_gstar_membership(const Mat& m) {
  return block_shape_residual(m) +
         sup_norm(Mat(m.block(0, 0, 3, 3) - Mat::Identity(3, 3)));
}

double trivial_d_membership(const Mat& m) {
  return block_shape_residual(m) + form_preservation_residual(m);
}

std::pair<Mat, Mat> trivial_factorize(const Mat& d) {
  Mat g = Mat::Identity(4, 4);
  g.block(0, 0, 3, 3) = d.block(0, 0, 3, 3);
  Mat v = Mat::Identity(4, 4);
  v.block(3, 0, 1, 3) =
      d.block(3, 0, 1, 3) * d.block(0, 0, 3, 3).inverse();
  return {std::move(v), std::move(g)};
}

}  // namespace

LieBialgebra su2_standard_bialgebra() {
  LieAlgebra g = LieAlgebra::from_triples(
      3, Field::Real, {{0, 1, 2, 1.0}, {1, 2, 0, 1.0}, {2, 0, 1, 1.0}},
      {"E0", "E1", "E2"});
  // delta(E1) = -E0 ^ E1, delta(E2) = -E0 ^ E2.
  return LieBialgebra::from_cobracket_triples(
      std::move(g), {{1, 0, 1, -1.0}, {2, 0, 2, -1.0}});
}

LieBialgebra sl2_trivial_bialgebra() {
  LieAlgebra g = LieAlgebra::from_triples(
      3, Field::Real, {{0, 1, 1, 2.0}, {0, 2, 2, -2.0}, {1, 2, 0, 1.0}},
      {"h", "e", "f"});
  return LieBialgebra::from_cobracket_triples(std::move(g), {});
}

MatrixGroupModel make_su2_model(const std::string& l_case, bool with_h) {
  DoubleAlgebra dd = double_from_bialgebra(su2_standard_bialgebra());

  std::map<SubgroupTag, SubgroupDescriptor> subs;
  subs[SubgroupTag::D] = SubgroupDescriptor{
      "SL(2,C)", Subspace::coordinate_axes(6, {0, 1, 2, 3, 4, 5}),
      det2_residual, {}};
  subs[SubgroupTag::G] = SubgroupDescriptor{
      "SU(2)", Subspace::coordinate_axes(6, {0, 1, 2}), su2_membership, {}};
  subs[SubgroupTag::Gstar] = SubgroupDescriptor{
      "AN", Subspace::coordinate_axes(6, {3, 4, 5}), an_membership, {}};

  if (l_case == "gstar") {
    subs[SubgroupTag::L] = SubgroupDescriptor{
        "AN", Subspace::coordinate_axes(6, {3, 4, 5}), an_membership, {}};
  } else if (l_case == "tn") {
    subs[SubgroupTag::L] = SubgroupDescriptor{
        "TN", Subspace::coordinate_axes(6, {0, 4, 5}), tn_membership, {}};
  } else {
    throw ModelError("make_su2_model: unknown lagrangian case " + l_case);
  }
  if (with_h) {
    subs[SubgroupTag::H] = SubgroupDescriptor{
        "U(1)", Subspace::coordinate_axes(6, {0}), u1_membership, {}};
  }

  return MatrixGroupModel("su2", 2, Field::Complex, std::move(dd),
                          su2_embedding(), std::move(subs),
                          "gram_schmidt_su2", su2_an_factorize);
}

MatrixGroupModel make_trivial_model(const std::string& l_case) {
  DoubleAlgebra dd = double_from_bialgebra(sl2_trivial_bialgebra());

  // emb(u + eta) = [[ad_u, 0], [eta^T, 0]] in gl(4, R).
  std::vector<Mat> basis;
  for (int a = 0; a < 3; ++a) {
    Mat m = Mat::Zero(4, 4);
    m.block(0, 0, 3, 3) =
        dd.d.ad(dd.lift_g(RVec::Unit(3, a))).block(0, 0, 3, 3).cast<Complex>();
    basis.push_back(std::move(m));
  }
  for (int a = 0; a < 3; ++a) {
    Mat m = Mat::Zero(4, 4);
    m(3, a) = Complex(1.0);
    basis.push_back(std::move(m));
  }

  std::map<SubgroupTag, SubgroupDescriptor> subs;
  subs[SubgroupTag::D] = SubgroupDescriptor{
      "Ad(SL2) x sl2*", Subspace::coordinate_axes(6, {0, 1, 2, 3, 4, 5}),
      trivial_d_membership, {}};
  subs[SubgroupTag::G] = SubgroupDescriptor{
      "Ad(SL2)", Subspace::coordinate_axes(6, {0, 1, 2}),
      trivial_g_membership, {}};
  auto gstar_exp = [](const RVec& x) {
    Mat m = Mat::Identity(4, 4);
    for (int a = 0; a < 3; ++a) m(3, a) = Complex(x[3 + a]);
    return m;
  };
  subs[SubgroupTag::Gstar] = SubgroupDescriptor{
      "sl2* (abelian)", Subspace::coordinate_axes(6, {3, 4, 5}),
      trivial_gstar_membership, gstar_exp};

  if (l_case == "gstar") {
    subs[SubgroupTag::L] = subs[SubgroupTag::Gstar];
    subs[SubgroupTag::L].name = "sl2* as L";
  } else if (l_case == "g") {
    subs[SubgroupTag::L] = subs[SubgroupTag::G];
    subs[SubgroupTag::L].name = "Ad(SL2) as L";
  } else {
    throw ModelError("make_trivial_model: unknown lagrangian case " + l_case);
  }

  return MatrixGroupModel("trivial_sl2", 4, Field::Real, std::move(dd),
                          std::move(basis), std::move(subs), "triangular",
                          trivial_factorize);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;

    v.push_back(CatalogEntry{
        "su2_iwasawa",
        "D = SL(2,C), G = SU(2), G* = AN; lagrangian cases l = g* and "
        "l = t + n",
        {{"gstar", 0, true}, {"tn", 1, false}},
        false,
        RMat(),
        [](int c) {
          return make_su2_model(c == 0 ? "gstar" : "tn", false);
        }});

    v.push_back(CatalogEntry{
        "cp1_bruhat",
        "SU(2) model with H = U(1) diagonal torus, Lambda = 0, l = t + n",
        {{"tn", 1, false}},
        true,
        RMat::Zero(2, 2),
        [](int) { return make_su2_model("tn", true); }});

    v.push_back(CatalogEntry{
        "trivial_bialgebra",
        "g = sl2(R), zero cobracket, D = G x g*; cases l = g* (T*G) and "
        "l = g (zero form)",
        {{"gstar", 0, true}, {"g", 3, false}},
        false,
        RMat(),
        [](int c) { return make_trivial_model(c == 0 ? "gstar" : "g"); }});

    v.push_back(CatalogEntry{
        "affine_poisson",
        "SU(2) model with l = g*: symplectic groupoid of the Poisson Lie "
        "group SU(2)",
        {{"gstar", 0, true}},
        false,
        RMat(),
        [](int) { return make_su2_model("gstar", false); }});

    return v;
  }();
  return entries;
}

const CatalogEntry& find_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name == name) return e;
  }
  throw ModelError("unknown catalog entry: " + name);
}

}  // namespace drinfeld
