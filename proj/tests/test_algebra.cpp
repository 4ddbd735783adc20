// Structure-constant level tests.  The expected values here were computed by
// hand from the defining formulas (double bracket, Schouten expansion,
// Gram-determinant pairing) and frozen; they are independent oracles for the
// library code, not re-derivations through it.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "drinfeld/algebra.hpp"
#include "drinfeld/algebra_io.hpp"
#include "drinfeld/rng.hpp"

using namespace drinfeld;

namespace {

// [e0, e1] = e1, trivial cobracket: the smallest nonabelian bialgebra.
LieBialgebra affine_line_bialgebra() {
  LieAlgebra g = LieAlgebra::from_triples(2, Field::Real, {{0, 1, 1, 1.0}});
  return LieBialgebra::from_cobracket_triples(std::move(g), {});
}

// su(2): [E0,E1] = E2, [E1,E2] = E0, [E2,E0] = E1, with the standard
// cobracket delta(E1) = -E0^E1, delta(E2) = -E0^E2 whose dual algebra is
// [xi0,xi1] = xi1, [xi0,xi2] = xi2.
LieBialgebra su2_standard_bialgebra() {
  LieAlgebra g = LieAlgebra::from_triples(
      3, Field::Real, {{0, 1, 2, 1.0}, {1, 2, 0, 1.0}, {2, 0, 1, 1.0}});
  return LieBialgebra::from_cobracket_triples(
      std::move(g), {{1, 0, 1, -1.0}, {2, 0, 2, -1.0}});
}

LieAlgebra sl2_real() {
  // (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
  return LieAlgebra::from_triples(
      3, Field::Real, {{0, 1, 1, 2.0}, {0, 2, 2, -2.0}, {1, 2, 0, 1.0}});
}

double rr_component(const std::vector<double>& T, int dim, int a, int b,
                    int c) {
  return T[(static_cast<std::size_t>(a) * dim + b) * dim + c];
}

}  // namespace

TEST_CASE("jacobi residual: abelian, sl2, and a broken algebra") {
  LieAlgebra abelian(3, Field::Real);
  CHECK(jacobi_residual(abelian) == 0.0);

  LieAlgebra sl2 = sl2_real();
  CHECK(jacobi_residual(sl2) == 0.0);

  // Perturbing one structure constant must break Jacobi at the same order.
  LieAlgebra broken = sl2_real();
  broken.set_c_unchecked(0, 1, 1, 2.0 + 1e-3);
  broken.set_c_unchecked(1, 0, 1, -2.0 - 1e-3);
  CHECK(jacobi_residual(broken) > 1e-4);
}

TEST_CASE("double of the affine-line bialgebra: frozen bracket table") {
  DoubleAlgebra dd = double_from_bialgebra(affine_line_bialgebra());
  const int n = 2;
  REQUIRE(dd.d.dim() == 4);

  auto B = [&](int i, int j) {
    return RVec(dd.d.bracket(RVec::Unit(4, i), RVec::Unit(4, j)));
  };

  // [e0, e1] = e1 (g-part untouched).
  CHECK(sup_norm(RVec(B(0, 1) - RVec::Unit(4, 1))) == 0.0);
  // [e0, xi1] = -xi1: the coadjoint term only.
  CHECK(sup_norm(RVec(B(0, n + 1) + RVec::Unit(4, n + 1))) == 0.0);
  // [e1, xi1] = xi0.
  CHECK(sup_norm(RVec(B(1, n + 1) - RVec::Unit(4, n + 0))) == 0.0);
  // [e0, xi0] = [e1, xi0] = [xi0, xi1] = 0.
  CHECK(sup_norm(B(0, n + 0)) == 0.0);
  CHECK(sup_norm(B(1, n + 0)) == 0.0);
  CHECK(sup_norm(B(n + 0, n + 1)) == 0.0);

  CHECK(jacobi_residual(dd.d) == 0.0);
  CHECK(pairing_ad_invariance_residual(dd) == 0.0);

  // <e0 + xi1, e1 + xi0> = xi0(e0) + xi1(e1): both unit pairings.
  RVec x = RVec::Unit(4, 0) + RVec::Unit(4, n + 1);
  RVec y = RVec::Unit(4, 1) + RVec::Unit(4, n + 0);
  CHECK(dd.pair(x, y) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("[R,R] of the affine-line double: frozen component array") {
  DoubleAlgebra dd = double_from_bialgebra(affine_line_bialgebra());
  std::vector<double> T = schouten_rr(dd);
  const int dim = 4;

  // Hand expansion of the four decomposable terms gives
  //   [R,R] = -(1/2) xi0 ^ xi1 ^ e1
  // (basis order e0, e1, xi0, xi1 -> indices 2, 3, 1).
  CHECK(rr_component(T, dim, 2, 3, 1) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(rr_component(T, dim, 3, 2, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(rr_component(T, dim, 1, 2, 3) == doctest::Approx(-0.5).epsilon(1e-15));

  int nonzero = 0;
  double offmag = 0.0;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c) {
        double t = rr_component(T, dim, a, b, c);
        if (t != 0.0) ++nonzero;
        bool is_perm = (a != b && b != c && a != c) &&
                       ((a == 1 || a == 2 || a == 3) &&
                        (b == 1 || b == 2 || b == 3) &&
                        (c == 1 || c == 2 || c == 3));
        if (!is_perm) offmag = std::max(offmag, std::abs(t));
      }
  CHECK(nonzero == 6);
  CHECK(offmag == 0.0);
}

TEST_CASE("rr identity: pairing of [R,R] against the bracket") {
  // Independent Gram-determinant evaluation on one frozen triple:
  // -4 * <[R,R], e0 ^ e1 ^ xi1> must equal 2 <e0, [e1, xi1]> = 2.
  DoubleAlgebra dd = double_from_bialgebra(affine_line_bialgebra());
  std::vector<double> T = schouten_rr(dd);
  const int dim = 4;

  RVec a = RVec::Unit(dim, 0), b = RVec::Unit(dim, 1), c = RVec::Unit(dim, 3);
  double lhs = 0.0;
  for (int p = 0; p < dim; ++p)
    for (int q = p + 1; q < dim; ++q)
      for (int r = q + 1; r < dim; ++r) {
        RMat gram(3, 3);
        RVec fp = RVec::Unit(dim, p), fq = RVec::Unit(dim, q),
             fr = RVec::Unit(dim, r);
        gram << dd.pair(fp, a), dd.pair(fp, b), dd.pair(fp, c),
            dd.pair(fq, a), dd.pair(fq, b), dd.pair(fq, c),
            dd.pair(fr, a), dd.pair(fr, b), dd.pair(fr, c);
        lhs += rr_component(T, dim, p, q, r) * gram.determinant();
      }
  CHECK(-4.0 * lhs == doctest::Approx(2.0 * dd.pair(a, dd.d.bracket(b, c)))
                          .epsilon(1e-14));

  CHECK(rr_check(dd) < 1e-12);
}

TEST_CASE("su(2) standard bialgebra: dual algebra and double invariants") {
  LieBialgebra b = su2_standard_bialgebra();
  LieAlgebra dual = b.dual_algebra();

  // Frozen dual bracket table: [xi0,xi1] = xi1, [xi0,xi2] = xi2, [xi1,xi2]=0.
  CHECK(dual.c(0, 1, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(dual.c(0, 2, 2) == doctest::Approx(1.0).epsilon(1e-15));
  for (int k = 0; k < 3; ++k) CHECK(dual.c(1, 2, k) == 0.0);
  CHECK(jacobi_residual(dual) == 0.0);

  DoubleAlgebra dd = double_from_bialgebra(b);
  CHECK(jacobi_residual(dd.d) < 1e-12);
  CHECK(pairing_ad_invariance_residual(dd) < 1e-12);
  CHECK(rr_check(dd) < 1e-12);

  CHECK(is_lagrangian_subalgebra(dd, dd.g_part).pass());
  CHECK(is_lagrangian_subalgebra(dd, dd.gstar_part).pass());
  CHECK(is_lagrangian_splitting(dd, dd.g_part, dd.gstar_part).pass());

  // Frozen mixed brackets: [E0, xi1] = xi2, [E0, xi2] = -xi1.
  RVec b1 = dd.d.bracket(RVec::Unit(6, 0), RVec::Unit(6, 4));
  CHECK(sup_norm(RVec(b1 - RVec::Unit(6, 5))) == 0.0);
  RVec b2 = dd.d.bracket(RVec::Unit(6, 0), RVec::Unit(6, 5));
  CHECK(sup_norm(RVec(b2 + RVec::Unit(6, 4))) == 0.0);

  // t + n = span{E0, xi1, xi2} is a lagrangian subalgebra.
  Subspace tn = Subspace::coordinate_axes(6, {0, 4, 5});
  CHECK(is_lagrangian_subalgebra(dd, tn).pass());

  // span{e0, xi0} fails isotropy: <e0, xi0> = 1.
  Subspace bad = Subspace::coordinate_axes(6, {0, 3});
  auto rep = is_lagrangian_subalgebra(dd, bad);
  CHECK_FALSE(rep.isotropic);
  CHECK(rep.isotropy_residual == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("ad* operators and bracket reassembly") {
  DoubleAlgebra dd2 = double_from_bialgebra(affine_line_bialgebra());

  // (ad*_{e0} xi1)(e1) = xi1([e1, e0]) = -1.
  RVec out = ad_star_g(dd2, RVec::Unit(2, 0), RVec::Unit(2, 1));
  CHECK(out[1] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(out[0] == 0.0);

  // ad*_xi u = 0 when the cobracket vanishes.
  CHECK(sup_norm(ad_star_gstar(dd2, RVec::Unit(2, 1), RVec::Unit(2, 0))) ==
        0.0);

  // ad*_u xi = 0 for abelian g.
  LieAlgebra ab(2, Field::Real);
  LieBialgebra bb = LieBialgebra::from_cobracket_triples(
      std::move(ab), {{1, 0, 1, -1.0}});
  DoubleAlgebra ddb = double_from_bialgebra(bb);
  CHECK(sup_norm(ad_star_g(ddb, RVec::Unit(2, 0), RVec::Unit(2, 1))) == 0.0);
  CHECK(sup_norm(ad_star_gstar(ddb, RVec::Unit(2, 0), RVec::Unit(2, 1))) >
        0.0);

  // Five-term reassembly agrees with the assembled double bracket.
  DoubleAlgebra dd6 = double_from_bialgebra(su2_standard_bialgebra());
  SplitMix64 rng(sample_stream(7, "reassembly", 0));
  for (int trial = 0; trial < 20; ++trial) {
    RVec x = rng.next_vec(6), y = rng.next_vec(6);
    RVec diff = reassembled_bracket(dd6, x, y) - dd6.d.bracket(x, y);
    CHECK(sup_norm(diff) < 1e-12);
  }
}

TEST_CASE("R is independent of the dual-basis choice") {
  DoubleAlgebra dd = double_from_bialgebra(su2_standard_bialgebra());
  const int n = dd.n();

  CHECK(dd.R(0, n + 0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(dd.R(n + 0, 0) == doctest::Approx(0.5).epsilon(1e-15));

  SplitMix64 rng(sample_stream(11, "dual-basis", 0));
  for (int trial = 0; trial < 5; ++trial) {
    RMat A(n, n);
    do {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = rng.next_sym();
    } while (std::abs(A.determinant()) < 0.1);
    RMat Ainv = A.inverse();

    RMat Rprime = RMat::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
      RVec u = dd.lift_g(A.col(i));
      RVec xi = dd.lift_gstar(Ainv.row(i).transpose());
      Rprime += 0.5 * (xi * u.transpose() - u * xi.transpose());
    }
    CHECK(sup_norm(RMat(Rprime - dd.R)) < 1e-12);
  }
}

TEST_CASE("drinfeld subalgebra constructions") {
  DoubleAlgebra dd = double_from_bialgebra(su2_standard_bialgebra());

  // h = t = span{E0}, Lambda = 0: l = t + Ann(t) = span{E0, xi1, xi2}.
  Subspace t = Subspace::coordinate_axes(3, {0});
  Subspace l = drinfeld_subalgebra(dd, t, RMat::Zero(2, 2));
  CHECK(l.distance_to(Subspace::coordinate_axes(6, {0, 4, 5})) < 1e-12);
  CHECK(is_lagrangian_subalgebra(dd, l).pass());

  // Invariants: l ^ g = h and pr_{g*} l = Ann(h).
  Subspace l_cap_g = Subspace::intersect(l, dd.g_part);
  CHECK(l_cap_g.dim() == 1);
  CHECK(std::abs(std::abs(l_cap_g.basis_vector(0)[0]) - 1.0) < 1e-12);

  // h = g: l = g.
  Subspace full = Subspace::coordinate_axes(3, {0, 1, 2});
  Subspace lg = drinfeld_subalgebra(dd, full, RMat::Zero(0, 0));
  CHECK(lg.distance_to(dd.g_part) < 1e-12);

  // h = 0 with invertible Lambda on the affine-line double: graph of Lambda,
  // meeting g only at zero.
  DoubleAlgebra dd2 = double_from_bialgebra(affine_line_bialgebra());
  Subspace none(2, RMat::Zero(2, 0));
  RMat Lam(2, 2);
  Lam << 0.0, 1.0, -1.0, 0.0;
  Subspace graph = drinfeld_subalgebra(dd2, none, Lam);
  CHECK(graph.dim() == 2);
  CHECK(Subspace::intersect(graph, dd2.g_part).dim() == 0);
}

TEST_CASE("lagrangian splitting of sl2 + sl2 against the diagonal") {
  // A quadratic double assembled directly (not from a bialgebra): the direct
  // sum with pairing tr(xy) on the first factor minus the same on the second.
  LieAlgebra sl2 = sl2_real();
  std::vector<std::tuple<int, int, int, double>> triples;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (sl2.c(i, j, k) != 0.0) {
          triples.emplace_back(i, j, k, sl2.c(i, j, k));
          triples.emplace_back(3 + i, 3 + j, 3 + k, sl2.c(i, j, k));
        }
      }
  LieAlgebra dsum = LieAlgebra::from_triples(6, Field::Real, triples);
  CHECK(jacobi_residual(dsum) == 0.0);

  RMat K = RMat::Zero(3, 3);  // trace form in the fundamental: (h,e,f)
  K(0, 0) = 2.0;
  K(1, 2) = 1.0;
  K(2, 1) = 1.0;
  BilinearForm pairing;
  pairing.matrix = RMat::Zero(6, 6);
  pairing.matrix.topLeftCorner(3, 3) = K;
  pairing.matrix.bottomRightCorner(3, 3) = -K;
  pairing.quadratic = true;

  DoubleAlgebra dd{dsum, pairing, Subspace::coordinate_axes(6, {0, 1, 2}),
                   Subspace::coordinate_axes(6, {3, 4, 5}),
                   RMat::Zero(6, 6)};
  CHECK(pairing_ad_invariance_residual(dd) == 0.0);

  RMat diag(6, 3), lst(6, 3);
  diag << RMat::Identity(3, 3), RMat::Identity(3, 3);
  // l_st = span{(e,0), (0,f), (h,-h)}.
  lst.setZero();
  lst(1, 0) = 1.0;
  lst(5, 1) = 1.0;
  lst(0, 2) = 1.0;
  lst(3, 2) = -1.0;

  auto split = is_lagrangian_splitting(dd, Subspace(6, diag), Subspace(6, lst));
  CHECK(split.pass());

  auto degenerate = is_lagrangian_splitting(dd, Subspace(6, diag),
                                            Subspace(6, diag));
  CHECK_FALSE(degenerate.complementary);
}

TEST_CASE("json round trips") {
  LieBialgebra b = su2_standard_bialgebra();
  DoubleAlgebra dd = double_from_bialgebra(b);

  LieAlgebra back = lie_algebra_from_json(lie_algebra_to_json(dd.d));
  CHECK(back.dim() == dd.d.dim());
  double worst = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        worst = std::max(worst, std::abs(back.c(i, j, k) - dd.d.c(i, j, k)));
  CHECK(worst == 0.0);

  Subspace tn = Subspace::coordinate_axes(6, {0, 4, 5});
  Subspace s_back = subspace_from_json(subspace_to_json(tn));
  CHECK(s_back.distance_to(tn) < 1e-14);
}
