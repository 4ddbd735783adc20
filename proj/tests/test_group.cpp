// Matrix-model tests.  Closed-form exponentials, hand-computed Adjoint
// actions, and the recomposition property of the factorization oracles serve
// as independent oracles; the embedding-homomorphism and pairing-invariance
// checks certify that the matrix groups genuinely realize the double.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>

#include "drinfeld/catalog.hpp"
#include "drinfeld/group.hpp"
#include "drinfeld/rng.hpp"

using namespace drinfeld;

namespace {

RVec random_coords(SplitMix64& rng, int dim, double radius) {
  return radius * rng.next_vec(dim);
}

}  // namespace

TEST_CASE("models construct and validate with exact structure data") {
  for (const auto& build : {+[] { return make_su2_model("gstar", false); },
                            +[] { return make_su2_model("tn", true); },
                            +[] { return make_trivial_model("gstar"); },
                            +[] { return make_trivial_model("g"); }}) {
    MatrixGroupModel model = build();
    const auto v = model.validate();
    CHECK(v.emb_hom_residual < 1e-12);
    CHECK(v.subalgebra_closure < 1e-12);
    CHECK(v.h_containment < 1e-12);
  }
}

TEST_CASE("pairing is invariant under the full Adjoint action") {
  for (const auto& build : {+[] { return make_su2_model("tn", false); },
                            +[] { return make_trivial_model("gstar"); }}) {
    MatrixGroupModel model = build();
    const RMat b = model.dd().pairing.matrix;
    SplitMix64 rng(2026);
    for (int s = 0; s < 10; ++s) {
      GroupElement d = model.random_element(SubgroupTag::D, 0.9, rng);
      const RMat a = model.adjoint_matrix(d.matrix);
      CHECK(sup_norm(RMat(a.transpose() * b * a - b)) < 1e-10);
    }
  }
}

TEST_CASE("su2 exponentials match closed forms") {
  MatrixGroupModel model = make_su2_model("gstar", false);
  const double t = 0.73;

  // exp(t E0) = diag(e^{it/2}, e^{-it/2}).
  RVec x = RVec::Zero(6);
  x[0] = t;
  GroupElement g = model.exp_in(SubgroupTag::G, x);
  Mat expected(2, 2);
  expected << std::polar(1.0, t / 2), 0.0, 0.0, std::polar(1.0, -t / 2);
  CHECK(sup_norm(Mat(g.matrix - expected)) < 1e-14);

  // xi1, xi2 span a square-zero algebra: exp = 1 + x.
  RVec y = RVec::Zero(6);
  y[4] = 0.4;
  y[5] = -1.1;
  GroupElement v = model.exp_in(SubgroupTag::Gstar, y);
  CHECK(sup_norm(Mat(v.matrix - Mat::Identity(2, 2) - model.emb(y))) < 1e-14);
}

TEST_CASE("abelian dual closed-form exponential agrees with the generic one") {
  MatrixGroupModel model = make_trivial_model("gstar");
  SplitMix64 rng(7);
  RVec x = RVec::Zero(6);
  x.tail(3) = random_coords(rng, 3, 1.0);
  GroupElement v = model.exp_in(SubgroupTag::Gstar, x);
  CHECK(sup_norm(Mat(v.matrix - model.emb(x).exp())) < 1e-13);
}

TEST_CASE("factorization recomposes and is trivial on factors") {
  for (const auto& build : {+[] { return make_su2_model("tn", false); },
                            +[] { return make_trivial_model("g"); }}) {
    MatrixGroupModel model = build();
    SplitMix64 rng(11);
    for (int s = 0; s < 20; ++s) {
      GroupElement d = model.random_element(SubgroupTag::D, 1.0, rng);
      auto [v, g] = model.factorize(d.matrix);
      CHECK(sup_norm(Mat(v.matrix * g.matrix - d.matrix)) < 1e-12);
    }
    // A point of G factors as e * g; a point of G* as v * e.
    GroupElement g0 = model.random_element(SubgroupTag::G, 0.8, rng);
    auto [v1, g1] = model.factorize(g0.matrix);
    CHECK(sup_norm(Mat(v1.matrix - Mat::Identity(model.N(), model.N()))) <
          1e-12);
    GroupElement v0 = model.random_element(SubgroupTag::Gstar, 0.8, rng);
    auto [v2, g2] = model.factorize(v0.matrix);
    CHECK(sup_norm(Mat(g2.matrix - Mat::Identity(model.N(), model.N()))) <
          1e-12);
  }
}

TEST_CASE("Maurer-Cartan translations invert right/left translation") {
  MatrixGroupModel model = make_su2_model("tn", false);
  SplitMix64 rng(13);
  for (int s = 0; s < 10; ++s) {
    GroupElement g = model.random_element(SubgroupTag::G, 1.0, rng);
    RVec u = RVec::Zero(6);
    u.head(3) = random_coords(rng, 3, 1.0);

    // theta^r recovers y from X = emb(y) g, theta^l from X = g emb(y).
    const RVec right = model.maurer(g, model.emb(u) * g.matrix, Side::Right);
    CHECK(sup_norm(RVec(right - u)) < 1e-10);
    const RVec left = model.maurer(g, g.matrix * model.emb(u), Side::Left);
    CHECK(sup_norm(RVec(left - u)) < 1e-10);

    // theta^l = Ad_{g^{-1}} theta^r on any tangent vector.
    const Mat x = model.emb(u) * g.matrix;
    const RVec via_adjoint =
        model.adjoint(g.inverse(), model.maurer(g, x, Side::Right));
    CHECK(sup_norm(RVec(model.maurer(g, x, Side::Left) - via_adjoint)) <
          1e-10);
  }
}

TEST_CASE("Adjoint action: matrix form, composition, and a frozen value") {
  MatrixGroupModel model = make_su2_model("gstar", false);
  SplitMix64 rng(17);
  GroupElement a = model.random_element(SubgroupTag::D, 0.7, rng);
  GroupElement b = model.random_element(SubgroupTag::D, 0.7, rng);
  const RVec x = random_coords(rng, 6, 1.0);
  CHECK(sup_norm(RVec(model.adjoint_matrix(a.matrix) * x -
                      model.adjoint(a.matrix, x))) < 1e-11);
  CHECK(sup_norm(RVec(model.adjoint(Mat(a.matrix * b.matrix), x) -
                      model.adjoint(a.matrix, model.adjoint(b.matrix, x)))) <
        1e-10);

  // Ad_{exp((pi/2) E0)} rotates E1 -> E2 -> -E1; on covectors the transpose:
  // with xi = (3, 5, 7), xi o Ad_g = (3, 7, -5).
  RVec t = RVec::Zero(6);
  t[0] = M_PI / 2;
  GroupElement g = model.exp_in(SubgroupTag::G, t);
  RVec xi(3);
  xi << 3.0, 5.0, 7.0;
  RVec expected(3);
  expected << 3.0, 7.0, -5.0;
  CHECK(sup_norm(RVec(model.coadjoint(g.matrix, xi) - expected)) < 1e-12);
}

TEST_CASE("decomposition of Ad_g on mixed vectors holds on both models") {
  for (const auto& build : {+[] { return make_su2_model("gstar", false); },
                            +[] { return make_trivial_model("gstar"); }}) {
    MatrixGroupModel model = build();
    SplitMix64 rng(19);
    double worst = 0.0;
    for (int s = 0; s < 50; ++s) {
      GroupElement g = model.random_element(SubgroupTag::G, 1.0, rng);
      const RVec u = random_coords(rng, 3, 1.0);
      const RVec xi = random_coords(rng, 3, 1.0);
      worst = std::max(worst, verify_gond1(model, g, u, xi));
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("random elements are deterministic and members") {
  MatrixGroupModel model = make_su2_model("tn", true);
  for (SubgroupTag tag : {SubgroupTag::G, SubgroupTag::Gstar, SubgroupTag::L,
                          SubgroupTag::H, SubgroupTag::D}) {
    GroupElement a = model.random_element(tag, 0.9, 424242);
    GroupElement b = model.random_element(tag, 0.9, 424242);
    CHECK(sup_norm(Mat(a.matrix - b.matrix)) == 0.0);
    CHECK(model.subgroup(tag).membership(a.matrix) < 1e-10);
  }
  GroupElement e = model.random_element(SubgroupTag::G, 0.0, 1);
  CHECK(sup_norm(Mat(e.matrix - Mat::Identity(2, 2))) < 1e-15);
}

TEST_CASE("tangency violations are rejected") {
  MatrixGroupModel model = make_su2_model("gstar", false);
  GroupElement g = model.random_element(SubgroupTag::G, 0.5, 3);
  // A g*-direction is not tangent to G.
  RVec xi = RVec::Zero(6);
  xi[4] = 1.0;
  CHECK_THROWS_AS(model.maurer(g, model.emb(xi) * g.matrix, Side::Right),
                  ModelError);
  // A matrix outside emb(d) is not tangent to anything.
  Mat junk = Mat::Identity(2, 2);
  CHECK_THROWS_AS(model.maurer(g, junk * g.matrix, Side::Right), ModelError);
}
