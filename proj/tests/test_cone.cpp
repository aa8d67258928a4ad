#include <doctest.h>

#include <cmath>

#include "csgamma/cone.hpp"
#include "csgamma/oracle.hpp"
#include "csgamma/rng.hpp"
#include "csgamma/subspace.hpp"

using namespace csgamma;

namespace {

Mat cols2(double a0, double a1, double b0, double b1) {
  Mat m(2, 2);
  m(0, 0) = a0;
  m(1, 0) = a1;
  m(0, 1) = b0;
  m(1, 1) = b1;
  return m;
}

Mat col2(double a0, double a1) {
  Mat m(2, 1);
  m(0, 0) = a0;
  m(1, 0) = a1;
  return m;
}

UnionCone line_and_quadrants_line() {
  Space r2(2, Field::real);
  return UnionCone(ConvexCone(r2, cols2(1.0, -1.0, -1.0, 1.0)));
}

UnionCone line_and_quadrants_quadrants() {
  Space r2(2, Field::real);
  std::vector<ConvexCone> parts;
  parts.emplace_back(r2, cols2(1.0, 0.0, 0.0, 1.0));
  parts.emplace_back(r2, cols2(-1.0, 0.0, 0.0, -1.0));
  return UnionCone(std::move(parts));
}

}  // namespace

TEST_CASE("projection onto the first quadrant") {
  Space r2(2, Field::real);
  ConvexCone quad(r2, cols2(1.0, 0.0, 0.0, 1.0));
  Vector x(r2, {Complex(1.0), Complex(-1.0)});
  Vector p = project_cone(x, quad);
  CHECK(std::abs(p[0] - 1.0) < 1e-12);
  CHECK(std::abs(p[1]) < 1e-12);
  CHECK(member(p, quad, 1e-8));
  CHECK(!member(x, quad, 1e-8));
}

TEST_CASE("projection is idempotent and nonexpansive") {
  Rng rng(9);
  Space r3(3, Field::real);
  Mat g(3, 4);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 3; ++i) g(i, j) = rng.next_in(-1.0, 1.0);
  ConvexCone c(r3, g);
  for (int t = 0; t < 100; ++t) {
    std::vector<Complex> xc(3), yc(3);
    for (auto& v : xc) v = rng.next_in(-2.0, 2.0);
    for (auto& v : yc) v = rng.next_in(-2.0, 2.0);
    Vector x(r3, xc), y(r3, yc);
    Vector px = project_cone(x, c), py = project_cone(y, c);
    Vector ppx = project_cone(px, c);
    CHECK(norm(ppx - px) < 1e-8 * std::max(1.0, norm(px)));
    CHECK(norm(px - py) <= norm(x - y) + 1e-10);
    CHECK(member(px, c, 1e-8));
  }
}

TEST_CASE("line against the first-and-third-quadrant union") {
  UnionCone c1 = line_and_quadrants_line();
  UnionCone c2 = line_and_quadrants_quadrants();

  GammaReport rep = gamma_cones(c1, c2);
  const double root_half = 0.70710678118654752;
  const double kappa_ref = 0.76536686473017954;  // sqrt(2 - sqrt(2))
  CHECK(std::abs(rep.gamma - root_half) < 1e-6);
  CHECK(std::abs(rep.kappa - kappa_ref) < 1e-6);
  CHECK(rep.heuristic);
  CHECK(!rep.intersects_nontrivially);
  CHECK(rep.method == GammaMethod::alternating_multistart);

  // grid oracle agrees
  CHECK(std::abs(grid_gamma_2d(c1, c2, 10000) - rep.gamma) < 1e-3);

  // certificates are unit members achieving gamma
  REQUIRE(rep.certificate_v.has_value());
  REQUIRE(rep.certificate_w.has_value());
  CHECK(std::abs(norm(*rep.certificate_v) - 1.0) < 1e-9);
  CHECK(std::abs(norm(*rep.certificate_w) - 1.0) < 1e-9);
  CHECK(member(*rep.certificate_v, c1, 1e-6));
  CHECK(member(*rep.certificate_w, c2, 1e-6));
  CHECK(std::abs(std::abs(inner(*rep.certificate_v, *rep.certificate_w)) - rep.gamma) < 1e-6);
}

TEST_CASE("opposite rays: gamma_abs 1, gamma_re -1") {
  Space r2(2, Field::real);
  UnionCone a{ConvexCone(r2, col2(1.0, 0.0))};
  UnionCone b{ConvexCone(r2, col2(-1.0, 0.0))};
  GammaReport rep = gamma_cones(a, b);
  CHECK(std::abs(rep.gamma - 1.0) < 1e-9);
  CHECK(std::abs(rep.gamma_re - (-1.0)) < 1e-9);
  CHECK(std::abs(rep.kappa_re - 2.0) < 1e-9);
  CHECK(rep.intersects_nontrivially);  // after symmetrization the rays coincide
  CHECK(!rep.heuristic);               // single rays are exact

  GammaReport kap = kappa_cones(a, b);
  CHECK(std::abs(kap.kappa - 2.0) < 1e-9);
}

TEST_CASE("orthogonal rays have gamma 0 and kappa sqrt(2)") {
  Space r2(2, Field::real);
  UnionCone a{ConvexCone(r2, col2(1.0, 0.0))};
  UnionCone b{ConvexCone(r2, col2(0.0, 1.0))};
  GammaReport rep = gamma_cones(a, b);
  CHECK(std::abs(rep.gamma) < 1e-9);
  CHECK(std::abs(rep.kappa - std::sqrt(2.0)) < 1e-9);
}

TEST_CASE("ray against a quarter-plane edge") {
  // cone {e1, (1,1)/sqrt(2)} vs the ray e2: nearest pair is (1,1)/sqrt(2) vs e2.
  Space r2(2, Field::real);
  const double s = 1.0 / std::sqrt(2.0);
  UnionCone a{ConvexCone(r2, cols2(1.0, 0.0, s, s))};
  UnionCone b{ConvexCone(r2, col2(0.0, 1.0))};
  GammaReport rep = gamma_cones(a, b);
  CHECK(std::abs(rep.gamma - s) < 1e-9);
}

TEST_CASE("gamma is invariant under generator rescaling") {
  Rng rng(11);
  Space r3(3, Field::real);
  for (int t = 0; t < 20; ++t) {
    Mat g1(3, 2), g2(3, 2), g1s(3, 2), g2s(3, 2);
    for (int j = 0; j < 2; ++j) {
      double c1 = std::pow(10.0, rng.next_in(-2.0, 2.0));
      double c2 = std::pow(10.0, rng.next_in(-2.0, 2.0));
      for (int i = 0; i < 3; ++i) {
        double a = rng.next_in(-1.0, 1.0), b = rng.next_in(-1.0, 1.0);
        g1(i, j) = a;
        g1s(i, j) = c1 * a;
        g2(i, j) = b;
        g2s(i, j) = c2 * b;
      }
    }
    GammaReport plain = gamma_cones(ConvexCone(r3, g1), ConvexCone(r3, g2));
    GammaReport scaled = gamma_cones(ConvexCone(r3, g1s), ConvexCone(r3, g2s));
    CHECK(std::abs(plain.gamma - scaled.gamma) < 1e-10);
  }
}

TEST_CASE("cone gamma upper-bounds every sampled member pair") {
  UnionCone c1 = line_and_quadrants_line();
  UnionCone c2 = line_and_quadrants_quadrants();
  GammaReport rep = gamma_cones(c1, c2);
  double sampled = oracle_gamma(c1, c2, 20000, 0xC5C5);
  CHECK(sampled <= rep.gamma + 1e-9);
  CHECK(rep.gamma - sampled < 5e-3);  // the plane example is easy to sample
}

TEST_CASE("subspace-like cone pair matches the exact subspace gamma") {
  // full lines encoded as symmetric cones reduce to 1-dim subspaces
  Rng rng(12);
  Space r3(3, Field::real);
  for (int t = 0; t < 10; ++t) {
    Mat d1(3, 1), d2(3, 1);
    for (int i = 0; i < 3; ++i) {
      d1(i, 0) = rng.next_in(-1.0, 1.0);
      d2(i, 0) = rng.next_in(-1.0, 1.0);
    }
    Mat l1(3, 2), l2(3, 2);
    for (int i = 0; i < 3; ++i) {
      l1(i, 0) = d1(i, 0);
      l1(i, 1) = -d1(i, 0);
      l2(i, 0) = d2(i, 0);
      l2(i, 1) = -d2(i, 0);
    }
    GammaReport cone_rep = gamma_cones(ConvexCone(r3, l1), ConvexCone(r3, l2));
    GammaReport sub_rep = gamma_subspaces(orthonormalize(r3, d1), orthonormalize(r3, d2));
    CHECK(std::abs(cone_rep.gamma - sub_rep.gamma) < 5e-3);
  }
}

TEST_CASE("empty cones are a domain error, bad generators a usage error") {
  Space r2(2, Field::real);
  Mat empty(2, 0);
  UnionCone c{ConvexCone(r2, empty)};
  UnionCone ray{ConvexCone(r2, col2(1.0, 0.0))};
  CHECK_THROWS_AS(kappa_cones(c, ray), std::domain_error);
  CHECK_THROWS_AS(gamma_cones(ray, c), std::domain_error);

  Mat tiny(2, 1);
  tiny(0, 0) = 1e-14;
  CHECK_THROWS_AS(ConvexCone(r2, tiny), std::invalid_argument);
}

TEST_CASE("strengthened inequality holds for certified members") {
  // |(v, w)| <= gamma ||v|| ||w|| for members; exercised through samples
  UnionCone c1 = line_and_quadrants_line();
  UnionCone c2 = line_and_quadrants_quadrants();
  GammaReport rep = gamma_cones(c1, c2);
  Rng rng(13);
  for (int t = 0; t < 500; ++t) {
    Vector v = sample_unit_in_cone(c1, rng);
    Vector w = sample_unit_in_cone(c2, rng);
    CHECK(std::abs(inner(v, w)) <= rep.gamma + 1e-9);
  }
}
