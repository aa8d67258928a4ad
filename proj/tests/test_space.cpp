#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "csgamma/rng.hpp"
#include "csgamma/scalar.hpp"
#include "csgamma/space.hpp"

using namespace csgamma;

namespace {

Vector random_vec(const Space& s, Rng& rng) {
  std::vector<Complex> c(static_cast<size_t>(s.dim()));
  for (auto& ci : c)
    ci = Complex(rng.next_in(-1.0, 1.0),
                 s.field() == Field::complex ? rng.next_in(-1.0, 1.0) : 0.0);
  return Vector(s, std::move(c));
}

}  // namespace

TEST_CASE("inner product is conjugate linear in the second slot") {
  Space c2(2, Field::complex);
  Vector x(c2, {Complex(1.0, 0.0), Complex(0.0, 1.0)});  // (1, i)
  Vector y(c2, {Complex(1.0, 0.0), Complex(1.0, 0.0)});  // (1, 1)
  // (x, y) = 1*1 + i*1 = 1 + i
  Complex v = inner(x, y);
  CHECK(std::abs(v - Complex(1.0, 1.0)) < 1e-15);
  CHECK(norm(x) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(std::abs(inner(y, x) - std::conj(v)) < 1e-15);
}

TEST_CASE("normalize scales by a positive real only") {
  Space c2(2, Field::complex);
  Vector x(c2, {Complex(0.0, 2.0), Complex(0.0, 0.0)});
  Vector u = normalize(x);
  CHECK(std::abs(u[0] - Complex(0.0, 1.0)) < 1e-15);  // direction kept, phase kept
  CHECK(std::abs(u[1]) == 0.0);
  CHECK_THROWS_AS(normalize(Vector::zero(c2)), std::domain_error);
}

TEST_CASE("principal argument lies in [0, 2 pi)") {
  CHECK(arg_principal(Complex(1.0, 1.0)) == doctest::Approx(std::numbers::pi / 4));
  CHECK(arg_principal(Complex(0.0, -1.0)) == doctest::Approx(1.5 * std::numbers::pi));
  CHECK(arg_principal(Complex(1.0, 0.0)) == 0.0);
  CHECK(arg_principal(Complex(-1.0, 0.0)) == doctest::Approx(std::numbers::pi));
}

TEST_CASE("gram-weighted inner product") {
  Mat g(2, 2);
  g(0, 0) = 2.0;
  g(0, 1) = 1.0;
  g(1, 0) = 1.0;
  g(1, 1) = 3.0;
  Space s(2, Field::real, g);
  Vector e1 = Vector::basis(s, 0), e2 = Vector::basis(s, 1);
  CHECK(inner(e1, e1).real() == doctest::Approx(2.0));
  CHECK(inner(e1, e2).real() == doctest::Approx(1.0));
  CHECK(inner(e2, e2).real() == doctest::Approx(3.0));
}

TEST_CASE("gram validation rejects bad matrices") {
  Mat notherm(2, 2);
  notherm(0, 0) = 1.0;
  notherm(0, 1) = 2.0;
  notherm(1, 0) = 0.0;
  notherm(1, 1) = 1.0;
  CHECK_THROWS_AS(Space(2, Field::real, notherm), std::invalid_argument);

  Mat indef(2, 2);
  indef(0, 0) = 1.0;
  indef(0, 1) = 0.0;
  indef(1, 0) = 0.0;
  indef(1, 1) = -1.0;
  CHECK_THROWS_AS(Space(2, Field::real, indef), std::invalid_argument);

  Mat cplx(1, 1);
  cplx(0, 0) = Complex(1.0, 0.5);  // not even Hermitian on the diagonal
  CHECK_THROWS_AS(Space(1, Field::real, cplx), std::invalid_argument);
}

TEST_CASE("vector validation") {
  Space r2(2, Field::real);
  CHECK_THROWS_AS(Vector(r2, {Complex(0.0, 1.0), Complex(0.0, 0.0)}), std::invalid_argument);
  CHECK_THROWS_AS(Vector(r2, {Complex(1.0, 0.0)}), std::invalid_argument);  // wrong length
  double nan = std::nan("");
  CHECK_THROWS_AS(Vector(r2, {Complex(nan, 0.0), Complex(0.0, 0.0)}), std::invalid_argument);
}

TEST_CASE("inner product properties on random pairs") {
  Rng rng(0xC5C5);
  Mat g(3, 3);
  for (int i = 0; i < 3; ++i) g(i, i) = 2.0;
  g(0, 1) = Complex(0.3, 0.1);
  g(1, 0) = Complex(0.3, -0.1);
  g(1, 2) = Complex(-0.2, 0.4);
  g(2, 1) = Complex(-0.2, -0.4);
  for (const Space& s : {Space(3, Field::complex), Space(3, Field::complex, g)}) {
    for (int t = 0; t < 250; ++t) {
      Vector x = random_vec(s, rng), y = random_vec(s, rng), z = random_vec(s, rng);
      Complex a(rng.next_in(-1.0, 1.0), rng.next_in(-1.0, 1.0));

      // conjugate symmetry
      CHECK(std::abs(inner(x, y) - std::conj(inner(y, x))) < 1e-12);
      // linearity in the first argument
      CHECK(std::abs(inner(a * x + z, y) - (a * inner(x, y) + inner(z, y))) < 1e-10);
      // parallelogram law
      double lhs = std::pow(norm(x + y), 2) + std::pow(norm(x - y), 2);
      double rhs = 2.0 * std::pow(norm(x), 2) + 2.0 * std::pow(norm(y), 2);
      CHECK(std::abs(lhs - rhs) < 1e-10);
      // positivity
      CHECK(inner(x, x).real() >= 0.0);
      CHECK(std::abs(inner(x, x).imag()) < 1e-12);
      // normalize is idempotent
      if (norm(x) > 1e-8) {
        Vector u = normalize(x);
        CHECK(std::abs(norm(u) - 1.0) < 1e-12);
        Vector uu = normalize(u);
        for (int i = 0; i < 3; ++i) CHECK(std::abs(uu[i] - u[i]) < 1e-12);
      }
    }
  }
}
