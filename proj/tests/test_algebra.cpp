#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "linarg/algebra.hpp"

using namespace linarg;

TEST_CASE("norms of the four instances") {
  CHECK(AlgebraContext::real().norm(Element{{-3.0}}) == 3.0);

  AlgebraContext mat = AlgebraContext::matrix(2);
  CHECK(mat.norm(mat.identity()) == 1.0);
  // max absolute row sum
  CHECK(mat.norm(mat.from_payload({1.0, -2.0, 0.5, 0.25})) == 3.0);

  AlgebraContext cplx = AlgebraContext::complex();
  CHECK(cplx.norm(cplx.from_payload({3.0, 4.0})) == 5.0);

  // x(r) = beta/(r+1) has sup beta, attained at r = 0
  const int m = 101;
  AlgebraContext grid = AlgebraContext::grid(m);
  Element f = grid.zero();
  for (int j = 0; j < m; ++j) f.data[j] = 0.5 / (static_cast<double>(j) / (m - 1) + 1.0);
  CHECK(grid.norm(f) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("multiplication") {
  AlgebraContext re = AlgebraContext::real();
  CHECK(re.multiply(Element{{0.5}}, Element{{0.4}}).data[0] == doctest::Approx(0.2));

  AlgebraContext mat = AlgebraContext::matrix(2);
  Element x = mat.from_payload({1.0, 2.0, 3.0, 4.0});
  Element xi = mat.multiply(x, mat.identity());
  for (int i = 0; i < 4; ++i) CHECK(xi.data[i] == x.data[i]);

  AlgebraContext grid = AlgebraContext::grid(3);
  Element p = grid.multiply(grid.from_payload({1.0, 2.0, 3.0}),
                            grid.from_payload({2.0, 2.0, 2.0}));
  CHECK(p.data == std::vector<double>{2.0, 4.0, 6.0});

  CHECK_THROWS_AS(grid.multiply(grid.identity(), Element{{1.0}}), shape_error);
}

TEST_CASE("grid identity is the constant-1 function") {
  AlgebraContext grid = AlgebraContext::grid(7);
  for (double v : grid.identity().data) CHECK(v == 1.0);
  CHECK(grid.norm(grid.identity()) == 1.0);
}

TEST_CASE("try_inverse") {
  AlgebraContext re = AlgebraContext::real();
  auto inv = re.try_inverse(Element{{0.4}}, 1e-12);
  REQUIRE(inv);
  CHECK(inv->data[0] == doctest::Approx(2.5));
  CHECK_FALSE(re.try_inverse(Element{{0.0}}, 1e-12));
  CHECK_THROWS_AS(re.try_inverse(Element{{1.0}}, 0.0), config_error);

  const int m = 101;
  AlgebraContext grid = AlgebraContext::grid(m);
  Element f = grid.zero();
  for (int j = 0; j < m; ++j) f.data[j] = 0.5 / (static_cast<double>(j) / (m - 1) + 1.0);
  auto ginv = grid.try_inverse(f, 1e-12);
  REQUIRE(ginv);
  // pointwise reciprocal oracle: (r+1)/beta
  for (int j = 0; j < m; ++j) {
    const double r = static_cast<double>(j) / (m - 1);
    CHECK(ginv->data[j] == doctest::Approx((r + 1.0) / 0.5).epsilon(1e-13));
  }
  CHECK(grid.norm(grid.sub(grid.multiply(*ginv, f), grid.identity())) <= 1e-12);

  // a grid sample at zero is not a unit
  Element nonunit = grid.identity();
  nonunit.data[3] = 0.0;
  CHECK_FALSE(grid.try_inverse(nonunit, 1e-12));

  AlgebraContext mat = AlgebraContext::matrix(2);
  CHECK_FALSE(mat.try_inverse(mat.from_payload({1.0, 2.0, 2.0, 4.0}), 1e-9));
  auto minv = mat.try_inverse(mat.from_payload({2.0, 1.0, 1.0, 1.0}), 1e-12);
  REQUIRE(minv);
  CHECK(minv->data[0] == doctest::Approx(1.0));
  CHECK(minv->data[1] == doctest::Approx(-1.0));
}

TEST_CASE("power") {
  AlgebraContext re = AlgebraContext::real();
  CHECK(re.power(Element{{0.5}}, 3).data[0] == doctest::Approx(0.125));
  CHECK(re.power(Element{{7.0}}, 0).data[0] == 1.0);

  AlgebraContext mat = AlgebraContext::matrix(2);
  Element nilpotent = mat.from_payload({0.0, 1.0, 0.0, 0.0});
  // direct multiplication oracle
  Element direct = mat.multiply(nilpotent, nilpotent);
  Element viapow = mat.power(nilpotent, 2);
  CHECK(mat.norm(mat.sub(direct, viapow)) == 0.0);
  CHECK(mat.norm(viapow) == 0.0);

  CHECK_THROWS_AS(re.power(Element{{1.0}}, -1), config_error);
}

TEST_CASE("power is additive in the exponent") {
  AlgebraContext mat = AlgebraContext::matrix(3);
  std::mt19937_64 rng(11);
  for (int s = 0; s < 20; ++s) {
    Element x = mat.random_element(rng);
    Element lhs = mat.power(x, 5);
    Element rhs = mat.multiply(mat.power(x, 2), mat.power(x, 3));
    CHECK(mat.norm(mat.sub(lhs, rhs)) <= 1e-10);
  }
}

TEST_CASE("axiom check per instance") {
  CHECK(check_axioms(AlgebraContext::real(), 1000, 1).worst() <= 1e-12);
  CHECK(check_axioms(AlgebraContext::complex(), 1000, 2).worst() <= 1e-12);
  CHECK(check_axioms(AlgebraContext::matrix(3), 1000, 3).worst() <= 1e-10);
  CHECK(check_axioms(AlgebraContext::grid(51), 1000, 4).worst() <= 1e-12);
  CHECK_THROWS_AS(check_axioms(AlgebraContext::real(), 0, 1), config_error);
}

TEST_CASE("submultiplicativity and inverse residual on random samples") {
  std::mt19937_64 rng(99);
  for (const AlgebraContext& ctx :
       {AlgebraContext::real(), AlgebraContext::complex(),
        AlgebraContext::matrix(4), AlgebraContext::grid(31)}) {
    for (int s = 0; s < 200; ++s) {
      Element x = ctx.random_element(rng);
      Element y = ctx.random_element(rng);
      CHECK(ctx.norm(ctx.multiply(x, y)) <= ctx.norm(x) * ctx.norm(y) + 1e-12);
      if (auto inv = ctx.try_inverse(x, 1e-8)) {
        CHECK(ctx.norm(ctx.sub(ctx.multiply(*inv, x), ctx.identity())) <= 1e-8);
        CHECK(ctx.norm(ctx.sub(ctx.multiply(x, *inv), ctx.identity())) <= 1e-8);
      }
    }
  }
}

TEST_CASE("units contain an open ball") {
  // perturbations with |x - u| < 1/|u^-1| stay invertible
  std::mt19937_64 rng(7);
  AlgebraContext mat = AlgebraContext::matrix(3);
  Element u = mat.identity();
  for (int i = 0; i < 9; ++i) u.data[i] += 0.1 * ((i % 3) - 1);
  auto uinv = mat.try_inverse(u, 1e-10);
  REQUIRE(uinv);
  const double radius = 1.0 / mat.norm(*uinv);
  for (int s = 0; s < 100; ++s) {
    Element d = mat.random_element(rng);
    Element x = mat.add(u, mat.scale(0.5 * radius / mat.norm(d), d));
    CHECK(mat.try_inverse(x, 1e-8));
  }
}
