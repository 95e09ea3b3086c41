#include <doctest.h>

#include <algorithm>

#include "test_helpers.hpp"
#include "ttstar/poly.hpp"
#include "ttstar/stokes.hpp"

using namespace ttstar;

namespace {

// independent discriminant oracle: product over root pairs
double disc_from_roots(const Poly& p) {
  auto roots = poly_roots(p);
  Cplx prod = 1.0;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      Cplx d = roots[i] - roots[j];
      prod *= d * d;
    }
  prod *= std::pow(p.coeffs[0], 2 * p.degree() - 2);
  return prod.real();
}

}  // namespace

TEST_CASE("characteristic polynomial from a companion matrix") {
  // matrix with char poly mu^3 - 2mu^2 + 3mu - 5
  Rmat a = Rmat::Zero(3, 3);
  a(0, 0) = 2.0; a(0, 1) = -3.0; a(0, 2) = 5.0;
  a(1, 0) = 1.0; a(2, 1) = 1.0;
  Poly p = char_poly_from_matrix(a);
  REQUIRE(p.degree() == 3);
  CHECK(p.coeffs[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p.coeffs[1] == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(p.coeffs[2] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(p.coeffs[3] == doctest::Approx(-5.0).epsilon(1e-14));
}

TEST_CASE("roots of a quadruple root polynomial cluster at -1") {
  // a defective quadruple root spreads by about eps^{1/4}
  Poly p{{1.0, 4.0, 6.0, 4.0, 1.0}};
  for (Cplx r : poly_roots(p)) CHECK(std::abs(r + 1.0) < 1e-3);
}

TEST_CASE("resultant-based discriminant matches the root-product oracle") {
  Poly p{{1.0, 0.0, 0.0, 0.0, 1.0}};  // mu^4 + 1
  CHECK(discriminant(p) == doctest::Approx(256.0).epsilon(1e-10));
  CHECK(disc_from_roots(p) == doctest::Approx(256.0).epsilon(1e-8));

  for (int i = 0; i < 20; ++i) {
    StokesParams s = testing::random_params(CaseId::k4a);
    Poly q = char_poly_closed_form(s);
    double d1 = discriminant(q);
    double d2 = disc_from_roots(q);
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-7));
  }
}

TEST_CASE("case 4a discriminant factors into the region boundary curves") {
  // ((s1)^2+4 s2+8)^2 (2+2s1-s2)(2-2s1-s2), relative 1e-9 on a grid
  for (double s1 = -5.0; s1 <= 5.0 + 1e-9; s1 += 0.5)
    for (double s2 = -5.0; s2 <= 5.0 + 1e-9; s2 += 0.5) {
      StokesParams s(s1, s2, CaseId::k4a);
      double d = discriminant(char_poly_closed_form(s));
      double f = std::pow(s1 * s1 + 4.0 * s2 + 8.0, 2) *
                 (2.0 + 2.0 * s1 - s2) * (2.0 - 2.0 * s1 - s2);
      double scale = std::max({std::abs(d), std::abs(f), 1.0});
      CHECK(std::abs(d - f) / scale < 1e-9);
    }
}

TEST_CASE("cyclotomic factorizations of the named region points") {
  CyclotomicFactorization f1 = factor_cyclotomic({1, 4, 6, 4, 1});
  CHECK(f1.complete);
  CHECK(f1.multiplicity[1] == 4);  // Phi_2^4
  CHECK(f1.pretty() == "Phi2^4");

  CyclotomicFactorization f2 = factor_cyclotomic({1, 0, 0, 0, 1});
  CHECK(f2.complete);
  CHECK(f2.multiplicity[7] == 1);  // Phi_8
  CHECK(f2.pretty() == "Phi8");

  CyclotomicFactorization f3 = factor_cyclotomic({1, 0, -3});
  CHECK_FALSE(f3.complete);

  CHECK_THROWS_AS(factor_cyclotomic({2, 0, 1}), std::invalid_argument);
}

TEST_CASE("palindromic symmetry flags") {
  PalindromicPoly p{{{1.0, 2.0, -1.0, 2.0, 1.0}}, +1};
  CHECK(p.symmetry_residual() == 0.0);
  PalindromicPoly q{{{1.0, 2.0, 0.0, -2.0, -1.0}}, -1};
  CHECK(q.symmetry_residual() == 0.0);
  PalindromicPoly bad{{{1.0, 2.0, 0.0, -2.0, -1.0}}, +1};
  CHECK(bad.symmetry_residual() > 1.0);
}

TEST_CASE("degenerate polynomial inputs are rejected") {
  CHECK_THROWS_AS(poly_roots(Poly{{0.0, 1.0, 2.0}}), std::invalid_argument);
}
