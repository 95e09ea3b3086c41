#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <set>

#include "test_helpers.hpp"
#include "ttstar/region.hpp"
#include "ttstar/stokes.hpp"

using namespace ttstar;
using testing::rand_in;

namespace {

AsymptoticData random_interior(CaseId cs, double margin = 0.05) {
  // sample the fundamental domain 0 < th1 < th2 < pi directly
  double th1 = rand_in(margin, kPi - 2.0 * margin);
  double th2 = rand_in(th1 + margin, kPi - margin * 0.5);
  return thetas_to_gammas(th1, th2, cs);
}

}  // namespace

TEST_CASE("named gamma-to-Stokes values (4a)") {
  StokesParams a = gamma_to_stokes(AsymptoticData(0.0, 0.0));
  CHECK(std::abs(a.s1) < 1e-14);
  CHECK(std::abs(a.s2) < 1e-14);

  StokesParams b = gamma_to_stokes(AsymptoticData(1.0, -1.0));
  CHECK(b.s1 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(b.s2 == doctest::Approx(-2.0).epsilon(1e-13));

  StokesParams c = gamma_to_stokes(AsymptoticData(3.0, 1.0));
  CHECK(c.s1 == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(c.s2 == doctest::Approx(-6.0).epsilon(1e-13));
}

TEST_CASE("inverse map and its domain error") {
  AsymptoticData g = stokes_to_gammas(StokesParams(0.0, 0.0));
  CHECK(g.gamma0 == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(g.gamma1 == doctest::Approx(0.0).epsilon(1e-13));

  AsymptoticData gc = stokes_to_gammas(StokesParams(4.0, -6.0));
  CHECK(gc.gamma0 == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(gc.gamma1 == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(stokes_to_gammas(StokesParams(5.0, -8.0)), NotInRegionAError);
}

TEST_CASE("round trip over the interior, all three cases") {
  for (auto tag : {CaseId::k4a, CaseId::k5a, CaseId::k6a}) {
    CaseId cs(tag);
    for (int i = 0; i < 1000; ++i) {
      AsymptoticData g = random_interior(cs);
      StokesParams s = gamma_to_stokes(g);
      AsymptoticData back = stokes_to_gammas(s);
      CHECK(std::abs(back.gamma0 - g.gamma0) < 1e-10);
      CHECK(std::abs(back.gamma1 - g.gamma1) < 1e-10);
    }
  }
}

TEST_CASE("roots of the characteristic polynomial carry the angle data") {
  for (int i = 0; i < 50; ++i) {
    AsymptoticData g = random_interior(CaseId::k4a);
    StokesParams s = gamma_to_stokes(g);
    auto roots = poly_roots(char_poly(s).p);
    std::vector<double> expect = {kPi * (g.gamma0 + 1.0) / 4.0,
                                  -kPi * (g.gamma0 + 1.0) / 4.0,
                                  kPi * (g.gamma1 + 3.0) / 4.0,
                                  -kPi * (g.gamma1 + 3.0) / 4.0};
    for (double th : expect) {
      double best = 1e9;
      for (Cplx r : roots) best = std::min(best, std::abs(r - std::polar(1.0, th)));
      CHECK(best < 1e-10);
    }
  }
}

TEST_CASE("region (a) verdicts: root criterion versus printed inequalities") {
  RegionVerdict v0 = in_region_a(StokesParams(0.0, 0.0));
  CHECK(v0.in_a);
  CHECK(v0.printed_inequalities_in_a);

  // the sliver point: printed inequalities hold, the root criterion fails
  RegionVerdict vs = in_region_a(StokesParams(5.0, -8.0));
  CHECK_FALSE(vs.in_a);
  CHECK(vs.printed_inequalities_in_a);
  CHECK_FALSE(vs.vertex_condition);
  CHECK(vs.witness.find("sliver") != std::string::npos);

  RegionVerdict vo = in_region_a(StokesParams(0.0, 3.0));
  CHECK_FALSE(vo.in_a);
  CHECK_FALSE(vo.printed_inequalities_in_a);
}

TEST_CASE("region (b) verdicts and boundary conventions") {
  RegionVerdict v0 = in_region_b(StokesParams(0.0, 0.0));
  CHECK(v0.in_a);
  CHECK(v0.in_b);

  // triangle vertices are boundary, not interior
  for (auto [s1, s2] : {std::pair{-2.0, -2.0}, {2.0, -2.0}, {0.0, 2.0}}) {
    RegionVerdict v = in_region_b(StokesParams(s1, s2));
    CHECK_FALSE(v.in_b);
  }

  RegionVerdict ve = in_region_b(StokesParams(0.0, -2.0));
  CHECK(ve.in_a);
  CHECK_FALSE(ve.in_b);
}

TEST_CASE("region (b) equals positive definiteness of S + S^t on a grid") {
  // in_region_b cross-checks the PD, p-sign and interlacing routes
  // internally away from the boundary; sweep all three cases
  for (auto tag : {CaseId::k4a, CaseId::k5a, CaseId::k6a}) {
    CaseId cs(tag);
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= 40; ++j) {
        StokesParams s(-5.0 + 0.25 * i, -5.0 + 0.25 * j, cs);
        CHECK_NOTHROW(in_region_b(s));
      }
  }
}

TEST_CASE("region (b) for 6a matches the interlacing window on a grid") {
  for (double s1 = -3.0; s1 <= 3.0 + 1e-9; s1 += 0.2)
    for (double s2 = -3.0; s2 <= 3.0 + 1e-9; s2 += 0.2) {
      StokesParams s(s1, s2, CaseId::k6a);
      RegionVerdict v = in_region_b(s);
      if (!v.theta1) {
        CHECK_FALSE(v.in_b);
        continue;
      }
      bool interlace = *v.theta1 > kPi / 6.0 && *v.theta1 < kPi / 2.0 &&
                       *v.theta2 > kPi / 2.0 && *v.theta2 < 5.0 * kPi / 6.0;
      if (std::abs(region_b_margin(s)) > 1e-9) CHECK(v.in_b == interlace);
    }
}

TEST_CASE("exactly 19 integer points in case 4a, with factorizations") {
  auto pts = integer_points(CaseId::k4a);
  CHECK(pts.size() == 19);

  std::set<std::pair<int, int>> seen;
  for (const auto& p : pts) {
    seen.insert({p.s1, p.s2});
    CHECK(p.factorization.complete);
  }
  CHECK(seen.count({4, -6}) == 1);
  CHECK(seen.count({0, 0}) == 1);
  CHECK(seen.count({5, -8}) == 0);
  CHECK(seen.count({-5, -8}) == 0);

  for (const auto& p : pts) {
    if (p.s1 == 4 && p.s2 == -6) CHECK(p.factorization.pretty() == "Phi2^4");
    if (p.s1 == 0 && p.s2 == 0) CHECK(p.factorization.pretty() == "Phi8");
  }

  // the sliver pair passes the printed inequalities but is excluded
  for (int sgn : {-1, 1}) {
    RegionVerdict v = in_region_a(StokesParams(5.0 * sgn, -8.0));
    CHECK(v.printed_inequalities_in_a);
    CHECK_FALSE(v.in_a);
  }

  // enumerations for the larger cases complete without a count assertion
  for (auto tag : {CaseId::k5a, CaseId::k6a}) {
    auto more = integer_points(CaseId(tag));
    CHECK(more.size() > 0);
    for (const auto& p : more) CHECK(p.factorization.complete);
  }
}

TEST_CASE("region grid is row-major with (b) nested inside (a)") {
  GridSpec spec{-4.0, 4.0, -8.0, 3.0, 0.25};
  auto rows = region_grid(CaseId::k4a, spec, 2);
  REQUIRE(rows.size() == 33u * 45u);
  // ordering: s1 varies slowest
  CHECK(rows[0].s1 == doctest::Approx(-4.0));
  CHECK(rows[0].s2 == doctest::Approx(-8.0));
  CHECK(rows[1].s2 == doctest::Approx(-7.75));
  int count_a = 0, count_b = 0;
  for (const auto& r : rows) {
    if (r.in_b) CHECK(r.in_a);
    count_a += r.in_a;
    count_b += r.in_b;
  }
  CHECK(count_b > 0);
  CHECK(count_a > count_b);

  CHECK_THROWS_AS(region_grid(CaseId::k4a, GridSpec{0, 1, 0, 1, -1.0}, 1),
                  std::invalid_argument);
}

TEST_CASE("boundary tangency of the parabola and the edge lines") {
  // equating disc = 0 and 2 +- 2 s1 - s2 = 0 forces (s1 -+ 4)^2 = 0
  for (double sgn : {1.0, -1.0}) {
    // on the line: s2 = 2 + 2 sgn s1; disc = s1^2 + 4 s2 + 8
    // = s1^2 + 8 sgn s1 + 16 = (s1 + 4 sgn)^2
    for (double s1 = -5.0; s1 <= 5.0; s1 += 0.5) {
      double s2 = 2.0 + 2.0 * sgn * s1;
      double disc = s1 * s1 + 4.0 * s2 + 8.0;
      CHECK(disc == doctest::Approx((s1 + 4.0 * sgn) * (s1 + 4.0 * sgn))
                        .epsilon(1e-12));
    }
  }
}

TEST_CASE("deterministic grid results regardless of thread count") {
  GridSpec spec{-2.0, 2.0, -3.0, 1.0, 0.5};
  auto a = region_grid(CaseId::k5a, spec, 1);
  auto b = region_grid(CaseId::k5a, spec, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].in_a == b[i].in_a);
    CHECK(a[i].in_b == b[i].in_b);
  }
}
