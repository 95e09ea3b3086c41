// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion carries its runtime budget.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ttstar/fredholm.hpp"
#include "ttstar/matrices.hpp"
#include "ttstar/ode.hpp"
#include "ttstar/poly.hpp"
#include "ttstar/region.hpp"
#include "ttstar/rh.hpp"
#include "ttstar/stokes.hpp"

using namespace ttstar;

namespace {

int failures = 0;

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<std::string()> run;  // returns "" on pass, else the reason
};

void run_criterion(const Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  std::string reason;
  try {
    reason = c.run();
  } catch (const std::exception& e) {
    reason = std::string("exception: ") + e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0).count();
  if (reason.empty() && dt > c.budget_seconds)
    reason = "runtime " + std::to_string(dt) + " s exceeds budget " +
             std::to_string(c.budget_seconds) + " s";
  if (reason.empty()) {
    std::printf("[PASS] criterion %2d: %s (%.2f s)\n", c.id, c.name.c_str(), dt);
  } else {
    std::printf("[FAIL] criterion %2d: %s (%.2f s) -- %s\n", c.id,
                c.name.c_str(), dt, reason.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

std::string check(bool ok, const std::string& msg) { return ok ? "" : msg; }

// ----- criterion 1: identity suite ----------------------------------------
std::string criterion1() {
  IdentityReport base = verify_identities(CaseId::k4a);
  if (base.max_residual() >= 1e-12)
    return "constant identities residual " + std::to_string(base.max_residual());
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    StokesParams s(dist(rng), dist(rng), CaseId::k4a);
    double r1 = verify_q_symmetries(s).max_residual();
    double r2 = verify_connection_symmetries(s).max_residual();
    double r3 = verify_circle_jumps(s).max_residual();
    double r4 = std::abs(connection_matrix(s, Frac(4, 4)).determinant() -
                         Cplx(-1.0 / 256.0));
    double worst = std::max({r1, r2, r3, r4});
    if (worst >= 1e-12)
      return "draw " + std::to_string(i) + " residual " + std::to_string(worst);
  }
  return "";
}

// ----- criterion 2: characteristic polynomials -----------------------------
std::string criterion2() {
  for (auto tag : {CaseId::k4a, CaseId::k5a, CaseId::k6a}) {
    CaseId cs(tag);
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= 40; ++j) {
        StokesParams s(-5.0 + 0.25 * i, -5.0 + 0.25 * j, cs);
        // char_poly rechecks the matrix route against the closed form at
        // 1e-12 internally and throws on disagreement
        PalindromicPoly p = char_poly(s);
        if (p.symmetry_residual() >= 1e-12)
          return "symmetry residual at (" + std::to_string(s.s1) + "," +
                 std::to_string(s.s2) + ") case " + cs.name();
      }
  }
  return "";
}

// ----- criterion 3: region equivalences ------------------------------------
std::string criterion3() {
  // A handful of grid points land exactly on the boundary lines, where the
  // monodromy is defective (double unit eigenvalue) and the strict verdicts
  // are on-threshold; those are skipped and counted.
  const double tol_boundary = 1e-9;
  long disagreements = 0, boundary_skips = 0;
  for (int i = 0; i <= 100; ++i)
    for (int j = 0; j <= 100; ++j) {
      StokesParams s(-6.0 + 0.12 * i, -9.0 + 0.13 * j, CaseId::k4a);
      RegionVerdict va = in_region_a(s);

      // route 1: unimodular monodromy eigenvalues at 1e-8
      Poly quad = region_quadratic(s);
      double disc = quad.coeffs[1] * quad.coeffs[1] - 4.0 * quad.coeffs[2];
      double a_margin = std::min({std::abs(quad.eval(2.0)),
                                  std::abs(quad.eval(-2.0)), std::abs(disc)});
      if (a_margin <= tol_boundary) {
        ++boundary_skips;
      } else {
        Eigen::EigenSolver<Rmat> es(monodromy(s));
        double worst = 0.0;
        for (int k = 0; k < 4; ++k)
          worst = std::max(worst, std::abs(std::abs(es.eigenvalues()[k]) - 1.0));
        bool unimodular = worst < 1e-8;
        if (unimodular != va.in_a) ++disagreements;
      }

      // route set 2: the region-(b) characterizations
      double margin = region_b_margin(s);
      if (std::abs(margin) <= tol_boundary) {
        ++boundary_skips;
        continue;
      }
      bool by_triple = margin > 0.0;
      Rmat sm = stokes_matrix(s);
      Eigen::SelfAdjointEigenSolver<Rmat> sa(sm + sm.transpose());
      bool by_pd = sa.eigenvalues().minCoeff() > 0.0;
      bool by_interlace = false;
      if (va.theta1)
        by_interlace = *va.theta1 > 0.0 && *va.theta1 < kPi / 2.0 &&
                       *va.theta2 > kPi / 2.0 && *va.theta2 < kPi;
      if (by_pd != by_triple || by_interlace != by_triple) ++disagreements;
    }
  std::string note = " (exact-boundary skips: " + std::to_string(boundary_skips) +
                     ")";
  if (disagreements == 0) {
    std::printf("        criterion 3 note: zero disagreements%s\n",
                note.c_str());
    return "";
  }
  return std::to_string(disagreements) + " disagreements" + note;
}

// ----- criterion 4: integer points ------------------------------------------
std::string criterion4() {
  auto pts = integer_points(CaseId::k4a);
  if (pts.size() != 19)
    return "expected 19 points, found " + std::to_string(pts.size());
  for (const auto& p : pts)
    if (!p.factorization.complete)
      return "incomplete factorization at (" + std::to_string(p.s1) + "," +
             std::to_string(p.s2) + ")";
  for (int sgn : {-1, 1}) {
    RegionVerdict v = in_region_a(StokesParams(5.0 * sgn, -8.0));
    if (v.in_a) return "sliver point accepted";
    if (!v.printed_inequalities_in_a)
      return "sliver point not flagged by the printed inequalities";
  }
  return "";
}

// ----- criterion 5: connection formula end to end ---------------------------
std::string criterion5() {
  const double samples[10][2] = {
      {0.5, -0.5}, {0.3, -0.6}, {0.2, -0.4}, {0.6, 0.0},  {0.0, -0.8},
      {0.8, 0.3},  {0.0, -1.0}, {1.0, 0.0},  {-0.3, -0.9}, {-0.2, -1.0}};
  OdeConfig cfg;  // x_start 6, x_min 1e-3, rel_tol 1e-10
  for (const auto& g : samples) {
    ConnectionReport rep = verify_connection(AsymptoticData(g[0], g[1]), cfg);
    if (rep.gamma_residual >= 0.02)
      return "gamma (" + std::to_string(g[0]) + "," + std::to_string(g[1]) +
             ") residual " + std::to_string(rep.gamma_residual);
  }
  return "";
}

// ----- criterion 6: sinh-Gordon cross-check ---------------------------------
std::string criterion6() {
  StokesParams s = gamma_to_stokes(AsymptoticData(1.0, -1.0));
  if (std::abs(s.s1) > 1e-13 || std::abs(s.s2 + 2.0) > 1e-12)
    return "gamma (1,-1) did not map to (0,-2)";
  OdeConfig cfg;
  cfg.x_min = 3.0;
  RadialSolution sol = integrate_inward(s, cfg);
  auto [w0, w1] = w_at(sol, 4.0);
  double mtw = -1.0 / (2.0 * std::sqrt(2.0)) * std::sin(kPi / 2.0) *
               std::pow(kPi * 4.0, -0.5) * std::exp(-16.0);
  double rel = std::abs(w0 - mtw) / std::abs(mtw);
  return check(rel < 0.05, "amplitude residual " + std::to_string(rel));
}

// ----- criterion 7: blow-up detection ---------------------------------------
std::string criterion7() {
  OdeConfig cfg;
  RadialSolution bad = integrate_inward(StokesParams(0.0, 3.0), cfg);
  if (!bad.blew_up) return "no blow-up outside region (a)";
  if (!(bad.blowup_x > 0.0 && bad.blowup_x < cfg.x_start))
    return "blow-up location not finite";
  RadialSolution good = integrate_inward(StokesParams(0.0, -2.0), cfg);
  return check(!good.blew_up, "boundary solution blew up");
}

// ----- criterion 8: determinant oracle --------------------------------------
std::string criterion8() {
  const double samples[5][2] = {
      {0.0, -1.0}, {0.5, -0.5}, {-0.5, -0.5}, {0.3, 0.3}, {0.8, -1.2}};
  for (const auto& c : samples) {
    StokesParams s(c[0], c[1]);
    TWParams p = params_from_stokes(s, Branch::I);

    OdeConfig cfg;
    cfg.x_min = 0.9;
    RadialSolution sol = integrate_inward(s, cfg);
    for (double t : {1.0, 2.0}) {
      FredholmResult r = fredholm_q(t, p, 160);
      if (r.max_imag >= 1e-8) return "imaginary part " + std::to_string(r.max_imag);
      if (r.antisym_residual >= 1e-8)
        return "anti-symmetry " + std::to_string(r.antisym_residual);
      auto [w0, w1] = w_at(sol, t);
      double rel = std::abs(r.q[1] - 2.0 * w0) / std::max(std::abs(2.0 * w0), 1e-8);
      if (rel >= 0.02)
        return "q2 mismatch " + std::to_string(rel) + " at t = " +
               std::to_string(t);
    }

    auto al = alpha_from_params(p);
    FredholmResult f1 = fredholm_q(1e-3, p, 240);
    FredholmResult f2 = fredholm_q(1e-2, p, 240);
    for (int k = 0; k < 4; ++k) {
      double slope = (f1.q[k] - f2.q[k]) / std::log(1e-1);
      double target = 2.0 * (al[k] - (k + 1.0));
      if (std::abs(slope - target) / std::max(std::abs(target), 0.1) >= 0.05)
        return "small-t slope mismatch at k = " + std::to_string(k + 1);
    }
  }
  return "";
}

// ----- criterion 9: Riemann-Hilbert leading order ---------------------------
std::string criterion9() {
  double laplace = 0.5 * std::pow(kPi * 10.0, -0.5) * std::exp(-20.0);
  if (std::abs(phi(10.0) - laplace) / laplace >= 0.02)
    return "phi(10) off the saddle-point value";

  const double samples[5][2] = {
      {0.0, -1.0}, {0.5, -0.5}, {-0.5, -0.5}, {0.3, 0.3}, {0.8, -1.2}};
  Cmat pi = const_matrix(MatrixName::Pi, CaseId::k4a);
  Cmat cc = const_matrix(MatrixName::C, CaseId::k4a);
  Cmat d = const_matrix(MatrixName::D, CaseId::k4a);
  for (const auto& c : samples) {
    StokesParams s(c[0], c[1]);

    // circulant symmetries, checked where the truncation error is below gate
    Cmat y = y0_leading(s, 5.0).matrix;
    double r1 = max_diff(pi.inverse() * y * pi, y);
    double r2 = max_diff(cc * y.conjugate() * cc, y);
    double r3 = max_diff(d.inverse() * y.inverse().transpose() * d, y);
    if (std::max({r1, r2, r3}) >= 1e-12)
      return "Y(0) symmetry residual " + std::to_string(std::max({r1, r2, r3}));

    OdeConfig cfg;
    cfg.x_min = 2.5;
    RadialSolution sol = integrate_inward(s, cfg);
    for (double x : {3.0, 4.0, 5.0}) {
      auto [w0o, w1o] = w_at(sol, x);
      auto [w0y, w1y] = w_from_y0(y0_leading(s, x));
      double floor_abs = std::exp(-4.0 * std::sqrt(2.0) * x);
      auto mode_ok = [&](double a, double b) {
        double denom = std::max(std::abs(a), std::abs(b));
        if (denom < 1e-12) return true;  // identically vanishing mode
        double tol = std::max(0.05, 2.0 * floor_abs / denom);
        return std::abs(a - b) / denom < tol;
      };
      if (!mode_ok(w0o + w1o, w0y + w1y))
        return "plus-mode mismatch at x = " + std::to_string(x);
      if (!mode_ok(w0o - w1o, w0y - w1y))
        return "minus-mode mismatch at x = " + std::to_string(x);
    }
  }
  return "";
}

// ----- criterion 10: positivity criterion -----------------------------------
std::string criterion10() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    StokesParams s(dist(rng), dist(rng), CaseId::k4a);
    PositivityEval ev = positivity_X(s, 0.0);
    double f2 = (2.0 - s.s1) * (2.0 + s.s1);
    double f3 = 2.0 * (2.0 + s.s2) * (2.0 - s.s1 * s.s1 - s.s2);
    double f4 = std::pow(2.0 + s.s2, 2) * (2.0 + 2.0 * s.s1 - s.s2) *
                (2.0 - 2.0 * s.s1 - s.s2);
    double worst = std::max({std::abs(ev.x2 - f2), std::abs(ev.x3 - f3),
                             std::abs(ev.x4 - f4)});
    if (worst >= 1e-12 * std::max({1.0, std::abs(f2), std::abs(f3), std::abs(f4)}))
      return "factorization residual " + std::to_string(worst);
  }

  // closure samples return exactly zero
  for (auto [a, b] : {std::pair{0.0, 0.0}, {0.5, -0.5}, {2.0, -2.0},
                      {0.0, 2.0}, {-2.0, -2.0}}) {
    if (solvable_from(StokesParams(a, b)) != 0.0)
      return "nonzero threshold on the region-(b) closure";
  }
  // outside: positive finite thresholds with a 1e-6 bracket
  for (auto [a, b] : {std::pair{10.0, 0.0}, {3.0, 0.0}, {0.0, -3.0}}) {
    StokesParams s(a, b);
    double t = solvable_from(s);
    if (!(t > 0.0 && t < 1e6)) return "threshold not positive finite";
    double again = solvable_from(s);
    if (std::abs(t - again) >= 1e-6) return "bisection not reproducible";
    PositivityEval above = positivity_X(s, t + 2e-6);
    PositivityEval below = positivity_X(s, std::max(t - 2e-6, 0.0));
    if (!above.all_positive || below.all_positive)
      return "threshold bracket violated";
  }
  return "";
}

}  // namespace

int main() {
  std::vector<Criterion> cs = {
      {1, "identity suite (constants, factors, connection, circle jumps)", 1.0,
       criterion1},
      {2, "characteristic polynomials on the 41x41 grid, three cases", 5.0,
       criterion2},
      {3, "region equivalences on the 101x101 grid", 30.0, criterion3},
      {4, "nineteen integer points with cyclotomic factorizations", 1.0,
       criterion4},
      {5, "connection formula end-to-end, ten interior samples", 60.0,
       criterion5},
      {6, "sinh-Gordon amplitude cross-check at x = 4", 10.0, criterion6},
      {7, "blow-up detection inside and outside region (a)", 10.0, criterion7},
      {8, "determinant oracle: anti-symmetry, reality, trajectory match, "
          "small-radius slopes", 300.0, criterion8},
      {9, "leading-order Y(0): symmetries, trajectory match, saddle point",
       30.0, criterion9},
      {10, "positivity criterion and solvability thresholds", 10.0,
       criterion10},
  };
  for (const auto& c : cs) run_criterion(c);
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", cs.size());
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
