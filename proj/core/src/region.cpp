#include "ttstar/region.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "ttstar/parallel.hpp"
#include "ttstar/stokes.hpp"

namespace ttstar {

namespace {
constexpr double kBoundaryTol = 1e-12;
constexpr double kConfidentMargin = 1e-9;
}  // namespace

Poly region_quadratic(const StokesParams& s) {
  switch (s.cs.tag()) {
    case CaseId::k4a: return Poly{{1.0, s.s1, -(2.0 + s.s2)}};
    case CaseId::k5a: return Poly{{1.0, 1.0 - s.s1, -(1.0 + s.s1 + s.s2)}};
    default: return Poly{{1.0, s.s1, -(1.0 + s.s2)}};
  }
}

namespace {

// printed inequality triple for region (a), >= 0 form
std::array<double, 3> region_a_inequalities(const StokesParams& s) {
  double s1 = s.s1, s2 = s.s2;
  switch (s.cs.tag()) {
    case CaseId::k4a:
      return {s1 * s1 + 4.0 * s2 + 8.0, 2.0 + 2.0 * s1 - s2,
              2.0 - 2.0 * s1 - s2};
    case CaseId::k5a:
      return {s1 * s1 + 2.0 * s1 + 4.0 * s2 + 5.0, 5.0 - 3.0 * s1 - s2,
              1.0 + s1 - s2};
    default:
      return {s1 * s1 + 4.0 * s2 + 4.0, 3.0 - 2.0 * s1 - s2,
              3.0 + 2.0 * s1 - s2};
  }
}

// strict inequality triple for region (b)
std::array<double, 3> region_b_inequalities(const StokesParams& s) {
  double s1 = s.s1, s2 = s.s2;
  const double r5 = std::sqrt(5.0), r3 = std::sqrt(3.0);
  switch (s.cs.tag()) {
    case CaseId::k4a:
      return {2.0 + s2, 2.0 + 2.0 * s1 - s2, 2.0 - 2.0 * s1 - s2};
    case CaseId::k5a:
      return {2.0 + 0.5 * (-1.0 - r5) * s1 + 0.5 * (1.0 - r5) * s2,
              2.0 + 0.5 * (-1.0 + r5) * s1 + 0.5 * (1.0 + r5) * s2,
              2.0 + 2.0 * s1 - 2.0 * s2};
    default:
      return {2.0 + r3 * s1 - s2, 2.0 + 2.0 * s2, 2.0 - r3 * s1 - s2};
  }
}

// sign conditions on p at the case's unit-circle test points, normalized so
// that positivity of all three is the region-(b) criterion
std::array<double, 3> p_sign_values(const StokesParams& s) {
  Poly p = char_poly_closed_form(s);
  auto at = [&](int halves) { return p.eval(s.cs.omega_pow_half(halves)); };
  switch (s.cs.tag()) {
    case CaseId::k4a:
      return {at(0).real(), at(2).real(), at(4).real()};
    case CaseId::k5a:
      return {at(1).real(), at(3).real(), at(5).real()};
    default:  // p(omega^{1/2}), p(omega^{3/2}), p(omega^{5/2}) all negative
      return {-at(1).real(), -at(3).real(), -at(5).real()};
  }
}

struct QuadraticRoots {
  bool real;
  double lo, hi, imag;
};

QuadraticRoots solve_quadratic(const Poly& q) {
  double b = q.coeffs[1], c = q.coeffs[2];
  double disc = b * b - 4.0 * c;
  QuadraticRoots r{};
  if (disc >= -kBoundaryTol) {
    double sq = std::sqrt(std::max(disc, 0.0));
    r.real = true;
    r.lo = 0.5 * (-b - sq);
    r.hi = 0.5 * (-b + sq);
    r.imag = 0.0;
  } else {
    r.real = false;
    r.lo = r.hi = -0.5 * b;
    r.imag = 0.5 * std::sqrt(-disc);
  }
  return r;
}

// interlacing bounds for theta1, theta2 per case
void interlacing_bounds(CaseId cs, double& a1, double& b1, double& a2,
                        double& b2) {
  switch (cs.tag()) {
    case CaseId::k4a:
      a1 = 0.0; b1 = kPi / 2.0; a2 = kPi / 2.0; b2 = kPi;
      break;
    case CaseId::k5a:
      a1 = kPi / 5.0; b1 = 3.0 * kPi / 5.0; a2 = 3.0 * kPi / 5.0; b2 = kPi;
      break;
    default:
      a1 = kPi / 6.0; b1 = kPi / 2.0; a2 = kPi / 2.0; b2 = 5.0 * kPi / 6.0;
      break;
  }
}

}  // namespace

RegionVerdict in_region_a(const StokesParams& s) {
  RegionVerdict v;
  auto roots = solve_quadratic(region_quadratic(s));
  v.root_lo = roots.lo;
  v.root_hi = roots.hi;
  v.roots_imag = roots.imag;
  v.in_a = roots.real && roots.lo >= -2.0 - kBoundaryTol &&
           roots.hi <= 2.0 + kBoundaryTol;

  auto ineq = region_a_inequalities(s);
  v.printed_inequalities_in_a = true;
  for (double val : ineq)
    if (val < -kBoundaryTol) v.printed_inequalities_in_a = false;
  double vertex = -0.5 * region_quadratic(s).coeffs[1];
  v.vertex_condition = std::abs(vertex) <= 2.0 + kBoundaryTol;

  if (v.in_a) {
    double c1 = std::clamp(roots.hi / 2.0, -1.0, 1.0);
    double c2 = std::clamp(roots.lo / 2.0, -1.0, 1.0);
    v.theta1 = std::acos(c1);  // larger root -> smaller angle
    v.theta2 = std::acos(c2);
  } else if (!roots.real) {
    v.witness = "complex roots of the reduced quadratic";
  } else {
    v.witness = "root outside [-2,2]";
  }
  if (v.printed_inequalities_in_a && !v.in_a)
    v.witness += " (printed inequalities hold: sliver past the vertex tangency)";
  return v;
}

double region_b_margin(const StokesParams& s) {
  auto ineq = region_b_inequalities(s);
  return std::min({ineq[0], ineq[1], ineq[2]});
}

RegionVerdict in_region_b(const StokesParams& s) {
  RegionVerdict v = in_region_a(s);
  double margin = region_b_margin(s);
  v.in_b = margin > kBoundaryTol;
  if (v.in_b && !v.in_a)
    throw std::logic_error("region (b) verdict outside region (a)");

  if (std::abs(margin) > kConfidentMargin) {
    // cross-checks, evaluated only away from the boundary
    bool expect = margin > 0.0;

    auto pv = p_sign_values(s);
    bool by_p = std::min({pv[0], pv[1], pv[2]}) > 0.0;
    if (by_p != expect)
      throw std::logic_error("p-sign route disagrees with the inequality triple");

    Rmat sm = stokes_matrix(s);
    Rmat sym = sm + sm.transpose();
    Eigen::SelfAdjointEigenSolver<Rmat> es(sym);
    bool by_pd = es.eigenvalues().minCoeff() > 0.0;
    Rmat sinv = sm.inverse();
    Rmat sym2 = sinv + sinv.transpose();
    Eigen::SelfAdjointEigenSolver<Rmat> es2(sym2);
    bool by_pd2 = es2.eigenvalues().minCoeff() > 0.0;
    if (by_pd != expect || by_pd2 != expect)
      throw std::logic_error(
          "positive-definiteness route disagrees with the inequality triple");

    bool by_interlace = false;
    if (v.theta1 && v.theta2) {
      double a1, b1, a2, b2;
      interlacing_bounds(s.cs, a1, b1, a2, b2);
      by_interlace = *v.theta1 > a1 && *v.theta1 < b1 && *v.theta2 > a2 &&
                     *v.theta2 < b2;
    }
    if (by_interlace != expect)
      throw std::logic_error("interlacing route disagrees with the inequality triple");
  }
  if (!v.in_b && v.witness.empty()) {
    auto ineq = region_b_inequalities(s);
    for (int i = 0; i < 3; ++i)
      if (ineq[i] <= kBoundaryTol) {
        v.witness = "region (b) inequality #" + std::to_string(i + 1) +
                    " not strictly positive (" + std::to_string(ineq[i]) + ")";
        break;
      }
  }
  return v;
}

AsymptoticData thetas_to_gammas(double th1, double th2, CaseId cs) {
  switch (cs.tag()) {
    case CaseId::k4a:
      return {4.0 * th1 / kPi - 1.0, 4.0 * th2 / kPi - 3.0, cs};
    case CaseId::k5a:
      return {5.0 * th1 / kPi - 6.0, 5.0 * th2 / kPi - 8.0, cs};
    default:
      return {6.0 * th1 / kPi - 2.0, 6.0 * th2 / kPi - 4.0, cs};
  }
}

void gammas_to_thetas(const AsymptoticData& g, double& th1, double& th2) {
  switch (g.cs.tag()) {
    case CaseId::k4a:
      th1 = kPi * (g.gamma0 + 1.0) / 4.0;
      th2 = kPi * (g.gamma1 + 3.0) / 4.0;
      break;
    case CaseId::k5a:
      th1 = kPi * (g.gamma0 + 6.0) / 5.0;
      th2 = kPi * (g.gamma1 + 8.0) / 5.0;
      break;
    default:
      th1 = kPi * (g.gamma0 + 2.0) / 6.0;
      th2 = kPi * (g.gamma1 + 4.0) / 6.0;
      break;
  }
}

StokesParams gamma_to_stokes(const AsymptoticData& g) {
  double th1, th2;
  gammas_to_thetas(g, th1, th2);
  double c1 = std::cos(th1), c2 = std::cos(th2);
  switch (g.cs.tag()) {
    case CaseId::k4a:
      return {-2.0 * (c1 + c2), -2.0 - 4.0 * c1 * c2, g.cs};
    case CaseId::k5a:
      return {1.0 + 2.0 * (c1 + c2), -2.0 - 2.0 * (c1 + c2) - 4.0 * c1 * c2,
              g.cs};
    default:
      return {-2.0 * (c1 + c2), -1.0 - 4.0 * c1 * c2, g.cs};
  }
}

AsymptoticData stokes_to_gammas(const StokesParams& s) {
  RegionVerdict v = in_region_a(s);
  if (!v.in_a) {
    throw NotInRegionAError(
        "Stokes parameters outside region (a): " + v.witness);
  }
  return thetas_to_gammas(*v.theta1, *v.theta2, s.cs);
}

namespace {

IPoly integer_char_poly(CaseId cs, int s1, int s2) {
  std::int64_t a = s1, b = s2;
  switch (cs.tag()) {
    case CaseId::k4a: return {1, a, -b, a, 1};
    case CaseId::k5a: return {1, -a, -b, b, a, -1};  // monic normalization
    default: return {1, a, -b, 0, b, -a, -1};
  }
}

}  // namespace

std::vector<IntegerPoint> integer_points(CaseId cs) {
  // generous bounding box from the vertex condition and the edge inequalities
  int s1_lo = -8, s1_hi = 8, s2_lo = -16, s2_hi = 16;
  std::vector<IntegerPoint> out;
  for (int s1 = s1_lo; s1 <= s1_hi; ++s1)
    for (int s2 = s2_lo; s2 <= s2_hi; ++s2) {
      StokesParams s(s1, s2, cs);
      if (!in_region_a(s).in_a) continue;
      IntegerPoint pt;
      pt.s1 = s1;
      pt.s2 = s2;
      pt.factorization = factor_cyclotomic(integer_char_poly(cs, s1, s2));
      if (!pt.factorization.complete)
        throw std::logic_error(
            "integer point without a complete cyclotomic factorization");
      out.push_back(std::move(pt));
    }
  return out;
}

std::vector<GridRow> region_grid(CaseId cs, const GridSpec& spec, int threads) {
  if (spec.step <= 0.0) throw std::invalid_argument("grid step must be positive");
  auto count = [&](double lo, double hi) {
    long n = static_cast<long>(std::floor((hi - lo) / spec.step + 1e-9)) + 1;
    return n < 1 ? 0L : n;
  };
  long n1 = count(spec.s1_min, spec.s1_max);
  long n2 = count(spec.s2_min, spec.s2_max);
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("empty grid");
  std::vector<GridRow> rows(static_cast<std::size_t>(n1 * n2));
  parallel_for(
      static_cast<std::size_t>(n1),
      [&](std::size_t i) {
        double s1 = spec.s1_min + static_cast<double>(i) * spec.step;
        for (long j = 0; j < n2; ++j) {
          double s2 = spec.s2_min + static_cast<double>(j) * spec.step;
          StokesParams s(s1, s2, cs);
          RegionVerdict v = in_region_b(s);
          rows[i * n2 + j] = {s1, s2, v.in_a, v.in_b};
        }
      },
      threads);
  return rows;
}

}  // namespace ttstar
