#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttstar/poly.hpp"
#include "ttstar/types.hpp"

namespace ttstar {

// Reduced quadratic P(x) whose roots 2cos(theta) carry the smoothness
// criterion:  4a x^2 + s1 x - (2+s2);  5a x^2 + (1-s1)x - (1+s1+s2);
// 6a x^2 + s1 x - (1+s2).
Poly region_quadratic(const StokesParams& s);

struct RegionVerdict {
  bool in_a = false;
  bool in_b = false;
  // roots of the reduced quadratic (real parts; imag in roots_imag)
  double root_lo = 0.0, root_hi = 0.0;
  double roots_imag = 0.0;  // common |imaginary part| when complex
  std::optional<double> theta1, theta2;  // present iff in_a
  // whether the printed inequality list of the smoothness theorem agrees
  // with the root criterion (it admits slivers past the vertex tangency)
  bool printed_inequalities_in_a = false;
  bool vertex_condition = false;
  std::string witness;
};

// Region (a): both roots of the reduced quadratic real and in [-2,2]
// (closed; tolerance 1e-12).  The verdict also evaluates the printed
// inequality triple and the |vertex| <= 2 condition and flags disagreement.
RegionVerdict in_region_a(const StokesParams& s);

// Region (b): the strict inequality triple (positivity of S^{-1}+S^{-t}).
// Cross-checked characterizations: positive definiteness of S+S^t,
// signs of p at the case's test points, and interlacing of the theta's
// with the relevant roots of unity.  Disagreement outside the boundary
// tolerance throws logic_error.
RegionVerdict in_region_b(const StokesParams& s);

// the three strict inequalities, smallest-first margin
double region_b_margin(const StokesParams& s);

// Theta angle maps between asymptotic data and quadratic roots.
AsymptoticData thetas_to_gammas(double th1, double th2, CaseId cs);
void gammas_to_thetas(const AsymptoticData& g, double& th1, double& th2);

StokesParams gamma_to_stokes(const AsymptoticData& g);
// throws NotInRegionAError when the quadratic has complex roots or a root
// outside [-2,2]
AsymptoticData stokes_to_gammas(const StokesParams& s);

struct IntegerPoint {
  int s1 = 0, s2 = 0;
  CyclotomicFactorization factorization;
};

// All integer Stokes pairs in the closed region (a) (root criterion), with
// cyclotomic factorizations of p.  Case 4a yields exactly 19.
std::vector<IntegerPoint> integer_points(CaseId cs);

struct GridRow {
  double s1, s2;
  bool in_a, in_b;
};

struct GridSpec {
  double s1_min, s1_max, s2_min, s2_max, step;
};

// Row-major scan; deterministic ordering regardless of thread count.
std::vector<GridRow> region_grid(CaseId cs, const GridSpec& spec,
                                 int threads = 0);

}  // namespace ttstar
