#pragma once

#include <array>
#include <vector>

#include "ttstar/types.hpp"

namespace ttstar {

// phi(x) = (1/2pi) int_0^infty e^{-x(l+1/l)} dl/l, positive and decreasing;
// absolute quadrature error below 1e-14 e^{-2x}.
double phi(double x);

struct JumpEval {
  double ray_angle = 0.0;
  double zeta_modulus = 0.0;
  Cmat matrix;
};

// Jump on the rotated contour (rays at multiples of pi/4); each ray carries
// its own sparse pattern with real damping e^{-sqrt2 x(l+1/l)} (odd i-j)
// or e^{-2x(l+1/l)} (even), l = x k.  Case 4a.
JumpEval jump_G2(double theta, double k, double x, const StokesParams& s);

// Jump on the two-ray contour (pi/8 and 9pi/8), case 4a; built from the
// explicit f-factors and cross-checked against the conjugated product of
// four Stokes factors.
JumpEval jump_G3(double ray, double k, double x, const StokesParams& s);

// f1..f4 moduli squared at (k, x): the decay weights of the two-ray jump
std::array<double, 4> jump_G3_weights(double k, double x);

struct Y0Leading {
  double x = 0.0;
  Cmat matrix;          // 4x4 circulant
  std::array<Cplx, 4> t;
  double a = 0.0, b = 0.0;  // circulant eigenvalues, diag(a, b, 1/b, 1/a)
  bool warn_small_x = false;
};

// Leading-order Y(0,x) built from phi; throws on non-positive a or b.
Y0Leading y0_leading(const StokesParams& s, double x);

// w0 = -log(a)/2, w1 = -log(b)/2
std::pair<double, double> w_from_y0(const Y0Leading& y);

struct PositivityEval {
  // closed-form worst-case values at l + 1/l = 2
  double x2 = 0.0, x3 = 0.0, x4 = 0.0;
  bool all_positive = false;
};

// The three principal-minor conditions; worst case at l = 1 with
// c = e^{-4x cos pi/8}, s = e^{-4x sin pi/8}.
PositivityEval positivity_X(const StokesParams& s, double x);

// same determinants from |g_i|^2 at arbitrary l (cross-validation route)
std::array<double, 3> positivity_X_at(const StokesParams& s, double x,
                                      double l);

// Infimum x* >= 0 with the positivity conditions holding for all x >= x*;
// returns 0 exactly on the closure of region (b); bisection to 1e-6.
double solvable_from(const StokesParams& s);

}  // namespace ttstar
