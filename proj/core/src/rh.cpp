#include "ttstar/rh.hpp"

#include <cmath>

#include "ttstar/matrices.hpp"
#include "ttstar/stokes.hpp"

namespace ttstar {

double phi(double x) {
  if (x <= 0.0) throw std::invalid_argument("phi requires x > 0");
  // l = e^sigma turns the integrand into e^{-2x cosh(sigma)}/(2pi), even in
  // sigma; trapezoid with interval halving until the target accuracy.
  double floor_scale = std::exp(-2.0 * x);
  if (floor_scale == 0.0) return 0.0;
  double tol = 1e-14 * floor_scale;
  double L = std::acosh(std::max(746.0 / (2.0 * x), 1.0 + 1e-8)) + 1.0;
  auto f = [x](double sig) { return std::exp(-2.0 * x * std::cosh(sig)); };
  long n = 64;
  double h = L / n;
  double sum = 0.5 * (f(0.0) + f(L));
  for (long i = 1; i < n; ++i) sum += f(i * h);
  double prev = sum * h;
  for (int it = 0; it < 24; ++it) {
    double mid = 0.0;
    for (long i = 0; i < n; ++i) mid += f((i + 0.5) * h);
    double cur = 0.5 * prev + 0.5 * h * mid;
    n *= 2;
    h *= 0.5;
    if (std::abs(cur - prev) < tol * kPi) return cur / kPi;
    prev = cur;
  }
  return prev / kPi;
}

namespace {

struct G2Entry {
  int row, col;    // 0-based
  int half_pow;    // omega^{half_pow/2}
  double sign;
  int param;       // 1 or 2
  int ray_octant;  // angle = ray_octant * pi/4 on the rotated contour
};

// the twelve single-entry contributions and their rotated-ray positions
constexpr G2Entry kG2Table[] = {
    {0, 1, 1, -1.0, 1, -3}, {0, 2, 6, -1.0, 2, 4},  {0, 3, 3, +1.0, 1, 3},
    {1, 0, 3, +1.0, 1, 1},  {1, 2, 1, +1.0, 1, 3},  {1, 3, 6, +1.0, 2, 2},
    {2, 0, 6, +1.0, 2, 0},  {2, 1, 3, -1.0, 1, -1}, {2, 3, 1, +1.0, 1, 1},
    {3, 0, 1, -1.0, 1, -1}, {3, 1, 6, -1.0, 2, -2}, {3, 2, 3, -1.0, 1, -3},
};

int octant_of(double theta) {
  double t = std::remainder(theta, 2.0 * kPi);
  double oct = t / (kPi / 4.0);
  double r = std::round(oct);
  if (std::abs(oct - r) > 1e-9)
    throw std::invalid_argument("angle is not a ray of the rotated contour");
  int o = static_cast<int>(r);
  if (o == -4) o = 4;
  return o;
}

}  // namespace

JumpEval jump_G2(double theta, double k, double x, const StokesParams& s) {
  if (s.cs.tag() != CaseId::k4a)
    throw std::invalid_argument("jump matrices are printed for case 4a only");
  if (k <= 0.0 || x <= 0.0)
    throw std::invalid_argument("need k > 0 and x > 0");
  int oct = octant_of(theta);
  double l = x * k;
  double damp_odd = std::exp(-std::sqrt(2.0) * x * (l + 1.0 / l));
  double damp_even = std::exp(-2.0 * x * (l + 1.0 / l));
  Cmat g = Cmat::Identity(4, 4);
  for (const auto& e : kG2Table) {
    if (e.ray_octant != oct) continue;
    double sp = (e.param == 1) ? s.s1 : s.s2;
    double damp = ((e.row - e.col) % 2 != 0) ? damp_odd : damp_even;
    g(e.row, e.col) = e.sign * sp * s.cs.omega_pow_half(e.half_pow) * damp;
  }
  return {theta, k, g};
}

std::array<double, 4> jump_G3_weights(double k, double x) {
  double l = x * k;
  double xi = x * (l + 1.0 / l);
  double c8 = std::cos(kPi / 8.0), s8 = std::sin(kPi / 8.0);
  double r2 = std::sqrt(2.0);
  return {std::exp(-2.0 * r2 * xi * c8), std::exp(-4.0 * xi * c8),
          std::exp(-2.0 * r2 * xi * s8), std::exp(-4.0 * xi * s8)};
}

JumpEval jump_G3(double ray, double k, double x, const StokesParams& s) {
  if (s.cs.tag() != CaseId::k4a)
    throw std::invalid_argument("jump matrices are printed for case 4a only");
  if (k <= 0.0 || x <= 0.0)
    throw std::invalid_argument("need k > 0 and x > 0");
  bool upper;  // pi/8 ray?
  if (std::abs(std::remainder(ray - kPi / 8.0, 2.0 * kPi)) < 1e-9)
    upper = true;
  else if (std::abs(std::remainder(ray - 9.0 * kPi / 8.0, 2.0 * kPi)) < 1e-9)
    upper = false;
  else
    throw std::invalid_argument("ray must be pi/8 or 9pi/8");

  auto eighth = [](int m) { return std::polar(1.0, kPi * m / 8.0); };
  double r2 = std::sqrt(2.0);
  Cplx f1 = std::exp(r2 * (eighth(-7) / k + x * x * k * eighth(7)));
  Cplx f2 = std::exp(2.0 * (eighth(-9) / k + x * x * k * eighth(9)));
  Cplx f3 = std::exp(r2 * (eighth(-11) / k + x * x * k * eighth(11)));
  Cplx f4 = std::exp(2.0 * (eighth(-5) / k + x * x * k * eighth(5)));
  // the g-exponents of the upper ray coincide with the f's
  Cplx g1 = std::exp(r2 * (eighth(9) / k + x * x * k * eighth(-9)));
  if (std::abs(g1 - f1) > 1e-12 * std::max(1.0, std::abs(f1)))
    throw std::logic_error("g1 != f1");

  auto w = [&](int halves) { return s.cs.omega_pow_half(halves); };
  double s1 = s.s1, s2 = s.s2;
  Cmat g = Cmat::Identity(4, 4);
  if (!upper) {
    g(0, 1) = w(1) * (s1 + s1 * s2) * f1;
    g(0, 2) = w(6) * (s1 * s1 + s2) * f2;
    g(0, 3) = w(3) * s1 * f3;
    g(1, 2) = w(1) * s1 * f3;
    g(3, 1) = w(6) * s2 * f4;
    g(3, 2) = w(3) * s1 * f1;
  } else {
    g(1, 0) = w(-1) * (s1 + s1 * s2) * f1;
    g(2, 0) = w(2) * (s1 * s1 + s2) * f2;
    g(3, 0) = w(-3) * s1 * f3;
    g(2, 1) = w(-1) * s1 * f3;
    g(1, 3) = w(2) * s2 * f4;
    g(2, 3) = w(-3) * s1 * f1;
  }

  // independent construction: the (un-conjugated) product of four Stokes
  // factors.  The comparison runs in the constant frame so that rounding
  // noise in the exact zeros is not blown up by the growing exponentials.
  // Skipped when the exponent scale exceeds double range.
  double l = x * k;
  if (std::sqrt(2.0) * x * (l + 1.0 / l) > 600.0) return {ray, k, g};
  Cplx zeta = std::polar(k, upper ? kPi / 8.0 : 9.0 * kPi / 8.0);
  Cmat xi;
  if (!upper) {
    xi = stokes_factor(s, Frac(6, 4)) * stokes_factor(s, Frac(7, 4)) *
         stokes_factor(s, Frac(8, 4)) * stokes_factor(s, Frac(9, 4));
  } else {
    xi = (stokes_factor(s, Frac(2, 4)) * stokes_factor(s, Frac(3, 4)) *
          stokes_factor(s, Frac(4, 4)) * stokes_factor(s, Frac(5, 4)))
             .inverse();
  }
  Cmat from_g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (g(i, j) == 0.0) {
        from_g(i, j) = 0.0;
        continue;
      }
      Cplx wi = s.cs.omega_pow_half(2 * i), wj = s.cs.omega_pow_half(2 * j);
      Cplx expo = x * x * zeta * (wj - wi) +
                  (s.cs.omega_pow_half(-2 * j) - s.cs.omega_pow_half(-2 * i)) /
                      zeta;
      from_g(i, j) = g(i, j) * std::exp(expo);
    }
  if (max_diff(from_g, xi) > 1e-12 * std::max(1.0, max_abs(xi)))
    throw std::logic_error("explicit jump disagrees with the factor product");

  return {ray, k, g};
}

Y0Leading y0_leading(const StokesParams& s, double x) {
  if (s.cs.tag() != CaseId::k4a)
    throw std::invalid_argument("leading-order Y(0,x) is a case 4a formula");
  if (x <= 0.0) throw std::invalid_argument("x must be positive");
  Y0Leading y;
  y.x = x;
  double p1 = phi(std::sqrt(2.0) * x), p2 = phi(2.0 * x);
  y.t[0] = 1.0;
  y.t[1] = s.cs.omega_pow_half(-1) * s.s1 * p1;
  y.t[2] = -s.s2 * p2;
  y.t[3] = s.cs.omega_pow_half(1) * s.s1 * p1;
  y.matrix = Cmat(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) y.matrix(i, j) = y.t[(j - i + 4) % 4];

  // eigenvalues of the circulant on the Vandermonde basis
  Cplx a = y.t[0] + y.t[1] + y.t[2] + y.t[3];
  Cplx b = y.t[0] + Cplx(0, 1) * y.t[1] - y.t[2] - Cplx(0, 1) * y.t[3];
  if (std::abs(a.imag()) > 1e-12 || std::abs(b.imag()) > 1e-12)
    throw std::logic_error("circulant eigenvalues are not real");
  y.a = a.real();
  y.b = b.real();
  if (y.a <= 0.0 || y.b <= 0.0)
    throw std::domain_error(
        "non-positive circulant eigenvalue: x too small for the leading order");

  double err_scale = std::exp(-4.0 * std::sqrt(2.0) * x);
  double amp_min = 1e300;
  if (s.s1 != 0.0) amp_min = std::min(amp_min, std::abs(s.s1) * p1);
  if (s.s2 != 0.0) amp_min = std::min(amp_min, std::abs(s.s2) * p2);
  y.warn_small_x = amp_min < 1e300 && err_scale >= 0.01 * amp_min;
  return y;
}

std::pair<double, double> w_from_y0(const Y0Leading& y) {
  if (y.a <= 0.0 || y.b <= 0.0)
    throw std::domain_error("non-positive a or b: half-period shifted branch");
  return {-0.5 * std::log(y.a), -0.5 * std::log(y.b)};
}

namespace {

std::array<double, 3> x_minors(double s1, double s2, double g1s, double g2s,
                               double g3s, double g4s) {
  double x2 = 4.0 - g1s * s1 * s1;
  double x3 = 8.0 - 2.0 * s1 * s1 * s2 * g1s - 2.0 * s1 * s1 * (g1s + g3s) -
              2.0 * s2 * s2 * g4s;
  double x4 = 16.0 - 8.0 * s1 * s1 * (g1s + g3s) -
              8.0 * s1 * s1 * s2 * (g1s + g2s) -
              4.0 * s2 * s2 * (g2s + g4s) -
              2.0 * s1 * s1 * s2 * s2 * (g2s + g1s * g1s) +
              std::pow(s1, 4) * (g1s * g1s + g3s * g3s - 2.0 * g2s) +
              std::pow(s2, 4) * g1s * g1s;
  return {x2, x3, x4};
}

}  // namespace

std::array<double, 3> positivity_X_at(const StokesParams& s, double x,
                                      double l) {
  if (l <= 0.0) throw std::invalid_argument("l must be positive");
  double xi = x * (l + 1.0 / l);
  double c8 = std::cos(kPi / 8.0), s8 = std::sin(kPi / 8.0);
  double r2 = std::sqrt(2.0);
  double g1s = std::exp(-2.0 * r2 * xi * c8);
  double g2s = std::exp(-4.0 * xi * c8);
  double g3s = std::exp(-2.0 * r2 * xi * s8);
  double g4s = std::exp(-4.0 * xi * s8);
  return x_minors(s.s1, s.s2, g1s, g2s, g3s, g4s);
}

PositivityEval positivity_X(const StokesParams& s, double x) {
  if (x < 0.0) throw std::invalid_argument("x must be non-negative");
  // worst case l + 1/l = 2: c = e^{-4x cos pi/8}, s = e^{-4x sin pi/8}
  double c = std::exp(-4.0 * x * std::cos(kPi / 8.0));
  double se = std::exp(-4.0 * x * std::sin(kPi / 8.0));
  auto m = x_minors(s.s1, s.s2, c * se, c * c, c / se, se * se);
  PositivityEval ev;
  ev.x2 = m[0];
  ev.x3 = m[1];
  ev.x4 = m[2];
  ev.all_positive = ev.x2 > 0.0 && ev.x3 > 0.0 && ev.x4 > 0.0;
  return ev;
}

double solvable_from(const StokesParams& s) {
  auto min_at = [&](double x) {
    PositivityEval ev = positivity_X(s, x);
    return std::min({ev.x2, ev.x3, ev.x4});
  };
  if (min_at(0.0) >= -1e-12) return 0.0;
  double hi = 1.0;
  while (min_at(hi) <= 0.0) {
    hi *= 2.0;
    if (hi > 1e6)
      throw std::runtime_error(
          "no solvability threshold found (should not happen)");
  }
  double lo = 0.0;
  while (hi - lo > 1e-6) {
    double mid = 0.5 * (lo + hi);
    if (min_at(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace ttstar
