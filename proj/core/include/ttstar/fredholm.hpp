#pragma once

#include <array>
#include <vector>

#include "ttstar/types.hpp"

namespace ttstar {

enum class Branch { I, II };

// Parameters of the N = 4 determinant representation.  The anti-symmetry
// constraint fixes c4 = 0 and c3 = -i c1; lambda is folded into the c's and
// kept at 1 (re-introduced internally only for root tracking).
struct TWParams {
  std::array<Cplx, 4> c{};  // c[j-1] multiplies omega_j = i^j
  double lambda = 1.0;
};

// Branch I: s1 = -2 pi i c1 e^{i pi/4}, s2 = 2 pi i c2 e^{i pi/2};
// branch II flips the sign of c1.
TWParams params_from_stokes(const StokesParams& s, Branch branch);

// K_k(u,v) = sum_j omega_j^k c_j e^{-t[(1-omega_j)u + (1-omega_j^{-1})/u]}
//            / (-omega_j u + v)
Cplx kernel_value(int k, double u, double v, double t, const TWParams& p);

// log-scale quadrature u = e^{sigma}, trapezoid over sigma in [-L, L]
struct NystromGrid {
  std::vector<double> nodes;    // increasing, positive
  std::vector<double> weights;  // trapezoid weight times du/dsigma
  double half_width = 0.0;
};
NystromGrid make_grid(double t, int node_count);

struct FredholmResult {
  std::array<double, 4> q{};   // q_1..q_4
  double max_imag = 0.0;       // largest |Im q_k| before discarding
  double antisym_residual = 0.0;  // max(|q1+q2|, |q3+q4|)
  double grid_change = 0.0;    // max |q_k(2m) - q_k(m)|
  int node_count = 0;
};

// q_k = logdet(I - lambda K_k) - logdet(I - lambda K_{k-1}); refuses radii
// below 1e-3 and determinants near zero.  The result is computed at m and
// 2m nodes; grid_change > 1e-6 raises.
FredholmResult fredholm_q(double t, const TWParams& p, int node_count = 200);

// Exponents alpha_1..alpha_4 from the root homotopy of
// y^5 + 2 pi i lam c1 y^2 - (1 + 2 pi i lam c2) y + 2 pi lam c1, y = z^2,
// tracked along lam_t = t from the unit-circle configuration alpha_k = k.
std::array<double, 4> alpha_from_params(const TWParams& p, int steps = 64);

}  // namespace ttstar
