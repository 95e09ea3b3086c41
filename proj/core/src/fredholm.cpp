#include "ttstar/fredholm.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

namespace ttstar {

namespace {
const Cplx kI(0.0, 1.0);

Cplx omega_j(int j) {  // i^j
  switch (((j % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}
}  // namespace

TWParams params_from_stokes(const StokesParams& s, Branch branch) {
  if (s.cs.tag() != CaseId::k4a)
    throw std::invalid_argument("the determinant representation is N = 4");
  TWParams p;
  double sgn = (branch == Branch::I) ? 1.0 : -1.0;
  // (I)  s1 = -2 pi i c1 e^{i pi/4},  s2 = 2 pi i c2 e^{i pi/2}
  p.c[0] = sgn * s.s1 * std::polar(1.0, kPi / 4.0) / (2.0 * kPi);
  p.c[1] = -s.s2 / (2.0 * kPi);
  p.c[2] = -kI * p.c[0];
  p.c[3] = 0.0;
  p.lambda = 1.0;
  return p;
}

Cplx kernel_value(int k, double u, double v, double t, const TWParams& p) {
  if (u <= 0.0 || v <= 0.0 || t <= 0.0)
    throw std::invalid_argument("kernel needs u, v, t > 0");
  Cplx sum = 0.0;
  for (int j = 1; j <= 4; ++j) {
    Cplx cj = p.c[j - 1];
    if (cj == 0.0) continue;
    Cplx w = omega_j(j);
    Cplx expo = -t * ((1.0 - w) * u + (1.0 - 1.0 / w) / u);
    sum += omega_j(j * k) * cj * std::exp(expo) / (-w * u + v);
  }
  return sum;
}

NystromGrid make_grid(double t, int node_count) {
  if (node_count < 8) throw std::invalid_argument("node count too small");
  NystromGrid g;
  g.half_width = std::log(750.0 / t);
  g.nodes.resize(node_count);
  g.weights.resize(node_count);
  double h = 2.0 * g.half_width / (node_count - 1);
  for (int i = 0; i < node_count; ++i) {
    double sigma = -g.half_width + i * h;
    g.nodes[i] = std::exp(sigma);
    double trap = (i == 0 || i == node_count - 1) ? 0.5 * h : h;
    g.weights[i] = trap * g.nodes[i];  // du = e^sigma dsigma
  }
  return g;
}

namespace {

// log det(I - lambda K_k) on the grid, symmetrized weighting
Cplx logdet_k(int k, double t, const TWParams& p, const NystromGrid& g) {
  int m = static_cast<int>(g.nodes.size());
  Cmat a = Cmat::Identity(m, m);
  std::vector<double> sqw(m);
  for (int i = 0; i < m; ++i) sqw[i] = std::sqrt(g.weights[i]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a(i, j) -= p.lambda * sqw[i] * sqw[j] *
                 kernel_value(k, g.nodes[i], g.nodes[j], t, p);
  Eigen::PartialPivLU<Cmat> lu(a);
  Cplx logdet = 0.0;
  for (int i = 0; i < m; ++i) {
    Cplx piv = lu.matrixLU()(i, i);
    if (std::abs(piv) < 1e-280)
      throw DeterminantNearZero("Fredholm determinant pivot near zero");
    logdet += std::log(piv);
  }
  if (lu.permutationP().determinant() < 0) logdet += Cplx(0.0, kPi);
  return logdet;
}

std::array<Cplx, 4> q_at(double t, const TWParams& p, int m) {
  NystromGrid g = make_grid(t, m);
  std::array<Cplx, 4> d;
  for (int k = 1; k <= 4; ++k) d[k - 1] = logdet_k(k, t, p, g);
  std::array<Cplx, 4> q;
  q[0] = d[0] - d[3];  // K_0 = K_4 by periodicity of omega_j^k
  for (int k = 2; k <= 4; ++k) q[k - 1] = d[k - 1] - d[k - 2];
  return q;
}

}  // namespace

FredholmResult fredholm_q(double t, const TWParams& p, int node_count) {
  if (t < 1e-3)
    throw std::invalid_argument(
        "radii below 1e-3 are outside the supported conditioning range");
  auto qc = q_at(t, p, node_count);
  auto qf = q_at(t, p, 2 * node_count);
  FredholmResult r;
  r.node_count = node_count;
  for (int k = 0; k < 4; ++k) {
    r.q[k] = qf[k].real();
    r.max_imag = std::max(r.max_imag, std::abs(qf[k].imag()));
    r.grid_change = std::max(r.grid_change, std::abs(qf[k] - qc[k]));
  }
  r.antisym_residual =
      std::max(std::abs(r.q[0] + r.q[1]), std::abs(r.q[2] + r.q[3]));
  if (r.grid_change > 1e-6)
    throw std::runtime_error("quadrature grid insufficient: doubling changed q");
  return r;
}

std::array<double, 4> alpha_from_params(const TWParams& p, int steps) {
  // In y = z^2 the exponent polynomial is the quartic
  //   y^4 + 2 pi i lam c1 y^3 - 2 pi i lam c2 y^2 + 2 pi lam c1 y - 1,
  // which under y = mu e^{3 pi i/4} reproduces the characteristic
  // polynomial exactly (branch I).
  auto quartic_roots = [&](double lam) {
    Cplx a3 = 2.0 * kPi * kI * lam * p.lambda * p.c[0];
    Cplx a2 = -2.0 * kPi * kI * lam * p.lambda * p.c[1];
    Cplx a1 = 2.0 * kPi * lam * p.lambda * p.c[0];
    Cplx a0 = -1.0;
    Cmat comp = Cmat::Zero(4, 4);
    comp(0, 0) = -a3;
    comp(0, 1) = -a2;
    comp(0, 2) = -a1;
    comp(0, 3) = -a0;
    for (int i = 1; i < 4; ++i) comp(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Cmat> es(comp, false);
    std::array<Cplx, 4> roots;
    for (int i = 0; i < 4; ++i) roots[i] = es.eigenvalues()[i];
    return roots;
  };

  // all permutations of {0,1,2,3} for the global matching step
  static const int perms[24][4] = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2},
      {0, 3, 2, 1}, {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0},
      {1, 3, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3},
      {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0}, {3, 0, 1, 2}, {3, 0, 2, 1},
      {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};

  for (int attempt = 0; attempt < 9; ++attempt, steps *= 2) {
    std::array<Cplx, 4> y;
    std::array<double, 4> alpha;
    for (int k = 1; k <= 4; ++k) {
      y[k - 1] = std::polar(1.0, kPi * k / 2.0);
      alpha[k - 1] = k;
    }
    bool ok = true;
    for (int step = 1; step <= steps && ok; ++step) {
      double lam = static_cast<double>(step) / steps;
      auto roots = quartic_roots(lam);
      // minimum-total-distance assignment of roots to tracked points
      double best_cost = 1e300;
      int best_perm = -1;
      double best_move = 1e300;
      for (int pi = 0; pi < 24; ++pi) {
        double cost = 0.0, mv = 0.0;
        for (int k = 0; k < 4; ++k) {
          double d = std::abs(roots[perms[pi][k]] - y[k]);
          cost += d;
          mv = std::max(mv, d);
        }
        if (cost < best_cost) {
          best_cost = cost;
          best_perm = pi;
          best_move = mv;
        }
      }
      if (best_move > 0.3) {
        ok = false;  // a root jumped too far; refine the path
        break;
      }
      for (int k = 0; k < 4; ++k) {
        Cplx r = roots[perms[best_perm][k]];
        alpha[k] += 2.0 / kPi * std::arg(r / y[k]);
        y[k] = r;
      }
    }
    if (!ok) continue;
    bool ordered = true;
    for (int k = 0; k < 3; ++k)
      if (alpha[k] >= alpha[k + 1] - 1e-9) ordered = false;
    if (!ordered) {
      if (attempt >= 4)
        throw PathObstruction("exponent ordering degenerates on the path");
      continue;  // likely a label swap at a close passage; refine
    }
    return alpha;
  }
  throw PathObstruction("root tracking stayed ambiguous after refinement");
}

}  // namespace ttstar
