#include "ttstar/poly.hpp"

#include <Eigen/Eigenvalues>

namespace ttstar {

Poly Poly::derivative() const {
  int d = degree();
  if (d <= 0) return Poly{{0.0}};
  Poly out;
  out.coeffs.resize(d);
  for (int i = 0; i < d; ++i) out.coeffs[i] = coeffs[i] * (d - i);
  return out;
}

double PalindromicPoly::symmetry_residual() const {
  int d = p.degree();
  double r = 0.0;
  for (int k = 0; k <= d; ++k)
    r = std::max(r, std::abs(p.coeffs[k] - sigma * p.coeffs[d - k]));
  return r;
}

namespace {

template <typename Scalar>
std::vector<std::complex<long double>> to_ld(const Eigen::MatrixBase<Scalar>& a);

// Faddeev-LeVerrier in complex long double; returns monic coefficients of
// det(mu I - A), leading-first.
std::vector<std::complex<long double>> char_poly_ld(
    const std::vector<std::complex<long double>>& a, int n) {
  using CL = std::complex<long double>;
  std::vector<CL> m(n * n, CL(0));      // running M_k
  std::vector<CL> prod(n * n, CL(0));
  std::vector<CL> c(n + 1, CL(0));
  c[0] = CL(1);
  for (int i = 0; i < n; ++i) m[i * n + i] = CL(1);
  for (int k = 1; k <= n; ++k) {
    // prod = A * m
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CL acc(0);
        for (int l = 0; l < n; ++l) acc += a[i * n + l] * m[l * n + j];
        prod[i * n + j] = acc;
      }
    CL tr(0);
    for (int i = 0; i < n; ++i) tr += prod[i * n + i];
    c[k] = -tr / static_cast<long double>(k);
    m = prod;
    for (int i = 0; i < n; ++i) m[i * n + i] += c[k];
  }
  return c;
}

}  // namespace

Poly char_poly_from_matrix(const Rmat& a) {
  int n = static_cast<int>(a.rows());
  std::vector<std::complex<long double>> al(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) al[i * n + j] = a(i, j);
  auto c = char_poly_ld(al, n);
  Poly out;
  out.coeffs.resize(n + 1);
  for (int k = 0; k <= n; ++k) out.coeffs[k] = static_cast<double>(c[k].real());
  return out;
}

Poly char_poly_from_matrix(const Cmat& a, double imag_tol) {
  int n = static_cast<int>(a.rows());
  std::vector<std::complex<long double>> al(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) al[i * n + j] = a(i, j);
  auto c = char_poly_ld(al, n);
  Poly out;
  out.coeffs.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (std::abs(c[k].imag()) > imag_tol)
      throw std::runtime_error("characteristic polynomial is not real");
    out.coeffs[k] = static_cast<double>(c[k].real());
  }
  return out;
}

std::vector<Cplx> poly_roots(const Poly& p) {
  int d = p.degree();
  while (d > 0 && p.coeffs[0] == 0.0)
    throw std::invalid_argument("zero leading coefficient");
  if (d < 1) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) comp(0, i) = -p.coeffs[i + 1] / p.coeffs[0];
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  std::vector<Cplx> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()[i];
  return roots;
}

double resultant(const Poly& a, const Poly& b) {
  int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) throw std::invalid_argument("empty polynomial");
  if (m == 0) return std::pow(a.coeffs[0], n);
  if (n == 0) return std::pow(b.coeffs[0], m);
  Eigen::MatrixXd syl = Eigen::MatrixXd::Zero(m + n, m + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) syl(i, i + j) = a.coeffs[j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) syl(n + i, i + j) = b.coeffs[j];
  return syl.determinant();
}

double discriminant(const Poly& p) {
  int d = p.degree();
  double sign = ((d * (d - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  return sign * resultant(p, p.derivative()) / p.coeffs[0];
}

const std::vector<IPoly>& cyclotomic_table() {
  static const std::vector<IPoly> table = {
      {1, -1},                    // Phi_1
      {1, 1},                     // Phi_2
      {1, 1, 1},                  // Phi_3
      {1, 0, 1},                  // Phi_4
      {1, 1, 1, 1, 1},            // Phi_5
      {1, -1, 1},                 // Phi_6
      {1, 1, 1, 1, 1, 1, 1},      // Phi_7
      {1, 0, 0, 0, 1},            // Phi_8
      {1, 0, 0, 1, 0, 0, 1},      // Phi_9
      {1, -1, 1, -1, 1},          // Phi_10
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},  // Phi_11
      {1, 0, -1, 0, 1},           // Phi_12
  };
  return table;
}

namespace {

// exact division of integer polynomials; returns false when not divisible
bool divide_exact(const IPoly& num, const IPoly& den, IPoly& quot) {
  if (den.empty() || den[0] != 1) return false;
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  if (dn < dd) return false;
  IPoly rem = num;
  quot.assign(dn - dd + 1, 0);
  for (int i = 0; i <= dn - dd; ++i) {
    std::int64_t q = rem[i];
    quot[i] = q;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= q * den[j];
  }
  for (int i = dn - dd + 1; i <= dn; ++i)
    if (rem[i] != 0) return false;
  return true;
}

}  // namespace

std::string CyclotomicFactorization::pretty() const {
  std::string out;
  for (std::size_t i = 0; i < multiplicity.size(); ++i) {
    if (multiplicity[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += "Phi" + std::to_string(i + 1);
    if (multiplicity[i] > 1) out += "^" + std::to_string(multiplicity[i]);
  }
  if (out.empty()) out = "1";
  return out;
}

CyclotomicFactorization factor_cyclotomic(const IPoly& p) {
  CyclotomicFactorization f;
  f.multiplicity.assign(cyclotomic_table().size(), 0);
  if (p.empty() || p[0] != 1)
    throw std::invalid_argument("expected a monic integer polynomial");
  IPoly cur = p;
  bool progress = true;
  while (progress && cur.size() > 1) {
    progress = false;
    for (std::size_t i = 0; i < cyclotomic_table().size(); ++i) {
      IPoly quot;
      while (divide_exact(cur, cyclotomic_table()[i], quot)) {
        cur = quot;
        ++f.multiplicity[i];
        progress = true;
      }
    }
  }
  f.complete = (cur.size() == 1 && cur[0] == 1);
  return f;
}

}  // namespace ttstar
