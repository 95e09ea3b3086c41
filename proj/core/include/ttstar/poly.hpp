#pragma once

#include <cstdint>
#include <vector>

#include "ttstar/types.hpp"

namespace ttstar {

// Real polynomial, coefficients stored leading-first (coeffs[0] mu^degree).
struct Poly {
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Cplx eval(Cplx mu) const {
    Cplx r = 0.0;
    for (double c : coeffs) r = r * mu + c;
    return r;
  }
  double eval(double mu) const {
    double r = 0.0;
    for (double c : coeffs) r = r * mu + c;
    return r;
  }
  Poly derivative() const;
};

// Palindromic (+1) / anti-palindromic (-1) polynomial with its symmetry sign.
struct PalindromicPoly {
  Poly p;
  int sigma = +1;

  // max |coeffs[k] - sigma*coeffs[d-k]|
  double symmetry_residual() const;
};

// coefficients of det(mu I - A), leading-first; long double accumulation
Poly char_poly_from_matrix(const Rmat& a);
Poly char_poly_from_matrix(const Cmat& a, double imag_tol = 1e-9);

// all complex roots via the companion matrix
std::vector<Cplx> poly_roots(const Poly& p);

// Sylvester-matrix resultant of two real polynomials
double resultant(const Poly& a, const Poly& b);

// disc(p) = (-1)^{d(d-1)/2} Res(p, p') / lc(p)
double discriminant(const Poly& p);

// Integer polynomial support for the cyclotomic factorization,
// leading-first like Poly.
using IPoly = std::vector<std::int64_t>;

// cyclotomic polynomials Phi_1 .. Phi_12
const std::vector<IPoly>& cyclotomic_table();

// Factor p into cyclotomics by repeated exact trial division.
// Returns multiplicity of Phi_n at index n-1; remainder must reduce to 1
// for ok == true.
struct CyclotomicFactorization {
  std::vector<int> multiplicity;  // size 12
  bool complete = false;
  std::string pretty() const;
};
CyclotomicFactorization factor_cyclotomic(const IPoly& p);

}  // namespace ttstar
