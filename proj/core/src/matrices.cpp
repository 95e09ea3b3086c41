#include "ttstar/matrices.hpp"

namespace ttstar {

double max_abs(const Cmat& m) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      r = std::max(r, std::abs(m(i, j)));
  return r;
}

MatrixName matrix_name_parse(std::string_view name) {
  if (name == "Pi") return MatrixName::Pi;
  if (name == "Omega") return MatrixName::Omega;
  if (name == "D") return MatrixName::D;
  if (name == "Delta") return MatrixName::Delta;
  if (name == "C") return MatrixName::C;
  if (name == "D0") return MatrixName::D0;
  if (name == "Dinf") return MatrixName::Dinf;
  if (name == "PiTilde") return MatrixName::PiTilde;
  if (name == "PiHat") return MatrixName::PiHat;
  if (name == "CTilde") return MatrixName::CTilde;
  throw std::invalid_argument("unknown matrix name: " + std::string(name));
}

namespace {

Cmat cyclic_shift(int n) {
  Cmat m = Cmat::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
  m(n - 1, 0) = 1.0;
  return m;
}

Cmat vandermonde(CaseId cs) {
  int n = cs.size();
  Cmat m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = cs.omega_pow_half(2 * j * k);
  return m;
}

Cmat diag_root(CaseId cs) {
  int n = cs.size();
  Cmat m = Cmat::Zero(n, n);
  for (int j = 0; j < n; ++j) m(j, j) = cs.omega_pow_half(2 * j);
  return m;
}

Cmat anti_diag(int n) {
  Cmat m = Cmat::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, n - 1 - i) = 1.0;
  return m;
}

// 1 at (1,1), anti-diagonal through the remaining block: C_{ij} = 1 iff
// i + j == 2 (mod n) in 1-based indices
Cmat c_matrix(int n) {
  Cmat m = Cmat::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, (n - i) % n) = 1.0;
  return m;
}

Cmat d_zero(CaseId cs) {
  int n = cs.size();
  Cmat m = Cmat::Zero(n, n);
  switch (cs.tag()) {
    case CaseId::k4a:
      for (int j = 0; j < n; ++j) m(j, j) = cs.omega_pow_half(j);
      break;
    case CaseId::k5a:  // d_5^3
      for (int j = 0; j < n; ++j) m(j, j) = cs.omega_pow_half(6 * j);
      break;
    case CaseId::k6a:  // d_6
      for (int j = 0; j < n; ++j) m(j, j) = cs.omega_pow_half(2 * j);
      break;
  }
  return m;
}

Cmat pi_hat(int n) {
  Cmat m = cyclic_shift(n);
  m(n - 1, 0) = -1.0;
  return m;
}

}  // namespace

Cmat const_matrix(MatrixName name, CaseId cs) {
  int n = cs.size();
  switch (name) {
    case MatrixName::Pi: return cyclic_shift(n);
    case MatrixName::Omega: return vandermonde(cs);
    case MatrixName::D: return diag_root(cs);
    case MatrixName::Delta: return anti_diag(n);
    case MatrixName::C: return c_matrix(n);
    case MatrixName::D0: return d_zero(cs);
    case MatrixName::Dinf: return d_zero(cs).inverse();
    case MatrixName::PiTilde: {
      Cmat dinf = d_zero(cs).inverse();
      return dinf.inverse() * cyclic_shift(n) * dinf;
    }
    case MatrixName::PiHat:
      if (cs.tag() != CaseId::k4a)
        throw std::invalid_argument("PiHat is the 4a normalization only");
      return pi_hat(n);
    case MatrixName::CTilde: {
      Cmat d0 = d_zero(cs);
      return d0 * c_matrix(n) * d0;
    }
  }
  throw std::invalid_argument("unknown matrix name");
}

IdentityReport verify_identities(CaseId cs) {
  int n = cs.size();
  double nn = static_cast<double>(n);
  Cplx omega = cs.omega();
  Cmat Pi = const_matrix(MatrixName::Pi, cs);
  Cmat Om = const_matrix(MatrixName::Omega, cs);
  Cmat D = const_matrix(MatrixName::D, cs);
  Cmat Dl = const_matrix(MatrixName::Delta, cs);
  Cmat C = const_matrix(MatrixName::C, cs);
  Cmat I = Cmat::Identity(n, n);

  IdentityReport rep;
  auto add = [&rep](std::string name, double res) {
    rep.checks.push_back({std::move(name), res});
  };

  add("F1: conj(Omega) Omega = (n+1) I", max_diff(Om.conjugate() * Om, nn * I));
  add("F2: Pi Omega = Omega D", max_diff(Pi * Om, Om * D));
  add("F3: Pi C = Delta", max_diff(Pi * C, Dl));
  add("F3: C Pi^{-1} = Delta", max_diff(C * Pi.inverse(), Dl));
  add("F4: D C D = C", max_diff(D * C * D, C));
  add("F5: Omega D Omega = (n+1) Delta", max_diff(Om * D * Om, nn * Dl));
  add("F5: Omega Delta Omega = (n+1) D^{-1}",
      max_diff(Om * Dl * Om, nn * D.inverse()));
  add("F6: C = Omega conj(Omega)^{-1}",
      max_diff(C, Om * Om.conjugate().inverse()));
  add("F6: C = Omega^2 / (n+1)", max_diff(C, Om * Om / nn));
  add("F6: C = (n+1) Omega^{-2}", max_diff(C, nn * (Om * Om).inverse()));
  add("F7: Pi D = omega D Pi", max_diff(Pi * D, omega * D * Pi));
  add("F7: Pi^2 D = omega^2 D Pi^2",
      max_diff(Pi * Pi * D, omega * omega * D * Pi * Pi));
  return rep;
}

}  // namespace ttstar
