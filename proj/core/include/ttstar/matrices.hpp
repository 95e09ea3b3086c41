#pragma once

#include <string>
#include <vector>

#include "ttstar/types.hpp"

namespace ttstar {

// Constant matrices of the monodromy algebra.  All entries are roots of
// unity times integers, evaluated in complex double.
enum class MatrixName {
  Pi,       // cyclic shift, ones on the superdiagonal and lower-left corner
  Omega,    // DFT-style Vandermonde, Omega_{jk} = omega^{jk} (0-based)
  D,        // d_{n+1} = diag(1, omega, ..., omega^n)
  Delta,    // anti-diagonal
  C,        // Omega Omega-bar^{-1}: 1 at (1,1), anti-diagonal on the rest
  D0,       // d_{(0)}: 4a diag(omega^{j/2}); 5a d_5^3; 6a d_6
  Dinf,     // d_{(infty)} = d_{(0)}^{-1}
  PiTilde,  // d_inf^{-1} Pi d_inf
  PiHat,    // cyclic shift with -1 in the corner (4a normalization of PiTilde)
  CTilde,   // d_{(0)} C d_{(0)}
};

MatrixName matrix_name_parse(std::string_view name);

Cmat const_matrix(MatrixName name, CaseId cs);

// One residual per checked identity; residual is the max entry error.
struct IdentityCheck {
  std::string name;
  double residual;
  bool pass() const { return residual < 1e-13; }
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  double max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass()) return false;
    return true;
  }
};

// Identities (F1)-(F7) and their structural analogues for the larger cases,
// with n+1 replacing 4 in the scalar factors.
IdentityReport verify_identities(CaseId cs);

double max_abs(const Cmat& m);
inline double max_diff(const Cmat& a, const Cmat& b) { return max_abs(a - b); }

}  // namespace ttstar
