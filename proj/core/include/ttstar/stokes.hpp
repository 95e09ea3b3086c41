#pragma once

#include <vector>

#include "ttstar/matrices.hpp"
#include "ttstar/poly.hpp"
#include "ttstar/types.hpp"

namespace ttstar {

// Stokes factor Q^{(infty)}_k, k = Frac on the 1/(n+1) lattice.
// Case 4a reproduces the standard table Q^{(infty)}_1 ... Q^{(infty)}_{2 3/4};
// the larger cases are generated from the base factors by the cyclic symmetry
// Q_{k + 2/(n+1)} = Pi Q_k Pi^{-1} and period two.
Cmat stokes_factor(const StokesParams& s, Frac k);

// Q^{(0)}_k = d Q^{(infty)}_k d^{-1}
Cmat stokes_factor_at_zero(const StokesParams& s, Frac k);

// Real gauge: Q~_k = d_inf^{-1} Q^{(infty)}_k d_inf.  Entries are real up to
// rounding; returned complex so callers can check that themselves.
Cmat stokes_factor_real(const StokesParams& s, Frac k);

// S~_1, the real Stokes matrix (product of the n+1 consecutive real factors
// starting at k = 1).  S~_2 = S^{-t}.
Rmat stokes_matrix(const StokesParams& s);

// Monodromy M = S S^{-t}.  Internally cross-checked against the closed form
// +-(Q~_1 Q~_{1+1/(n+1)} P)^{n+1} with the case's sign and P = PiHat or Pi.
Rmat monodromy(const StokesParams& s);

// Characteristic polynomial p of the monodromy generator, in the printed
// normalization: 4a mu^4 + s1 mu^3 - s2 mu^2 + s1 mu + 1 (palindromic);
// 5a -(mu^5 - s1 mu^4 - s2 mu^3 + s2 mu^2 + s1 mu - 1) and
// 6a mu^6 + s1 mu^5 - s2 mu^4 + s2 mu^2 - s1 mu - 1 (anti-palindromic).
// Computed from the closed form and verified against the matrix route.
PalindromicPoly char_poly(const StokesParams& s);
Poly char_poly_closed_form(const StokesParams& s);

// Connection matrices, case 4a only.  E_1 = (1/4) C Q^{(infty)}_{3/4},
// the rest by the shift relation
// d^{-1} E_k = Q_{k-1/4}^{-1} d^{-1} E_{k-1/4} Q_{k-1/4}.
Cmat connection_matrix(const StokesParams& s, Frac k);

// Jumps J_k = (E_{7/4-k} Q_{3/4} Q_1 ... Q_{k-1/4})^{-1} for
// k = 1, 1 1/4, ..., 2 1/2; all must equal 4C.
IdentityReport verify_circle_jumps(const StokesParams& s);

// Symmetry suites used by tests and the identity CLI.
IdentityReport verify_q_symmetries(const StokesParams& s);
IdentityReport verify_connection_symmetries(const StokesParams& s);

// reality reflection point: Q~_k = C~ conj(Q~_{c-k})^{-1} C~ with
// c = 3/2 (4a), 7/5 (5a), 5/3 (6a); returned on the 1/(n+1) lattice
Frac reality_reflection(CaseId cs);

}  // namespace ttstar
