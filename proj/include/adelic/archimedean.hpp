#pragma once

#include "adelic/types.hpp"

namespace adelic {

// Euler gamma function on C via a Lanczos approximation with reflection for
// Re z < 0.5. Relative error <= 1e-12 for |z| <= 50. Throws PoleError within
// 1e-12 of a non-positive integer.
Cplx complex_gamma(Cplx z);

// Mellin transform of exp(-pi x^2) on R:  pi^{-a/2} Gamma(a/2).
// Poles at a = 0, -2, -4, ...
Cplx mellin_gaussian_real(Cplx a);

// Mellin transform of exp(-2 pi x xbar) on C:  (2 pi)^{1-a} Gamma(a).
// Poles at a = 0, -1, -2, ...
Cplx mellin_gaussian_complex(Cplx a);

// Local gamma function of R for the character sgn^nu:
//   i^{-nu} pi^{1/2-a} Gamma((a+nu)/2) / Gamma((1-a+nu)/2),   nu in {0,1}.
// Returns 0 when the denominator gamma has a pole; throws PoleError when the
// numerator gamma has one.
Cplx gamma_real(Cplx a, RealParity nu);

// Local gamma function of C for the character x^nu (x xbar)^{-nu/2}:
//   i^{-|nu|} (2 pi)^{1-2a} Gamma(a+|nu|/2) / Gamma(1-a+|nu|/2),   nu in Z.
// Depends on nu only through |nu|.
Cplx gamma_complex(Cplx a, ComplexWeight nu);

// Local beta function of R: product of the three local gammas at
// (a,nu), (b,mu), (1-a-b, -nu-mu mod 2).
Cplx beta_real(Cplx a, RealParity nu, Cplx b, RealParity mu);

// Local beta function of C; third point (1-a-b, -nu-mu) with integer weights.
Cplx beta_complex(Cplx a, ComplexWeight nu, Cplx b, ComplexWeight mu);

}  // namespace adelic
