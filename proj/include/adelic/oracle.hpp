#pragma once

#include "adelic/characters.hpp"
#include "adelic/numberfield.hpp"
#include "adelic/types.hpp"

namespace adelic {

// Hurwitz zeta sum_{n>=0} (n+a)^{-s} for 0 < a <= 1, continued by the
// Euler-Maclaurin expansion (8 Bernoulli terms); supported for Re s > -11.
// Throws PoleError at s = 1.
Cplx hurwitz_zeta(Cplx s, double a);

// hurwitz_zeta(s, a) - 1/(s-1): the pole-free part, stable uniformly near
// (and at) s = 1.
Cplx hurwitz_zeta_minus_pole(Cplx s, double a);

// Riemann zeta: accelerated alternating (eta) series for Re s > 0,
// reflection through the functional equation for Re s <= 0.
// Absolute error <= 1e-10 for |Im s| <= 10. Throws PoleError at s = 1.
Cplx zeta(Cplx s);

// Dirichlet L(s, chi) for primitive chi. Principal chi requires modulus 1
// (Riemann zeta, with its pole at s = 1); nontrivial primitive characters
// give entire functions, valid at s = 1 as well.
Cplx dirichlet_l(Cplx s, const DirichletCharacter& chi);

// Dedekind zeta of Q, a quadratic field (zeta * L(., kronecker character)),
// or a cyclotomic field (product over the character group mod m of the
// L-function of each primitive inducing character).
Cplx dedekind_zeta(Cplx s, const NumberFieldDescriptor& field);

// The Kronecker character of a fundamental discriminant D as a primitive
// Dirichlet character mod |D|.
DirichletCharacter kronecker_character(long long D);

// Dispatch handle for the L-function attached to (field, omega).
struct LFunctionHandle {
    enum class Kind { riemann_zeta, dirichlet, dedekind_quadratic, dedekind_cyclotomic };
    Kind kind = Kind::riemann_zeta;
    NumberFieldDescriptor field;           // for dedekind kinds
    const DirichletCharacter* chi = nullptr;  // for dirichlet kind (borrowed)
};

// Throws OracleUnavailable when the pair has no supported closed form
// (e.g. the character does not live over the given field).
LFunctionHandle oracle_for(const NumberFieldDescriptor& field,
                           const IdeleClassCharacter& omega);
Cplx evaluate(const LFunctionHandle& handle, Cplx s);

// Convenience: evaluate the oracle L(s; omega) over `field` directly.
Cplx l_value(Cplx s, const NumberFieldDescriptor& field,
             const IdeleClassCharacter& omega);

}  // namespace adelic
