#pragma once

#include <vector>

#include "adelic/types.hpp"

namespace adelic {

// Residue field size of a finite place: q = p^f.
struct ResidueModule {
    long long p = 2;
    int f = 1;
    long long q = 2;

    static ResidueModule of(long long p, int f = 1);
};

// Exact root of unity exp(2 pi i num/den). Angles are combined with integer
// arithmetic and converted to a complex number only at the point of use, so
// Gauss sums do not accumulate drift.
struct RootAngle {
    long long num = 0;
    long long den = 1;

    RootAngle normalized() const;
    RootAngle plus(const RootAngle& other) const;
    RootAngle scaled(long long k) const;  // angle * k
    RootAngle conj() const;
    Cplx value() const;
    bool is_zero_angle() const;  // equals 1 as a root of unity
};

// 1 - exp(z) with the imaginary part of z reduced mod 2 pi first; accurate
// near the zero lattice. Used for the reduced gamma and its twisted form.
Cplx one_minus_exp(Cplx z);

// Reduced gamma of a local p-field with module q:
//   (1 - q^{a-1}) / (1 - q^{-a}).
// Poles on the lattice a = 2 pi i k / log q (detection is modular in Im a).
Cplx gamma_q(Cplx a, const ResidueModule& q);

// Twisted form used at unramified places: lambda = omega_v(pi_v) on the unit
// circle, value (1 - conj(lambda) q^{a-1}) / (1 - lambda q^{-a}).
Cplx gamma_q_twisted(Cplx a, long long q, Cplx lambda);

// Local beta: Gamma_q(a) Gamma_q(b) Gamma_q(1-a-b).
Cplx beta_q(Cplx a, Cplx b, const ResidueModule& q);

// Multiplicative character of rank rho on the units of Z_p, values stored as
// exact angles on residues mod p^rho. theta(pi) = 1 is implicit (the table
// covers units only). r is the additive-character rank, 0 over Q.
class RamifiedLocalCharacter {
  public:
    RamifiedLocalCharacter(long long p, int rank, std::vector<RootAngle> unit_values,
                           int additive_rank = 0);

    long long p() const { return p_; }
    int rank() const { return rank_; }
    int additive_rank() const { return additive_rank_; }
    long long modulus() const { return modulus_; }  // p^rank
    bool primitive() const { return primitive_; }

    // theta(x) for x coprime to p (x taken mod p^rank); 0 otherwise.
    Cplx at(long long x) const;
    RootAngle angle_at(long long x) const;  // requires gcd(x, p) = 1
    Cplx theta_minus_one() const;

  private:
    long long p_;
    int rank_;
    int additive_rank_;
    long long modulus_;
    std::vector<RootAngle> values_;  // indexed by residue, units only
    bool primitive_;
};

// Normalized local Gauss sum
//   kappa(theta) = p^{-rho/2} sum_{x mod p^rho, gcd(x,p)=1} theta(x) e^{2 pi i x / p^rho}.
// |kappa| = 1 for primitive theta. Throws NotPrimitiveError otherwise and
// UnsupportedFieldError when the additive rank is nonzero.
Cplx kappa_local(const RamifiedLocalCharacter& theta);

// Ramified local gamma factor kappa(theta) q^{(a-1/2)(r+rho)} with the power
// base and exponent exposed so global assembly can reuse them directly.
struct RamifiedGammaFactor {
    Cplx kappa;
    long long base;  // q = p for K = Q
    int power_rank;  // r + rho

    Cplx value_at(Cplx a) const {
        return kappa * real_power((double)base, (a - 0.5) * (double)power_rank);
    }
};

RamifiedGammaFactor gamma_ramified_factor(const RamifiedLocalCharacter& theta);
Cplx gamma_ramified(Cplx a, const RamifiedLocalCharacter& theta);

}  // namespace adelic
