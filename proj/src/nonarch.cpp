#include "adelic/nonarch.hpp"

#include <cmath>
#include <numeric>

#include "adelic/errors.hpp"
#include "adelic/numberfield.hpp"

namespace adelic {

ResidueModule ResidueModule::of(long long p, int f) {
    if (!is_prime(p)) throw DomainError("ResidueModule: p must be prime");
    if (f < 1) throw DomainError("ResidueModule: f >= 1");
    ResidueModule m;
    m.p = p;
    m.f = f;
    m.q = 1;
    for (int i = 0; i < f; ++i) m.q *= p;
    return m;
}

RootAngle RootAngle::normalized() const {
    long long d = den < 0 ? -den : den;
    long long n = ((num % d) + d) % d;
    long long g = std::gcd(n, d);
    if (g == 0) g = 1;
    return {n / g, d / g};
}

RootAngle RootAngle::plus(const RootAngle& other) const {
    long long g = std::gcd(den, other.den);
    long long l = den / g * other.den;
    return RootAngle{num * (l / den) + other.num * (l / other.den), l}.normalized();
}

RootAngle RootAngle::scaled(long long k) const {
    return RootAngle{num * k, den}.normalized();
}

RootAngle RootAngle::conj() const { return RootAngle{-num, den}.normalized(); }

Cplx RootAngle::value() const {
    long long d = den < 0 ? -den : den;
    long long n = ((num % d) + d) % d;
    if (n == 0) return {1.0, 0.0};
    if (2 * n == d) return {-1.0, 0.0};
    if (4 * n == d) return {0.0, 1.0};
    if (4 * n == 3 * d) return {0.0, -1.0};
    double t = kTwoPi * (double)n / (double)d;
    return {std::cos(t), std::sin(t)};
}

bool RootAngle::is_zero_angle() const { return num % den == 0; }

Cplx one_minus_exp(Cplx z) {
    Cplx zr(z.real(), std::remainder(z.imag(), kTwoPi));
    double m = std::abs(zr);
    if (m < 1e-4) {
        // 1 - e^z = -(z + z^2/2 + z^3/6 + z^4/24 + z^5/120)
        Cplx acc = zr / 120.0;
        acc = zr * (acc + 1.0 / 24.0);
        acc = zr * (acc + 1.0 / 6.0);
        acc = zr * (acc + 0.5);
        acc = zr * (acc + 1.0);
        return -acc;
    }
    return 1.0 - std::exp(zr);
}

namespace {

constexpr double kLatticeTol = 1e-14;

double reduced_abs(Cplx z) {
    return std::abs(Cplx(z.real(), std::remainder(z.imag(), kTwoPi)));
}

}  // namespace

Cplx gamma_q(Cplx a, const ResidueModule& q) {
    double lnq = std::log((double)q.q);
    Cplx zden = -a * lnq;  // 1 - q^{-a} = 1 - e^{zden}
    if (reduced_abs(zden) < kLatticeTol)
        throw PoleError("gamma_q: a on the pole lattice 2 pi i k / log q");
    Cplx znum = (a - 1.0) * lnq;
    return one_minus_exp(znum) / one_minus_exp(zden);
}

Cplx gamma_q_twisted(Cplx a, long long q, Cplx lambda) {
    double lnq = std::log((double)q);
    double phi = std::arg(lambda);
    Cplx zden = -a * lnq + Cplx(0.0, phi);
    if (reduced_abs(zden) < kLatticeTol)
        throw PoleError("gamma_q_twisted: pole of the local factor");
    Cplx znum = (a - 1.0) * lnq - Cplx(0.0, phi);
    return one_minus_exp(znum) / one_minus_exp(zden);
}

Cplx beta_q(Cplx a, Cplx b, const ResidueModule& q) {
    return gamma_q(a, q) * gamma_q(b, q) * gamma_q(1.0 - a - b, q);
}

RamifiedLocalCharacter::RamifiedLocalCharacter(long long p, int rank,
                                               std::vector<RootAngle> unit_values,
                                               int additive_rank)
    : p_(p), rank_(rank), additive_rank_(additive_rank) {
    if (!is_prime(p)) throw DomainError("RamifiedLocalCharacter: p must be prime");
    if (rank < 1) throw DomainError("RamifiedLocalCharacter: rank >= 1");
    modulus_ = 1;
    for (int i = 0; i < rank; ++i) modulus_ *= p;
    if ((long long)unit_values.size() != modulus_)
        throw DomainError("RamifiedLocalCharacter: value table size mismatch");
    values_ = std::move(unit_values);

    // multiplicativity spot check on a sampled set of units
    long long stride = std::max(1LL, modulus_ / 32);
    for (long long x = 1; x < modulus_; x += stride) {
        if (x % p_ == 0) continue;
        for (long long y : {2LL, modulus_ - 1}) {
            if (y % p_ == 0 || y >= modulus_) continue;
            RootAngle lhs = values_[(x * y) % modulus_].normalized();
            RootAngle rhs = values_[x].plus(values_[y]);
            if (lhs.num * rhs.den != rhs.num * lhs.den)
                throw DomainError("RamifiedLocalCharacter: not multiplicative");
        }
    }
    if (!values_[1 % modulus_].is_zero_angle())
        throw DomainError("RamifiedLocalCharacter: theta(1) != 1");

    // primitive <=> theta is nontrivial on 1 + p^{rank-1} Z / p^rank Z
    primitive_ = false;
    long long sub = modulus_ / p_;
    for (long long t = 0; t < p_; ++t) {
        long long u = (1 + t * sub) % modulus_;
        if (u % p_ == 0) continue;
        if (!values_[u].is_zero_angle()) {
            primitive_ = true;
            break;
        }
    }
}

RootAngle RamifiedLocalCharacter::angle_at(long long x) const {
    long long r = ((x % modulus_) + modulus_) % modulus_;
    if (r % p_ == 0) throw DomainError("angle_at: not a unit");
    return values_[r];
}

Cplx RamifiedLocalCharacter::at(long long x) const {
    long long r = ((x % modulus_) + modulus_) % modulus_;
    if (r % p_ == 0) return {0.0, 0.0};
    return values_[r].value();
}

Cplx RamifiedLocalCharacter::theta_minus_one() const {
    return at(modulus_ - 1);
}

Cplx kappa_local(const RamifiedLocalCharacter& theta) {
    if (theta.additive_rank() != 0)
        throw UnsupportedFieldError("kappa_local: additive rank != 0 unsupported");
    if (!theta.primitive())
        throw NotPrimitiveError("kappa_local: character not primitive");
    long long m = theta.modulus();
    // common denominator for theta(x) e^{2 pi i x/m}: angles combine in
    // integer arithmetic, one trig conversion per term
    long long D = m;
    for (long long x = 1; x < m; ++x) {
        if (x % theta.p() == 0) continue;
        long long d = theta.angle_at(x).den;
        if (D % d != 0) D = D / std::gcd(D, d) * d;
    }
    Cplx sum(0.0, 0.0);
    for (long long x = 1; x < m; ++x) {
        if (x % theta.p() == 0) continue;
        RootAngle a = theta.angle_at(x);
        long long num = a.num * (D / a.den) + x * (D / m);
        sum += RootAngle{num, D}.value();
    }
    return sum / std::sqrt((double)m);
}

RamifiedGammaFactor gamma_ramified_factor(const RamifiedLocalCharacter& theta) {
    RamifiedGammaFactor f;
    f.kappa = kappa_local(theta);
    f.base = theta.p();  // q = p: residue degree 1 at ramified places of Q
    f.power_rank = theta.additive_rank() + theta.rank();
    return f;
}

Cplx gamma_ramified(Cplx a, const RamifiedLocalCharacter& theta) {
    return gamma_ramified_factor(theta).value_at(a);
}

}  // namespace adelic
