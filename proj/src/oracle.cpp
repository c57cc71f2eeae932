#include "adelic/oracle.hpp"

#include <cmath>

#include "adelic/archimedean.hpp"
#include "adelic/errors.hpp"

namespace adelic {

namespace {

// B_{2j} for j = 1..8
constexpr double kBernoulli[8] = {
    1.0 / 6.0,    -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0,
};

Cplx cexpm1(Cplx w) {
    if (std::abs(w) > 0.5) return std::exp(w) - 1.0;
    Cplx term = w, sum = w;
    for (int k = 2; k <= 24; ++k) {
        term *= w / (double)k;
        sum += term;
        if (std::abs(term) < 1e-20 * std::abs(sum)) break;
    }
    return sum;
}

// Shared Euler-Maclaurin core. with_pole selects whether the 1/(s-1) part of
// the boundary term is included or subtracted off analytically.
Cplx hurwitz_em(Cplx s, double a, bool with_pole) {
    if (a <= 0.0 || a > 1.0) throw DomainError("hurwitz_zeta: need 0 < a <= 1");
    if (s.real() < -11.0)
        throw DomainError("hurwitz_zeta: Re s < -11 outside supported range");
    int N = 24 + (int)std::ceil(1.5 * std::abs(s.imag()));
    Cplx sum(0.0, 0.0);
    for (int n = 0; n < N; ++n) sum += std::exp(-s * std::log(n + a));
    double x = N + a;
    double lx = std::log(x);
    Cplx xms = std::exp(-s * lx);  // x^{-s}
    if (with_pole) {
        sum += xms * x / (s - 1.0);
    } else {
        // x^{1-s}/(s-1) - 1/(s-1) = -lx * expm1((1-s) lx) / ((1-s) lx)
        Cplx w = (1.0 - s) * lx;
        Cplx ratio = (std::abs(w) < 1e-12) ? Cplx(1.0, 0.0) : cexpm1(w) / w;
        sum += -lx * ratio;
    }
    sum += xms * 0.5;
    // tail: sum_j B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}
    Cplx poch = s;        // (s)_{1}
    Cplx xp = xms / x;    // x^{-s-1}
    double fact = 2.0;    // (2j)!
    for (int j = 1; j <= 8; ++j) {
        sum += kBernoulli[j - 1] / fact * poch * xp;  // B/(2j)! (s)_{2j-1} x^{1-s-2j}
        if (j == 8) break;
        poch *= (s + Cplx(2 * j - 1, 0.0)) * (s + Cplx(2 * j, 0.0));
        xp /= x * x;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return sum;
}

constexpr int kEtaTerms = 72;

// Accelerated alternating series for eta(s) = sum (-1)^k (k+1)^{-s}
// (Cohen-Rodriguez Villegas-Zagier scheme).
Cplx eta_series(Cplx s) {
    const int n = kEtaTerms;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0, c = -d;
    Cplx sum(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::exp(-s * std::log((double)(k + 1)));
        b *= ((double)(k + n) * (k - n)) / (((double)k + 0.5) * (k + 1));
    }
    return sum / d;
}

Cplx zeta_positive(Cplx s) {
    // Re s > 0 (and s != 1): eta route unless 1 - 2^{1-s} is nearly zero,
    // in which case fall back to the Euler-Maclaurin form.
    Cplx mult = -cexpm1((1.0 - s) * std::log(2.0));  // 1 - 2^{1-s}
    if (std::abs(mult) < 1e-3) return hurwitz_em(s, 1.0, true);
    return eta_series(s) / mult;
}

}  // namespace

Cplx hurwitz_zeta(Cplx s, double a) {
    if (std::abs(s - Cplx(1.0, 0.0)) < 1e-8)
        throw PoleError("hurwitz_zeta: pole at s = 1");
    return hurwitz_em(s, a, true);
}

Cplx hurwitz_zeta_minus_pole(Cplx s, double a) { return hurwitz_em(s, a, false); }

Cplx zeta(Cplx s) {
    if (std::abs(s - Cplx(1.0, 0.0)) < 1e-8) throw PoleError("zeta: pole at s = 1");
    if (s.real() > 0.0) return zeta_positive(s);
    if (std::abs(s) < 1e-6)  // expansion about 0: -1/2 - s log(2 pi)/2
        return Cplx(-0.5, 0.0) - s * (0.5 * std::log(kTwoPi));
    // reflection: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    return real_power(2.0, s) * real_power(kPi, s - 1.0) * std::sin(kPi * s / 2.0) *
           complex_gamma(1.0 - s) * zeta_positive(1.0 - s);
}

Cplx dirichlet_l(Cplx s, const DirichletCharacter& chi) {
    if (chi.modulus() == 1) return zeta(s);
    if (!chi.primitive())
        throw NotPrimitiveError("dirichlet_l: character must be primitive");
    long long m = chi.modulus();
    Cplx msum(0.0, 0.0);
    bool near_one = std::abs(s - Cplx(1.0, 0.0)) < 0.5;
    for (long long a = 1; a <= m; ++a) {
        if (gcd_ll(a, m) != 1) continue;
        Cplx h = near_one ? hurwitz_zeta_minus_pole(s, (double)a / m)
                          : hurwitz_zeta(s, (double)a / m);
        msum += chi.at(a) * h;
    }
    // the subtracted pole parts cancel: sum_a chi(a) = 0 for nontrivial chi
    return real_power((double)m, -s) * msum;
}

DirichletCharacter kronecker_character(long long D) {
    long long m = D < 0 ? -D : D;
    std::vector<RootAngle> vals(m, RootAngle{0, 1});
    for (long long a = 0; a < m; ++a) {
        if (gcd_ll(a, m) != 1) continue;
        int v = kronecker_symbol(D, a);
        vals[a] = (v == 1) ? RootAngle{0, 1} : RootAngle{1, 2};
    }
    DirichletCharacter chi(m, std::move(vals));
    if (!chi.primitive())
        throw DomainError("kronecker_character: D is not a fundamental discriminant");
    return chi;
}

Cplx dedekind_zeta(Cplx s, const NumberFieldDescriptor& field) {
    switch (field.kind) {
        case NumberFieldDescriptor::Kind::rationals:
            return zeta(s);
        case NumberFieldDescriptor::Kind::quadratic:
            return zeta(s) * dirichlet_l(s, kronecker_character(field.discriminant));
        case NumberFieldDescriptor::Kind::cyclotomic: {
            DirichletGroup group(field.param);
            Cplx prod(1.0, 0.0);
            for (const auto& chi : group.all_characters())
                prod *= dirichlet_l(s, chi.primitive_core());
            return prod;
        }
    }
    throw DomainError("dedekind_zeta: unknown field kind");
}

LFunctionHandle oracle_for(const NumberFieldDescriptor& field,
                           const IdeleClassCharacter& omega) {
    if (!(omega.field().kind == field.kind && omega.field().param == field.param))
        throw OracleUnavailable("oracle_for: character not defined over this field");
    LFunctionHandle h;
    h.field = field;
    if (omega.is_trivial()) {
        switch (field.kind) {
            case NumberFieldDescriptor::Kind::rationals:
                h.kind = LFunctionHandle::Kind::riemann_zeta;
                break;
            case NumberFieldDescriptor::Kind::quadratic:
                h.kind = LFunctionHandle::Kind::dedekind_quadratic;
                break;
            case NumberFieldDescriptor::Kind::cyclotomic:
                h.kind = LFunctionHandle::Kind::dedekind_cyclotomic;
                break;
        }
        return h;
    }
    if (!field.is_rationals())
        throw OracleUnavailable("oracle_for: ramified characters only over Q");
    h.kind = LFunctionHandle::Kind::dirichlet;
    h.chi = omega.dirichlet();
    return h;
}

Cplx evaluate(const LFunctionHandle& handle, Cplx s) {
    switch (handle.kind) {
        case LFunctionHandle::Kind::riemann_zeta:
            return zeta(s);
        case LFunctionHandle::Kind::dirichlet:
            return dirichlet_l(s, *handle.chi);
        case LFunctionHandle::Kind::dedekind_quadratic:
        case LFunctionHandle::Kind::dedekind_cyclotomic:
            return dedekind_zeta(s, handle.field);
    }
    throw OracleUnavailable("evaluate: bad handle");
}

Cplx l_value(Cplx s, const NumberFieldDescriptor& field,
             const IdeleClassCharacter& omega) {
    return evaluate(oracle_for(field, omega), s);
}

}  // namespace adelic
