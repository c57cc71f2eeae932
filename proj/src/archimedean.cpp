#include "adelic/archimedean.hpp"

#include <cmath>
#include <cstdlib>

#include "adelic/errors.hpp"

namespace adelic {

namespace {

constexpr double kPoleTol = 1e-12;

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// Distance from z to the nearest non-positive integer.
double dist_to_nonpositive_int(Cplx z) {
    double n = std::round(z.real());
    if (n > 0.0) n = 0.0;
    return std::abs(z - Cplx(n, 0.0));
}

Cplx lanczos_gamma_half_plane(Cplx z) {
    // valid for Re z >= 0.5
    Cplx x = kLanczosCoef[0];
    for (int k = 1; k < 9; ++k) x += kLanczosCoef[k] / (z + Cplx(k - 1, 0.0));
    Cplx t = z + Cplx(kLanczosG - 0.5, 0.0);
    return std::sqrt(kTwoPi) * std::exp((z - 0.5) * std::log(t) - t) * x;
}

}  // namespace

Cplx complex_gamma(Cplx z) {
    if (dist_to_nonpositive_int(z) < kPoleTol)
        throw PoleError("complex_gamma: argument at a non-positive integer");
    if (z.real() >= 0.5) return lanczos_gamma_half_plane(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    Cplx s = std::sin(kPi * z);
    return kPi / (s * lanczos_gamma_half_plane(1.0 - z));
}

Cplx mellin_gaussian_real(Cplx a) {
    if (dist_to_nonpositive_int(a / 2.0) < kPoleTol)
        throw PoleError("mellin_gaussian_real: pole at a in {0,-2,-4,...}");
    return real_power(kPi, -a / 2.0) * complex_gamma(a / 2.0);
}

Cplx mellin_gaussian_complex(Cplx a) {
    if (dist_to_nonpositive_int(a) < kPoleTol)
        throw PoleError("mellin_gaussian_complex: pole at a in {0,-1,-2,...}");
    return real_power(kTwoPi, 1.0 - a) * complex_gamma(a);
}

Cplx gamma_real(Cplx a, RealParity nu) {
    if (nu != 0 && nu != 1) throw DomainError("gamma_real: parity must be 0 or 1");
    Cplx num_arg = (a + Cplx(nu, 0.0)) / 2.0;
    Cplx den_arg = (1.0 - a + Cplx(nu, 0.0)) / 2.0;
    if (dist_to_nonpositive_int(num_arg) < kPoleTol)
        throw PoleError("gamma_real: numerator gamma pole");
    if (dist_to_nonpositive_int(den_arg) < kPoleTol)
        return Cplx(0.0, 0.0);  // zero of the function, not a pole
    return i_power(-nu) * real_power(kPi, 0.5 - a) * complex_gamma(num_arg) /
           complex_gamma(den_arg);
}

Cplx gamma_complex(Cplx a, ComplexWeight nu) {
    if (std::abs(nu) > kMaxComplexWeight)
        throw DomainError("gamma_complex: |weight| exceeds limit");
    int an = std::abs(nu);  // depends on nu only through |nu|
    Cplx num_arg = a + Cplx(an / 2.0, 0.0);
    Cplx den_arg = 1.0 - a + Cplx(an / 2.0, 0.0);
    if (dist_to_nonpositive_int(num_arg) < kPoleTol)
        throw PoleError("gamma_complex: numerator gamma pole");
    if (dist_to_nonpositive_int(den_arg) < kPoleTol) return Cplx(0.0, 0.0);
    return i_power(-an) * real_power(kTwoPi, 1.0 - 2.0 * a) *
           complex_gamma(num_arg) / complex_gamma(den_arg);
}

Cplx beta_real(Cplx a, RealParity nu, Cplx b, RealParity mu) {
    RealParity eta = ((nu + mu) % 2 + 2) % 2;  // -nu-mu in F_2
    return gamma_real(a, nu) * gamma_real(b, mu) * gamma_real(1.0 - a - b, eta);
}

Cplx beta_complex(Cplx a, ComplexWeight nu, Cplx b, ComplexWeight mu) {
    return gamma_complex(a, nu) * gamma_complex(b, mu) *
           gamma_complex(1.0 - a - b, -nu - mu);
}

}  // namespace adelic
