#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace adelic {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Character data of the real place: nu in F_2 = {0, 1}.
using RealParity = int;

// Character data of the complex place: nu in Z, |nu| <= kMaxComplexWeight.
using ComplexWeight = int;
inline constexpr int kMaxComplexWeight = 64;

// i^k for integer k (exact, no trigonometry).
inline Cplx i_power(long long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// base^s = exp(s log base) for base > 0: single-valued, no branch ambiguity.
inline Cplx real_power(double base, Cplx s) {
    return std::exp(s * std::log(base));
}

// Fixed-topology pairwise tree reduction. The summation order depends only
// on the length of the input, so results are reproducible across runs and
// across any parallel scheme used to fill the terms.
inline Cplx tree_sum(std::vector<Cplx> terms) {
    if (terms.empty()) return Cplx(0.0, 0.0);
    while (terms.size() > 1) {
        std::size_t half = terms.size() / 2;
        std::vector<Cplx> next;
        next.reserve(half + 1);
        for (std::size_t i = 0; i + 1 < terms.size(); i += 2)
            next.push_back(terms[i] + terms[i + 1]);
        if (terms.size() % 2 == 1) next.push_back(terms.back());
        terms.swap(next);
    }
    return terms[0];
}

}  // namespace adelic
