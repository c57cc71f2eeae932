#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "adelic/archimedean.hpp"
#include "adelic/errors.hpp"
#include "support/oracles.hpp"

using namespace adelic;

namespace {

double rel_err(Cplx got, Cplx want) {
    double scale = std::abs(want);
    return std::abs(got - want) / (scale > 0 ? scale : 1.0);
}

// random points in |Re| <= 3, |Im| <= 3 staying 0.1 clear of the integers
std::vector<Cplx> pole_free_points(int count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    std::vector<Cplx> pts;
    while ((int)pts.size() < count) {
        Cplx a(dist(rng), dist(rng));
        if (std::abs(a - Cplx(std::round(a.real()), 0.0)) < 0.1) continue;
        pts.push_back(a);
    }
    return pts;
}

}  // namespace

TEST_CASE("gamma at small anchors") {
    CHECK(rel_err(complex_gamma({1.0, 0.0}), {1.0, 0.0}) < 1e-14);
    CHECK(rel_err(complex_gamma({5.0, 0.0}), {24.0, 0.0}) < 1e-13);

    // independent oracle: Euler limit product with Richardson step
    Cplx sqrt_pi = oracles::euler_product_gamma({0.5, 0.0});
    CHECK(rel_err(sqrt_pi, {std::sqrt(kPi), 0.0}) < 1e-11);
    CHECK(rel_err(complex_gamma({0.5, 0.0}), {std::sqrt(kPi), 0.0}) < 1e-12);

    // reflection from Gamma(1/2): Gamma(-1/2) = -2 sqrt(pi)
    CHECK(rel_err(complex_gamma({-0.5, 0.0}), {-2.0 * std::sqrt(kPi), 0.0}) < 1e-12);
}

TEST_CASE("gamma matches the Stirling oracle on |z| <= 50") {
    double worst = 0.0;
    for (double re = -49.3; re <= 49.5; re += 4.9) {
        for (double im = -49.1; im <= 49.5; im += 4.9) {
            Cplx z(re, im);
            if (std::abs(z) > 50.0) continue;
            if (std::abs(z - Cplx(std::round(re), 0.0)) < 0.3) continue;
            worst = std::max(worst, rel_err(complex_gamma(z), oracles::stirling_gamma(z)));
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("gamma pole detection") {
    CHECK_THROWS_AS(complex_gamma({0.0, 0.0}), PoleError);
    CHECK_THROWS_AS(complex_gamma({-3.0, 0.0}), PoleError);
    CHECK_THROWS_AS(complex_gamma({-7.0 + 1e-13, 0.0}), PoleError);
    CHECK_NOTHROW(complex_gamma({-7.0 + 1e-9, 0.0}));
}

TEST_CASE("gaussian mellin factors") {
    CHECK(rel_err(mellin_gaussian_real({1.0, 0.0}), {1.0, 0.0}) < 1e-13);
    CHECK(rel_err(mellin_gaussian_real({2.0, 0.0}), {1.0 / kPi, 0.0}) < 1e-13);
    CHECK_THROWS_AS(mellin_gaussian_real({0.0, 0.0}), PoleError);
    CHECK_THROWS_AS(mellin_gaussian_real({-2.0, 0.0}), PoleError);

    CHECK(rel_err(mellin_gaussian_complex({1.0, 0.0}), {1.0, 0.0}) < 1e-13);
    CHECK(rel_err(mellin_gaussian_complex({2.0, 0.0}), {1.0 / kTwoPi, 0.0}) < 1e-13);
    CHECK_THROWS_AS(mellin_gaussian_complex({-1.0, 0.0}), PoleError);
}

TEST_CASE("local gamma of R anchors") {
    CHECK(rel_err(gamma_real({0.5, 0.0}, 0), {1.0, 0.0}) < 1e-14);
    CHECK(rel_err(gamma_real({0.5, 0.0}, 1), {0.0, -1.0}) < 1e-14);
    CHECK(rel_err(gamma_real({-1.0, 0.0}, 0), {-2.0 * kPi * kPi, 0.0}) < 1e-13);

    // denominator pole means a zero of the function, not an error
    CHECK(gamma_real({2.0, 0.0}, 1) == Cplx(0.0, 0.0));
    CHECK(gamma_real({1.0, 0.0}, 0) == Cplx(0.0, 0.0));
    // numerator pole is an error
    CHECK_THROWS_AS(gamma_real({-2.0, 0.0}, 0), PoleError);
    CHECK_THROWS_AS(gamma_real({-1.0, 0.0}, 1), PoleError);
    CHECK_THROWS_AS(gamma_real({0.5, 0.0}, 2), DomainError);
}

TEST_CASE("local gamma of C anchors and weight symmetry") {
    CHECK(rel_err(gamma_complex({0.5, 0.0}, 0), {1.0, 0.0}) < 1e-14);
    CHECK(rel_err(gamma_complex({0.5, 0.0}, 2), {-1.0, 0.0}) < 1e-13);
    // depends on the weight only through its absolute value, bit for bit
    for (Cplx a : pole_free_points(40, 7)) {
        for (int nu : {1, 2, 5, 17}) {
            CHECK(gamma_complex(a, nu) == gamma_complex(a, -nu));
        }
    }
    CHECK_THROWS_AS(gamma_complex({0.5, 0.0}, 65), DomainError);
}

TEST_CASE("reflection identities") {
    auto pts = pole_free_points(500, 0x5eed);
    for (int nu : {0, 1}) {
        Cplx want = nu ? Cplx(-1.0, 0.0) : Cplx(1.0, 0.0);
        for (Cplx a : pts) {
            Cplx prod = gamma_real(a, nu) * gamma_real(1.0 - a, nu);
            CHECK(rel_err(prod, want) < 1e-10);
        }
    }
    for (int nu : {0, 1, 2, -3}) {
        Cplx want = (nu % 2) ? Cplx(-1.0, 0.0) : Cplx(1.0, 0.0);
        for (Cplx a : pts) {
            Cplx prod = gamma_complex(a, nu) * gamma_complex(1.0 - a, nu);
            CHECK(rel_err(prod, want) < 1e-10);
        }
    }
}

TEST_CASE("ratio form against the gaussian mellin factors") {
    auto pts = pole_free_points(200, 42);
    for (Cplx a : pts) {
        for (int nu : {0, 1}) {
            Cplx lhs = gamma_real(a, nu);
            Cplx rhs = i_power(-nu) * mellin_gaussian_real(a + (double)nu) /
                       mellin_gaussian_real(1.0 - a + (double)nu);
            CHECK(rel_err(lhs, rhs) < 1e-10);
        }
        for (int nu : {0, 1, 2, -2, 3}) {
            Cplx lhs = gamma_complex(a, nu);
            double h = std::abs(nu) / 2.0;
            Cplx rhs = i_power(-std::abs(nu)) * mellin_gaussian_complex(a + h) /
                       mellin_gaussian_complex(1.0 - a + h);
            CHECK(rel_err(lhs, rhs) < 1e-10);
        }
    }
}

TEST_CASE("beta of R: factorization, swap, anchors") {
    Cplx a(0.5, 0.0), b(0.25, 0.0);
    Cplx expect = gamma_real(a, 0) * gamma_real(b, 0) * gamma_real(1.0 - a - b, 0);
    CHECK(rel_err(beta_real(a, 0, b, 0), expect) < 1e-14);
    CHECK(rel_err(beta_real(a, 0, b, 0), beta_real(b, 0, a, 0)) < 1e-14);

    Cplx m1(-1.0, 0.0);
    Cplx expect2 = gamma_real(m1, 0) * gamma_real(m1, 0) * gamma_real({3.0, 0.0}, 0);
    CHECK(rel_err(beta_real(m1, 0, m1, 0), expect2) < 1e-13);
}

TEST_CASE("beta permutation symmetry over the constraint manifold") {
    // the three points (a,nu), (b,mu), (1-a-b, -nu-mu) may be fed in any
    // order; all six orderings agree
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(-2.5, 2.5);
    int done = 0;
    while (done < 100) {
        Cplx a(dist(rng), dist(rng)), b(dist(rng), dist(rng));
        Cplx c = 1.0 - a - b;
        bool clear = true;
        for (Cplx z : {a, b, c})
            if (std::abs(z - Cplx(std::round(z.real()), 0.0)) < 0.15) clear = false;
        if (!clear) continue;
        ++done;
        for (auto [nu, mu] : {std::pair{0, 0}, {1, 0}, {1, 1}}) {
            int eta = (2 - (nu + mu) % 2) % 2;
            Cplx vals[6] = {
                beta_real(a, nu, b, mu), beta_real(b, mu, a, nu),
                beta_real(a, nu, c, eta), beta_real(c, eta, a, nu),
                beta_real(b, mu, c, eta), beta_real(c, eta, b, mu),
            };
            for (int i = 1; i < 6; ++i) CHECK(rel_err(vals[i], vals[0]) < 1e-10);
        }
        // integer weights on C; third weight is -nu-mu over Z
        for (auto [nu, mu] : {std::pair{0, 0}, {2, -1}, {1, 1}}) {
            int eta = -nu - mu;
            Cplx vals[6] = {
                beta_complex(a, nu, b, mu), beta_complex(b, mu, a, nu),
                beta_complex(a, nu, c, eta), beta_complex(c, eta, a, nu),
                beta_complex(b, mu, c, eta), beta_complex(c, eta, b, mu),
            };
            for (int i = 1; i < 6; ++i) CHECK(rel_err(vals[i], vals[0]) < 1e-10);
        }
    }
}

TEST_CASE("beta of C: third weight bookkeeping") {
    Cplx a(0.5, 0.0), b(0.25, 0.0);
    Cplx expect = gamma_complex(a, 1) * gamma_complex(b, -1) * gamma_complex(1.0 - a - b, 0);
    CHECK(rel_err(beta_complex(a, 1, b, -1), expect) < 1e-14);
    Cplx expect2 = gamma_complex(a, 0) * gamma_complex(b, 0) * gamma_complex(1.0 - a - b, 0);
    CHECK(rel_err(beta_complex(a, 0, b, 0), expect2) < 1e-14);
}
