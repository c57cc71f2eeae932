#include "adelic/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "adelic/archimedean.hpp"
#include "adelic/errors.hpp"
#include "adelic/nonarch.hpp"
#include "adelic/oracle.hpp"

namespace adelic {

namespace {

int threads_from_env() {
    const char* v = std::getenv("ADELIC_THREADS");
    if (!v) return 1;
    int n = std::atoi(v);
    if (n < 1) return 1;
    return std::min(n, 64);
}

// Fill out[i] = f(i) for i in [0, n). Chunking by index only; the output is
// identical for every thread count.
template <typename F>
void parallel_fill(std::size_t n, F&& f) {
    int nt = threads_from_env();
    if (nt <= 1 || n < 2048) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&f, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

// 1 - lambda * q^{-s}, through the same reduced-exponent path as the
// twisted gamma so products against it cancel cleanly.
Cplx one_minus_lambda_qpow(Cplx s, long long q, Cplx lambda) {
    return one_minus_exp(-s * std::log((double)q) + Cplx(0.0, std::arg(lambda)));
}

long long largest_special_prime(const NumberFieldDescriptor& field,
                                const IdeleClassCharacter& omega) {
    long long worst = 1;
    long long d = field.abs_discriminant();
    for (long long p = 2; p <= d; ++p) {
        if (d % p == 0) {
            worst = std::max(worst, p);
            while (d % p == 0) d /= p;
        }
    }
    for (const auto& r : omega.ramified()) worst = std::max(worst, r.p);
    return worst;
}

void check_schedule(const TruncationSchedule& schedule,
                    const NumberFieldDescriptor& field,
                    const IdeleClassCharacter& omega) {
    schedule.validate();
    long long worst = largest_special_prime(field, omega);
    if (schedule.cutoffs.front() <= worst)
        throw DomainError("schedule: first cutoff must exceed every ramified prime");
}

// Unramified-for-the-character places below the largest cutoff, plus the
// index of the first place at or beyond each cutoff.
struct PlaceWindow {
    std::vector<Place> places;
    std::vector<std::size_t> cutoff_index;
};

PlaceWindow collect_places(const NumberFieldDescriptor& field,
                           const IdeleClassCharacter& omega,
                           const std::vector<long long>& cutoffs) {
    PlaceWindow w;
    auto all = enumerate_finite_places(field, cutoffs.back());
    w.places.reserve(all.size());
    for (const auto& pl : all)
        if (!omega.ramified_at(pl.p)) w.places.push_back(pl);
    w.cutoff_index.reserve(cutoffs.size());
    std::size_t i = 0;
    for (long long V : cutoffs) {
        while (i < w.places.size() && w.places[i].p < V) ++i;
        w.cutoff_index.push_back(i);
    }
    return w;
}

// log of Gamma_{q_v}(a + i a_v) * (1 - lambda(v) q_v^{-a}) per place: the
// local gamma paired with its L_V factor. Each pair is O(q^{Re a - 1}), so
// the accumulated sum stays O(1) for any cutoff.
std::vector<Cplx> gamma_chain_terms(const PlaceWindow& w,
                                    const IdeleClassCharacter& omega, Cplx a) {
    std::vector<Cplx> terms(w.places.size());
    parallel_fill(terms.size(), [&](std::size_t i) {
        const Place& v = w.places[i];
        Cplx lam = omega.lambda(v);
        Cplx g = gamma_q_twisted(a, v.q, lam);
        Cplx f = one_minus_lambda_qpow(a, v.q, lam);
        terms[i] = std::log(g * f);
    });
    return terms;
}

// log of (1 - conj(lambda(v)) q^{a-1}) per place: the finite part of
// L_V(1-a; conj omega).
std::vector<Cplx> reflected_lfactor_terms(const PlaceWindow& w,
                                          const IdeleClassCharacter& omega, Cplx a) {
    std::vector<Cplx> terms(w.places.size());
    parallel_fill(terms.size(), [&](std::size_t i) {
        const Place& v = w.places[i];
        terms[i] = std::log(one_minus_lambda_qpow(1.0 - a, v.q, std::conj(omega.lambda(v))));
    });
    return terms;
}

Cplx prefix_tree_sum(const std::vector<Cplx>& terms, std::size_t n) {
    return tree_sum(std::vector<Cplx>(terms.begin(), terms.begin() + n));
}

Cplx log_oracle_l(Cplx s, const NumberFieldDescriptor& field,
                  const IdeleClassCharacter& omega) {
    return std::log(l_value(s, field, omega));
}

}  // namespace

// ---------------------------------------------------------------------------
// TruncationSchedule

TruncationSchedule TruncationSchedule::default_schedule() { return powers_of_two(8, 17); }

TruncationSchedule TruncationSchedule::powers_of_two(int lo, int hi) {
    if (lo < 1 || hi < lo) throw DomainError("powers_of_two: bad exponent range");
    TruncationSchedule s;
    for (int k = lo; k <= hi; ++k) s.cutoffs.push_back(1LL << k);
    return s;
}

TruncationSchedule TruncationSchedule::parse(const std::string& spec) {
    TruncationSchedule s;
    auto dots = spec.find("..");
    try {
        if (spec.rfind("2^", 0) == 0 && dots != std::string::npos) {
            int lo = std::stoi(spec.substr(2, dots - 2));
            std::string rest = spec.substr(dots + 2);
            if (rest.rfind("2^", 0) != 0) throw ParseError("schedule: expected 2^a..2^b");
            int hi = std::stoi(rest.substr(2));
            return powers_of_two(lo, hi);
        }
        std::istringstream is(spec);
        std::string part;
        while (std::getline(is, part, ',')) s.cutoffs.push_back(std::stoll(part));
    } catch (const AdelicError&) {
        throw;
    } catch (...) {
        throw ParseError("cannot parse schedule: " + spec);
    }
    s.validate();
    return s;
}

void TruncationSchedule::validate() const {
    if (cutoffs.empty()) throw DomainError("schedule: empty");
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        if (cutoffs[i] < 2) throw DomainError("schedule: cutoffs must be >= 2");
        if (i && cutoffs[i] <= cutoffs[i - 1])
            throw DomainError("schedule: cutoffs must be strictly increasing");
    }
}

std::vector<Cplx> make_evaluation_grid(int count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re_dist(-3.0, -0.3), im_dist(-2.0, 2.0);
    std::vector<Cplx> grid;
    grid.reserve(count);
    while ((int)grid.size() < count) {
        Cplx a(re_dist(rng), im_dist(rng));
        double d = std::abs(a - Cplx(std::round(a.real()), 0.0));
        if (d < 0.1) continue;  // keep clear of the integer pole lattice
        grid.push_back(a);
    }
    return grid;
}

// ---------------------------------------------------------------------------
// Truncated L-functions

Cplx l_truncated_tail(Cplx a, const NumberFieldDescriptor& field,
                      const IdeleClassCharacter& omega, long long V,
                      long long tail_bound) {
    if (a.real() <= 1.0)
        throw DomainError("l_truncated_tail: requires Re a > 1");
    if (V >= tail_bound) return {1.0, 0.0};  // empty product
    // streamed in ascending (p, q) order; factors are 1 + O(q^{-Re a})
    Cplx acc(0.0, 0.0);
    for (long long p : primes_below(tail_bound)) {
        if (p < V || omega.ramified_at(p)) continue;
        for (const auto& v : places_above(field, p))
            acc -= std::log(one_minus_lambda_qpow(a, v.q, omega.lambda(v)));
    }
    return std::exp(acc);
}

Cplx log_l_truncated_via_oracle(Cplx a, const NumberFieldDescriptor& field,
                                const IdeleClassCharacter& omega, long long V) {
    Cplx acc = log_oracle_l(a, field, omega);
    auto places = enumerate_finite_places(field, V);
    std::vector<Cplx> terms;
    terms.reserve(places.size());
    for (const auto& v : places) {
        if (omega.ramified_at(v.p)) continue;
        terms.push_back(std::log(one_minus_lambda_qpow(a, v.q, omega.lambda(v))));
    }
    return acc + tree_sum(std::move(terms));
}

Cplx l_truncated_via_oracle(Cplx a, const NumberFieldDescriptor& field,
                            const IdeleClassCharacter& omega, long long V) {
    return std::exp(log_l_truncated_via_oracle(a, field, omega, V));
}

// ---------------------------------------------------------------------------
// Gamma identity

Cplx archimedean_gamma_product(const IdeleClassCharacter& omega, Cplx a) {
    Cplx prod(1.0, 0.0);
    for (RealParity nu : omega.real_parities()) prod *= gamma_real(a, nu);
    for (ComplexWeight nu : omega.complex_weights()) prod *= gamma_complex(a, nu);
    return prod;
}

Cplx identity_phase(const IdeleClassCharacter& omega) {
    Cplx phase(1.0, 0.0);
    for (RealParity nu : omega.real_parities())
        if (nu % 2) phase = -phase;
    for (ComplexWeight nu : omega.complex_weights())
        if (nu % 2) phase = -phase;
    for (const auto& r : omega.ramified())
        phase *= r.theta.theta_minus_one() * std::conj(kappa_local(r.theta));
    return phase * omega_C(omega);
}

Cplx gamma_identity_rhs(const NumberFieldDescriptor& field,
                        const IdeleClassCharacter& omega, Cplx a) {
    double dn = (double)field.abs_discriminant() * (double)omega.conductor_norm();
    return identity_phase(omega) * real_power(dn, 0.5 - a);
}

RegProductTrace reg_gamma_product(const NumberFieldDescriptor& field,
                                  const IdeleClassCharacter& omega, Cplx a,
                                  const TruncationSchedule& schedule) {
    if (a.real() >= 0.0)
        throw DomainError("reg_gamma_product: requires Re a < 0");
    check_schedule(schedule, field, omega);
    PlaceWindow w = collect_places(field, omega, schedule.cutoffs);
    std::vector<Cplx> terms = gamma_chain_terms(w, omega, a);
    Cplx log_l = log_oracle_l(a, field, omega);
    RegProductTrace trace;
    for (std::size_t k = 0; k < schedule.cutoffs.size(); ++k) {
        Cplx v = std::exp(prefix_tree_sum(terms, w.cutoff_index[k]) + log_l);
        trace.per_cutoff.emplace_back(schedule.cutoffs[k], v);
    }
    trace.final_value = trace.per_cutoff.back().second;
    return trace;
}

VerificationReport verify_gamma_identity(const NumberFieldDescriptor& field,
                                         const IdeleClassCharacter& omega, Cplx a,
                                         const TruncationSchedule& schedule,
                                         double tolerance) {
    Cplx arch = archimedean_gamma_product(omega, a);
    Cplx rhs = gamma_identity_rhs(field, omega, a);
    RegProductTrace trace = reg_gamma_product(field, omega, a, schedule);
    VerificationReport report;
    report.tolerance = tolerance;
    for (const auto& [V, value] : trace.per_cutoff) {
        ScheduleRow row;
        row.cutoff = V;
        row.lhs = arch * value;
        row.rhs = rhs;
        row.abs_err = std::abs(row.lhs - row.rhs);
        row.rel_err = row.abs_err / std::abs(row.rhs);
        report.rows.push_back(row);
    }
    finalize_report(report);
    return report;
}

VerificationReport finite_V_identity_check(const NumberFieldDescriptor& field,
                                           const IdeleClassCharacter& omega, Cplx a,
                                           long long V, double tolerance) {
    TruncationSchedule single;
    single.cutoffs = {V};
    check_schedule(single, field, omega);
    PlaceWindow w = collect_places(field, omega, single.cutoffs);

    Cplx lhs_log = prefix_tree_sum(gamma_chain_terms(w, omega, a), w.places.size()) +
                   log_oracle_l(a, field, omega);
    Cplx lhs = archimedean_gamma_product(omega, a) * std::exp(lhs_log);

    IdeleClassCharacter conj_omega = omega.conjugate();
    Cplx rhs_log = prefix_tree_sum(reflected_lfactor_terms(w, omega, a), w.places.size()) +
                   log_oracle_l(1.0 - a, field, conj_omega);
    Cplx rhs = gamma_identity_rhs(field, omega, a) * std::exp(rhs_log);

    VerificationReport report;
    report.tolerance = tolerance;
    ScheduleRow row;
    row.cutoff = V;
    row.lhs = lhs;
    row.rhs = rhs;
    row.abs_err = std::abs(lhs - rhs);
    row.rel_err = row.abs_err / std::abs(rhs);
    report.rows.push_back(row);
    finalize_report(report);
    return report;
}

// ---------------------------------------------------------------------------
// Beta identity

namespace {

std::vector<Cplx> beta_chain_terms(const PlaceWindow& w,
                                   const IdeleClassCharacter& omega,
                                   const IdeleClassCharacter& omega2,
                                   const IdeleClassCharacter& omega12, Cplx a,
                                   Cplx b) {
    std::vector<Cplx> terms(w.places.size());
    parallel_fill(terms.size(), [&](std::size_t i) {
        const Place& v = w.places[i];
        Cplx l1 = omega.lambda(v), l2 = omega2.lambda(v), l12 = omega12.lambda(v);
        Cplx g1 = gamma_q_twisted(a, v.q, l1);
        Cplx f1 = one_minus_lambda_qpow(a, v.q, l1);
        Cplx g2 = gamma_q_twisted(b, v.q, l2);
        Cplx f2 = one_minus_lambda_qpow(b, v.q, l2);
        Cplx g3 = gamma_q_twisted(1.0 - a - b, v.q, std::conj(l12));
        Cplx f3 = one_minus_lambda_qpow(a + b, v.q, l12);
        terms[i] = std::log(g1 * f1) + std::log(g2 * f2) + std::log(g3) - std::log(f3);
    });
    return terms;
}

}  // namespace

Cplx beta_identity_rhs(const NumberFieldDescriptor& field,
                       const IdeleClassCharacter& omega,
                       const IdeleClassCharacter& omega2) {
    IdeleClassCharacter omega12 = omega.times(omega2);
    // kappa_bold: ramified local root numbers only; the archimedean phases
    // cancel pairwise against the (-1)^eta reflection factor below.
    Cplx kappa_bold(1.0, 0.0);
    const auto& r1 = omega.ramified();
    const auto& r2 = omega2.ramified();
    const auto& r12 = omega12.ramified();
    for (std::size_t i = 0; i < r1.size(); ++i) {
        Cplx k1 = r1[i].theta.theta_minus_one() * std::conj(kappa_local(r1[i].theta));
        Cplx k2 = r2[i].theta.theta_minus_one() * std::conj(kappa_local(r2[i].theta));
        Cplx k12 = r12[i].theta.theta_minus_one() * std::conj(kappa_local(r12[i].theta));
        kappa_bold *= k1 * k2 * std::conj(k12);
    }
    int eta_sum = 0;
    for (std::size_t i = 0; i < omega.real_parities().size(); ++i)
        eta_sum += omega.real_parities()[i] + omega2.real_parities()[i];
    for (std::size_t i = 0; i < omega.complex_weights().size(); ++i)
        eta_sum += omega.complex_weights()[i] + omega2.complex_weights()[i];
    double sign = (eta_sum % 2) ? -1.0 : 1.0;
    double dn = (double)field.abs_discriminant() * (double)omega.conductor_norm();
    return sign * kappa_bold * std::sqrt(dn);
}

RegProductTrace reg_beta_product(const NumberFieldDescriptor& field,
                                 const IdeleClassCharacter& omega,
                                 const IdeleClassCharacter& omega2, Cplx a, Cplx b,
                                 const TruncationSchedule& schedule) {
    if (a.real() >= 0.0 || b.real() >= 0.0)
        throw DomainError("reg_beta_product: requires Re a < 0 and Re b < 0");
    IdeleClassCharacter omega12 = omega.times(omega2);  // validates equal ranks
    check_schedule(schedule, field, omega);
    PlaceWindow w = collect_places(field, omega, schedule.cutoffs);
    std::vector<Cplx> terms = beta_chain_terms(w, omega, omega2, omega12, a, b);
    Cplx log_l = log_oracle_l(a, field, omega) + log_oracle_l(b, field, omega2) -
                 log_oracle_l(a + b, field, omega12);
    RegProductTrace trace;
    for (std::size_t k = 0; k < schedule.cutoffs.size(); ++k) {
        Cplx v = std::exp(prefix_tree_sum(terms, w.cutoff_index[k]) + log_l);
        trace.per_cutoff.emplace_back(schedule.cutoffs[k], v);
    }
    trace.final_value = trace.per_cutoff.back().second;
    return trace;
}

VerificationReport verify_beta_identity(const NumberFieldDescriptor& field,
                                        const IdeleClassCharacter& omega,
                                        const IdeleClassCharacter& omega2, Cplx a,
                                        Cplx b, const TruncationSchedule& schedule,
                                        double tolerance) {
    Cplx rhs = beta_identity_rhs(field, omega, omega2);  // validates the pair
    Cplx arch(1.0, 0.0);
    for (std::size_t i = 0; i < omega.real_parities().size(); ++i)
        arch *= beta_real(a, omega.real_parities()[i], b, omega2.real_parities()[i]);
    for (std::size_t i = 0; i < omega.complex_weights().size(); ++i)
        arch *= beta_complex(a, omega.complex_weights()[i], b, omega2.complex_weights()[i]);
    RegProductTrace trace = reg_beta_product(field, omega, omega2, a, b, schedule);
    VerificationReport report;
    report.tolerance = tolerance;
    for (const auto& [V, value] : trace.per_cutoff) {
        ScheduleRow row;
        row.cutoff = V;
        row.lhs = arch * value;
        row.rhs = rhs;
        row.abs_err = std::abs(row.lhs - row.rhs);
        row.rel_err = row.abs_err / std::abs(row.rhs);
        report.rows.push_back(row);
    }
    finalize_report(report);
    return report;
}

}  // namespace adelic
