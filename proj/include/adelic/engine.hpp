#pragma once

#include <vector>

#include "adelic/characters.hpp"
#include "adelic/numberfield.hpp"
#include "adelic/report.hpp"
#include "adelic/types.hpp"

namespace adelic {

// Strictly increasing prime cutoffs V_1 < V_2 < ... . Whether the first
// cutoff clears the ramified primes of a given field/character pair is
// checked where the schedule is consumed.
struct TruncationSchedule {
    std::vector<long long> cutoffs;

    static TruncationSchedule default_schedule();            // 2^8 .. 2^17
    static TruncationSchedule powers_of_two(int lo, int hi);  // 2^lo .. 2^hi
    static TruncationSchedule parse(const std::string& spec);  // "2^8..2^17" or "a,b,c"
    void validate() const;
    long long final_cutoff() const { return cutoffs.back(); }
};

// Deterministic evaluation grid inside the supported window:
// Re in [-3, -0.3], |Im| <= 2, distance >= 0.1 from the integer pole
// lattice of the archimedean factors.
std::vector<Cplx> make_evaluation_grid(int count, unsigned long long seed = 0x5eed);

// Tail product over unramified places with V <= p < tail_bound of
// (1 - lambda(v) q_v^{-a})^{-1}. Requires Re a > 1.
Cplx l_truncated_tail(Cplx a, const NumberFieldDescriptor& field,
                      const IdeleClassCharacter& omega, long long V,
                      long long tail_bound);

// L_V(a; omega) = L(a; omega) * prod over unramified places with p < V of
// (1 - lambda(v) q_v^{-a}), valid at all a through the oracle. The value can
// exceed the double range for very negative Re a at large V; the log form is
// what the engine consumes internally.
Cplx l_truncated_via_oracle(Cplx a, const NumberFieldDescriptor& field,
                            const IdeleClassCharacter& omega, long long V);
Cplx log_l_truncated_via_oracle(Cplx a, const NumberFieldDescriptor& field,
                                const IdeleClassCharacter& omega, long long V);

struct RegProductTrace {
    std::vector<std::pair<long long, Cplx>> per_cutoff;
    Cplx final_value{0.0, 0.0};
};

// reg prod_{v in F} Gamma_{q_v}(a + i a_v): per-cutoff values of
// prod_{p < V} Gamma_{q_v}(a + i a_v) * L_V(a; omega). Requires Re a < 0.
RegProductTrace reg_gamma_product(const NumberFieldDescriptor& field,
                                  const IdeleClassCharacter& omega, Cplx a,
                                  const TruncationSchedule& schedule);

// Archimedean gamma factors of the identity left side.
Cplx archimedean_gamma_product(const IdeleClassCharacter& omega, Cplx a);

// Phase carried by the identity right side:
//   (-1)^{nu_v} over archimedean places
//   * theta_v(-1) conj(kappa(theta_v)) over ramified places
//   * omega_C.
// kappa_global uses i^{-nu_v} at the archimedean places instead, which is
// the composition that reproduces the classical normalized root number
// epsilon(chi); the identity needs the squared archimedean phase. The two
// agree whenever every nu_v = 0.
Cplx identity_phase(const IdeleClassCharacter& omega);

// Full check of the regularized identity: LHS(V) -> phase [|D| N(J)]^{1/2-a}.
VerificationReport verify_gamma_identity(const NumberFieldDescriptor& field,
                                         const IdeleClassCharacter& omega, Cplx a,
                                         const TruncationSchedule& schedule,
                                         double tolerance);

// Exact-at-every-V form: LHS(a, V) = phase [|D| N(J)]^{1/2-a} L_V(1-a; conj omega),
// both L_V's through the oracle. Valid at any a away from poles, including
// the critical strip.
VerificationReport finite_V_identity_check(const NumberFieldDescriptor& field,
                                           const IdeleClassCharacter& omega, Cplx a,
                                           long long V, double tolerance);

// reg prod B_{q_v}(a + i a_v, b + i b_v) with the L_V(a) L_V(b) / L_V(a+b)
// normalization. Requires Re a < 0, Re b < 0 and the equal-rank hypothesis
// for (omega, omega', omega omega').
RegProductTrace reg_beta_product(const NumberFieldDescriptor& field,
                                 const IdeleClassCharacter& omega,
                                 const IdeleClassCharacter& omega2, Cplx a, Cplx b,
                                 const TruncationSchedule& schedule);

// Beta identity: B_arch * reg prod B_q -> (-1)^{sum eta_v} kappa_bold
// sqrt(|D| N(J)), kappa_bold the ramified-local triple product.
VerificationReport verify_beta_identity(const NumberFieldDescriptor& field,
                                        const IdeleClassCharacter& omega,
                                        const IdeleClassCharacter& omega2, Cplx a,
                                        Cplx b, const TruncationSchedule& schedule,
                                        double tolerance);

// Right-hand sides exposed for tests and the CLI.
Cplx gamma_identity_rhs(const NumberFieldDescriptor& field,
                        const IdeleClassCharacter& omega, Cplx a);
Cplx beta_identity_rhs(const NumberFieldDescriptor& field,
                       const IdeleClassCharacter& omega,
                       const IdeleClassCharacter& omega2);

}  // namespace adelic
