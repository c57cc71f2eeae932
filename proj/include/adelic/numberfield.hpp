#pragma once

#include <string>
#include <vector>

#include "adelic/types.hpp"

namespace adelic {

enum class PlaceKind { real, complex_pair, finite };

// One completion of the field. For finite places q = p^f is the residue
// module; e > 1 marks ramification over p.
struct Place {
    PlaceKind kind = PlaceKind::finite;
    long long p = 0;  // underlying rational prime
    int f = 1;        // residue degree
    int e = 1;        // ramification index
    long long q = 0;  // p^f
    bool ramified = false;
};

struct NumberFieldDescriptor {
    enum class Kind { rationals, quadratic, cyclotomic };
    Kind kind = Kind::rationals;
    long long param = 0;  // quadratic: squarefree d; cyclotomic: m
    int sigma = 1;        // number of real places
    int tau = 0;          // number of complex place pairs
    long long discriminant = 1;  // signed

    int degree() const { return sigma + 2 * tau; }
    long long abs_discriminant() const {
        return discriminant < 0 ? -discriminant : discriminant;
    }
    bool is_rationals() const { return kind == Kind::rationals; }
    // Stable identity for cross-checks; quadratic(-3) and cyclotomic(3) are
    // distinct descriptors of the same field and must produce identical
    // place data.
    std::string spec_string() const;
};

NumberFieldDescriptor describe_rationals();
NumberFieldDescriptor describe_quadratic(long long d);   // d squarefree, != 0, 1
NumberFieldDescriptor describe_cyclotomic(long long m);  // m >= 3, m != 2 mod 4

// Accepts "Q", "Q(sqrt,-1)", "Q(zeta,5)".
NumberFieldDescriptor parse_field_spec(const std::string& spec);

// Decomposition of the rational prime p in the field. Total function on
// primes; throws DomainError if p is not prime.
std::vector<Place> places_above(const NumberFieldDescriptor& field, long long p);

// All finite places above primes p < prime_bound, ordered by (p, q).
std::vector<Place> enumerate_finite_places(const NumberFieldDescriptor& field,
                                           long long prime_bound);

// Kronecker symbol (a|n), full generality: any a, any n (including n <= 0
// and even n).
int kronecker_symbol(long long a, long long n);

std::vector<long long> primes_below(long long bound);
bool is_prime(long long n);
bool is_squarefree(long long n);
long long euler_phi(long long m);
// Order of a in (Z/m)^*; requires gcd(a, m) = 1. multiplicative_order(a, 1) = 1.
long long multiplicative_order(long long a, long long m);
long long power_mod(long long base, long long exp, long long mod);
long long gcd_ll(long long a, long long b);

}  // namespace adelic
