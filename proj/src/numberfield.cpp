#include "adelic/numberfield.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "adelic/errors.hpp"

namespace adelic {

long long gcd_ll(long long a, long long b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long power_mod(long long base, long long exp, long long mod) {
    if (mod == 1) return 0;
    unsigned __int128 r = 1, b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return (long long)r;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin: {2,7,61} covers n < 3.2e9, the longer
    // base set covers all of 64 bits
    long long d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    static const std::vector<long long> kSmall = {2, 7, 61};
    static const std::vector<long long> kFull = {2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};
    for (long long a : (n < 3215031751LL ? kSmall : kFull)) {
        if (a % n == 0) continue;
        long long x = power_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = (long long)((unsigned __int128)x * x % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<long long> primes_below(long long bound) {
    std::vector<long long> out;
    if (bound <= 2) return out;
    std::vector<bool> comp(bound, false);
    for (long long i = 2; i * i < bound; ++i) {
        if (comp[i]) continue;
        for (long long j = i * i; j < bound; j += i) comp[j] = true;
    }
    for (long long i = 2; i < bound; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

bool is_squarefree(long long n) {
    n = std::llabs(n);
    if (n == 0) return false;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
        while (n % d == 0) n /= d;
    }
    return true;
}

long long euler_phi(long long m) {
    long long result = m;
    for (long long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            result -= result / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

long long multiplicative_order(long long a, long long m) {
    if (m == 1) return 1;
    a = ((a % m) + m) % m;
    if (gcd_ll(a, m) != 1) throw DomainError("multiplicative_order: not a unit");
    long long ord = 1, x = a;
    while (x != 1) {
        x = (long long)((unsigned __int128)x * a % m);
        ++ord;
    }
    return ord;
}

std::string NumberFieldDescriptor::spec_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::rationals: os << "Q"; break;
        case Kind::quadratic: os << "Q(sqrt," << param << ")"; break;
        case Kind::cyclotomic: os << "Q(zeta," << param << ")"; break;
    }
    return os.str();
}

NumberFieldDescriptor describe_rationals() {
    NumberFieldDescriptor f;
    f.kind = NumberFieldDescriptor::Kind::rationals;
    f.sigma = 1;
    f.tau = 0;
    f.discriminant = 1;
    return f;
}

NumberFieldDescriptor describe_quadratic(long long d) {
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw InvalidFieldSpec("quadratic field needs squarefree d != 0, 1");
    NumberFieldDescriptor f;
    f.kind = NumberFieldDescriptor::Kind::quadratic;
    f.param = d;
    if (d > 0) {
        f.sigma = 2;
        f.tau = 0;
    } else {
        f.sigma = 0;
        f.tau = 1;
    }
    long long r = ((d % 4) + 4) % 4;
    f.discriminant = (r == 1) ? d : 4 * d;
    return f;
}

NumberFieldDescriptor describe_cyclotomic(long long m) {
    if (m < 3 || m % 4 == 2)
        throw InvalidFieldSpec("cyclotomic field needs m >= 3, m != 2 mod 4");
    NumberFieldDescriptor f;
    f.kind = NumberFieldDescriptor::Kind::cyclotomic;
    f.param = m;
    long long phi = euler_phi(m);
    f.sigma = 0;
    f.tau = (int)(phi / 2);
    // |D| = m^phi / prod_{p | m} p^{phi/(p-1)}
    long long absd = 1;
    for (long long i = 0; i < phi; ++i) absd *= m;
    long long mm = m;
    for (long long p = 2; p * p <= mm || (mm > 1 && p <= mm); ++p) {
        if (mm % p) continue;
        while (mm % p == 0) mm /= p;
        long long e = phi / (p - 1);
        for (long long i = 0; i < e; ++i) absd /= p;
    }
    f.discriminant = (f.tau % 2 == 1) ? -absd : absd;
    return f;
}

NumberFieldDescriptor parse_field_spec(const std::string& spec) {
    if (spec == "Q" || spec == "q") return describe_rationals();
    auto open = spec.find('(');
    auto comma = spec.find(',');
    auto close = spec.find(')');
    if (spec.substr(0, 1) != "Q" || open == std::string::npos ||
        comma == std::string::npos || close == std::string::npos ||
        !(open < comma && comma < close))
        throw InvalidFieldSpec("cannot parse field spec: " + spec);
    std::string fn = spec.substr(open + 1, comma - open - 1);
    std::string arg = spec.substr(comma + 1, close - comma - 1);
    long long v = 0;
    try {
        v = std::stoll(arg);
    } catch (...) {
        throw InvalidFieldSpec("bad field parameter: " + spec);
    }
    if (fn == "sqrt") return describe_quadratic(v);
    if (fn == "zeta") return describe_cyclotomic(v);
    throw InvalidFieldSpec("unknown field kind: " + spec);
}

namespace {

int jacobi_odd(long long a, long long n) {
    // n odd positive
    a %= n;
    if (a < 0) a += n;
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return (n == 1) ? t : 0;
}

}  // namespace

int kronecker_symbol(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    int pow2 = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++pow2;
    }
    int result = sign;
    if (pow2 > 0) {
        if (a % 2 == 0) return 0;
        long long r = ((a % 8) + 8) % 8;
        int two = (r == 1 || r == 7) ? 1 : -1;  // (a|2)
        if (pow2 % 2 == 1) result *= two;
    }
    result *= jacobi_odd(a, n);
    return result;
}

std::vector<Place> places_above(const NumberFieldDescriptor& field, long long p) {
    if (!is_prime(p)) throw DomainError("places_above: p must be prime");
    std::vector<Place> out;
    auto push = [&](int f, int e, int count) {
        Place pl;
        pl.kind = PlaceKind::finite;
        pl.p = p;
        pl.f = f;
        pl.e = e;
        pl.q = 1;
        for (int i = 0; i < f; ++i) pl.q *= p;
        pl.ramified = e > 1;
        for (int i = 0; i < count; ++i) out.push_back(pl);
    };
    switch (field.kind) {
        case NumberFieldDescriptor::Kind::rationals:
            push(1, 1, 1);
            break;
        case NumberFieldDescriptor::Kind::quadratic: {
            int chi = kronecker_symbol(field.discriminant, p);
            if (chi == 1)
                push(1, 1, 2);  // split
            else if (chi == -1)
                push(2, 1, 1);  // inert
            else
                push(1, 2, 1);  // ramified
            break;
        }
        case NumberFieldDescriptor::Kind::cyclotomic: {
            long long m = field.param;
            if (m % p != 0) {
                long long f = multiplicative_order(p, m);
                long long count = euler_phi(m) / f;
                push((int)f, 1, (int)count);
            } else {
                long long mprime = m;
                long long pa = 1;
                while (mprime % p == 0) {
                    mprime /= p;
                    pa *= p;
                }
                long long f = multiplicative_order(p, mprime);
                long long e = euler_phi(pa);
                long long count = euler_phi(mprime) / f;
                push((int)f, (int)e, (int)count);
            }
            break;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Place& a, const Place& b) { return a.q < b.q; });
    return out;
}

std::vector<Place> enumerate_finite_places(const NumberFieldDescriptor& field,
                                           long long prime_bound) {
    if (prime_bound < 2) throw DomainError("enumerate_finite_places: bound >= 2");
    std::vector<Place> out;
    for (long long p : primes_below(prime_bound)) {
        auto ps = places_above(field, p);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;  // primes_below ascending, places_above sorted by q
}

}  // namespace adelic
