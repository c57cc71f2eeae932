#include "adelic/characters.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "adelic/errors.hpp"

namespace adelic {

namespace {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

// smallest primitive root mod p^k, odd p
long long primitive_root(long long pk, long long p) {
    long long phi = euler_phi(pk);
    std::vector<long long> qs;
    long long t = phi;
    for (long long d = 2; d * d <= t; ++d) {
        if (t % d == 0) {
            qs.push_back(d);
            while (t % d == 0) t /= d;
        }
    }
    if (t > 1) qs.push_back(t);
    for (long long g = 2; g < pk; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (long long q : qs)
            if (power_mod(g, phi / q, pk) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw DomainError("primitive_root: none found");
}

// CRT lift: x = a mod n, x = 1 mod (m/n), gcd(n, m/n) = 1
long long crt_lift(long long a, long long n, long long m) {
    long long rest = m / n;
    for (long long x = a % n; x < m; x += n)
        if (x % rest == 1 % rest) return x;
    throw DomainError("crt_lift failed");
}

}  // namespace

// ---------------------------------------------------------------------------
// DirichletGroup

DirichletGroup::DirichletGroup(long long m) : m_(m) {
    if (m < 1) throw DomainError("DirichletGroup: modulus >= 1");
    // factor m
    std::vector<std::pair<long long, long long>> factors;  // (p, p^k)
    long long t = m;
    for (long long p = 2; p * p <= t; ++p) {
        if (t % p == 0) {
            long long pk = 1;
            while (t % p == 0) {
                t /= p;
                pk *= p;
            }
            factors.emplace_back(p, pk);
        }
    }
    if (t > 1) factors.emplace_back(t, t);
    std::sort(factors.begin(), factors.end());

    // generators, 2-part first
    for (auto [p, pk] : factors) {
        if (p == 2) {
            if (pk == 2) continue;  // trivial group
            if (pk == 4) {
                gens_.push_back({crt_lift(3, 4, m), 2});
            } else {
                gens_.push_back({crt_lift(pk - 1, pk, m), 2});
                gens_.push_back({crt_lift(5, pk, m), pk / 4});
            }
        } else {
            long long g = primitive_root(pk, p);
            gens_.push_back({crt_lift(g, pk, m), euler_phi(pk)});
        }
    }
    exponent_ = 1;
    for (auto& g : gens_) exponent_ = lcm_ll(exponent_, g.order);

    unit_.assign(m, 0);
    for (long long a = 0; a < m; ++a) unit_[a] = (m == 1) || gcd_ll(a, m) == 1;

    // discrete logs by enumeration of the product of cyclic factors
    dlogs_.assign(m, {});
    std::vector<int> exps(gens_.size(), 0);
    long long count = order();
    long long val = 1 % m;
    for (long long iter = 0; iter < count; ++iter) {
        dlogs_[val] = exps;
        // advance mixed-radix counter and the running product
        std::size_t j = 0;
        for (; j < gens_.size(); ++j) {
            ++exps[j];
            val = (long long)((unsigned __int128)val * gens_[j].g % m);
            if (exps[j] < gens_[j].order) break;
            // wrapped: val now multiplied by g^order = 1, exponent resets
            exps[j] = 0;
        }
        if (j == gens_.size()) break;
    }
}

long long DirichletGroup::order() const { return euler_phi(m_); }

DirichletCharacter DirichletGroup::character(long long index) const {
    if (index < 0 || index >= order())
        throw DomainError("DirichletGroup::character: index out of range");
    // mixed-radix digits of index over generator orders; all angles live over
    // the common denominator exponent_, so the table is pure integer work
    std::vector<long long> digits(gens_.size(), 0);
    long long k = index;
    for (std::size_t j = 0; j < gens_.size(); ++j) {
        digits[j] = k % gens_[j].order;
        k /= gens_[j].order;
    }
    std::vector<long long> stride(gens_.size());
    for (std::size_t j = 0; j < gens_.size(); ++j)
        stride[j] = digits[j] * (exponent_ / gens_[j].order);
    std::vector<RootAngle> values(m_, RootAngle{0, exponent_});
    for (long long a = 0; a < m_; ++a) {
        if (m_ > 1 && !unit_[a]) continue;
        long long num = 0;
        const auto& dl = dlogs_[a];
        for (std::size_t j = 0; j < gens_.size(); ++j) num += stride[j] * dl[j];
        values[a] = RootAngle{num % exponent_, exponent_};
    }
    return DirichletCharacter(m_, std::move(values), index);
}

std::vector<DirichletCharacter> DirichletGroup::all_characters() const {
    std::vector<DirichletCharacter> out;
    out.reserve(order());
    for (long long k = 0; k < order(); ++k) out.push_back(character(k));
    return out;
}

std::vector<DirichletCharacter> DirichletGroup::primitive_characters() const {
    std::vector<DirichletCharacter> out;
    for (long long k = 0; k < order(); ++k) {
        DirichletCharacter chi = character(k);
        if (chi.primitive()) out.push_back(std::move(chi));
    }
    return out;
}

// ---------------------------------------------------------------------------
// DirichletCharacter

bool DirichletCharacter::is_unit(long long a) const {
    for (long long p : prime_factors_)
        if (a % p == 0) return false;
    return true;
}

DirichletCharacter::DirichletCharacter(long long modulus, std::vector<RootAngle> values,
                                       long long index)
    : modulus_(modulus), values_(std::move(values)), index_(index) {
    if (modulus < 1 || (long long)values_.size() != modulus_)
        throw DomainError("DirichletCharacter: bad value table");
    long long t = modulus_;
    for (long long p = 2; p * p <= t; ++p) {
        if (t % p == 0) {
            prime_factors_.push_back(p);
            while (t % p == 0) t /= p;
        }
    }
    if (t > 1) prime_factors_.push_back(t);
    if (modulus_ == 1) {
        conductor_ = 1;
        parity_ = 0;
        return;
    }
    if (!values_[1].is_zero_angle())
        throw DomainError("DirichletCharacter: chi(1) != 1");
    // conductor: smallest f | m with chi trivial on {a = 1 mod f, gcd(a,m)=1}
    conductor_ = modulus_;
    for (long long f = 1; f <= modulus_; ++f) {
        if (modulus_ % f) continue;
        bool trivial_on_kernel = true;
        for (long long a = 1 % modulus_; a < modulus_; a += f) {
            if (!is_unit(a)) continue;
            if (!values_[a].is_zero_angle()) {
                trivial_on_kernel = false;
                break;
            }
        }
        if (trivial_on_kernel) {
            conductor_ = f;
            break;
        }
    }
    parity_ = values_[modulus_ - 1].is_zero_angle() ? 0 : 1;  // chi(-1) = +-1
}

Cplx DirichletCharacter::at(long long a) const {
    long long r = ((a % modulus_) + modulus_) % modulus_;
    if (modulus_ == 1) return {1.0, 0.0};
    if (!is_unit(r)) return {0.0, 0.0};
    return values_[r].value();
}

RootAngle DirichletCharacter::angle_at(long long a) const {
    long long r = ((a % modulus_) + modulus_) % modulus_;
    if (modulus_ == 1) return {0, 1};
    if (!is_unit(r)) throw DomainError("angle_at: not a unit");
    return values_[r];
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<RootAngle> vals(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) vals[i] = values_[i].conj();
    return DirichletCharacter(modulus_, std::move(vals));
}

DirichletCharacter DirichletCharacter::times(const DirichletCharacter& other) const {
    if (other.modulus_ != modulus_)
        throw DomainError("DirichletCharacter::times: moduli differ");
    std::vector<RootAngle> vals(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        vals[i] = values_[i].plus(other.values_[i]);
    return DirichletCharacter(modulus_, std::move(vals));
}

DirichletCharacter DirichletCharacter::primitive_core() const {
    long long f = conductor_;
    std::vector<RootAngle> vals(f, RootAngle{0, 1});
    for (long long a = 0; a < f; ++a) {
        if (f > 1 && gcd_ll(a, f) != 1) continue;
        // lift a to b = a mod f with gcd(b, m) = 1
        long long b = a;
        while (b < modulus_ && gcd_ll(b, modulus_) != 1) b += f;
        if (b >= modulus_)
            throw DomainError("primitive_core: no coprime lift found");
        vals[a] = values_[b];
    }
    return DirichletCharacter(f, std::move(vals));
}

// ---------------------------------------------------------------------------
// IdeleClassCharacter

IdeleClassCharacter IdeleClassCharacter::trivial(const NumberFieldDescriptor& field) {
    IdeleClassCharacter om;
    om.field_ = field;
    om.real_parities_.assign(field.sigma, 0);
    om.complex_weights_.assign(field.tau, 0);
    om.conductor_norm_ = 1;
    return om;
}

IdeleClassCharacter IdeleClassCharacter::from_dirichlet(const DirichletCharacter& chi) {
    if (!chi.primitive())
        throw NotPrimitiveError("from_dirichlet: character must be primitive");
    if (chi.modulus() == 1) return trivial(describe_rationals());

    IdeleClassCharacter om;
    om.field_ = describe_rationals();
    om.real_parities_ = {chi.parity()};
    om.conductor_norm_ = chi.modulus();
    om.dirichlet_ = chi;

    // Local components at p | m: the restriction of the class character to
    // Z_p^* is the conjugate of the CRT component of chi, which makes
    // lambda(p) = chi(p) at unramified places.
    long long m = chi.modulus();
    long long rest = m;
    for (long long p = 2; rest > 1; ++p) {
        if (rest % p) continue;
        long long pk = 1;
        int rho = 0;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
            ++rho;
        }
        std::vector<RootAngle> vals(pk, RootAngle{0, 1});
        for (long long x = 0; x < pk; ++x) {
            if (x % p == 0) continue;
            // a = x mod p^rho, a = 1 mod m/p^rho
            long long a = x % pk;
            long long other = m / pk;
            while (a % other != 1 % other) a += pk;
            // conjugate without reducing, keeping the common denominator
            RootAngle ang = chi.angle_at(a);
            long long n = ((ang.num % ang.den) + ang.den) % ang.den;
            vals[x] = RootAngle{(ang.den - n) % ang.den, ang.den};
        }
        om.ramified_.push_back({p, rho, RamifiedLocalCharacter(p, rho, std::move(vals))});
    }
    return om;
}

bool IdeleClassCharacter::ramified_at(long long p) const {
    for (const auto& r : ramified_)
        if (r.p == p) return true;
    return false;
}

Cplx IdeleClassCharacter::lambda(const Place& v) const {
    if (!dirichlet_) return {1.0, 0.0};
    if (ramified_at(v.p))
        throw DomainError("lambda: place is ramified for the character");
    return dirichlet_->at(v.p);
}

IdeleClassCharacter IdeleClassCharacter::conjugate() const {
    if (!dirichlet_) return *this;
    return from_dirichlet(dirichlet_->conjugate());
}

IdeleClassCharacter IdeleClassCharacter::times(const IdeleClassCharacter& other) const {
    if (!(field_.kind == other.field_.kind && field_.param == other.field_.param))
        throw RankMismatchError("times: characters live over different fields");
    if (is_trivial() && other.is_trivial()) return *this;
    if (is_trivial() != other.is_trivial())
        throw RankMismatchError("times: ramified sets differ (one side trivial)");
    // both Dirichlet: ramified sets and ranks must agree, and the product
    // must keep them (theorem hypothesis rho = rho' = rho'')
    if (ramified_.size() != other.ramified_.size())
        throw RankMismatchError("times: ramified sets differ");
    for (std::size_t i = 0; i < ramified_.size(); ++i) {
        if (ramified_[i].p != other.ramified_[i].p ||
            ramified_[i].rank != other.ramified_[i].rank)
            throw RankMismatchError("times: local ranks differ");
    }
    DirichletCharacter prod = dirichlet_->times(*other.dirichlet_);
    if (prod.conductor() != dirichlet_->modulus())
        throw RankMismatchError("times: product character drops rank");
    return from_dirichlet(prod);
}

Cplx kappa_global(const IdeleClassCharacter& omega) {
    if (!omega.ramified().empty() && !omega.field().is_rationals())
        throw UnsupportedFieldError("kappa_global: ramified characters only over Q");
    Cplx k(1.0, 0.0);
    for (RealParity nu : omega.real_parities()) k *= i_power(-nu);
    for (ComplexWeight nu : omega.complex_weights()) k *= i_power(-std::abs(nu));
    for (const auto& r : omega.ramified())
        k *= r.theta.theta_minus_one() * std::conj(kappa_local(r.theta));
    return k;
}

Cplx omega_C(const IdeleClassCharacter& omega) {
    if (!omega.ramified().empty() && !omega.field().is_rationals())
        throw UnsupportedFieldError("omega_C: ramified characters only over Q");
    // q_v^{-i alpha_v (r_v + rho_v)} at ramified v; p^{i alpha_p} is fixed by
    // triviality on principal ideles: theta(p) over the other local factors.
    Cplx w(1.0, 0.0);
    const auto& ram = omega.ramified();
    for (const auto& rv : ram) {
        RootAngle theta_at_p{0, 1};
        for (const auto& ro : ram) {
            if (ro.p == rv.p) continue;
            theta_at_p = theta_at_p.plus(ro.theta.angle_at(rv.p));
        }
        w *= theta_at_p.scaled(-rv.rank).value();
    }
    return w;
}

IdeleClassCharacter parse_character_spec(const std::string& spec,
                                         const NumberFieldDescriptor& field) {
    if (spec == "trivial" || spec.empty())
        return IdeleClassCharacter::trivial(field);
    // chi(m=4,k=1)
    long long m = -1, k = -1;
    if (spec.rfind("chi(", 0) == 0 && spec.back() == ')') {
        std::string body = spec.substr(4, spec.size() - 5);
        std::istringstream is(body);
        std::string part;
        while (std::getline(is, part, ',')) {
            auto eq = part.find('=');
            if (eq == std::string::npos) break;
            std::string key = part.substr(0, eq);
            long long val;
            try {
                val = std::stoll(part.substr(eq + 1));
            } catch (...) {
                throw ParseError("bad character spec: " + spec);
            }
            if (key == "m")
                m = val;
            else if (key == "k")
                k = val;
            else
                throw ParseError("bad character spec key: " + key);
        }
    }
    if (m < 1 || k < 0) throw ParseError("cannot parse character spec: " + spec);
    if (!field.is_rationals())
        throw UnsupportedFieldError("Dirichlet characters are defined over Q");
    DirichletGroup group(m);
    return IdeleClassCharacter::from_dirichlet(group.character(k));
}

}  // namespace adelic
