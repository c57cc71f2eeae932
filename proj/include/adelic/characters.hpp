#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adelic/nonarch.hpp"
#include "adelic/numberfield.hpp"
#include "adelic/types.hpp"

namespace adelic {

// Dirichlet character mod m with exact root-of-unity values. Built through
// DirichletGroup::character(index) or from an explicit value table.
class DirichletCharacter {
  public:
    // values[a] is the angle of chi(a) for units a mod m; entries at
    // non-units are ignored. Index is the enumeration index when known.
    DirichletCharacter(long long modulus, std::vector<RootAngle> values,
                       long long index = -1);

    long long modulus() const { return modulus_; }
    long long conductor() const { return conductor_; }
    bool primitive() const { return conductor_ == modulus_; }
    bool principal() const { return conductor_ == 1; }
    RealParity parity() const { return parity_; }  // (-1)^nu = chi(-1)
    long long index() const { return index_; }

    Cplx at(long long a) const;           // 0 on non-units
    RootAngle angle_at(long long a) const;  // requires gcd(a, m) = 1

    DirichletCharacter conjugate() const;
    DirichletCharacter times(const DirichletCharacter& other) const;  // same modulus
    // The primitive character mod conductor() inducing this one.
    DirichletCharacter primitive_core() const;

  private:
    bool is_unit(long long a) const;
    long long modulus_;
    std::vector<RootAngle> values_;
    std::vector<long long> prime_factors_;  // distinct primes of the modulus
    long long conductor_;
    RealParity parity_;
    long long index_;
};

// Structure of (Z/m)^* as a product of cyclic groups, with a fixed generator
// order so character indices are stable: 2-part generators first (-1, then 5
// when 8 | m), then one generator per odd prime power in ascending p. A
// character with index k has generator images exp(2 pi i t_j / n_j) where the
// t_j are the little-endian mixed-radix digits of k.
class DirichletGroup {
  public:
    explicit DirichletGroup(long long m);

    long long modulus() const { return m_; }
    long long order() const;  // phi(m) = number of characters
    DirichletCharacter character(long long index) const;
    std::vector<DirichletCharacter> all_characters() const;
    std::vector<DirichletCharacter> primitive_characters() const;

  private:
    struct Generator {
        long long g;      // lifted generator mod m
        long long order;  // cyclic order
    };
    long long m_;
    std::vector<Generator> gens_;
    std::vector<std::vector<int>> dlogs_;  // per residue, exponent on each generator (units only)
    std::vector<char> unit_;               // coprimality mask
    long long exponent_;                   // lcm of generator orders
};

// Idele class character of a supported field. Trivial characters exist over
// every supported field; ramified ones come from primitive Dirichlet
// characters and live over Q. The global twist is fixed to zero.
class IdeleClassCharacter {
  public:
    static IdeleClassCharacter trivial(const NumberFieldDescriptor& field);
    // Requires chi primitive. Modulus 1 yields the trivial character over Q.
    static IdeleClassCharacter from_dirichlet(const DirichletCharacter& chi);

    const NumberFieldDescriptor& field() const { return field_; }
    bool is_trivial() const { return !dirichlet_.has_value(); }
    const std::vector<RealParity>& real_parities() const { return real_parities_; }
    const std::vector<ComplexWeight>& complex_weights() const { return complex_weights_; }

    struct RamifiedComponent {
        long long p;
        int rank;  // rho_p = v_p(conductor)
        RamifiedLocalCharacter theta;
    };
    const std::vector<RamifiedComponent>& ramified() const { return ramified_; }
    bool ramified_at(long long p) const;
    long long conductor_norm() const { return conductor_norm_; }  // N(J)

    // Unramified eigenvalue lambda(v) = omega_v(pi_v); chi(p) over Q.
    Cplx lambda(const Place& v) const;

    IdeleClassCharacter conjugate() const;
    // Product character; throws RankMismatchError unless the ramified sets,
    // their ranks, and the product's ranks all agree.
    IdeleClassCharacter times(const IdeleClassCharacter& other) const;

    const DirichletCharacter* dirichlet() const {
        return dirichlet_ ? &*dirichlet_ : nullptr;
    }

  private:
    IdeleClassCharacter() = default;
    NumberFieldDescriptor field_;
    std::vector<RealParity> real_parities_;
    std::vector<ComplexWeight> complex_weights_;
    std::vector<RamifiedComponent> ramified_;  // ascending p
    long long conductor_norm_ = 1;
    std::optional<DirichletCharacter> dirichlet_;
};

// Product of local root numbers:
//   i^{-nu_v} at real places, i^{-|nu_v|} at complex places, 1 at unramified
//   finite places, theta_v(-1) conj(kappa(theta_v)) at ramified places.
// Together with omega_C this assembles the classical normalized root number:
// kappa_global * omega_C = tau(chi) / (i^nu sqrt(m)) for primitive chi mod m.
Cplx kappa_global(const IdeleClassCharacter& omega);

// Phase of the character at the conductor idele: product over ramified p of
// theta(p)^{-rho_p}, where theta(p) multiplies the other ramified local
// components at p. Equals 1 for prime-power conductors.
Cplx omega_C(const IdeleClassCharacter& omega);

// "trivial" or "chi(m=4,k=1)" (index into DirichletGroup enumeration).
IdeleClassCharacter parse_character_spec(const std::string& spec,
                                         const NumberFieldDescriptor& field);

}  // namespace adelic
