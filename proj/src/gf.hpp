#pragma once

#include <cstdint>
#include <vector>

#include "primes.hpp"

namespace pbdtk::alg {

// Arithmetic in GF(p^e).  Elements are indices in [0, q); the index encodes
// the coefficient vector of a polynomial over GF(p) in little-endian base-p
// digits (index = c0 + c1*p + ... + c_{e-1}*p^(e-1)).  The reduction modulus
// is the first monic irreducible polynomial of degree e in that same
// little-endian index order, which makes every table and every element
// index reproducible across runs.
class FiniteField {
  public:
    using Elem = std::uint32_t;

    static constexpr std::uint64_t default_order_cap = 1u << 16;

    explicit FiniteField(std::uint64_t order, std::uint64_t order_cap = default_order_cap);

    std::uint64_t order() const { return q_; }
    std::uint64_t characteristic() const { return p_; }
    std::uint32_t degree() const { return e_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const; // throws Errc::domain on a == 0

    // Little-endian coefficient vector of an element, length degree().
    std::vector<std::uint32_t> coeffs(Elem a) const;

    // Monic reduction modulus, little-endian, length degree() + 1.
    // For prime fields this is the polynomial x.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  private:
    using Poly = std::vector<std::uint32_t>; // little-endian, may carry high zeros

    Poly decode(std::uint64_t index, std::uint32_t len) const;
    std::uint64_t encode(const Poly& a) const;
    Poly poly_mul(const Poly& a, const Poly& b) const;
    Poly poly_mod(Poly a, const Poly& m) const;
    bool poly_is_zero(const Poly& a) const;
    std::uint32_t poly_deg(const Poly& a) const;
    bool irreducible(const Poly& f) const;
    Poly find_modulus() const;

    std::uint64_t q_;
    std::uint64_t p_;
    std::uint32_t e_;
    Poly modulus_;
};

} // namespace pbdtk::alg
