#include "gf.hpp"

#include <algorithm>

#include "error.hpp"

namespace pbdtk::alg {

FiniteField::FiniteField(std::uint64_t order, std::uint64_t order_cap) {
    if (order > order_cap)
        fail(Errc::cap_exceeded, "field order " + std::to_string(order) +
                                     " exceeds cap " + std::to_string(order_cap));
    PrimePower pp = prime_power_decompose(order);
    q_ = pp.q;
    p_ = pp.p;
    e_ = pp.e;
    modulus_ = find_modulus();
}

FiniteField::Poly FiniteField::decode(std::uint64_t index, std::uint32_t len) const {
    Poly out(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
        out[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return out;
}

std::uint64_t FiniteField::encode(const Poly& a) const {
    std::uint64_t index = 0;
    for (std::size_t i = a.size(); i-- > 0;) index = index * p_ + a[i];
    return index;
}

bool FiniteField::poly_is_zero(const Poly& a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint32_t FiniteField::poly_deg(const Poly& a) const {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<std::uint32_t>(i);
    return 0;
}

FiniteField::Poly FiniteField::poly_mul(const Poly& a, const Poly& b) const {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_);
    }
    return out;
}

FiniteField::Poly FiniteField::poly_mod(Poly a, const Poly& m) const {
    std::uint32_t dm = poly_deg(m);
    // m is monic, so each step just subtracts lead * x^(da-dm) * m.
    while (!poly_is_zero(a) && poly_deg(a) >= dm) {
        std::uint32_t da = poly_deg(a);
        std::uint64_t lead = a[da];
        std::uint32_t shift = da - dm;
        for (std::uint32_t i = 0; i <= dm; ++i) {
            std::uint64_t sub = lead * m[i] % p_;
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p_ - sub) % p_);
        }
    }
    a.resize(std::max<std::uint32_t>(dm, 1), 0);
    return a;
}

bool FiniteField::irreducible(const Poly& f) const {
    std::uint32_t df = poly_deg(f);
    // Trial division by every monic polynomial of degree 1..df/2.
    for (std::uint32_t d = 1; 2 * d <= df; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p_;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g = decode(low, d + 1);
            g[d] = 1;
            Poly r = poly_mod(f, g);
            if (poly_is_zero(r)) return false;
        }
    }
    return true;
}

FiniteField::Poly FiniteField::find_modulus() const {
    if (e_ == 1) return Poly{0, 1}; // x
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e_; ++i) count *= p_;
    for (std::uint64_t low = 0; low < count; ++low) {
        Poly f = decode(low, e_ + 1);
        f[e_] = 1;
        if (irreducible(f)) return f;
    }
    fail(Errc::domain, "no irreducible modulus found"); // unreachable
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
    if (e_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % p_);
    Poly pa = decode(a, e_), pb = decode(b, e_);
    for (std::uint32_t i = 0; i < e_; ++i)
        pa[i] = static_cast<std::uint32_t>((pa[i] + static_cast<std::uint64_t>(pb[i])) % p_);
    return static_cast<Elem>(encode(pa));
}

FiniteField::Elem FiniteField::neg(Elem a) const {
    if (e_ == 1) return static_cast<Elem>((p_ - a) % p_);
    Poly pa = decode(a, e_);
    for (std::uint32_t i = 0; i < e_; ++i)
        pa[i] = static_cast<std::uint32_t>((p_ - pa[i]) % p_);
    return static_cast<Elem>(encode(pa));
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
    if (e_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    Poly prod = poly_mul(decode(a, e_), decode(b, e_));
    return static_cast<Elem>(encode(poly_mod(std::move(prod), modulus_)));
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    if (a == 0) fail(Errc::domain, "inverse of zero field element");
    if (e_ == 1) {
        // Fermat.
        std::uint64_t result = 1, base = a, exp = p_ - 2;
        while (exp > 0) {
            if (exp & 1) result = result * base % p_;
            base = base * base % p_;
            exp >>= 1;
        }
        return static_cast<Elem>(result);
    }
    // Extension fields stay tiny under the order cap; exhaustive search keeps
    // this trivially correct.
    for (std::uint64_t b = 1; b < q_; ++b)
        if (mul(a, static_cast<Elem>(b)) == 1) return static_cast<Elem>(b);
    fail(Errc::domain, "field element without inverse"); // unreachable
}

std::vector<std::uint32_t> FiniteField::coeffs(Elem a) const { return decode(a, e_); }

} // namespace pbdtk::alg
