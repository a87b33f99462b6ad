#include <doctest.h>

#include <cstdint>

#include "error.hpp"
#include "gf.hpp"

using pbdtk::Errc;
using pbdtk::Error;
using pbdtk::alg::FiniteField;

namespace {

void check_field_axioms(std::uint64_t q, std::uint64_t stride) {
    FiniteField f(q);
    using Elem = FiniteField::Elem;
    REQUIRE(f.order() == q);

    // identities and inverses
    for (Elem a = 0; a < q; ++a) {
        CHECK(f.add(a, f.zero()) == a);
        CHECK(f.mul(a, f.one()) == a);
        CHECK(f.add(a, f.neg(a)) == f.zero());
        CHECK(f.sub(a, a) == f.zero());
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
    }

    // commutativity
    for (Elem a = 0; a < q; ++a)
        for (Elem b = a; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
        }

    // associativity and distributivity, strided for larger fields
    for (Elem a = 0; a < q; a += stride)
        for (Elem b = 0; b < q; b += stride)
            for (Elem c = 0; c < q; c += stride) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }

    // no zero divisors
    for (Elem a = 1; a < q; ++a)
        for (Elem b = 1; b < q; ++b)
            CHECK(f.mul(a, b) != f.zero());

    // characteristic: adding one p times reaches zero, never earlier
    Elem acc = f.zero();
    for (std::uint64_t i = 1; i < f.characteristic(); ++i) {
        acc = f.add(acc, f.one());
        CHECK(acc != f.zero());
    }
    CHECK(f.add(acc, f.one()) == f.zero());
}

} // namespace

TEST_SUITE("finite fields") {

TEST_CASE("small fields satisfy the axioms exhaustively") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
        check_field_axioms(q, 1);
}

TEST_CASE("larger fields satisfy the axioms on a stride") {
    check_field_axioms(16, 3);
    check_field_axioms(25, 4);
    check_field_axioms(27, 5);
}

TEST_CASE("inverse of zero is a domain error") {
    FiniteField f(5);
    bool threw = false;
    try {
        f.inv(0);
    } catch (const Error& e) {
        threw = true;
        CHECK(e.code() == Errc::domain);
    }
    CHECK(threw);
}

TEST_CASE("non prime power orders are rejected") {
    for (std::uint64_t q : {0ull, 1ull, 6ull, 10ull, 12ull}) {
        bool threw = false;
        try {
            FiniteField f(q);
        } catch (const Error& e) {
            threw = true;
            CHECK(e.code() == Errc::not_prime_power);
        }
        CHECK(threw);
    }
}

TEST_CASE("orders beyond the cap are rejected") {
    bool threw = false;
    try {
        FiniteField f(1u << 17);
    } catch (const Error& e) {
        threw = true;
        CHECK(e.code() == Errc::cap_exceeded);
    }
    CHECK(threw);
}

TEST_CASE("the reduction modulus is a monic polynomial of the right degree") {
    for (std::uint64_t q : {4, 8, 9, 16, 27}) {
        FiniteField f(q);
        const auto& mod = f.modulus();
        REQUIRE(mod.size() == f.degree() + 1);
        CHECK(mod.back() == 1);
    }
    // GF(4) reduces by x^2 + x + 1, the only irreducible quadratic over GF(2)
    FiniteField f4(4);
    CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
}

} // TEST_SUITE
