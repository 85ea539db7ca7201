#include <doctest.h>

#include <map>

#include "carlgoss/poly.hpp"
#include "util.hpp"

using namespace carlgoss;
using cgtest::Rng;

TEST_SUITE("poly") {

TEST_CASE("parse and format round-trip") {
    Field f3 = Field::make(3, 1);
    for (const char* s : {"0", "1", "2", "t", "t+1", "2*t", "t^2+2*t+1", "t^5+t^3+2"}) {
        ThetaPoly a = parse_poly(s, f3);
        CHECK(a.to_string() == s);
        CHECK(parse_poly(a.to_string(), f3) == a);
    }
    Field f9 = Field::make(3, 2);
    ThetaPoly b = parse_poly("(u+1)*t+u", f9);
    CHECK(b.degree() == 1);
    CHECK(b.coeff(0) == f9.gen());
    CHECK(b.coeff(1) == f9.gen() + f9.one());
    CHECK(parse_poly(b.to_string(), f9) == b);
}

TEST_CASE("monic enumeration order is base-q digits, constant fastest") {
    Field f3 = Field::make(3, 1);
    CHECK(monic_count(f3, 2) == 9);
    CHECK(monic_of_index(f3, 2, 0).to_string() == "t^2");
    CHECK(monic_of_index(f3, 2, 5).to_string() == "t^2+t+2");
    CHECK(monic_of_index(f3, 2, 8).to_string() == "t^2+2*t+2");
    // every index decodes to a distinct monic of the right degree
    std::map<std::string, uint64_t> seen;
    for (uint64_t i = 0; i < 27; ++i) {
        ThetaPoly m = monic_of_index(f3, 3, i);
        CHECK(m.degree() == 3);
        CHECK(m.lead().is_one());
        seen[m.to_string()] = i;
    }
    CHECK(seen.size() == 27);
}

TEST_CASE("divmod invariant") {
    Rng rng(2001);
    std::vector<Field> fields = {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)};
    for (int i = 0; i < 1000; ++i) {
        Field f = fields[rng.below(fields.size())];
        ThetaPoly a = rng.poly(f, 9);
        ThetaPoly b = rng.nonzero_poly(f, 5);
        auto [q, r] = poly_divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("xgcd certificate") {
    Rng rng(2002);
    std::vector<Field> fields = {Field::make(2, 1), Field::make(3, 1), Field::make(3, 2)};
    for (int i = 0; i < 1000; ++i) {
        Field f = fields[rng.below(fields.size())];
        ThetaPoly a = rng.nonzero_poly(f, 7), b = rng.nonzero_poly(f, 7);
        auto [g, s, t] = poly_xgcd(a, b);
        CHECK(g.lead().is_one());
        CHECK(s * a + t * b == g);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
    }
}

TEST_CASE("invmod and powmod") {
    Rng rng(2003);
    Field f3 = Field::make(3, 1);
    ThetaPoly M = parse_poly("t^4+t+2", f3); // any modulus coprime to the inputs below
    for (int i = 0; i < 1000; ++i) {
        ThetaPoly a = rng.nonzero_poly(f3, 3);
        if (!poly_gcd(a, M).is_one()) continue;
        ThetaPoly inv = poly_invmod(a, M);
        CHECK((a * inv) % M == ThetaPoly::one(f3));
        uint64_t e = rng.below(20);
        ThetaPoly direct = ThetaPoly::one(f3);
        for (uint64_t j = 0; j < e; ++j) direct = (direct * a) % M;
        CHECK(poly_powmod(a, e, M) == direct);
    }
}

TEST_CASE("irreducible counts match the field norm formula") {
    // #monic irreducibles of degree d over F_q, by Moebius counting
    auto count = [](Field f, int64_t d) {
        uint64_t n = 0;
        for (uint64_t i = 0; i < monic_count(f, d); ++i)
            if (poly_is_irreducible(monic_of_index(f, d, i))) ++n;
        return n;
    };
    Field f2 = Field::make(2, 1), f3 = Field::make(3, 1);
    CHECK(count(f2, 1) == 2);
    CHECK(count(f2, 2) == 1);
    CHECK(count(f2, 3) == 2);
    CHECK(count(f2, 4) == 3);
    CHECK(count(f2, 5) == 6);
    CHECK(count(f3, 1) == 3);
    CHECK(count(f3, 2) == 3);
    CHECK(count(f3, 3) == 8);
    CHECK(count(f3, 4) == 18);
}

TEST_CASE("factorization multiplies back and is seed-independent") {
    Rng rng(2004);
    std::vector<Field> fields = {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)};
    for (int i = 0; i < 200; ++i) {
        Field f = fields[rng.below(fields.size())];
        ThetaPoly a = rng.nonzero_poly(f, 8);
        if (a.degree() < 1) continue;
        Factorization fac = poly_factorize(a, 17);
        ThetaPoly prod = ThetaPoly::constant(fac.unit);
        for (const auto& [p, e] : fac.factors) {
            CHECK(poly_is_irreducible(p));
            CHECK(p.lead().is_one());
            for (uint64_t j = 0; j < e; ++j) prod = prod * p;
        }
        CHECK(prod == a);
        Factorization again = poly_factorize(a, 99);
        REQUIRE(again.factors.size() == fac.factors.size());
        for (size_t j = 0; j < fac.factors.size(); ++j) {
            CHECK(again.factors[j].p == fac.factors[j].p);
            CHECK(again.factors[j].multiplicity == fac.factors[j].multiplicity);
        }
    }
}

TEST_CASE("coefficient frobenius is multiplicative") {
    Rng rng(2005);
    Field f9 = Field::make(3, 2);
    for (int i = 0; i < 1000; ++i) {
        ThetaPoly a = rng.poly(f9, 5), b = rng.poly(f9, 5);
        CHECK((a * b).coeff_frobenius(1, 3) == a.coeff_frobenius(1, 3) * b.coeff_frobenius(1, 3));
        CHECK(a.coeff_frobenius(2, 3) == a); // q^2 = 9 fixes F_9
    }
}

} // TEST_SUITE
