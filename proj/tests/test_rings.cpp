#include <doctest.h>

#include <set>

#include "carlgoss/rings.hpp"
#include "util.hpp"

using namespace carlgoss;
using cgtest::Rng;

TEST_SUITE("rings") {

TEST_CASE("ring construction and embedding round-trip") {
    Ring A3 = make_base_ring(Field::make(3, 1));
    CHECK(A3.is_base());
    CHECK(A3.q() == 3);
    CHECK(A3.is_real());
    CHECK(A3.describe() == "F_3[t]");

    Ring E = make_extension_ring(Field::make(2, 1), 2);
    CHECK(!E.is_base());
    CHECK(!E.is_real());
    CHECK(E.q() == 2);
    CHECK(E.coeff.size() == 4);
    CHECK(E.describe() == "F_4[t] over F_2[t]");

    Rng rng(6001);
    for (int i = 0; i < 500; ++i) {
        ThetaPoly a = rng.poly(E.base, 5);
        CHECK(pull_to_base(E, embed_to_coeff(E, a)) == a);
    }
    // u generates F_4 over F_2, so it cannot come from the base side
    CHECK_THROWS_AS(pull_to_base(E, ThetaPoly::constant(E.coeff.gen())), NotBaseField);
}

TEST_CASE("ideal counts and enumeration") {
    Ring A3 = make_base_ring(Field::make(3, 1));
    Ring E = make_extension_ring(Field::make(2, 1), 2);
    for (uint32_t d = 0; d <= 4; ++d) {
        uint64_t n3 = 1, n4 = 1;
        for (uint32_t j = 0; j < d; ++j) { n3 *= 3; n4 *= 4; }
        CHECK(ideal_count(A3, d) == n3);
        CHECK(ideal_count(E, d) == n4);
    }
    // every index yields a distinct monic generator of the right degree
    std::set<std::string> seen;
    for (uint64_t i = 0; i < ideal_count(E, 2); ++i) {
        ThetaPoly g = ideal_of_index(E, 2, i);
        CHECK(g.degree() == 2);
        CHECK(g.lead().is_one());
        seen.insert(g.to_string());
    }
    CHECK(seen.size() == 16);
}

TEST_CASE("prime counts over F_4 satisfy the necklace identity") {
    Ring E = make_extension_ring(Field::make(2, 1), 2);
    uint64_t counts[5] = {0, 4, 6, 20, 60};
    for (uint32_t d = 1; d <= 4; ++d) {
        auto ps = primes_of_poly_degree(E, d);
        CHECK(ps.size() == counts[d]);
        for (const ThetaPoly& p : ps) CHECK(poly_is_irreducible(p));
    }
    // sum_{d | m} d * N_d = 4^m
    for (uint32_t m = 1; m <= 4; ++m) {
        uint64_t total = 0, qm = 1;
        for (uint32_t d = 1; d <= m; ++d) {
            if (m % d == 0) total += d * counts[d];
            qm *= 4;
        }
        CHECK(total == qm);
    }
}

TEST_CASE("ideal norm is multiplicative and has degree r * deg") {
    Ring E9 = make_extension_ring(Field::make(3, 1), 2);
    Rng rng(6002);
    for (int i = 0; i < 1000; ++i) {
        ThetaPoly g = rng.monic(E9.coeff, 1 + rng.below(3));
        ThetaPoly h = rng.monic(E9.coeff, 1 + rng.below(3));
        ThetaPoly ng = ideal_norm(E9, g);
        CHECK(ng.degree() == 2 * g.degree());
        CHECK(ng.lead().is_one());
        CHECK(ideal_norm(E9, g * h) == ng * ideal_norm(E9, h));
    }
    // over the base ring the norm is the identity
    Ring A2 = make_base_ring(Field::make(2, 1));
    for (int i = 0; i < 200; ++i) {
        ThetaPoly g = rng.monic(A2.coeff, rng.below(4));
        CHECK(ideal_norm(A2, g) == g);
    }
}

TEST_CASE("splitting above base primes matches the inertia degree") {
    for (uint32_t q : {2u, 3u}) {
        Field base = Field::make(q, 1);
        Ring E = make_extension_ring(base, 2);
        for (uint32_t dp = 1; dp <= 2; ++dp) {
            uint64_t count = dp == 1 ? base.size() : base.size() * base.size();
            for (uint64_t i = 0; i < count; ++i) {
                ThetaPoly P = monic_of_index(base, dp, i);
                if (!poly_is_irreducible(P)) continue;
                uint32_t f = inertia_degree(E, P);
                CHECK(f == 2 / std::gcd(2u, dp));
                auto above = primes_above(E, P);
                CHECK(above.size() == std::gcd(2u, dp));
                ThetaPoly prod = ThetaPoly::one(E.coeff);
                ThetaPoly Pf = ThetaPoly::one(base);
                for (uint32_t j = 0; j < f; ++j) Pf = Pf * P;
                for (const ThetaPoly& pr : above) {
                    CHECK(poly_is_irreducible(pr));
                    CHECK(ideal_norm(E, pr) == Pf);
                    prod = prod * pr;
                }
                // P is unramified, so it is the plain product of the primes above
                CHECK(prod == embed_to_coeff(E, P));
            }
        }
    }
}

TEST_CASE("residue fields have the right size and reduction is a homomorphism") {
    Ring E = make_extension_ring(Field::make(2, 1), 2);
    Rng rng(6003);
    for (uint32_t d = 1; d <= 2; ++d) {
        for (const ThetaPoly& pr : primes_of_poly_degree(E, d)) {
            ResidueField rf = residue_field(E, pr);
            uint64_t want = 1;
            for (uint32_t j = 0; j < 2 * d; ++j) want *= 2;
            CHECK(rf.E.size() == want);
            CHECK(residue_reduce(rf, pr).is_zero());
            CHECK(residue_reduce(rf, ThetaPoly::theta(E.coeff)) == rf.theta_bar);
            CHECK(residue_reduce(rf, ThetaPoly::constant(E.coeff.gen())) == rf.coeff_gen_image);
            for (int i = 0; i < 60; ++i) {
                ThetaPoly x = rng.poly(E.coeff, 4);
                ThetaPoly y = rng.poly(E.coeff, 4);
                CHECK(residue_reduce(rf, x + y) == residue_reduce(rf, x) + residue_reduce(rf, y));
                CHECK(residue_reduce(rf, x * y) == residue_reduce(rf, x) * residue_reduce(rf, y));
            }
        }
    }
}

} // TEST_SUITE("rings")
