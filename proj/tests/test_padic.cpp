#include <doctest.h>

#include "carlgoss/padic.hpp"
#include "util.hpp"

using namespace carlgoss;
using cgtest::Rng;

TEST_SUITE("padic") {

TEST_CASE("valuation of exact polynomials") {
    Field f3 = Field::make(3, 1);
    ThetaPoly P = parse_poly("t^2+1", f3);
    Rng rng(4001);
    for (int i = 0; i < 1000; ++i) {
        int64_t j = (int64_t)rng.below(4);
        ThetaPoly u = rng.nonzero_poly(f3, 5);
        if ((u % P).is_zero()) continue; // want a P-adic unit
        ThetaPoly x = u * P.pow((uint64_t)j);
        PAdicElem e = PAdicElem::from_poly(x, P, 6);
        CHECK(e.val() == j);
        CHECK(!e.is_zero_to_prec());
        CHECK((e.unit() % P) != ThetaPoly::zero(f3));
        CHECK(e.residue(j + 2) == x % P.pow((uint64_t)j + 2));
    }
}

TEST_CASE("arithmetic: valuations add, units multiply") {
    Field f2 = Field::make(2, 1);
    ThetaPoly P = parse_poly("t^2+t+1", f2);
    Rng rng(4002);
    for (int i = 0; i < 1000; ++i) {
        ThetaPoly a = rng.nonzero_poly(f2, 6), b = rng.nonzero_poly(f2, 6);
        if ((a % P).is_zero() || (b % P).is_zero()) continue;
        PAdicElem ea = PAdicElem::from_poly(a, P, 8);
        PAdicElem eb = PAdicElem::from_poly(b, P, 8);
        PAdicElem prod = ea * eb;
        CHECK(prod.val() == 0);
        CHECK(prod.residue(8) == (a * b) % P.pow(8));
        CHECK((ea + eb) - eb == ea.reduced((ea + eb).abs_prec()));
    }
}

TEST_CASE("inversion and powers") {
    Field f3 = Field::make(3, 1);
    ThetaPoly P = ThetaPoly::theta(f3);
    Rng rng(4003);
    for (int i = 0; i < 500; ++i) {
        ThetaPoly a = rng.nonzero_poly(f3, 5);
        if (a.coeff(0).is_zero()) continue; // unit at P = t
        PAdicElem e = PAdicElem::from_poly(a, P, 10);
        PAdicElem one = PAdicElem::from_poly(ThetaPoly::one(f3), P, 10);
        CHECK(e * e.inv() == one);
        CHECK(e.pow(3) == e * e * e);
        CHECK(e.frobenius(1, 3).reduced(e.pow(3).abs_prec()) == e.pow(3));
    }
}

TEST_CASE("zero handling and precision") {
    Field f3 = Field::make(3, 1);
    ThetaPoly P = ThetaPoly::theta(f3);
    PAdicElem z = PAdicElem::zero(P, 5);
    CHECK(z.is_zero_to_prec());
    CHECK(z.val() == 5); // the absolute bound
    CHECK(z.prec() == 0);
    PAdicElem x = PAdicElem::from_poly(ThetaPoly::one(f3), P, 5);
    CHECK(x + z == x);
    CHECK((x - x).is_zero_to_prec());
    CHECK((x - x).val() == 5);
    // from_residue caps absolute precision
    PAdicElem r = PAdicElem::from_residue(parse_poly("t^2+t", f3), P, 4);
    CHECK(r.val() == 1);
    CHECK(r.abs_prec() == 4);
    CHECK(r.prec() == 3);
    CHECK_THROWS_AS(z.inv(), InvertZero);
}

TEST_CASE("mul_P_power shifts exactly") {
    Field f2 = Field::make(2, 1);
    ThetaPoly P = parse_poly("t+1", f2);
    PAdicElem x = PAdicElem::from_poly(parse_poly("t", f2), P, 6);
    PAdicElem up = x.mul_P_power(3);
    CHECK(up.val() == 3);
    CHECK(up.unit() == x.unit());
    CHECK(up.mul_P_power(-3) == x);
}

TEST_CASE("flat residue model divides by P exactly") {
    Field f3 = Field::make(3, 1);
    Field f9 = Field::make(3, 2);
    ThetaPoly P = parse_poly("t^2+1", f3);
    ThetaPoly Pimg = P.map_coeffs(f9, subfield_generator_image(f3, f9));
    Rng rng(4004);
    for (int i = 0; i < 500; ++i) {
        ThetaPoly v = rng.poly(f9, 6);
        PadicResidue x(v * Pimg, Pimg, 6);
        PadicResidue d = x.div_P_exact(1);
        CHECK(d.prec() == 5);
        CHECK(d.value() == (v % Pimg.pow(5)));
    }
}

} // TEST_SUITE
