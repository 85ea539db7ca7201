#include <doctest.h>

#include "carlgoss/laurent.hpp"
#include "util.hpp"

using namespace carlgoss;
using cgtest::Rng;

TEST_SUITE("laurent") {

TEST_CASE("embedding and basic accessors") {
    Field f3 = Field::make(3, 1);
    ThetaPoly a = parse_poly("t^2+2*t", f3);
    LaurentSeries x = LaurentSeries::from_poly(a, 5);
    CHECK(x.v_inf() == -2);
    CHECK(x.sgn().is_one());
    CHECK(x.coeff(-2).is_one());
    CHECK(x.coeff(-1) == f3.from_int(2));
    CHECK(x.coeff(0).is_zero());
    CHECK(x.coeff(4).is_zero());
    CHECK_THROWS_AS(x.coeff(5), error);
    LaurentSeries z = LaurentSeries::zero(f3, 7);
    CHECK(z.is_zero_to_prec());
    CHECK(z.order() == 7);
    CHECK(z.v_inf() == 7);
}

TEST_CASE("valuation is additive under multiplication") {
    Rng rng(3001);
    std::vector<Field> fields = {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)};
    for (int i = 0; i < 1000; ++i) {
        Field f = fields[rng.below(fields.size())];
        int64_t va = (int64_t)rng.below(9) - 4, vb = (int64_t)rng.below(9) - 4;
        LaurentSeries a = rng.laurent(f, va, va + 6);
        LaurentSeries b = rng.laurent(f, vb, vb + 6);
        LaurentSeries ab = a * b;
        CHECK(ab.v_inf() == va + vb);
        CHECK(ab.sgn() == a.sgn() * b.sgn());
        // inverse undoes, to the precision the rules keep
        LaurentSeries back = ab * b.inv();
        CHECK(agree_to_common_prec(back, a));
    }
}

TEST_CASE("add is commutative and truncation-consistent") {
    Rng rng(3002);
    Field f3 = Field::make(3, 1);
    for (int i = 0; i < 1000; ++i) {
        LaurentSeries a = rng.laurent(f3, (int64_t)rng.below(5) - 2, 8);
        LaurentSeries b = rng.laurent(f3, (int64_t)rng.below(5) - 2, 8);
        LaurentSeries c = rng.laurent(f3, (int64_t)rng.below(5) - 2, 8);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a - a == LaurentSeries::zero(f3, a.prec()));
        CHECK(agree_to_common_prec((a + b).truncated(5), a.truncated(5) + b.truncated(5)));
    }
}

TEST_CASE("div_poly inverts mul_poly") {
    Rng rng(3003);
    std::vector<Field> fields = {Field::make(2, 1), Field::make(3, 1)};
    for (int i = 0; i < 1000; ++i) {
        Field f = fields[rng.below(fields.size())];
        LaurentSeries a = rng.laurent(f, (int64_t)rng.below(5) - 2, 9);
        ThetaPoly b = rng.nonzero_poly(f, 4);
        LaurentSeries q = laurent_div_poly(a, b, 9);
        CHECK(agree_to_common_prec(laurent_mul_poly(q, b), a));
    }
}

TEST_CASE("frobenius scales exponents") {
    Field f2 = Field::make(2, 1);
    LaurentSeries x = LaurentSeries::from_coeffs(f2, -1, 3, {f2.one(), f2.zero(), f2.one(), f2.one()});
    // x = t + 1/t + 1/t^2; x^2 = t^2 + 1/t^2 + 1/t^4 over F_2
    LaurentSeries sq = x.frobenius(1, 2);
    CHECK(sq.v_inf() == -2);
    CHECK(sq.coeff(-2).is_one());
    CHECK(sq.coeff(-1).is_zero());
    CHECK(sq.coeff(0).is_zero());
    CHECK(sq.coeff(2).is_one());
    CHECK(agree_to_common_prec(sq, x * x)); // x*x keeps less absolute precision
    Rng rng(3004);
    for (int i = 0; i < 1000; ++i) {
        LaurentSeries a = rng.laurent(f2, (int64_t)rng.below(4) - 2, 6);
        CHECK(agree_to_common_prec(a.frobenius(1, 2), a * a));
    }
}

TEST_CASE("shift is exact") {
    Field f3 = Field::make(3, 1);
    LaurentSeries x = LaurentSeries::from_poly(ThetaPoly::one(f3), 4);
    LaurentSeries s = x.shifted(3);
    CHECK(s.v_inf() == 3);
    CHECK(s.prec() == 7);
    CHECK(s.coeff(3).is_one());
}

} // TEST_SUITE
