#include <doctest.h>

#include "carlgoss/field.hpp"
#include "util.hpp"

using namespace carlgoss;
using cgtest::Rng;

TEST_SUITE("field") {

TEST_CASE("construction and interning") {
    Field f9 = Field::make(3, 2);
    CHECK(f9.p() == 3);
    CHECK(f9.k() == 2);
    CHECK(f9.size() == 9);
    Field again = Field::make(3, 2);
    CHECK(f9 == again);
    CHECK(Field::make(2, 1) != f9);
    CHECK_THROWS_AS(Field::make(4, 1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(Field::make(2, 2, {0, 0, 1}), ReducibleModulus); // u^2
}

TEST_CASE("element indexing round-trips everywhere") {
    for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
        Field f = Field::make(p, k);
        for (uint64_t i = 0; i < f.size(); ++i) {
            FFElem x = f.element(i);
            CHECK(x.index() == i);
            std::vector<uint32_t> ds(x.digits().begin(), x.digits().end());
            CHECK(f.from_digits(ds) == x);
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(1001);
    std::vector<Field> fields = {Field::make(2, 1), Field::make(2, 2), Field::make(3, 1),
                                 Field::make(3, 2), Field::make(5, 1)};
    for (int i = 0; i < 1000; ++i) {
        Field f = fields[rng.below(fields.size())];
        FFElem a = rng.elem(f), b = rng.elem(f), c = rng.elem(f);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a + (-a) == f.zero());
    }
}

TEST_CASE("inverses") {
    Rng rng(1002);
    std::vector<Field> fields = {Field::make(2, 2), Field::make(3, 2), Field::make(5, 1)};
    for (int i = 0; i < 1000; ++i) {
        Field f = fields[rng.below(fields.size())];
        FFElem a = rng.nonzero(f);
        CHECK(a * a.inv() == f.one());
    }
    CHECK_THROWS_AS(Field::make(3, 1).zero().inv(), DivisionByZero);
}

TEST_CASE("frobenius is an F_p-algebra endomorphism") {
    Rng rng(1003);
    std::vector<Field> fields = {Field::make(2, 2), Field::make(2, 3), Field::make(3, 2)};
    for (int i = 0; i < 1000; ++i) {
        Field f = fields[rng.below(fields.size())];
        FFElem a = rng.elem(f), b = rng.elem(f);
        uint32_t e = 1 + (uint32_t)rng.below(3);
        CHECK(ff_frobenius(a + b, e, f.p()) == ff_frobenius(a, e, f.p()) + ff_frobenius(b, e, f.p()));
        CHECK(ff_frobenius(a * b, e, f.p()) == ff_frobenius(a, e, f.p()) * ff_frobenius(b, e, f.p()));
        // x^(p^k) = x on F_{p^k}
        CHECK(ff_frobenius(a, f.k(), f.p()) == a);
    }
}

TEST_CASE("subfield embedding is a ring homomorphism") {
    Field f3 = Field::make(3, 1), f9 = Field::make(3, 2);
    FFElem g = subfield_generator_image(f3, f9);
    Rng rng(1004);
    for (int i = 0; i < 1000; ++i) {
        FFElem a = rng.elem(f3), b = rng.elem(f3);
        FFElem ea = embed_elem(a, f9, g), eb = embed_elem(b, f9, g);
        CHECK(embed_elem(a + b, f9, g) == ea + eb);
        CHECK(embed_elem(a * b, f9, g) == ea * eb);
    }
    CHECK(embed_elem(f3.one(), f9, g) == f9.one());
    // the image of F_4 inside F_16 is fixed by the square of Frobenius
    Field f4 = Field::make(2, 2), f16 = Field::make(2, 4);
    FFElem g4 = subfield_generator_image(f4, f16);
    for (uint64_t i = 0; i < f4.size(); ++i) {
        FFElem im = embed_elem(f4.element(i), f16, g4);
        CHECK(ff_frobenius(im, 2, 2) == im);
    }
}

} // TEST_SUITE
