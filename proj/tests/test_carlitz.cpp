#include <doctest.h>

#include "carlgoss/carlitz.hpp"
#include "util.hpp"

using namespace carlgoss;
using cgtest::Rng;

TEST_SUITE("carlitz") {

TEST_CASE("goss coefficients of t^2+1 over F_3") {
    Field f3 = Field::make(3, 1);
    ThetaPoly a = parse_poly("t^2+1", f3);
    auto gs = goss_coeffs(a);
    REQUIRE(gs.size() == 3);
    CHECK(gs[0] == a);
    CHECK(gs[1] == parse_poly("t^3+t", f3));
    CHECK(gs[2].is_one());
    // the middle coefficient of an irreducible P vanishes mod P
    CHECK((gs[1] % a).is_zero());
}

TEST_CASE("goss recursion holds exactly") {
    Rng rng(5001);
    std::vector<Field> fields = {Field::make(2, 1), Field::make(3, 1)};
    for (int i = 0; i < 1000; ++i) {
        Field f = fields[rng.below(fields.size())];
        uint64_t q = f.size();
        ThetaPoly a = rng.nonzero_poly(f, 6);
        auto gs = goss_coeffs(a);
        REQUIRE((int64_t)gs.size() == a.degree() + 1);
        CHECK(gs[0] == a);
        CHECK(gs.back() == ThetaPoly::constant(a.lead()));
        ThetaPoly t = ThetaPoly::theta(f);
        for (size_t k = 1; k < gs.size(); ++k) {
            uint64_t qk = 1;
            for (size_t j = 0; j < k; ++j) qk *= q;
            ThetaPoly lhs = gs[k] * (ThetaPoly::monomial(f.one(), (uint32_t)qk) - t);
            CHECK(lhs == poly_qpow(gs[k - 1], q) - gs[k - 1]);
        }
    }
}

TEST_CASE("prime coefficients: [P,0]=P, [P,d]=1, middle ones divisible by P") {
    for (uint32_t qk : {2u, 3u}) {
        Field f = Field::make(qk, 1);
        for (uint32_t d = 1; d <= 4; ++d) {
            for (uint64_t i = 0; i < monic_count(f, d); ++i) {
                ThetaPoly P = monic_of_index(f, d, i);
                if (!poly_is_irreducible(P)) continue;
                auto gs = goss_coeffs(P);
                CHECK(gs[0] == P);
                CHECK(gs[d].is_one());
                for (uint32_t j = 1; j < d; ++j) CHECK((gs[j] % P).is_zero());
            }
        }
    }
}

TEST_CASE("module homomorphism: C_{a+b} and C_{ab}") {
    Rng rng(5002);
    std::vector<Field> fields = {Field::make(2, 1), Field::make(3, 1)};
    for (int i = 0; i < 1000; ++i) {
        Field f = fields[rng.below(fields.size())];
        uint64_t q = f.size();
        ThetaPoly a = rng.poly(f, 4), b = rng.poly(f, 4);
        ThetaPoly x = rng.poly(f, 3);
        CHECK(carlitz_action(a + b, x, q) ==
              carlitz_action(a, x, q) + carlitz_action(b, x, q));
        CHECK(carlitz_action(a * b, x, q) ==
              carlitz_action(a, carlitz_action(b, x, q), q));
        // F_q-linearity in the carrier
        FFElem c = rng.elem(f);
        CHECK(carlitz_action(a, x * c, q) == carlitz_action(a, x, q) * c);
    }
}

TEST_CASE("deformed action specializes to C at z=1") {
    Rng rng(5003);
    std::vector<Field> fields = {Field::make(2, 1), Field::make(3, 1)};
    for (int i = 0; i < 1000; ++i) {
        Field f = fields[rng.below(fields.size())];
        uint64_t q = f.size();
        ThetaPoly a = rng.nonzero_poly(f, 4);
        ThetaPoly x = rng.poly(f, 3);
        auto dz = deformed_action(a, x, q, a.degree());
        CHECK(dz.eval_z1() == carlitz_action(a, x, q));
    }
}

TEST_CASE("deformed action example over F_2") {
    Field f2 = Field::make(2, 1);
    auto dz = deformed_action(parse_poly("t^2", f2), ThetaPoly::one(f2), 2, 3);
    CHECK(tate_to_string(dz) == "t^2+(t^2+t)*z+z^2");
    auto tor = carlitz_action(parse_poly("t^2+t", f2), ThetaPoly::one(f2), 2);
    CHECK(tor.is_zero()); // 1 is (t^2+t)-torsion when q=2
}

TEST_CASE("factorial valuations match the closed forms") {
    for (uint32_t qk : {2u, 3u}) {
        Field f = Field::make(qk, 1);
        for (uint32_t d : {1u, 2u}) {
            // count P-divisions directly against the formulas
            ThetaPoly P = d == 1 ? ThetaPoly::theta(f)
                                 : (qk == 2 ? parse_poly("t^2+t+1", f) : parse_poly("t^2+1", f));
            auto direct = [&](ThetaPoly v) {
                int64_t n = 0;
                while (true) {
                    auto [quot, rem] = poly_divmod(v, P);
                    if (!rem.is_zero()) break;
                    v = quot;
                    ++n;
                }
                return n;
            };
            for (uint32_t i = 1; i <= 8; ++i) {
                CHECK(direct(carlitz_L(f, i)) == valP_L(i, d));
                if (i <= 6) CHECK(direct(carlitz_D(f, i)) == valP_D(i, d, qk));
            }
        }
    }
}

TEST_CASE("log at infinity: frozen digits and exp inverse") {
    Field f2 = Field::make(2, 1);
    LaurentSeries one = LaurentSeries::from_poly(ThetaPoly::one(f2), 64);
    LaurentSeries lg = carlitz_log_inf(one, 7);
    CHECK(lg.v_inf() == 0);
    // Log(1) = sum 1/L_i = 1 + t^-2 + t^-3 + t^-4 + t^-5 + ... over F_2
    int expected[7] = {1, 0, 1, 1, 1, 1, 0};
    for (int64_t v = 0; v < 7; ++v) CHECK(lg.coeff(v).index() == (uint64_t)expected[v]);
    LaurentSeries back = carlitz_exp_inf(lg, 7);
    CHECK(agree_to_common_prec(back, one));
}

TEST_CASE("exp/log at infinity are inverse isometries on the domain") {
    Rng rng(5004);
    std::vector<Field> fields = {Field::make(2, 1), Field::make(3, 1)};
    for (int i = 0; i < 1000; ++i) {
        Field f = fields[rng.below(fields.size())];
        int64_t v = 1 + (int64_t)rng.below(3);
        LaurentSeries x = rng.laurent(f, v, v + 10);
        LaurentSeries ex = carlitz_exp_inf(x, v + 10);
        LaurentSeries lx = carlitz_log_inf(x, v + 10);
        CHECK(ex.v_inf() == v);
        CHECK(lx.v_inf() == v);
        CHECK(agree_to_common_prec(carlitz_log_inf(ex, v + 10), x));
        CHECK(agree_to_common_prec(carlitz_exp_inf(lx, v + 10), x));
    }
    CHECK_THROWS_AS(
        carlitz_log_inf(LaurentSeries::from_poly(parse_poly("t^2", Field::make(2, 1)), 8), 8),
        OutsideDomain);
}

TEST_CASE("P-adic log preserves valuation; exp inverts it") {
    Rng rng(5005);
    Field f3 = Field::make(3, 1);
    std::vector<ThetaPoly> primes = {ThetaPoly::theta(f3), parse_poly("t^2+1", f3)};
    for (int i = 0; i < 1000; ++i) {
        const ThetaPoly& P = primes[rng.below(primes.size())];
        ThetaPoly a = rng.nonzero_poly(f3, 4);
        int64_t v = 1 + (int64_t)rng.below(2);
        if ((a % P).is_zero()) continue;
        PAdicElem x = PAdicElem::from_poly(a, P, 8).mul_P_power(v);
        PAdicElem lg = carlitz_log_padic(x, 8);
        CHECK(lg.val() == v);
        CHECK(carlitz_exp_padic(lg, 8) == x.reduced(8));
    }
}

TEST_CASE("iwasawa log: frozen values, torsion kernel, A-linearity") {
    Field f3 = Field::make(3, 1);
    ThetaPoly P = ThetaPoly::theta(f3);
    PAdicElem one3 = PAdicElem::from_poly(ThetaPoly::one(f3), P, 16);
    PAdicElem iw = iwasawa_log(one3, 2);
    CHECK(iw.val() == 1);
    CHECK(iw.residue(2) == parse_poly("2*t", f3));

    // q=2: 1 is torsion, so the log vanishes identically
    Field f2 = Field::make(2, 1);
    ThetaPoly P2 = parse_poly("t^2+t+1", f2);
    PAdicElem one2 = PAdicElem::from_poly(ThetaPoly::one(f2), P2, 16);
    CHECK(iwasawa_log(one2, 4).is_zero_to_prec());

    Rng rng(5006);
    for (int i = 0; i < 200; ++i) {
        ThetaPoly a = rng.poly(f3, 3);
        ThetaPoly x = rng.poly(f3, 3);
        PAdicElem px = PAdicElem::from_poly(x, P, 24);
        PAdicElem lx = iwasawa_log(px, 5);
        PAdicElem lax = iwasawa_log(carlitz_action(a, px, 3), 5);
        PAdicElem want = PAdicElem::from_poly(a, P, 6) * lx;
        CHECK((lax - want).is_zero_to_prec());
    }
}

TEST_CASE("period for q=2: frozen leading digits and the (t^2+t) Log(1) identity") {
    Field f2 = Field::make(2, 1);
    LaurentSeries per = carlitz_period_q2(f2, 12);
    CHECK(per.v_inf() == -2);
    int expected[9] = {1, 1, 1, 0, 0, 0, 1, 0, 0}; // v = -2..6
    for (int64_t v = -2; v <= 6; ++v) CHECK(per.coeff(v).index() == (uint64_t)expected[v + 2]);
    LaurentSeries one = LaurentSeries::from_poly(ThetaPoly::one(f2), 64);
    LaurentSeries lg = carlitz_log_inf(one, 14);
    CHECK(agree_to_common_prec(per, laurent_mul_poly(lg, parse_poly("t^2+t", f2))));
    CHECK_THROWS_AS(carlitz_period_q2(Field::make(3, 1), 8), WrongCharacteristic);
}

TEST_CASE("torsion points land in the convergence domain (q=2)") {
    Field f2 = Field::make(2, 1);
    // the (t^2+t)-torsion inside A is {0, 1, t, t+1}; all have v_inf > -2
    ThetaPoly tor = parse_poly("t^2+t", f2);
    for (const char* s : {"0", "1", "t", "t+1"}) {
        ThetaPoly x = parse_poly(s, f2);
        CHECK(carlitz_action(tor, x, 2).is_zero());
        if (!x.is_zero()) CHECK(LaurentSeries::from_poly(x, 8).v_inf() > -2);
    }
    CHECK(!carlitz_action(tor, parse_poly("t^2", f2), 2).is_zero());
}

TEST_CASE("deformed exp/log in the Tate algebra") {
    Field f3 = Field::make(3, 1);
    LaurentSeries one = LaurentSeries::from_poly(ThetaPoly::one(f3), 64);
    auto lz = carlitz_log_z(one, 4, 12);
    // slot m of Log_z(1) is 1/L_m
    for (int64_t m = 0; m <= 4; ++m) {
        LaurentSeries li = laurent_div_poly(LaurentSeries::from_poly(ThetaPoly::one(f3), 40),
                                            carlitz_L(f3, (uint32_t)m), 12);
        CHECK(agree_to_common_prec(lz.coeff(m), li));
    }
    auto back = carlitz_exp_z(lz, 12);
    CHECK(agree_to_common_prec(back.coeff(0), one));
    for (int64_t m = 1; m <= 4; ++m) CHECK(back.coeff(m).is_zero_to_prec());

    // exp_z(b Log_z(x)) = deformed action of b on x, randomized
    Rng rng(5007);
    for (int i = 0; i < 200; ++i) {
        ThetaPoly b = rng.nonzero_poly(f3, 2);
        LaurentSeries x = rng.laurent(f3, 1 + (int64_t)rng.below(2), 10);
        auto lx = carlitz_log_z(x, 4, 10);
        TatePoly<LaurentSeries> blx = lx;
        // multiply every slot by b (A acts through its image in K_inf)
        std::vector<LaurentSeries> slots;
        for (int64_t m = 0; m <= lx.z_max(); ++m) slots.push_back(laurent_mul_poly(lx.coeff(m), b));
        blx = TatePoly<LaurentSeries>(slots, lx.z_max());
        auto lhs = carlitz_exp_z(blx, 10);
        auto rhs = deformed_action(b, x, 3, 4);
        for (int64_t m = 0; m <= 4; ++m) CHECK(agree_to_common_prec(lhs.coeff(m), rhs.coeff(m)));
    }
}

} // TEST_SUITE
