// Acceptance checks: one line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "carlgoss/formulas.hpp"
#include "util.hpp"

using namespace carlgoss;

namespace {

int failures = 0;

void report(int crit, const char* what, bool ok) {
    std::printf("criterion %2d  %-58s %s\n", crit, what, ok ? "pass" : "FAIL");
    if (!ok) ++failures;
}

std::string run_cli(const std::string& args, int* code) {
    std::string cmd = std::string(CARLGOSS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    if (!p) {
        *code = -1;
        return out;
    }
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int st = pclose(p);
    *code = WEXITSTATUS(st);
    return out;
}

// 1: zeta(1) against Log(1) at the infinite place
void criterion1() {
    bool ok = verify_taelman_K(Field::make(2, 1), 16).pass &&
              verify_taelman_K(Field::make(3, 1), 10).pass;
    report(1, "zeta(1) = Log(1) at infinity, q=2 @ t^-16, q=3 @ t^-10", ok);
}

// 2: deformed slot identities, exact
void criterion2() {
    bool ok = true;
    for (uint32_t q : {2u, 3u}) {
        VerificationReport r = verify_deformed_K(Field::make(q, 1), 5);
        ok = ok && r.pass && r.precision == "exact";
    }
    report(2, "slots of Z(1;z): sum 1/a = 1/L_m exactly, m <= 5, q in {2,3}", ok);
}

// 3: P-adic class formula with pinned cutoffs
void criterion3() {
    Field f3 = Field::make(3, 1);
    Ring A3 = make_base_ring(f3);
    bool ok = true;
    for (const char* ps : {"t", "t+1", "t^2+1"}) {
        ThetaPoly P = parse_poly(ps, f3);
        VerificationReport r = verify_padic_K(f3, P, 1);
        ok = ok && r.pass && r.precision == "P^8"; // q^(s+1) - 1 certified digits
        uint32_t D = zeta_padic(A3, 1, P, 1, 1).cutoff_D;
        ok = ok && D == lemma2_D(A3, P, 1) && (P.degree() > 1 || D == 8);
    }
    report(3, "zeta_P(1) = (1-1/P) Log(1) in A_P, q=3, to P^8", ok);
}

// 4: vanishing when the sign group collapses (q=2)
void criterion4() {
    Field f2 = Field::make(2, 1);
    Ring A2 = make_base_ring(f2);
    bool ok = true;
    for (const char* ps : {"t", "t+1", "t^2+t+1"}) {
        ZetaPadicValue v = zeta_padic(A2, 1, parse_poly(ps, f2), 4, 1);
        ok = ok && v.value.is_zero_to_prec() && v.digits == 32 && v.cutoff_D <= 11;
    }
    report(4, "q=2: zeta_P(1) = 0 to 2^5 digits for P of degree <= 2", ok);
}

// 5: trivial zeros on both sides
void criterion5() {
    Field f2 = Field::make(2, 1);
    Field f3 = Field::make(3, 1);
    Ring A2 = make_base_ring(f2);
    Ring A3 = make_base_ring(f3);
    Ring F4 = make_extension_ring(f2, 2);
    bool ok = true;
    for (int64_t n : {-1, -2}) ok = ok && zeta_poly(A2, n, 1).value.eval_z1().is_zero();
    for (int64_t n : {-2, -4}) ok = ok && zeta_poly(A3, n, 1).value.eval_z1().is_zero();
    for (int64_t n : {-1, -2}) ok = ok && zeta_poly(F4, n, 1).value.eval_z1().is_zero();
    ZetaPadicValue z3 = zeta_padic(A3, 2, ThetaPoly::theta(f3), 2, 1);
    ok = ok && z3.value.is_zero_to_prec() && z3.digits == 27;
    ZetaPadicValue z2 = zeta_padic(A2, 1, parse_poly("t^2+t+1", f2), 2, 1);
    ok = ok && z2.value.is_zero_to_prec() && z2.digits == 8;
    report(5, "trivial zeros: zeta(-k(q-1)) = 0 exactly; zeta_P(q-1) = 0", ok);
}

// 6: z-degree bounds with the overshoot assertion
void criterion6() {
    Ring rings[] = {make_base_ring(Field::make(2, 1)), make_base_ring(Field::make(3, 1)),
                    make_extension_ring(Field::make(2, 1), 2)};
    bool ok = true;
    try {
        for (const Ring& R : rings)
            for (int64_t n = 0; n >= -6; --n) {
                ZetaPolyValue v = zeta_poly(R, n, 1);
                ok = ok && v.value.z_degree() <= v.bound;
            }
    } catch (const DegreeBoundViolated&) {
        ok = false;
    }
    report(6, "deg_z Z(n;z) within bounds, n in 0..-6, three rings", ok);
}

// 7: tail valuation bound for the truncated P-adic sums
void criterion7() {
    bool ok = true;
    for (uint32_t q : {2u, 3u}) {
        Field f = Field::make(q, 1);
        Ring A = make_base_ring(f);
        for (uint32_t dp = 1; dp <= 2; ++dp) {
            for (const ThetaPoly& P : primes_of_poly_degree(A, dp)) {
                for (uint32_t s : {0u, 1u}) {
                    uint32_t D = lemma2_D(A, P, s);
                    int64_t target = 1;
                    for (uint32_t j = 0; j <= s; ++j) target *= (int64_t)q;
                    for (uint32_t d = D; d <= D + 2; ++d)
                        ok = ok && power_sum_padic(A, d, 1, P, target + 2, 1).val() >= target;
                }
            }
        }
    }
    report(7, "v_P(U_{P,d}(1)) >= q^(s+1) for d in [D(s), D(s)+2]", ok);
}

// 8: invariant factors of C(O/prime), plain and deformed
void criterion8() {
    Ring rings[] = {make_base_ring(Field::make(2, 1)), make_base_ring(Field::make(3, 1)),
                    make_extension_ring(Field::make(2, 1), 2),
                    make_extension_ring(Field::make(3, 1), 2)};
    bool ok = true;
    for (const Ring& R : rings) {
        uint32_t max_dp = 4 / R.r; // deg of the norm is r * deg(prime)
        for (uint32_t dp = 1; dp <= max_dp; ++dp) {
            for (const ThetaPoly& pr : primes_of_poly_degree(R, dp)) {
                ThetaPoly norm = ideal_norm(R, pr);
                ActionMatrix am = action_matrix(R, pr);
                InvariantFactors inv = invariant_factors_A(am);
                ok = ok && inv.cyclic() &&
                     inv.fitting() == BiPoly::from_theta(norm - ThetaPoly::one(R.base));
                InvariantFactors dev = invariant_factors_deformed(am);
                BiPoly want = BiPoly::from_theta(norm) -
                              BiPoly::from_scalar(R.base, R.base.one())
                                  .mul_z(ThetaPoly::monomial(R.base.one(), (uint32_t)norm.degree()));
                ok = ok && dev.fitting() == want &&
                     dev.fitting().eval_z1() == inv.fitting().eval_z1();
            }
        }
    }
    report(8, "fitting generators norm-1 and norm-z^deg, deg norm <= 4", ok);
}

// 9: q=2 period against (t^2+t) Log(1)
void criterion9() {
    report(9, "q=2 period equals (t^2+t) Log(1) to t^-12",
           verify_period_q2(Field::make(2, 1), 12).pass);
}

// 10: recovering the acting scalar from the deformed determinant
void criterion10() {
    Field f3 = Field::make(3, 1);
    Ring A3 = make_base_ring(f3);
    bool ok = true;
    for (const char* bs : {"1", "t", "t^2+1"}) {
        ThetaPoly b = parse_poly(bs, f3);
        auto unit = deformed_action(b, ThetaPoly::one(f3), 3, std::max<int64_t>(b.degree(), 0));
        TatePoly<ThetaPoly> beta = stark_beta(A3, {unit}, 20, 6);
        ok = ok && tate_to_string(beta) == b.to_string();
    }
    report(10, "beta recovery from det(M) = beta Z(1;z), b in {1,t,t^2+1}", ok);
}

// 11: randomized invariants (>= 1000 cases each) and CLI determinism
void criterion11() {
    cgtest::Rng rng(11011);
    Field f2 = Field::make(2, 1);
    Field f3 = Field::make(3, 1);
    bool ok = true;

    // field automorphism and inverse round-trips
    Field f9 = Field::make(3, 2);
    for (int i = 0; i < 1000; ++i) {
        FFElem x = rng.elem(f9), y = rng.elem(f9);
        ok = ok && ff_frobenius(x + y, 1, 3) == ff_frobenius(x, 1, 3) + ff_frobenius(y, 1, 3);
        ok = ok && ff_frobenius(x * y, 1, 3) == ff_frobenius(x, 1, 3) * ff_frobenius(y, 1, 3);
        if (!x.is_zero()) ok = ok && (x * x.inv()).is_one();
    }

    // module map is additive and multiplicative in the acting polynomial
    for (int i = 0; i < 1000; ++i) {
        Field f = i % 2 ? f3 : f2;
        uint64_t q = f.size();
        ThetaPoly a = rng.poly(f, 3), b = rng.poly(f, 3), x = rng.poly(f, 3);
        ok = ok && carlitz_action(a + b, x, q) ==
                       carlitz_action(a, x, q) + carlitz_action(b, x, q);
        ok = ok && carlitz_action(a * b, x, q) == carlitz_action(a, carlitz_action(b, x, q), q);
    }

    // deformation specializes to the plain action at z = 1
    for (int i = 0; i < 1000; ++i) {
        Field f = i % 2 ? f3 : f2;
        ThetaPoly a = rng.nonzero_poly(f, 4), x = rng.poly(f, 3);
        ok = ok && deformed_action(a, x, f.size(), a.degree()).eval_z1() ==
                       carlitz_action(a, x, f.size());
    }

    // exp/log inverse pairs preserve valuations on the convergence domain
    for (int i = 0; i < 1000; ++i) {
        Field f = i % 2 ? f3 : f2;
        int64_t v = 1 + (int64_t)rng.below(3);
        LaurentSeries x = rng.laurent(f, v, v + 9);
        LaurentSeries lg = carlitz_log_inf(x, v + 9);
        ok = ok && lg.v_inf() == v;
        ok = ok && agree_to_common_prec(carlitz_exp_inf(lg, v + 9), x);
    }
    for (int i = 0; i < 1000; ++i) {
        ThetaPoly P = i % 2 ? ThetaPoly::theta(f3) : parse_poly("t^2+1", f3);
        ThetaPoly a = rng.nonzero_poly(f3, 4);
        if ((a % P).is_zero()) continue;
        PAdicElem x = PAdicElem::from_poly(a, P, 8).mul_P_power(1 + (int64_t)rng.below(2));
        PAdicElem lg = carlitz_log_padic(x, 8);
        ok = ok && lg.val() == x.val();
        ok = ok && carlitz_exp_padic(lg, 8) == x.reduced(8);
    }
    report(11, "randomized invariants, 1000 cases per family", ok);

    auto t0 = std::chrono::steady_clock::now();
    int c1 = 0, c2 = 0, c8 = 0;
    std::string o1 = run_cli("verify all --level quick --workers 1", &c1);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string o2 = run_cli("verify all --level quick --workers 2", &c2);
    std::string o8 = run_cli("verify all --level quick --workers 8", &c8);
    bool det = c1 == 0 && c2 == 0 && c8 == 0 && !o1.empty() && o1 == o2 && o1 == o8;
    report(11, "quick suite byte-identical across 1/2/8 workers", det);
    std::printf("              quick suite wall time: %.1fs\n", secs);
    report(11, "quick suite under two minutes", secs < 120.0);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (failures) {
        std::printf("%d acceptance check(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria pass\n");
    return 0;
}
