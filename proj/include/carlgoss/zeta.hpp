#ifndef CARLGOSS_ZETA_HPP
#define CARLGOSS_ZETA_HPP

#include <cstdint>

#include "carlgoss/laurent.hpp"
#include "carlgoss/padic.hpp"
#include "carlgoss/rings.hpp"
#include "carlgoss/tate.hpp"

namespace carlgoss {

// Sum of base-q digits.
uint32_t ell_q(uint64_t m, uint64_t q);

// Resolve a requested worker count: 0 consults CARLGOSS_WORKERS, then falls
// back to 1.  Worker count never changes any computed value.
uint32_t resolve_workers(uint32_t requested);

// Power sums over ideals, indexed by generator degree m (norm degree r*m).
// All enumeration runs in canonical index order; parallel reduction is over
// fixed-size index chunks combined in chunk order, so results do not depend
// on the worker count.

// sum over monic g of degree m of n(g)^s, s >= 0 (the exact value U_{rm}(-s)).
ThetaPoly power_sum_exact(const Ring& R, uint32_t m, uint32_t s, uint32_t workers);
// Same restricted to ideals coprime to P (exact U_{P,rm}(-s)).
ThetaPoly power_sum_padic_exact(const Ring& R, uint32_t m, uint32_t s, const ThetaPoly& P,
                                uint32_t workers);
// sum over monic g of degree m of n(g)^{-n} at the infinite place, n >= 1,
// to absolute precision prec (each term has valuation exactly n*r*m).
LaurentSeries power_sum_inf(const Ring& R, uint32_t m, int64_t n, int64_t prec, uint32_t workers);
// sum over monic g of degree m coprime to P of n(g)^{-n} in A_P with N
// digits (U_{P,rm}(n), n >= 1).
PAdicElem power_sum_padic(const Ring& R, uint32_t m, int64_t n, const ThetaPoly& P, int64_t N,
                          uint32_t workers);

// Z(n;z) for n <= 0: exact polynomial in z graded by norm degree.  Computes
// every degree up to the proven bound and asserts vanishing for two degrees
// past it; DegreeBoundViolated means the bound failed (bug detector).
struct ZetaPolyValue {
    TatePoly<ThetaPoly> value;
    int64_t n = 0;
    int64_t bound = 0; // proven deg_z bound r*(1 + ell_q(-n)) - 1
};
ZetaPolyValue zeta_poly(const Ring& R, int64_t n, uint32_t workers);

// zeta(n) at the infinite place for n >= 1: sums norm degrees d with
// n*d < prec; the omitted tail has valuation >= prec termwise.
struct ZetaInfValue {
    LaurentSeries value;
    int64_t n = 0;
    int64_t prec = 0;
    int64_t cutoff_d = 0; // first omitted norm degree
};
ZetaInfValue zeta_inf(const Ring& R, int64_t n, int64_t prec, uint32_t workers);

// Lemma-2 truncation degree D(s) for the P-adic sums.
uint32_t lemma2_D(const Ring& R, const ThetaPoly& P, uint32_t s);

// zeta_P(n).  For n >= 1 (requires n <= q^s - 1): sums norm degrees
// d < D(s); the omitted tail has valuation >= q^{s+1} = certified digits.
// For n <= 0: exact via the Euler product over primes above P, evaluated at
// z = 1 and embedded with the same reported precision.
struct ZetaPadicValue {
    PAdicElem value;
    int64_t n = 0;
    uint32_t s = 0;
    uint32_t cutoff_D = 0;
    int64_t digits = 0; // certified q^{s+1}
    bool exact = false;
};
ZetaPadicValue zeta_padic(const Ring& R, int64_t n, const ThetaPoly& P, uint32_t s, uint32_t workers);

// Z_P(n;z) for n <= 0: zeta_poly times the local factors
// (1 - n(prime)^{-n} z^{deg n(prime)}) over the primes above P.
TatePoly<ThetaPoly> euler_transfer(const Ring& R, int64_t n, const ThetaPoly& P, uint32_t workers);

// Z(n;z) at the infinite place for n >= 1: slot d carries U_d(n) to the
// given precision, for d <= z_max.
TatePoly<LaurentSeries> zeta_z_inf(const Ring& R, int64_t n, int64_t z_max, int64_t prec,
                                   uint32_t workers);

} // namespace carlgoss

#endif
