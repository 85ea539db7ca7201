#include "carlgoss/carlitz.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

namespace carlgoss {

namespace {

constexpr uint32_t kSeriesHardCap = 256; // no convergent series here needs more terms

// Embed a into the carrier coefficient field when it lives in a subfield.
ThetaPoly lift_to(const ThetaPoly& a, Field carrier) {
    if (a.field() == carrier) return a;
    return a.map_coeffs(carrier, subfield_generator_image(a.field(), carrier));
}

struct FactorialCache {
    std::deque<ThetaPoly> D, L;
};

std::mutex g_fact_mutex;
std::map<const FieldRep*, FactorialCache> g_fact;

} // namespace

ThetaPoly poly_qpow(const ThetaPoly& x, uint64_t q) {
    if (x.is_zero()) return x;
    Field f = x.field();
    std::vector<FFElem> out((size_t)(x.degree() * (int64_t)q) + 1, f.zero());
    for (int64_t i = 0; i <= x.degree(); ++i)
        out[(size_t)(i * (int64_t)q)] = ff_frobenius(x.coeff(i), 1, q);
    return ThetaPoly(f, std::move(out));
}

std::vector<ThetaPoly> goss_coeffs(const ThetaPoly& a) {
    return goss_coeffs(a, a.field().size());
}

std::vector<ThetaPoly> goss_coeffs(const ThetaPoly& a, uint64_t q) {
    if (a.is_zero()) return {ThetaPoly::zero(a.field())};
    Field f = a.field();
    ThetaPoly th = ThetaPoly::theta(f);
    int64_t n = a.degree();
    std::vector<ThetaPoly> g{ThetaPoly::constant(a.coeff(n))};
    for (int64_t j = n - 1; j >= 0; --j) {
        std::vector<ThetaPoly> next;
        next.reserve(g.size() + 1);
        next.push_back(th * g[0] + ThetaPoly::constant(a.coeff(j)));
        for (size_t i = 1; i <= g.size(); ++i) {
            ThetaPoly c = poly_qpow(g[i - 1], q);
            if (i < g.size()) c = c + th * g[i];
            next.push_back(std::move(c));
        }
        g = std::move(next);
    }
    return g;
}

const ThetaPoly& carlitz_D(Field f, uint32_t i) {
    std::lock_guard<std::mutex> lock(g_fact_mutex);
    auto& cache = g_fact[f.rep()];
    if (cache.D.empty()) cache.D.push_back(ThetaPoly::one(f));
    uint64_t q = f.size();
    while (cache.D.size() <= i) {
        uint32_t m = (uint32_t)cache.D.size();
        uint64_t qm = 1;
        for (uint32_t j = 0; j < m; ++j) qm *= q;
        ThetaPoly bracket = ThetaPoly::monomial(f.one(), (uint32_t)qm) - ThetaPoly::theta(f);
        cache.D.push_back(bracket * poly_qpow(cache.D.back(), q));
    }
    return cache.D[i];
}

const ThetaPoly& carlitz_L(Field f, uint32_t i) {
    std::lock_guard<std::mutex> lock(g_fact_mutex);
    auto& cache = g_fact[f.rep()];
    if (cache.L.empty()) cache.L.push_back(ThetaPoly::one(f));
    uint64_t q = f.size();
    while (cache.L.size() <= i) {
        uint32_t m = (uint32_t)cache.L.size();
        uint64_t qm = 1;
        for (uint32_t j = 0; j < m; ++j) qm *= q;
        ThetaPoly bracket = ThetaPoly::theta(f) - ThetaPoly::monomial(f.one(), (uint32_t)qm);
        cache.L.push_back(bracket * cache.L.back());
    }
    return cache.L[i];
}

int64_t valP_L(uint32_t i, uint32_t d) { return (int64_t)(i / d); }

int64_t valP_D(uint32_t i, uint32_t d, uint64_t q) {
    uint32_t r = i % d;
    int64_t qi = 1, qr = 1, qd = 1;
    for (uint32_t j = 0; j < i; ++j) qi *= (int64_t)q;
    for (uint32_t j = 0; j < r; ++j) qr *= (int64_t)q;
    for (uint32_t j = 0; j < d; ++j) qd *= (int64_t)q;
    return (qi - qr) / (qd - 1);
}

ThetaPoly carlitz_action(const ThetaPoly& a, const ThetaPoly& x, uint64_t q) {
    ThetaPoly ai = lift_to(a, x.field());
    std::vector<ThetaPoly> gs = goss_coeffs(ai, q);
    ThetaPoly y = x;
    ThetaPoly acc = gs[0] * y;
    for (size_t i = 1; i < gs.size(); ++i) {
        y = poly_qpow(y, q);
        acc = acc + gs[i] * y;
    }
    return acc;
}

LaurentSeries carlitz_action(const ThetaPoly& a, const LaurentSeries& x, uint64_t q) {
    ThetaPoly ai = lift_to(a, x.field());
    std::vector<ThetaPoly> gs = goss_coeffs(ai, q);
    LaurentSeries acc = laurent_mul_poly(x, gs[0]);
    for (size_t i = 1; i < gs.size(); ++i)
        acc = acc + laurent_mul_poly(x.frobenius((uint32_t)i, q), gs[i]);
    return acc;
}

PAdicElem carlitz_action(const ThetaPoly& a, const PAdicElem& x, uint64_t q) {
    const ThetaPoly& P = x.prime();
    ThetaPoly ai = lift_to(a, x.field());
    std::vector<ThetaPoly> gs = goss_coeffs(ai, q);
    int64_t digits = std::max<int64_t>(x.prec() + 1, 1);
    PAdicElem acc = PAdicElem::zero(P, x.abs_prec());
    for (size_t i = 0; i < gs.size(); ++i) {
        if (gs[i].is_zero()) continue;
        PAdicElem term = x.frobenius((uint32_t)i, q) * PAdicElem::from_poly(gs[i], P, digits);
        acc = acc + term.reduced(std::min(acc.abs_prec(), term.abs_prec()));
    }
    return acc;
}

PadicResidue carlitz_action(const ThetaPoly& a, const PadicResidue& x, uint64_t q) {
    ThetaPoly ai = lift_to(a, x.field());
    std::vector<ThetaPoly> gs = goss_coeffs(ai, q);
    int64_t W = x.prec();
    PadicResidue y = x;
    PadicResidue acc = x.mul_poly(gs[0]);
    for (size_t i = 1; i < gs.size(); ++i) {
        y = y.qpow(q, W);
        if (gs[i].is_zero()) continue;
        acc = acc + y.mul_poly(gs[i]);
    }
    return acc;
}

FFElem carlitz_action(const ThetaPoly& a, const FFElem& xbar, const FFElem& theta_bar,
                      const FFElem& gen_image, uint64_t q) {
    std::vector<ThetaPoly> gs = goss_coeffs(a, q);
    FFElem y = xbar;
    FFElem acc = gs[0].eval_embedded(theta_bar, gen_image) * y;
    for (size_t i = 1; i < gs.size(); ++i) {
        y = ff_frobenius(y, 1, q);
        acc = acc + gs[i].eval_embedded(theta_bar, gen_image) * y;
    }
    return acc;
}

TatePoly<ThetaPoly> deformed_action(const ThetaPoly& a, const ThetaPoly& x, uint64_t q, int64_t z_max) {
    if (a.degree() > z_max)
        throw ZDegreeOverflow("deformed action of degree " + std::to_string(a.degree()) +
                              " does not fit below z^" + std::to_string(z_max + 1));
    ThetaPoly ai = lift_to(a, x.field());
    std::vector<ThetaPoly> gs = goss_coeffs(ai, q);
    std::vector<ThetaPoly> slots;
    ThetaPoly y = x;
    for (size_t i = 0; i < gs.size(); ++i) {
        if (i > 0) y = poly_qpow(y, q);
        slots.push_back(gs[i] * y);
    }
    return TatePoly<ThetaPoly>(std::move(slots), z_max);
}

TatePoly<LaurentSeries> deformed_action(const ThetaPoly& a, const LaurentSeries& x, uint64_t q, int64_t z_max) {
    if (a.degree() > z_max)
        throw ZDegreeOverflow("deformed action of degree " + std::to_string(a.degree()) +
                              " does not fit below z^" + std::to_string(z_max + 1));
    ThetaPoly ai = lift_to(a, x.field());
    std::vector<ThetaPoly> gs = goss_coeffs(ai, q);
    std::vector<LaurentSeries> slots;
    for (size_t i = 0; i < gs.size(); ++i)
        slots.push_back(laurent_mul_poly(x.frobenius((uint32_t)i, q), gs[i]));
    return TatePoly<LaurentSeries>(std::move(slots), z_max);
}

TatePoly<LaurentSeries> deformed_action(const ThetaPoly& a, const TatePoly<LaurentSeries>& x, uint64_t q) {
    int64_t zmax = x.z_max();
    if (a.degree() > zmax)
        throw ZDegreeOverflow("deformed action of degree " + std::to_string(a.degree()) +
                              " does not fit below z^" + std::to_string(zmax + 1));
    ThetaPoly ai = lift_to(a, x.coeff(0).field());
    std::vector<ThetaPoly> gs = goss_coeffs(ai, q);
    std::vector<LaurentSeries> slots;
    for (int64_t k = 0; k <= zmax; ++k) {
        LaurentSeries acc = laurent_mul_poly(x.coeff(k), gs[0]);
        for (int64_t i = 1; i <= std::min<int64_t>(k, (int64_t)gs.size() - 1); ++i)
            acc = acc + laurent_mul_poly(x.coeff(k - i).frobenius((uint32_t)i, q), gs[(size_t)i]);
        slots.push_back(std::move(acc));
    }
    return TatePoly<LaurentSeries>(std::move(slots), zmax);
}

LaurentSeries carlitz_exp_inf(const LaurentSeries& x, int64_t N) {
    Field f = x.field();
    uint64_t q = f.size();
    if (x.is_zero_to_prec()) return LaurentSeries::zero(f, std::min(N, x.prec()));
    int64_t v = x.v_inf();
    LaurentSeries acc = LaurentSeries::zero(f, N);
    int64_t qi = 1;
    for (uint32_t i = 0;; ++i) {
        if (i > 0) qi *= (int64_t)q;
        int64_t fi = qi * (v + (int64_t)i);
        if ((int64_t)i >= -v && fi >= N) break;
        if (i > kSeriesHardCap) throw error("exp series failed to terminate");
        if (fi < N)
            acc = acc + laurent_div_poly(x.frobenius(i, q), carlitz_D(f, i), N);
    }
    return acc;
}

LaurentSeries carlitz_log_inf(const LaurentSeries& x, int64_t N) {
    Field f = x.field();
    uint64_t q = f.size();
    if (x.is_zero_to_prec()) return LaurentSeries::zero(f, std::min(N, x.prec()));
    int64_t v = x.v_inf();
    int64_t vq = v * ((int64_t)q - 1) + (int64_t)q;
    if (vq <= 0)
        throw OutsideDomain("log at infinity needs v > -q/(q-1), got v = " + std::to_string(v));
    LaurentSeries acc = LaurentSeries::zero(f, N);
    int64_t qi = 1;
    for (uint32_t i = 0;; ++i) {
        if (i > 0) qi *= (int64_t)q;
        // valuation of the term is (qi*vq - q)/(q-1), strictly increasing
        if (qi * vq - (int64_t)q >= N * ((int64_t)q - 1)) break;
        if (i > kSeriesHardCap) throw error("log series failed to terminate");
        acc = acc + laurent_div_poly(x.frobenius(i, q), carlitz_L(f, i), N);
    }
    return acc;
}

TatePoly<LaurentSeries> carlitz_exp_z(const LaurentSeries& x, int64_t z_max, int64_t N) {
    Field f = x.field();
    uint64_t q = f.size();
    std::vector<LaurentSeries> slots;
    for (int64_t i = 0; i <= z_max; ++i)
        slots.push_back(laurent_div_poly(x.frobenius((uint32_t)i, q), carlitz_D(f, (uint32_t)i), N));
    return TatePoly<LaurentSeries>(std::move(slots), z_max);
}

TatePoly<LaurentSeries> carlitz_log_z(const LaurentSeries& x, int64_t z_max, int64_t N) {
    Field f = x.field();
    uint64_t q = f.size();
    std::vector<LaurentSeries> slots;
    for (int64_t i = 0; i <= z_max; ++i)
        slots.push_back(laurent_div_poly(x.frobenius((uint32_t)i, q), carlitz_L(f, (uint32_t)i), N));
    return TatePoly<LaurentSeries>(std::move(slots), z_max);
}

namespace {

TatePoly<LaurentSeries> tate_series(const TatePoly<LaurentSeries>& x, int64_t N, bool log) {
    Field f = x.coeff(0).field();
    uint64_t q = f.size();
    int64_t zm = x.z_max();
    std::vector<LaurentSeries> slots;
    slots.reserve((size_t)zm + 1);
    for (int64_t m = 0; m <= zm; ++m) {
        LaurentSeries acc = LaurentSeries::zero(f, N);
        for (int64_t i = 0; i <= m; ++i) {
            const ThetaPoly& den = log ? carlitz_L(f, (uint32_t)i) : carlitz_D(f, (uint32_t)i);
            acc = acc + laurent_div_poly(x.coeff(m - i).frobenius((uint32_t)i, q), den, N);
        }
        slots.push_back(acc);
    }
    return TatePoly<LaurentSeries>(std::move(slots), zm);
}

} // namespace

TatePoly<LaurentSeries> carlitz_exp_z(const TatePoly<LaurentSeries>& x, int64_t N) {
    return tate_series(x, N, false);
}

TatePoly<LaurentSeries> carlitz_log_z(const TatePoly<LaurentSeries>& x, int64_t N) {
    return tate_series(x, N, true);
}

PAdicElem carlitz_exp_padic(const PAdicElem& x, int64_t N) {
    const ThetaPoly& P = x.prime();
    if (x.is_zero_to_prec()) return PAdicElem::zero(P, std::min(N, x.val()));
    Field f = x.field();
    uint64_t q = f.size();
    uint32_t d = (uint32_t)P.degree();
    int64_t v = x.val();
    int64_t qd = 1;
    for (uint32_t j = 0; j < d; ++j) qd *= (int64_t)q;
    if (v < 1 || v * (qd - 1) < 2)
        throw OutsideDomain("exp at P needs v*(q^d - 1) >= 2, got v = " + std::to_string(v));
    PAdicElem acc = PAdicElem::zero(P, N);
    int64_t qi = 1;
    for (uint32_t i = 0;; ++i) {
        if (i > 0) qi *= (int64_t)q;
        int64_t fi = v * qi - valP_D(i, d, q);
        if (i >= d && fi >= N) break;
        if (i > kSeriesHardCap) throw error("exp series failed to terminate");
        if (fi >= N) continue;
        PAdicElem Di = PAdicElem::from_poly(carlitz_D(f, i), P, std::max<int64_t>(N - fi, 1));
        PAdicElem term = x.frobenius(i, q) * Di.inv();
        acc = acc + term.reduced(std::min<int64_t>(N, term.abs_prec()));
    }
    return acc;
}

PAdicElem carlitz_log_padic(const PAdicElem& x, int64_t N) {
    const ThetaPoly& P = x.prime();
    if (x.is_zero_to_prec()) return PAdicElem::zero(P, std::min(N, x.val()));
    Field f = x.field();
    uint64_t q = f.size();
    uint32_t d = (uint32_t)P.degree();
    int64_t v = x.val();
    if (v < 1)
        throw OutsideDomain("log at P needs v >= 1, got v = " + std::to_string(v));
    PAdicElem acc = PAdicElem::zero(P, N);
    int64_t qi = 1;
    for (uint32_t i = 0;; ++i) {
        if (i > 0) qi *= (int64_t)q;
        int64_t fi = v * qi - valP_L(i, d);
        if (fi >= N) break;
        if (i > kSeriesHardCap) throw error("log series failed to terminate");
        PAdicElem Li = PAdicElem::from_poly(carlitz_L(f, i), P, std::max<int64_t>(N - fi, 1));
        PAdicElem term = x.frobenius(i, q) * Li.inv();
        acc = acc + term.reduced(std::min<int64_t>(N, term.abs_prec()));
    }
    return acc;
}

PadicResidue carlitz_log_padic_flat(const PadicResidue& x, const ThetaPoly& P, uint64_t q, int64_t N) {
    if (x.is_zero_to_prec()) return PadicResidue::zero(x.Pimg(), std::min(N, x.prec()));
    Field cf = x.field();
    Field bf = P.field();
    uint32_t d = (uint32_t)P.degree();
    int64_t v = x.valuation();
    if (v < 1)
        throw OutsideDomain("log at P needs v >= 1, got v = " + std::to_string(v));

    // depth of exact P-division the series will perform
    int64_t maxdiv = 0;
    {
        int64_t qi = 1;
        for (uint32_t i = 0;; ++i) {
            if (i > 0) qi *= (int64_t)q;
            if (v * qi - valP_L(i, d) >= N) break;
            if (i > kSeriesHardCap) throw error("log series failed to terminate");
            maxdiv = valP_L(i, d);
        }
    }
    int64_t W = std::min<int64_t>(x.prec(), N + maxdiv);
    PadicResidue y = x.reduced(W);
    PadicResidue acc = PadicResidue::zero(x.Pimg(), N);
    bool same_field = (cf == bf);
    FFElem gen_image = same_field ? cf.gen() : subfield_generator_image(bf, cf);
    int64_t qi = 1;
    for (uint32_t i = 0;; ++i) {
        if (i > 0) {
            qi *= (int64_t)q;
            y = y.qpow(q, W);
        }
        int64_t fi = v * qi - valP_L(i, d);
        if (fi >= N) break;
        if (i > kSeriesHardCap) throw error("log series failed to terminate");
        int64_t j = valP_L(i, d);
        auto [u, rem] = poly_divmod(carlitz_L(bf, i), P.pow((uint64_t)j));
        if (!rem.is_zero()) throw error("factorial valuation mismatch");
        ThetaPoly u_img = same_field ? u : u.map_coeffs(cf, gen_image);
        PadicResidue term = y.mul_inv_of(u_img).div_P_exact(j);
        acc = acc + term.reduced(std::min<int64_t>(N, term.prec()));
    }
    return acc;
}

PAdicElem iwasawa_log(const PAdicElem& x, int64_t N) {
    const ThetaPoly& P = x.prime();
    if (!x.is_zero_to_prec() && x.val() < 0)
        throw OutsideDomain("extended log needs an integral argument");
    Field f = x.field();
    uint64_t q = f.size();
    ThetaPoly a = P - ThetaPoly::one(f);
    PAdicElem y = carlitz_action(a, x, q);
    PAdicElem w = carlitz_log_padic(y, N);
    if (w.is_zero_to_prec()) return w;
    PAdicElem c = PAdicElem::from_poly(a, P, w.prec());
    return (w * c.inv()).reduced(std::min<int64_t>(N, w.abs_prec()));
}

PadicResidue iwasawa_log_flat(const PadicResidue& x, const ThetaPoly& P, uint64_t q, uint32_t F, int64_t N) {
    Field bf = P.field();
    ThetaPoly a = P.pow(F) - ThetaPoly::one(bf);
    PadicResidue y = carlitz_action(a, x, q);
    PadicResidue w = carlitz_log_padic_flat(y, P, q, N);
    if (w.is_zero_to_prec()) return w;
    Field cf = x.field();
    ThetaPoly a_img = (cf == bf) ? a : a.map_coeffs(cf, subfield_generator_image(bf, cf));
    return w.mul_inv_of(a_img).reduced(std::min<int64_t>(N, w.prec()));
}

LaurentSeries carlitz_period_q2(Field f, int64_t N) {
    if (f.size() != 2)
        throw WrongCharacteristic("the period generator lies in the base completion only for q = 2");
    int64_t rel = N + 2;
    LaurentSeries prod = LaurentSeries::from_poly(ThetaPoly::one(f), rel);
    for (uint32_t i = 1;; ++i) {
        int64_t shift = ((int64_t)1 << i) - 1;
        if (shift >= rel) break;
        std::vector<FFElem> cs((size_t)rel, f.zero());
        cs[0] = f.one();
        cs[(size_t)shift] = f.one();
        prod = prod * LaurentSeries::from_coeffs(f, 0, rel, std::move(cs));
    }
    return prod.inv().shifted(-2);
}

} // namespace carlgoss
