#include "carlgoss/zeta.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace carlgoss {

namespace {

constexpr uint64_t kChunkSize = 4096;

// Deterministic parallel reduction: per-chunk partial sums are computed by a
// worker pool but always combined in chunk-index order.
template <class T, class PerChunk, class Add>
T chunked_sum(uint64_t count, uint32_t workers, T init, PerChunk per_chunk, Add add) {
    if (count == 0) return init;
    uint64_t nchunks = (count + kChunkSize - 1) / kChunkSize;
    std::vector<T> parts((size_t)nchunks, init);
    if (workers <= 1 || nchunks == 1) {
        for (uint64_t k = 0; k < nchunks; ++k)
            parts[(size_t)k] = per_chunk(k * kChunkSize, std::min(count, (k + 1) * kChunkSize));
    } else {
        std::atomic<uint64_t> next{0};
        std::exception_ptr err;
        std::mutex err_mutex;
        auto run = [&]() {
            for (;;) {
                uint64_t k = next.fetch_add(1);
                if (k >= nchunks) return;
                try {
                    parts[(size_t)k] = per_chunk(k * kChunkSize, std::min(count, (k + 1) * kChunkSize));
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (uint32_t w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
        if (err) std::rethrow_exception(err);
    }
    T acc = std::move(parts[0]);
    for (uint64_t k = 1; k < nchunks; ++k) acc = add(std::move(acc), std::move(parts[(size_t)k]));
    return acc;
}

LaurentSeries laurent_inv_poly(const ThetaPoly& b, int64_t target) {
    LaurentSeries one = LaurentSeries::from_poly(ThetaPoly::one(b.field()), target + b.degree() + 1);
    return laurent_div_poly(one, b, target);
}

// Packed residue arithmetic for the hot enumeration loops: field elements
// become their canonical indexes in a byte, all field operations become table
// lookups, and polynomials become byte vectors.  Only correct for fields of
// size <= 255; callers fall back to the generic path otherwise.
struct PackedField {
    uint32_t q = 0;
    std::vector<uint8_t> mul, add, neg;
    std::vector<FFElem> elems;

    explicit PackedField(Field f) : q((uint32_t)f.size()) {
        elems.reserve(q);
        for (uint64_t i = 0; i < q; ++i) elems.push_back(f.element(i));
        mul.resize((size_t)q * q);
        add.resize((size_t)q * q);
        neg.resize(q);
        for (uint32_t a = 0; a < q; ++a) {
            neg[a] = (uint8_t)(-elems[a]).index();
            for (uint32_t b = 0; b < q; ++b) {
                mul[(size_t)a * q + b] = (uint8_t)(elems[a] * elems[b]).index();
                add[(size_t)a * q + b] = (uint8_t)(elems[a] + elems[b]).index();
            }
        }
    }
    uint8_t mu(uint8_t a, uint8_t b) const { return mul[(size_t)a * q + b]; }
    uint8_t ad(uint8_t a, uint8_t b) const { return add[(size_t)a * q + b]; }

    std::vector<uint8_t> pack(const ThetaPoly& a) const {
        std::vector<uint8_t> r;
        r.reserve((size_t)(a.degree() + 1));
        for (int64_t i = 0; i <= a.degree(); ++i) r.push_back((uint8_t)a.coeff(i).index());
        return r;
    }
    ThetaPoly unpack(Field f, const std::vector<uint8_t>& a) const {
        std::vector<FFElem> cs;
        cs.reserve(a.size());
        for (uint8_t e : a) cs.push_back(elems[e]);
        return ThetaPoly(f, std::move(cs));
    }
};

int64_t packed_deg(const std::vector<uint8_t>& a) {
    int64_t d = (int64_t)a.size() - 1;
    while (d >= 0 && a[(size_t)d] == 0) --d;
    return d;
}

// r -= c * M * x^shift for monic M given by its packed coefficients.
void packed_submul(const PackedField& t, std::vector<uint8_t>& r, uint8_t c,
                   const std::vector<uint8_t>& M, size_t shift) {
    uint8_t f = t.neg[c];
    for (size_t j = 0; j < M.size(); ++j)
        if (M[j]) r[shift + j] = t.ad(r[shift + j], t.mu(f, M[j]));
}

// Remainder of r by monic M, in place.
void packed_mod(const PackedField& t, std::vector<uint8_t>& r, const std::vector<uint8_t>& M) {
    size_t dm = M.size() - 1;
    for (size_t i = r.size(); i-- > dm;) {
        uint8_t c = r[i];
        if (c) packed_submul(t, r, c, M, i - dm);
    }
    r.resize(dm);
}

// out = a * b mod monic M; scratch is reused across calls.
void packed_mul_mod(const PackedField& t, const std::vector<uint8_t>& a,
                    const std::vector<uint8_t>& b, const std::vector<uint8_t>& M,
                    std::vector<uint8_t>& scratch, std::vector<uint8_t>& out) {
    scratch.assign(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint8_t ai = a[i];
        if (!ai) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j]) scratch[i + j] = t.ad(scratch[i + j], t.mu(ai, b[j]));
    }
    if (scratch.size() > M.size() - 1) packed_mod(t, scratch, M);
    scratch.resize(M.size() - 1);
    out = scratch;
}

void packed_pow_mod(const PackedField& t, std::vector<uint8_t> base, uint64_t e,
                    const std::vector<uint8_t>& M, std::vector<uint8_t>& scratch,
                    std::vector<uint8_t>& out) {
    out.assign(M.size() - 1, 0);
    out[0] = 1;
    while (e) {
        if (e & 1) packed_mul_mod(t, out, base, M, scratch, out);
        e >>= 1;
        if (e) packed_mul_mod(t, base, base, M, scratch, base);
    }
}

} // namespace

uint32_t ell_q(uint64_t m, uint64_t q) {
    uint32_t s = 0;
    while (m > 0) {
        s += (uint32_t)(m % q);
        m /= q;
    }
    return s;
}

uint32_t resolve_workers(uint32_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CARLGOSS_WORKERS")) {
        long v = std::atol(env);
        if (v >= 1 && v <= 1024) return (uint32_t)v;
    }
    return 1;
}

ThetaPoly power_sum_exact(const Ring& R, uint32_t m, uint32_t s, uint32_t workers) {
    uint64_t count = ideal_count(R, m);
    ThetaPoly zero = ThetaPoly::zero(R.base);
    auto per_chunk = [&](uint64_t lo, uint64_t hi) {
        ThetaPoly acc = zero;
        for (uint64_t i = lo; i < hi; ++i)
            acc = acc + ideal_norm(R, ideal_of_index(R, m, i)).pow(s);
        return acc;
    };
    auto add = [](ThetaPoly a, ThetaPoly b) { return a + b; };
    return chunked_sum(count, resolve_workers(workers), zero, per_chunk, add);
}

ThetaPoly power_sum_padic_exact(const Ring& R, uint32_t m, uint32_t s, const ThetaPoly& P,
                                uint32_t workers) {
    uint64_t count = ideal_count(R, m);
    ThetaPoly zero = ThetaPoly::zero(R.base);
    ThetaPoly Pimg = embed_to_coeff(R, P);
    auto per_chunk = [&](uint64_t lo, uint64_t hi) {
        ThetaPoly acc = zero;
        for (uint64_t i = lo; i < hi; ++i) {
            ThetaPoly g = ideal_of_index(R, m, i);
            if (!poly_gcd(g, Pimg).is_one()) continue;
            acc = acc + ideal_norm(R, g).pow(s);
        }
        return acc;
    };
    auto add = [](ThetaPoly a, ThetaPoly b) { return a + b; };
    return chunked_sum(count, resolve_workers(workers), zero, per_chunk, add);
}

LaurentSeries power_sum_inf(const Ring& R, uint32_t m, int64_t n, int64_t prec, uint32_t workers) {
    if (n < 1) throw error("power_sum_inf needs n >= 1");
    uint64_t count = ideal_count(R, m);
    LaurentSeries zero = LaurentSeries::zero(R.base, prec);
    int64_t term_val = n * (int64_t)R.r * (int64_t)m;
    if (term_val >= prec) return zero;
    auto per_chunk = [&](uint64_t lo, uint64_t hi) {
        LaurentSeries acc = zero;
        for (uint64_t i = lo; i < hi; ++i) {
            ThetaPoly b = ideal_norm(R, ideal_of_index(R, m, i)).pow((uint64_t)n);
            acc = acc + laurent_inv_poly(b, prec);
        }
        return acc;
    };
    auto add = [](LaurentSeries a, LaurentSeries b) { return a + b; };
    return chunked_sum(count, resolve_workers(workers), zero, per_chunk, add);
}

PAdicElem power_sum_padic(const Ring& R, uint32_t m, int64_t n, const ThetaPoly& P, int64_t N,
                          uint32_t workers) {
    if (n < 1) throw error("power_sum_padic needs n >= 1 (use the exact path for n <= 0)");
    if (!poly_is_irreducible(P)) throw NotIrreducible("P must be irreducible over the base field");
    uint64_t count = ideal_count(R, m);
    ThetaPoly Pimg = embed_to_coeff(R, P);
    ThetaPoly PN = P.pow((uint64_t)N);
    ThetaPoly zero = ThetaPoly::zero(R.base);
    bool base = R.is_base();
    uint64_t q = R.coeff.size();

    if (q <= 255) {
        // Packed fast path: one extended-gcd inversion per chunk (batched
        // through running products), table arithmetic per term.
        PackedField ct(R.coeff);
        PackedField bt = base ? ct : PackedField(R.base);
        std::vector<uint8_t> Mp = bt.pack(PN);
        std::vector<uint8_t> Pp = bt.pack(P);
        // coefficient Frobenius table for the norm conjugates
        std::vector<uint8_t> sig(ct.q);
        for (uint32_t i = 0; i < ct.q; ++i)
            sig[i] = (uint8_t)ff_frobenius(ct.elems[i], 1, R.q()).index();
        // coefficient-field index -> base-field index, or -1
        std::vector<int32_t> pull(ct.q, -1);
        for (uint64_t e = 0; e < R.q(); ++e) {
            FFElem img = base ? R.base.element(e) : embed_elem(R.base.element(e), R.coeff, R.gen_image);
            pull[img.index()] = (int32_t)e;
        }

        auto per_chunk = [&](uint64_t lo, uint64_t hi) {
            std::vector<uint8_t> scratch, g, conj, norm, tmp, inv_run, inv_i, term;
            std::vector<std::vector<uint8_t>> vals, prefix;
            vals.reserve((size_t)(hi - lo));
            prefix.reserve((size_t)(hi - lo));
            std::vector<uint8_t> run(Mp.size() - 1, 0);
            run[0] = 1;
            for (uint64_t i = lo; i < hi; ++i) {
                g.assign((size_t)m + 1, 0);
                uint64_t idx = i;
                for (uint32_t j = 0; j < m; ++j) {
                    g[j] = (uint8_t)(idx % q);
                    idx /= q;
                }
                g[m] = 1;
                if (base) {
                    norm = g;
                } else {
                    norm = g;
                    conj = g;
                    for (uint32_t j = 1; j < R.r; ++j) {
                        for (uint8_t& c : conj) c = sig[c];
                        scratch.assign(norm.size() + conj.size() - 1, 0);
                        for (size_t a = 0; a < norm.size(); ++a) {
                            if (!norm[a]) continue;
                            for (size_t b = 0; b < conj.size(); ++b)
                                if (conj[b])
                                    scratch[a + b] = ct.ad(scratch[a + b], ct.mu(norm[a], conj[b]));
                        }
                        norm = scratch;
                    }
                    // the conjugate product lands in the base field
                    for (uint8_t& c : norm) {
                        int32_t e = pull[c];
                        if (e < 0) throw error("norm coefficient outside the base field");
                        c = (uint8_t)e;
                    }
                }
                // coprimality with P: P divides the norm iff the ideal meets P
                tmp = norm;
                packed_mod(bt, tmp, Pp);
                if (packed_deg(tmp) < 0) continue;
                if (norm.size() > Mp.size() - 1) packed_mod(bt, norm, Mp);
                else norm.resize(Mp.size() - 1);
                packed_mul_mod(bt, run, norm, Mp, scratch, run);
                vals.push_back(norm);
                prefix.push_back(run);
            }
            if (vals.empty()) return zero;
            ThetaPoly inv_total = poly_invmod(bt.unpack(R.base, run), PN);
            inv_run = bt.pack(inv_total);
            inv_run.resize(Mp.size() - 1);
            std::vector<uint8_t> acc(Mp.size() - 1, 0);
            for (size_t i = vals.size(); i-- > 0;) {
                if (i == 0) inv_i = inv_run;
                else packed_mul_mod(bt, inv_run, prefix[i - 1], Mp, scratch, inv_i);
                if (i > 0) packed_mul_mod(bt, inv_run, vals[i], Mp, scratch, inv_run);
                if (n != 1) {
                    packed_pow_mod(bt, inv_i, (uint64_t)n, Mp, scratch, term);
                    inv_i = term;
                }
                for (size_t j = 0; j < acc.size(); ++j)
                    if (inv_i[j]) acc[j] = bt.ad(acc[j], inv_i[j]);
            }
            return bt.unpack(R.base, acc);
        };
        auto add = [&](ThetaPoly a, ThetaPoly b) { return (a + b) % PN; };
        ThetaPoly total = chunked_sum(count, resolve_workers(workers), zero, per_chunk, add);
        return PAdicElem::from_residue(total, P, N);
    }

    auto per_chunk = [&](uint64_t lo, uint64_t hi) {
        ThetaPoly acc = zero;
        for (uint64_t i = lo; i < hi; ++i) {
            ThetaPoly g = ideal_of_index(R, m, i);
            if (base) {
                if ((g % P).is_zero()) continue;
            } else if (!poly_gcd(g, Pimg).is_one()) {
                continue;
            }
            ThetaPoly norm = ideal_norm(R, g);
            ThetaPoly inv = poly_invmod(norm % PN, PN);
            acc = (acc + (n == 1 ? inv : poly_powmod(inv, (uint64_t)n, PN))) % PN;
        }
        return acc;
    };
    auto add = [&](ThetaPoly a, ThetaPoly b) { return (a + b) % PN; };
    ThetaPoly total = chunked_sum(count, resolve_workers(workers), zero, per_chunk, add);
    return PAdicElem::from_residue(total, P, N);
}

ZetaPolyValue zeta_poly(const Ring& R, int64_t n, uint32_t workers) {
    if (n > 0) throw error("zeta_poly is for n <= 0");
    uint32_t s = (uint32_t)(-n);
    uint64_t q = R.q();
    int64_t B = (int64_t)R.r * (1 + (int64_t)ell_q(s, q)) - 1;
    std::vector<ThetaPoly> slots((size_t)B + 1, ThetaPoly::zero(R.base));
    for (uint32_t m = 0; (int64_t)(R.r * m) <= B + 2; ++m) {
        ThetaPoly U = power_sum_exact(R, m, s, workers);
        int64_t d = (int64_t)(R.r * m);
        if (d <= B) {
            slots[(size_t)d] = U;
        } else if (!U.is_zero()) {
            throw DegreeBoundViolated("U_" + std::to_string(d) + "(" + std::to_string(n) +
                                      ") is nonzero past the proven degree bound " + std::to_string(B));
        }
    }
    ZetaPolyValue out{TatePoly<ThetaPoly>(std::move(slots), B), n, B};
    return out;
}

ZetaInfValue zeta_inf(const Ring& R, int64_t n, int64_t prec, uint32_t workers) {
    if (n < 1) throw error("zeta_inf is for n >= 1");
    if (prec < 1) throw error("zeta_inf needs prec >= 1");
    LaurentSeries acc = LaurentSeries::zero(R.base, prec);
    int64_t d = 0;
    for (uint32_t m = 0;; ++m) {
        d = n * (int64_t)(R.r * m);
        if (d >= prec) break;
        acc = acc + power_sum_inf(R, m, n, prec, workers);
    }
    int64_t cutoff = 0;
    while (n * cutoff < prec) cutoff += R.r;
    return ZetaInfValue{std::move(acc), n, prec, cutoff};
}

uint32_t lemma2_D(const Ring& R, const ThetaPoly& P, uint32_t s) {
    uint64_t q = R.q();
    uint32_t dP = (uint32_t)P.degree();
    return R.r * (1 + (s + 1 + dP) * (uint32_t)(q - 1)) + R.r * dP;
}

ZetaPadicValue zeta_padic(const Ring& R, int64_t n, const ThetaPoly& P, uint32_t s, uint32_t workers) {
    if (!poly_is_irreducible(P)) throw NotIrreducible("P must be irreducible over the base field");
    uint64_t q = R.q();
    int64_t digits = 1;
    for (uint32_t j = 0; j <= s; ++j) digits *= (int64_t)q;
    uint32_t D = lemma2_D(R, P, s);
    if (n <= 0) {
        TatePoly<ThetaPoly> zp = euler_transfer(R, n, P, workers);
        ThetaPoly at1 = zp.eval_z1();
        PAdicElem value = at1.is_zero() ? PAdicElem::zero(P, digits)
                                        : PAdicElem::from_poly(at1, P, digits);
        if (!value.is_zero_to_prec() && value.abs_prec() > digits) value = value.reduced(digits);
        return ZetaPadicValue{std::move(value), n, s, D, digits, true};
    }
    int64_t qs = digits / (int64_t)q; // q^s
    if (n > qs - 1)
        throw error("zeta_padic certificate needs n <= q^s - 1; raise s (n = " + std::to_string(n) +
                    ", q^s - 1 = " + std::to_string(qs - 1) + ")");
    PAdicElem acc = PAdicElem::zero(P, digits);
    for (uint32_t m = 0; R.r * m < D; ++m) {
        PAdicElem U = power_sum_padic(R, m, n, P, digits, workers);
        acc = acc + U;
    }
    return ZetaPadicValue{std::move(acc), n, s, D, digits, false};
}

TatePoly<ThetaPoly> euler_transfer(const Ring& R, int64_t n, const ThetaPoly& P, uint32_t workers) {
    if (n > 0) throw error("euler_transfer is for n <= 0");
    ZetaPolyValue zp = zeta_poly(R, n, workers);
    uint32_t s = (uint32_t)(-n);
    std::vector<ThetaPoly> primes = primes_above(R, P);
    int64_t extra = 0;
    for (const ThetaPoly& pr : primes) extra += (int64_t)R.r * pr.degree();
    int64_t zmax = zp.bound + extra;
    std::vector<ThetaPoly> base_slots;
    for (int64_t j = 0; j <= zp.value.z_max(); ++j) base_slots.push_back(zp.value.coeff(j));
    TatePoly<ThetaPoly> acc(std::move(base_slots), zmax);
    for (const ThetaPoly& pr : primes) {
        int64_t dn = (int64_t)R.r * pr.degree(); // deg of n(prime)
        ThetaPoly npow = ideal_norm(R, pr).pow(s);
        std::vector<ThetaPoly> fac((size_t)zmax + 1, ThetaPoly::zero(R.base));
        fac[0] = ThetaPoly::one(R.base);
        fac[(size_t)dn] = -npow;
        acc = acc * TatePoly<ThetaPoly>(std::move(fac), zmax);
    }
    return acc;
}

TatePoly<LaurentSeries> zeta_z_inf(const Ring& R, int64_t n, int64_t z_max, int64_t prec,
                                   uint32_t workers) {
    if (n < 1) throw error("zeta_z_inf is for n >= 1 (use zeta_poly for n <= 0)");
    std::vector<LaurentSeries> slots;
    for (int64_t d = 0; d <= z_max; ++d) {
        if (d % R.r != 0 || n * d >= prec) {
            slots.push_back(LaurentSeries::zero(R.base, prec));
            continue;
        }
        slots.push_back(power_sum_inf(R, (uint32_t)(d / R.r), n, prec, workers));
    }
    return TatePoly<LaurentSeries>(std::move(slots), z_max);
}

} // namespace carlgoss
