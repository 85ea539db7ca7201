#include "carlgoss/rings.hpp"

#include <numeric>

namespace carlgoss {

std::string Ring::describe() const {
    if (is_base()) return "F_" + std::to_string(base.size()) + "[t]";
    return "F_" + std::to_string(coeff.size()) + "[t] over F_" + std::to_string(base.size()) + "[t]";
}

namespace {

void fill_unembed(Ring& R) {
    for (uint64_t i = 0; i < R.base.size(); ++i) {
        FFElem e = R.base.element(i);
        FFElem img = embed_elem(e, R.coeff, R.gen_image);
        R.unembed.emplace(img.index(), e);
    }
}

} // namespace

Ring make_base_ring(Field f) {
    Ring R;
    R.base = f;
    R.coeff = f;
    R.r = 1;
    R.gen_image = f.gen();
    fill_unembed(R);
    return R;
}

Ring make_extension_ring(Field base, uint32_t r) {
    if (r == 0) throw error("extension degree must be positive");
    if (r == 1) return make_base_ring(base);
    Ring R;
    R.base = base;
    R.coeff = Field::make(base.p(), base.k() * r);
    R.r = r;
    R.gen_image = subfield_generator_image(base, R.coeff);
    fill_unembed(R);
    return R;
}

ThetaPoly embed_to_coeff(const Ring& R, const ThetaPoly& a) {
    if (R.is_base()) return a;
    return a.map_coeffs(R.coeff, R.gen_image);
}

ThetaPoly pull_to_base(const Ring& R, const ThetaPoly& a) {
    if (R.is_base()) return a;
    std::vector<FFElem> out;
    out.reserve(a.coeffs().size());
    for (const FFElem& c : a.coeffs()) {
        auto it = R.unembed.find(c.index());
        if (it == R.unembed.end())
            throw NotBaseField("coefficient " + c.to_string() + " is not in the base field");
        out.push_back(it->second);
    }
    return ThetaPoly(R.base, std::move(out));
}

uint64_t ideal_count(const Ring& R, uint32_t poly_deg) {
    return monic_count(R.coeff, poly_deg);
}

ThetaPoly ideal_of_index(const Ring& R, uint32_t poly_deg, uint64_t idx) {
    return monic_of_index(R.coeff, poly_deg, idx);
}

ThetaPoly ideal_norm(const Ring& R, const ThetaPoly& g) {
    if (g.is_zero()) throw ZeroIdeal("the zero ideal has no norm");
    if (R.is_base()) return g;
    uint64_t q = R.base.size();
    ThetaPoly acc = g;
    ThetaPoly conj = g;
    for (uint32_t j = 1; j < R.r; ++j) {
        conj = conj.coeff_frobenius(1, q);
        acc = acc * conj;
    }
    return pull_to_base(R, acc);
}

std::vector<ThetaPoly> primes_above(const Ring& R, const ThetaPoly& P) {
    if (!poly_is_irreducible(P)) throw NotIrreducible("primes_above needs an irreducible input");
    ThetaPoly img = embed_to_coeff(R, P.monic());
    Factorization fac = poly_factorize(img);
    std::vector<ThetaPoly> out;
    out.reserve(fac.factors.size());
    for (const auto& pf : fac.factors) {
        if (pf.multiplicity != 1) throw error("unexpected ramification in a constant-field extension");
        out.push_back(pf.p);
    }
    return out;
}

uint32_t inertia_degree(const Ring& R, const ThetaPoly& P) {
    uint32_t d = (uint32_t)P.degree();
    return R.r / std::gcd(R.r, d);
}

std::vector<ThetaPoly> primes_of_poly_degree(const Ring& R, uint32_t poly_deg) {
    std::vector<ThetaPoly> out;
    uint64_t count = monic_count(R.coeff, poly_deg);
    for (uint64_t i = 0; i < count; ++i) {
        ThetaPoly g = monic_of_index(R.coeff, poly_deg, i);
        if (poly_is_irreducible(g)) out.push_back(g);
    }
    return out;
}

ResidueField residue_field(const Ring& R, const ThetaPoly& prime) {
    if (!poly_is_irreducible(prime)) throw NotIrreducible("residue fields exist only for primes");
    Field cf = R.coeff;
    uint32_t m = (uint32_t)prime.degree();
    ResidueField rf;
    rf.E = Field::make(cf.p(), cf.k() * m);
    rf.coeff_gen_image = (m == 1) ? cf.gen() : subfield_generator_image(cf, rf.E);
    if (m == 1) {
        rf.E = cf;
        rf.theta_bar = -prime.coeff(0);
        return rf;
    }
    // lex-first root of the prime inside E, scanning canonical element order
    for (uint64_t i = 0; i < rf.E.size(); ++i) {
        FFElem cand = rf.E.element(i);
        if (prime.eval_embedded(cand, rf.coeff_gen_image).is_zero()) {
            rf.theta_bar = cand;
            return rf;
        }
    }
    throw error("no root of a prime in its residue field");
}

FFElem residue_reduce(const ResidueField& rf, const ThetaPoly& x) {
    if (x.is_zero()) return rf.E.zero();
    return x.eval_embedded(rf.theta_bar, rf.coeff_gen_image);
}

} // namespace carlgoss
