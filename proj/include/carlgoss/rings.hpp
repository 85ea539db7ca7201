#ifndef CARLGOSS_RINGS_HPP
#define CARLGOSS_RINGS_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "carlgoss/poly.hpp"

namespace carlgoss {

// Coefficient ring of one of the supported base rings: A = F_q[t] itself, or
// the integral closure O_L = F_{q^r}[t] in a constant-field extension
// L = F_{q^r}(t).  Both are PIDs, so ideals are identified with their monic
// generators throughout.
struct Ring {
    Field base;     // F_q
    Field coeff;    // F_{q^r}
    uint32_t r = 1; // [L : K]
    FFElem gen_image; // image of base's generator inside coeff
    // preimages of embedded base elements, keyed by index in coeff
    std::unordered_map<uint64_t, FFElem> unembed;

    uint64_t q() const { return base.size(); }
    bool is_base() const { return r == 1; }
    // q = 2 collapses the sign group; several unit-side constructions need
    // q > 2 ("real" case).
    bool is_real() const { return base.size() > 2; }
    std::string describe() const;
};

Ring make_base_ring(Field f);
// Canonical constant-field extension of degree r.
Ring make_extension_ring(Field base, uint32_t r);

// Embed a base-side polynomial into the coefficient field of R.
ThetaPoly embed_to_coeff(const Ring& R, const ThetaPoly& a);
// Inverse of embed_to_coeff on coefficients; throws NotBaseField when some
// coefficient is outside the embedded base field.
ThetaPoly pull_to_base(const Ring& R, const ThetaPoly& a);

// Nonzero ideals of norm degree e correspond to monic generators of poly
// degree e / r (no ideals when r does not divide e).
uint64_t ideal_count(const Ring& R, uint32_t poly_deg);
ThetaPoly ideal_of_index(const Ring& R, uint32_t poly_deg, uint64_t idx);

// Norm of the ideal (g) down to A, as a monic polynomial over the base
// field: the product of the r coefficient-Frobenius conjugates of g.
ThetaPoly ideal_norm(const Ring& R, const ThetaPoly& g);

// Monic irreducible factors of P over the coefficient field, sorted; these
// are the primes of O_L above the base prime P (constant-field extensions
// are unramified).
std::vector<ThetaPoly> primes_above(const Ring& R, const ThetaPoly& P);
// Residual degree above P: r / gcd(r, deg P).
uint32_t inertia_degree(const Ring& R, const ThetaPoly& P);

// All monic irreducibles of the given poly degree over the coefficient
// field, in canonical index order.
std::vector<ThetaPoly> primes_of_poly_degree(const Ring& R, uint32_t poly_deg);

// O_L / (prime) realized inside the canonical field of the right size.
struct ResidueField {
    Field E;
    FFElem theta_bar;      // image of t
    FFElem coeff_gen_image; // image of the coefficient-field generator
};

ResidueField residue_field(const Ring& R, const ThetaPoly& prime);
// Reduce a coefficient-side polynomial modulo the prime.
FFElem residue_reduce(const ResidueField& rf, const ThetaPoly& x);

} // namespace carlgoss

#endif
