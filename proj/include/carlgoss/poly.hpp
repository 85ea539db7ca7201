#ifndef CARLGOSS_POLY_HPP
#define CARLGOSS_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlgoss/field.hpp"

namespace carlgoss {

// Dense univariate polynomial over a finite field, lowest coefficient first,
// no trailing zeros.  The main variable is written t (for theta) but the same
// type doubles as F_q[z] inside the deformed machinery.
class ThetaPoly {
public:
    ThetaPoly() = default;
    explicit ThetaPoly(Field f) : f_(f) {}
    ThetaPoly(Field f, std::vector<FFElem> coeffs);

    static ThetaPoly zero(Field f) { return ThetaPoly(f); }
    static ThetaPoly one(Field f) { return constant(f.one()); }
    static ThetaPoly theta(Field f);
    static ThetaPoly constant(const FFElem& c);
    static ThetaPoly monomial(const FFElem& c, uint32_t deg);

    Field field() const { return f_; }
    int64_t degree() const { return (int64_t)c_.size() - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    FFElem coeff(int64_t i) const; // zero outside stored range
    const FFElem& lead() const;
    const std::vector<FFElem>& coeffs() const { return c_; }

    ThetaPoly operator+(const ThetaPoly& o) const;
    ThetaPoly operator-(const ThetaPoly& o) const;
    ThetaPoly operator-() const;
    ThetaPoly operator*(const ThetaPoly& o) const;
    ThetaPoly operator*(const FFElem& s) const;
    bool operator==(const ThetaPoly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const ThetaPoly& o) const { return !(*this == o); }

    ThetaPoly pow(uint64_t e) const;
    ThetaPoly shifted(uint32_t k) const; // * t^k
    ThetaPoly monic() const;
    FFElem eval(const FFElem& x) const;
    // Evaluate with coefficients pushed through an embedding into x's field.
    FFElem eval_embedded(const FFElem& x, const FFElem& gen_image) const;
    // Apply c -> c^(q^e) to every coefficient (the coefficient Frobenius).
    ThetaPoly coeff_frobenius(uint32_t e, uint64_t q) const;
    ThetaPoly map_coeffs(Field sup, const FFElem& gen_image) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    void check_same(const ThetaPoly& o) const;
    Field f_;
    std::vector<FFElem> c_;
};

std::pair<ThetaPoly, ThetaPoly> poly_divmod(const ThetaPoly& a, const ThetaPoly& b);
ThetaPoly operator/(const ThetaPoly& a, const ThetaPoly& b); // quotient
ThetaPoly operator%(const ThetaPoly& a, const ThetaPoly& b);
ThetaPoly poly_gcd(const ThetaPoly& a, const ThetaPoly& b); // monic
// g = gcd, plus s,t with s*a + t*b = g.
struct XgcdResult {
    ThetaPoly g, s, t;
};
XgcdResult poly_xgcd(const ThetaPoly& a, const ThetaPoly& b);
ThetaPoly poly_powmod(const ThetaPoly& base, uint64_t e, const ThetaPoly& mod);
ThetaPoly poly_derivative(const ThetaPoly& a);
// Inverse of a modulo m (coprime required).
ThetaPoly poly_invmod(const ThetaPoly& a, const ThetaPoly& m);

bool poly_is_irreducible(const ThetaPoly& f);

// Monic polynomials of degree d over f, enumerated in lexicographic
// coefficient order with the constant coefficient fastest.  Random access by
// index enables deterministic parallel chunking.
uint64_t monic_count(Field f, uint32_t d); // q^d, throws on overflow
ThetaPoly monic_of_index(Field f, uint32_t d, uint64_t idx);

struct PolyFactor {
    ThetaPoly p; // monic irreducible
    uint32_t multiplicity;
};
struct Factorization {
    FFElem unit; // leading coefficient of the input
    std::vector<PolyFactor> factors; // sorted by (degree, coefficient indexes)
};
// Squarefree + distinct-degree + Cantor-Zassenhaus equal-degree split.  The
// seed fixes the random choices; the sorted output is seed-independent.
Factorization poly_factorize(const ThetaPoly& f, uint64_t seed);
// Uses the process-wide default seed (0 unless overridden, e.g. by --seed).
Factorization poly_factorize(const ThetaPoly& f);
void set_default_factor_seed(uint64_t seed);
uint64_t default_factor_seed();

// Canonical comparison used to order factor lists, primes, etc.
bool poly_less(const ThetaPoly& a, const ThetaPoly& b);

// Text grammar: sums of products of powers of integers, `t` and `u`,
// e.g. "t^2+2*t+1", "(u+1)*t+u".  main_var selects which letter denotes the
// polynomial variable; the other letter (if allowed) denotes the field
// generator.
ThetaPoly parse_poly(const std::string& text, Field f, char main_var = 't', bool allow_gen = true);
std::string format_poly(const ThetaPoly& a, const std::string& var = "t");

} // namespace carlgoss

#endif
