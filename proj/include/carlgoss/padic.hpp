#ifndef CARLGOSS_PADIC_HPP
#define CARLGOSS_PADIC_HPP

#include <cstdint>
#include <string>

#include "carlgoss/poly.hpp"

namespace carlgoss {

// Element of the completion A_P for monic irreducible P of degree d over the
// base field: value = P^val * unit, with the unit stored as a polynomial
// residue mod P^prec (degree < d*prec), not divisible by P.  An element that
// is zero to its precision has an empty unit, prec 0, and val holding the
// absolute precision bound (true valuation >= val).
class PAdicElem {
public:
    PAdicElem() = default;

    static PAdicElem zero(const ThetaPoly& P, int64_t abs_prec);
    // Embed an exact polynomial with N known unit digits.
    static PAdicElem from_poly(const ThetaPoly& a, const ThetaPoly& P, int64_t N);
    // Interpret g as known only mod P^W (absolute precision W).
    static PAdicElem from_residue(const ThetaPoly& g, const ThetaPoly& P, int64_t W);
    static PAdicElem from_unit(const ThetaPoly& P, int64_t val, const ThetaPoly& unit, int64_t N);

    const ThetaPoly& prime() const { return P_; }
    Field field() const { return P_.field(); }
    int64_t degree_P() const { return P_.degree(); }
    bool is_zero_to_prec() const { return unit_.is_zero(); }
    // Valuation for nonzero; for zero-to-precision the absolute bound.
    int64_t val() const { return val_; }
    int64_t prec() const { return prec_; } // unit digits (0 when zero)
    int64_t abs_prec() const { return val_ + prec_; }
    const ThetaPoly& unit() const { return unit_; }

    PAdicElem operator+(const PAdicElem& o) const;
    PAdicElem operator-(const PAdicElem& o) const;
    PAdicElem operator-() const;
    PAdicElem operator*(const PAdicElem& o) const;
    PAdicElem inv() const;
    PAdicElem frobenius(uint32_t e, uint64_t q) const; // x^(q^e)
    PAdicElem mul_P_power(int64_t j) const;            // exact shift by P^j
    PAdicElem reduced(int64_t new_abs_prec) const;
    PAdicElem pow(uint64_t e) const;

    // Value mod P^M as a polynomial of degree < d*M; requires val >= 0 and
    // M <= abs_prec.
    ThetaPoly residue(int64_t M) const;

    bool operator==(const PAdicElem& o) const;
    bool operator!=(const PAdicElem& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_compatible(const PAdicElem& o) const;
    ThetaPoly P_;
    int64_t val_ = 0;
    int64_t prec_ = 0;
    ThetaPoly unit_;
};

// Flat integral model of O_L tensor A_P at absolute precision: a polynomial
// over the coefficient field F_{q^r}, known mod Pimg^prec, where Pimg is P
// with coefficients embedded into F_{q^r}.  No valuation normalization (the
// ring has zero divisors when P splits); exact division by P powers consumes
// precision explicitly.
class PadicResidue {
public:
    PadicResidue() = default;
    PadicResidue(const ThetaPoly& value, const ThetaPoly& Pimg, int64_t prec);

    static PadicResidue zero(const ThetaPoly& Pimg, int64_t prec);

    const ThetaPoly& value() const { return value_; }
    const ThetaPoly& Pimg() const { return Pimg_; }
    int64_t prec() const { return prec_; }
    Field field() const { return Pimg_.field(); }
    bool is_zero_to_prec() const { return value_.is_zero(); }
    // Largest j <= prec with P^j dividing the value (prec for zero).
    int64_t valuation() const;

    PadicResidue operator+(const PadicResidue& o) const;
    PadicResidue operator-(const PadicResidue& o) const;
    PadicResidue operator*(const PadicResidue& o) const;
    PadicResidue mul_poly(const ThetaPoly& a) const;
    // x^q with precision growth min(q*prec, cap); q is the base field size.
    PadicResidue qpow(uint64_t q, int64_t cap) const;
    PadicResidue div_P_exact(int64_t j) const; // requires divisibility; prec -= j
    PadicResidue mul_inv_of(const ThetaPoly& unit) const; // unit coprime to P
    PadicResidue reduced(int64_t new_prec) const;

private:
    ThetaPoly pmod() const; // Pimg^prec
    ThetaPoly value_;
    ThetaPoly Pimg_;
    int64_t prec_ = 0;
};

} // namespace carlgoss

#endif
