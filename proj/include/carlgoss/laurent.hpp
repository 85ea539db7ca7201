#ifndef CARLGOSS_LAURENT_HPP
#define CARLGOSS_LAURENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "carlgoss/poly.hpp"

namespace carlgoss {

// Truncated Laurent series at the infinite place: sum of c_i * theta^{-i}
// for order <= i < prec, plus an unknown tail of valuation >= prec.  v_inf is
// normalized by v_inf(theta) = -1, so the stored exponent i is the valuation
// of the monomial theta^{-i}.  A series that is zero to its precision stores
// no coefficients and order == prec.
//
// Precision rules: add keeps min(prec_a, prec_b); mul keeps
// min(prec_a + ord_b, prec_b + ord_a); inv of a unit-normalized series keeps
// relative precision, giving prec_a - 2*ord_a.  Coefficients below known
// precision are never fabricated.
class LaurentSeries {
public:
    LaurentSeries() = default;

    static LaurentSeries zero(Field f, int64_t prec);
    // Embed an exact polynomial, keeping coefficients with valuation < prec.
    static LaurentSeries from_poly(const ThetaPoly& a, int64_t prec);
    // c * theta^{-v} + O(theta^{-prec})
    static LaurentSeries monomial(const FFElem& c, int64_t v, int64_t prec);
    static LaurentSeries from_coeffs(Field f, int64_t order, int64_t prec, std::vector<FFElem> coeffs);

    Field field() const { return f_; }
    int64_t order() const { return order_; }
    int64_t prec() const { return prec_; }
    bool is_zero_to_prec() const { return c_.empty(); }
    // Valuation; for a series that is zero to precision this is the precision
    // bound (the true valuation is >= it).
    int64_t v_inf() const { return order_; }
    FFElem sgn() const; // leading coefficient
    // Coefficient of theta^{-i}; exact zero above the leading term, error for
    // i >= prec (reading beyond known precision is a bug).
    FFElem coeff(int64_t i) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator-() const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator*(const FFElem& s) const;
    LaurentSeries inv() const;
    // x -> x^(q^e); exponents scale by q^e, precision scales too.
    LaurentSeries frobenius(uint32_t e, uint64_t q) const;
    LaurentSeries truncated(int64_t new_prec) const; // new_prec <= prec
    LaurentSeries shifted(int64_t dv) const;         // * theta^{-dv}, exact

    bool operator==(const LaurentSeries& o) const;
    bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void normalize();
    Field f_;
    int64_t order_ = 0;
    int64_t prec_ = 0;
    std::vector<FFElem> c_; // c_[j] is coefficient of theta^{-(order_+j)}
};

// True when a and b agree on all coefficients with valuation < min prec.
bool agree_to_common_prec(const LaurentSeries& a, const LaurentSeries& b);

// a / b_poly computed so the result has absolute precision >= target_prec
// when a's own precision allows it.
LaurentSeries laurent_div_poly(const LaurentSeries& a, const ThetaPoly& b, int64_t target_prec);
LaurentSeries laurent_mul_poly(const LaurentSeries& a, const ThetaPoly& b);

} // namespace carlgoss

#endif
