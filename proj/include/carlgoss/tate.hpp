#ifndef CARLGOSS_TATE_HPP
#define CARLGOSS_TATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "carlgoss/laurent.hpp"
#include "carlgoss/padic.hpp"

namespace carlgoss {

inline ThetaPoly zero_like(const ThetaPoly& c) { return ThetaPoly::zero(c.field()); }
inline LaurentSeries zero_like(const LaurentSeries& c) { return LaurentSeries::zero(c.field(), c.prec()); }
inline PAdicElem zero_like(const PAdicElem& c) { return PAdicElem::zero(c.prime(), c.abs_prec()); }

inline bool slot_is_zero(const ThetaPoly& c) { return c.is_zero(); }
inline bool slot_is_zero(const LaurentSeries& c) { return c.is_zero_to_prec(); }
inline bool slot_is_zero(const PAdicElem& c) { return c.is_zero_to_prec(); }

// Polynomial in the deformation variable z truncated at z_max, with exact or
// truncated coefficients.  All z_max+1 slots are materialized; products drop
// powers above z_max (Tate-style truncation).
template <class C>
class TatePoly {
public:
    TatePoly() = default;
    TatePoly(std::vector<C> coeffs, int64_t z_max) : c_(std::move(coeffs)), zmax_(z_max) {
        if (c_.empty()) throw error("TatePoly needs at least one coefficient");
        if ((int64_t)c_.size() > zmax_ + 1) throw ZDegreeOverflow("more coefficients than z_max allows");
        while ((int64_t)c_.size() <= zmax_) c_.push_back(zero_like(c_.front()));
    }

    static TatePoly constant(const C& c, int64_t z_max) {
        return TatePoly(std::vector<C>{c}, z_max);
    }

    int64_t z_max() const { return zmax_; }
    const C& coeff(int64_t i) const { return c_[(size_t)i]; }
    C& coeff_mut(int64_t i) { return c_[(size_t)i]; }
    const std::vector<C>& coeffs() const { return c_; }

    // Degree of the stored polynomial part (-1 if all slots vanish).
    int64_t z_degree() const {
        for (int64_t i = zmax_; i >= 0; --i)
            if (!slot_is_zero(c_[(size_t)i])) return i;
        return -1;
    }

    TatePoly operator+(const TatePoly& o) const {
        check(o);
        std::vector<C> r;
        r.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r.push_back(c_[i] + o.c_[i]);
        return TatePoly(std::move(r), zmax_);
    }

    TatePoly operator-(const TatePoly& o) const {
        check(o);
        std::vector<C> r;
        r.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r.push_back(c_[i] - o.c_[i]);
        return TatePoly(std::move(r), zmax_);
    }

    TatePoly operator*(const TatePoly& o) const {
        check(o);
        std::vector<C> r;
        r.reserve(c_.size());
        for (int64_t k = 0; k <= zmax_; ++k) {
            C acc = c_[0] * o.c_[(size_t)k];
            for (int64_t i = 1; i <= k; ++i)
                acc = acc + c_[(size_t)i] * o.c_[(size_t)(k - i)];
            r.push_back(std::move(acc));
        }
        return TatePoly(std::move(r), zmax_);
    }

    TatePoly scaled(const C& s) const {
        std::vector<C> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(c * s);
        return TatePoly(std::move(r), zmax_);
    }

    // Multiply by z^j, dropping what overflows past z_max.
    TatePoly z_shifted(int64_t j) const {
        std::vector<C> r;
        r.reserve(c_.size());
        for (int64_t i = 0; i <= zmax_; ++i)
            r.push_back(i >= j ? c_[(size_t)(i - j)] : zero_like(c_.front()));
        return TatePoly(std::move(r), zmax_);
    }

    // Specialization z = 1: plain sum of the coefficients.
    C eval_z1() const {
        C acc = c_[0];
        for (size_t i = 1; i < c_.size(); ++i) acc = acc + c_[i];
        return acc;
    }

    bool operator==(const TatePoly& o) const { return zmax_ == o.zmax_ && c_ == o.c_; }
    bool operator!=(const TatePoly& o) const { return !(*this == o); }

private:
    void check(const TatePoly& o) const {
        if (zmax_ != o.zmax_) throw error("z_max mismatch");
    }
    std::vector<C> c_;
    int64_t zmax_ = 0;
};

// Multiplicative inverse in the Tate algebra over Laurent coefficients: the
// constant slot must be invertible; higher slots follow the usual recursion
// w_k = -w_0 * sum_{j=1..k} a_j w_{k-j}.
inline TatePoly<LaurentSeries> tate_inv(const TatePoly<LaurentSeries>& a) {
    LaurentSeries w0 = a.coeff(0).inv();
    std::vector<LaurentSeries> w{w0};
    for (int64_t k = 1; k <= a.z_max(); ++k) {
        LaurentSeries acc = a.coeff(1) * w[(size_t)(k - 1)];
        for (int64_t j = 2; j <= k; ++j)
            acc = acc + a.coeff(j) * w[(size_t)(k - j)];
        w.push_back(-(w0 * acc));
    }
    return TatePoly<LaurentSeries>(std::move(w), a.z_max());
}

TatePoly<LaurentSeries> tate_from_poly(const TatePoly<ThetaPoly>& a, int64_t prec);
std::string tate_to_string(const TatePoly<ThetaPoly>& a);

} // namespace carlgoss

#endif
