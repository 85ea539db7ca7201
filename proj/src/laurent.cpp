#include "carlgoss/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace carlgoss {

void LaurentSeries::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) c_.erase(c_.begin(), c_.begin() + (ptrdiff_t)lead);
    order_ += (int64_t)lead;
    if (c_.empty()) order_ = prec_;
}

LaurentSeries LaurentSeries::zero(Field f, int64_t prec) {
    LaurentSeries r;
    r.f_ = f;
    r.order_ = prec;
    r.prec_ = prec;
    return r;
}

LaurentSeries LaurentSeries::from_poly(const ThetaPoly& a, int64_t prec) {
    if (a.is_zero()) return zero(a.field(), prec);
    if (prec <= -a.degree())
        throw PrecisionExhausted("embedding keeps no known coefficients");
    LaurentSeries r;
    r.f_ = a.field();
    r.order_ = -a.degree();
    r.prec_ = prec;
    for (int64_t i = r.order_; i < prec && i <= 0; ++i)
        r.c_.push_back(a.coeff(-i));
    // tail positions between 1 and prec-1 are exact zeros of the polynomial
    for (int64_t i = std::max<int64_t>(r.order_, 1); i < prec; ++i)
        r.c_.push_back(a.field().zero());
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::monomial(const FFElem& c, int64_t v, int64_t prec) {
    LaurentSeries r;
    r.f_ = c.field();
    r.prec_ = prec;
    if (c.is_zero() || v >= prec) {
        r.order_ = prec;
        return r;
    }
    r.order_ = v;
    r.c_.assign((size_t)(prec - v), c.field().zero());
    r.c_[0] = c;
    return r;
}

LaurentSeries LaurentSeries::from_coeffs(Field f, int64_t order, int64_t prec, std::vector<FFElem> coeffs) {
    if ((int64_t)coeffs.size() != prec - order)
        throw error("coefficient count does not match order/prec");
    LaurentSeries r;
    r.f_ = f;
    r.order_ = order;
    r.prec_ = prec;
    r.c_ = std::move(coeffs);
    r.normalize();
    return r;
}

FFElem LaurentSeries::sgn() const {
    if (c_.empty()) throw error("sgn of series that is zero to precision");
    return c_[0];
}

FFElem LaurentSeries::coeff(int64_t i) const {
    if (i >= prec_) throw error("coefficient beyond known precision");
    if (i < order_) return f_.zero();
    return c_[(size_t)(i - order_)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (f_ != o.f_) throw FieldMismatch("series over different fields");
    LaurentSeries r;
    r.f_ = f_;
    r.prec_ = std::min(prec_, o.prec_);
    r.order_ = std::min(std::min(order_, o.order_), r.prec_);
    for (int64_t i = r.order_; i < r.prec_; ++i) {
        FFElem x = (i >= order_ && i < prec_) ? coeff(i) : f_.zero();
        FFElem y = (i >= o.order_ && i < o.prec_) ? o.coeff(i) : f_.zero();
        r.c_.push_back(x + y);
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    return *this + (-o);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (f_ != o.f_) throw FieldMismatch("series over different fields");
    LaurentSeries r;
    r.f_ = f_;
    r.prec_ = std::min(prec_ + o.order_, o.prec_ + order_);
    if (c_.empty() || o.c_.empty()) {
        r.order_ = r.prec_;
        return r;
    }
    r.order_ = order_ + o.order_;
    if (r.order_ >= r.prec_) {
        r.order_ = r.prec_;
        return r;
    }
    r.c_.assign((size_t)(r.prec_ - r.order_), f_.zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        int64_t vi = order_ + (int64_t)i;
        int64_t jmax = std::min((int64_t)o.c_.size(), r.prec_ - vi - o.order_);
        for (int64_t j = 0; j < jmax; ++j) {
            size_t k = (size_t)(vi + o.order_ + j - r.order_);
            r.c_[k] = r.c_[k] + c_[i] * o.c_[(size_t)j];
        }
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::operator*(const FFElem& s) const {
    if (s.is_zero()) return zero(f_, prec_);
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = c * s;
    return r;
}

LaurentSeries LaurentSeries::inv() const {
    if (c_.empty()) throw InvertZero("inverse of series that is zero to precision");
    // write x = lead * theta^{-o} * (1 + e); invert the unit part by the
    // standard recurrence, keeping the relative precision prec - order.
    int64_t rel = prec_ - order_;
    LaurentSeries r;
    r.f_ = f_;
    r.order_ = -order_;
    r.prec_ = prec_ - 2 * order_;
    FFElem linv = c_[0].inv();
    std::vector<FFElem> w((size_t)rel, f_.zero());
    w[0] = linv;
    for (int64_t m = 1; m < rel; ++m) {
        FFElem acc = f_.zero();
        int64_t jmax = std::min(m, (int64_t)c_.size() - 1);
        for (int64_t j = 1; j <= jmax; ++j)
            acc = acc + c_[(size_t)j] * w[(size_t)(m - j)];
        w[(size_t)m] = -(linv * acc);
    }
    r.c_ = std::move(w);
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::frobenius(uint32_t e, uint64_t q) const {
    uint64_t qe = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (qe > (uint64_t)1 << 56) throw error("frobenius exponent overflow");
        qe *= q;
    }
    LaurentSeries r;
    r.f_ = f_;
    r.prec_ = prec_ * (int64_t)qe;
    if (c_.empty()) {
        r.order_ = r.prec_;
        return r;
    }
    r.order_ = order_ * (int64_t)qe;
    r.c_.assign((size_t)(r.prec_ - r.order_), f_.zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        r.c_[i * qe] = ff_frobenius(c_[i], e, q);
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::truncated(int64_t new_prec) const {
    if (new_prec > prec_) throw PrecisionExhausted("cannot raise precision by truncation");
    LaurentSeries r;
    r.f_ = f_;
    r.prec_ = new_prec;
    r.order_ = std::min(order_, new_prec);
    if (!c_.empty() && order_ < new_prec)
        r.c_.assign(c_.begin(), c_.begin() + (size_t)(new_prec - order_));
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::shifted(int64_t dv) const {
    LaurentSeries r = *this;
    r.order_ += dv;
    r.prec_ += dv;
    return r;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    return f_ == o.f_ && order_ == o.order_ && prec_ == o.prec_ && c_ == o.c_;
}

bool agree_to_common_prec(const LaurentSeries& a, const LaurentSeries& b) {
    int64_t N = std::min(a.prec(), b.prec());
    int64_t lo = std::min(a.order(), b.order());
    for (int64_t i = lo; i < N; ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int64_t i = order_; i < prec_; ++i) {
        FFElem c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        bool parens = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << cs;
            continue;
        }
        if (!c.is_one()) os << (parens ? "(" + cs + ")" : cs) << "*";
        os << "t^" << -i;
    }
    if (first) os << "0";
    os << " + O(t^" << -prec_ << ")";
    return os.str();
}

LaurentSeries laurent_mul_poly(const LaurentSeries& a, const ThetaPoly& b) {
    if (b.is_zero()) return LaurentSeries::zero(a.field(), a.prec());
    if (a.is_zero_to_prec()) return LaurentSeries::zero(a.field(), a.prec() - b.degree());
    // exact multiplier: relative precision of a is preserved
    return a * LaurentSeries::from_poly(b, a.prec() - a.order() - b.degree());
}

LaurentSeries laurent_div_poly(const LaurentSeries& a, const ThetaPoly& b, int64_t target_prec) {
    if (b.is_zero()) throw DivisionByZeroPoly();
    int64_t d = b.degree();
    // want min(prec_a + d, (M + 2d) + order_a) >= target
    int64_t M = std::max<int64_t>(target_prec - 2 * d - a.order(), 1 - d);
    LaurentSeries binv = LaurentSeries::from_poly(b, M).inv();
    return a * binv;
}

} // namespace carlgoss
