#include "carlgoss/padic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace carlgoss {

namespace {

std::vector<uint64_t> poly_key(const ThetaPoly& a) {
    std::vector<uint64_t> k;
    k.reserve((size_t)(a.degree() + 2));
    k.push_back((uint64_t)(uintptr_t)a.field().rep());
    for (int64_t i = 0; i <= a.degree(); ++i) k.push_back(a.coeff(i).index());
    return k;
}

std::shared_mutex g_pow_mutex;
std::map<std::pair<std::vector<uint64_t>, uint64_t>, ThetaPoly>& pow_table() {
    static std::map<std::pair<std::vector<uint64_t>, uint64_t>, ThetaPoly> t;
    return t;
}

// P^e, memoized; hot paths hit this once per arithmetic op.
const ThetaPoly& cached_pow(const ThetaPoly& P, uint64_t e) {
    auto key = std::make_pair(poly_key(P), e);
    {
        std::shared_lock lock(g_pow_mutex);
        auto it = pow_table().find(key);
        if (it != pow_table().end()) return it->second;
    }
    ThetaPoly v = P.pow(e);
    std::unique_lock lock(g_pow_mutex);
    return pow_table().emplace(std::move(key), std::move(v)).first->second;
}

std::mutex g_prime_mutex;
void validate_prime(const ThetaPoly& P) {
    static std::map<std::vector<uint64_t>, bool> memo;
    auto key = poly_key(P);
    {
        std::lock_guard lock(g_prime_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) {
            if (!it->second) throw NotIrreducible("P must be monic irreducible of positive degree");
            return;
        }
    }
    bool ok = P.degree() >= 1 && P.is_monic() && poly_is_irreducible(P);
    {
        std::lock_guard lock(g_prime_mutex);
        memo[key] = ok;
    }
    if (!ok) throw NotIrreducible("P must be monic irreducible of positive degree");
}

} // namespace

PAdicElem PAdicElem::zero(const ThetaPoly& P, int64_t abs_prec) {
    validate_prime(P);
    PAdicElem r;
    r.P_ = P;
    r.val_ = abs_prec;
    r.prec_ = 0;
    r.unit_ = ThetaPoly::zero(P.field());
    return r;
}

PAdicElem PAdicElem::from_poly(const ThetaPoly& a, const ThetaPoly& P, int64_t N) {
    validate_prime(P);
    if (N < 1) throw PrecisionExhausted("need at least one unit digit");
    if (a.is_zero()) return zero(P, N);
    ThetaPoly u = a;
    int64_t v = 0;
    while (true) {
        auto [q, r] = poly_divmod(u, P);
        if (!r.is_zero()) break;
        u = q;
        ++v;
    }
    ThetaPoly mod = cached_pow(P, (uint64_t)N);
    PAdicElem r;
    r.P_ = P;
    r.val_ = v;
    r.prec_ = N;
    r.unit_ = u % mod;
    return r;
}

PAdicElem PAdicElem::from_residue(const ThetaPoly& g, const ThetaPoly& P, int64_t W) {
    validate_prime(P);
    if (W < 1) throw PrecisionExhausted("empty residue window");
    ThetaPoly v = g % cached_pow(P, (uint64_t)W);
    if (v.is_zero()) return zero(P, W);
    ThetaPoly u = v;
    int64_t val = 0;
    while (val < W) {
        auto [q, r] = poly_divmod(u, P);
        if (!r.is_zero()) break;
        u = q;
        ++val;
    }
    PAdicElem res;
    res.P_ = P;
    res.val_ = val;
    res.prec_ = W - val;
    res.unit_ = u % cached_pow(P, (uint64_t)res.prec_);
    return res;
}

PAdicElem PAdicElem::from_unit(const ThetaPoly& P, int64_t val, const ThetaPoly& unit, int64_t N) {
    validate_prime(P);
    if (N < 1) throw PrecisionExhausted("need at least one unit digit");
    ThetaPoly u = unit % cached_pow(P, (uint64_t)N);
    if (u.is_zero() || (u % P).is_zero())
        throw error("unit part must be nonzero and coprime to P");
    PAdicElem r;
    r.P_ = P;
    r.val_ = val;
    r.prec_ = N;
    r.unit_ = u;
    return r;
}

void PAdicElem::check_compatible(const PAdicElem& o) const {
    if (P_ != o.P_) throw PrimeMismatch();
}

PAdicElem PAdicElem::operator+(const PAdicElem& o) const {
    check_compatible(o);
    int64_t M = std::min(abs_prec(), o.abs_prec());
    if (is_zero_to_prec() && o.is_zero_to_prec()) return zero(P_, M);
    if (is_zero_to_prec()) return o.reduced(M);
    if (o.is_zero_to_prec()) return reduced(M);
    int64_t v = std::min(val_, o.val_);
    if (M <= v) return zero(P_, M);
    ThetaPoly mod = cached_pow(P_, (uint64_t)(M - v));
    ThetaPoly sum = (cached_pow(P_, (uint64_t)(val_ - v)) * unit_ + cached_pow(P_, (uint64_t)(o.val_ - v)) * o.unit_) % mod;
    PAdicElem r = from_residue(sum, P_, M - v);
    r.val_ += v;
    return r;
}

PAdicElem PAdicElem::operator-() const {
    PAdicElem r = *this;
    r.unit_ = -r.unit_;
    return r;
}

PAdicElem PAdicElem::operator-(const PAdicElem& o) const {
    return *this + (-o);
}

PAdicElem PAdicElem::operator*(const PAdicElem& o) const {
    check_compatible(o);
    if (is_zero_to_prec() || o.is_zero_to_prec()) {
        // O(P^va) * (P^vb unit) has valuation >= va + vb
        int64_t va = val_, vb = o.val_;
        return zero(P_, va + vb);
    }
    int64_t N = std::min(prec_, o.prec_);
    PAdicElem r;
    r.P_ = P_;
    r.val_ = val_ + o.val_;
    r.prec_ = N;
    r.unit_ = (unit_ * o.unit_) % cached_pow(P_, (uint64_t)N);
    return r;
}

PAdicElem PAdicElem::inv() const {
    if (is_zero_to_prec()) throw InvertZero("inverse of zero to precision");
    PAdicElem r;
    r.P_ = P_;
    r.val_ = -val_;
    r.prec_ = prec_;
    r.unit_ = poly_invmod(unit_, cached_pow(P_, (uint64_t)prec_));
    return r;
}

PAdicElem PAdicElem::frobenius(uint32_t e, uint64_t q) const {
    uint64_t qe = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (qe > (uint64_t)1 << 40) throw error("frobenius exponent overflow");
        qe *= q;
    }
    if (is_zero_to_prec()) return zero(P_, val_ * (int64_t)qe);
    PAdicElem r;
    r.P_ = P_;
    r.val_ = val_ * (int64_t)qe;
    r.prec_ = prec_ * (int64_t)qe;
    r.unit_ = poly_powmod(unit_, qe, cached_pow(P_, (uint64_t)r.prec_));
    return r;
}

PAdicElem PAdicElem::mul_P_power(int64_t j) const {
    PAdicElem r = *this;
    r.val_ += j;
    return r;
}

PAdicElem PAdicElem::reduced(int64_t new_abs_prec) const {
    if (new_abs_prec > abs_prec()) throw PrecisionExhausted("cannot raise precision");
    if (is_zero_to_prec()) {
        PAdicElem r = *this;
        r.val_ = new_abs_prec;
        return r;
    }
    if (new_abs_prec <= val_) return zero(P_, new_abs_prec);
    PAdicElem r = *this;
    r.prec_ = new_abs_prec - val_;
    r.unit_ = unit_ % cached_pow(P_, (uint64_t)r.prec_);
    if (r.unit_.is_zero()) return zero(P_, new_abs_prec); // cannot happen for true units
    return r;
}

PAdicElem PAdicElem::pow(uint64_t e) const {
    if (e == 0) return from_poly(ThetaPoly::one(P_.field()), P_, std::max<int64_t>(prec_, 1));
    PAdicElem r = *this;
    PAdicElem b = *this;
    --e;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

ThetaPoly PAdicElem::residue(int64_t M) const {
    if (M > abs_prec()) throw PrecisionExhausted("residue beyond known precision");
    if (is_zero_to_prec() || val_ >= M) return ThetaPoly::zero(P_.field());
    if (val_ < 0) throw error("residue of non-integral element");
    return (cached_pow(P_, (uint64_t)val_) * unit_) % cached_pow(P_, (uint64_t)M);
}

bool PAdicElem::operator==(const PAdicElem& o) const {
    return P_ == o.P_ && val_ == o.val_ && prec_ == o.prec_ && unit_ == o.unit_;
}

std::string PAdicElem::to_string() const {
    std::ostringstream os;
    if (is_zero_to_prec()) {
        os << "O(P^" << val_ << ")";
        return os.str();
    }
    os << "P^" << val_ << "*(" << unit_.to_string() << ") + O(P^" << abs_prec() << ")";
    return os.str();
}

PadicResidue::PadicResidue(const ThetaPoly& value, const ThetaPoly& Pimg, int64_t prec)
    : value_(value), Pimg_(Pimg), prec_(prec) {
    if (prec_ < 1) throw PrecisionExhausted("residue precision exhausted");
    value_ = value_ % pmod();
}

PadicResidue PadicResidue::zero(const ThetaPoly& Pimg, int64_t prec) {
    return PadicResidue(ThetaPoly::zero(Pimg.field()), Pimg, prec);
}

ThetaPoly PadicResidue::pmod() const {
    return cached_pow(Pimg_, (uint64_t)prec_);
}

int64_t PadicResidue::valuation() const {
    if (value_.is_zero()) return prec_;
    ThetaPoly u = value_;
    int64_t v = 0;
    while (v < prec_) {
        auto [q, r] = poly_divmod(u, Pimg_);
        if (!r.is_zero()) break;
        u = q;
        ++v;
    }
    return v;
}

PadicResidue PadicResidue::operator+(const PadicResidue& o) const {
    if (Pimg_ != o.Pimg_) throw PrimeMismatch();
    int64_t N = std::min(prec_, o.prec_);
    return PadicResidue(value_ + o.value_, Pimg_, N);
}

PadicResidue PadicResidue::operator-(const PadicResidue& o) const {
    if (Pimg_ != o.Pimg_) throw PrimeMismatch();
    int64_t N = std::min(prec_, o.prec_);
    return PadicResidue(value_ - o.value_, Pimg_, N);
}

PadicResidue PadicResidue::operator*(const PadicResidue& o) const {
    if (Pimg_ != o.Pimg_) throw PrimeMismatch();
    int64_t N = std::min(prec_, o.prec_);
    return PadicResidue(value_ * o.value_, Pimg_, N);
}

PadicResidue PadicResidue::mul_poly(const ThetaPoly& a) const {
    return PadicResidue(value_ * a, Pimg_, prec_);
}

PadicResidue PadicResidue::qpow(uint64_t q, int64_t cap) const {
    int64_t np = std::min<int64_t>(prec_ * (int64_t)q, cap);
    if (np < prec_) np = prec_;
    ThetaPoly mod = cached_pow(Pimg_, (uint64_t)np);
    return PadicResidue(poly_powmod(value_, q, mod), Pimg_, np);
}

PadicResidue PadicResidue::div_P_exact(int64_t j) const {
    if (j == 0) return *this;
    if (j < 0 || j >= prec_) throw PrecisionExhausted("P-division consumes all precision");
    ThetaPoly u = value_;
    for (int64_t i = 0; i < j; ++i) {
        auto [q, r] = poly_divmod(u, Pimg_);
        if (!r.is_zero()) throw error("exact P-division of non-divisible element");
        u = q;
    }
    return PadicResidue(u, Pimg_, prec_ - j);
}

PadicResidue PadicResidue::mul_inv_of(const ThetaPoly& unit) const {
    ThetaPoly inv = poly_invmod(unit, pmod());
    return PadicResidue(value_ * inv, Pimg_, prec_);
}

PadicResidue PadicResidue::reduced(int64_t new_prec) const {
    if (new_prec > prec_) throw PrecisionExhausted("cannot raise precision");
    return PadicResidue(value_, Pimg_, new_prec);
}

} // namespace carlgoss
