#include "carlgoss/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace carlgoss {
namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Raw polynomial helpers over F_p, used only for modulus validation and
// canonical modulus search.  Coefficient vectors are constant-first with no
// trailing zeros.
using Raw = std::vector<uint32_t>;

void raw_trim(Raw& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Raw raw_mulmod(const Raw& a, const Raw& b, const Raw& m, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Raw c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + (uint64_t)a[i] * b[j]) % p;
    }
    // reduce by monic m
    size_t dm = m.size() - 1;
    for (size_t i = c.size(); i-- > dm;) {
        uint32_t t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (size_t j = 0; j < dm; ++j)
            c[i - dm + j] = (c[i - dm + j] + (uint64_t)(p - 1) * t % p * m[j]) % p;
    }
    c.resize(dm);
    raw_trim(c);
    return c;
}

Raw raw_powmod(Raw base, uint64_t e, const Raw& m, uint32_t p) {
    Raw r{1};
    while (e) {
        if (e & 1) r = raw_mulmod(r, base, m, p);
        base = raw_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Raw raw_sub(Raw a, const Raw& b, uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    raw_trim(a);
    return a;
}

Raw raw_gcd(Raw a, Raw b, uint32_t p) {
    auto mod = [p](Raw x, const Raw& y) {
        // remainder of x by y (y nonzero, not necessarily monic)
        uint32_t lead = y.back();
        // lead^{-1} mod p
        uint32_t li = 1;
        for (uint32_t t = 0; t < p - 2; ++t) li = (uint64_t)li * lead % p;
        while (x.size() >= y.size() && !x.empty()) {
            uint32_t f = (uint64_t)x.back() * li % p;
            size_t off = x.size() - y.size();
            for (size_t i = 0; i < y.size(); ++i)
                x[off + i] = (x[off + i] + (uint64_t)(p - f) * y[i]) % p;
            raw_trim(x);
        }
        return x;
    };
    while (!b.empty()) {
        Raw r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool raw_is_irreducible(const Raw& f, uint32_t p) {
    size_t k = f.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    Raw x{0, 1};
    // x^(p^k) == x mod f
    Raw xp = x;
    for (size_t i = 0; i < k; ++i) xp = raw_powmod(xp, p, f, p);
    if (raw_sub(xp, x, p) != Raw{}) return false;
    // gcd(x^(p^(k/l)) - x, f) == 1 for every prime divisor l of k
    size_t kk = k;
    for (size_t l = 2; l <= kk; ++l) {
        if (kk % l != 0) continue;
        while (kk % l == 0) kk /= l;
        Raw xe = x;
        for (size_t i = 0; i < k / l; ++i) xe = raw_powmod(xe, p, f, p);
        Raw g = raw_gcd(raw_sub(xe, x, p), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

struct InternKey {
    uint32_t p, k;
    std::vector<uint32_t> modulus;
    bool operator<(const InternKey& o) const {
        return std::tie(p, k, modulus) < std::tie(o.p, o.k, o.modulus);
    }
};

std::mutex g_intern_mutex;
std::map<InternKey, std::unique_ptr<FieldRep>>& intern_table() {
    static std::map<InternKey, std::unique_ptr<FieldRep>> t;
    return t;
}

const FieldRep* intern(uint32_t p, uint32_t k, std::vector<uint32_t> modulus) {
    std::lock_guard<std::mutex> lock(g_intern_mutex);
    InternKey key{p, k, modulus};
    auto& tab = intern_table();
    auto it = tab.find(key);
    if (it == tab.end()) {
        auto rep = std::make_unique<FieldRep>();
        rep->p = p;
        rep->k = k;
        rep->modulus = std::move(modulus);
        rep->size = 1;
        for (uint32_t i = 0; i < k; ++i) rep->size *= p;
        it = tab.emplace(std::move(key), std::move(rep)).first;
    }
    return it->second.get();
}

} // namespace

Field Field::make(uint32_t p, uint32_t k, const std::vector<uint32_t>& modulus) {
    if (!is_prime_u32(p)) throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw error("field degree must be positive");
    if (modulus.size() != k + 1 || modulus[k] != 1)
        throw error("modulus must be monic of degree k");
    Raw m = modulus;
    for (auto& c : m) c %= p;
    if (m[k] != 1) throw error("modulus must be monic of degree k");
    if (!raw_is_irreducible(m, p)) throw ReducibleModulus("modulus is reducible over F_" + std::to_string(p));
    return Field(intern(p, k, m));
}

Field Field::make(uint32_t p, uint32_t k) {
    if (!is_prime_u32(p)) throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw error("field degree must be positive");
    // constant-coefficient-fastest scan over monic degree-k polynomials
    uint64_t count = 1;
    for (uint32_t i = 0; i < k; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
        Raw m(k + 1, 0);
        uint64_t t = idx;
        for (uint32_t i = 0; i < k; ++i) {
            m[i] = (uint32_t)(t % p);
            t /= p;
        }
        m[k] = 1;
        if (raw_is_irreducible(m, p)) return Field(intern(p, k, m));
    }
    throw error("no irreducible modulus found"); // unreachable
}

FFElem Field::zero() const {
    return FFElem(*this, FFElem::Digits(rep_->k, 0));
}

FFElem Field::one() const {
    FFElem::Digits d(rep_->k, 0);
    d[0] = 1;
    return FFElem(*this, d);
}

FFElem Field::gen() const {
    FFElem::Digits d(rep_->k, 0);
    if (rep_->k >= 2)
        d[1] = 1;
    else
        d[0] = (rep_->p - rep_->modulus[0]) % rep_->p; // u = -c for modulus u+c
    return FFElem(*this, d);
}

FFElem Field::from_int(uint64_t n) const {
    FFElem::Digits d(rep_->k, 0);
    d[0] = (uint32_t)(n % rep_->p);
    return FFElem(*this, d);
}

FFElem Field::from_digits(const std::vector<uint32_t>& digits) const {
    if (digits.size() != rep_->k) throw error("digit vector has wrong length");
    FFElem::Digits d(digits.begin(), digits.end());
    for (auto& x : d) x %= rep_->p;
    return FFElem(*this, std::move(d));
}

FFElem Field::element(uint64_t index) const {
    FFElem::Digits d(rep_->k, 0);
    for (uint32_t i = 0; i < rep_->k; ++i) {
        d[i] = (uint32_t)(index % rep_->p);
        index /= rep_->p;
    }
    return FFElem(*this, std::move(d));
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << rep_->size;
    if (rep_->k > 1) {
        os << " = F_" << rep_->p << "[u]/(";
        bool first = true;
        for (size_t i = rep_->modulus.size(); i-- > 0;) {
            uint32_t c = rep_->modulus[i];
            if (c == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0 || c != 1) os << c;
            if (i > 0 && c != 1) os << "*";
            if (i >= 1) os << "u";
            if (i >= 2) os << "^" << i;
        }
        os << ")";
    }
    return os.str();
}

void FFElem::check_same(const FFElem& o) const {
    if (f_ != o.f_) throw FieldMismatch();
}

bool FFElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint32_t x) { return x == 0; });
}

bool FFElem::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

uint64_t FFElem::index() const {
    uint64_t idx = 0;
    uint64_t mul = 1;
    for (uint32_t d : c_) {
        idx += d * mul;
        mul *= f_.p();
    }
    return idx;
}

FFElem FFElem::operator+(const FFElem& o) const {
    check_same(o);
    Digits d(c_);
    uint32_t p = f_.p();
    for (size_t i = 0; i < d.size(); ++i) d[i] = (d[i] + o.c_[i]) % p;
    return FFElem(f_, std::move(d));
}

FFElem FFElem::operator-(const FFElem& o) const {
    check_same(o);
    Digits d(c_);
    uint32_t p = f_.p();
    for (size_t i = 0; i < d.size(); ++i) d[i] = (d[i] + p - o.c_[i]) % p;
    return FFElem(f_, std::move(d));
}

FFElem FFElem::operator-() const {
    Digits d(c_);
    uint32_t p = f_.p();
    for (auto& x : d) x = (p - x) % p;
    return FFElem(f_, std::move(d));
}

FFElem FFElem::operator*(const FFElem& o) const {
    check_same(o);
    uint32_t p = f_.p();
    uint32_t k = f_.k();
    if (k == 1) {
        Digits d(1, (uint32_t)((uint64_t)c_[0] * o.c_[0] % p));
        return FFElem(f_, std::move(d));
    }
    boost::container::small_vector<uint32_t, 8> prod(2 * k - 1, 0);
    for (uint32_t i = 0; i < k; ++i) {
        if (c_[i] == 0) continue;
        for (uint32_t j = 0; j < k; ++j)
            prod[i + j] = (prod[i + j] + (uint64_t)c_[i] * o.c_[j]) % p;
    }
    const auto& m = f_.modulus();
    for (size_t i = prod.size(); i-- > k;) {
        uint32_t t = prod[i];
        if (t == 0) continue;
        prod[i] = 0;
        for (uint32_t j = 0; j < k; ++j)
            prod[i - k + j] = (prod[i - k + j] + (uint64_t)(p - m[j]) % p * t) % p;
    }
    Digits d(prod.begin(), prod.begin() + k);
    return FFElem(f_, std::move(d));
}

FFElem FFElem::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    // x^(size-2); fields here are tiny, no need for extended Euclid
    return pow(f_.size() - 2);
}

FFElem FFElem::operator/(const FFElem& o) const {
    return *this * o.inv();
}

FFElem FFElem::pow(uint64_t e) const {
    FFElem r = f_.one();
    FFElem b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool FFElem::operator==(const FFElem& o) const {
    return f_ == o.f_ && c_ == o.c_;
}

std::string FFElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        uint32_t c = c_[i];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1 && c != 1) os << "*";
        if (i >= 1) os << "u";
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

FFElem ff_frobenius(const FFElem& x, uint32_t e, uint64_t q) {
    FFElem r = x;
    for (uint32_t i = 0; i < e; ++i) r = r.pow(q);
    return r;
}

FFElem subfield_generator_image(Field sub, Field sup) {
    if (sub.p() != sup.p()) throw FieldMismatch("different characteristics");
    if (sup.k() % sub.k() != 0) throw error("not a subfield: degree does not divide");
    if (sub == sup) return sub.gen();
    const auto& m = sub.modulus();
    for (uint64_t idx = 0; idx < sup.size(); ++idx) {
        FFElem x = sup.element(idx);
        // evaluate sub's modulus at x
        FFElem acc = sup.zero();
        for (size_t i = m.size(); i-- > 0;) {
            acc = acc * x + sup.from_int(m[i]);
        }
        if (acc.is_zero()) return x;
    }
    throw error("no root of subfield modulus found"); // unreachable for valid towers
}

FFElem embed_elem(const FFElem& x, Field sup, const FFElem& gen_image) {
    FFElem acc = sup.zero();
    for (size_t i = x.digits().size(); i-- > 0;) {
        acc = acc * gen_image + sup.from_int(x.digit(i));
    }
    return acc;
}

} // namespace carlgoss
