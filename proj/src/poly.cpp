#include "carlgoss/poly.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <random>
#include <sstream>

namespace carlgoss {

ThetaPoly::ThetaPoly(Field f, std::vector<FFElem> coeffs) : f_(f), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c.field() != f_) throw FieldMismatch("coefficient from wrong field");
    trim();
}

ThetaPoly ThetaPoly::theta(Field f) {
    return ThetaPoly(f, {f.zero(), f.one()});
}

ThetaPoly ThetaPoly::constant(const FFElem& c) {
    ThetaPoly r(c.field());
    if (!c.is_zero()) r.c_.push_back(c);
    return r;
}

ThetaPoly ThetaPoly::monomial(const FFElem& c, uint32_t deg) {
    ThetaPoly r(c.field());
    if (!c.is_zero()) {
        r.c_.assign(deg, c.field().zero());
        r.c_.push_back(c);
    }
    return r;
}

void ThetaPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void ThetaPoly::check_same(const ThetaPoly& o) const {
    if (f_ != o.f_) throw FieldMismatch("polynomials over different fields");
}

FFElem ThetaPoly::coeff(int64_t i) const {
    if (i < 0 || i >= (int64_t)c_.size()) return f_.zero();
    return c_[(size_t)i];
}

const FFElem& ThetaPoly::lead() const {
    if (c_.empty()) throw error("leading coefficient of zero polynomial");
    return c_.back();
}

ThetaPoly ThetaPoly::operator+(const ThetaPoly& o) const {
    check_same(o);
    ThetaPoly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), f_.zero());
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size() && i < o.c_.size())
            r.c_[i] = c_[i] + o.c_[i];
        else if (i < c_.size())
            r.c_[i] = c_[i];
        else
            r.c_[i] = o.c_[i];
    }
    r.trim();
    return r;
}

ThetaPoly ThetaPoly::operator-(const ThetaPoly& o) const {
    return *this + (-o);
}

ThetaPoly ThetaPoly::operator-() const {
    ThetaPoly r(f_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

ThetaPoly ThetaPoly::operator*(const ThetaPoly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return ThetaPoly(f_);
    ThetaPoly r(f_);
    r.c_.assign(c_.size() + o.c_.size() - 1, f_.zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

ThetaPoly ThetaPoly::operator*(const FFElem& s) const {
    ThetaPoly r(f_);
    if (s.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    r.trim();
    return r;
}

ThetaPoly ThetaPoly::pow(uint64_t e) const {
    ThetaPoly r = ThetaPoly::one(f_);
    ThetaPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

ThetaPoly ThetaPoly::shifted(uint32_t k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : ThetaPoly(f_, c_);
    ThetaPoly r(f_);
    r.c_.assign(k, f_.zero());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

ThetaPoly ThetaPoly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return *this * lead().inv();
}

FFElem ThetaPoly::eval(const FFElem& x) const {
    FFElem acc = x.field().zero();
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].field() != x.field()) throw FieldMismatch("eval: coefficient field differs");
        acc = acc * x + c_[i];
    }
    return acc;
}

FFElem ThetaPoly::eval_embedded(const FFElem& x, const FFElem& gen_image) const {
    FFElem acc = x.field().zero();
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x + embed_elem(c_[i], x.field(), gen_image);
    return acc;
}

ThetaPoly ThetaPoly::coeff_frobenius(uint32_t e, uint64_t q) const {
    ThetaPoly r(f_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(ff_frobenius(c, e, q));
    r.trim();
    return r;
}

ThetaPoly ThetaPoly::map_coeffs(Field sup, const FFElem& gen_image) const {
    ThetaPoly r(sup);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(embed_elem(c, sup, gen_image));
    r.trim();
    return r;
}

std::string ThetaPoly::to_string(const std::string& var) const {
    return format_poly(*this, var);
}

std::pair<ThetaPoly, ThetaPoly> poly_divmod(const ThetaPoly& a, const ThetaPoly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly();
    if (a.field() != b.field()) throw FieldMismatch("divmod over different fields");
    Field f = a.field();
    if (a.degree() < b.degree()) return {ThetaPoly::zero(f), a};
    FFElem linv = b.lead().inv();
    std::vector<FFElem> rem(a.coeffs());
    size_t db = (size_t)b.degree();
    std::vector<FFElem> quot(rem.size() - db, f.zero());
    for (size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        FFElem qc = rem[i] * linv;
        quot[i - db] = qc;
        for (size_t j = 0; j <= db; ++j)
            rem[i - db + j] = rem[i - db + j] - qc * b.coeff((int64_t)j);
    }
    rem.resize(db);
    return {ThetaPoly(f, std::move(quot)), ThetaPoly(f, std::move(rem))};
}

ThetaPoly operator/(const ThetaPoly& a, const ThetaPoly& b) {
    return poly_divmod(a, b).first;
}

ThetaPoly operator%(const ThetaPoly& a, const ThetaPoly& b) {
    return poly_divmod(a, b).second;
}

ThetaPoly poly_gcd(const ThetaPoly& a, const ThetaPoly& b) {
    ThetaPoly x = a, y = b;
    while (!y.is_zero()) {
        ThetaPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XgcdResult poly_xgcd(const ThetaPoly& a, const ThetaPoly& b) {
    Field f = a.field();
    ThetaPoly r0 = a, r1 = b;
    ThetaPoly s0 = ThetaPoly::one(f), s1 = ThetaPoly::zero(f);
    ThetaPoly t0 = ThetaPoly::zero(f), t1 = ThetaPoly::one(f);
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        ThetaPoly s2 = s0 - q * s1;
        ThetaPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        FFElem linv = r0.lead().inv();
        r0 = r0 * linv;
        s0 = s0 * linv;
        t0 = t0 * linv;
    }
    return {r0, s0, t0};
}

ThetaPoly poly_powmod(const ThetaPoly& base, uint64_t e, const ThetaPoly& mod) {
    ThetaPoly r = ThetaPoly::one(base.field());
    ThetaPoly b = base % mod;
    while (e) {
        if (e & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

ThetaPoly poly_derivative(const ThetaPoly& a) {
    Field f = a.field();
    std::vector<FFElem> c;
    for (int64_t i = 1; i <= a.degree(); ++i) {
        FFElem m = f.from_int((uint64_t)(i % f.p()));
        c.push_back(a.coeff(i) * m);
    }
    return ThetaPoly(f, std::move(c));
}

ThetaPoly poly_invmod(const ThetaPoly& a, const ThetaPoly& m) {
    auto r = poly_xgcd(a % m, m);
    if (!r.g.is_one()) throw InvertZero("element not invertible modulo given polynomial");
    return r.s % m;
}

namespace {

// x^(q^j) mod f via repeated q-powering of t.
ThetaPoly frobenius_power_mod(const ThetaPoly& f, uint64_t q, uint32_t j) {
    ThetaPoly x = ThetaPoly::theta(f.field()) % f;
    for (uint32_t i = 0; i < j; ++i) x = poly_powmod(x, q, f);
    return x;
}

} // namespace

bool poly_is_irreducible(const ThetaPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    Field F = f.field();
    uint64_t q = F.size();
    uint32_t n = (uint32_t)f.degree();
    ThetaPoly x = ThetaPoly::theta(F) % f;
    ThetaPoly xq = frobenius_power_mod(f, q, n);
    if (xq != x) return false;
    uint32_t nn = n;
    for (uint32_t l = 2; l <= nn; ++l) {
        if (nn % l != 0) continue;
        while (nn % l == 0) nn /= l;
        ThetaPoly xe = frobenius_power_mod(f, q, n / l);
        if (!poly_gcd(xe - x, f).is_one()) return false;
    }
    return true;
}

uint64_t monic_count(Field f, uint32_t d) {
    uint64_t q = f.size();
    uint64_t n = 1;
    for (uint32_t i = 0; i < d; ++i) {
        if (n > UINT64_MAX / q) throw error("monic enumeration too large");
        n *= q;
    }
    return n;
}

ThetaPoly monic_of_index(Field f, uint32_t d, uint64_t idx) {
    std::vector<FFElem> c;
    c.reserve(d + 1);
    uint64_t q = f.size();
    for (uint32_t i = 0; i < d; ++i) {
        c.push_back(f.element(idx % q));
        idx /= q;
    }
    c.push_back(f.one());
    return ThetaPoly(f, std::move(c));
}

bool poly_less(const ThetaPoly& a, const ThetaPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int64_t i = 0; i <= a.degree(); ++i) {
        uint64_t x = a.coeff(i).index(), y = b.coeff(i).index();
        if (x != y) return x < y;
    }
    return false;
}

namespace {

// p-th root of a coefficient in F_{p^k}: c^(p^(k-1)).
FFElem coeff_pth_root(const FFElem& c) {
    uint64_t e = 1;
    for (uint32_t i = 0; i + 1 < c.field().k(); ++i) e *= c.field().p();
    return c.pow(e);
}

// f with zero derivative is g(t^p); recover g taking p-th roots of coefficients.
ThetaPoly pth_root_poly(const ThetaPoly& f) {
    Field F = f.field();
    uint32_t p = F.p();
    std::vector<FFElem> c;
    for (int64_t i = 0; i <= f.degree(); i += p)
        c.push_back(coeff_pth_root(f.coeff(i)));
    return ThetaPoly(F, std::move(c));
}

void squarefree_decompose(const ThetaPoly& f, uint32_t outer_mult,
                          std::vector<std::pair<ThetaPoly, uint32_t>>& out) {
    Field F = f.field();
    uint32_t p = F.p();
    ThetaPoly d = poly_derivative(f);
    if (d.is_zero()) {
        squarefree_decompose(pth_root_poly(f), outer_mult * p, out);
        return;
    }
    // Yun-style pass in characteristic p
    ThetaPoly a = poly_gcd(f, d);
    ThetaPoly w = f / a;
    uint32_t i = 1;
    while (!w.is_one()) {
        ThetaPoly y = poly_gcd(w, a);
        ThetaPoly fac = w / y;
        if (fac.degree() > 0) out.push_back({fac.monic(), i * outer_mult});
        w = y;
        a = a / y;
        ++i;
    }
    if (a.degree() > 0) squarefree_decompose(a, outer_mult, out);
}

ThetaPoly random_poly_below(Field F, uint32_t deg_bound, std::mt19937_64& rng) {
    std::vector<FFElem> c;
    c.reserve(deg_bound);
    for (uint32_t i = 0; i < deg_bound; ++i)
        c.push_back(F.element(rng() % F.size()));
    return ThetaPoly(F, std::move(c));
}

// Split a squarefree product of degree-d irreducibles.
void equal_degree_split(const ThetaPoly& f, uint32_t d, std::mt19937_64& rng,
                        std::vector<ThetaPoly>& out) {
    Field F = f.field();
    if ((uint32_t)f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    uint64_t q = F.size();
    ThetaPoly factor = ThetaPoly::zero(F);
    while (true) {
        ThetaPoly r = random_poly_below(F, (uint32_t)f.degree(), rng);
        if (r.degree() < 1) continue;
        ThetaPoly g = poly_gcd(r, f);
        if (!g.is_one()) { factor = g; break; }
        if (F.p() == 2) {
            // trace map over F_2: sum of r^(2^i), i < d*k
            uint32_t bits = d * F.k();
            ThetaPoly tr = r % f, cur = r % f;
            for (uint32_t i = 1; i < bits; ++i) {
                cur = (cur * cur) % f;
                tr = tr + cur;
            }
            g = poly_gcd(tr, f);
        } else {
            // r^((q^d-1)/2) - 1
            uint64_t e = 1;
            for (uint32_t i = 0; i < d; ++i) e *= q;
            e = (e - 1) / 2;
            ThetaPoly pw = poly_powmod(r, e, f);
            g = poly_gcd(pw - ThetaPoly::one(F), f);
        }
        if (!g.is_one() && g != f.monic()) { factor = g; break; }
    }
    equal_degree_split(factor, d, rng, out);
    equal_degree_split(f / factor, d, rng, out);
}

std::atomic<uint64_t> g_default_factor_seed{0};

} // namespace

void set_default_factor_seed(uint64_t seed) { g_default_factor_seed.store(seed); }
uint64_t default_factor_seed() { return g_default_factor_seed.load(); }

Factorization poly_factorize(const ThetaPoly& f) {
    return poly_factorize(f, g_default_factor_seed.load());
}

Factorization poly_factorize(const ThetaPoly& f, uint64_t seed) {
    if (f.is_zero()) throw ZeroPolynomial("cannot factor the zero polynomial");
    Field F = f.field();
    Factorization result{f.is_constant() ? f.coeff(0) : f.lead(), {}};
    if (f.degree() < 1) {
        if (result.unit.is_zero()) result.unit = F.one();
        return result;
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<ThetaPoly, uint32_t>> sqfree;
    squarefree_decompose(f.monic(), 1, sqfree);
    uint64_t q = F.size();
    for (const auto& [g, mult] : sqfree) {
        // distinct-degree on g
        ThetaPoly h = g;
        ThetaPoly x = ThetaPoly::theta(F);
        ThetaPoly xq = x % h;
        for (uint32_t d = 1; h.degree() > 0 && d <= (uint32_t)h.degree(); ++d) {
            xq = poly_powmod(xq, q, h);
            ThetaPoly gd = poly_gcd(xq - x, h);
            if (gd.degree() > 0) {
                std::vector<ThetaPoly> pieces;
                equal_degree_split(gd, d, rng, pieces);
                for (auto& pc : pieces) result.factors.push_back({pc, mult});
                h = h / gd;
                xq = xq % h;
            }
        }
        if (h.degree() > 0) result.factors.push_back({h.monic(), mult});
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const PolyFactor& a, const PolyFactor& b) { return poly_less(a.p, b.p); });
    return result;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    Field f;
    char main_var;
    bool allow_gen;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw error("parse error at position " + std::to_string(pos) + ": " + what + " in '" + s + "'");
    }

    ThetaPoly parse_expr() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        ThetaPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            if (s[pos] == '+') { ++pos; acc = acc + parse_term(); }
            else if (s[pos] == '-') { ++pos; acc = acc - parse_term(); }
            else break;
        }
        return acc;
    }

    ThetaPoly parse_term() {
        ThetaPoly acc = parse_factor();
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                acc = acc * parse_factor();
            } else break;
        }
        return acc;
    }

    ThetaPoly parse_factor() {
        ThetaPoly base = parse_base();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip_ws();
            if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected exponent");
            uint64_t e = 0;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
                e = e * 10 + (uint64_t)(s[pos] - '0');
                if (e > 100000) fail("exponent too large");
                ++pos;
            }
            return base.pow(e);
        }
        return base;
    }

    ThetaPoly parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            ThetaPoly e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == main_var) {
            ++pos;
            return ThetaPoly::theta(f);
        }
        if (allow_gen && (c == 'u' || c == 't')) {
            // the non-main letter is the field generator
            ++pos;
            return ThetaPoly::constant(f.gen());
        }
        if (std::isdigit((unsigned char)c)) {
            uint64_t n = 0;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
                n = n * 10 + (uint64_t)(s[pos] - '0');
                ++pos;
            }
            return ThetaPoly::constant(f.from_int(n));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

void append_coeff_term(std::ostringstream& os, const FFElem& c, int64_t deg, const std::string& var, bool& first) {
    if (c.is_zero()) return;
    std::string cs = c.to_string();
    bool needs_parens = cs.find('+') != std::string::npos;
    if (!first) os << "+";
    first = false;
    if (deg == 0) {
        os << cs;
        return;
    }
    if (!c.is_one()) {
        if (needs_parens) os << "(" << cs << ")";
        else os << cs;
        os << "*";
    }
    os << var;
    if (deg >= 2) os << "^" << deg;
}

} // namespace

ThetaPoly parse_poly(const std::string& text, Field f, char main_var, bool allow_gen) {
    Parser p{text, 0, f, main_var, allow_gen};
    ThetaPoly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

std::string format_poly(const ThetaPoly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int64_t i = a.degree(); i >= 0; --i)
        append_coeff_term(os, a.coeff(i), i, var, first);
    return os.str();
}

} // namespace carlgoss
