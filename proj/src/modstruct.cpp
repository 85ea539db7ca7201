#include "carlgoss/modstruct.hpp"

#include <algorithm>
#include <sstream>

namespace carlgoss {

namespace {

// Gauss-Jordan inverse of an n x n matrix mod p.  Row-major uint32 entries.
std::vector<uint32_t> invert_mod_p(std::vector<uint32_t> m, uint32_t n, uint32_t p) {
    auto modpow = [p](uint64_t b, uint32_t e) {
        uint64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return (uint32_t)r;
    };
    std::vector<uint32_t> inv((size_t)n * n, 0);
    for (uint32_t i = 0; i < n; i++) inv[(size_t)i * n + i] = 1;
    for (uint32_t col = 0; col < n; col++) {
        uint32_t piv = col;
        while (piv < n && m[(size_t)piv * n + col] == 0) piv++;
        if (piv == n) throw SingularToPrec("basis matrix is singular");
        if (piv != col) {
            for (uint32_t j = 0; j < n; j++) {
                std::swap(m[(size_t)piv * n + j], m[(size_t)col * n + j]);
                std::swap(inv[(size_t)piv * n + j], inv[(size_t)col * n + j]);
            }
        }
        uint32_t s = modpow(m[(size_t)col * n + col], p - 2);
        for (uint32_t j = 0; j < n; j++) {
            m[(size_t)col * n + j] = (uint32_t)((uint64_t)m[(size_t)col * n + j] * s % p);
            inv[(size_t)col * n + j] = (uint32_t)((uint64_t)inv[(size_t)col * n + j] * s % p);
        }
        for (uint32_t i = 0; i < n; i++) {
            if (i == col) continue;
            uint64_t c = m[(size_t)i * n + col];
            if (c == 0) continue;
            for (uint32_t j = 0; j < n; j++) {
                uint64_t sub = c * m[(size_t)col * n + j] % p;
                m[(size_t)i * n + j] = (uint32_t)((m[(size_t)i * n + j] + p - sub) % p);
                sub = c * inv[(size_t)col * n + j] % p;
                inv[(size_t)i * n + j] = (uint32_t)((inv[(size_t)i * n + j] + p - sub) % p);
            }
        }
    }
    return inv;
}

} // namespace

LinearBasis::LinearBasis(Field E, Field sub, const FFElem& sub_gen_image,
                         std::vector<FFElem> basis)
    : E_(E), sub_(sub), sub_gen_image_(sub_gen_image), basis_(std::move(basis)) {
    n_ = (uint32_t)basis_.size();
    k_ = sub.k();
    kE_ = E.k();
    if ((uint64_t)n_ * k_ != kE_)
        throw error("LinearBasis: basis size does not match field degrees");
    uint32_t p = E.p();
    std::vector<uint32_t> m((size_t)kE_ * kE_, 0);
    for (uint32_t j = 0; j < n_; j++) {
        for (uint32_t i = 0; i < k_; i++) {
            FFElem e = sub_gen_image_.pow(i) * basis_[j];
            for (uint32_t row = 0; row < kE_; row++)
                m[(size_t)row * kE_ + (j * k_ + i)] = e.digit(row);
        }
    }
    inv_ = invert_mod_p(std::move(m), kE_, p);
}

std::vector<FFElem> LinearBasis::coords(const FFElem& x) const {
    if (x.field() != E_) throw FieldMismatch();
    uint32_t p = E_.p();
    std::vector<uint32_t> y(kE_, 0);
    for (uint32_t row = 0; row < kE_; row++) {
        uint64_t acc = 0;
        for (uint32_t col = 0; col < kE_; col++)
            acc += (uint64_t)inv_[(size_t)row * kE_ + col] * x.digit(col);
        y[row] = (uint32_t)(acc % p);
    }
    std::vector<FFElem> out;
    out.reserve(n_);
    for (uint32_t j = 0; j < n_; j++) {
        std::vector<uint32_t> d(y.begin() + (size_t)j * k_, y.begin() + (size_t)(j + 1) * k_);
        out.push_back(sub_.from_digits(d));
    }
    return out;
}

BiPoly BiPoly::from_scalar(Field field, const FFElem& s) {
    BiPoly r(field);
    if (!s.is_zero()) r.c.push_back(ThetaPoly::constant(s));
    return r;
}

BiPoly BiPoly::from_theta(const ThetaPoly& a) {
    BiPoly r(a.field());
    for (const FFElem& ci : a.coeffs()) r.c.push_back(ThetaPoly::constant(ci));
    r.trim();
    return r;
}

BiPoly BiPoly::from_z_poly(Field field, const ThetaPoly& zp) {
    BiPoly r(field);
    if (!zp.is_zero()) r.c.push_back(zp);
    return r;
}

int64_t BiPoly::deg_z() const {
    int64_t d = -1;
    for (const ThetaPoly& zi : c) d = std::max(d, zi.degree());
    return d;
}

bool BiPoly::is_unit() const {
    return c.size() == 1 && c[0].is_constant() && !c[0].is_zero();
}

const ThetaPoly& BiPoly::lead() const {
    if (c.empty()) throw ZeroPolynomial("BiPoly::lead of zero");
    return c.back();
}

ThetaPoly BiPoly::coeff(int64_t i) const {
    if (i < 0 || i >= (int64_t)c.size()) return ThetaPoly::zero(f);
    return c[(size_t)i];
}

void BiPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r(f);
    size_t n = std::max(c.size(), o.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; i++) {
        ThetaPoly a = i < c.size() ? c[i] : ThetaPoly::zero(f);
        ThetaPoly b = i < o.c.size() ? o.c[i] : ThetaPoly::zero(f);
        r.c.push_back(a + b);
    }
    r.trim();
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
    BiPoly r(f);
    r.c.reserve(c.size());
    for (const ThetaPoly& ci : c) r.c.push_back(-ci);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r(f);
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, ThetaPoly::zero(f));
    for (size_t i = 0; i < c.size(); i++) {
        if (c[i].is_zero()) continue;
        for (size_t j = 0; j < o.c.size(); j++) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
    }
    r.trim();
    return r;
}

BiPoly BiPoly::mul_z(const ThetaPoly& zp) const {
    BiPoly r(f);
    if (zp.is_zero()) return r;
    r.c.reserve(c.size());
    for (const ThetaPoly& ci : c) r.c.push_back(ci * zp);
    r.trim();
    return r;
}

ThetaPoly BiPoly::to_theta() const {
    std::vector<FFElem> cs;
    cs.reserve(c.size());
    for (const ThetaPoly& ci : c) {
        if (ci.degree() > 0) throw error("BiPoly::to_theta: nonzero z-degree");
        cs.push_back(ci.coeff(0));
    }
    return ThetaPoly(f, cs);
}

ThetaPoly BiPoly::eval_z1() const {
    std::vector<FFElem> cs;
    cs.reserve(c.size());
    for (const ThetaPoly& ci : c) cs.push_back(ci.eval(f.one()));
    return ThetaPoly(f, cs);
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    // t-degree descending; within a t-power, z ascending
    std::ostringstream os;
    bool first = true;
    for (int64_t i = deg_t(); i >= 0; i--) {
        const ThetaPoly& zi = c[(size_t)i];
        if (zi.is_zero()) continue;
        for (int64_t j = 0; j <= zi.degree(); j++) {
            FFElem v = zi.coeff(j);
            if (v.is_zero()) continue;
            if (!first) os << "+";
            first = false;
            std::string parts;
            if (!v.is_one() || (i == 0 && j == 0)) parts = v.to_string();
            auto append = [&parts](const std::string& s) {
                if (!parts.empty()) parts += "*";
                parts += s;
            };
            if (i == 1) append("t");
            else if (i > 1) append("t^" + std::to_string(i));
            if (j == 1) append("z");
            else if (j > 1) append("z^" + std::to_string(j));
            os << parts;
        }
    }
    return os.str();
}

BiDivResult bipoly_pseudo_divmod(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly();
    Field f = b.f;
    BiDivResult res;
    res.quot = BiPoly::zero(f);
    res.rem = a;
    res.scale = ThetaPoly::one(f);
    int64_t d = b.deg_t();
    const ThetaPoly& lc = b.lead();
    while (!res.rem.is_zero() && res.rem.deg_t() >= d) {
        int64_t shift = res.rem.deg_t() - d;
        ThetaPoly top = res.rem.lead();
        // Q <- Q*lc + top*t^shift ; R <- lc*R - top*t^shift*b
        BiPoly term(f);
        term.c.assign((size_t)shift + 1, ThetaPoly::zero(f));
        term.c[(size_t)shift] = top;
        res.quot = res.quot.mul_z(lc) + term;
        res.rem = res.rem.mul_z(lc) - term * b;
        res.scale = res.scale * lc;
    }
    return res;
}

ThetaPoly bipoly_content(const BiPoly& a) {
    ThetaPoly g = ThetaPoly::zero(a.f);
    for (const ThetaPoly& ci : a.c) {
        if (ci.is_zero()) continue;
        g = g.is_zero() ? ci.monic() : poly_gcd(g, ci);
        if (g.is_one()) break;
    }
    return g;
}

BiPoly bipoly_divide_content(const BiPoly& a, const ThetaPoly& content) {
    if (content.is_one() || a.is_zero()) return a;
    BiPoly r(a.f);
    r.c.reserve(a.c.size());
    for (const ThetaPoly& ci : a.c) {
        auto [q, rem] = poly_divmod(ci, content);
        if (!rem.is_zero()) throw error("bipoly content division is not exact");
        r.c.push_back(q);
    }
    r.trim();
    return r;
}

bool bipoly_divides(const BiPoly& b, const BiPoly& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    return bipoly_pseudo_divmod(a, b).rem.is_zero();
}

namespace {

BiPoly normalize_factor(BiPoly a) {
    if (a.is_zero()) return a;
    a = bipoly_divide_content(a, bipoly_content(a));
    FFElem lead = a.lead().lead();
    if (!lead.is_one()) {
        for (ThetaPoly& ci : a.c) ci = ci * lead.inv();
    }
    return a;
}

void strip_row_content(std::vector<BiPoly>& row) {
    ThetaPoly g = ThetaPoly::zero(row[0].f);
    for (const BiPoly& e : row) {
        ThetaPoly ce = bipoly_content(e);
        if (ce.is_zero()) continue;
        g = g.is_zero() ? ce : poly_gcd(g, ce);
        if (g.is_one()) return;
    }
    if (g.is_zero() || g.is_one()) return;
    for (BiPoly& e : row) e = bipoly_divide_content(e, g);
}

} // namespace

bool InvariantFactors::cyclic() const {
    size_t nontrivial = 0;
    for (const BiPoly& fct : factors)
        if (!fct.is_unit() && !fct.is_zero()) nontrivial++;
    return nontrivial == 1;
}

BiPoly InvariantFactors::fitting() const {
    if (factors.empty()) throw error("InvariantFactors::fitting: no factors");
    BiPoly r = BiPoly::from_scalar(factors[0].f, factors[0].f.one());
    for (const BiPoly& fct : factors) r = r * fct;
    return r;
}

InvariantFactors snf_bipoly(std::vector<std::vector<BiPoly>> M) {
    if (M.empty() || M[0].empty()) throw error("snf_bipoly: empty matrix");
    uint32_t rows = (uint32_t)M.size(), cols = (uint32_t)M[0].size();
    Field f = M[0][0].f;
    uint32_t n = std::min(rows, cols);
    InvariantFactors out;

    auto swap_rows = [&](uint32_t i, uint32_t j) { if (i != j) std::swap(M[i], M[j]); };
    auto swap_cols = [&](uint32_t i, uint32_t j) {
        if (i == j) return;
        for (uint32_t r = 0; r < rows; r++) std::swap(M[r][i], M[r][j]);
    };

    uint32_t pos = 0;
    for (; pos < n; pos++) {
        // deterministic pivot: lowest t-degree, ties by (row, col)
        int64_t best = -1;
        uint32_t bi = 0, bj = 0;
        for (uint32_t i = pos; i < rows; i++)
            for (uint32_t j = pos; j < cols; j++) {
                if (M[i][j].is_zero()) continue;
                int64_t d = M[i][j].deg_t();
                if (best < 0 || d < best) { best = d; bi = i; bj = j; }
            }
        if (best < 0) break; // remaining block is zero
        swap_rows(pos, bi);
        swap_cols(pos, bj);

        for (;;) {
            bool dirty = false;
            // clear the pivot column
            for (uint32_t i = pos + 1; i < rows; i++) {
                while (!M[i][pos].is_zero()) {
                    if (M[i][pos].deg_t() < M[pos][pos].deg_t()) {
                        swap_rows(pos, i);
                        dirty = true;
                        continue;
                    }
                    BiDivResult dr = bipoly_pseudo_divmod(M[i][pos], M[pos][pos]);
                    for (uint32_t j = 0; j < cols; j++)
                        M[i][j] = M[i][j].mul_z(dr.scale) - dr.quot * M[pos][j];
                    strip_row_content(M[i]);
                    dirty = true;
                }
            }
            // clear the pivot row
            for (uint32_t j = pos + 1; j < cols; j++) {
                while (!M[pos][j].is_zero()) {
                    if (M[pos][j].deg_t() < M[pos][pos].deg_t()) {
                        swap_cols(pos, j);
                        dirty = true;
                        continue;
                    }
                    BiDivResult dr = bipoly_pseudo_divmod(M[pos][j], M[pos][pos]);
                    for (uint32_t i = 0; i < rows; i++)
                        M[i][j] = M[i][j].mul_z(dr.scale) - M[i][pos] * dr.quot;
                    dirty = true;
                }
            }
            // column ops may have re-dirtied the column; redo until stable
            bool col_clean = true;
            for (uint32_t i = pos + 1; i < rows; i++)
                if (!M[i][pos].is_zero()) col_clean = false;
            if (!col_clean) continue;
            if (dirty) continue;
            // divisibility: pivot must divide the rest of the block
            bool fixed = false;
            for (uint32_t i = pos + 1; i < rows && !fixed; i++)
                for (uint32_t j = pos + 1; j < cols && !fixed; j++) {
                    if (bipoly_divides(M[pos][pos], M[i][j])) continue;
                    for (uint32_t jj = 0; jj < cols; jj++)
                        M[pos][jj] = M[pos][jj] + M[i][jj];
                    fixed = true;
                }
            if (!fixed) break;
        }
        out.factors.push_back(normalize_factor(M[pos][pos]));
    }
    for (; pos < n; pos++) out.factors.push_back(BiPoly::zero(f));
    return out;
}

ActionMatrix action_matrix(const Ring& R, const ThetaPoly& prime) {
    ResidueField rf = residue_field(R, prime);
    Field base = R.base;
    uint32_t dim = (uint32_t)(R.r * (uint64_t)prime.degree());
    if (rf.E.k() != base.k() * dim)
        throw error("action_matrix: residue field degree mismatch");

    FFElem base_img = subfield_generator_image(base, rf.E);
    std::vector<FFElem> basis;
    basis.reserve(dim);
    FFElem uj = rf.E.one();
    for (uint32_t j = 0; j < dim; j++) {
        basis.push_back(uj);
        uj = uj * rf.E.gen();
    }
    LinearBasis lb(rf.E, base, base_img, basis);

    ActionMatrix out;
    out.f = base;
    out.dim = dim;
    out.theta_mul = FqMatrix(base, dim, dim);
    out.frob = FqMatrix(base, dim, dim);
    uint64_t q = R.q();
    for (uint32_t j = 0; j < dim; j++) {
        std::vector<FFElem> tc = lb.coords(rf.theta_bar * basis[j]);
        std::vector<FFElem> fc = lb.coords(ff_frobenius(basis[j], 1, q));
        for (uint32_t i = 0; i < dim; i++) {
            out.theta_mul.at(i, j) = tc[i];
            out.frob.at(i, j) = fc[i];
        }
    }
    return out;
}

namespace {

InvariantFactors characteristic_snf(const ActionMatrix& M, bool deformed) {
    Field f = M.f;
    uint32_t n = M.dim;
    std::vector<std::vector<BiPoly>> X(n, std::vector<BiPoly>(n, BiPoly::zero(f)));
    for (uint32_t i = 0; i < n; i++)
        for (uint32_t j = 0; j < n; j++) {
            ThetaPoly zc = ThetaPoly::constant(-M.theta_mul.at(i, j));
            FFElem fr = -M.frob.at(i, j);
            if (!fr.is_zero()) {
                if (deformed) zc = zc + ThetaPoly::monomial(fr, 1);
                else zc = zc + ThetaPoly::constant(fr);
            }
            BiPoly e = BiPoly::from_z_poly(f, zc);
            if (i == j) {
                BiPoly t(f);
                t.c = {ThetaPoly::zero(f), ThetaPoly::one(f)};
                e = e + t;
            }
            X[i][j] = e;
        }
    InvariantFactors out = snf_bipoly(std::move(X));
    out.deformed = deformed;
    if (!out.cyclic()) throw NonCyclicUnexpected();
    return out;
}

} // namespace

InvariantFactors invariant_factors_A(const ActionMatrix& M) {
    return characteristic_snf(M, false);
}

InvariantFactors invariant_factors_deformed(const ActionMatrix& M) {
    return characteristic_snf(M, true);
}

} // namespace carlgoss
