#ifndef CARLGOSS_MODSTRUCT_HPP
#define CARLGOSS_MODSTRUCT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "carlgoss/rings.hpp"

namespace carlgoss {

// Dense matrix over a finite field, row-major.
struct FqMatrix {
    Field f;
    uint32_t rows = 0, cols = 0;
    std::vector<FFElem> a;

    FqMatrix() = default;
    FqMatrix(Field field, uint32_t r, uint32_t c)
        : f(field), rows(r), cols(c), a((size_t)r * c, field.zero()) {}
    FFElem& at(uint32_t i, uint32_t j) { return a[(size_t)i * cols + j]; }
    const FFElem& at(uint32_t i, uint32_t j) const { return a[(size_t)i * cols + j]; }
};

// F_q-coordinates inside an extension E with respect to a chosen E-basis,
// via restriction of scalars to F_p.
class LinearBasis {
public:
    LinearBasis(Field E, Field sub, const FFElem& sub_gen_image, std::vector<FFElem> basis);
    // coordinates of x: length = basis size, entries in sub
    std::vector<FFElem> coords(const FFElem& x) const;
    uint32_t dim() const { return n_; }

private:
    Field E_, sub_;
    FFElem sub_gen_image_;
    std::vector<FFElem> basis_;
    uint32_t n_ = 0, k_ = 0, kE_ = 0;
    std::vector<uint32_t> inv_; // kE x kE inverse matrix mod p, row-major
};

// Polynomial in the module variable (written t in output) whose coefficients
// are polynomials in z over F_q.  The undeformed computations are the
// z-degree-0 case of the same code path.
struct BiPoly {
    Field f;
    std::vector<ThetaPoly> c; // index = t-power, entry = z-polynomial

    BiPoly() = default;
    explicit BiPoly(Field field) : f(field) {}

    static BiPoly zero(Field field) { return BiPoly(field); }
    static BiPoly from_scalar(Field field, const FFElem& s);
    static BiPoly from_theta(const ThetaPoly& a);            // z-degree 0
    static BiPoly from_z_poly(Field field, const ThetaPoly& zp); // t-degree 0

    int64_t deg_t() const { return (int64_t)c.size() - 1; }
    int64_t deg_z() const;
    bool is_zero() const { return c.empty(); }
    bool is_unit() const; // nonzero constant in F_q
    const ThetaPoly& lead() const;
    ThetaPoly coeff(int64_t i) const;
    void trim();

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly mul_z(const ThetaPoly& zp) const;
    bool operator==(const BiPoly& o) const { return c == o.c; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    ThetaPoly to_theta() const; // requires z-degree <= 0
    ThetaPoly eval_z1() const;  // specialize z = 1
    std::string to_string() const;
};

// lc(b)^e * a = Q * b + R with deg_t R < deg_t b
struct BiDivResult {
    BiPoly quot, rem;
    ThetaPoly scale; // lc(b)^e
};
BiDivResult bipoly_pseudo_divmod(const BiPoly& a, const BiPoly& b);
// z-content: monic gcd of all z-coefficients
ThetaPoly bipoly_content(const BiPoly& a);
BiPoly bipoly_divide_content(const BiPoly& a, const ThetaPoly& content);
bool bipoly_divides(const BiPoly& b, const BiPoly& a); // exact in F_q(z)[t]

struct InvariantFactors {
    std::vector<BiPoly> factors; // all diagonal entries, divisibility chain
    bool deformed = false;
    // exactly one factor that is neither a unit nor zero
    bool cyclic() const;
    BiPoly fitting() const; // product of the factors
};

// Smith normal form over F_q(z)[t], computed fraction-free in F_q[z] with
// content extraction; deterministic pivoting (lowest t-degree, ties by
// position).  Factors are content-primitive with canonical leading unit.
InvariantFactors snf_bipoly(std::vector<std::vector<BiPoly>> M);

// theta and q-power Frobenius action on O_L/prime in the monomial basis of
// the canonical generator of the residue field, with F_q scalars.
struct ActionMatrix {
    Field f;          // F_q
    uint32_t dim = 0; // [O_L/prime : F_q]
    FqMatrix theta_mul;
    FqMatrix frob;
};

ActionMatrix action_matrix(const Ring& R, const ThetaPoly& prime);

// SNF of tI - (theta_mul + frob): the A-module structure of C(O_L/prime).
// Asserts cyclicity (NonCyclicUnexpected otherwise).
InvariantFactors invariant_factors_A(const ActionMatrix& M);
// SNF of tI - theta_mul - z*frob: the deformed module structure.
InvariantFactors invariant_factors_deformed(const ActionMatrix& M);

} // namespace carlgoss

#endif
