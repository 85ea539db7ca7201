#ifndef CARLGOSS_FORMULAS_HPP
#define CARLGOSS_FORMULAS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlgoss/carlitz.hpp"
#include "carlgoss/modstruct.hpp"
#include "carlgoss/zeta.hpp"

namespace carlgoss {

// A proposed A-basis of the unit module U(O_L), with provenance.  Length must
// equal [L:K] = r.  The built-in basis {1} for L = K is what the verified
// identities use; bases for r > 1 are caller-supplied claims, and
// check_theorem4 doubles as a tester for them.
struct UnitBasis {
    Ring ring;
    std::vector<ThetaPoly> elements; // over the coefficient field
    std::string provenance;          // "builtin" or "user"
};

UnitBasis default_unit_basis(const Ring& R); // {1} when r = 1
UnitBasis make_unit_basis(const Ring& R, std::vector<ThetaPoly> elements,
                          std::string provenance = "user");

struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    std::string left, right;   // rendered values of the two sides
    std::string precision;     // certified comparison precision
    std::string residual_unit; // for ratio-style checks: the F_q^* residual
    bool pass = false;
};

// zeta(1) against log(1) at the infinite place, to absolute precision prec.
VerificationReport verify_taelman_K(Field f, int64_t prec, uint32_t workers = 1);
// Deformed version: the degree-m slot identity sum_{monic deg m} 1/a = 1/L_m,
// checked exactly after clearing denominators for every m <= z_max.
VerificationReport verify_deformed_K(Field f, int64_t z_max, uint32_t workers = 1);
// zeta_P(1) against (1 - 1/P) * iwasawa_log(1); certified difference
// valuation is q^{s+1} - 1 (the Euler factor eats one digit).
VerificationReport verify_padic_K(Field f, const ThetaPoly& P, uint32_t s, uint32_t workers = 1);
// Product-formula period against (t^2 + t) * log(1), q = 2 only.
VerificationReport verify_period_q2(Field f, int64_t prec, uint32_t workers = 1);

// Recover beta in A[z] from det(M) = beta * Z(1;z), where M expresses the
// deformed logs of the given units in the A-basis of O_L.  Base ring only.
TatePoly<ThetaPoly> stark_beta(const Ring& R, const std::vector<TatePoly<ThetaPoly>>& units,
                               int64_t prec, int64_t z_max, uint32_t workers = 1);

// det of the Iwasawa-log matrix in the canonical A-basis of O_L, normalized
// so the lowest digit is monic; defined modulo F_q^*.
PAdicElem regulator_padic(const UnitBasis& basis, const ThetaPoly& P, int64_t N);

// zeta_P(1) = H * ([C(O_L/P O_L)] / P^r) * regulator, as a ratio required to
// land in F_q^* to precision.  H is the class-module Fitting generator
// (1 for L = K).
VerificationReport check_theorem4(const UnitBasis& basis, const ThetaPoly& H_fitting,
                                  const ThetaPoly& P, uint32_t s, uint32_t workers = 1);

struct LeopoldtReport {
    uint32_t rank_unit = 0;     // rank of the unit module (0 for q=2, L=K)
    uint32_t rank_lower = 0;    // certified rank of the P-adic log image
    uint32_t defect_upper = 0;  // rank_unit - rank_lower
    int64_t prec = 0;
    bool certified_zero = false;
    std::vector<int64_t> diag_valuations;
};
// One-sided certificate: rank_lower can only grow with N, so defect_upper is
// an upper bound for the true defect under the claimed basis.
LeopoldtReport leopoldt_defect(const UnitBasis& basis, const ThetaPoly& P, int64_t N);

// Minimal monic a with deg a <= B and C_a(x) = 0, if any; x = 0 gives 1.
std::optional<ThetaPoly> is_torsion(const Ring& R, const ThetaPoly& x, uint32_t B);

} // namespace carlgoss

#endif
