#ifndef CARLGOSS_CARLITZ_HPP
#define CARLGOSS_CARLITZ_HPP

#include <cstdint>
#include <vector>

#include "carlgoss/laurent.hpp"
#include "carlgoss/padic.hpp"
#include "carlgoss/poly.hpp"
#include "carlgoss/tate.hpp"

namespace carlgoss {

// x^q for q a power of the characteristic: coefficients to the q-th power,
// exponents multiplied by q.
ThetaPoly poly_qpow(const ThetaPoly& x, uint64_t q);

// Coefficients g_i with C_a = sum g_i tau^i, i = 0..deg a.  g_0 = a and
// g_{deg a} = lead(a).  q is the size of a's coefficient field; the overload
// with explicit q handles a already embedded into a constant-field extension.
std::vector<ThetaPoly> goss_coeffs(const ThetaPoly& a);
std::vector<ThetaPoly> goss_coeffs(const ThetaPoly& a, uint64_t q);

// Carlitz factorials over the base field f (q = |f|):
//   D_0 = 1,  D_i = (t^{q^i} - t) * D_{i-1}^q
//   L_0 = 1,  L_i = (t - t^{q^i}) * L_{i-1}
const ThetaPoly& carlitz_D(Field f, uint32_t i);
const ThetaPoly& carlitz_L(Field f, uint32_t i);

// P-adic valuations at a prime of degree d: v_P(L_i) = floor(i/d) and
// v_P(D_i) = (q^i - q^{i mod d}) / (q^d - 1).
int64_t valP_L(uint32_t i, uint32_t d);
int64_t valP_D(uint32_t i, uint32_t d, uint64_t q);

// C_a applied to a carrier.  a must already live over the carrier's
// coefficient field; q is the size of the base field of the module (tau is
// the q-power map even when the carrier has constant-field extension
// coefficients).
ThetaPoly carlitz_action(const ThetaPoly& a, const ThetaPoly& x, uint64_t q);
LaurentSeries carlitz_action(const ThetaPoly& a, const LaurentSeries& x, uint64_t q);
PAdicElem carlitz_action(const ThetaPoly& a, const PAdicElem& x, uint64_t q);
PadicResidue carlitz_action(const ThetaPoly& a, const PadicResidue& x, uint64_t q);
// Action on a residue-field element: theta_bar is the image of t, gen_image
// the image of a's coefficient-field generator in xbar's field.
FFElem carlitz_action(const ThetaPoly& a, const FFElem& xbar, const FFElem& theta_bar,
                      const FFElem& gen_image, uint64_t q);

// z-deformed action: sum_i g_i z^i tau^i(x).  Throws ZDegreeOverflow when
// deg a > z_max since the result would not fit.
TatePoly<ThetaPoly> deformed_action(const ThetaPoly& a, const ThetaPoly& x, uint64_t q, int64_t z_max);
TatePoly<LaurentSeries> deformed_action(const ThetaPoly& a, const LaurentSeries& x, uint64_t q, int64_t z_max);
TatePoly<LaurentSeries> deformed_action(const ThetaPoly& a, const TatePoly<LaurentSeries>& x, uint64_t q);

// Entire exponential at infinity, to absolute precision N.
LaurentSeries carlitz_exp_inf(const LaurentSeries& x, int64_t N);
// Logarithm at infinity; requires v(x) > -q/(q-1), else OutsideDomain.
LaurentSeries carlitz_log_inf(const LaurentSeries& x, int64_t N);

// z-deformed series at infinity: the tau^i term carries z^i, so truncation
// at z_max leaves a finite sum.
TatePoly<LaurentSeries> carlitz_exp_z(const LaurentSeries& x, int64_t z_max, int64_t N);
TatePoly<LaurentSeries> carlitz_log_z(const LaurentSeries& x, int64_t z_max, int64_t N);

// Same series on Tate-algebra inputs; z_max is taken from x, and the z^i
// weight of tau^i folds the input slots together.
TatePoly<LaurentSeries> carlitz_exp_z(const TatePoly<LaurentSeries>& x, int64_t N);
TatePoly<LaurentSeries> carlitz_log_z(const TatePoly<LaurentSeries>& x, int64_t N);

// P-adic exponential, domain v(x)*(q^d - 1) >= 2; logarithm, domain
// v(x) >= 1.  N is the target absolute precision.
PAdicElem carlitz_exp_padic(const PAdicElem& x, int64_t N);
PAdicElem carlitz_log_padic(const PAdicElem& x, int64_t N);
// Flat-model logarithm over a constant-field extension: P is the base prime,
// x lives over the extension coefficient field with modulus P embedded.
PadicResidue carlitz_log_padic_flat(const PadicResidue& x, const ThetaPoly& P, uint64_t q, int64_t N);

// Extension of log_P to all integral x: (P^F - 1)^{-1} log_C(C_{P^F - 1} x),
// where F is a multiple of every residual degree above P (F = 1 on the base
// completion).  Vanishes exactly on torsion.
PAdicElem iwasawa_log(const PAdicElem& x, int64_t N);
PadicResidue iwasawa_log_flat(const PadicResidue& x, const ThetaPoly& P, uint64_t q, uint32_t F, int64_t N);

// The period lattice generator for q = 2, where it lies in the base
// completion: t^2 * prod_{i>=1} (1 - t^{1-2^i})^{-1}.  Throws
// WrongCharacteristic for any other base field.
LaurentSeries carlitz_period_q2(Field f, int64_t N);

} // namespace carlgoss

#endif
