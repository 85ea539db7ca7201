#ifndef CARLGOSS_JSON_IO_HPP
#define CARLGOSS_JSON_IO_HPP

#include <json.hpp>

#include "carlgoss/formulas.hpp"
#include "carlgoss/modstruct.hpp"
#include "carlgoss/zeta.hpp"

namespace carlgoss {

// All serialization uses ordered_json so key order is fixed by construction
// and identical configs print byte-identical documents.
using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

json json_field(Field f);                 // {"p":2,"k":2,"modulus":"u^2+u+1"}
json json_poly(const ThetaPoly& a);       // {"poly":"t^2+1","field":{...}}
json json_laurent(const LaurentSeries& x);// {"order":o,"prec":N,"coeffs":[...]} in 1/t
json json_padic(const PAdicElem& x);      // {"P":...,"val":v,"prec":N,"unit":...}

json json_zeta(const ZetaInfValue& v);
json json_zeta(const ZetaPolyValue& v);   // carries "poly_in_z"
json json_zeta(const ZetaPadicValue& v);

json json_report(const VerificationReport& r);
json json_invariants(const InvariantFactors& f);

} // namespace carlgoss

#endif
