#include "carlgoss/json_io.hpp"

namespace carlgoss {

namespace {

std::string modulus_string(const Field& f) {
    const auto& m = f.modulus();
    std::string out;
    for (size_t i = m.size(); i-- > 0;) {
        uint32_t c = m[i];
        if (c == 0) continue;
        std::string part;
        if (i == 0) {
            part = std::to_string(c);
        } else {
            if (c != 1) part = std::to_string(c) + "*";
            part += i == 1 ? "u" : "u^" + std::to_string(i);
        }
        if (!out.empty()) out += "+";
        out += part;
    }
    return out.empty() ? "0" : out;
}

} // namespace

json json_field(Field f) {
    return json{{"p", f.p()}, {"k", f.k()}, {"modulus", modulus_string(f)}};
}

json json_poly(const ThetaPoly& a) {
    return json{{"poly", a.to_string()}, {"field", json_field(a.field())}};
}

json json_laurent(const LaurentSeries& x) {
    json coeffs = json::array();
    for (int64_t i = x.order(); i < x.prec(); ++i) coeffs.push_back(x.coeff(i).to_string());
    return json{{"order", x.order()}, {"prec", x.prec()}, {"coeffs", std::move(coeffs)}};
}

json json_padic(const PAdicElem& x) {
    return json{{"P", x.prime().to_string()},
                {"val", x.val()},
                {"prec", x.prec()},
                {"unit", x.is_zero_to_prec() ? "0" : x.unit().to_string()},
                {"zero_to_prec", x.is_zero_to_prec()}};
}

json json_zeta(const ZetaInfValue& v) {
    return json{{"flavor", "inf"},
                {"n", v.n},
                {"prec", v.prec},
                {"cutoff_d", v.cutoff_d},
                {"value", json_laurent(v.value)}};
}

json json_zeta(const ZetaPolyValue& v) {
    return json{{"flavor", "poly"},
                {"n", v.n},
                {"deg_z_bound", v.bound},
                {"deg_z", v.value.z_degree()},
                {"poly_in_z", tate_to_string(v.value)}};
}

json json_zeta(const ZetaPadicValue& v) {
    return json{{"flavor", "p_adic"},
                {"P", v.value.prime().to_string()},
                {"n", v.n},
                {"s", v.s},
                {"cutoff_D", v.cutoff_D},
                {"digits", v.digits},
                {"exact", v.exact},
                {"value", json_padic(v.value)}};
}

json json_report(const VerificationReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return json{{"identity", r.identity},
                {"params", std::move(params)},
                {"pass", r.pass},
                {"residual_unit", r.residual_unit},
                {"precision", r.precision}};
}

json json_invariants(const InvariantFactors& f) {
    json factors = json::array();
    for (const auto& d : f.factors) factors.push_back(d.to_string());
    return json{{"deformed", f.deformed},
                {"cyclic", f.cyclic()},
                {"factors", std::move(factors)},
                {"fitting", f.fitting().to_string()}};
}

} // namespace carlgoss
