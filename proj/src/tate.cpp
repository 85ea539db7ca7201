#include "carlgoss/tate.hpp"

namespace carlgoss {

TatePoly<LaurentSeries> tate_from_poly(const TatePoly<ThetaPoly>& a, int64_t prec) {
    std::vector<LaurentSeries> slots;
    slots.reserve((size_t)a.z_max() + 1);
    for (int64_t i = 0; i <= a.z_max(); ++i) {
        const ThetaPoly& c = a.coeff(i);
        if (c.is_zero())
            slots.push_back(LaurentSeries::zero(c.field(), prec));
        else
            slots.push_back(LaurentSeries::from_poly(c, prec));
    }
    return TatePoly<LaurentSeries>(std::move(slots), a.z_max());
}

std::string tate_to_string(const TatePoly<ThetaPoly>& a) {
    std::string out;
    for (int64_t i = 0; i <= a.z_max(); ++i) {
        const ThetaPoly& c = a.coeff(i);
        if (c.is_zero()) continue;
        std::string part;
        if (i == 0) {
            part = c.to_string();
        } else {
            std::string zs = i == 1 ? "z" : "z^" + std::to_string(i);
            if (c.is_one()) {
                part = zs;
            } else {
                std::string s = c.to_string();
                part = (s.find('+') == std::string::npos ? s : "(" + s + ")") + "*" + zs;
            }
        }
        if (!out.empty()) out += "+";
        out += part;
    }
    return out.empty() ? "0" : out;
}

} // namespace carlgoss
