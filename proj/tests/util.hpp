#ifndef CARLGOSS_TESTS_UTIL_HPP
#define CARLGOSS_TESTS_UTIL_HPP

#include <random>
#include <vector>

#include "carlgoss/laurent.hpp"
#include "carlgoss/poly.hpp"

namespace cgtest {

using namespace carlgoss;

// All property suites draw from this with a fixed per-suite seed so runs are
// reproducible bit for bit.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(uint64_t seed) : g(seed) {}

    uint64_t below(uint64_t n) { return g() % n; }

    FFElem elem(Field f) { return f.element(below(f.size())); }
    FFElem nonzero(Field f) { return f.element(1 + below(f.size() - 1)); }

    ThetaPoly poly(Field f, int64_t max_deg) {
        std::vector<FFElem> cs;
        int64_t d = (int64_t)below((uint64_t)max_deg + 1);
        for (int64_t i = 0; i <= d; ++i) cs.push_back(elem(f));
        return ThetaPoly(f, std::move(cs));
    }
    ThetaPoly nonzero_poly(Field f, int64_t max_deg) {
        while (true) {
            ThetaPoly a = poly(f, max_deg);
            if (!a.is_zero()) return a;
        }
    }
    ThetaPoly monic(Field f, int64_t deg) {
        std::vector<FFElem> cs;
        for (int64_t i = 0; i < deg; ++i) cs.push_back(elem(f));
        cs.push_back(f.one());
        return ThetaPoly(f, std::move(cs));
    }

    // nonzero Laurent series with v_inf = order, full digits up to prec
    LaurentSeries laurent(Field f, int64_t order, int64_t prec) {
        std::vector<FFElem> cs;
        cs.push_back(nonzero(f));
        for (int64_t i = order + 1; i < prec; ++i) cs.push_back(elem(f));
        return LaurentSeries::from_coeffs(f, order, prec, std::move(cs));
    }
};

} // namespace cgtest

#endif
