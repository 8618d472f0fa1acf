#pragma once

#include <random>

#include "qsp/qfield.hpp"

namespace qsp::test {

// Small random Laurent-free rational functions with a fixed seed.
inline QPoly random_poly(std::mt19937& g, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), c(-4, 4);
    std::vector<mpq_class> v(deg(g) + 1);
    for (auto& x : v) x = c(g);
    return QPoly(std::move(v));
}

inline RationalQ random_rational(std::mt19937& g, bool nonzero = false) {
    for (;;) {
        QPoly num = random_poly(g, 3);
        QPoly den = random_poly(g, 2);
        if (den.is_zero() || (nonzero && num.is_zero())) continue;
        return RationalQ(num, den);
    }
}

}  // namespace qsp::test
