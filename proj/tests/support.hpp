#pragma once

#include <random>
#include <string_view>

#include "goncarov/parse.hpp"
#include "goncarov/poly.hpp"

namespace gonc::test {

inline MultiPoly P(std::string_view text) { return parse_poly(text); }

// Random sparse polynomial over {x, u, w2, w3, z0} with small rational coefficients.
inline MultiPoly random_poly(std::mt19937& rng, int max_terms = 4, unsigned max_exp = 2) {
    static const VarId vars[] = {VarId::x(), VarId::u(), VarId::w(2), VarId::w(3), VarId::z(0)};
    std::uniform_int_distribution<int> n_terms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    MultiPoly out;
    const int count = n_terms(rng);
    for (int t = 0; t < count; ++t) {
        Monomial m;
        for (VarId v : vars) m = m * Monomial(v, exp(rng));
        out.add_term(m, Rational(Integer(coeff(rng)), Integer(den(rng))));
    }
    return out;
}

} // namespace gonc::test
