#pragma once

#include <random>
#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/polynomial.hpp"
#include "bicx/rings.hpp"

namespace testing {

using namespace bicx;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240917);
    return gen;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational rand_rational(long span = 9, long max_den = 5) {
    return make_rational(rand_int(-span, span), rand_int(1, max_den));
}

inline BicomplexElement rand_element(long span = 9, long max_den = 5) {
    return from_cartesian(rand_rational(span, max_den), rand_rational(span, max_den), rand_rational(span, max_den),
                          rand_rational(span, max_den));
}

inline BicomplexElement rand_integer_element(long span = 9) {
    return from_cartesian(rand_int(-span, span), rand_int(-span, span), rand_int(-span, span), rand_int(-span, span));
}

inline GaussianInteger rand_gaussian_integer(long span) { return {rand_int(-span, span), rand_int(-span, span)}; }

inline RatPolynomial rand_rat_poly(int degree, long span = 9) {
    std::vector<Rational> c;
    for (int k = 0; k < degree; ++k) c.push_back(rand_rational(span));
    Rational lead;
    do lead = rand_rational(span);
    while (lead == 0);
    c.push_back(lead);
    return RatPolynomial(c);
}

/// Random primitive squarefree integer polynomial of degree in [1, max_degree].
inline IntPolynomial rand_squarefree_poly(int max_degree, long span = 9) {
    for (;;) {
        const int deg = static_cast<int>(rand_int(1, max_degree));
        std::vector<Rational> c;
        for (int k = 0; k <= deg; ++k) c.push_back(rand_int(-span, span));
        if (c.back() == 0) continue;
        IntPolynomial p = content_primitive(RatPolynomial(c)).prim;
        if (is_squarefree(p)) return p;
    }
}

}  // namespace testing
