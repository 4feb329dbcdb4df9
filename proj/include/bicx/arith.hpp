#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace bicx {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Probabilistic primality (BPSW plus Miller-Rabin rounds); exact below 2^64.
bool is_prime(const Integer& n);

bool is_squarefree(const Integer& n);

/// Prime factorization of |n| for n != 0, ascending primes.  Trial division
/// up to 10^6, Pollard-rho (Brent) for whatever cofactor remains.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// Floor division and matching non-negative remainder for a positive divisor.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& m);

/// Nearest integer to a/b, ties rounded toward +infinity.
Integer round_div(const Integer& a, const Integer& b);

Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q" in decimal.  Throws ParseError on bad input.
Rational parse_rational(const std::string& text);

}  // namespace bicx
