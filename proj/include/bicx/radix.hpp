#pragma once

#include <string>
#include <variant>
#include <vector>

#include "bicx/rings.hpp"

namespace bicx {

/// u e1 + v e2 in Z_h = Z e1 + Z e2.
struct HyperbolicInteger {
    Integer u, v;

    /// x + y j.
    static HyperbolicInteger from_cartesian(const Integer& x, const Integer& y) { return {x + y, x - y}; }
    /// x + y j with integer x, y, i.e. u = v (mod 2).
    bool in_Zj() const { return mpz_even_p(Integer(u - v).get_mpz_t()) != 0; }

    friend bool operator==(const HyperbolicInteger&, const HyperbolicInteger&) = default;
};

using RadixValue = std::variant<HyperbolicInteger, GaussianInteger>;

/// HypSplit(a): q = a e1 + (1 - a) e2 on Z_h, a <= -2.
/// HypGauss(a): q = a + j on Z[j], a <= -2.
/// Gauss(a, s): q = a + s i on Z[i], a <= -1, s = +-1.
struct RadixBase {
    enum class Family { HypSplit, HypGauss, Gauss };
    Family family;
    Integer a;
    int sign = 1;

    static RadixBase hyp_split(const Integer& a);
    static RadixBase hyp_gauss(const Integer& a);
    static RadixBase gauss(const Integer& a, int sign);

    /// |N(q)|: a^2 - a, a^2 - 1 or a^2 + 1.
    Integer digit_count() const;
    bool hyperbolic() const { return family != Family::Gauss; }

    /// "HypSplit(-2)", "HypGauss(-2)", "Gauss(-1,+)"
    std::string name() const;
    static RadixBase parse(const std::string& text);

    friend bool operator==(const RadixBase&, const RadixBase&) = default;
};

std::vector<Integer> digit_set(const RadixBase& base);

/// Least significant digit first; zero is the single digit 0.
struct DigitString {
    std::vector<Integer> digits;
    RadixBase base;

    friend bool operator==(const DigitString&, const DigitString&) = default;
};

/// Throws NonTermination when the expansion revisits a state or passes
/// 10^4 digits, InvalidArgument when x is outside the base's ring.
DigitString encode(const RadixValue& x, const RadixBase& base);
/// Horner evaluation; throws InvalidArgument for digits outside the digit set.
RadixValue decode(const DigitString& s);

inline constexpr std::size_t radix_digit_cap = 10000;

std::string to_string(const RadixValue& x);
BicomplexElement to_bicomplex(const RadixValue& x);
/// Inverse of to_bicomplex for elements with integer components.
RadixValue radix_value_from(const BicomplexElement& w, const RadixBase& base);

}  // namespace bicx
