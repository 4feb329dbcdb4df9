#include "bicx/radix.hpp"

#include <regex>
#include <set>
#include <utility>

#include "bicx/errors.hpp"

namespace bicx {

RadixBase RadixBase::hyp_split(const Integer& a) {
    if (a > -2) throw InvalidArgument("HypSplit needs a <= -2");
    return {Family::HypSplit, a, 1};
}

RadixBase RadixBase::hyp_gauss(const Integer& a) {
    if (a > -2) throw InvalidArgument("HypGauss needs a <= -2");
    return {Family::HypGauss, a, 1};
}

RadixBase RadixBase::gauss(const Integer& a, int sign) {
    if (a > -1) throw InvalidArgument("Gauss needs a <= -1");
    if (sign != 1 && sign != -1) throw InvalidArgument("Gauss sign must be +1 or -1");
    return {Family::Gauss, a, sign};
}

Integer RadixBase::digit_count() const {
    switch (family) {
        case Family::HypSplit: return a * a - a;
        case Family::HypGauss: return a * a - 1;
        case Family::Gauss: return a * a + 1;
    }
    return 0;
}

std::string RadixBase::name() const {
    switch (family) {
        case Family::HypSplit: return "HypSplit(" + a.get_str() + ")";
        case Family::HypGauss: return "HypGauss(" + a.get_str() + ")";
        case Family::Gauss: return "Gauss(" + a.get_str() + (sign > 0 ? ",+)" : ",-)");
    }
    return "?";
}

RadixBase RadixBase::parse(const std::string& text) {
    static const std::regex hyp(R"((HypSplit|HypGauss)\((-?\d+)\))");
    static const std::regex gauss_re(R"(Gauss\((-?\d+),([+-])\))");
    std::smatch m;
    if (std::regex_match(text, m, hyp)) {
        const Integer a(m[2].str());
        return m[1] == "HypSplit" ? hyp_split(a) : hyp_gauss(a);
    }
    if (std::regex_match(text, m, gauss_re)) return gauss(Integer(m[1].str()), m[2] == "+" ? 1 : -1);
    throw InvalidArgument("unknown radix base '" + text + "' (expected HypSplit(a), HypGauss(a) or Gauss(a,+|-))");
}

std::vector<Integer> digit_set(const RadixBase& base) {
    std::vector<Integer> out;
    const Integer n = base.digit_count();
    for (Integer d = 0; d < n; ++d) out.push_back(d);
    return out;
}

namespace {

// Element in the coordinates native to the base: (u, v) idempotent for
// HypSplit, (x, y) for x + y j, (re, im) for re + im i.
using State = std::pair<Integer, Integer>;

State to_state(const RadixValue& x, const RadixBase& base) {
    if (base.hyperbolic() != std::holds_alternative<HyperbolicInteger>(x))
        throw InvalidArgument("value does not belong to the ring of base " + base.name());
    if (const auto* g = std::get_if<GaussianInteger>(&x)) return {g->re, g->im};
    const auto& h = std::get<HyperbolicInteger>(x);
    if (base.family == RadixBase::Family::HypSplit) return {h.u, h.v};
    if (!h.in_Zj()) throw InvalidArgument("HypGauss bases act on Z[j]; components must agree mod 2");
    return {Integer((h.u + h.v) / 2), Integer((h.u - h.v) / 2)};
}

RadixValue from_state(const State& s, const RadixBase& base) {
    switch (base.family) {
        case RadixBase::Family::HypSplit: return HyperbolicInteger{s.first, s.second};
        case RadixBase::Family::HypGauss: return HyperbolicInteger::from_cartesian(s.first, s.second);
        case RadixBase::Family::Gauss: return GaussianInteger(s.first, s.second);
    }
    return {};
}

// s * conj(q), componentwise in the base's coordinates.
State times_conjugate(const State& s, const RadixBase& base) {
    const Integer& a = base.a;
    switch (base.family) {
        case RadixBase::Family::HypSplit: return {s.first * (1 - a), s.second * a};
        case RadixBase::Family::HypGauss: return {a * s.first - s.second, a * s.second - s.first};
        case RadixBase::Family::Gauss: return {a * s.first + base.sign * s.second, a * s.second - base.sign * s.first};
    }
    return s;
}

State times_base(const State& s, const RadixBase& base) {
    const Integer& a = base.a;
    switch (base.family) {
        case RadixBase::Family::HypSplit: return {s.first * a, s.second * (1 - a)};
        case RadixBase::Family::HypGauss: return {a * s.first + s.second, a * s.second + s.first};
        case RadixBase::Family::Gauss: return {a * s.first - base.sign * s.second, a * s.second + base.sign * s.first};
    }
    return s;
}

State minus_digit(const State& s, const Integer& d, const RadixBase& base) {
    if (base.family == RadixBase::Family::HypSplit) return {s.first - d, s.second - d};
    return {s.first - d, s.second};
}

State plus_digit(const State& s, const Integer& d, const RadixBase& base) { return minus_digit(s, Integer(-d), base); }

// (s / q) when q divides s.
std::optional<State> divide_by_base(const State& s, const RadixBase& base) {
    const State t = times_conjugate(s, base);
    // q * conj(q): a (1 - a), a^2 - 1 or a^2 + 1
    Integer n = base.digit_count();
    if (base.family == RadixBase::Family::HypSplit) n = -n;
    if (!mpz_divisible_p(t.first.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(t.second.get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
    return State{Integer(t.first / n), Integer(t.second / n)};
}

bool is_zero_state(const State& s) { return s.first == 0 && s.second == 0; }

}  // namespace

DigitString encode(const RadixValue& x, const RadixBase& base) {
    State s = to_state(x, base);
    DigitString out{{}, base};
    if (is_zero_state(s)) {
        out.digits.emplace_back(0);
        return out;
    }
    const auto digits = digit_set(base);
    std::set<State> seen;
    while (!is_zero_state(s)) {
        if (!seen.insert(s).second)
            throw NonTermination("expansion of " + to_string(x) + " in base " + base.name() + " enters a cycle");
        if (out.digits.size() >= radix_digit_cap)
            throw NonTermination("expansion of " + to_string(x) + " in base " + base.name() + " exceeds " +
                                 std::to_string(radix_digit_cap) + " digits");
        std::optional<State> next;
        for (const auto& d : digits) {
            next = divide_by_base(minus_digit(s, d, base), base);
            if (next) {
                out.digits.push_back(d);
                break;
            }
        }
        if (!next) throw Error("no digit of " + base.name() + " is congruent to the current remainder");
        s = *next;
    }
    return out;
}

RadixValue decode(const DigitString& str) {
    const Integer n = str.base.digit_count();
    if (str.digits.empty()) throw InvalidArgument("empty digit string");
    State acc{0, 0};
    for (auto it = str.digits.rbegin(); it != str.digits.rend(); ++it) {
        if (*it < 0 || *it >= n)
            throw InvalidArgument("digit " + it->get_str() + " is outside the digit set of " + str.base.name());
        acc = plus_digit(times_base(acc, str.base), *it, str.base);
    }
    return from_state(acc, str.base);
}

std::string to_string(const RadixValue& x) {
    if (const auto* g = std::get_if<GaussianInteger>(&x)) return to_string(*g);
    return to_idempotent_string(to_bicomplex(x));
}

BicomplexElement to_bicomplex(const RadixValue& x) {
    if (const auto* g = std::get_if<GaussianInteger>(&x)) {
        const GaussianRational c(Rational(g->re), Rational(g->im));
        return {c, c};
    }
    const auto& h = std::get<HyperbolicInteger>(x);
    return {GaussianRational(Rational(h.u)), GaussianRational(Rational(h.v))};
}

RadixValue radix_value_from(const BicomplexElement& w, const RadixBase& base) {
    const BicomplexElement g = to_gaussian(w);
    const auto& c1 = std::get<GaussianRational>(g.c1);
    const auto& c2 = std::get<GaussianRational>(g.c2);
    auto as_integer = [&](const Rational& r) {
        if (!is_integer(r)) throw InvalidArgument("radix values need integer coordinates, got " + to_cartesian_string(w));
        return Integer(r.get_num());
    };
    if (base.hyperbolic()) {
        if (c1.im != 0 || c2.im != 0)
            throw InvalidArgument(to_cartesian_string(w) + " is not a hyperbolic number");
        return HyperbolicInteger{as_integer(c1.re), as_integer(c2.re)};
    }
    if (!(c1 == c2)) throw InvalidArgument(to_cartesian_string(w) + " is not a Gaussian number");
    return GaussianInteger(as_integer(c1.re), as_integer(c1.im));
}

}  // namespace bicx
