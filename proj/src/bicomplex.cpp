#include "bicx/bicomplex.hpp"

#include "bicx/errors.hpp"

namespace bicx {

BicomplexElement operator+(const BicomplexElement& a, const BicomplexElement& b) {
    return {add(a.c1, b.c1), add(a.c2, b.c2)};
}

BicomplexElement operator-(const BicomplexElement& a, const BicomplexElement& b) {
    return {sub(a.c1, b.c1), sub(a.c2, b.c2)};
}

BicomplexElement operator-(const BicomplexElement& a) { return {neg(a.c1), neg(a.c2)}; }

BicomplexElement operator*(const BicomplexElement& a, const BicomplexElement& b) {
    return {mul(a.c1, b.c1), mul(a.c2, b.c2)};
}

BicomplexElement pow(const BicomplexElement& a, unsigned k) {
    BicomplexElement result = a.scalar_like(1), base = a;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

namespace units {
BicomplexElement one() { return from_cartesian(1, 0, 0, 0); }
BicomplexElement i() { return from_cartesian(0, 1, 0, 0); }
BicomplexElement j() { return from_cartesian(0, 0, 1, 0); }
BicomplexElement k() { return from_cartesian(0, 0, 0, 1); }
BicomplexElement e1() { return {GaussianRational(1), GaussianRational(0)}; }
BicomplexElement e2() { return {GaussianRational(0), GaussianRational(1)}; }
}  // namespace units

BicomplexElement from_cartesian(const Rational& x, const Rational& y, const Rational& z, const Rational& t) {
    return {GaussianRational(x + z, y + t), GaussianRational(x - z, y - t)};
}

BicomplexElement from_cartesian(const Cartesian& c) { return from_cartesian(c.x, c.y, c.z, c.t); }

BicomplexElement to_gaussian(const BicomplexElement& w) { return {to_gaussian(w.c1), to_gaussian(w.c2)}; }

bool has_cartesian_view(const BicomplexElement& w) {
    auto ok = [](const ComponentScalar& s) {
        if (const auto* q = std::get_if<QuadRational>(&s)) return q->D() == -1 || q->b() == 0;
        return true;
    };
    return ok(w.c1) && ok(w.c2);
}

Cartesian to_cartesian(const BicomplexElement& w) {
    if (!has_cartesian_view(w))
        throw InvalidArgument("element " + to_idempotent_string(w) + " has no rational Cartesian view");
    GaussianRational g1 = to_gaussian(w.c1), g2 = to_gaussian(w.c2);
    return {(g1.re + g2.re) / 2, (g1.im + g2.im) / 2, (g1.re - g2.re) / 2, (g1.im - g2.im) / 2};
}

bool is_invertible(const BicomplexElement& w) { return !is_zero(w.c1) && !is_zero(w.c2); }

bool in_null_cone(const BicomplexElement& w) { return !is_invertible(w); }

BicomplexElement invert(const BicomplexElement& w) {
    if (!is_invertible(w)) throw NullConeError("element " + to_idempotent_string(w) + " lies in the null cone");
    return {div(rational_like(w.c1, 1), w.c1), div(rational_like(w.c2, 1), w.c2)};
}

BicomplexElement conjugate(const BicomplexElement& w, Axis axis) {
    switch (axis) {
        case Axis::I: return {w.c2, w.c1};
        case Axis::J: return {conj(w.c1), conj(w.c2)};
        case Axis::K: return {conj(w.c2), conj(w.c1)};
    }
    return w;
}

ComponentScalar norm(const BicomplexElement& w) {
    ComponentScalar a = abs2(w.c1), b = abs2(w.c2);
    if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b))
        return Rational(std::get<Rational>(a) * std::get<Rational>(b));
    // at least one real quadratic factor: multiply inside that field
    const QuadRational& q = std::holds_alternative<QuadRational>(a) ? std::get<QuadRational>(a) : std::get<QuadRational>(b);
    auto lift = [&](const ComponentScalar& s) {
        if (const auto* r = std::get_if<Rational>(&s)) return QuadRational(q.D(), *r);
        return std::get<QuadRational>(s);
    };
    QuadRational prod = lift(a) * lift(b);
    if (prod.b() == 0) return prod.a();
    return prod;
}

Rational norm_rational(const BicomplexElement& w) {
    ComponentScalar n = norm(w);
    if (const auto* r = std::get_if<Rational>(&n)) return *r;
    throw InvalidArgument("norm " + to_string(n) + " is irrational");
}

bool coordinate_recovery_check(const BicomplexElement& w) {
    if (!has_cartesian_view(w)) return false;
    const Cartesian expected = to_cartesian(w);
    const BicomplexElement g = to_gaussian(w);
    const BicomplexElement ci = conjugate(g, Axis::I), cj = conjugate(g, Axis::J), ck = conjugate(g, Axis::K);
    const BicomplexElement quarter = from_cartesian(Rational(1, 4), 0, 0, 0);
    // inverses of the units: i^-1 = -i, j^-1 = j, k^-1 = -k
    const BicomplexElement x = quarter * (g + ci + cj + ck);
    const BicomplexElement y = quarter * -units::i() * (g + ci - cj - ck);
    const BicomplexElement z = quarter * units::j() * (g - ci + cj - ck);
    const BicomplexElement t = quarter * -units::k() * (g - ci - cj + ck);
    auto real_equals = [](const BicomplexElement& e, const Rational& v) {
        const auto& a = std::get<GaussianRational>(e.c1);
        const auto& b = std::get<GaussianRational>(e.c2);
        return a == b && a.im == 0 && a.re == v;
    };
    return real_equals(x, expected.x) && real_equals(y, expected.y) && real_equals(z, expected.z) &&
           real_equals(t, expected.t);
}

bool in_subalgebra(const BicomplexElement& w, Axis axis) {
    switch (axis) {
        case Axis::I: return conjugate(w, Axis::I) == w;
        case Axis::J: return conjugate(w, Axis::J) == w;
        case Axis::K: return conjugate(w, Axis::K) == w;
    }
    return false;
}

std::string to_cartesian_string(const BicomplexElement& w) {
    const Cartesian c = to_cartesian(w);
    const Rational* coeff[] = {&c.x, &c.y, &c.z, &c.t};
    const char* unit[] = {"", "i", "j", "k"};
    std::string out;
    for (int n = 0; n < 4; ++n) {
        const Rational& v = *coeff[n];
        if (v == 0) continue;
        Rational mag = abs(v);
        if (v < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (n == 0)
            out += mag.get_str();
        else if (mag == 1)
            out += unit[n];
        else
            out += mag.get_str() + "*" + unit[n];
    }
    return out.empty() ? "0" : out;
}

std::string to_idempotent_string(const BicomplexElement& w) {
    return "[" + to_string(w.c1) + ", " + to_string(w.c2) + "]";
}

Axis parse_axis(const std::string& s) {
    if (s == "i") return Axis::I;
    if (s == "j") return Axis::J;
    if (s == "k") return Axis::K;
    throw InvalidArgument("unknown conjugation axis '" + s + "' (expected i, j or k)");
}

std::string to_string(Axis a) {
    switch (a) {
        case Axis::I: return "i";
        case Axis::J: return "j";
        case Axis::K: return "k";
    }
    return "?";
}

}  // namespace bicx
