#include "bicx/scalar.hpp"

#include "bicx/errors.hpp"

namespace bicx {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.abs2();
    if (n == 0) throw NullConeError("division by zero Gaussian rational");
    GaussianRational num = a * b.conj();
    return {num.re / n, num.im / n};
}

QuadRational::QuadRational(Integer D, Rational a, Rational b) : D_(std::move(D)), a_(std::move(a)), b_(std::move(b)) {
    if (D_ == 0 || D_ == 1 || !is_squarefree(D_))
        throw InvalidArgument("QuadRational: D = " + D_.get_str() + " is not a squarefree integer outside {0, 1}");
}

QuadRational QuadRational::conj() const {
    if (D_ < 0) return {D_, a_, -b_};
    return *this;
}

namespace {

void require_same_field(const QuadRational& x, const QuadRational& y) {
    if (x.D() != y.D())
        throw TagMismatch("quadratic scalars from Q(sqrt " + x.D().get_str() + ") and Q(sqrt " + y.D().get_str() + ")");
}

const char* kind_name(ScalarKind k) {
    switch (k) {
        case ScalarKind::Rational: return "rational";
        case ScalarKind::Gaussian: return "Gaussian";
        case ScalarKind::Quadratic: return "quadratic";
    }
    return "?";
}

template <class F>
ComponentScalar binary(const ComponentScalar& a, const ComponentScalar& b, F&& f) {
    if (a.index() != b.index())
        throw TagMismatch(std::string("mixed component kinds: ") + kind_name(kind_of(a)) + " and " +
                          kind_name(kind_of(b)));
    return std::visit(
        [&](const auto& x) -> ComponentScalar {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b);
            if constexpr (std::is_same_v<T, QuadRational>) require_same_field(x, y);
            return T(f(x, y));
        },
        a);
}

}  // namespace

QuadRational operator+(const QuadRational& x, const QuadRational& y) {
    require_same_field(x, y);
    return {x.D_, x.a_ + y.a_, x.b_ + y.b_};
}

QuadRational operator-(const QuadRational& x, const QuadRational& y) {
    require_same_field(x, y);
    return {x.D_, x.a_ - y.a_, x.b_ - y.b_};
}

QuadRational operator*(const QuadRational& x, const QuadRational& y) {
    require_same_field(x, y);
    return {x.D_, x.a_ * y.a_ + x.D_ * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
}

QuadRational operator/(const QuadRational& x, const QuadRational& y) {
    require_same_field(x, y);
    Rational n = y.field_norm();
    if (n == 0) throw NullConeError("division by zero quadratic scalar");
    QuadRational num = x * QuadRational(y.D_, y.a_, -y.b_);
    return {x.D_, num.a_ / n, num.b_ / n};
}

ScalarKind kind_of(const ComponentScalar& s) { return static_cast<ScalarKind>(s.index()); }

bool is_zero(const ComponentScalar& s) {
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
                return x == 0;
            else
                return x.is_zero();
        },
        s);
}

bool compatible(const ComponentScalar& a, const ComponentScalar& b) {
    if (a.index() != b.index()) return false;
    if (const auto* qa = std::get_if<QuadRational>(&a)) return qa->D() == std::get<QuadRational>(b).D();
    return true;
}

ComponentScalar add(const ComponentScalar& a, const ComponentScalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
}
ComponentScalar sub(const ComponentScalar& a, const ComponentScalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
}
ComponentScalar mul(const ComponentScalar& a, const ComponentScalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
}
ComponentScalar div(const ComponentScalar& a, const ComponentScalar& b) {
    if (is_zero(b)) throw NullConeError("division by a zero component");
    return binary(a, b, [](const auto& x, const auto& y) { return x / y; });
}

ComponentScalar neg(const ComponentScalar& a) {
    return std::visit([](const auto& x) -> ComponentScalar { return std::decay_t<decltype(x)>(-x); }, a);
}

ComponentScalar conj(const ComponentScalar& a) {
    return std::visit(
        [](const auto& x) -> ComponentScalar {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
                return x;
            else
                return x.conj();
        },
        a);
}

ComponentScalar rational_like(const ComponentScalar& like, const Rational& q) {
    switch (kind_of(like)) {
        case ScalarKind::Rational: return q;
        case ScalarKind::Gaussian: return GaussianRational(q);
        case ScalarKind::Quadratic: return QuadRational(std::get<QuadRational>(like).D(), q);
    }
    return q;
}

GaussianRational to_gaussian(const ComponentScalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) return GaussianRational(*r);
    if (const auto* g = std::get_if<GaussianRational>(&s)) return *g;
    const auto& q = std::get<QuadRational>(s);
    if (q.D() == -1) return {q.a(), q.b()};
    if (q.b() == 0) return GaussianRational(q.a());
    throw TagMismatch("Q(sqrt " + q.D().get_str() + ") value is not a Gaussian rational");
}

bool is_rational_value(const ComponentScalar& s) {
    if (std::holds_alternative<Rational>(s)) return true;
    if (const auto* g = std::get_if<GaussianRational>(&s)) return g->im == 0;
    return std::get<QuadRational>(s).b() == 0;
}

Rational rational_value(const ComponentScalar& s) {
    if (!is_rational_value(s)) throw InvalidArgument("component value " + to_string(s) + " is not rational");
    if (const auto* r = std::get_if<Rational>(&s)) return *r;
    if (const auto* g = std::get_if<GaussianRational>(&s)) return g->re;
    return std::get<QuadRational>(s).a();
}

ComponentScalar abs2(const ComponentScalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) return Rational(*r * *r);
    if (const auto* g = std::get_if<GaussianRational>(&s)) return g->abs2();
    const auto& q = std::get<QuadRational>(s);
    if (q.D() < 0) return q.field_norm();
    QuadRational sq = q * q;
    if (sq.b() == 0) return sq.a();
    return sq;
}

namespace {

// "a+b*<unit>" with the zero parts dropped.
std::string two_part(const Rational& a, const Rational& b, const std::string& unit) {
    if (b == 0) return a.get_str();
    std::string out;
    if (a != 0) out = a.get_str();
    Rational mag = abs(b);
    if (b < 0)
        out += "-";
    else if (a != 0)
        out += "+";
    if (mag != 1) out += mag.get_str() + "*";
    return out + unit;
}

}  // namespace

std::string to_string(const GaussianRational& z) { return two_part(z.re, z.im, "i"); }

std::string to_string(const QuadRational& q) {
    std::string unit = q.D() == -1 ? "i" : (q.D() < 0 ? "i*sqrt(" + Integer(-q.D()).get_str() + ")" : "sqrt(" + q.D().get_str() + ")");
    return two_part(q.a(), q.b(), unit);
}

std::string to_string(const ComponentScalar& s) {
    return std::visit([](const auto& x) -> std::string { return to_string(x); }, s);
}

}  // namespace bicx
