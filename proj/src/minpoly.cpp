#include "bicx/minpoly.hpp"

#include "bicx/errors.hpp"

namespace bicx {

namespace {

IntPolynomial quadratic_minpoly(const Rational& a, const Rational& b, const Rational& unit_square) {
    if (b == 0) return content_primitive(RatPolynomial{-a, Rational(1)}).prim;
    // X^2 - 2aX + (a^2 - u^2 b^2)
    return content_primitive(RatPolynomial{a * a - unit_square * b * b, -2 * a, Rational(1)}).prim;
}

}  // namespace

IntPolynomial minpoly_component(const ComponentScalar& g) {
    if (const auto* r = std::get_if<Rational>(&g)) return quadratic_minpoly(*r, 0, 0);
    if (const auto* z = std::get_if<GaussianRational>(&g)) return quadratic_minpoly(z->re, z->im, -1);
    const auto& q = std::get<QuadRational>(g);
    return quadratic_minpoly(q.a(), q.b(), Rational(q.D()));
}

MinPolyResult minpoly_bicomplex(const BicomplexElement& w) {
    IntPolynomial p1 = minpoly_component(w.c1), p2 = minpoly_component(w.c2);
    if (p1 == p2) return {p1, MinPolyKind::Common, p1, p2};
    return {poly_lcm(p1, p2), MinPolyKind::Product, p1, p2};
}

namespace {

ComponentScalar horner(const RatPolynomial& p, const ComponentScalar& x) {
    ComponentScalar acc = rational_like(x, 0);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add(mul(acc, x), rational_like(x, *it));
    return acc;
}

}  // namespace

BicomplexElement eval_at_bicomplex(const RatPolynomial& p, const BicomplexElement& w) {
    return {horner(p, w.c1), horner(p, w.c2)};
}

QuarticCharpoly quartic_charpoly(const BicomplexElement& w) {
    if (!has_cartesian_view(w)) throw InvalidArgument("quartic_charpoly: element has no Cartesian view");
    const BicomplexElement c0 = to_gaussian(w);
    const BicomplexElement c[4] = {c0, conjugate(c0, Axis::I), conjugate(c0, Axis::J), conjugate(c0, Axis::K)};
    BicomplexElement sum = c[0] + c[1] + c[2] + c[3];
    BicomplexElement pairs = c0.scalar_like(0), triples = c0.scalar_like(0);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            pairs = pairs + c[a] * c[b];
            for (int d = b + 1; d < 4; ++d) triples = triples + c[a] * c[b] * c[d];
        }
    BicomplexElement prod = c[0] * c[1] * c[2] * c[3];
    // every symmetric function of the conjugates is fixed by all three
    // conjugations, hence a real rational embedded as (q, q)
    auto real = [](const BicomplexElement& e) {
        if (!in_subalgebra(e, Axis::I) || !in_subalgebra(e, Axis::J))
            throw Error("quartic_charpoly: symmetric function is not rational");
        return rational_value(e.c1);
    };
    QuarticCharpoly out;
    out.four_re = real(sum);
    out.B = real(pairs);
    out.A = real(triples);
    out.N = real(prod);
    out.poly = RatPolynomial{out.N, -out.A, out.B, -out.four_re, Rational(1)};
    return out;
}

}  // namespace bicx
