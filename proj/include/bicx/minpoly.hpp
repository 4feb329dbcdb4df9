#pragma once

#include "bicx/bicomplex.hpp"
#include "bicx/polynomial.hpp"

namespace bicx {

enum class MinPolyKind { Common, Product };

struct MinPolyResult {
    IntPolynomial poly;
    MinPolyKind kind;
    IntPolynomial component1, component2;
};

/// Primitive minimal polynomial of a rational or quadratic scalar.
IntPolynomial minpoly_component(const ComponentScalar& g);

/// Minimal polynomial of c1*e1 + c2*e2: lcm of the component polynomials.
/// Common when both components share a minimal polynomial.
MinPolyResult minpoly_bicomplex(const BicomplexElement& w);

/// P(w) = P(c1) e1 + P(c2) e2 by Horner in each slot.
BicomplexElement eval_at_bicomplex(const RatPolynomial& p, const BicomplexElement& w);

/// X^4 - fourRe X^3 + B X^2 - A X + N built from the four conjugates of w.
/// A is the sum of the four triple products, B the sum of the six pairwise
/// products, N the full product.
struct QuarticCharpoly {
    RatPolynomial poly;
    Rational four_re, A, B, N;
};

/// Requires a Cartesian view.
QuarticCharpoly quartic_charpoly(const BicomplexElement& w);

}  // namespace bicx
