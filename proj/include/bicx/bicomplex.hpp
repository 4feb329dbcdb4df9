#pragma once

#include <string>

#include "bicx/scalar.hpp"

namespace bicx {

/// Cartesian coordinates of x + y*i + z*j + t*k.
struct Cartesian {
    Rational x, y, z, t;
    friend bool operator==(const Cartesian&, const Cartesian&) = default;
};

enum class Axis { I, J, K };

/// A bicomplex number c1*e1 + c2*e2 over the idempotent basis
/// e1 = (1+j)/2, e2 = (1-j)/2.
///
/// Projection onto e1 is the ring map fixing i with j -> 1 (so k -> i);
/// projection onto e2 sends j -> -1 (so k -> -i).  Ring operations act
/// slot by slot, so each slot only has to be kind-compatible with the same
/// slot of the other operand; c1 and c2 may live in different fields.
struct BicomplexElement {
    ComponentScalar c1, c2;

    BicomplexElement() : c1(Rational(0)), c2(Rational(0)) {}
    BicomplexElement(ComponentScalar a, ComponentScalar b) : c1(std::move(a)), c2(std::move(b)) {}

    /// The rational q embedded as (q, q) in the kind of this element's slots.
    BicomplexElement scalar_like(const Rational& q) const { return {rational_like(c1, q), rational_like(c2, q)}; }

    bool is_zero() const { return bicx::is_zero(c1) && bicx::is_zero(c2); }

    friend bool operator==(const BicomplexElement&, const BicomplexElement&) = default;
};

BicomplexElement operator+(const BicomplexElement& a, const BicomplexElement& b);
BicomplexElement operator-(const BicomplexElement& a, const BicomplexElement& b);
BicomplexElement operator-(const BicomplexElement& a);
BicomplexElement operator*(const BicomplexElement& a, const BicomplexElement& b);
BicomplexElement pow(const BicomplexElement& a, unsigned k);

/// Named units as Gaussian-tagged elements.
namespace units {
BicomplexElement one();
BicomplexElement i();
BicomplexElement j();
BicomplexElement k();
BicomplexElement e1();
BicomplexElement e2();
}  // namespace units

BicomplexElement from_cartesian(const Rational& x, const Rational& y, const Rational& z, const Rational& t);
BicomplexElement from_cartesian(const Cartesian& c);

/// Both slots widened to GaussianRational; throws TagMismatch for real or
/// non-Gaussian quadratic components.
BicomplexElement to_gaussian(const BicomplexElement& w);

bool has_cartesian_view(const BicomplexElement& w);
/// Throws InvalidArgument when a component has no Gaussian-rational value.
Cartesian to_cartesian(const BicomplexElement& w);

bool is_invertible(const BicomplexElement& w);
/// Componentwise inverse; NullConeError when a component is zero.
BicomplexElement invert(const BicomplexElement& w);

/// bar-i swaps the slots, bar-j conjugates both, bar-k does both.
BicomplexElement conjugate(const BicomplexElement& w, Axis axis);

/// N(w) = |c1 c2|^2.  Rational for rational, Gaussian and imaginary quadratic
/// components; a real quadratic value is returned as a QuadRational.
ComponentScalar norm(const BicomplexElement& w);
/// Rational norm; throws when the norm is irrational.
Rational norm_rational(const BicomplexElement& w);

bool in_null_cone(const BicomplexElement& w);

/// Recovers x, y, z, t from the four conjugates by the averaging identities
/// and compares against to_cartesian.
bool coordinate_recovery_check(const BicomplexElement& w);

/// Membership in C_i (c1 == c2), C_k (c2 == conj c1), C_j (both real).
bool in_subalgebra(const BicomplexElement& w, Axis axis);

/// "x+y*i+z*j+t*k" with zero terms and unit coefficients elided.
std::string to_cartesian_string(const BicomplexElement& w);
/// "[g1, g2]"
std::string to_idempotent_string(const BicomplexElement& w);

Axis parse_axis(const std::string& s);
std::string to_string(Axis a);

}  // namespace bicx
