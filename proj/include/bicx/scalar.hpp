#pragma once

#include <string>
#include <variant>

#include "bicx/arith.hpp"

namespace bicx {

/// re + im*i with rational parts.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}

    GaussianRational conj() const { return {re, -im}; }
    /// |z|^2
    Rational abs2() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    /// Throws NullConeError when b is zero.
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
    friend auto operator<=>(const GaussianRational& a, const GaussianRational& b) {
        if (auto c = cmp(a.re, b.re); c != 0) return c <=> 0;
        return cmp(a.im, b.im) <=> 0;
    }
};

/// a + b*sqrt(D) for squarefree D not in {0, 1}.  D < 0 is the imaginary
/// quadratic field Q(i*sqrt|D|).
class QuadRational {
public:
    QuadRational(Integer D, Rational a = 0, Rational b = 0);

    const Integer& D() const { return D_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    /// Complex conjugation: negates b for imaginary fields, identity for real ones.
    QuadRational conj() const;
    /// Field norm a^2 - D b^2.
    Rational field_norm() const { return a_ * a_ - D_ * b_ * b_; }
    Rational trace() const { return 2 * a_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend QuadRational operator+(const QuadRational& x, const QuadRational& y);
    friend QuadRational operator-(const QuadRational& x, const QuadRational& y);
    friend QuadRational operator-(const QuadRational& x) { return {x.D_, -x.a_, -x.b_}; }
    friend QuadRational operator*(const QuadRational& x, const QuadRational& y);
    friend QuadRational operator/(const QuadRational& x, const QuadRational& y);
    friend bool operator==(const QuadRational&, const QuadRational&) = default;

private:
    Integer D_;
    Rational a_, b_;
};

/// One idempotent component of a bicomplex number.
using ComponentScalar = std::variant<Rational, GaussianRational, QuadRational>;

enum class ScalarKind { Rational, Gaussian, Quadratic };

ScalarKind kind_of(const ComponentScalar& s);
bool is_zero(const ComponentScalar& s);
/// Same kind, and same D for quadratic scalars.
bool compatible(const ComponentScalar& a, const ComponentScalar& b);

ComponentScalar add(const ComponentScalar& a, const ComponentScalar& b);
ComponentScalar sub(const ComponentScalar& a, const ComponentScalar& b);
ComponentScalar mul(const ComponentScalar& a, const ComponentScalar& b);
/// Throws NullConeError when b is zero.
ComponentScalar div(const ComponentScalar& a, const ComponentScalar& b);
ComponentScalar neg(const ComponentScalar& a);
ComponentScalar conj(const ComponentScalar& a);

/// The rational q in the same kind (and field) as `like`.
ComponentScalar rational_like(const ComponentScalar& like, const Rational& q);

/// Explicit widening Rational -> GaussianRational; Gaussian is returned as-is,
/// QuadRational with D = -1 is re-tagged.  Other quadratic values throw TagMismatch.
GaussianRational to_gaussian(const ComponentScalar& s);

/// The value as a rational if it is one (im = 0, b = 0 allowed).
bool is_rational_value(const ComponentScalar& s);
Rational rational_value(const ComponentScalar& s);

/// |s|^2 for every kind where it is rational: rationals, Gaussians and
/// imaginary quadratic values.  Real quadratic values return s^2 in Q(sqrt D).
ComponentScalar abs2(const ComponentScalar& s);

std::string to_string(const GaussianRational& z);
std::string to_string(const QuadRational& q);
std::string to_string(const ComponentScalar& s);

}  // namespace bicx
