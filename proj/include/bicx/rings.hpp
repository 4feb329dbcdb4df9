#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicx/bicomplex.hpp"

namespace bicx {

/// Q or a quadratic field Q(sqrt D), D squarefree and not in {0, 1}.
class FieldDescriptor {
public:
    static FieldDescriptor rational() { return FieldDescriptor(); }
    static FieldDescriptor quadratic(const Integer& D);
    static FieldDescriptor gaussian() { return quadratic(-1); }

    bool is_rational() const { return !D_.has_value(); }
    bool is_imaginary_quadratic() const { return D_ && *D_ < 0; }
    bool is_real_quadratic() const { return D_ && *D_ > 0; }
    /// Requires a quadratic field.
    const Integer& D() const;
    int degree() const { return D_ ? 2 : 1; }
    /// Discriminant of the maximal order: 1 for Q, D or 4D for Q(sqrt D).
    Integer discriminant() const;

    /// "Q", "Q(i)", "Q(sqrt:D)"
    std::string name() const;
    /// Inverse of name(); also accepts "Q(sqrt:-1)".
    static FieldDescriptor parse(const std::string& text);

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

private:
    std::optional<Integer> D_;
};

/// L = K1 e1 + K2 e2.
struct ExtensionDescriptor {
    FieldDescriptor K1, K2;

    int degree() const { return K1.degree() + K2.degree(); }
    const FieldDescriptor& field(int slot) const { return slot == 1 ? K1 : K2; }

    /// Hyperbolic rationals Q e1 + Q e2 = Q[j].
    static ExtensionDescriptor Qh() { return {FieldDescriptor::rational(), FieldDescriptor::rational()}; }
    /// Q(i) e1 + Q(i) e2 = Q[i, j].
    static ExtensionDescriptor QB() { return {FieldDescriptor::gaussian(), FieldDescriptor::gaussian()}; }

    /// "Qh", "QB" or "custom:K1,K2".
    std::string name() const;
    static ExtensionDescriptor parse(const std::string& text);

    friend bool operator==(const ExtensionDescriptor&, const ExtensionDescriptor&) = default;
};

/// Re-tags each slot in the canonical kind of its field: Rational for Q,
/// GaussianRational for Q(i), QuadRational otherwise.  Throws InvalidArgument
/// when a component does not lie in its field.
BicomplexElement to_ring_form(const BicomplexElement& w, const ExtensionDescriptor& L);

/// Each component satisfies a monic integer polynomial.
bool is_integral(const BicomplexElement& w, const ExtensionDescriptor& L);

/// e1 * (basis of O_K1) followed by e2 * (basis of O_K2).
std::vector<BicomplexElement> integral_basis(const ExtensionDescriptor& L);

/// Coordinates of w in integral_basis(L).
std::vector<Rational> basis_coordinates(const BicomplexElement& w, const ExtensionDescriptor& L);

/// Trace of w as an element of L over Q.
Rational trace(const BicomplexElement& w, const ExtensionDescriptor& L);

/// Product of the component discriminants.
Integer discriminant(const ExtensionDescriptor& L);
/// det(Tr(b_i b_j)) over the integral basis, traces taken from the regular
/// representation of multiplication.
Integer discriminant_by_trace_form(const ExtensionDescriptor& L);

enum class UnitClass { C1, C2, C3, Infinite };
std::string to_string(UnitClass c);

struct UnitGroupInfo {
    bool finite;
    std::optional<Integer> order;
    UnitClass unit_class;
    std::string structure;
};

UnitGroupInfo unit_group(const ExtensionDescriptor& L);
/// All units, for finite unit groups.
std::vector<BicomplexElement> enumerate_units(const ExtensionDescriptor& L);
/// A unit of infinite order (fundamental unit of a real quadratic slot),
/// for infinite unit groups.
BicomplexElement infinite_order_witness(const ExtensionDescriptor& L);

bool is_unit(const BicomplexElement& w, const ExtensionDescriptor& L);

/// a + b i with integer parts.
struct GaussianInteger {
    Integer re, im;

    GaussianInteger() = default;
    GaussianInteger(Integer r, Integer i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianInteger(long r) : re(r), im(0) {}

    Integer norm() const { return re * re + im * im; }
    GaussianInteger conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }

    friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
};

/// Exact quotient if b divides a.
std::optional<GaussianInteger> divide_exact(const GaussianInteger& a, const GaussianInteger& b);
GaussianInteger gaussian_gcd(GaussianInteger a, GaussianInteger b);
std::string to_string(const GaussianInteger& g);

/// Associate in the first quadrant (re > 0, im >= 0) and the unit u with
/// g = u * normalized.
std::pair<GaussianInteger, GaussianInteger> gaussian_canonical(const GaussianInteger& g);
bool is_gaussian_prime(const GaussianInteger& g);

struct GaussianFactorization {
    GaussianInteger unit;
    std::vector<std::pair<GaussianInteger, unsigned>> factors;
};

/// Canonical first-quadrant primes sorted by (norm, re, im).
GaussianFactorization factor_gaussian(const GaussianInteger& g);

/// Square root of -1 modulo a prime p = 1 (mod 4).
Integer sqrt_minus_one_mod(const Integer& p);

struct Associate {
    BicomplexElement unit, normalized;
};

/// w = unit * normalized with each slot normalized (positive in Z, first
/// quadrant in Z[i]).  Components must be Z or Z[i]; w outside the null cone.
Associate canonical_associate(const BicomplexElement& w, const ExtensionDescriptor& L);

enum class PrimeForm { E1, E2, FirstSlot, SecondSlot };
std::string to_string(PrimeForm f);

struct PrimeClassification {
    bool prime = false;
    std::optional<PrimeForm> form;
    bool irreducible = false;
};

/// Up to units: e1, e2, p1 e1 + e2 or e1 + p2 e2 with p_k prime in its slot.
PrimeClassification is_prime_element(const BicomplexElement& w, const ExtensionDescriptor& L);

struct BicomplexFactorization {
    BicomplexElement unit;
    std::vector<std::pair<BicomplexElement, unsigned>> factors;

    BicomplexElement recompose() const;
};

/// Factorization into canonical primes of the forms p e1 + e2 and e1 + p e2,
/// ordered by slot, then component norm, then coordinates.  Throws
/// NullConeError for N = 0 and InvalidArgument for units.
BicomplexFactorization factor(const BicomplexElement& w, const ExtensionDescriptor& L);

struct PrimeProfile {
    unsigned factor_count;
    bool semiprime;
};

/// How the rational prime p factors in O_L.
PrimeProfile rational_prime_profile(const Integer& p, const ExtensionDescriptor& L);

}  // namespace bicx
