#pragma once

#include <vector>

#include "bicx/rings.hpp"

namespace bicx {

/// Ideal of a component ring Z or Z[i].
struct ComponentIdeal {
    enum class Kind { Zero, Full, Principal };
    Kind kind = Kind::Zero;
    /// Canonical associate; meaningful for Principal only.
    GaussianInteger generator;

    static ComponentIdeal zero() { return {Kind::Zero, {}}; }
    static ComponentIdeal full() { return {Kind::Full, {}}; }
    /// Collapses to Zero or Full for zero or unit generators.
    static ComponentIdeal principal(const GaussianInteger& g, const FieldDescriptor& K);

    friend bool operator==(const ComponentIdeal&, const ComponentIdeal&) = default;
};

struct BicomplexIdeal {
    ComponentIdeal a1, a2;
    ExtensionDescriptor L;

    /// (w) = (w1) e1 + (w2) e2.
    static BicomplexIdeal principal(const BicomplexElement& w, const ExtensionDescriptor& L);
    /// (e1) for slot 1, (e2) for slot 2.
    static BicomplexIdeal degenerate(int slot, const ExtensionDescriptor& L);

    bool is_degenerate() const;
    /// Element membership, slot by slot.
    bool contains(const BicomplexElement& w) const;

    friend bool operator==(const BicomplexIdeal&, const BicomplexIdeal&) = default;
};

std::string to_string(const BicomplexIdeal& a);

/// |O_K1/a1| * |O_K2/a2|.  Throws InvalidArgument for zero and degenerate
/// ideals, whose norm is left undefined.
Integer ideal_norm(const BicomplexIdeal& a);
bool is_prime_ideal(const BicomplexIdeal& a);

/// Number of Gaussian integers of norm n.
Integer jacobi_r(const Integer& n);

/// a(1..N); values[0] holds a(1).
struct CoefficientTable {
    long N = 0;
    std::vector<Integer> values;

    const Integer& operator()(long n) const { return values.at(static_cast<std::size_t>(n - 1)); }
    friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

/// Ideal counts of Q or Q(i).
CoefficientTable coefficient_table(const FieldDescriptor& K, long N);
/// Qh: d(n); QB: (r*r)(n)/16; other extensions with Z or Z[i] components:
/// convolution of the component tables.
CoefficientTable coefficient_table(const ExtensionDescriptor& L, long N);

CoefficientTable dirichlet_convolve(const CoefficientTable& f, const CoefficientTable& g);

/// sum_{n <= N} a(n) / n^s, s > 1.
long double zeta_partial(const CoefficientTable& a, long double s);

/// Counts principal ideals of norm n by enumerating canonical generators.
Integer brute_force_ideal_count(const FieldDescriptor& K, long n);

}  // namespace bicx
