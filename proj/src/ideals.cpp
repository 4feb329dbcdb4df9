#include "bicx/ideals.hpp"

#include <cmath>
#include <cstdlib>

#include "bicx/errors.hpp"

namespace bicx {

namespace {

void require_principal_field(const FieldDescriptor& K) {
    if (!K.is_rational() && K.D() != -1)
        throw Unsupported("ideals are implemented for Z and Z[i] components only, not " + K.name());
}

GaussianInteger slot_value(const ComponentScalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) {
        if (!is_integer(*r)) throw InvalidArgument("generator " + to_string(s) + " is not integral");
        return GaussianInteger(r->get_num());
    }
    const GaussianRational g = to_gaussian(s);
    if (!is_integer(g.re) || !is_integer(g.im)) throw InvalidArgument("generator " + to_string(s) + " is not integral");
    return {g.re.get_num(), g.im.get_num()};
}

bool component_contains(const ComponentIdeal& a, const GaussianInteger& x) {
    switch (a.kind) {
        case ComponentIdeal::Kind::Zero: return x.is_zero();
        case ComponentIdeal::Kind::Full: return true;
        case ComponentIdeal::Kind::Principal: return divide_exact(x, a.generator).has_value();
    }
    return false;
}

bool component_prime(const ComponentIdeal& a, const FieldDescriptor& K) {
    switch (a.kind) {
        case ComponentIdeal::Kind::Zero: return true;
        case ComponentIdeal::Kind::Full: return false;
        case ComponentIdeal::Kind::Principal:
            if (K.is_rational()) return is_prime(a.generator.re);
            return is_gaussian_prime(a.generator);
    }
    return false;
}

Integer component_norm(const ComponentIdeal& a, const FieldDescriptor& K) {
    switch (a.kind) {
        case ComponentIdeal::Kind::Zero: throw InvalidArgument("the zero ideal has no norm");
        case ComponentIdeal::Kind::Full: return 1;
        case ComponentIdeal::Kind::Principal: return K.is_rational() ? Integer(abs(a.generator.re)) : a.generator.norm();
    }
    return 0;
}

std::string component_string(const ComponentIdeal& a) {
    switch (a.kind) {
        case ComponentIdeal::Kind::Zero: return "0";
        case ComponentIdeal::Kind::Full: return "1";
        case ComponentIdeal::Kind::Principal: return to_string(a.generator);
    }
    return "?";
}

void require_N(long N) {
    if (N < 1) throw InvalidArgument("table length must be at least 1");
}

// r(n) for n <= N, from r(n) = 4 sum_{d | n} chi_4(d).
std::vector<Integer> jacobi_table(long N) {
    std::vector<long> acc(static_cast<std::size_t>(N) + 1, 0);
    for (long d = 1; d <= N; d += 2) {
        const long chi = d % 4 == 1 ? 1 : -1;
        for (long m = d; m <= N; m += d) acc[static_cast<std::size_t>(m)] += chi;
    }
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(N));
    for (long n = 1; n <= N; ++n) out.emplace_back(4 * acc[static_cast<std::size_t>(n)]);
    return out;
}

}  // namespace

ComponentIdeal ComponentIdeal::principal(const GaussianInteger& g, const FieldDescriptor& K) {
    require_principal_field(K);
    if (K.is_rational() && g.im != 0) throw InvalidArgument("generator " + to_string(g) + " is not in Z");
    if (g.is_zero()) return zero();
    if (g.is_unit()) return full();
    if (K.is_rational()) return {Kind::Principal, GaussianInteger(Integer(abs(g.re)))};
    return {Kind::Principal, gaussian_canonical(g).second};
}

BicomplexIdeal BicomplexIdeal::principal(const BicomplexElement& w, const ExtensionDescriptor& L) {
    const BicomplexElement v = to_ring_form(w, L);
    return {ComponentIdeal::principal(slot_value(v.c1), L.K1), ComponentIdeal::principal(slot_value(v.c2), L.K2), L};
}

BicomplexIdeal BicomplexIdeal::degenerate(int slot, const ExtensionDescriptor& L) {
    require_principal_field(L.K1);
    require_principal_field(L.K2);
    if (slot == 1) return {ComponentIdeal::full(), ComponentIdeal::zero(), L};
    if (slot == 2) return {ComponentIdeal::zero(), ComponentIdeal::full(), L};
    throw InvalidArgument("slot must be 1 or 2");
}

bool BicomplexIdeal::is_degenerate() const {
    using K = ComponentIdeal::Kind;
    return (a1.kind == K::Full && a2.kind == K::Zero) || (a1.kind == K::Zero && a2.kind == K::Full);
}

bool BicomplexIdeal::contains(const BicomplexElement& w) const {
    const BicomplexElement v = to_ring_form(w, L);
    return component_contains(a1, slot_value(v.c1)) && component_contains(a2, slot_value(v.c2));
}

std::string to_string(const BicomplexIdeal& a) {
    return "(" + component_string(a.a1) + ")e1 + (" + component_string(a.a2) + ")e2";
}

Integer ideal_norm(const BicomplexIdeal& a) {
    if (a.is_degenerate()) throw InvalidArgument("degenerate ideal " + to_string(a) + " has no norm");
    if (a.a1.kind == ComponentIdeal::Kind::Zero || a.a2.kind == ComponentIdeal::Kind::Zero)
        throw InvalidArgument("ideal " + to_string(a) + " has a zero component");
    return component_norm(a.a1, a.L.K1) * component_norm(a.a2, a.L.K2);
}

bool is_prime_ideal(const BicomplexIdeal& a) {
    using K = ComponentIdeal::Kind;
    if (a.a1.kind == K::Full && a.a2.kind != K::Full) return component_prime(a.a2, a.L.K2);
    if (a.a2.kind == K::Full && a.a1.kind != K::Full) return component_prime(a.a1, a.L.K1);
    return false;
}

Integer jacobi_r(const Integer& n) {
    if (n < 1) throw InvalidArgument("jacobi_r needs n >= 1");
    // multiplicative: r(n)/4 = prod over p = 1 (4) of (e+1), zero if some p = 3 (4) has odd e
    Integer count = 1;
    for (const auto& [p, e] : factor_integer(n)) {
        const Integer m = mod_floor(p, 4);
        if (m == 1) count *= e + 1;
        else if (m == 3 && e % 2 == 1) return 0;
    }
    return 4 * count;
}

CoefficientTable coefficient_table(const FieldDescriptor& K, long N) {
    require_N(N);
    CoefficientTable t{N, {}};
    if (K.is_rational()) {
        t.values.assign(static_cast<std::size_t>(N), Integer(1));
        return t;
    }
    if (K.D() != -1) throw Unsupported("no ideal-count table for " + K.name());
    for (auto& r : jacobi_table(N)) t.values.emplace_back(r / 4);
    return t;
}

CoefficientTable coefficient_table(const ExtensionDescriptor& L, long N) {
    require_N(N);
    if (L == ExtensionDescriptor::Qh()) {
        CoefficientTable t{N, std::vector<Integer>(static_cast<std::size_t>(N), Integer(0))};
        for (long d = 1; d <= N; ++d)
            for (long m = d; m <= N; m += d) ++t.values[static_cast<std::size_t>(m - 1)];
        return t;
    }
    if (L == ExtensionDescriptor::QB()) {
        const CoefficientTable r{N, jacobi_table(N)};
        CoefficientTable t = dirichlet_convolve(r, r);
        for (long n = 1; n <= N; ++n) {
            Integer& v = t.values[static_cast<std::size_t>(n - 1)];
            if (!mpz_divisible_ui_p(v.get_mpz_t(), 16))
                throw Error("(r*r)(" + std::to_string(n) + ") = " + v.get_str() + " is not divisible by 16");
            v /= 16;
        }
        return t;
    }
    return dirichlet_convolve(coefficient_table(L.K1, N), coefficient_table(L.K2, N));
}

CoefficientTable dirichlet_convolve(const CoefficientTable& f, const CoefficientTable& g) {
    if (f.N != g.N || f.values.size() != g.values.size())
        throw InvalidArgument("dirichlet_convolve: table lengths differ");
    const long N = f.N;
    CoefficientTable out{N, std::vector<Integer>(static_cast<std::size_t>(N), Integer(0))};
    for (long p = 1; p <= N; ++p) {
        const Integer& fp = f(p);
        if (fp == 0) continue;
        for (long q = 1; p * q <= N; ++q) out.values[static_cast<std::size_t>(p * q - 1)] += fp * g(q);
    }
    return out;
}

long double zeta_partial(const CoefficientTable& a, long double s) {
    if (!(s > 1)) throw InvalidArgument("zeta_partial needs s > 1");
    // summed from the tail so the small terms are not absorbed
    long double sum = 0;
    for (long n = a.N; n >= 1; --n)
        sum += static_cast<long double>(a(n).get_d()) / std::pow(static_cast<long double>(n), s);
    return sum;
}

Integer brute_force_ideal_count(const FieldDescriptor& K, long n) {
    if (n < 1) throw InvalidArgument("brute_force_ideal_count needs n >= 1");
    require_principal_field(K);
    long count = 0;
    if (K.is_rational()) {
        // elements of norm n are +-n; keep the positive associate
        for (long g = -n; g <= n; ++g)
            if (std::labs(g) == n && g > 0) ++count;
        return count;
    }
    for (long a = 1; a * a <= n; ++a)
        for (long b = 0; a * a + b * b <= n; ++b)
            if (a * a + b * b == n) ++count;
    return count;
}

}  // namespace bicx
