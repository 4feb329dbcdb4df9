#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bicx/errors.hpp"
#include "bicx/rings.hpp"
#include "support.hpp"

using namespace bicx;

namespace {

const ExtensionDescriptor Qh = ExtensionDescriptor::Qh();
const ExtensionDescriptor QB = ExtensionDescriptor::QB();

BicomplexElement H(long u, long v) { return {Rational(u), Rational(v)}; }
BicomplexElement B(const GaussianInteger& a, const GaussianInteger& b) {
    return {GaussianRational(Rational(a.re), Rational(a.im)), GaussianRational(Rational(b.re), Rational(b.im))};
}

std::vector<FieldDescriptor> small_fields() {
    std::vector<FieldDescriptor> out{FieldDescriptor::rational()};
    for (long D = -50; D <= 50; ++D)
        if (D != 0 && D != 1 && is_squarefree(Integer(D))) out.push_back(FieldDescriptor::quadratic(D));
    return out;
}

// Elements of O_K with |N| <= bound from a coordinate box in the integral basis.
std::vector<ComponentScalar> small_integers(const FieldDescriptor& K, long box) {
    const ExtensionDescriptor L{K, FieldDescriptor::rational()};
    const auto basis = integral_basis(L);
    std::vector<ComponentScalar> out;
    if (K.is_rational()) {
        for (long a = -box; a <= box; ++a) out.emplace_back(Rational(a));
        return out;
    }
    for (long a = -box; a <= box; ++a)
        for (long b = -box; b <= box; ++b) {
            const BicomplexElement w = basis[0].scalar_like(a) * basis[0] + basis[1].scalar_like(b) * basis[1];
            out.push_back(w.c1);
        }
    return out;
}

Rational component_norm(const ComponentScalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) return *r;
    if (const auto* g = std::get_if<GaussianRational>(&s)) return g->abs2();
    return std::get<QuadRational>(s).field_norm();
}

// Brute-force Gaussian primality: no divisor with norm strictly between 1 and N(g).
bool gaussian_prime_oracle(const GaussianInteger& g) {
    const Integer n = g.norm();
    if (n <= 1) return false;
    for (long a = -40; a <= 40; ++a)
        for (long b = -40; b <= 40; ++b) {
            const GaussianInteger d(a, b);
            const Integer dn = d.norm();
            if (dn > 1 && dn < n && divide_exact(g, d)) return false;
        }
    return true;
}

using FactorList = std::vector<std::pair<BicomplexElement, unsigned>>;

bool same_factors(FactorList a, FactorList b) {
    auto key = [](const std::pair<BicomplexElement, unsigned>& f) {
        return to_idempotent_string(f.first) + "^" + std::to_string(f.second);
    };
    auto cmp = [&](const auto& x, const auto& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), cmp);
    std::sort(b.begin(), b.end(), cmp);
    return a == b;
}

}  // namespace

TEST_CASE("field and extension descriptors") {
    CHECK(FieldDescriptor::parse("Q").is_rational());
    CHECK(FieldDescriptor::parse("Q(i)") == FieldDescriptor::gaussian());
    CHECK(FieldDescriptor::parse("Q(sqrt:-1)") == FieldDescriptor::gaussian());
    CHECK(FieldDescriptor::parse("Q(sqrt:2)").D() == 2);
    CHECK_THROWS_AS(FieldDescriptor::parse("Q(sqrt:4)"), InvalidArgument);
    CHECK_THROWS_AS(FieldDescriptor::parse("R"), InvalidArgument);
    CHECK(ExtensionDescriptor::parse("Qh") == Qh);
    CHECK(ExtensionDescriptor::parse("custom:Q(i),Q(i)") == QB);
    const auto custom = ExtensionDescriptor::parse("custom:Q(sqrt:2),Q(sqrt:-3)");
    CHECK(custom.name() == "custom:Q(sqrt:2),Q(sqrt:-3)");
    CHECK(custom.degree() == 4);
    CHECK(FieldDescriptor::quadratic(-3).discriminant() == -3);
    CHECK(FieldDescriptor::gaussian().discriminant() == -4);
}

TEST_CASE("integrality") {
    const ExtensionDescriptor L{FieldDescriptor::quadratic(-3), FieldDescriptor::rational()};
    CHECK(is_integral(H(3, 5), Qh));
    CHECK_FALSE(is_integral(BicomplexElement(Rational(1, 2), Rational(1)), Qh));
    CHECK(is_integral(BicomplexElement(QuadRational(-3, Rational(1, 2), Rational(1, 2)), Rational(1)), L));
    CHECK_FALSE(is_integral(BicomplexElement(QuadRational(-3, Rational(1, 2), 0), Rational(1)), L));
    CHECK_THROWS_AS(to_ring_form(units::i(), Qh), InvalidArgument);
    CHECK(is_integral(from_cartesian(1, 1, 1, -1), QB));
    // (1 + j)/2 = e1 has no integer Cartesian coordinates but is integral
    CHECK(is_integral(from_cartesian(Rational(1, 2), 0, Rational(1, 2), 0), Qh));
}

TEST_CASE("integral bases") {
    CHECK(integral_basis(Qh) == std::vector<BicomplexElement>{H(1, 0), H(0, 1)});
    CHECK(integral_basis(QB) == std::vector<BicomplexElement>{B(1, 0), B({0, 1}, 0), B(0, 1), B(0, {0, 1})});
    const ExtensionDescriptor L{FieldDescriptor::quadratic(-3), FieldDescriptor::rational()};
    const auto b = integral_basis(L);
    REQUIRE(b.size() == 3);
    CHECK(b[1].c1 == ComponentScalar(QuadRational(-3, Rational(1, 2), Rational(1, 2))));
    for (const auto& w : b) CHECK(is_integral(w, L));
    // coordinates reconstruct the element
    for (int n = 0; n < 100; ++n) {
        const BicomplexElement w = testing::rand_element(5, 3);
        const auto c = basis_coordinates(w, QB);
        const auto qb = integral_basis(QB);
        BicomplexElement sum = w.scalar_like(0);
        for (std::size_t k = 0; k < c.size(); ++k) sum = sum + qb[k] * qb[k].scalar_like(c[k]);
        CHECK(sum == to_ring_form(w, QB));
    }
}

TEST_CASE("discriminants") {
    CHECK(discriminant(Qh) == 1);
    CHECK(discriminant(QB) == 16);
    const ExtensionDescriptor L{FieldDescriptor::quadratic(-3), FieldDescriptor::rational()};
    CHECK(discriminant(L) == -3);
    CHECK(discriminant_by_trace_form(L) == -3);
    CHECK(discriminant_by_trace_form(Qh) == 1);
    CHECK(discriminant_by_trace_form(QB) == 16);
    const auto fields = small_fields();
    for (const auto& K1 : fields)
        for (const auto& K2 : fields) {
            const ExtensionDescriptor E{K1, K2};
            CHECK(discriminant(E) == discriminant_by_trace_form(E));
        }
}

TEST_CASE("traces") {
    CHECK(trace(H(3, 5), Qh) == 8);
    CHECK(trace(B({1, 2}, {3, 4}), QB) == 8);
}

TEST_CASE("unit groups") {
    const auto qh = unit_group(Qh);
    CHECK(qh.finite);
    CHECK(*qh.order == 4);
    CHECK(qh.unit_class == UnitClass::C1);
    auto hu = enumerate_units(Qh);
    CHECK(hu.size() == 4);
    for (const auto& u : {units::one(), -units::one(), units::j(), -units::j()})
        CHECK(std::count(hu.begin(), hu.end(), to_ring_form(u, Qh)) == 1);
    const auto qb = unit_group(QB);
    CHECK(*qb.order == 16);
    CHECK(qb.unit_class == UnitClass::C3);
    CHECK(qb.structure.rfind("Z/4 x Z/4", 0) == 0);
    CHECK(enumerate_units(QB).size() == 16);
    const ExtensionDescriptor C2{FieldDescriptor::quadratic(-3), FieldDescriptor::rational()};
    CHECK(unit_group(C2).unit_class == UnitClass::C2);
    CHECK(*unit_group(C2).order == 12);
    const ExtensionDescriptor real{FieldDescriptor::quadratic(2), FieldDescriptor::rational()};
    CHECK_FALSE(unit_group(real).finite);
    const BicomplexElement eps = infinite_order_witness(real);
    CHECK(eps.c1 == ComponentScalar(QuadRational(2, 1, 1)));
    CHECK(is_unit(eps, real));
    BicomplexElement power = eps;
    for (int k = 2; k <= 8; ++k) {
        const BicomplexElement next = power * eps;
        CHECK_FALSE(next == power);
        CHECK(is_unit(next, real));
        power = next;
    }
    CHECK_THROWS_AS(enumerate_units(real), InvalidArgument);
    CHECK_THROWS_AS(infinite_order_witness(QB), InvalidArgument);
}

TEST_CASE("unit search agrees with the unit groups") {
    for (long D : {-1L, -2L, -3L, -5L, -7L, -11L, -15L, 2L, 3L, 5L, 13L, 21L}) {
        const FieldDescriptor K = FieldDescriptor::quadratic(D);
        long found = 0;
        for (const auto& s : small_integers(K, 45)) {
            const Rational n = component_norm(s);
            if (abs(n) > 1000) continue;
            if (abs(n) == 1) ++found;
        }
        if (D < 0) {
            const ExtensionDescriptor L{K, FieldDescriptor::rational()};
            CHECK(found * 2 == static_cast<long>(enumerate_units(L).size()));
        } else {
            CHECK(found > 2);  // units beyond +-1 exist
            const ExtensionDescriptor L{FieldDescriptor::rational(), K};
            CHECK(is_unit(infinite_order_witness(L), L));
        }
    }
}

TEST_CASE("is_unit") {
    CHECK(is_unit(units::j(), Qh));
    CHECK(is_unit(B({0, 1}, -1), QB));
    CHECK_FALSE(is_unit(H(2, 1), Qh));
    CHECK_FALSE(is_unit(BicomplexElement(Rational(1, 2), Rational(2)), Qh));
}

TEST_CASE("Gaussian integers") {
    CHECK(gaussian_canonical({1, 1}).second == GaussianInteger(1, 1));
    const auto [u, n] = gaussian_canonical({-1, -1});
    CHECK(u == GaussianInteger(-1));
    CHECK(n == GaussianInteger(1, 1));
    const auto f5 = factor_gaussian(5);
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0].first == GaussianInteger(1, 2));
    CHECK(f5.factors[1].first == GaussianInteger(2, 1));
    const auto f2 = factor_gaussian(2);
    CHECK(f2.unit == GaussianInteger(0, -1));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0] == std::pair<GaussianInteger, unsigned>({1, 1}, 2));
    const auto f7 = factor_gaussian(7);
    CHECK(f7.unit == GaussianInteger(1));
    CHECK(f7.factors == std::vector<std::pair<GaussianInteger, unsigned>>{{GaussianInteger(7), 1}});
    for (long p = 5; p < 2000; p += 4)
        if (is_prime(Integer(p))) {
            const Integer x = sqrt_minus_one_mod(p);
            CHECK(mod_floor(x * x + 1, p) == 0);
        }
    CHECK_THROWS_AS(sqrt_minus_one_mod(7), InvalidArgument);
    for (long a = -22; a <= 22; ++a)
        for (long b = -22; b <= 22; ++b) {
            const GaussianInteger g(a, b);
            if (g.is_zero()) continue;
            CHECK(is_gaussian_prime(g) == gaussian_prime_oracle(g));
        }
}

TEST_CASE("Gaussian factorization round trip") {
    for (int n = 0; n < 500; ++n) {
        GaussianInteger g = testing::rand_gaussian_integer(1000);
        if (g.is_zero()) continue;
        const auto f = factor_gaussian(g);
        GaussianInteger acc = f.unit;
        CHECK(f.unit.is_unit());
        for (const auto& [p, e] : f.factors) {
            CHECK(is_gaussian_prime(p));
            CHECK(gaussian_canonical(p).second == p);
            for (unsigned k = 0; k < e; ++k) acc = acc * p;
        }
        CHECK(acc == g);
        const GaussianInteger h = testing::rand_gaussian_integer(100);
        const GaussianInteger d = gaussian_gcd(g, h);
        if (!d.is_zero()) {
            CHECK(divide_exact(g, d).has_value());
            CHECK(divide_exact(h, d).has_value());
        }
    }
}

TEST_CASE("canonical associates") {
    const auto a = canonical_associate(H(-3, 5), Qh);
    CHECK(a.normalized == H(3, 5));
    CHECK(a.unit == H(-1, 1));
    CHECK(a.unit * a.normalized == H(-3, 5));
    const auto b = canonical_associate(B({-1, -1}, {1, 1}), QB);
    CHECK(b.unit == B(-1, 1));
    CHECK(b.normalized == B({1, 1}, {1, 1}));
    CHECK_THROWS_AS(canonical_associate(H(0, 5), Qh), NullConeError);
    const ExtensionDescriptor real{FieldDescriptor::quadratic(2), FieldDescriptor::rational()};
    CHECK_THROWS_AS(canonical_associate(H(1, 1), real), Unsupported);
}

TEST_CASE("prime elements") {
    const auto p = is_prime_element(H(2, 1), Qh);
    CHECK(p.prime);
    CHECK(*p.form == PrimeForm::FirstSlot);
    CHECK(p.irreducible);
    const auto e = is_prime_element(units::e1(), Qh);
    CHECK(e.prime);
    CHECK(*e.form == PrimeForm::E1);
    CHECK_FALSE(e.irreducible);
    CHECK(units::e1() * units::e1() == units::e1());
    CHECK(is_prime_element(B({1, 1}, 1), QB).prime);
    CHECK_FALSE(is_prime_element(H(2, 3), Qh).prime);
    CHECK_FALSE(is_prime_element(H(4, 1), Qh).prime);
    CHECK(is_prime_element(H(-1, 7), Qh).prime);
}

TEST_CASE("factorization examples") {
    const auto f = factor(H(6, 35), Qh);
    CHECK(f.unit == H(1, 1));
    CHECK(same_factors(f.factors, {{H(2, 1), 1}, {H(3, 1), 1}, {H(1, 5), 1}, {H(1, 7), 1}}));
    CHECK(f.recompose() == H(6, 35));
    const auto five = factor(B(5, 5), QB);
    CHECK(five.factors.size() == 4);
    CHECK(five.recompose() == B(5, 5));
    const auto three = factor(B(3, 3), QB);
    CHECK(same_factors(three.factors, {{B(3, 1), 1}, {B(1, 3), 1}}));
    CHECK_THROWS_AS(factor(H(0, 3), Qh), NullConeError);
    CHECK_THROWS_AS(factor(units::j(), Qh), InvalidArgument);
    CHECK_THROWS_AS(factor(BicomplexElement(Rational(1, 2), Rational(3)), Qh), InvalidArgument);
    const ExtensionDescriptor other{FieldDescriptor::quadratic(-5), FieldDescriptor::rational()};
    CHECK_THROWS_AS(factor(BicomplexElement(QuadRational(-5, 2, 0), Rational(3)), other), Unsupported);
}

TEST_CASE("random factorizations recompose and are unit invariant") {
    for (const auto& L : {Qh, QB}) {
        const auto units_list = enumerate_units(L);
        for (int n = 0; n < 300; ++n) {
            BicomplexElement w;
            if (L == Qh) {
                long u = 0, v = 0;
                while (u == 0 || v == 0 || (std::labs(u) == 1 && std::labs(v) == 1))
                    u = testing::rand_int(-1000000, 1000000), v = testing::rand_int(-1000000, 1000000);
                w = H(u, v);
            } else {
                GaussianInteger a, b;
                while (a.is_zero() || b.is_zero() || (a.is_unit() && b.is_unit()))
                    a = testing::rand_gaussian_integer(700), b = testing::rand_gaussian_integer(700);
                w = B(a, b);
            }
            const auto f = factor(w, L);
            CHECK(f.recompose() == to_ring_form(w, L));
            CHECK(is_unit(f.unit, L));
            for (const auto& [p, e] : f.factors) {
                CHECK(e >= 1);
                CHECK(is_prime_element(p, L).prime);
                CHECK(canonical_associate(p, L).normalized == p);
            }
            const BicomplexElement u = units_list[static_cast<std::size_t>(testing::rand_int(0, static_cast<long>(units_list.size()) - 1))];
            CHECK(same_factors(factor(u * w, L).factors, f.factors));
        }
    }
}

TEST_CASE("rational prime profiles") {
    const auto seven = rational_prime_profile(7, Qh);
    CHECK(seven.semiprime);
    CHECK(seven.factor_count == 2);
    CHECK(rational_prime_profile(5, QB).factor_count == 4);
    CHECK_FALSE(rational_prime_profile(5, QB).semiprime);
    CHECK(rational_prime_profile(3, QB).semiprime);
    CHECK(rational_prime_profile(2, QB).factor_count == 4);
    CHECK_THROWS_AS(rational_prime_profile(9, QB), InvalidArgument);
    for (long p = 2; p < 1000; ++p) {
        if (!is_prime(Integer(p))) continue;
        const auto pr = rational_prime_profile(p, QB);
        CHECK(pr.semiprime == (p % 4 == 3));
        CHECK(pr.factor_count == (p % 4 == 3 ? 2u : 4u));
        CHECK(rational_prime_profile(p, Qh).factor_count == 2);
    }
}
