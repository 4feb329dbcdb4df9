#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicx/bicomplex.hpp"
#include "bicx/errors.hpp"
#include "support.hpp"

using namespace bicx;
using testing::rand_element;

namespace {

GaussianRational G(const Rational& re, const Rational& im = 0) { return {re, im}; }
BicomplexElement E(const GaussianRational& a, const GaussianRational& b) { return {a, b}; }

// Product computed directly on x + y i + z j + t k with i^2 = -1, j^2 = 1, k = ij.
Cartesian cartesian_product(const Cartesian& a, const Cartesian& b) {
    return {a.x * b.x - a.y * b.y + a.z * b.z - a.t * b.t, a.x * b.y + a.y * b.x + a.z * b.t + a.t * b.z,
            a.x * b.z + a.z * b.x - a.y * b.t - a.t * b.y, a.x * b.t + a.t * b.x + a.y * b.z + a.z * b.y};
}

// Sign patterns of the three conjugations on the Cartesian view.
Cartesian cartesian_conjugate(const Cartesian& c, Axis axis) {
    switch (axis) {
        case Axis::I: return {c.x, c.y, -c.z, -c.t};
        case Axis::J: return {c.x, -c.y, c.z, -c.t};
        case Axis::K: return {c.x, -c.y, -c.z, c.t};
    }
    return c;
}

}  // namespace

TEST_CASE("idempotent decomposition examples") {
    CHECK(from_cartesian(1, 0, 0, 0) == E(G(1), G(1)));
    CHECK(from_cartesian(0, 0, 1, 0) == E(G(1), G(-1)));
    CHECK(from_cartesian(1, 1, 1, -1) == E(G(2), G(0, 2)));
    CHECK(to_cartesian(E(G(1), G(1))) == Cartesian{1, 0, 0, 0});
    CHECK(to_cartesian(E(G(2), G(0, 2))) == Cartesian{1, 1, 1, -1});
    CHECK(to_cartesian(E(G(0, 1), G(0, -1))) == Cartesian{0, 0, 0, 1});
    // the element written 1+i+j+k is a zero divisor
    CHECK(in_null_cone(from_cartesian(1, 1, 1, 1)));
}

TEST_CASE("ring operations") {
    CHECK((units::e1() * units::e2()).is_zero());
    CHECK(units::e1() + units::e2() == units::one());
    const BicomplexElement w = E(G(2), G(0, 2));
    CHECK(w * w == E(G(4), G(-4)));
    CHECK(units::j() * units::j() == units::one());
    CHECK(units::i() * units::j() == units::k());
    CHECK(units::k() * units::k() == -units::one());
    CHECK(pow(w, 3) == w * w * w);
}

TEST_CASE("idempotent product agrees with the Cartesian multiplication table") {
    for (int n = 0; n < 500; ++n) {
        const BicomplexElement a = rand_element(), b = rand_element();
        CHECK(to_cartesian(a * b) == cartesian_product(to_cartesian(a), to_cartesian(b)));
        CHECK(from_cartesian(to_cartesian(a)) == a);
    }
}

TEST_CASE("inversion and the null cone") {
    CHECK(invert(E(G(2), G(0, 2))) == E(G(Rational(1, 2)), G(0, Rational(-1, 2))));
    CHECK_THROWS_AS(invert(E(G(1), G(0))), NullConeError);
    CHECK(invert(units::j()) == units::j());
    for (int n = 0; n < 500; ++n) {
        BicomplexElement w = rand_element(2, 2);
        if (n % 5 == 0) w = w * units::e1();
        const bool zero_norm = norm_rational(w) == 0;
        CHECK(zero_norm == in_null_cone(w));
        if (zero_norm) {
            CHECK_THROWS_AS(invert(w), NullConeError);
        } else {
            CHECK(w * invert(w) == units::one());
        }
    }
}

TEST_CASE("conjugations") {
    const BicomplexElement w = E(G(2), G(0, 2));
    CHECK(conjugate(w, Axis::I) == E(G(0, 2), G(2)));
    CHECK(conjugate(from_cartesian(1, 1, 1, -1), Axis::J) == from_cartesian(1, -1, 1, 1));
    for (int n = 0; n < 500; ++n) {
        const BicomplexElement a = rand_element(), b = rand_element();
        for (Axis u : {Axis::I, Axis::J, Axis::K}) {
            CHECK(conjugate(conjugate(a, u), u) == a);
            CHECK(conjugate(a * b, u) == conjugate(a, u) * conjugate(b, u));
            CHECK(conjugate(a + b, u) == conjugate(a, u) + conjugate(b, u));
            CHECK(to_cartesian(conjugate(a, u)) == cartesian_conjugate(to_cartesian(a), u));
        }
        // composing two distinct conjugations gives the third
        CHECK(conjugate(conjugate(a, Axis::I), Axis::J) == conjugate(a, Axis::K));
        CHECK(conjugate(conjugate(a, Axis::J), Axis::K) == conjugate(a, Axis::I));
        CHECK(conjugate(conjugate(a, Axis::K), Axis::I) == conjugate(a, Axis::J));
    }
}

TEST_CASE("norm") {
    CHECK(norm_rational(E(G(2), G(0, 2))) == 16);
    CHECK(norm_rational(units::e1()) == 0);
    CHECK(norm_rational(units::j()) == 1);
    for (int n = 0; n < 500; ++n) {
        const BicomplexElement a = rand_element(), b = rand_element();
        CHECK(norm_rational(a * b) == norm_rational(a) * norm_rational(b));
        // the product of all four conjugates is the norm embedded as a scalar
        const BicomplexElement all = a * conjugate(a, Axis::I) * conjugate(a, Axis::J) * conjugate(a, Axis::K);
        CHECK(all == a.scalar_like(norm_rational(a)));
    }
    const BicomplexElement q(QuadRational(2, 1, 1), QuadRational(2, 3, 0));
    CHECK(norm(q) == ComponentScalar(QuadRational(2, 9 * 3, 9 * 2)));
}

TEST_CASE("coordinate recovery") {
    CHECK(coordinate_recovery_check(units::one()));
    CHECK(coordinate_recovery_check(from_cartesian(1, 1, 1, -1)));
    for (int n = 0; n < 500; ++n) CHECK(coordinate_recovery_check(rand_element()));
}

TEST_CASE("subalgebras") {
    CHECK(in_subalgebra(units::i(), Axis::I));
    CHECK(in_subalgebra(units::j(), Axis::J));
    CHECK(in_subalgebra(units::k(), Axis::K));
    CHECK_FALSE(in_subalgebra(units::j(), Axis::I));
    CHECK_FALSE(in_subalgebra(units::i(), Axis::J));
    for (int n = 0; n < 200; ++n) {
        const BicomplexElement a = rand_element();
        for (Axis u : {Axis::I, Axis::J, Axis::K}) CHECK(in_subalgebra(a, u) == (conjugate(a, u) == a));
    }
}

TEST_CASE("text forms") {
    CHECK(to_cartesian_string(from_cartesian(1, 1, 1, -1)) == "1+i+j-k");
    CHECK(to_cartesian_string(from_cartesian(Rational(3, 2), 0, Rational(-5, 7), 0)) == "3/2-5/7*j");
    CHECK(to_cartesian_string(BicomplexElement()) == "0");
    CHECK(to_idempotent_string(from_cartesian(1, 1, 1, -1)) == "[2, 2*i]");
    CHECK(parse_axis("k") == Axis::K);
    CHECK_THROWS_AS(parse_axis("x"), InvalidArgument);
    const BicomplexElement q(QuadRational(2, 0, 1), Rational(1));
    CHECK_FALSE(has_cartesian_view(q));
    CHECK_THROWS_AS(to_cartesian(q), InvalidArgument);
}
