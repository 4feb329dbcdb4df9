#include "bicx/rings.hpp"

#include <algorithm>
#include <tuple>

#include "bicx/errors.hpp"

namespace bicx {

FieldDescriptor FieldDescriptor::quadratic(const Integer& D) {
    if (D == 0 || D == 1 || !is_squarefree(D))
        throw InvalidArgument("quadratic field needs squarefree D outside {0, 1}, got " + D.get_str());
    FieldDescriptor f;
    f.D_ = D;
    return f;
}

const Integer& FieldDescriptor::D() const {
    if (!D_) throw InvalidArgument("Q has no quadratic parameter");
    return *D_;
}

Integer FieldDescriptor::discriminant() const {
    if (!D_) return 1;
    return mod_floor(*D_, 4) == 1 ? *D_ : Integer(4 * *D_);
}

std::string FieldDescriptor::name() const {
    if (!D_) return "Q";
    if (*D_ == -1) return "Q(i)";
    return "Q(sqrt:" + D_->get_str() + ")";
}

FieldDescriptor FieldDescriptor::parse(const std::string& text) {
    if (text == "Q") return rational();
    if (text == "Q(i)" || text == "Qi") return gaussian();
    const std::string prefix = "Q(sqrt:";
    if (text.size() > prefix.size() + 1 && text.compare(0, prefix.size(), prefix) == 0 && text.back() == ')') {
        const std::string num = text.substr(prefix.size(), text.size() - prefix.size() - 1);
        Rational d;
        try {
            d = parse_rational(num);
        } catch (const ParseError&) {
            throw InvalidArgument("bad field descriptor '" + text + "'");
        }
        if (!is_integer(d)) throw InvalidArgument("bad field descriptor '" + text + "'");
        return quadratic(d.get_num());
    }
    throw InvalidArgument("unknown field '" + text + "' (expected Q, Q(i) or Q(sqrt:D))");
}

std::string ExtensionDescriptor::name() const {
    if (*this == Qh()) return "Qh";
    if (*this == QB()) return "QB";
    return "custom:" + K1.name() + "," + K2.name();
}

ExtensionDescriptor ExtensionDescriptor::parse(const std::string& text) {
    if (text == "Qh") return Qh();
    if (text == "QB") return QB();
    const std::string prefix = "custom:";
    if (text.compare(0, prefix.size(), prefix) == 0) {
        const std::string rest = text.substr(prefix.size());
        // split on the comma outside parentheses
        int depth = 0;
        for (std::size_t k = 0; k < rest.size(); ++k) {
            if (rest[k] == '(') ++depth;
            if (rest[k] == ')') --depth;
            if (rest[k] == ',' && depth == 0)
                return {FieldDescriptor::parse(rest.substr(0, k)), FieldDescriptor::parse(rest.substr(k + 1))};
        }
    }
    throw InvalidArgument("unknown extension '" + text + "' (expected Qh, QB or custom:K1,K2)");
}

namespace {

// a + b sqrt(D); D absent when b = 0 is forced by the scalar kind.
struct QuadView {
    Rational a, b;
    std::optional<Integer> D;
};

QuadView view(const ComponentScalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) return {*r, 0, std::nullopt};
    if (const auto* g = std::get_if<GaussianRational>(&s)) return {g->re, g->im, Integer(-1)};
    const auto& q = std::get<QuadRational>(s);
    return {q.a(), q.b(), q.D()};
}

ComponentScalar field_scalar(const FieldDescriptor& K, const Rational& a, const Rational& b = 0) {
    if (K.is_rational()) {
        if (b != 0) throw InvalidArgument("irrational value in Q");
        return a;
    }
    if (K.D() == -1) return GaussianRational(a, b);
    return QuadRational(K.D(), a, b);
}

ComponentScalar slot_in_field(const ComponentScalar& s, const FieldDescriptor& K) {
    QuadView v = view(s);
    if (v.b == 0) return field_scalar(K, v.a);
    if (K.is_rational() || K.D() != *v.D)
        throw InvalidArgument("component " + to_string(s) + " does not lie in " + K.name());
    return field_scalar(K, v.a, v.b);
}

bool slot_integral(const ComponentScalar& s, const FieldDescriptor& K) {
    QuadView v = view(s);
    if (K.is_rational()) return is_integer(v.a);
    Rational tr = 2 * v.a, nm = v.a * v.a - K.D() * v.b * v.b;
    return is_integer(tr) && is_integer(nm);
}

bool d_is_one_mod_four(const FieldDescriptor& K) { return !K.is_rational() && mod_floor(K.D(), 4) == 1; }

std::vector<ComponentScalar> slot_basis(const FieldDescriptor& K) {
    if (K.is_rational()) return {Rational(1)};
    if (d_is_one_mod_four(K)) return {field_scalar(K, 1), field_scalar(K, Rational(1, 2), Rational(1, 2))};
    return {field_scalar(K, 1), field_scalar(K, 0, 1)};
}

std::vector<Rational> slot_coordinates(const ComponentScalar& s, const FieldDescriptor& K) {
    QuadView v = view(s);
    if (K.is_rational()) return {v.a};
    if (d_is_one_mod_four(K)) return {v.a - v.b, 2 * v.b};
    return {v.a, v.b};
}

Rational slot_field_norm(const ComponentScalar& s, const FieldDescriptor& K) {
    QuadView v = view(s);
    if (K.is_rational()) return v.a;
    return v.a * v.a - K.D() * v.b * v.b;
}

Integer rational_determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            Rational f = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    if (!is_integer(det)) throw Error("trace-form determinant is not an integer");
    return det.get_num();
}

std::vector<ComponentScalar> slot_units(const FieldDescriptor& K) {
    if (K.is_rational()) return {Rational(1), Rational(-1)};
    if (K.D() == -1)
        return {GaussianRational(1), GaussianRational(0, 1), GaussianRational(-1), GaussianRational(0, -1)};
    if (K.D() == -3) {
        std::vector<ComponentScalar> out;
        const QuadRational zeta(-3, Rational(1, 2), Rational(1, 2));  // primitive sixth root of unity
        QuadRational u(-3, 1);
        for (int k = 0; k < 6; ++k) {
            out.emplace_back(u);
            u = u * zeta;
        }
        return out;
    }
    if (K.D() < 0) return {field_scalar(K, 1), field_scalar(K, -1)};
    throw InvalidArgument(K.name() + " has infinitely many units");
}

Integer slot_unit_order(const FieldDescriptor& K) {
    if (K.is_rational()) return 2;
    if (K.D() == -1) return 4;
    if (K.D() == -3) return 6;
    return 2;
}

bool principal_slot(const FieldDescriptor& K) { return K.is_rational() || K.D() == -1; }

void require_principal(const ExtensionDescriptor& L) {
    if (!principal_slot(L.K1) || !principal_slot(L.K2))
        throw Unsupported("factorization is implemented for components Z and Z[i] only, not " + L.name());
}

GaussianInteger slot_to_gaussian_integer(const ComponentScalar& s) {
    QuadView v = view(s);
    if (!is_integer(v.a) || !is_integer(v.b)) throw InvalidArgument("component " + to_string(s) + " is not integral");
    return {v.a.get_num(), v.b.get_num()};
}

ComponentScalar gaussian_integer_to_slot(const GaussianInteger& g, const FieldDescriptor& K) {
    return field_scalar(K, Rational(g.re), Rational(g.im));
}

std::pair<GaussianInteger, GaussianInteger> slot_canonical(const GaussianInteger& g, const FieldDescriptor& K) {
    if (K.is_rational()) {
        if (g.re < 0) return {GaussianInteger(-1), GaussianInteger(Integer(-g.re))};
        return {GaussianInteger(1), g};
    }
    return gaussian_canonical(g);
}

bool slot_is_prime(const GaussianInteger& g, const FieldDescriptor& K) {
    if (K.is_rational()) return g.im == 0 && is_prime(Integer(abs(g.re)));
    return is_gaussian_prime(g);
}

bool slot_is_unit(const GaussianInteger& g) { return g.norm() == 1; }

GaussianFactorization slot_factor(const GaussianInteger& g, const FieldDescriptor& K) {
    if (!K.is_rational()) return factor_gaussian(g);
    GaussianFactorization f;
    f.unit = GaussianInteger(sgn(g.re));
    for (const auto& [p, e] : factor_integer(g.re)) f.factors.emplace_back(GaussianInteger(p), e);
    return f;
}

}  // namespace

BicomplexElement to_ring_form(const BicomplexElement& w, const ExtensionDescriptor& L) {
    return {slot_in_field(w.c1, L.K1), slot_in_field(w.c2, L.K2)};
}

bool is_integral(const BicomplexElement& w, const ExtensionDescriptor& L) {
    const BicomplexElement v = to_ring_form(w, L);
    return slot_integral(v.c1, L.K1) && slot_integral(v.c2, L.K2);
}

std::vector<BicomplexElement> integral_basis(const ExtensionDescriptor& L) {
    std::vector<BicomplexElement> out;
    for (const auto& b : slot_basis(L.K1)) out.emplace_back(b, field_scalar(L.K2, 0));
    for (const auto& b : slot_basis(L.K2)) out.emplace_back(field_scalar(L.K1, 0), b);
    return out;
}

std::vector<Rational> basis_coordinates(const BicomplexElement& w, const ExtensionDescriptor& L) {
    const BicomplexElement v = to_ring_form(w, L);
    std::vector<Rational> out = slot_coordinates(v.c1, L.K1);
    for (auto& c : slot_coordinates(v.c2, L.K2)) out.push_back(c);
    return out;
}

Rational trace(const BicomplexElement& w, const ExtensionDescriptor& L) {
    const BicomplexElement v = to_ring_form(w, L);
    auto slot_trace = [](const ComponentScalar& s, const FieldDescriptor& K) -> Rational {
        QuadView q = view(s);
        return K.is_rational() ? q.a : Rational(2 * q.a);
    };
    return slot_trace(v.c1, L.K1) + slot_trace(v.c2, L.K2);
}

Integer discriminant(const ExtensionDescriptor& L) { return L.K1.discriminant() * L.K2.discriminant(); }

Integer discriminant_by_trace_form(const ExtensionDescriptor& L) {
    const auto basis = integral_basis(L);
    const std::size_t n = basis.size();
    // trace of multiplication by g, read off the diagonal of its matrix
    auto regular_trace = [&](const BicomplexElement& g) {
        Rational tr = 0;
        for (std::size_t k = 0; k < n; ++k) tr += basis_coordinates(g * basis[k], L)[k];
        return tr;
    };
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m[a][b] = regular_trace(basis[a] * basis[b]);
    return rational_determinant(std::move(m));
}

std::string to_string(UnitClass c) {
    switch (c) {
        case UnitClass::C1: return "C1";
        case UnitClass::C2: return "C2";
        case UnitClass::C3: return "C3";
        case UnitClass::Infinite: return "infinite";
    }
    return "?";
}

UnitGroupInfo unit_group(const ExtensionDescriptor& L) {
    if (L.K1.is_real_quadratic() || L.K2.is_real_quadratic())
        return {false, std::nullopt, UnitClass::Infinite, "infinite (real quadratic component)"};
    const int quadratic_slots = (L.K1.is_rational() ? 0 : 1) + (L.K2.is_rational() ? 0 : 1);
    const UnitClass cls = quadratic_slots == 0 ? UnitClass::C1 : quadratic_slots == 1 ? UnitClass::C2 : UnitClass::C3;
    const Integer o1 = slot_unit_order(L.K1), o2 = slot_unit_order(L.K2);
    std::string structure = "Z/" + o1.get_str() + " x Z/" + o2.get_str();
    if (cls == UnitClass::C1) structure += " (Klein group {+-1, +-j})";
    return {true, Integer(o1 * o2), cls, structure};
}

std::vector<BicomplexElement> enumerate_units(const ExtensionDescriptor& L) {
    std::vector<BicomplexElement> out;
    for (const auto& u1 : slot_units(L.K1))
        for (const auto& u2 : slot_units(L.K2)) out.emplace_back(u1, u2);
    return out;
}

BicomplexElement infinite_order_witness(const ExtensionDescriptor& L) {
    const int slot = L.K1.is_real_quadratic() ? 1 : L.K2.is_real_quadratic() ? 2 : 0;
    if (slot == 0) throw InvalidArgument(L.name() + " has a finite unit group");
    const FieldDescriptor& K = L.field(slot);
    const Integer& D = K.D();
    const bool half = d_is_one_mod_four(K);
    const Integer offset = half ? 4 : 1;
    ComponentScalar unit;
    bool found = false;
    for (Integer y = 1; y <= 10000000 && !found; ++y) {
        for (int sign : {-1, 1}) {
            Integer x2 = D * y * y + sign * offset;
            if (x2 > 0 && is_perfect_square(x2)) {
                Integer x = isqrt(x2);
                unit = half ? field_scalar(K, Rational(x, 2), Rational(y, 2)) : field_scalar(K, Rational(x), Rational(y));
                found = true;
                break;
            }
        }
    }
    if (!found) throw Unsupported("fundamental unit search exhausted for " + K.name());
    const ComponentScalar one = field_scalar(L.field(slot == 1 ? 2 : 1), 1);
    return slot == 1 ? BicomplexElement(unit, one) : BicomplexElement(one, unit);
}

bool is_unit(const BicomplexElement& w, const ExtensionDescriptor& L) {
    if (!is_integral(w, L)) return false;
    const BicomplexElement v = to_ring_form(w, L);
    return abs(slot_field_norm(v.c1, L.K1)) == 1 && abs(slot_field_norm(v.c2, L.K2)) == 1;
}

std::optional<GaussianInteger> divide_exact(const GaussianInteger& a, const GaussianInteger& b) {
    if (b.is_zero()) throw InvalidArgument("Gaussian division by zero");
    const Integer n = b.norm();
    const GaussianInteger num = a * b.conj();
    if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
    return GaussianInteger(Integer(num.re / n), Integer(num.im / n));
}

GaussianInteger gaussian_gcd(GaussianInteger a, GaussianInteger b) {
    while (!b.is_zero()) {
        const Integer n = b.norm();
        const GaussianInteger num = a * b.conj();
        const GaussianInteger q(round_div(num.re, n), round_div(num.im, n));
        GaussianInteger r = a - q * b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string to_string(const GaussianInteger& g) { return to_string(GaussianRational(Rational(g.re), Rational(g.im))); }

std::pair<GaussianInteger, GaussianInteger> gaussian_canonical(const GaussianInteger& g) {
    if (g.is_zero()) throw NullConeError("zero has no canonical associate");
    GaussianInteger unit(1), cand = g;
    const GaussianInteger i(0, 1), minus_i(0, -1);
    for (int k = 0; k < 4; ++k) {
        if (cand.re > 0 && cand.im >= 0) return {unit, cand};
        cand = cand * minus_i;
        unit = unit * i;
    }
    throw Error("gaussian_canonical: no first-quadrant associate");
}

bool is_gaussian_prime(const GaussianInteger& g) {
    if (g.is_zero()) return false;
    if (is_prime(g.norm())) return true;
    if (g.re != 0 && g.im != 0) return false;
    Integer m = abs(g.re) + abs(g.im);
    return is_prime(m) && mod_floor(m, 4) == 3;
}

Integer sqrt_minus_one_mod(const Integer& p) {
    if (mod_floor(p, 4) != 1 || !is_prime(p)) throw InvalidArgument("sqrt_minus_one_mod: need a prime p = 1 mod 4");
    for (Integer c = 2;; ++c) {
        if (mpz_legendre(c.get_mpz_t(), p.get_mpz_t()) != -1) continue;
        Integer x, e = (p - 1) / 4;
        mpz_powm(x.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return x;
    }
}

GaussianFactorization factor_gaussian(const GaussianInteger& g) {
    if (g.is_zero()) throw InvalidArgument("factor_gaussian: zero input");
    GaussianFactorization out;
    GaussianInteger rest = g;
    auto strip = [&](const GaussianInteger& prime) {
        unsigned e = 0;
        while (auto q = divide_exact(rest, prime)) {
            rest = *q;
            ++e;
        }
        if (e) out.factors.emplace_back(prime, e);
    };
    for (const auto& [p, e] : factor_integer(g.norm())) {
        if (p == 2) {
            strip(GaussianInteger(1, 1));
        } else if (mod_floor(p, 4) == 3) {
            strip(GaussianInteger(p));
        } else {
            const Integer x = sqrt_minus_one_mod(p);
            const GaussianInteger pi = gaussian_canonical(gaussian_gcd(GaussianInteger(p), GaussianInteger(x, 1))).second;
            strip(pi);
            strip(gaussian_canonical(pi.conj()).second);
        }
    }
    if (!rest.is_unit()) throw Error("factor_gaussian: cofactor " + to_string(rest) + " is not a unit");
    out.unit = rest;
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        return std::make_tuple(a.first.norm(), a.first.re, a.first.im) <
               std::make_tuple(b.first.norm(), b.first.re, b.first.im);
    });
    return out;
}

Associate canonical_associate(const BicomplexElement& w, const ExtensionDescriptor& L) {
    require_principal(L);
    if (!is_integral(w, L)) throw InvalidArgument("canonical_associate: element is not integral");
    const BicomplexElement v = to_ring_form(w, L);
    if (in_null_cone(v)) throw NullConeError("canonical_associate: element lies in the null cone");
    const auto [u1, n1] = slot_canonical(slot_to_gaussian_integer(v.c1), L.K1);
    const auto [u2, n2] = slot_canonical(slot_to_gaussian_integer(v.c2), L.K2);
    return {{gaussian_integer_to_slot(u1, L.K1), gaussian_integer_to_slot(u2, L.K2)},
            {gaussian_integer_to_slot(n1, L.K1), gaussian_integer_to_slot(n2, L.K2)}};
}

std::string to_string(PrimeForm f) {
    switch (f) {
        case PrimeForm::E1: return "e1";
        case PrimeForm::E2: return "e2";
        case PrimeForm::FirstSlot: return "p*e1+e2";
        case PrimeForm::SecondSlot: return "e1+p*e2";
    }
    return "?";
}

PrimeClassification is_prime_element(const BicomplexElement& w, const ExtensionDescriptor& L) {
    require_principal(L);
    if (!is_integral(w, L)) return {};
    const BicomplexElement v = to_ring_form(w, L);
    const GaussianInteger g1 = slot_to_gaussian_integer(v.c1), g2 = slot_to_gaussian_integer(v.c2);
    if (g2.is_zero() && slot_is_unit(g1)) return {true, PrimeForm::E1, false};
    if (g1.is_zero() && slot_is_unit(g2)) return {true, PrimeForm::E2, false};
    if (slot_is_unit(g2) && slot_is_prime(g1, L.K1)) return {true, PrimeForm::FirstSlot, true};
    if (slot_is_unit(g1) && slot_is_prime(g2, L.K2)) return {true, PrimeForm::SecondSlot, true};
    return {};
}

BicomplexElement BicomplexFactorization::recompose() const {
    BicomplexElement acc = unit;
    for (const auto& [p, e] : factors) acc = acc * pow(p, e);
    return acc;
}

BicomplexFactorization factor(const BicomplexElement& w, const ExtensionDescriptor& L) {
    require_principal(L);
    if (!is_integral(w, L)) throw InvalidArgument("factor: element is not integral in " + L.name());
    const BicomplexElement v = to_ring_form(w, L);
    if (in_null_cone(v)) throw NullConeError("factor: element " + to_idempotent_string(v) + " has norm 0");
    if (is_unit(v, L)) throw InvalidArgument("factor: element " + to_idempotent_string(v) + " is a unit");
    const GaussianFactorization f1 = slot_factor(slot_to_gaussian_integer(v.c1), L.K1);
    const GaussianFactorization f2 = slot_factor(slot_to_gaussian_integer(v.c2), L.K2);
    BicomplexFactorization out;
    out.unit = {gaussian_integer_to_slot(f1.unit, L.K1), gaussian_integer_to_slot(f2.unit, L.K2)};
    const ComponentScalar one1 = field_scalar(L.K1, 1), one2 = field_scalar(L.K2, 1);
    // slot-1 primes are already sorted by (norm, re, im), as are slot-2 primes
    for (const auto& [p, e] : f1.factors) out.factors.emplace_back(BicomplexElement(gaussian_integer_to_slot(p, L.K1), one2), e);
    for (const auto& [p, e] : f2.factors) out.factors.emplace_back(BicomplexElement(one1, gaussian_integer_to_slot(p, L.K2)), e);
    return out;
}

PrimeProfile rational_prime_profile(const Integer& p, const ExtensionDescriptor& L) {
    if (!is_prime(p)) throw InvalidArgument("rational_prime_profile: " + p.get_str() + " is not prime");
    const BicomplexElement pe(field_scalar(L.K1, Rational(p)), field_scalar(L.K2, Rational(p)));
    unsigned count = 0;
    for (const auto& [q, e] : factor(pe, L).factors) count += e;
    return {count, count == 2};
}

}  // namespace bicx
