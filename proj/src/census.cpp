#include "bicx/census.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "bicx/errors.hpp"

namespace bicx {

Census census(const IntPolynomial& p) {
    if (p.degree() < 1) throw InvalidArgument("census: constant polynomial");
    if (!is_squarefree(p)) throw InvalidArgument("census: polynomial " + to_string(p) + " is not squarefree");
    Census c;
    c.n = static_cast<long>(p.degree());
    c.r = sturm_real_root_count(p);
    c.s = (c.n - c.r) / 2;
    c.two_s_i = c.two_s_k = 2 * c.s;
    c.two_s_j = c.r * (c.r - 1);
    c.four_d = 4 * c.s * (c.s + c.r - 1);
    return c;
}

Census census_cyclotomic(long n) {
    if (n < 2) throw InvalidArgument("census_cyclotomic: n must be >= 2");
    return census(cyclotomic(n));
}

const char* to_string(Locus l) {
    switch (l) {
        case Locus::R: return "R";
        case Locus::Si: return "S_i";
        case Locus::Sj: return "S_j";
        case Locus::Sk: return "S_k";
        case Locus::D: return "D";
    }
    return "?";
}

namespace {

void check_root_set(const std::vector<GaussianRational>& roots) {
    std::set<GaussianRational> seen;
    for (const auto& z : roots)
        if (!seen.insert(z).second) throw InvalidArgument("duplicate root " + to_string(z));
    for (const auto& z : roots)
        if (!seen.count(z.conj()))
            throw InvalidArgument("root set is not closed under conjugation: missing " + to_string(z.conj()));
}

Locus classify(const BicomplexElement& psi) {
    const bool fi = in_subalgebra(psi, Axis::I), fj = in_subalgebra(psi, Axis::J), fk = in_subalgebra(psi, Axis::K);
    if (fi && fj && fk) return Locus::R;
    if (fi) return Locus::Si;
    if (fj) return Locus::Sj;
    if (fk) return Locus::Sk;
    return Locus::D;
}

using GaussPolynomial = Polynomial<GaussianRational>;

RatPolynomial real_part_or_throw(const GaussPolynomial& p) {
    std::vector<Rational> out;
    for (const auto& c : p.coefficients()) {
        if (c.im != 0) throw Error("locus polynomial has non-real coefficients");
        out.push_back(c.re);
    }
    return RatPolynomial(std::move(out));
}

}  // namespace

std::vector<LocatedRoot> enumerate_bicomplex_roots(const std::vector<GaussianRational>& roots, const Integer& lead) {
    if (lead == 0) throw InvalidArgument("leading coefficient must be nonzero");
    check_root_set(roots);
    std::vector<LocatedRoot> out;
    out.reserve(roots.size() * roots.size());
    for (const auto& a : roots)
        for (const auto& b : roots) {
            BicomplexElement psi{a, b};
            Locus l = classify(psi);
            out.push_back({std::move(psi), l});
        }
    return out;
}

LocusFactors locus_factors(const std::vector<GaussianRational>& roots, const Integer& lead) {
    const auto located = enumerate_bicomplex_roots(roots, lead);
    // prod (X - (mu e1 + eta e2)) = (prod (X - mu)) e1 + (prod (X - eta)) e2
    auto factor = [&](Locus l) {
        GaussPolynomial p1 = GaussPolynomial::constant(1), p2 = GaussPolynomial::constant(1);
        for (const auto& root : located) {
            if (root.locus != l) continue;
            p1 = p1 * GaussPolynomial::linear_root(std::get<GaussianRational>(root.value.c1));
            p2 = p2 * GaussPolynomial::linear_root(std::get<GaussianRational>(root.value.c2));
        }
        if (!(p1 == p2)) throw Error(std::string("locus ") + to_string(l) + " product is not a scalar polynomial");
        return real_part_or_throw(p1);
    };
    return {factor(Locus::R), factor(Locus::Si), factor(Locus::Sj), factor(Locus::Sk), factor(Locus::D)};
}

LocusFactors locus_factors_closed_form(const std::vector<GaussianRational>& roots) {
    check_root_set(roots);
    RatPolynomial real_part = RatPolynomial::constant(1), pair_part = RatPolynomial::constant(1);
    unsigned r = 0, s = 0;
    for (const auto& z : roots) {
        if (z.im == 0) {
            real_part = real_part * RatPolynomial::linear_root(z.re);
            ++r;
        } else if (z.im > 0) {
            // (X - z)(X - conj z) = X^2 - 2 re X + |z|^2
            pair_part = pair_part * RatPolynomial{z.abs2(), -2 * z.re, Rational(1)};
            ++s;
        }
    }
    LocusFactors f;
    f.R = real_part;
    f.Si = f.Sk = pair_part;
    f.Sj = r ? pow(real_part, r - 1) : RatPolynomial::constant(1);
    f.D = pow(real_part, 2 * s);
    if (s) f.D = f.D * pow(pair_part, r + 2 * (s - 1));
    return f;
}

RatPolynomial polynomial_from_roots(const std::vector<GaussianRational>& roots, const Integer& lead) {
    GaussPolynomial p = GaussPolynomial::constant(GaussianRational(Rational(lead)));
    for (const auto& z : roots) p = p * GaussPolynomial::linear_root(z);
    return real_part_or_throw(p);
}

RatPolynomial bicomplex_root_product(const std::vector<GaussianRational>& roots, const Integer& lead) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), roots.size());
    return Rational(scale) * locus_factors(roots, lead).product();
}

std::vector<std::complex<long double>> numeric_roots(const IntPolynomial& p, long double tol) {
    using C = std::complex<long double>;
    const std::size_t n = p.degree();
    if (n == 0) return {};
    std::vector<long double> a;
    for (const auto& c : p.coefficients()) a.push_back(c.get_d());
    auto eval = [&](C z, C& value, C& deriv) {
        value = a[n];
        deriv = 0;
        for (std::size_t k = n; k-- > 0;) {
            deriv = deriv * z + value;
            value = value * z + a[k];
        }
    };
    std::vector<C> z(n);
    const long double pi = std::acos(-1.0L);
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::polar((1 + 0.01L * static_cast<long double>(k)), 2 * pi * k / n + 0.4L);
    for (int iter = 0; iter < 500; ++iter) {
        long double max_step = 0;
        for (std::size_t k = 0; k < n; ++k) {
            C value, deriv;
            eval(z[k], value, deriv);
            if (value == C(0)) continue;
            C ratio = value / deriv;
            C repulsion = 0;
            for (std::size_t m = 0; m < n; ++m)
                if (m != k) repulsion += C(1) / (z[k] - z[m]);
            C step = ratio / (C(1) - ratio * repulsion);
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < tol) {
            std::sort(z.begin(), z.end(), [](C x, C y) {
                return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
            });
            return z;
        }
    }
    throw NonTermination("numeric_roots: no convergence within 500 iterations for " + to_string(p));
}

long count_real(const std::vector<std::complex<long double>>& roots, long double real_tol) {
    return std::count_if(roots.begin(), roots.end(), [&](const auto& z) { return std::abs(z.imag()) <= real_tol; });
}

}  // namespace bicx
