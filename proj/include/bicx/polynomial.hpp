#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bicx/arith.hpp"
#include "bicx/errors.hpp"

namespace bicx {

/// Dense univariate polynomial, coefficients lowest degree first.  The zero
/// polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero.  T must be a commutative ring with value-initialized zero.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
    static Polynomial monomial(const T& v, std::size_t k) {
        std::vector<T> c(k + 1);
        c[k] = v;
        return Polynomial(std::move(c));
    }
    /// X - root
    static Polynomial linear_root(const T& root) { return Polynomial(std::vector<T>{-root, T(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree of a nonzero polynomial.
    std::size_t degree() const {
        if (c_.empty()) throw InvalidArgument("degree of the zero polynomial is undefined");
        return c_.size() - 1;
    }
    const T& lead() const {
        if (c_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
        return c_.back();
    }
    const std::vector<T>& coefficients() const { return c_; }
    /// Coefficient of X^k, zero past the degree.
    T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T{}; }

    T operator()(const T& x) const {
        T acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
        return Polynomial(std::move(d));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& s, Polynomial p) {
        for (auto& v : p.c_) v = s * v;
        p.trim();
        return p;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T{}) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
Polynomial<T> pow(const Polynomial<T>& p, unsigned k) {
    Polynomial<T> result = Polynomial<T>::constant(T(1)), base = p;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divrem(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    std::vector<T> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    if (rem.size() < bc.size()) return {Polynomial<T>{}, a};
    std::vector<T> quo(rem.size() - db);
    const T inv_lead = T(1) / bc.back();
    for (std::size_t k = rem.size(); k-- > db;) {
        T f = rem[k] * inv_lead;
        quo[k - db] = f;
        if (f == T{}) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - f * bc[j];
    }
    rem.resize(db);
    return {Polynomial<T>(std::move(quo)), Polynomial<T>(std::move(rem))};
}

using RatPolynomial = Polynomial<Rational>;

/// Primitive integer polynomial with positive leading coefficient.
class IntPolynomial {
public:
    /// Validates the invariant; throws InvalidArgument otherwise.
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    std::size_t degree() const { return c_.size() - 1; }
    const Integer& lead() const { return c_.back(); }
    const std::vector<Integer>& coefficients() const { return c_; }
    RatPolynomial to_rational() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<Integer> c_;
};

struct ContentPrimitive {
    Rational scale;
    IntPolynomial prim;
};

/// p = scale * prim with prim primitive and positive-leading.
ContentPrimitive content_primitive(const RatPolynomial& p);

/// Monic gcd; throws when both inputs are zero.
RatPolynomial poly_gcd(const RatPolynomial& p, const RatPolynomial& q);
/// Primitive lcm of two nonzero polynomials.
IntPolynomial poly_lcm(const IntPolynomial& p, const IntPolynomial& q);

RatPolynomial make_monic(const RatPolynomial& p);

bool is_squarefree(const IntPolynomial& p);

/// Number of distinct real roots of a squarefree polynomial (Sturm chain).
unsigned sturm_real_root_count(const IntPolynomial& p);

/// Sign variations of the Sturm chain, exposed for tests.
std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p);

IntPolynomial cyclotomic(long n);

/// Euler's totient by factorization.
Integer euler_phi(const Integer& n);

/// Pretty form "X^3 - 2*X^2 + 4*X - 8".
std::string to_string(const RatPolynomial& p, const std::string& var = "X");
std::string to_string(const IntPolynomial& p, const std::string& var = "X");

/// Parses the format produced by to_string (rational coefficients allowed).
RatPolynomial parse_polynomial(const std::string& text, const std::string& var = "X");

}  // namespace bicx
