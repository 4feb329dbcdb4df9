#include "bicx/arith.hpp"

#include <algorithm>
#include <cctype>

#include "bicx/errors.hpp"

namespace bicx {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factor_integer(n))
        if (e > 1) return false;
    return true;
}

namespace {

Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](const Integer& v) {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer diff = x - y;
                    q = (q * abs(diff)) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(Integer(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_cofactor(const Integer& n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer d = pollard_brent(n);
    split_cofactor(d, out);
    split_cofactor(Integer(n / d), out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
    if (n == 0) throw InvalidArgument("factor_integer: zero has no factorization");
    Integer m = abs(n);
    std::vector<std::pair<Integer, unsigned>> out;
    auto take = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e) out.emplace_back(Integer(p), e);
    };
    take(2);
    take(3);
    const unsigned long limit = 1000000;
    for (unsigned long p = 5; p <= limit; p += 6) {
        if (Integer(p) * p > m) break;
        take(p);
        take(p + 2);
    }
    if (m == 1) return out;
    if (Integer(limit) * limit >= m) {
        out.emplace_back(m, 1);
        return out;
    }
    std::vector<Integer> primes;
    split_cofactor(m, primes);
    std::sort(primes.begin(), primes.end());
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r < 0) r += abs(m);
    return r;
}

Integer round_div(const Integer& a, const Integer& b) {
    // floor((2a + b) / 2b) with the sign of b folded in
    Integer num = 2 * a + b, den = 2 * b;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return floor_div(num, den);
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw InvalidArgument("isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto digits = [&](std::size_t start) {
        std::size_t j = start;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == start) throw ParseError("expected digits", start);
        return j;
    };
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    std::size_t end = digits(i);
    Integer num(text.substr(i, end - i));
    Integer den = 1;
    i = end;
    if (i < text.size() && text[i] == '/') {
        end = digits(i + 1);
        den = Integer(text.substr(i + 1, end - i - 1));
        if (den == 0) throw ParseError("zero denominator", i + 1);
        i = end;
    }
    if (i != text.size()) throw ParseError("unexpected character", i);
    return make_rational(neg ? Integer(-num) : num, den);
}

}  // namespace bicx
