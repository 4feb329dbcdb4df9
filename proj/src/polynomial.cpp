#include "bicx/polynomial.hpp"

#include <cctype>
#include <map>

namespace bicx {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) throw InvalidArgument("IntPolynomial: zero polynomial");
    if (c_.back() < 0) throw InvalidArgument("IntPolynomial: leading coefficient must be positive");
    Integer g = 0;
    for (const auto& v : c_) g = gcd(g, v);
    if (g != 1) throw InvalidArgument("IntPolynomial: coefficients must be coprime");
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
    : IntPolynomial([&] {
          std::vector<Integer> v;
          for (long c : coeffs) v.emplace_back(c);
          return v;
      }()) {}

RatPolynomial IntPolynomial::to_rational() const {
    std::vector<Rational> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.emplace_back(v);
    return RatPolynomial(std::move(r));
}

namespace {

// p / s with s > 0 chosen so the result is a primitive integer polynomial.
// Sign is preserved (unlike content_primitive).
RatPolynomial positive_primitive(const RatPolynomial& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& c : p.coefficients()) den_lcm = lcm(den_lcm, c.get_den());
    std::vector<Rational> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        Integer v = c.get_num() * (den_lcm / c.get_den());
        num_gcd = gcd(num_gcd, v);
        out.emplace_back(v);
    }
    for (auto& c : out) c /= num_gcd;
    return RatPolynomial(std::move(out));
}

}  // namespace

ContentPrimitive content_primitive(const RatPolynomial& p) {
    if (p.is_zero()) throw InvalidArgument("content_primitive: zero polynomial");
    RatPolynomial prim = positive_primitive(p);
    if (prim.lead() < 0) prim = -prim;
    std::vector<Integer> ints;
    for (const auto& c : prim.coefficients()) ints.push_back(c.get_num());
    Rational scale = p.lead() / prim.lead();
    return {scale, IntPolynomial(std::move(ints))};
}

RatPolynomial make_monic(const RatPolynomial& p) {
    if (p.is_zero()) return p;
    Rational inv = 1 / p.lead();
    return inv * p;
}

RatPolynomial poly_gcd(const RatPolynomial& p, const RatPolynomial& q) {
    if (p.is_zero() && q.is_zero()) throw InvalidArgument("poly_gcd: both polynomials are zero");
    RatPolynomial a = p, b = q;
    while (!b.is_zero()) {
        RatPolynomial r = divrem(a, b).second;
        a = std::move(b);
        b = positive_primitive(r);
    }
    return make_monic(a);
}

IntPolynomial poly_lcm(const IntPolynomial& p, const IntPolynomial& q) {
    RatPolynomial pr = p.to_rational(), qr = q.to_rational();
    RatPolynomial g = poly_gcd(pr, qr);
    RatPolynomial prod = pr * qr;
    return content_primitive(divrem(prod, g).first).prim;
}

bool is_squarefree(const IntPolynomial& p) {
    if (p.degree() < 1) throw InvalidArgument("is_squarefree: constant polynomial");
    RatPolynomial r = p.to_rational();
    return poly_gcd(r, r.derivative()).degree() == 0;
}

std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p) {
    std::vector<RatPolynomial> chain{positive_primitive(p), positive_primitive(p.derivative())};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RatPolynomial r = divrem(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(positive_primitive(-r));
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

unsigned sturm_real_root_count(const IntPolynomial& p) {
    if (!is_squarefree(p)) throw InvalidArgument("sturm_real_root_count: polynomial is not squarefree");
    const auto chain = sturm_chain(p.to_rational());
    auto variations = [&](bool at_minus_inf) {
        unsigned v = 0;
        int prev = 0;
        for (const auto& q : chain) {
            int s = sgn(q.lead());
            if (at_minus_inf && q.degree() % 2 == 1) s = -s;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    };
    return variations(true) - variations(false);
}

IntPolynomial cyclotomic(long n) {
    if (n < 1) throw InvalidArgument("cyclotomic: n must be >= 1");
    std::map<long, RatPolynomial> cache;
    auto rec = [&](auto&& self, long m) -> RatPolynomial {
        if (auto it = cache.find(m); it != cache.end()) return it->second;
        RatPolynomial num = RatPolynomial::monomial(1, static_cast<std::size_t>(m)) - RatPolynomial::constant(1);
        for (long d = 1; d < m; ++d)
            if (m % d == 0) num = divrem(num, self(self, d)).first;
        cache.emplace(m, num);
        return num;
    };
    return content_primitive(rec(rec, n)).prim;
}

Integer euler_phi(const Integer& n) {
    if (n < 1) throw InvalidArgument("euler_phi: n must be >= 1");
    Integer phi = n;
    if (n == 1) return phi;
    for (const auto& [p, e] : factor_integer(n)) phi = phi / p * (p - 1);
    return phi;
}

std::string to_string(const RatPolynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coefficients();
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        Rational mag = abs(c[k]);
        if (first)
            out += c[k] < 0 ? "-" : "";
        else
            out += c[k] < 0 ? " - " : " + ";
        first = false;
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
    return to_string(p.to_rational(), var);
}

RatPolynomial parse_polynomial(const std::string& text, const std::string& var) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto starts = [&](const std::string& s) { return text.compare(i, s.size(), s) == 0; };
    std::vector<Rational> coeffs;
    bool any = false;
    skip();
    while (i < text.size()) {
        Rational sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (any) {
            throw ParseError("expected '+' or '-'", i);
        }
        Rational coeff = 1;
        bool have_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
            try {
                coeff = parse_rational(text.substr(i, j - i));
            } catch (const ParseError& e) {
                throw ParseError("bad coefficient", i + e.position);
            }
            have_coeff = true;
            i = j;
            skip();
        }
        std::size_t power = 0;
        bool star = false;
        if (have_coeff && i < text.size() && text[i] == '*') {
            ++i;
            skip();
            star = true;
        }
        if (starts(var)) {
            i += var.size();
            power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) throw ParseError("expected exponent", i);
                power = std::stoul(text.substr(i, j - i));
                i = j;
            }
        } else if (star || !have_coeff) {
            throw ParseError("expected '" + var + "'", i);
        }
        if (coeffs.size() <= power) coeffs.resize(power + 1);
        coeffs[power] += sign * coeff;
        any = true;
        skip();
    }
    if (!any) throw ParseError("empty polynomial", 0);
    return RatPolynomial(std::move(coeffs));
}

}  // namespace bicx
