#include "bicx/text.hpp"

#include <cctype>
#include <optional>

#include "bicx/errors.hpp"

namespace bicx {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& s) : s_(s) {}

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    bool accept_word(const std::string& w) {
        skip_space();
        if (s_.compare(pos_, w.size(), w) != 0) return false;
        pos_ += w.size();
        return true;
    }
    void expect(char c, const std::string& what) {
        if (!accept(c)) fail("expected " + what);
    }
    std::optional<Integer> digits() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) return std::nullopt;
        return Integer(s_.substr(start, pos_ - start));
    }
    std::size_t pos() const { return pos_; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

std::optional<Rational> coefficient(Scanner& sc) {
    auto num = sc.digits();
    if (!num) return std::nullopt;
    Integer den = 1;
    if (sc.accept('/')) {
        sc.skip_space();
        const std::size_t at = sc.pos();
        auto d = sc.digits();
        if (!d) sc.fail("expected denominator");
        if (*d == 0) throw ParseError("zero denominator", at);
        den = *d;
    }
    return make_rational(*num, den);
}

// One signed term: optional coefficient, optional '*', optional unit.
// Returns (coefficient, unit name) where the unit is "" for a constant.
template <class UnitReader>
std::pair<Rational, std::string> term(Scanner& sc, bool first, UnitReader read_unit) {
    int sign = 1;
    if (sc.accept('-'))
        sign = -1;
    else if (!sc.accept('+') && !first)
        sc.fail("expected '+' or '-'");
    const std::size_t start = sc.pos();
    std::optional<Rational> c = coefficient(sc);
    bool star = c && sc.accept('*');
    std::string unit = read_unit(sc);
    if (unit.empty()) {
        if (star) sc.fail("expected a unit after '*'");
        if (!c) {
            if (sc.pos() == start && !sc.at_end()) sc.fail("unexpected character");
            sc.fail("expected a term");
        }
    }
    return {Rational(sign * c.value_or(Rational(1))), unit};
}

std::string cartesian_unit(Scanner& sc) {
    for (const char* u : {"i", "j", "k"})
        if (sc.accept_word(u)) return u;
    if (sc.peek() == '[' || sc.peek() == ',' || sc.peek() == ']') sc.fail("idempotent brackets inside a Cartesian literal");
    if (sc.peek() == 's') sc.fail("sqrt is only allowed in idempotent components");
    return "";
}

// "i", "sqrt(D)" or "i*sqrt(n)"; the result is the radicand D as text, "-1" for i.
std::string component_unit(Scanner& sc) {
    if (sc.peek() == 'j' || sc.peek() == 'k') sc.fail("j and k are not allowed inside an idempotent component");
    auto radicand = [&]() {
        sc.expect('(', "'(' after sqrt");
        int sign = sc.accept('-') ? -1 : 1;
        auto n = sc.digits();
        if (!n) sc.fail("expected an integer radicand");
        sc.expect(')', "')'");
        return Integer(sign * *n);
    };
    if (sc.accept_word("sqrt")) return radicand().get_str();
    if (sc.accept_word("i")) {
        if (sc.accept('*')) {
            if (!sc.accept_word("sqrt")) sc.fail("expected sqrt after 'i*'");
            Integer n = radicand();
            if (n <= 0) sc.fail("radicand after i* must be positive");
            return Integer(-n).get_str();
        }
        return "-1";
    }
    return "";
}

ComponentScalar component(Scanner& sc) {
    Rational a = 0, b = 0;
    std::optional<Integer> D;
    bool first = true;
    while (first || (sc.peek() == '+' || sc.peek() == '-')) {
        const std::size_t at = sc.pos();
        auto [c, unit] = term(sc, first, component_unit);
        first = false;
        if (unit.empty()) {
            a += c;
            continue;
        }
        Integer d(unit);
        if (D && *D != d) throw ParseError("component mixes different square roots", at);
        D = d;
        b += c;
    }
    if (!D || b == 0) return GaussianRational(a, 0);
    if (*D == -1) return GaussianRational(a, b);
    if (*D == 1) return GaussianRational(Rational(a + b), 0);
    if (!is_squarefree(*D) || *D == 0) throw ParseError("radicand " + D->get_str() + " is not squarefree", sc.pos());
    return QuadRational(*D, a, b);
}

BicomplexElement idempotent(Scanner& sc) {
    sc.expect('[', "'['");
    ComponentScalar c1 = component(sc);
    sc.expect(',', "','");
    ComponentScalar c2 = component(sc);
    sc.expect(']', "']'");
    if (!sc.at_end()) sc.fail("trailing input after ']'");
    return {std::move(c1), std::move(c2)};
}

BicomplexElement cartesian(Scanner& sc) {
    Rational x = 0, y = 0, z = 0, t = 0;
    bool first = true;
    while (!sc.at_end()) {
        auto [c, unit] = term(sc, first, cartesian_unit);
        first = false;
        if (unit.empty()) x += c;
        else if (unit == "i") y += c;
        else if (unit == "j") z += c;
        else t += c;
    }
    if (first) sc.fail("empty element literal");
    return from_cartesian(x, y, z, t);
}

}  // namespace

BicomplexElement parse_element(const std::string& text) {
    Scanner sc(text);
    if (sc.peek() == '[') return idempotent(sc);
    return cartesian(sc);
}

std::string format_element(const BicomplexElement& w) {
    return has_cartesian_view(w) ? to_cartesian_string(w) : to_idempotent_string(w);
}

}  // namespace bicx
