#include "bicx/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicx/census.hpp"
#include "bicx/errors.hpp"
#include "bicx/ideals.hpp"
#include "bicx/minpoly.hpp"
#include "bicx/radix.hpp"
#include "bicx/rings.hpp"
#include "bicx/text.hpp"

namespace bicx {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json jint(const Integer& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

json jrat(const Rational& q) {
    if (is_integer(q)) return jint(q.get_num());
    return q.get_str();
}

template <class T>
json jcoeffs(const std::vector<T>& c) {
    json arr = json::array();
    for (const auto& x : c) {
        if constexpr (std::is_same_v<T, Integer>)
            arr.push_back(jint(x));
        else
            arr.push_back(jrat(x));
    }
    return arr;
}

ExtensionDescriptor extension_arg(const std::string& text) {
    try {
        return ExtensionDescriptor::parse(text);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

RadixBase base_arg(const std::string& text) {
    try {
        return RadixBase::parse(text);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

IntPolynomial polynomial_arg(const std::string& text) {
    const RatPolynomial p = parse_polynomial(text);
    if (p.is_zero()) throw InvalidArgument("the zero polynomial has no roots to count");
    return content_primitive(p).prim;
}

std::string format_complex(const std::complex<long double>& z) {
    auto clean = [](long double v) { return std::fabs(v) < 1e-12L ? 0.0L : v; };
    std::ostringstream os;
    os << std::setprecision(12);
    const long double re = clean(z.real()), im = clean(z.imag());
    if (re != 0 || im == 0) os << re;
    if (im != 0) {
        if (im < 0) os << "-";
        else if (re != 0) os << "+";
        if (std::fabs(im) != 1) os << std::fabs(im) << "*";
        os << "i";
    }
    return os.str();
}

Locus numeric_locus(const std::complex<long double>& a, const std::complex<long double>& b) {
    constexpr long double tol = 1e-8L;
    auto real = [](const std::complex<long double>& z) { return std::fabs(z.imag()) <= tol; };
    if (std::abs(a - b) <= tol) return real(a) ? Locus::R : Locus::Si;
    if (real(a) && real(b)) return Locus::Sj;
    if (std::abs(std::conj(a) - b) <= tol) return Locus::Sk;
    return Locus::D;
}

json census_json(const Census& c) {
    return {{"n", c.n}, {"r", c.r}, {"s", c.s}, {"2s_i", c.two_s_i}, {"2s_j", c.two_s_j},
            {"2s_k", c.two_s_k}, {"4d", c.four_d}, {"total", c.total()}};
}

std::string census_text(const Census& c) {
    std::ostringstream os;
    os << "n=" << c.n << " r=" << c.r << " s=" << c.s << " 2s_i=" << c.two_s_i << " 2s_j=" << c.two_s_j
       << " 2s_k=" << c.two_s_k << " 4d=" << c.four_d << " total=" << c.total();
    return os.str();
}

// "Q", "Q(i)" or an extension name.
struct TableTarget {
    std::optional<FieldDescriptor> field;
    std::optional<ExtensionDescriptor> extension;

    CoefficientTable table(long N) const {
        return field ? coefficient_table(*field, N) : coefficient_table(*extension, N);
    }
};

TableTarget table_target(const std::string& text) {
    if (text == "Q" || text == "Q(i)" || text == "Qi" || text.rfind("Q(sqrt:", 0) == 0) {
        try {
            return {FieldDescriptor::parse(text), std::nullopt};
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
    }
    return {std::nullopt, extension_arg(text)};
}

long double parse_exponent(const std::string& text) {
    if (text.find('/') != std::string::npos) {
        const Rational q = parse_rational(text);
        return static_cast<long double>(q.get_d());
    }
    std::size_t used = 0;
    long double s = 0;
    try {
        s = std::stold(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) throw UsageError("bad exponent '" + text + "'");
    return s;
}

std::vector<Integer> parse_digits(const std::vector<std::string>& words) {
    std::vector<Integer> msd_first;
    for (const auto& w : words) {
        std::string token;
        std::istringstream is(w);
        while (std::getline(is, token, ',')) {
            if (token.empty()) continue;
            if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw UsageError("bad digit '" + token + "'");
            msd_first.emplace_back(token);
        }
    }
    if (msd_first.empty()) throw UsageError("no digits given");
    std::reverse(msd_first.begin(), msd_first.end());
    return msd_first;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic of bicomplex algebraic numbers.\n"
                 "Elements: Cartesian x+y*i+z*j+t*k or idempotent [c1, c2]; put `--` before literals starting with '-'.",
                 "bicx"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    std::string element, polynomial, axis, L_text = "QB", K_text = "QB", base_text, out_file, s_text = "2";
    long cyclotomic_n = 0, max_n = 0;
    std::vector<std::string> digit_words;

    auto* decompose = app.add_subcommand("decompose", "Idempotent components and Cartesian coordinates");
    decompose->add_option("element", element)->required();
    auto* conj = app.add_subcommand("conj", "Conjugates bar-i, bar-j, bar-k");
    conj->add_option("element", element)->required();
    conj->add_option("--axis", axis, "i, j or k (default: all three)");
    auto* norm_cmd = app.add_subcommand("norm", "N(w) = |c1 c2|^2");
    norm_cmd->add_option("element", element)->required();
    auto* minpoly = app.add_subcommand("minpoly", "Primitive minimal polynomial over Z");
    minpoly->add_option("element", element)->required();
    auto* charpoly4 = app.add_subcommand("charpoly4", "Quartic characteristic polynomial from the four conjugates");
    charpoly4->add_option("element", element)->required();
    auto* census_cmd = app.add_subcommand("census", "Bicomplex root census of a squarefree polynomial");
    census_cmd->add_option("polynomial", polynomial);
    census_cmd->add_option("--cyclotomic", cyclotomic_n, "Use the n-th cyclotomic polynomial");
    auto* roots = app.add_subcommand("roots", "All n^2 bicomplex roots (numeric) with their loci");
    roots->add_option("polynomial", polynomial)->required();
    auto* factor_cmd = app.add_subcommand("factor", "Factor an element of O_L into primes");
    factor_cmd->add_option("element", element)->required();
    factor_cmd->add_option("--L", L_text, "Qh, QB or custom:K1,K2")->capture_default_str();
    auto* profile = app.add_subcommand("primes-profile", "How rational primes factor in O_L");
    profile->add_option("--L", L_text)->capture_default_str();
    profile->add_option("--max", max_n, "Largest prime")->required();
    auto* units = app.add_subcommand("units", "Unit group of O_L");
    units->add_option("--L", L_text)->capture_default_str();
    auto* disc = app.add_subcommand("disc", "Discriminant of O_L");
    disc->add_option("--L", L_text)->capture_default_str();
    auto* ideal_count = app.add_subcommand("ideal-count", "Ideal counts a(1..N)");
    ideal_count->add_option("--K", K_text, "Q, Q(i), Qh, QB or custom:K1,K2")->capture_default_str();
    ideal_count->add_option("--max", max_n)->required();
    ideal_count->add_option("--out", out_file, "Write a CSV table n,a_n");
    auto* zeta = app.add_subcommand("zeta", "Partial sum of the Dirichlet series");
    zeta->add_option("--K", K_text)->capture_default_str();
    zeta->add_option("--s", s_text, "Exponent > 1, rational or decimal")->capture_default_str();
    zeta->add_option("--max", max_n)->required();
    auto* encode_cmd = app.add_subcommand("radix-encode", "Digit expansion of an integer element");
    encode_cmd->add_option("element", element)->required();
    encode_cmd->add_option("--base", base_text, "HypSplit(a), HypGauss(a) or Gauss(a,+|-)")->required();
    auto* decode_cmd = app.add_subcommand("radix-decode", "Evaluate a digit string, most significant digit first");
    decode_cmd->add_option("digits", digit_words)->required();
    decode_cmd->add_option("--base", base_text)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (decompose->parsed()) {
            const BicomplexElement w = parse_element(element);
            const bool cart = has_cartesian_view(w);
            if (as_json) {
                out << json{{"c1", to_string(w.c1)},
                            {"c2", to_string(w.c2)},
                            {"idempotent", to_idempotent_string(w)},
                            {"cartesian", cart ? json(to_cartesian_string(w)) : json(nullptr)}}
                           .dump()
                    << "\n";
            } else {
                out << "e1: " << to_string(w.c1) << "\n" << "e2: " << to_string(w.c2) << "\n";
                out << "idempotent: " << to_idempotent_string(w) << "\n";
                if (cart) out << "cartesian: " << to_cartesian_string(w) << "\n";
            }
        } else if (conj->parsed()) {
            const BicomplexElement w = parse_element(element);
            std::vector<Axis> axes = {Axis::I, Axis::J, Axis::K};
            if (!axis.empty()) {
                try {
                    axes = {parse_axis(axis)};
                } catch (const InvalidArgument& e) {
                    throw UsageError(e.what());
                }
            }
            json j = json::object();
            for (Axis a : axes) {
                const std::string v = format_element(conjugate(w, a));
                if (as_json)
                    j[to_string(a)] = v;
                else
                    out << (axes.size() > 1 ? to_string(a) + ": " : "") << v << "\n";
            }
            if (as_json) out << j.dump() << "\n";
        } else if (norm_cmd->parsed()) {
            const std::string n = to_string(norm(parse_element(element)));
            if (as_json)
                out << json{{"norm", n}}.dump() << "\n";
            else
                out << n << "\n";
        } else if (minpoly->parsed()) {
            const MinPolyResult r = minpoly_bicomplex(parse_element(element));
            if (as_json) {
                out << json{{"poly", to_string(r.poly)},
                            {"coefficients", jcoeffs(r.poly.coefficients())},
                            {"kind", r.kind == MinPolyKind::Common ? "common" : "product"},
                            {"component1", to_string(r.component1)},
                            {"component2", to_string(r.component2)}}
                           .dump()
                    << "\n";
            } else {
                out << to_string(r.poly) << "\n";
            }
        } else if (charpoly4->parsed()) {
            const QuarticCharpoly q = quartic_charpoly(parse_element(element));
            if (as_json) {
                out << json{{"poly", to_string(q.poly)},
                            {"coefficients", jcoeffs(q.poly.coefficients())},
                            {"four_re", jrat(q.four_re)},
                            {"A", jrat(q.A)},
                            {"B", jrat(q.B)},
                            {"N", jrat(q.N)}}
                           .dump()
                    << "\n";
            } else {
                out << to_string(q.poly) << "\n";
            }
        } else if (census_cmd->parsed()) {
            if (polynomial.empty() == (cyclotomic_n == 0))
                throw UsageError("census takes either a polynomial or --cyclotomic n");
            const Census c = cyclotomic_n ? census_cyclotomic(cyclotomic_n) : census(polynomial_arg(polynomial));
            out << (as_json ? census_json(c).dump() : census_text(c)) << "\n";
        } else if (roots->parsed()) {
            const IntPolynomial p = polynomial_arg(polynomial);
            if (!is_squarefree(p)) throw InvalidArgument("polynomial is not squarefree");
            const auto z = numeric_roots(p);
            json arr = json::array();
            for (const auto& a : z)
                for (const auto& b : z) {
                    const Locus l = numeric_locus(a, b);
                    if (as_json)
                        arr.push_back({{"locus", to_string(l)}, {"c1", format_complex(a)}, {"c2", format_complex(b)}});
                    else
                        out << to_string(l) << "\t[" << format_complex(a) << ", " << format_complex(b) << "]\n";
                }
            if (as_json) out << arr.dump() << "\n";
        } else if (factor_cmd->parsed()) {
            const ExtensionDescriptor L = extension_arg(L_text);
            const BicomplexFactorization f = factor(parse_element(element), L);
            if (as_json) {
                json fs = json::array();
                for (const auto& [p, e] : f.factors) fs.push_back({{"factor", format_element(p)}, {"exponent", e}});
                out << json{{"unit", format_element(f.unit)}, {"factors", fs}}.dump() << "\n";
            } else {
                out << "unit: " << format_element(f.unit) << "\n";
                for (const auto& [p, e] : f.factors)
                    out << format_element(p) << (e > 1 ? "  ^" + std::to_string(e) : "") << "\n";
            }
        } else if (profile->parsed()) {
            const ExtensionDescriptor L = extension_arg(L_text);
            json arr = json::array();
            for (long p = 2; p <= max_n; ++p) {
                if (!is_prime(Integer(p))) continue;
                const PrimeProfile pr = rational_prime_profile(Integer(p), L);
                if (as_json)
                    arr.push_back({{"p", p}, {"factors", pr.factor_count}, {"semiprime", pr.semiprime}});
                else
                    out << p << " " << pr.factor_count << (pr.semiprime ? " semiprime" : "") << "\n";
            }
            if (as_json) out << arr.dump() << "\n";
        } else if (units->parsed()) {
            const ExtensionDescriptor L = extension_arg(L_text);
            const UnitGroupInfo info = unit_group(L);
            json j{{"class", to_string(info.unit_class)}, {"structure", info.structure}};
            if (info.finite) {
                json list = json::array();
                std::string text;
                for (const auto& u : enumerate_units(L)) {
                    list.push_back(format_element(u));
                    text += (text.empty() ? "" : ", ") + format_element(u);
                }
                j["order"] = jint(*info.order);
                j["units"] = list;
                if (!as_json)
                    out << "order: " << *info.order << "\nclass: " << to_string(info.unit_class)
                        << "\nstructure: " << info.structure << "\nunits: " << text << "\n";
            } else {
                const std::string w = format_element(infinite_order_witness(L));
                j["order"] = nullptr;
                j["witness"] = w;
                if (!as_json) out << "order: infinite\nstructure: " << info.structure << "\nwitness: " << w << "\n";
            }
            if (as_json) out << j.dump() << "\n";
        } else if (disc->parsed()) {
            const ExtensionDescriptor L = extension_arg(L_text);
            const Integer d = discriminant(L);
            if (as_json)
                out << json{{"discriminant", jint(d)}, {"trace_form", jint(discriminant_by_trace_form(L))}}.dump() << "\n";
            else
                out << d << "\n";
        } else if (ideal_count->parsed()) {
            const CoefficientTable t = table_target(K_text).table(max_n);
            if (!out_file.empty()) {
                std::ofstream csv(out_file);
                if (!csv) throw UsageError("cannot write " + out_file);
                csv << "n,a_n\n";
                for (long n = 1; n <= t.N; ++n) csv << n << "," << t(n) << "\n";
            }
            if (as_json) {
                out << jcoeffs(t.values).dump() << "\n";
            } else {
                for (long n = 1; n <= t.N; ++n) out << n << " " << t(n) << "\n";
            }
        } else if (zeta->parsed()) {
            const TableTarget target = table_target(K_text);
            const long double s = parse_exponent(s_text);
            const CoefficientTable t = target.table(max_n);
            const long double value = zeta_partial(t, s);
            std::optional<bool> identity;
            if (target.extension)
                identity = t == dirichlet_convolve(coefficient_table(target.extension->K1, max_n),
                                                   coefficient_table(target.extension->K2, max_n));
            std::ostringstream v;
            v << std::setprecision(15) << value;
            if (as_json) {
                out << json{{"value", static_cast<double>(value)},
                            {"s", s_text},
                            {"N", max_n},
                            {"identity", identity ? json(*identity) : json(nullptr)}}
                           .dump()
                    << "\n";
            } else {
                out << v.str() << "\n";
                if (identity) out << "a_L = a_K1 * a_K2: " << (*identity ? "exact" : "FAILED") << "\n";
            }
        } else if (encode_cmd->parsed()) {
            const RadixBase base = base_arg(base_text);
            const DigitString s = encode(radix_value_from(parse_element(element), base), base);
            if (as_json) {
                out << json{{"base", base.name()}, {"digits", jcoeffs(s.digits)}}.dump() << "\n";
            } else {
                out << base.name() << ":";
                for (auto it = s.digits.rbegin(); it != s.digits.rend(); ++it) out << " " << *it;
                out << "\n";
            }
        } else if (decode_cmd->parsed()) {
            const RadixBase base = base_arg(base_text);
            const RadixValue v = decode({parse_digits(digit_words), base});
            const std::string text = format_element(to_bicomplex(v));
            if (as_json)
                out << json{{"base", base.name()}, {"value", text}}.dump() << "\n";
            else
                out << text << "\n";
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace bicx
