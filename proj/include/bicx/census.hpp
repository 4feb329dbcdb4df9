#pragma once

#include <complex>
#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/polynomial.hpp"

namespace bicx {

/// Counts of the n^2 bicomplex roots of a squarefree degree-n polynomial by
/// the subalgebra they lie in.
struct Census {
    long n = 0, r = 0, s = 0;
    long two_s_i = 0, two_s_j = 0, two_s_k = 0, four_d = 0;

    long total() const { return r + two_s_i + two_s_j + two_s_k + four_d; }
    friend bool operator==(const Census&, const Census&) = default;
};

/// Requires a squarefree polynomial of degree >= 1.
Census census(const IntPolynomial& p);
/// Census of the n-th cyclotomic polynomial, n >= 2.
Census census_cyclotomic(long n);

enum class Locus { R, Si, Sj, Sk, D };
const char* to_string(Locus l);

struct LocatedRoot {
    BicomplexElement value;
    Locus locus;
};

/// alpha e1 + beta e2 for every ordered pair of roots, classified by which
/// conjugations fix it.  Roots must be distinct and closed under complex
/// conjugation; lead must be nonzero.
std::vector<LocatedRoot> enumerate_bicomplex_roots(const std::vector<GaussianRational>& roots, const Integer& lead);

/// Monic products over each locus; an empty locus gives 1.
struct LocusFactors {
    RatPolynomial R, Si, Sj, Sk, D;
    RatPolynomial product() const { return R * Si * Sj * Sk * D; }
};

/// Expands prod (X - psi) over each locus in the idempotent basis.
LocusFactors locus_factors(const std::vector<GaussianRational>& roots, const Integer& lead);

/// The same five polynomials from the closed forms in the real roots alpha
/// and the upper-half-plane roots beta:
///   R = prod (X-alpha), Si = Sk = prod (X-beta)(X-conj beta),
///   Sj = prod (X-alpha)^(r-1), D = prod (X-alpha)^(2s) prod ((X-beta)(X-conj beta))^(r+2s-2).
LocusFactors locus_factors_closed_form(const std::vector<GaussianRational>& roots);

/// lead * prod (X - root); a real polynomial for conjugation-closed roots.
RatPolynomial polynomial_from_roots(const std::vector<GaussianRational>& roots, const Integer& lead);

/// lead^n * prod over all n^2 bicomplex roots of (X - psi).
RatPolynomial bicomplex_root_product(const std::vector<GaussianRational>& roots, const Integer& lead);

/// All complex roots by simultaneous (Aberth) iteration.  Throws
/// NonTermination when the updates do not fall under tol within 500 sweeps.
std::vector<std::complex<long double>> numeric_roots(const IntPolynomial& p, long double tol = 1e-12L);

/// Number of roots with |Im| <= real_tol.
long count_real(const std::vector<std::complex<long double>>& roots, long double real_tol = 1e-8L);

}  // namespace bicx
