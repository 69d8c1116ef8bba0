#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "x13e8/cyclotomic.hpp"
#include "x13e8/polynomial.hpp"
#include "x13e8/series.hpp"

namespace x13e8 {

// ---------------------------------------------------------------------------
// theta constants
//
// The order-13 constants are the signed sums
//   a_i = s_i * sum_n (-1)^n q^{(26n + k_i)^2 / 104},
// k = (11, 7, 5, 3, 9, 1) for i = 1..6 and s_4 = -1 (all other s_i = +1).
// The order-5 pair uses (10n + k)^2 / 40 with k = 3 ('a') and k = 1 ('b').
// ---------------------------------------------------------------------------

/// Order-13 theta constant a_i, i = 1..6.
inline RationalSeries theta13(int i, const SeriesContext* ctx) {
    if (i < 1 || i > 6) throw std::invalid_argument("theta13: index must be 1..6");
    if (ctx->denominator % 104 != 0) throw std::invalid_argument("theta13: context denominator must be divisible by 104");
    static const long ks[6] = {11, 7, 5, 3, 9, 1};
    const long k = ks[i - 1];
    const long unit = ctx->denominator / 104;
    const long sign0 = (i == 4) ? -1 : 1;
    RationalSeries out(ctx);
    for (long n = 0;; n = (n > 0 ? -n : -n + 1)) {
        long m = 26 * n + k;
        long u = m * m * unit;
        if (u >= ctx->trunc_units) {
            // terms grow monotonically within each sign of n; stop once both
            // directions are out of range
            long m2 = 26 * (n > 0 ? -n : -n + 1) + k;
            if (m2 * m2 * unit >= ctx->trunc_units) break;
            continue;
        }
        long s = ((n % 2) == 0) ? sign0 : -sign0;
        out += RationalSeries::monomial(ctx, u, Rational(s));
    }
    return out;
}

/// Order-5 theta constant; which = 'a' (k = 3) or 'b' (k = 1).
inline RationalSeries theta5(char which, const SeriesContext* ctx) {
    if (which != 'a' && which != 'b') throw std::invalid_argument("theta5: which must be 'a' or 'b'");
    if (ctx->denominator % 40 != 0) throw std::invalid_argument("theta5: context denominator must be divisible by 40");
    const long k = which == 'a' ? 3 : 1;
    const long unit = ctx->denominator / 40;
    RationalSeries out(ctx);
    for (long n = 0;; n = (n > 0 ? -n : -n + 1)) {
        long m = 10 * n + k;
        long u = m * m * unit;
        if (u >= ctx->trunc_units) {
            long m2 = 10 * (n > 0 ? -n : -n + 1) + k;
            if (m2 * m2 * unit >= ctx->trunc_units) break;
            continue;
        }
        long s = ((n % 2) == 0) ? 1 : -1;
        out += RationalSeries::monomial(ctx, u, Rational(s));
    }
    return out;
}

/// Dedekind eta: q^{1/24} prod_{n>=1} (1 - q^n), expanded by the product.
inline RationalSeries eta(const SeriesContext* ctx) {
    if (ctx->denominator % 24 != 0) throw std::invalid_argument("eta: context denominator must be divisible by 24");
    const long N = ctx->denominator;
    RationalSeries prod = RationalSeries::monomial(ctx, 0, Rational(1));
    for (long n = 1; n * N < ctx->trunc_units; ++n) {
        RationalSeries factor = RationalSeries::monomial(ctx, 0, Rational(1));
        factor += RationalSeries::monomial(ctx, n * N, Rational(-1));
        prod *= factor;
    }
    return prod.shifted(N / 24);
}

/// eta^k; k = 24 is the discriminant cusp form Delta.
inline RationalSeries eta_power(unsigned k, const SeriesContext* ctx) {
    if (k == 0) throw std::invalid_argument("eta_power: k must be >= 1");
    return eta(ctx).pow(k);
}

/// Normalized Eisenstein series E4 = 1 + 240 sum sigma_3(n) q^n or
/// E6 = 1 - 504 sum sigma_5(n) q^n.
inline RationalSeries eisenstein(int weight, const SeriesContext* ctx) {
    if (weight != 4 && weight != 6) throw std::invalid_argument("eisenstein: weight must be 4 or 6");
    const long N = ctx->denominator;
    const long scale = weight == 4 ? 240 : -504;
    const int p = weight - 1;
    RationalSeries out = RationalSeries::monomial(ctx, 0, Rational(1));
    std::vector<long long> sig(static_cast<std::size_t>(ctx->trunc_units / N) + 1, 0);
    for (long d = 1; d < static_cast<long>(sig.size()); ++d) {
        long long dp = 1;
        for (int e = 0; e < p; ++e) dp *= d;
        for (long n = d; n < static_cast<long>(sig.size()); n += d) sig[n] += dp;
    }
    for (long n = 1; n < static_cast<long>(sig.size()); ++n) {
        if (n * N >= ctx->trunc_units) break;
        out += RationalSeries::monomial(ctx, n * N, Rational(scale) * Rational(static_cast<long>(sig[n])));
    }
    return out;
}

// ---------------------------------------------------------------------------
// substitution of series into polynomials
// ---------------------------------------------------------------------------

namespace detail {

template <class C>
std::vector<std::vector<PuiseuxSeries<C>>> power_tables(const SparsePolynomial& p,
                                                        const std::vector<PuiseuxSeries<C>>& xs) {
    std::vector<int> maxe(static_cast<std::size_t>(p.ring().vars), 0);
    for (const auto& t : p.terms())
        for (int i = 0; i < p.ring().vars; ++i) maxe[i] = std::max<int>(maxe[i], t.first.e[i]);
    std::vector<std::vector<PuiseuxSeries<C>>> pows(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        pows[i].push_back(xs[i]);  // slot e=1; e=0 handled separately
        for (int e = 2; e <= maxe[i]; ++e) pows[i].push_back(pows[i].back() * xs[i]);
    }
    return pows;
}

}  // namespace detail

/// Substitute rational-coefficient series for the variables of p. The result
/// carries coefficients in p's coefficient field (Q(zeta13) coefficients
/// times rational series give Q(zeta13)-coefficient series).
inline ZetaSeries substitute_series(const SparsePolynomial& p, const std::vector<RationalSeries>& xs) {
    if (static_cast<int>(xs.size()) != p.ring().vars)
        throw std::invalid_argument("substitute_series: wrong number of series");
    const SeriesContext* ctx = xs.empty() ? nullptr : xs[0].context();
    for (const auto& x : xs)
        if (x.context()->denominator != ctx->denominator)
            throw std::invalid_argument("substitute_series: context mismatch");
    auto pows = detail::power_tables(p, xs);
    ZetaSeries acc(ctx);
    for (const auto& t : p.terms()) {
        RationalSeries prod = RationalSeries::monomial(ctx, 0, Rational(1));
        bool first = true;
        for (int i = 0; i < p.ring().vars; ++i) {
            if (t.first.e[i] == 0) continue;
            const RationalSeries& pw = pows[i][static_cast<std::size_t>(t.first.e[i] - 1)];
            prod = first ? pw : prod * pw;
            first = false;
        }
        ZetaSeries term = promote(prod, p.ring().coeff);
        term.scale(t.second);
        acc += term;
    }
    return acc;
}

/// Same, for polynomials whose coefficients are rational (throws otherwise);
/// stays in rational-coefficient series.
inline RationalSeries substitute_series_rational(const SparsePolynomial& p, const std::vector<RationalSeries>& xs) {
    if (static_cast<int>(xs.size()) != p.ring().vars)
        throw std::invalid_argument("substitute_series: wrong number of series");
    const SeriesContext* ctx = xs.empty() ? nullptr : xs[0].context();
    auto pows = detail::power_tables(p, xs);
    RationalSeries acc(ctx);
    for (const auto& t : p.terms()) {
        if (!t.second.is_rational())
            throw std::invalid_argument("substitute_series_rational: polynomial has non-rational coefficients");
        RationalSeries prod = RationalSeries::monomial(ctx, 0, t.second.rational_part());
        for (int i = 0; i < p.ring().vars; ++i) {
            if (t.first.e[i] == 0) continue;
            prod = prod * pows[i][static_cast<std::size_t>(t.first.e[i] - 1)];
        }
        acc += prod;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// direct numeric summation (no series truncation), for the transformation-law
// checks in the upper half-plane
// ---------------------------------------------------------------------------

/// a_i(z) summed term by term until |term| < 1e-16.
inline std::complex<double> numeric_theta13(int i, std::complex<double> z) {
    if (i < 1 || i > 6) throw std::invalid_argument("numeric_theta13: index must be 1..6");
    if (z.imag() <= 0.0) throw std::invalid_argument("numeric_theta13: z must lie in the upper half-plane");
    static const long ks[6] = {11, 7, 5, 3, 9, 1};
    const long k = ks[i - 1];
    const double sign0 = (i == 4) ? -1.0 : 1.0;
    const std::complex<double> log_q = 2.0 * M_PI * std::complex<double>(0.0, 1.0) * z;
    std::complex<double> acc(0.0, 0.0);
    for (long n = 0;; n = (n > 0 ? -n : -n + 1)) {
        if (n > 10000 || n < -10000) throw std::runtime_error("numeric_theta13: did not converge");
        double m = static_cast<double>(26 * n + k);
        std::complex<double> term = std::exp(log_q * (m * m / 104.0));
        double s = ((n % 2) == 0) ? sign0 : -sign0;
        acc += s * term;
        if (std::abs(term) < 1e-16) {
            long n2 = (n > 0 ? -n : -n + 1);
            double m2 = static_cast<double>(26 * n2 + k);
            if (std::abs(std::exp(log_q * (m2 * m2 / 104.0))) < 1e-16) break;
        }
    }
    return acc;
}

/// eta(z) via the product, truncated at the same 1e-16 term threshold.
inline std::complex<double> numeric_eta(std::complex<double> z) {
    if (z.imag() <= 0.0) throw std::invalid_argument("numeric_eta: z must lie in the upper half-plane");
    const std::complex<double> log_q = 2.0 * M_PI * std::complex<double>(0.0, 1.0) * z;
    std::complex<double> acc = std::exp(log_q / 24.0);
    for (long n = 1; n <= 10000; ++n) {
        std::complex<double> qn = std::exp(log_q * static_cast<double>(n));
        acc *= (1.0 - qn);
        if (std::abs(qn) < 1e-16) return acc;
    }
    throw std::runtime_error("numeric_eta: did not converge");
}

}  // namespace x13e8
