#pragma once

#include <array>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "x13e8/forms.hpp"
#include "x13e8/qexp.hpp"
#include "x13e8/series.hpp"

namespace x13e8 {

/// A 13-member family delta_nu = sum_j comp[j] zeta^{j nu} (nu = 0..12),
/// held by its zeta-graded rational component series. Products of families
/// are computed once, jointly for all members, by cyclic convolution of the
/// components; individual members materialize as Q(zeta13)-coefficient
/// series on demand.
struct ZetaGradedFamily {
    const SeriesContext* ctx;
    std::vector<RationalSeries> comp;  // 13 components

    explicit ZetaGradedFamily(const SeriesContext* c) : ctx(c), comp(13, RationalSeries(c)) {}
};

inline ZetaGradedFamily family_product(const ZetaGradedFamily& a, const ZetaGradedFamily& b, bool parallel = true) {
    ZetaGradedFamily r(a.ctx);
    auto work = [&](int m_lo, int m_hi) {
        for (int m = m_lo; m < m_hi; ++m) {
            RationalSeries acc(a.ctx);
            for (int i = 0; i < 13; ++i) {
                int j = (m - i + 13) % 13;
                acc += a.comp[i] * b.comp[j];
            }
            r.comp[m] = std::move(acc);
        }
    };
    if (parallel) {
        std::thread t1(work, 0, 6);
        std::thread t2(work, 6, 13);
        t1.join();
        t2.join();
    } else {
        work(0, 13);
    }
    return r;
}

/// Member nu as an exact Q(zeta13)-coefficient Puiseux series.
inline ZetaSeries family_member(const ZetaGradedFamily& f, int nu) {
    static const std::array<FieldElement, 13> zp = [] {
        std::array<FieldElement, 13> z;
        for (int e = 0; e < 13; ++e) z[e] = zeta_pow(e);
        return z;
    }();
    long known = f.comp[0].known();
    long lo = f.comp[0].valuation_units();
    for (const auto& c : f.comp) {
        known = std::min(known, c.known());
        lo = std::min(lo, c.valuation_units());
    }
    if (lo >= known) {
        ZetaSeries z(f.ctx);
        return z.truncated(known);
    }
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(known - lo));
    for (int j = 0; j < 13; ++j) {
        const FieldElement& zeta_factor = zp[(j * nu) % 13];
        for (long u : f.comp[j].support()) {
            if (u >= known) break;
            FieldElement term = zeta_factor;
            term.scale(f.comp[j].coeff_at(u));
            coeffs[static_cast<std::size_t>(u - lo)] += term;
        }
    }
    return ZetaSeries::assemble(f.ctx, lo, known, std::move(coeffs));
}

/// sum over nu = 0..12 of the family members, kept in Q(zeta13) coordinates
/// so that the zeta-cancellation is an observed fact, not an assumption.
inline ZetaSeries family_member_sum(const ZetaGradedFamily& f) {
    ZetaSeries acc = family_member(f, 0);
    for (int nu = 1; nu < 13; ++nu) acc += family_member(f, nu);
    return acc;
}

/// Demote a zeta-coefficient series whose coefficients are all rational.
inline bool demote_rational(const ZetaSeries& s, RationalSeries& out) {
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(std::max<long>(s.known() - s.offset(), 0)));
    for (long u = s.offset(); u < s.known(); ++u) {
        const FieldElement& c = s.coeff_at(u);
        if (c.is_null()) {
            coeffs.emplace_back(0);
            continue;
        }
        if (!c.is_rational()) return false;
        coeffs.push_back(c.rational_part());
    }
    out = RationalSeries::assemble(s.context(), s.offset(), s.known(), std::move(coeffs));
    return true;
}

/// Everything the series-level checks consume, built once per (order, context).
struct ModularSeries {
    long order;
    SeriesContext ctx;

    std::vector<RationalSeries> a;  // a_1..a_6
    RationalSeries eta_series, Delta, E4, E6;
    std::map<unsigned, RationalSeries> eta_pow;  // even powers used by the checks

    std::vector<RationalSeries> A_a;  // 7
    std::vector<RationalSeries> D_a;  // 14
    std::vector<RationalSeries> G_a;  // 13

    // raw power sums sum_nu f_nu^k + f_inf^k evaluated at a; key is k
    std::map<unsigned, RationalSeries> sum_w_a;  // k = 1,2,3,4,5
    std::map<unsigned, RationalSeries> sum_d_a;  // k = 1,2,3,5

    // the same sums at x = eta * a, and the normalized invariants on x
    std::map<std::string, RationalSeries> raw_x;  // "w1".."w5", "d1","d2","d3","d5"
    std::map<std::string, RationalSeries> phi_x;  // "Phi4".."Phi30", "phi12"

    bool rationality_ok = true;
    bool engine_crosscheck_ok = true;

    ModularSeries(long ord)
        : order(ord),
          ctx{312, 312 * ord + 1},
          a(6, RationalSeries(&ctx)),
          eta_series(&ctx),
          Delta(&ctx),
          E4(&ctx),
          E6(&ctx),
          A_a(7, RationalSeries(&ctx)),
          D_a(14, RationalSeries(&ctx)),
          G_a(13, RationalSeries(&ctx)) {}
};

namespace detail {

inline const RationalSeries& eta_power_of(ModularSeries& ms, unsigned k) {
    auto it = ms.eta_pow.find(k);
    if (it != ms.eta_pow.end()) return it->second;
    ms.eta_pow.emplace(k, ms.eta_series.pow(k));
    return ms.eta_pow.at(k);
}

}  // namespace detail

/// Build the full order-13 series stack: theta constants, the substituted
/// A/D/G series, the family power sums (with post-hoc rationality checks and
/// a low-order direct-multiplication cross-check), the x-side sums, and the
/// normalized invariant series.
inline ModularSeries build_modular_series(const FormCatalog& cat, long order, bool parallel = true) {
    ModularSeries ms(order);
    const SeriesContext* ctx = &ms.ctx;

    for (int i = 1; i <= 6; ++i) ms.a[static_cast<std::size_t>(i - 1)] = theta13(i, ctx);
    ms.eta_series = eta(ctx);
    ms.Delta = ms.eta_series.pow(24);
    ms.E4 = eisenstein(4, ctx);
    ms.E6 = eisenstein(6, ctx);

    std::vector<RationalSeries> avec(ms.a.begin(), ms.a.end());
    for (int j = 0; j <= 6; ++j) ms.A_a[j] = substitute_series_rational(cat.A[j], avec);
    for (int j = 0; j <= 13; ++j) ms.D_a[j] = substitute_series_rational(cat.D[j], avec);
    for (int j = 0; j <= 12; ++j) {
        RationalSeries g(ctx);
        for (const auto& t : detail::g_recipe_primary()[j]) {
            RationalSeries prod = ms.D_a[t.a] * ms.D_a[t.b];
            prod.scale(Rational(t.coef));
            g += prod;
        }
        ms.G_a[j] = std::move(g);
    }

    // zeta-graded families
    ZetaGradedFamily fw(ctx);
    fw.comp[0] = ms.A_a[0];
    const auto& pat = detail::w_exponent_pattern();
    for (int j = 1; j <= 6; ++j) fw.comp[pat[j - 1]] = ms.A_a[j];
    ZetaGradedFamily fd(ctx);
    fd.comp[0] = ms.G_a[0];
    fd.comp[0].scale(Rational(-13));
    for (int j = 1; j <= 12; ++j) fd.comp[j] = ms.G_a[j];

    ZetaGradedFamily fw2 = family_product(fw, fw, parallel);
    ZetaGradedFamily fw4 = family_product(fw2, fw2, parallel);
    ZetaGradedFamily fw6 = family_product(fw4, fw2, parallel);
    ZetaGradedFamily fw8 = family_product(fw4, fw4, parallel);
    ZetaGradedFamily fw10 = family_product(fw8, fw2, parallel);
    ZetaGradedFamily fd2 = family_product(fd, fd, parallel);
    ZetaGradedFamily fd3 = family_product(fd2, fd, parallel);
    ZetaGradedFamily fd5 = family_product(fd3, fd2, parallel);

    // low-order cross-check: the jointly-computed squares agree with direct
    // per-member series multiplication
    {
        const long bound = std::min<long>(ctx->trunc_units, 312 * 6 + 1);
        for (int nu : {0, 5}) {
            ZetaSeries phi_nu = family_member(fw, nu).truncated(bound);
            ZetaSeries direct = phi_nu * phi_nu;
            if (!direct.agrees_with(family_member(fw2, nu), bound)) ms.engine_crosscheck_ok = false;
            ZetaSeries d_nu = family_member(fd, nu).truncated(bound);
            ZetaSeries direct2 = d_nu * d_nu;
            if (!direct2.agrees_with(family_member(fd2, nu), bound)) ms.engine_crosscheck_ok = false;
        }
    }

    // infinity members at a
    RationalSeries w_inf = ms.A_a[0] * ms.A_a[0];
    w_inf.scale(Rational(13));
    RationalSeries d_inf = ms.G_a[0];
    d_inf.scale(Rational(169));

    auto finish_sum = [&](const ZetaGradedFamily& fam, const RationalSeries& inf_member, unsigned inf_pow,
                          std::map<unsigned, RationalSeries>& dest, unsigned key) {
        ZetaSeries total = family_member_sum(fam);
        total += promote(inf_pow == 1 ? inf_member : inf_member.pow(inf_pow), zeta13_spec());
        RationalSeries rational(&ms.ctx);
        if (!demote_rational(total, rational)) ms.rationality_ok = false;
        dest.emplace(key, std::move(rational));
    };

    // w_nu = phi_nu^2, so the k-th power sum of the w family reads off fw^{2k}
    finish_sum(fw2, w_inf, 1, ms.sum_w_a, 1);
    finish_sum(fw4, w_inf, 2, ms.sum_w_a, 2);
    finish_sum(fw6, w_inf, 3, ms.sum_w_a, 3);
    finish_sum(fw8, w_inf, 4, ms.sum_w_a, 4);
    finish_sum(fw10, w_inf, 5, ms.sum_w_a, 5);
    finish_sum(fd, d_inf, 1, ms.sum_d_a, 1);
    finish_sum(fd2, d_inf, 2, ms.sum_d_a, 2);
    finish_sum(fd3, d_inf, 3, ms.sum_d_a, 3);
    finish_sum(fd5, d_inf, 5, ms.sum_d_a, 5);

    // x-side raw sums: a form of degree d at x = eta*a is eta^d times its
    // value at a; the w-power sums have degree 4k, the delta ones 6k
    for (unsigned k = 1; k <= 5; ++k) {
        ms.raw_x.emplace("w" + std::to_string(k), detail::eta_power_of(ms, 4 * k) * ms.sum_w_a.at(k));
        if (k == 1 || k == 2 || k == 3 || k == 5)
            ms.raw_x.emplace("d" + std::to_string(k), detail::eta_power_of(ms, 6 * k) * ms.sum_d_a.at(k));
    }

    // normalized invariants on x
    auto scaled = [&](const std::string& raw, const Rational& norm) {
        RationalSeries s = ms.raw_x.at(raw);
        s.scale(norm);
        return s;
    };
    ms.phi_x.emplace("Phi4", scaled("w1", Rational(1)));
    ms.phi_x.emplace("Phi8", scaled("w2", Rational(1)));
    ms.phi_x.emplace("Phi12", scaled("d2", Rational(-1, 676)));
    ms.phi_x.emplace("Phi12p", scaled("w3", Rational(-1, 390)));
    ms.phi_x.emplace("Phi16", scaled("w4", Rational(1)));
    ms.phi_x.emplace("Phi18", scaled("d3", Rational(1, 78)));
    ms.phi_x.emplace("Phi20", scaled("w5", Rational(1, 325)));
    ms.phi_x.emplace("Phi30", scaled("d5", Rational(-1, 17095)));
    ms.phi_x.emplace("phi12", ms.phi_x.at("Phi12") - ms.phi_x.at("Phi12p"));

    return ms;
}

}  // namespace x13e8
