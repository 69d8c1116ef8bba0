#pragma once

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "x13e8/forms.hpp"
#include "x13e8/json_io.hpp"
#include "x13e8/modular_pipeline.hpp"
#include "x13e8/newton.hpp"
#include "x13e8/qexp.hpp"
#include "x13e8/report.hpp"

namespace x13e8 {

namespace detail {

inline std::string fe_str(const FieldElement& e) { return e.str(); }

/// Deterministic integer draw in [-bound, bound] (independent of the
/// standard library's distribution implementation).
inline long draw_int(std::mt19937_64& rng, long bound) {
    return static_cast<long>(rng() % static_cast<unsigned long long>(2 * bound + 1)) - bound;
}

}  // namespace detail

/// The identity-checking engine: every claim in scope is a named check that
/// produces a CheckResult; run_suite assembles them into a Report with a
/// deterministic order and content given the configuration.
class Verifier {
public:
    Verifier(const FormCatalog& cat, VerifyConfig cfg) : cat_(cat), cfg_(std::move(cfg)) {
        if (cfg_.order < 3) throw std::invalid_argument("config: order must be >= 3");
    }

    // -- matrix layer ------------------------------------------------------

    CheckResult check_group_relations() {
        CheckResult r{"group_relations", CheckMethod::symbolic};
        auto t13 = cat_.T.pow(13).scalar_of_identity();
        r.expect(t13.has_value() && *t13 == cyc_int(1), "T^13 = identity exactly");
        auto s2 = (cat_.S * cat_.S).scalar_of_identity();
        r.expect(s2.has_value(), "S^2 is a scalar multiple of the identity");
        if (s2) r.note("scalar_S2", detail::fe_str(*s2));
        auto st3 = (cat_.S * cat_.T).pow(3).scalar_of_identity();
        r.expect(st3.has_value(), "(ST)^3 is a scalar multiple of the identity");
        if (st3) r.note("scalar_ST3", detail::fe_str(*st3));
        auto h6 = cat_.H.pow(6).scalar_of_identity();
        r.expect(h6.has_value(), "H^6 is a scalar multiple of the identity");
        if (h6) r.note("scalar_H6", detail::fe_str(*h6));
        SquareMatrix conj = cat_.H.inverse() * cat_.T * cat_.H;
        auto lam = conj.scalar_multiple_of(-cat_.T.pow(4));
        r.expect(lam.has_value(), "H^{-1} T H = -T^4 up to a scalar");
        if (lam) r.note("scalar_HTH_vs_negT4", detail::fe_str(*lam));
        auto lw = cat_.H_word.scalar_multiple_of(cat_.H);
        r.expect(lw.has_value(), "generator word reproduces H up to a scalar");
        if (lw) r.note("scalar_H_word", detail::fe_str(*lw));
        return r;
    }

    // -- transformation laws -------------------------------------------------

    CheckResult check_a_transform() {
        CheckResult r{"a_transform", CheckMethod::symbolic};
        for (int nu = 0; nu < 13; ++nu) {
            SparsePolynomial lhs = cat_.A[0].substitute_linear(cat_.st_pow(nu)) * cat_.sqrt13;
            r.expect(lhs == cat_.phi[nu], "sqrt13 ST^" + std::to_string(nu) + "(A_0) equals the zeta combination");
        }
        // the squares reproduce the quartic roots (nu = 7 spot check)
        r.expect(cat_.phi[7] * cat_.phi[7] == cat_.w[7], "phi_7^2 = w_7");
        r.note("nu_checked", "0..12");
        return r;
    }

    CheckResult check_d_transform() {
        CheckResult r{"d_transform", CheckMethod::symbolic};
        const auto& rc = cat_.r;
        int working_pairs = 0;
        int winner = -1;
        for (int sp = 0; sp < 4; ++sp) {
            FieldElement r2 = (sp & 1) ? -rc.r2 : rc.r2;
            FieldElement r4 = (sp & 2) ? -rc.r4 : rc.r4;
            if (d_rows_hold(0, r2, r4)) {
                ++working_pairs;
                winner = sp;
            }
        }
        if (working_pairs == 0) {
            r.status = CheckStatus::error;
            r.note("ERROR", "no sign assignment for (r2, r4) satisfies the transformation law");
            return r;
        }
        r.expect(working_pairs == 1, "the sign pair for (r2, r4) is unique");
        r.expect(winner == 0, "resolved signs match the recorded constants r2 = theta1-theta3, r4 = theta2-theta4");
        r.note("resolved_r2", detail::fe_str(rc.r2));
        r.note("resolved_r4", detail::fe_str(rc.r4));
        for (int nu = 0; nu < 13; ++nu)
            r.expect(d_rows_hold(nu, rc.r2, rc.r4), "both cubic rows hold at nu = " + std::to_string(nu));
        // sign-sensitivity control
        r.expect(!d_rows_hold(0, -rc.r2, rc.r4), "negative control: flipping r2 alone breaks the law");
        return r;
    }

    CheckResult check_g_transform() {
        CheckResult r{"g_transform", CheckMethod::symbolic};
        for (int nu = 0; nu < 13; ++nu) {
            SparsePolynomial lhs = cat_.G[0].substitute_linear(cat_.st_pow(nu)) * cyc_int(169);
            r.expect(lhs == cat_.delta[nu], "13^2 ST^" + std::to_string(nu) + "(G_0) equals delta_" + std::to_string(nu));
        }
        r.expect(cat_.G[0].substitute_linear(cat_.T) == cat_.G[0], "G_0 is T-invariant");
        r.expect(cat_.G[0].substitute_linear(cat_.H) == cat_.G[0], "G_0 is H-invariant");
        return r;
    }

    CheckResult check_delta_sum() {
        CheckResult r{"delta_sum", CheckMethod::symbolic};
        SparsePolynomial s = SparsePolynomial::zero(cat_.R6);
        for (const auto& d : cat_.delta) s += d;
        r.expect(s.is_zero(), "sum of the 14 delta forms is the zero polynomial");
        r.note("terms_after_cancellation", std::to_string(s.term_count()));
        return r;
    }

    CheckResult check_g_table() {
        CheckResult r{"g_table", CheckMethod::symbolic};
        for (int j = 0; j <= 12; ++j) {
            SparsePolynomial diff = cat_.G[j] - cat_.G_alt[j];
            if (j == 6) {
                SparsePolynomial expected = cat_.D[12] * cat_.D[7];
                expected.scale(Rational(-2));
                bool localized = diff == expected;
                r.expect(localized, "G_6 difference localizes to the -2 D_12 D_7 term");
                if (localized) r.note("G6_defect", "second printing omits the -2 D_12 D_7 product (unreadable factor)");
            } else if (!diff.is_zero()) {
                r.status = CheckStatus::fail;
                r.note("G" + std::to_string(j) + "_differs", polynomial_to_json(diff).dump());
            }
        }
        r.note("tables_compared", "13 sextic forms, both printings");
        return r;
    }

    // -- field layer ---------------------------------------------------------

    CheckResult check_field_layer() {
        CheckResult r{"field_layer", CheckMethod::symbolic};
        auto th = theta_periods();
        for (int i = 0; i < 4; ++i) {
            FieldElement q = th[i].pow(4) + th[i].pow(3) + cyc_int(2) * th[i].pow(2) - cyc_int(4) * th[i] + cyc_int(3);
            r.expect(q.is_zero(), "theta_" + std::to_string(i + 1) + " satisfies z^4+z^3+2z^2-4z+3 = 0");
        }
        auto abg = alpha_beta_gamma();
        r.expect(abg[0] + abg[1] + abg[2] == cat_.sqrt13, "alpha + beta + gamma = sqrt13");
        r.expect(cat_.sqrt13 * cat_.sqrt13 == cyc_int(13), "gauss sum squares to 13");
        r.expect(cat_.sqrt13.embed().real() > 0, "gauss sum embeds to the positive square root");
        const auto& rc = cat_.r;
        FieldElement half = cyc_rat(Rational(1, 2));
        r.expect(rc.r1 * rc.r1 == cyc_int(-13) - cyc_int(2) * cat_.sqrt13, "r1^2 = -13 - 2 sqrt13");
        r.expect(rc.r2 * rc.r2 == (cyc_int(-13) + cyc_int(3) * cat_.sqrt13) * half, "r2^2 = (-13 + 3 sqrt13)/2");
        r.expect(rc.r3 * rc.r3 == cyc_int(-13) + cyc_int(2) * cat_.sqrt13, "r3^2 = -13 + 2 sqrt13");
        r.expect(rc.r4 * rc.r4 == (cyc_int(-13) - cyc_int(3) * cat_.sqrt13) * half, "r4^2 = (-13 - 3 sqrt13)/2");
        return r;
    }

    // -- invariance ----------------------------------------------------------

    CheckResult check_invariance() {
        CheckResult r{"invariance", CheckMethod::schwartz_zippel};
        r.seed = cfg_.seed;
        std::mt19937_64 rng(static_cast<unsigned long long>(cfg_.seed));
        const int points = 20;
        std::vector<const SquareMatrix*> gens = {&cat_.S, &cat_.T};
        const char* gen_names[2] = {"S", "T"};
        for (int g = 0; g < 2; ++g) {
            bool all_ok = true;
            for (int p = 0; p < points; ++p) {
                std::vector<FieldElement> pt;
                for (int i = 0; i < 6; ++i) pt.push_back(cyc_int(detail::draw_int(rng, 1000000)));
                std::vector<FieldElement> mpt = gens[g]->apply(pt);
                auto w_x = cat_.w_values(pt), w_mx = cat_.w_values(mpt);
                auto d_x = cat_.delta_values(pt), d_mx = cat_.delta_values(mpt);
                for (const auto& spec : invariant_table()) {
                    const auto& vx = spec.family == RootFamily::w ? w_x : d_x;
                    const auto& vmx = spec.family == RootFamily::w ? w_mx : d_mx;
                    FieldElement sx = FieldElement::zero(cat_.F), smx = FieldElement::zero(cat_.F);
                    for (const auto& v : vx) sx += v.pow(spec.power);
                    for (const auto& v : vmx) smx += v.pow(spec.power);
                    if (!(sx == smx)) {
                        all_ok = false;
                        r.expect(false, spec.label + " invariance under " + gen_names[g] + " at point " +
                                            std::to_string(p));
                    }
                }
            }
            r.note(std::string("schwartz_zippel_") + gen_names[g],
                   all_ok ? "20 points x 8 invariants, all exact" : "FAILED");
        }

        // symbolic invariance for the two low-degree invariants
        bool sym4 = symbolic_invariant_ok(RootFamily::w, 1);
        bool sym8 = symbolic_invariant_ok(RootFamily::w, 2);
        r.expect(sym4, "Phi4 symbolic invariance under S and T");
        r.expect(sym8, "Phi8 symbolic invariance under S and T");
        r.note("method_agreement_Phi4", sym4 ? "symbolic and randomized checks agree" : "DISAGREE");
        r.note("method_agreement_Phi8", sym8 ? "symbolic and randomized checks agree" : "DISAGREE");
        if (cfg_.heavy_symbolic) {
            r.expect(symbolic_invariant_ok(RootFamily::delta, 2), "Phi12 symbolic invariance under S and T");
            r.expect(symbolic_invariant_ok(RootFamily::w, 3), "Phi12' symbolic invariance under S and T");
            r.expect(symbolic_invariant_ok(RootFamily::w, 4), "Phi16 symbolic invariance under S and T");
            r.note("heavy_symbolic", "degree 12 and 16 expansions verified");
        }

        // negative control: a diagonal matrix outside the group
        SquareMatrix bad = SquareMatrix::identity(cat_.F, 6);
        bad.at(0, 0) = cyc_int(2);
        std::vector<FieldElement> pt;
        for (int i = 0; i < 6; ++i) pt.push_back(cyc_int(detail::draw_int(rng, 1000000)));
        FieldElement before = cat_.eval_invariant("Phi4", pt);
        FieldElement after = cat_.eval_invariant("Phi4", bad.apply(pt));
        r.expect(!(before == after), "negative control: diag(2,1,1,1,1,1) breaks Phi4 invariance");
        return r;
    }

    /// Single-label invariance check. The symbolic route carries a budget
    /// guard: expansions above degree 16 are refused with an error result.
    CheckResult check_invariance_label(const std::string& label, CheckMethod method, int points = 20) {
        CheckResult r{"invariance_" + label, method};
        const InvariantSpec& spec = invariant_spec(label);
        if (method == CheckMethod::symbolic) {
            if (spec.degree > 16) {
                r.status = CheckStatus::error;
                r.note("ERROR", "degree " + std::to_string(spec.degree) +
                                    " exceeds the symbolic budget; use the schwartz_zippel method");
                return r;
            }
            r.expect(symbolic_invariant_ok(spec.family, spec.power), label + " symbolic invariance under S and T");
            return r;
        }
        r.seed = cfg_.seed;
        std::mt19937_64 rng(static_cast<unsigned long long>(cfg_.seed));
        for (const SquareMatrix* m : {&cat_.S, &cat_.T}) {
            for (int p = 0; p < points; ++p) {
                std::vector<FieldElement> pt;
                for (int i = 0; i < 6; ++i) pt.push_back(cyc_int(detail::draw_int(rng, 1000000)));
                FieldElement at_pt = cat_.eval_invariant(label, pt);
                FieldElement at_mpt = cat_.eval_invariant(label, m->apply(pt));
                if (!(at_pt == at_mpt)) {
                    r.expect(false, label + " invariance at point " + std::to_string(p));
                    return r;
                }
            }
        }
        r.note("points_per_generator", std::to_string(points));
        return r;
    }

    // -- series checks -------------------------------------------------------

    CheckResult check_theorem_1_1() {
        CheckResult r{"theorem_1_1", CheckMethod::qseries};
        ModularSeries& ms = series();
        const long bound = 312 * cfg_.order + 1;
        r.expect(ms.rationality_ok, "all nu-summed series have vanishing zeta coordinates");
        r.expect(ms.engine_crosscheck_ok, "joint family powers agree with direct per-member multiplication");
        auto vanish = [&](const char* label) {
            const RationalSeries& s = ms.phi_x.at(label);
            r.expect(s.known() >= bound, std::string(label) + " known through the requested order");
            r.expect(s.is_zero(), std::string(label) + "(x) = 0 through q^" + std::to_string(cfg_.order));
        };
        vanish("Phi4");
        vanish("Phi8");
        vanish("Phi16");
        auto match = [&](const char* label, const RationalSeries& target, const std::string& what) {
            const RationalSeries& s = ms.phi_x.at(label);
            r.expect(s.known() >= bound && target.known() >= bound,
                     std::string(label) + " and target known through the requested order");
            r.expect(s.agrees_with(target, bound), std::string(label) + "(x) = " + what + " coefficientwise");
        };
        match("Phi12", ms.Delta, "Delta");
        match("Phi12p", ms.Delta, "Delta");
        match("Phi18", ms.Delta * ms.E6, "Delta E6");
        match("Phi20", ms.eta_series.pow(8) * ms.Delta * ms.E4, "eta^8 Delta E4");
        match("Phi30", ms.Delta * ms.Delta * ms.E6, "Delta^2 E6");
        r.note("coefficients_each", std::to_string(cfg_.order));

        // raw leading terms as printed in the proof computations
        struct Lead {
            const char* key;
            long num, den;
            long coeff;
        };
        const Lead leads[5] = {{"d2", 1, 1, -676}, {"w3", 1, 1, -390}, {"d3", 1, 1, 78}, {"w5", 4, 3, 325},
                               {"d5", 2, 1, -17095}};
        for (const auto& L : leads) {
            const RationalSeries& s = ms.raw_x.at(L.key);
            bool ok = s.valuation_units() == ms.ctx.units(L.num, L.den) &&
                      s.coeff_at(s.valuation_units()) == Rational(L.coeff);
            r.expect(ok, std::string("raw sum ") + L.key + " has the printed leading term");
            r.note(std::string("raw_") + L.key, leading_term_text(s));
        }
        // the series-level echo of the delta-sum identity
        r.expect(ms.sum_d_a.at(1).is_zero(), "sum of substituted delta series vanishes to full order");
        return r;
    }

    CheckResult check_e8_equation() {
        CheckResult r{"e8_equation", CheckMethod::qseries};
        ModularSeries& ms = series();
        const RationalSeries& p12 = ms.phi_x.at("Phi12");
        const RationalSeries& p20 = ms.phi_x.at("Phi20");
        const RationalSeries& p30 = ms.phi_x.at("Phi30");
        RationalSeries lhs = p20.pow(3) - p30.pow(2);
        RationalSeries rhs = p12.pow(5);
        rhs.scale(Rational(1728));
        RationalSeries diff = lhs - rhs;
        r.expect(diff.is_zero(), "Phi20^3 - Phi30^2 - 1728 Phi12^5 = 0 on series");
        r.note("checked_through", "q^" + std::to_string(diff.known() / 312));

        // the independent generator-level identity
        RationalSeries gen = ms.Delta.pow(4) * (ms.E4.pow(3) - ms.E6.pow(2));
        RationalSeries d5 = ms.Delta.pow(5);
        d5.scale(Rational(1728));
        r.expect((gen - d5).is_zero(), "Delta^4 (E4^3 - E6^2) = 1728 Delta^5 from generator series alone");

        r.expect((p12 * ms.phi_x.at("Phi18") - p30).is_zero(), "Phi12 Phi18 - Phi30 = 0 on series");
        return r;
    }

    CheckResult check_curve_c() {
        CheckResult r{"curve_C", CheckMethod::qseries};
        ModularSeries& ms = series();
        for (const char* label : {"Phi4", "Phi8", "phi12", "Phi16"})
            r.expect(ms.phi_x.at(label).is_zero(),
                     std::string(label) + "(x) = 0 through q^" + std::to_string(cfg_.order));
        // sanity control: a random rational point off the curve
        std::mt19937_64 rng(static_cast<unsigned long long>(cfg_.seed) + 1);
        int draws = 0;
        FieldElement value;
        do {
            std::vector<FieldElement> pt;
            for (int i = 0; i < 6; ++i) pt.push_back(cyc_int(detail::draw_int(rng, 50)));
            value = cat_.eval_invariant("Phi4", pt);
            ++draws;
        } while (value.is_zero() && draws < 5);
        r.expect(!value.is_zero(), "negative control: Phi4 is nonzero at a random rational point");
        r.note("control_draws", std::to_string(draws));
        return r;
    }

    CheckResult check_icosahedral() {
        CheckResult r{"icosahedral", CheckMethod::qseries};
        const auto& ico = icosahedral_forms();
        SparsePolynomial rhs = ico.f.pow(5);
        rhs.scale(Rational(1728));
        r.expect(ico.T * ico.T + ico.H.pow(3) == rhs, "T^2 + H^3 = 1728 f^5 exactly");

        SparsePolynomial hess = ico.f.derivative(1).derivative(1) * ico.f.derivative(2).derivative(2) -
                                ico.f.derivative(1).derivative(2) * ico.f.derivative(1).derivative(2);
        hess.scale(Rational(1, 121));
        r.expect(hess == ico.H, "Hessian determinant / 121 reproduces H");
        SparsePolynomial jac =
            ico.f.derivative(1) * ico.H.derivative(2) - ico.f.derivative(2) * ico.H.derivative(1);
        jac.scale(Rational(-1, 20));
        auto factor = jac == ico.T ? "1" : (jac == -ico.T ? "-1" : "none");
        r.expect(jac == ico.T || jac == -ico.T, "-(1/20) Jacobian determinant is proportional to T");
        r.note("jacobian_factor", factor);

        SeriesContext c5{120, 120 * cfg_.order + 1};
        RationalSeries av = theta5('a', &c5), bv = theta5('b', &c5);
        RationalSeries et = eta(&c5);
        std::vector<RationalSeries> xs = {et * av, et * bv};
        RationalSeries delta = et.pow(24);
        r.expect(substitute_series_rational(ico.f, xs).agrees_with(-delta), "f(x1, x2) = -Delta through order");
        RationalSeries h_target = et.pow(8) * delta * eisenstein(4, &c5);
        r.expect(substitute_series_rational(ico.H, xs).agrees_with(-h_target),
                 "H(x1, x2) = -eta^8 Delta E4 through order");
        RationalSeries t_target = delta * delta * eisenstein(6, &c5);
        r.expect(substitute_series_rational(ico.T, xs).agrees_with(t_target),
                 "T(x1, x2) = Delta^2 E6 through order");
        return r;
    }

    // -- numeric transformation laws ------------------------------------------

    CheckResult check_prop_3_2() {
        CheckResult r{"prop_3_2", CheckMethod::numeric};
        using cd = std::complex<double>;
        const std::vector<cd> samples = {{0.0, 1.0}, {0.0, 2.0}, {0.3, 0.8}, {-0.4, 1.1}, {0.1, 0.5}};
        const double tol = cfg_.tolerance;
        // numeric S and T
        cd s_num[6][6];
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) s_num[i][j] = cat_.S.at(i, j).embed();
        static const int texp[6] = {7, 11, 8, 6, 2, 5};
        const cd im(0.0, 1.0);
        double worst_t = 0.0, worst_s = 0.0, worst_wrong_branch = 1e300;
        for (const cd& z : samples) {
            cd az[6], az1[6], azinv[6];
            for (int i = 0; i < 6; ++i) {
                az[i] = numeric_theta13(i + 1, z);
                az1[i] = numeric_theta13(i + 1, z + 1.0);
                azinv[i] = numeric_theta13(i + 1, -1.0 / z);
            }
            // translation law: A(z+1) = e^{-3 pi i/4} T A(z)
            cd mult_t = std::exp(-3.0 * M_PI / 4.0 * im);
            for (int i = 0; i < 6; ++i) {
                cd rhs = mult_t * std::exp(2.0 * M_PI * im * (static_cast<double>(texp[i]) / 13.0)) * az[i];
                worst_t = std::max(worst_t, std::abs(az1[i] - rhs));
            }
            // inversion law: A(-1/z) = e^{pi i/4} sqrt(z) S A(z), 0 < arg sqrt(z) <= pi/2
            cd root = std::sqrt(z);
            if (std::arg(root) <= 0.0 || std::arg(root) > M_PI / 2.0 + 1e-12) root = -root;
            cd mult_s = std::exp(M_PI / 4.0 * im) * root;
            double wb = 0.0;
            for (int i = 0; i < 6; ++i) {
                cd acc(0.0, 0.0);
                for (int j = 0; j < 6; ++j) acc += s_num[i][j] * az[j];
                worst_s = std::max(worst_s, std::abs(azinv[i] - mult_s * acc));
                wb = std::max(wb, std::abs(azinv[i] + mult_s * acc));  // negated branch
            }
            worst_wrong_branch = std::min(worst_wrong_branch, wb);
        }
        r.expect(worst_t < tol, "translation law residual below tolerance at all samples");
        r.expect(worst_s < tol, "inversion law residual below tolerance at all samples");
        r.expect(worst_wrong_branch > 1e3 * tol, "negative control: wrong sqrt branch exceeds tolerance");
        std::ostringstream os;
        os.precision(3);
        os << std::scientific << worst_t;
        r.note("max_residual_translation", os.str());
        os.str("");
        os << std::scientific << worst_s;
        r.note("max_residual_inversion", os.str());
        os.str("");
        os << std::scientific << worst_wrong_branch;
        r.note("min_wrong_branch_residual", os.str());
        return r;
    }

    // -- sections and nodes ----------------------------------------------------

    CheckResult check_sections() {
        CheckResult r{"sections", CheckMethod::symbolic};
        PolyRing r5 = classical_ring();

        // (a) the 28-variable Fano system cut down to Bring's system
        {
            PolyRing r28{28, q_spec()};  // w_0..w_12, w_inf, d_0..d_12, d_inf
            auto wvar = [&](int j) { return SparsePolynomial::variable(r28, j + 1); };
            auto dvar = [&](int j) { return SparsePolynomial::variable(r28, 15 + j); };
            SparsePolynomial e1 = SparsePolynomial::zero(r28), e2 = SparsePolynomial::zero(r28),
                             e3 = SparsePolynomial::zero(r28);
            for (int j = 0; j <= 13; ++j) {
                e1 += wvar(j);
                e2 += wvar(j).pow(2);
                e3 += wvar(j).pow(3);
            }
            SparsePolynomial dsq = SparsePolynomial::zero(r28);
            for (int j = 0; j <= 13; ++j) dsq += dvar(j).pow(2);
            dsq.scale(Rational(15, 26));
            e3 -= dsq;
            // hyperplanes: w_5..w_12 = w_inf = 0, all delta = 0; survivors w_0..w_4
            std::vector<int> target(28, 0);
            for (int j = 0; j <= 4; ++j) target[j] = j + 1;
            auto bring = bring_system();
            r.expect(e1.project(r5, target) == bring[0], "Bring reduction: first equation is p1");
            r.expect(e2.project(r5, target) == bring[1], "Bring reduction: second equation is p2");
            r.expect(e3.project(r5, target) == bring[2], "Bring reduction: third equation is p3");
        }

        // (b) the 14-variable system cut down to the Fricke octavic
        {
            PolyRing r14{14, q_spec()};
            SparsePolynomial e1 = SparsePolynomial::zero(r14), e2 = SparsePolynomial::zero(r14),
                             e4 = SparsePolynomial::zero(r14);
            for (int j = 1; j <= 14; ++j) {
                e1 += SparsePolynomial::variable(r14, j);
                e2 += SparsePolynomial::variable(r14, j).pow(2);
                e4 += SparsePolynomial::variable(r14, j).pow(4);
            }
            std::vector<int> target(14, 0);
            for (int j = 0; j <= 4; ++j) target[j] = j + 1;
            auto fricke = fricke_system();
            r.expect(e1.project(r5, target) == fricke[0], "Fricke reduction: first equation is p1");
            r.expect(e2.project(r5, target) == fricke[1], "Fricke reduction: second equation is p2");
            r.expect(e4.project(r5, target) == fricke[2], "Fricke reduction: third equation is p4");
        }

        // (c) the quintic-surface section: p2 p3 - (4056/1315) p5 on sigma1 = 0
        {
            PolyRing sr{5, q_spec()};  // variables sigma_1..sigma_5
            auto p = power_sums_in_sigma_ring(sr, 5);
            std::vector<int> kill_sigma1 = {0, 2, 3, 4, 5};
            SparsePolynomial p2 = p[1].project(sr, kill_sigma1);
            SparsePolynomial p3 = p[2].project(sr, kill_sigma1);
            SparsePolynomial p5 = p[4].project(sr, kill_sigma1);
            SparsePolynomial f = p2 * p3;
            SparsePolynomial t = p5;
            t.scale(Rational(4056, 1315));
            f -= t;
            // f should be a scalar multiple of sigma2 sigma3 - (676/413) sigma5
            SparsePolynomial pencil = SparsePolynomial::variable(sr, 2) * SparsePolynomial::variable(sr, 3);
            SparsePolynomial s5 = SparsePolynomial::variable(sr, 5);
            s5.scale(Rational(676, 413));
            pencil -= s5;
            SparsePolynomial scaled = pencil;
            scaled.scale(Rational(2478, 263));
            r.expect(f == scaled, "section reduces to (2478/263) (sigma2 sigma3 - (676/413) sigma5)");
            r.note("pencil_parameter", "(1 : -676/413)");

            // brute-force confirmation in the coordinates: substitute x5 = -(x1+...+x4)
            PolyRing r4{4, q_spec()};
            std::vector<SparsePolynomial> images;
            for (int i = 1; i <= 4; ++i) images.push_back(SparsePolynomial::variable(r4, i));
            SparsePolynomial last = SparsePolynomial::zero(r4);
            for (int i = 1; i <= 4; ++i) last -= SparsePolynomial::variable(r4, i);
            images.push_back(last);
            SparsePolynomial fx = power_sum_poly(r5, 2) * power_sum_poly(r5, 3);
            SparsePolynomial t5 = power_sum_poly(r5, 5);
            t5.scale(Rational(4056, 1315));
            fx -= t5;
            SparsePolynomial lhs = fx.substitute_polys(images);
            SparsePolynomial rhs = elementary_symmetric_poly(r5, 2) * elementary_symmetric_poly(r5, 3);
            SparsePolynomial rs5 = elementary_symmetric_poly(r5, 5);
            rs5.scale(Rational(676, 413));
            rhs -= rs5;
            rhs.scale(Rational(2478, 263));
            r.expect(lhs == rhs.substitute_polys(images), "coordinate-level reduction agrees on sigma1 = 0");
        }

        // coefficient bridge: (13*52)(13*6) / (13*1315) = 4056/1315
        r.expect(Rational(676) * Rational(78) == Rational(4056, 1315) * Rational(17095),
                 "normalization bridge (13*52)(13*6) = (4056/1315)(13*1315)");
        return r;
    }

    CheckResult check_quintic_nodes() {
        CheckResult r{"quintic_nodes", CheckMethod::symbolic};
        struct Case {
            const char* name;
            long lambda_s23, mu_s5;  // surface lambda*sigma2*sigma3 + mu*sigma5
            bool needs_sqrt_m7;
            long pt[5][2];  // coordinates as a + b*sqrt(-7)
        };
        const Case cases[4] = {
            {"iii: 2 sigma5 + sigma2 sigma3", 1, 2, true, {{-2, 0}, {-2, 0}, {-2, 0}, {3, 1}, {3, -1}}},
            {"iv: 25 sigma5 - 12 sigma2 sigma3", -12, 25, false, {{-2, 0}, {-2, 0}, {-2, 0}, {3, 0}, {3, 0}}},
            {"v: 50 sigma5 + sigma2 sigma3", 1, 50, false, {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {-4, 0}}},
            {"vi: 2 sigma5 - sigma2 sigma3", -1, 2, false, {{0, 0}, {1, 0}, {-1, 0}, {1, 0}, {-1, 0}}},
        };
        for (const auto& c : cases) {
            const FieldSpec* spec = c.needs_sqrt_m7 ? sqrt_m7_spec() : q_spec();
            PolyRing ring{5, spec};
            SparsePolynomial surf = elementary_symmetric_poly(ring, 2) * elementary_symmetric_poly(ring, 3);
            surf.scale(Rational(c.lambda_s23));
            SparsePolynomial s5 = elementary_symmetric_poly(ring, 5);
            s5.scale(Rational(c.mu_s5));
            surf += s5;
            std::vector<FieldElement> pt;
            for (int i = 0; i < 5; ++i) {
                std::vector<Rational> coords(static_cast<std::size_t>(spec->degree()));
                coords[0] = Rational(c.pt[i][0]);
                if (spec->degree() > 1) coords[1] = Rational(c.pt[i][1]);
                pt.emplace_back(spec, std::move(coords));
            }
            r.expect(elementary_symmetric_poly(ring, 1).evaluate(pt).is_zero(),
                     std::string(c.name) + ": point satisfies sigma1 = 0");
            r.expect(surf.evaluate(pt).is_zero(), std::string(c.name) + ": point lies on the surface");
            // singular on the surface-in-hyperplane: grad(F) parallel to grad(sigma1) = (1,...,1)
            FieldElement g1 = surf.derivative(1).evaluate(pt);
            bool parallel = true;
            for (int i = 2; i <= 5; ++i)
                if (!(surf.derivative(i).evaluate(pt) == g1)) parallel = false;
            r.expect(parallel, std::string(c.name) + ": gradient is parallel to (1,1,1,1,1), point is singular");
        }
        // negative control on case (iii): a sigma1 = 0 point with non-parallel gradient
        {
            PolyRing ring{5, q_spec()};
            SparsePolynomial surf = elementary_symmetric_poly(ring, 2) * elementary_symmetric_poly(ring, 3);
            SparsePolynomial s5 = elementary_symmetric_poly(ring, 5);
            s5.scale(Rational(2));
            surf += s5;
            std::vector<FieldElement> pt;
            for (long v : {1, 2, 3, -6, 0}) pt.push_back(FieldElement::from_int(q_spec(), v));
            r.expect(elementary_symmetric_poly(ring, 1).evaluate(pt).is_zero(), "control point has sigma1 = 0");
            FieldElement g1 = surf.derivative(1).evaluate(pt);
            bool parallel = true;
            for (int i = 2; i <= 5; ++i)
                if (!(surf.derivative(i).evaluate(pt) == g1)) parallel = false;
            r.expect(!parallel, "negative control: generic point is not singular");
            r.note("control_surface_value", surf.evaluate(pt).str());
        }
        return r;
    }

    // -- orchestration ----------------------------------------------------------

    static const std::vector<std::string>& all_check_names() {
        static const std::vector<std::string> names = {
            "group_relations", "field_layer", "a_transform", "d_transform", "g_transform", "delta_sum",
            "g_table",         "invariance",  "theorem_1_1", "e8_equation", "curve_C",     "icosahedral",
            "prop_3_2",        "sections",    "quintic_nodes"};
        return names;
    }

    static std::vector<std::string> suite_selection(const std::string& suite) {
        if (suite == "all") return all_check_names();
        if (suite == "group") return {"group_relations"};
        if (suite == "field") return {"field_layer"};
        if (suite == "transforms") return {"a_transform", "d_transform", "g_transform", "delta_sum", "g_table"};
        if (suite == "invariance") return {"invariance"};
        if (suite == "series") return {"theorem_1_1", "e8_equation", "curve_C"};
        if (suite == "icosahedral") return {"icosahedral"};
        if (suite == "numeric") return {"prop_3_2"};
        if (suite == "sections") return {"sections", "quintic_nodes"};
        throw std::invalid_argument("unknown suite: " + suite +
                                    " (expected all, group, field, transforms, invariance, series, icosahedral, "
                                    "numeric, sections)");
    }

    Report run_suite() {
        Report rep;
        rep.suite = cfg_.suite;
        rep.config = cfg_;
        for (const std::string& name : suite_selection(cfg_.suite)) {
            auto t0 = std::chrono::steady_clock::now();
            CheckResult res;
            try {
                res = dispatch(name);
            } catch (const std::exception& e) {
                res.name = name;
                res.status = CheckStatus::error;
                res.note("exception", e.what());
            }
            res.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            rep.results.push_back(std::move(res));
        }
        return rep;
    }

private:
    const FormCatalog& cat_;
    VerifyConfig cfg_;
    std::unique_ptr<ModularSeries> series_;

    ModularSeries& series() {
        if (!series_) series_ = std::make_unique<ModularSeries>(build_modular_series(cat_, cfg_.order));
        return *series_;
    }

public:
    /// Power sums of a transformed root family agree with the untransformed
    /// expansion. Degree-16 work (w family, power 4) runs for minutes; it is
    /// only reachable through the heavy-symbolic flag.
    bool symbolic_invariant_ok(RootFamily fam, unsigned power) {
        for (const SquareMatrix* m : {&cat_.S, &cat_.T}) {
            SparsePolynomial transformed = SparsePolynomial::zero(cat_.R6);
            if (fam == RootFamily::w) {
                for (int nu = 0; nu <= 13; ++nu)
                    transformed += cat_.phi[nu].substitute_linear(*m).pow(2 * power);
                if (!(transformed == power_sum(cat_.w, power))) return false;
            } else {
                std::vector<SparsePolynomial> d_img, g_img;
                for (int j = 0; j <= 13; ++j) d_img.push_back(cat_.D[j].substitute_linear(*m));
                for (const auto& row : detail::g_recipe_primary()) {
                    SparsePolynomial g = SparsePolynomial::zero(cat_.R6);
                    for (const auto& t : row) {
                        SparsePolynomial prod = d_img[t.a] * d_img[t.b];
                        prod.scale(Rational(t.coef));
                        g += prod;
                    }
                    g_img.push_back(std::move(g));
                }
                for (int nu = 0; nu < 13; ++nu) {
                    SparsePolynomial d = g_img[0] * cyc_int(-13);
                    for (int j = 1; j <= 12; ++j) d += g_img[j] * zeta_pow(j * nu);
                    transformed += d.pow(power);
                }
                transformed += (g_img[0] * cyc_int(169)).pow(power);
                if (!(transformed == power_sum(cat_.delta, power))) return false;
            }
        }
        return true;
    }

private:
    CheckResult dispatch(const std::string& name) {
        if (name == "group_relations") return check_group_relations();
        if (name == "field_layer") return check_field_layer();
        if (name == "a_transform") return check_a_transform();
        if (name == "d_transform") return check_d_transform();
        if (name == "g_transform") return check_g_transform();
        if (name == "delta_sum") return check_delta_sum();
        if (name == "g_table") return check_g_table();
        if (name == "invariance") return check_invariance();
        if (name == "theorem_1_1") return check_theorem_1_1();
        if (name == "e8_equation") return check_e8_equation();
        if (name == "curve_C") return check_curve_c();
        if (name == "icosahedral") return check_icosahedral();
        if (name == "prop_3_2") return check_prop_3_2();
        if (name == "sections") return check_sections();
        if (name == "quintic_nodes") return check_quintic_nodes();
        throw std::invalid_argument("unknown check: " + name);
    }

    /// Both printed cubic rows at one nu with candidate r2, r4 values.
    bool d_rows_hold(int nu, const FieldElement& r2, const FieldElement& r4) const {
        const auto& rc = cat_.r;
        FieldElement m13s = cyc_int(-13) * cat_.sqrt13;
        const FieldElement row0[14] = {rc.r0, rc.r1, r2, rc.r1, rc.r3, r2,  r2,
                                       r4,    r4,    rc.r1, rc.r3, r4, rc.r3, rc.rinf};
        const FieldElement rowi[14] = {rc.rinf, -rc.r3, -r4, -rc.r3, rc.r1, -r4, -r4,
                                       r2,      r2,     -rc.r3, rc.r1, r2,  rc.r1, -rc.r0};
        SquareMatrix m = cat_.st_pow(nu);
        SparsePolynomial lhs0 = cat_.D[0].substitute_linear(m) * m13s;
        SparsePolynomial lhsi = cat_.D[13].substitute_linear(m) * m13s;
        SparsePolynomial rhs0 = SparsePolynomial::zero(cat_.R6);
        SparsePolynomial rhsi = SparsePolynomial::zero(cat_.R6);
        for (int j = 0; j < 14; ++j) {
            FieldElement zf = j == 13 ? cyc_int(1) : zeta_pow(j * nu);
            rhs0 += cat_.D[j] * (row0[j] * zf);
            rhsi += cat_.D[j] * (rowi[j] * zf);
        }
        return lhs0 == rhs0 && lhsi == rhsi;
    }

};

/// Convenience wrapper: build the catalog, run the configured suite.
inline Report run_suite(const VerifyConfig& cfg) {
    Verifier v(form_catalog(), cfg);
    return v.run_suite();
}

}  // namespace x13e8
