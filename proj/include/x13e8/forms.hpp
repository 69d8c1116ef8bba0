#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "x13e8/cyclotomic.hpp"
#include "x13e8/matrix.hpp"
#include "x13e8/newton.hpp"
#include "x13e8/polynomial.hpp"

namespace x13e8 {

namespace detail {

struct TermSpec {
    int coef;
    std::uint16_t e[6];
};

// Senary quadratic forms A_0..A_6.
inline const std::vector<std::vector<TermSpec>>& a_table() {
    static const std::vector<std::vector<TermSpec>> t = {
        {{1, {1, 0, 0, 1, 0, 0}}, {1, {0, 1, 0, 0, 1, 0}}, {1, {0, 0, 1, 0, 0, 1}}},
        {{1, {2, 0, 0, 0, 0, 0}}, {-2, {0, 0, 1, 1, 0, 0}}},
        {{-1, {0, 0, 0, 0, 2, 0}}, {-2, {0, 1, 0, 1, 0, 0}}},
        {{1, {0, 2, 0, 0, 0, 0}}, {-2, {1, 0, 0, 0, 1, 0}}},
        {{1, {0, 0, 2, 0, 0, 0}}, {-2, {0, 1, 0, 0, 0, 1}}},
        {{-1, {0, 0, 0, 2, 0, 0}}, {-2, {1, 0, 0, 0, 0, 1}}},
        {{-1, {0, 0, 0, 0, 0, 2}}, {-2, {0, 0, 1, 0, 1, 0}}},
    };
    return t;
}

// Senary cubic forms D_0..D_12, D_inf (index 13).
inline const std::vector<std::vector<TermSpec>>& d_table() {
    static const std::vector<std::vector<TermSpec>> t = {
        {{1, {1, 1, 1, 0, 0, 0}}},
        {{2, {0, 1, 2, 0, 0, 0}}, {1, {0, 2, 0, 0, 0, 1}}, {-1, {0, 0, 0, 2, 1, 0}}, {1, {1, 0, 0, 0, 1, 1}}},
        {{-1, {0, 0, 0, 0, 0, 3}},
         {1, {0, 2, 0, 1, 0, 0}},
         {-2, {0, 1, 0, 0, 2, 0}},
         {1, {1, 0, 0, 1, 1, 0}},
         {3, {0, 0, 1, 0, 1, 1}}},
        {{2, {1, 2, 0, 0, 0, 0}}, {1, {2, 0, 0, 0, 1, 0}}, {-1, {0, 0, 0, 1, 0, 2}}, {1, {0, 0, 1, 1, 1, 0}}},
        {{-1, {0, 2, 1, 0, 0, 0}}, {1, {1, 0, 0, 0, 0, 2}}, {-2, {0, 0, 0, 2, 0, 1}}, {-1, {1, 0, 1, 0, 1, 0}}},
        {{-1, {0, 0, 0, 3, 0, 0}},
         {1, {0, 0, 2, 0, 1, 0}},
         {-2, {0, 0, 1, 0, 0, 2}},
         {1, {0, 1, 0, 0, 1, 1}},
         {3, {1, 0, 0, 1, 0, 1}}},
        {{-1, {0, 0, 0, 0, 3, 0}},
         {1, {2, 0, 0, 0, 0, 1}},
         {-2, {1, 0, 0, 2, 0, 0}},
         {1, {0, 0, 1, 1, 0, 1}},
         {3, {0, 1, 0, 1, 1, 0}}},
        {{-1, {0, 3, 0, 0, 0, 0}},
         {1, {0, 0, 1, 2, 0, 0}},
         {-1, {1, 0, 1, 0, 0, 1}},
         {-3, {1, 1, 0, 0, 1, 0}},
         {2, {2, 0, 0, 1, 0, 0}}},
        {{-1, {3, 0, 0, 0, 0, 0}},
         {1, {0, 1, 0, 0, 0, 2}},
         {-1, {0, 1, 1, 0, 1, 0}},
         {-3, {1, 0, 1, 1, 0, 0}},
         {2, {0, 0, 2, 0, 0, 1}}},
        {{2, {2, 0, 1, 0, 0, 0}}, {1, {0, 0, 2, 1, 0, 0}}, {-1, {0, 0, 0, 0, 2, 1}}, {1, {0, 1, 0, 1, 0, 1}}},
        {{-1, {1, 0, 2, 0, 0, 0}}, {1, {0, 1, 0, 2, 0, 0}}, {-2, {0, 0, 0, 1, 2, 0}}, {-1, {1, 1, 0, 0, 0, 1}}},
        {{-1, {0, 0, 3, 0, 0, 0}},
         {1, {1, 0, 0, 0, 2, 0}},
         {-1, {1, 1, 0, 1, 0, 0}},
         {-3, {0, 1, 1, 0, 0, 1}},
         {2, {0, 2, 0, 0, 1, 0}}},
        {{-1, {2, 1, 0, 0, 0, 0}}, {1, {0, 0, 1, 0, 2, 0}}, {-2, {0, 0, 0, 0, 1, 2}}, {-1, {0, 1, 1, 1, 0, 0}}},
        {{1, {0, 0, 0, 1, 1, 1}}},
    };
    return t;
}

struct GTerm {
    int coef;
    int a, b;  // indices into D (13 = the infinity form); a == b for squares
};

// Sextic recipes G_j = sum coef * D_a * D_b, first table.
inline const std::vector<std::vector<GTerm>>& g_recipe_primary() {
    static const std::vector<std::vector<GTerm>> t = {
        {{1, 0, 0}, {1, 13, 13}},
        {{-1, 7, 7}, {2, 0, 1}, {10, 13, 1}, {2, 2, 12}, {-2, 3, 11}, {-4, 4, 10}, {-2, 9, 5}},
        {{-2, 1, 1}, {-4, 0, 2}, {6, 13, 2}, {-2, 4, 11}, {2, 5, 10}, {-2, 6, 9}, {-2, 7, 8}},
        {{-1, 8, 8}, {2, 0, 3}, {10, 13, 3}, {2, 6, 10}, {-2, 9, 7}, {-4, 12, 4}, {-2, 1, 2}},
        {{-1, 2, 2}, {10, 0, 4}, {-2, 13, 4}, {2, 5, 12}, {-2, 9, 8}, {-4, 1, 3}, {-2, 10, 7}},
        {{-2, 9, 9}, {-4, 0, 5}, {6, 13, 5}, {-2, 10, 8}, {2, 6, 12}, {-2, 2, 3}, {-2, 11, 7}},
        {{-2, 3, 3}, {-4, 0, 6}, {6, 13, 6}, {-2, 12, 7}, {2, 2, 4}, {-2, 5, 1}, {-2, 8, 11}},
        {{-2, 10, 10}, {6, 0, 7}, {4, 13, 7}, {-2, 1, 6}, {-2, 2, 5}, {-2, 8, 12}, {-2, 9, 11}},
        {{-2, 4, 4}, {6, 0, 8}, {4, 13, 8}, {-2, 3, 5}, {-2, 6, 2}, {-2, 11, 10}, {-2, 1, 7}},
        {{-1, 11, 11}, {2, 0, 9}, {10, 13, 9}, {2, 5, 4}, {-2, 1, 8}, {-4, 10, 12}, {-2, 3, 6}},
        {{-1, 5, 5}, {10, 0, 10}, {-2, 13, 10}, {2, 6, 4}, {-2, 3, 7}, {-4, 9, 1}, {-2, 12, 11}},
        {{-2, 12, 12}, {6, 0, 11}, {4, 13, 11}, {-2, 9, 2}, {-2, 5, 6}, {-2, 7, 4}, {-2, 3, 8}},
        {{-1, 6, 6}, {10, 0, 12}, {-2, 13, 12}, {2, 2, 10}, {-2, 1, 11}, {-4, 3, 9}, {-2, 4, 8}},
    };
    return t;
}

// Second printing of the same table. Its G_6 line carries a typesetting
// defect (a product with a missing factor symbol, "-2 D_12 <blank>_7"); the
// unreadable product is dropped here and the diff check localizes it.
inline const std::vector<std::vector<GTerm>>& g_recipe_secondary() {
    static const std::vector<std::vector<GTerm>> t = [] {
        auto copy = g_recipe_primary();
        auto& g6 = copy[6];
        for (std::size_t i = 0; i < g6.size(); ++i) {
            if (g6[i].coef == -2 && g6[i].a == 12 && g6[i].b == 7) {
                g6.erase(g6.begin() + static_cast<long>(i));
                break;
            }
        }
        return copy;
    }();
    return t;
}

// Exponent pattern of the quartic root family: w_nu uses zeta^{e_j nu} on A_j.
inline const std::array<int, 6>& w_exponent_pattern() {
    static const std::array<int, 6> e = {1, 4, 9, 3, 12, 10};
    return e;
}

// S matrix entry pattern: entry (i,j) is -(zeta^a - zeta^b)/sqrt(13).
inline const std::array<std::array<std::pair<int, int>, 6>, 6>& s_pairs() {
    using P = std::pair<int, int>;
    static const std::array<std::array<P, 6>, 6> t = {{
        {{P{12, 1}, P{10, 3}, P{4, 9}, P{5, 8}, P{2, 11}, P{6, 7}}},
        {{P{10, 3}, P{4, 9}, P{12, 1}, P{2, 11}, P{6, 7}, P{5, 8}}},
        {{P{4, 9}, P{12, 1}, P{10, 3}, P{6, 7}, P{5, 8}, P{2, 11}}},
        {{P{5, 8}, P{2, 11}, P{6, 7}, P{1, 12}, P{3, 10}, P{9, 4}}},
        {{P{2, 11}, P{6, 7}, P{5, 8}, P{3, 10}, P{9, 4}, P{1, 12}}},
        {{P{6, 7}, P{5, 8}, P{2, 11}, P{9, 4}, P{1, 12}, P{3, 10}}},
    }};
    return t;
}

inline const std::array<int, 6>& t_exponents() {
    static const std::array<int, 6> e = {7, 11, 8, 6, 2, 5};
    return e;
}

inline const std::array<std::array<int, 6>, 6>& h_rows() {
    static const std::array<std::array<int, 6>, 6> t = {{
        {0, 0, 0, 0, 0, 1},
        {0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 1, 0},
        {0, 0, -1, 0, 0, 0},
        {-1, 0, 0, 0, 0, 0},
        {0, -1, 0, 0, 0, 0},
    }};
    return t;
}

inline SparsePolynomial from_table(PolyRing ring, const std::vector<TermSpec>& specs) {
    std::vector<SparsePolynomial::Term> ts;
    for (const auto& s : specs) {
        Monomial m(6);
        for (int i = 0; i < 6; ++i) m.e[i] = s.e[i];
        ts.emplace_back(std::move(m), FieldElement::from_int(ring.coeff, s.coef));
    }
    return SparsePolynomial::from_terms(ring, std::move(ts));
}

}  // namespace detail

enum class RootFamily { w, delta };

/// Descriptor of one invariant: a normalized power sum over a root family.
/// The degree-(>16) labels are not expanded symbolically by default; the
/// descriptor supports exact evaluation and series substitution regardless.
struct InvariantSpec {
    std::string label;
    RootFamily family;
    unsigned power;
    Rational norm;
    int degree;
};

inline const std::vector<InvariantSpec>& invariant_table() {
    static const std::vector<InvariantSpec> t = {
        {"Phi4", RootFamily::w, 1, Rational(1), 4},
        {"Phi8", RootFamily::w, 2, Rational(1), 8},
        {"Phi12", RootFamily::delta, 2, Rational(-1, 13 * 52), 12},
        {"Phi12p", RootFamily::w, 3, Rational(-1, 13 * 30), 12},
        {"Phi16", RootFamily::w, 4, Rational(1), 16},
        {"Phi18", RootFamily::delta, 3, Rational(1, 13 * 6), 18},
        {"Phi20", RootFamily::w, 5, Rational(1, 13 * 25), 20},
        {"Phi30", RootFamily::delta, 5, Rational(-1, 13 * 1315), 30},
    };
    return t;
}

inline const InvariantSpec& invariant_spec(const std::string& label) {
    for (const auto& s : invariant_table())
        if (s.label == label) return s;
    throw std::invalid_argument("unknown invariant label: " + label);
}

/// Everything the verification suites consume, built once from the printed
/// tables: the generators, the A/D/G forms, the root families and their
/// expanded members, and the r-constants.
struct FormCatalog {
    const FieldSpec* F;
    PolyRing R6;

    SquareMatrix S, T, H, P, Q, H_word;
    FieldElement sqrt13;
    RConstants r;

    std::vector<SparsePolynomial> A;      // A_0..A_6
    std::vector<SparsePolynomial> D;      // D_0..D_12, [13] = D_inf
    std::vector<SparsePolynomial> G;      // G_0..G_12, first table
    std::vector<SparsePolynomial> G_alt;  // G_0..G_12, second table as printed
    std::vector<SparsePolynomial> phi;    // phi_0..phi_12, [13] = phi_inf
    std::vector<SparsePolynomial> w;      // w_0..w_12, [13] = w_inf
    std::vector<SparsePolynomial> delta;  // delta_0..delta_12, [13] = delta_inf

    FormCatalog()
        : F(zeta13_spec()),
          R6{6, F},
          S(F, 6),
          T(F, 6),
          H(F, 6),
          P(F, 6),
          Q(F, 6),
          H_word(F, 6),
          sqrt13(sqrt13_constant()),
          r(r_constants()) {
        build_matrices();
        build_forms();
        build_families();
    }

    /// S T^nu as a single matrix.
    SquareMatrix st_pow(int nu) const { return S * T.pow(static_cast<unsigned>(((nu % 13) + 13) % 13)); }

    std::vector<FieldElement> w_values(const std::vector<FieldElement>& point) const {
        std::array<FieldElement, 7> av;
        for (int j = 0; j <= 6; ++j) av[j] = A[j].evaluate(point);
        const auto& pat = detail::w_exponent_pattern();
        std::vector<FieldElement> out;
        out.reserve(14);
        for (int nu = 0; nu < 13; ++nu) {
            FieldElement phi_nu = av[0];
            for (int j = 1; j <= 6; ++j) phi_nu += zeta_pow(pat[j - 1] * nu) * av[j];
            out.push_back(phi_nu * phi_nu);
        }
        out.push_back(cyc_int(13) * av[0] * av[0]);
        return out;
    }

    std::vector<FieldElement> delta_values(const std::vector<FieldElement>& point) const {
        std::array<FieldElement, 13> gv;
        for (int j = 0; j <= 12; ++j) gv[j] = G[j].evaluate(point);
        std::vector<FieldElement> out;
        out.reserve(14);
        for (int nu = 0; nu < 13; ++nu) {
            FieldElement d = cyc_int(-13) * gv[0];
            for (int j = 1; j <= 12; ++j) d += zeta_pow(j * nu) * gv[j];
            out.push_back(std::move(d));
        }
        out.push_back(cyc_int(169) * gv[0]);
        return out;
    }

    /// Exact value of an invariant (or "phi12") at a point, without ever
    /// expanding the invariant symbolically.
    FieldElement eval_invariant(const std::string& label, const std::vector<FieldElement>& point) const {
        if (label == "phi12")
            return eval_invariant("Phi12", point) - eval_invariant("Phi12p", point);
        const InvariantSpec& spec = invariant_spec(label);
        auto vals = spec.family == RootFamily::w ? w_values(point) : delta_values(point);
        FieldElement acc = FieldElement::zero(F);
        for (const auto& v : vals) acc += v.pow(spec.power);
        acc.scale(spec.norm);
        return acc;
    }

    /// Full symbolic expansion of an invariant. Degree 30 means ~10^5-term
    /// intermediates; callers gate the heavy labels behind a flag.
    SparsePolynomial expand_invariant(const std::string& label) const {
        if (label == "phi12") return expand_invariant("Phi12") - expand_invariant("Phi12p");
        const InvariantSpec& spec = invariant_spec(label);
        const auto& fam = spec.family == RootFamily::w ? w : delta;
        SparsePolynomial p = power_sum(fam, spec.power);
        p.scale(spec.norm);
        return p;
    }

private:
    void build_matrices() {
        FieldElement inv_sqrt13 = sqrt13 * FieldElement::from_rational(F, Rational(1, 13));  // 1/sqrt13 = sqrt13/13
        const auto& pairs = detail::s_pairs();
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                S.at(i, j) = -(inv_sqrt13 * (zeta_pow(pairs[i][j].first) - zeta_pow(pairs[i][j].second)));
        for (int i = 0; i < 6; ++i) T.at(i, i) = zeta_pow(detail::t_exponents()[i]);
        const auto& hr = detail::h_rows();
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) H.at(i, j) = FieldElement::from_int(F, hr[i][j]);
        P = S * T.pow(12) * S;  // S T^{-1} S
        Q = S * T.pow(3);
        H_word = Q.pow(5) * P.pow(2) * P.pow(2) * Q.pow(6) * P.pow(8) * Q.pow(5) * P.pow(2) * P.pow(3) * Q;
    }

    void build_forms() {
        for (const auto& row : detail::a_table()) A.push_back(detail::from_table(R6, row));
        for (const auto& row : detail::d_table()) D.push_back(detail::from_table(R6, row));
        auto build_g = [&](const std::vector<std::vector<detail::GTerm>>& recipe) {
            std::vector<SparsePolynomial> out;
            for (const auto& row : recipe) {
                SparsePolynomial g = SparsePolynomial::zero(R6);
                for (const auto& t : row) {
                    SparsePolynomial prod = D[t.a] * D[t.b];
                    prod.scale(FieldElement::from_int(F, t.coef));
                    g += prod;
                }
                out.push_back(std::move(g));
            }
            return out;
        };
        G = build_g(detail::g_recipe_primary());
        G_alt = build_g(detail::g_recipe_secondary());
    }

    void build_families() {
        const auto& pat = detail::w_exponent_pattern();
        for (int nu = 0; nu < 13; ++nu) {
            SparsePolynomial p = A[0];
            for (int j = 1; j <= 6; ++j) p += A[j] * zeta_pow(pat[j - 1] * nu);
            w.push_back(p * p);
            phi.push_back(std::move(p));
        }
        phi.push_back(A[0] * sqrt13);
        w.push_back(A[0] * A[0] * cyc_int(13));
        for (int nu = 0; nu < 13; ++nu) {
            SparsePolynomial d = G[0] * cyc_int(-13);
            for (int j = 1; j <= 12; ++j) d += G[j] * zeta_pow(j * nu);
            delta.push_back(std::move(d));
        }
        delta.push_back(G[0] * cyc_int(169));
    }
};

/// The catalog is immutable after construction; build it once and share.
inline const FormCatalog& form_catalog() {
    static const FormCatalog cat;
    return cat;
}

enum class FormKind { A, D, G_primary, G_secondary };

/// Printed-form accessor; index 13 stands for the infinity member of D.
inline const SparsePolynomial& build_form(const FormCatalog& cat, FormKind kind, int index) {
    switch (kind) {
        case FormKind::A:
            if (index < 0 || index > 6) throw std::out_of_range("A index must be 0..6");
            return cat.A[index];
        case FormKind::D:
            if (index < 0 || index > 13) throw std::out_of_range("D index must be 0..13 (13 = infinity)");
            return cat.D[index];
        case FormKind::G_primary:
            if (index < 0 || index > 12) throw std::out_of_range("G index must be 0..12");
            return cat.G[index];
        case FormKind::G_secondary:
            if (index < 0 || index > 12) throw std::out_of_range("G index must be 0..12");
            return cat.G_alt[index];
    }
    throw std::invalid_argument("build_form: bad kind");
}

/// Klein's binary-icosahedral invariants in two variables over Q, as printed:
/// f of degree 12, H of degree 20, T of degree 30.
struct IcosahedralForms {
    PolyRing ring{2, q_spec()};
    SparsePolynomial f, H, T;

    IcosahedralForms() : f(ring), H(ring), T(ring) {
        auto mk = [&](std::vector<std::pair<int, std::pair<int, int>>> terms) {
            std::vector<SparsePolynomial::Term> ts;
            for (auto& [c, e] : terms) {
                Monomial m(2);
                m.e[0] = static_cast<std::uint16_t>(e.first);
                m.e[1] = static_cast<std::uint16_t>(e.second);
                ts.emplace_back(std::move(m), FieldElement::from_int(q_spec(), c));
            }
            return SparsePolynomial::from_terms(ring, std::move(ts));
        };
        f = mk({{1, {11, 1}}, {11, {6, 6}}, {-1, {1, 11}}});
        H = mk({{-1, {20, 0}}, {-1, {0, 20}}, {228, {15, 5}}, {-228, {5, 15}}, {-494, {10, 10}}});
        T = mk({{1, {30, 0}}, {1, {0, 30}}, {522, {25, 5}}, {-522, {5, 25}}, {-10005, {20, 10}}, {-10005, {10, 20}}});
    }
};

inline const IcosahedralForms& icosahedral_forms() {
    static const IcosahedralForms ico;
    return ico;
}

/// The classical five-variable systems: Bring {p1,p2,p3}, the Fricke octavic
/// {p1,p2,p4}, and the quintic pencil {sigma1, lambda*sigma2*sigma3 + mu*sigma5}.
inline PolyRing classical_ring() { return PolyRing{5, q_spec()}; }

inline std::vector<SparsePolynomial> bring_system() {
    PolyRing r = classical_ring();
    return {power_sum_poly(r, 1), power_sum_poly(r, 2), power_sum_poly(r, 3)};
}

inline std::vector<SparsePolynomial> fricke_system() {
    PolyRing r = classical_ring();
    return {power_sum_poly(r, 1), power_sum_poly(r, 2), power_sum_poly(r, 4)};
}

inline std::vector<SparsePolynomial> quintic_pencil(const Rational& lambda, const Rational& mu) {
    PolyRing r = classical_ring();
    SparsePolynomial surf = elementary_symmetric_poly(r, 2) * elementary_symmetric_poly(r, 3);
    surf.scale(lambda);
    SparsePolynomial s5 = elementary_symmetric_poly(r, 5);
    s5.scale(mu);
    surf += s5;
    return {elementary_symmetric_poly(r, 1), surf};
}

}  // namespace x13e8
