#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "x13e8/field.hpp"

namespace x13e8 {

/// The rationals presented as the (degree-1) field Q[x]/(x).
inline const FieldSpec* q_spec() {
    static const FieldSpec spec("Q", {Rational(0)}, std::complex<double>(0.0, 0.0));
    return &spec;
}

/// Q(zeta_13), modulus the 13th cyclotomic polynomial 1 + x + ... + x^12,
/// with the symbol realized by exp(2*pi*i/13).
inline const FieldSpec* zeta13_spec() {
    static const FieldSpec spec = [] {
        std::vector<Rational> tail(12, Rational(1));
        const double t = 2.0 * M_PI / 13.0;
        return FieldSpec("Q(zeta13)", std::move(tail), std::complex<double>(std::cos(t), std::sin(t)));
    }();
    return &spec;
}

/// Q(sqrt(-7)) = Q[x]/(x^2+7), symbol realized by i*sqrt(7).
inline const FieldSpec* sqrt_m7_spec() {
    static const FieldSpec spec("Q(sqrt-7)", {Rational(7), Rational(0)}, std::complex<double>(0.0, std::sqrt(7.0)));
    return &spec;
}

/// zeta^k in Q(zeta_13), any integer k.
inline FieldElement zeta_pow(long k) {
    const FieldSpec* spec = zeta13_spec();
    long e = k % 13;
    if (e < 0) e += 13;
    std::vector<Rational> c(12);
    if (e < 12) {
        c[static_cast<std::size_t>(e)] = Rational(1);
    } else {
        // zeta^12 = -(1 + zeta + ... + zeta^11)
        for (auto& x : c) x = Rational(-1);
    }
    return FieldElement(spec, std::move(c));
}

inline FieldElement cyc_int(long n) { return FieldElement::from_int(zeta13_spec(), n); }
inline FieldElement cyc_rat(Rational r) { return FieldElement::from_rational(zeta13_spec(), std::move(r)); }

/// sqrt(13) inside Q(zeta_13), as the quadratic Gauss sum
/// sum_{a=1}^{12} legendre(a|13) zeta^a; squares to 13 and embeds positive.
inline FieldElement sqrt13_constant() {
    bool qr[13] = {};
    for (long b = 1; b <= 12; ++b) qr[(b * b) % 13] = true;
    FieldElement g = FieldElement::zero(zeta13_spec());
    for (long a = 1; a <= 12; ++a) g += qr[a] ? zeta_pow(a) : -zeta_pow(a);
    return g;
}

/// The four cubic-period theta values: theta1 = zeta + zeta^3 + zeta^9 and
/// its Galois shifts; each satisfies z^4 + z^3 + 2z^2 - 4z + 3 = 0.
inline std::array<FieldElement, 4> theta_periods() {
    return {
        zeta_pow(1) + zeta_pow(3) + zeta_pow(9),
        zeta_pow(2) + zeta_pow(6) + zeta_pow(5),
        zeta_pow(4) + zeta_pow(12) + zeta_pow(10),
        zeta_pow(8) + zeta_pow(11) + zeta_pow(7),
    };
}

/// alpha = zeta + zeta^12 - zeta^5 - zeta^8 and companions; alpha+beta+gamma = sqrt13.
inline std::array<FieldElement, 3> alpha_beta_gamma() {
    return {
        zeta_pow(1) + zeta_pow(12) - zeta_pow(5) - zeta_pow(8),
        zeta_pow(3) + zeta_pow(10) - zeta_pow(2) - zeta_pow(11),
        zeta_pow(9) + zeta_pow(4) - zeta_pow(6) - zeta_pow(7),
    };
}

/// The six r-constants of the cubic transformation law.
///
/// r1 and r3 are fixed theta-difference combinations. r2 and r4 are square
/// roots of (-13 +- 3*sqrt13)/2; the branch is not a convention here but is
/// pinned by the D-transformation identity, which admits exactly one sign
/// pair, namely r2 = theta1 - theta3 and r4 = theta2 - theta4 (the identity
/// check lives in the verify layer and errors out if no pair works).
struct RConstants {
    FieldElement r0, rinf, r1, r2, r3, r4;
};

inline RConstants r_constants() {
    auto th = theta_periods();
    RConstants r;
    r.r0 = (th[0] - th[2]).scale(Rational(2)) - (th[1] - th[3]).scale(Rational(3));
    r.rinf = (th[3] - th[1]).scale(Rational(2)) - (th[0] - th[2]).scale(Rational(3));
    r.r1 = th[0] - th[2] + th[1] - th[3];
    r.r3 = -(th[0] - th[2] - th[1] + th[3]);
    r.r2 = th[0] - th[2];
    r.r4 = th[1] - th[3];
    return r;
}

}  // namespace x13e8
