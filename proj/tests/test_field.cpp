#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <complex>
#include <random>

#include "x13e8/cyclotomic.hpp"
#include "x13e8/field.hpp"

using namespace x13e8;

namespace {

FieldElement random_element(std::mt19937_64& rng, const FieldSpec* spec, int height = 9) {
    std::uniform_int_distribution<long> num(-height, height);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> c;
    c.reserve(spec->degree());
    for (int i = 0; i < spec->degree(); ++i) c.emplace_back(num(rng), den(rng));
    return FieldElement(spec, std::move(c));
}

std::complex<double> root_of_unity(long k) {
    const double t = 2.0 * M_PI * static_cast<double>(((k % 13) + 13) % 13) / 13.0;
    return {std::cos(t), std::sin(t)};
}

}  // namespace

TEST_CASE("zeta powers multiply by exponent addition") {
    CHECK(zeta_pow(1) * zeta_pow(12) == cyc_int(1));
    CHECK(zeta_pow(5) * zeta_pow(8) == cyc_int(1));
    CHECK(zeta_pow(7) * zeta_pow(9) == zeta_pow(16));
    // linearity of coordinates
    FieldElement s = (zeta_pow(1) + zeta_pow(12)) + (zeta_pow(2) + zeta_pow(11));
    FieldElement t = zeta_pow(1) + zeta_pow(2) + zeta_pow(11) + zeta_pow(12);
    CHECK(s == t);
}

TEST_CASE("gauss sum squares to 13, brute force oracle") {
    // independent oracle: multiply the two 12-term sums as formal exponent
    // counts, reduce with zeta^13 = 1 and sum(zeta^i) = 0 only at the end
    bool qr[13] = {};
    for (long b = 1; b <= 12; ++b) qr[(b * b) % 13] = true;
    long counts[13] = {};
    for (long a = 1; a <= 12; ++a)
        for (long b = 1; b <= 12; ++b) {
            long sign = (qr[a] ? 1 : -1) * (qr[b] ? 1 : -1);
            counts[(a + b) % 13] += sign;
        }
    // value = counts[0] + sum_{i>=1} counts[i] zeta^i is rational iff all
    // counts[1..12] agree; then it equals counts[0] - counts[1].
    for (int i = 2; i <= 12; ++i) REQUIRE(counts[i] == counts[1]);
    CHECK(counts[0] - counts[1] == 13);

    FieldElement g = sqrt13_constant();
    CHECK(g * g == cyc_int(13));
    CHECK(g.embed().real() == Catch::Approx(3.6055512754639896).margin(1e-9));
    CHECK(std::abs(g.embed().imag()) < 1e-9);
}

TEST_CASE("alpha + beta + gamma equals sqrt13") {
    auto abg = alpha_beta_gamma();
    CHECK(abg[0] + abg[1] + abg[2] == sqrt13_constant());
}

TEST_CASE("theta periods satisfy the printed quartic") {
    auto th = theta_periods();
    CHECK(th[0] + th[1] + th[2] + th[3] == cyc_int(-1));
    CHECK(th[0] * th[1] * th[2] * th[3] == cyc_int(3));
    // elementary symmetric values 2 and 4 as printed
    FieldElement e2 = FieldElement::zero(zeta13_spec());
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) e2 += th[i] * th[j];
    CHECK(e2 == cyc_int(2));
    FieldElement e3 = FieldElement::zero(zeta13_spec());
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) e3 += th[i] * th[j] * th[k];
    CHECK(e3 == cyc_int(4));
    for (const auto& t : th) {
        FieldElement q = t.pow(4) + t.pow(3) + cyc_int(2) * t.pow(2) - cyc_int(4) * t + cyc_int(3);
        CHECK(q.is_zero());
    }
    // theta1 - theta3 + theta2 - theta4 is a square root of -13 - 2*sqrt13
    FieldElement d = th[0] - th[2] + th[1] - th[3];
    CHECK(d * d == cyc_int(-13) - cyc_int(2) * sqrt13_constant());
}

TEST_CASE("r-constants square to the printed radicands") {
    auto r = r_constants();
    FieldElement s13 = sqrt13_constant();
    CHECK(r.r1 * r.r1 == cyc_int(-13) - cyc_int(2) * s13);
    CHECK(r.r3 * r.r3 == cyc_int(-13) + cyc_int(2) * s13);
    CHECK(r.r2 * r.r2 == (cyc_int(-13) + cyc_int(3) * s13) * cyc_rat(Rational(1, 2)));
    CHECK(r.r4 * r.r4 == (cyc_int(-13) - cyc_int(3) * s13) * cyc_rat(Rational(1, 2)));

    // numeric oracle for r0: sum the defining roots of unity directly
    auto period = [](std::initializer_list<long> ks) {
        std::complex<double> acc(0, 0);
        for (long k : ks) acc += root_of_unity(k);
        return acc;
    };
    std::complex<double> th1 = period({1, 3, 9}), th2 = period({2, 6, 5}), th3 = period({4, 12, 10}),
                         th4 = period({8, 11, 7});
    std::complex<double> r0_num = 2.0 * (th1 - th3) - 3.0 * (th2 - th4);
    CHECK(std::abs(r.r0.embed() - r0_num) < 1e-9);
    std::complex<double> rinf_num = 2.0 * (th4 - th2) - 3.0 * (th1 - th3);
    CHECK(std::abs(r.rinf.embed() - rinf_num) < 1e-9);
}

TEST_CASE("complex embedding fixtures") {
    CHECK(cyc_int(1).embed() == std::complex<double>(1.0, 0.0));
    CHECK(std::abs(zeta_pow(1).embed() - root_of_unity(1)) < 1e-12);
    auto th = theta_periods();
    // numeric sum of the three roots of unity zeta + zeta^3 + zeta^9
    CHECK(std::abs(th[0].embed() - std::complex<double>(0.65139, 0.52242)) < 1e-3);
}

TEST_CASE("ring axioms hold exactly on random samples") {
    std::mt19937_64 rng(42);
    for (const FieldSpec* spec : {zeta13_spec(), sqrt_m7_spec()}) {
        for (int iter = 0; iter < 100; ++iter) {
            FieldElement a = random_element(rng, spec);
            FieldElement b = random_element(rng, spec);
            FieldElement c = random_element(rng, spec);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("field inversion is exact") {
    std::mt19937_64 rng(7);
    const FieldSpec* spec = zeta13_spec();
    int tested = 0;
    while (tested < 100) {
        FieldElement a = random_element(rng, spec);
        if (a.is_zero()) continue;
        ++tested;
        CHECK(a * a.inverse() == cyc_int(1));
    }
    FieldElement one = FieldElement::from_int(sqrt_m7_spec(), 1);
    FieldElement s = FieldElement::generator(sqrt_m7_spec());
    CHECK(s * s == FieldElement::from_int(sqrt_m7_spec(), -7));
    CHECK((one * Rational(3) + s) * (one * Rational(3) - s) == FieldElement::from_int(sqrt_m7_spec(), 16));
    CHECK_THROWS_AS(FieldElement::zero(spec).inverse(), std::domain_error);
}

TEST_CASE("modulus annihilates the generator") {
    for (const FieldSpec* spec : {zeta13_spec(), sqrt_m7_spec()}) {
        FieldElement g = FieldElement::generator(spec);
        FieldElement acc = g.pow(static_cast<unsigned long>(spec->degree()));
        const auto& tail = spec->modulus_tail();
        for (std::size_t i = 0; i < tail.size(); ++i) acc += g.pow(i) * FieldElement::from_rational(spec, tail[i]);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("embedding is a ring homomorphism numerically") {
    std::mt19937_64 rng(1234);
    const FieldSpec* spec = zeta13_spec();
    for (int iter = 0; iter < 100; ++iter) {
        FieldElement a = random_element(rng, spec, 5);
        FieldElement b = random_element(rng, spec, 5);
        CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-9);
        CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-9);
    }
}

TEST_CASE("mismatched specs and zero division are rejected") {
    FieldElement a = cyc_int(2);
    FieldElement b = FieldElement::from_int(sqrt_m7_spec(), 2);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a / FieldElement::zero(zeta13_spec()), std::domain_error);
}

TEST_CASE("field spec validates its embedding root") {
    CHECK_THROWS_AS(FieldSpec("bad", {Rational(7), Rational(0)}, std::complex<double>(1.0, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec("nonint", {Rational(1, 2)}, std::complex<double>(-0.5, 0.0)), std::invalid_argument);
}

TEST_CASE("rationality probe") {
    CHECK(cyc_int(5).is_rational());
    CHECK(!zeta_pow(3).is_rational());
    FieldElement g = sqrt13_constant();
    CHECK((g * g).is_rational());
    CHECK((g * g).rational_part() == Rational(13));
}
