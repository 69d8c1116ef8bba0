#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace x13e8 {

/// Arbitrary-precision rational number (thin value-semantic wrapper over
/// GMP's mpq_t). Always canonical: reduced, positive denominator.
class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(int n) : Rational(static_cast<long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        mpq_init(v_);
        mpq_set_si(v_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(v_, v_, d);
        mpq_clear(d);
    }
    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    /// Parse "num" or "num/den".
    static Rational parse(const std::string& s) {
        Rational r;
        if (mpq_set_str(r.v_, s.c_str(), 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (mpz_sgn(mpq_denref(r.v_)) == 0)
            throw std::domain_error("Rational: zero denominator in '" + s + "'");
        mpq_canonicalize(r.v_);
        return r;
    }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
    int sgn() const { return mpq_sgn(v_); }

    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        mpq_div(v_, v_, o.v_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r(*this);
        mpq_neg(r.v_, r.v_);
        return r;
    }

    /// *this += a*b, reusing a per-thread scratch to avoid an allocation.
    void add_mul(const Rational& a, const Rational& b) {
        mpq_t& t = scratch();
        mpq_mul(t, a.v_, b.v_);
        mpq_add(v_, v_, t);
    }
    void sub_mul(const Rational& a, const Rational& b) {
        mpq_t& t = scratch();
        mpq_mul(t, a.v_, b.v_);
        mpq_sub(v_, v_, t);
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) > 0; }

    bool equals_int(long n) const { return mpq_cmp_si(v_, n, 1) == 0; }

    double to_double() const { return mpq_get_d(v_); }

    /// Canonical "num" or "num/den" form.
    std::string str() const {
        char* s = mpq_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(s, out.size() + 1);
        return out;
    }

private:
    mpq_t v_;

    static mpq_t& scratch() {
        struct Holder {
            mpq_t q;
            Holder() { mpq_init(q); }
            ~Holder() { mpq_clear(q); }
        };
        static thread_local Holder h;
        return h.q;
    }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace x13e8

#include <ostream>

namespace x13e8 {
inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
}  // namespace x13e8
