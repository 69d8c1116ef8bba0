#pragma once

#include <complex>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "x13e8/rational.hpp"

namespace x13e8 {

/// Presentation of a number field Q[x]/(m(x)) with m monic over Z, together
/// with a designated complex root of m that realizes the symbol numerically.
class FieldSpec {
public:
    /// `tail` holds c_0..c_{d-1} of m(x) = x^d + c_{d-1} x^{d-1} + ... + c_0.
    FieldSpec(std::string name, std::vector<Rational> tail, std::complex<double> embedding_root)
        : name_(std::move(name)), tail_(std::move(tail)), root_(embedding_root) {
        if (tail_.empty()) throw std::invalid_argument("FieldSpec: degree must be positive");
        for (const auto& c : tail_)
            if (!c.is_integer()) throw std::invalid_argument("FieldSpec: modulus must have integer coefficients");
        // the designated root must actually annihilate the modulus
        std::complex<double> acc(1.0, 0.0);
        std::complex<double> val(0.0, 0.0);
        for (const auto& c : tail_) {
            val += c.to_double() * acc;
            acc *= root_;
        }
        val += acc;  // monic leading term
        if (std::abs(val) > 1e-9) throw std::invalid_argument("FieldSpec: embedding_root is not a root of the modulus");
    }

    int degree() const { return static_cast<int>(tail_.size()); }
    const std::vector<Rational>& modulus_tail() const { return tail_; }
    std::complex<double> embedding_root() const { return root_; }
    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::vector<Rational> tail_;
    std::complex<double> root_;
};

/// An exact element of a number field, as a rational coordinate vector in the
/// power basis 1, x, ..., x^{d-1}, always reduced modulo the field modulus.
/// A default-constructed element is the "universal zero": it belongs to no
/// particular field and absorbs into any spec on first combination.
class FieldElement {
public:
    FieldElement() : spec_(nullptr) {}

    FieldElement(const FieldSpec* spec, std::vector<Rational> coords) : spec_(spec), c_(std::move(coords)) {
        if (!spec_) throw std::invalid_argument("FieldElement: null spec");
        if (static_cast<int>(c_.size()) != spec_->degree())
            throw std::invalid_argument("FieldElement: coordinate length != field degree");
    }

    static FieldElement zero(const FieldSpec* spec) {
        return FieldElement(spec, std::vector<Rational>(spec->degree()));
    }
    static FieldElement from_rational(const FieldSpec* spec, Rational r) {
        std::vector<Rational> c(spec->degree());
        c[0] = std::move(r);
        return FieldElement(spec, std::move(c));
    }
    static FieldElement from_int(const FieldSpec* spec, long n) { return from_rational(spec, Rational(n)); }
    /// The power-basis generator x (requires degree >= 2).
    static FieldElement generator(const FieldSpec* spec) {
        if (spec->degree() < 2) throw std::invalid_argument("FieldElement: generator needs degree >= 2");
        std::vector<Rational> c(spec->degree());
        c[1] = Rational(1);
        return FieldElement(spec, std::move(c));
    }

    const FieldSpec* spec() const { return spec_; }
    bool is_null() const { return spec_ == nullptr; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    /// True when all coordinates beyond the constant one vanish.
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    /// The constant coordinate; only meaningful together with is_rational().
    const Rational& rational_part() const {
        static const Rational kZero;
        return c_.empty() ? kZero : c_[0];
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        if (a.is_null()) return b.is_zero();
        if (b.is_null()) return a.is_zero();
        if (a.spec_ != b.spec_) throw std::invalid_argument("FieldElement: comparing elements of different fields");
        return a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    FieldElement& operator+=(const FieldElement& o) {
        if (o.is_null()) return *this;
        if (is_null()) return *this = o;
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o) {
        if (o.is_null()) return *this;
        if (is_null()) return *this = -o;
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    FieldElement operator-() const {
        FieldElement r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        if (a.is_null() || b.is_null()) return FieldElement();
        a.check_same(b);
        const int d = a.spec_->degree();
        std::vector<Rational> buf(2 * d - 1);
        for (int i = 0; i < d; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                if (b.c_[j].is_zero()) continue;
                buf[i + j].add_mul(a.c_[i], b.c_[j]);
            }
        }
        reduce(buf, a.spec_);
        buf.resize(d);
        return FieldElement(a.spec_, std::move(buf));
    }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement& scale(const Rational& r) {
        for (auto& x : c_) x *= r;
        return *this;
    }
    friend FieldElement operator*(FieldElement a, const Rational& r) { return a.scale(r); }
    friend FieldElement operator*(const Rational& r, FieldElement a) { return a.scale(r); }

    /// Exact inverse by the extended Euclidean algorithm in Q[x].
    FieldElement inverse() const {
        if (is_null() || is_zero()) throw std::domain_error("FieldElement: division by zero");
        const int d = spec_->degree();
        // r0 = modulus, r1 = this; Bezout coefficient s tracks r1.
        std::vector<Rational> r0 = spec_->modulus_tail();
        r0.push_back(Rational(1));
        std::vector<Rational> r1 = c_;
        std::vector<Rational> s0(1), s1(1);
        s1[0] = Rational(1);
        auto deg = [](const std::vector<Rational>& p) {
            int k = static_cast<int>(p.size()) - 1;
            while (k >= 0 && p[k].is_zero()) --k;
            return k;
        };
        while (deg(r1) > 0) {
            // divide r0 by r1
            std::vector<Rational> rem = r0;
            const int db = deg(r1);
            std::vector<Rational> q(std::max<int>(deg(rem) - db + 1, 1));
            while (deg(rem) >= db) {
                const int da = deg(rem);
                Rational coef = rem[da] / r1[db];
                q[da - db] += coef;
                for (int i = 0; i <= db; ++i) rem[da - db + i].sub_mul(coef, r1[i]);
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            std::vector<Rational> ns(std::max(s0.size(), q.size() + s1.size() - 1));
            for (std::size_t i = 0; i < s0.size(); ++i) ns[i] += s0[i];
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i].is_zero()) continue;
                for (std::size_t j = 0; j < s1.size(); ++j) ns[i + j].sub_mul(q[i], s1[j]);
            }
            s0 = std::move(s1);
            s1 = std::move(ns);
        }
        if (deg(r1) < 0) throw std::domain_error("FieldElement: element is a zero divisor (modulus not irreducible?)");
        Rational lead = r1[0];
        std::vector<Rational> out(d);
        for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] / lead;
        return FieldElement(spec_, std::move(out));
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

    FieldElement pow(unsigned long k) const {
        if (is_null()) throw std::domain_error("FieldElement: pow of null element");
        FieldElement base(*this);
        FieldElement acc = from_int(spec_, 1);
        while (k) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return acc;
    }

    /// Evaluate the coordinate vector at the designated complex root.
    std::complex<double> embed() const {
        if (is_null()) return {0.0, 0.0};
        std::complex<double> acc(1.0, 0.0), val(0.0, 0.0);
        for (const auto& x : c_) {
            if (!x.is_zero()) val += x.to_double() * acc;
            acc *= spec_->embedding_root();
        }
        return val;
    }

    /// Reduce a raw convolution buffer (degree <= 2d-2) modulo the monic
    /// modulus, in place; afterwards only entries [0, d) are meaningful.
    static void reduce(std::vector<Rational>& buf, const FieldSpec* spec) {
        const int d = spec->degree();
        const auto& tail = spec->modulus_tail();
        for (int m = static_cast<int>(buf.size()) - 1; m >= d; --m) {
            if (buf[m].is_zero()) continue;
            for (int i = 0; i < d; ++i) buf[m - d + i].sub_mul(buf[m], tail[i]);
            buf[m] = Rational(0);
        }
    }

    std::string str() const {
        if (is_null()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!first) out += " + ";
            out += c_[i].str();
            if (i >= 1) out += "*x^" + std::to_string(i);
            first = false;
        }
        return first ? "0" : out;
    }

private:
    const FieldSpec* spec_;
    std::vector<Rational> c_;

    void check_same(const FieldElement& o) const {
        if (spec_ != o.spec_) throw std::invalid_argument("FieldElement: mixed field specs");
    }
};

}  // namespace x13e8
