#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "x13e8/field.hpp"
#include "x13e8/rational.hpp"

namespace x13e8 {

/// Exponent bookkeeping for a truncated fractional-exponent series ring:
/// all exponents are integer multiples of 1/denominator, and generator
/// series carry exact coefficients for exponents < trunc_units.
struct SeriesContext {
    long denominator;
    long trunc_units;

    /// Convert the exponent num/den into units, checking divisibility.
    long units(long num, long den) const {
        if (den == 0) throw std::invalid_argument("SeriesContext: zero exponent denominator");
        long long scaled = static_cast<long long>(num) * denominator;
        if (scaled % den != 0) throw std::invalid_argument("SeriesContext: exponent not on the 1/N lattice");
        return static_cast<long>(scaled / den);
    }
};

namespace detail {
inline void acc_addmul(Rational& acc, const Rational& a, const Rational& b) { acc.add_mul(a, b); }
inline void acc_addmul(FieldElement& acc, const FieldElement& a, const FieldElement& b) { acc += a * b; }
inline bool coeff_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_zero(const FieldElement& c) { return c.is_null() || c.is_zero(); }
}  // namespace detail

/// Truncated formal series sum c_u q^{u/N} with exact coefficients of type C
/// (Rational or FieldElement). `known` is the exponent bound (in 1/N units)
/// below which the coefficients are exact; arithmetic propagates it
/// conservatively and never reports coefficients at or beyond it.
template <class C>
class PuiseuxSeries {
public:
    explicit PuiseuxSeries(const SeriesContext* ctx)
        : ctx_(ctx), offset_(ctx->trunc_units), known_(ctx->trunc_units) {}

    static PuiseuxSeries zero(const SeriesContext* ctx) { return PuiseuxSeries(ctx); }

    static PuiseuxSeries monomial(const SeriesContext* ctx, long units, C coeff) {
        PuiseuxSeries s(ctx);
        if (units < ctx->trunc_units && !detail::coeff_zero(coeff)) {
            s.offset_ = units;
            s.coeffs_.push_back(std::move(coeff));
        }
        return s;
    }

    /// Raw constructor from parts; callers own the exactness claim.
    static PuiseuxSeries assemble(const SeriesContext* ctx, long offset, long known, std::vector<C> coeffs) {
        PuiseuxSeries s(ctx);
        s.offset_ = offset;
        s.known_ = known;
        s.coeffs_ = std::move(coeffs);
        if (s.offset_ + s.size() > known) s.coeffs_.resize(static_cast<std::size_t>(std::max<long>(known - s.offset_, 0)));
        s.trim();
        return s;
    }

    const SeriesContext* context() const { return ctx_; }
    long known() const { return known_; }
    long offset() const { return offset_; }
    long size() const { return static_cast<long>(coeffs_.size()); }

    /// Lowest exponent with a nonzero coefficient; conservatively `known`
    /// when the series is zero as far as it is known.
    long valuation_units() const {
        for (long i = 0; i < size(); ++i)
            if (!detail::coeff_zero(coeffs_[i])) return offset_ + i;
        return known_;
    }

    bool is_zero() const { return valuation_units() == known_; }

    const C& coeff_at(long units) const {
        static const C kZero{};
        if (units < offset_ || units >= offset_ + size()) return kZero;
        return coeffs_[static_cast<std::size_t>(units - offset_)];
    }
    C& coeff_ref(long units) {
        ensure_span(units, units + 1);
        return coeffs_[static_cast<std::size_t>(units - offset_)];
    }

    std::optional<std::pair<long, C>> leading() const {
        long v = valuation_units();
        if (v >= known_) return std::nullopt;
        return std::make_pair(v, coeff_at(v));
    }

    /// Indices (in units) of the nonzero coefficients, ascending.
    std::vector<long> support() const {
        std::vector<long> out;
        for (long i = 0; i < size(); ++i)
            if (!detail::coeff_zero(coeffs_[i])) out.push_back(offset_ + i);
        return out;
    }

    PuiseuxSeries& operator+=(const PuiseuxSeries& o) {
        check_ctx(o);
        long k = std::min(known_, o.known_);
        long lo = std::min(valuation_units(), o.valuation_units());
        PuiseuxSeries r(ctx_);
        r.known_ = k;
        if (lo < k) {
            r.offset_ = lo;
            r.coeffs_.assign(static_cast<std::size_t>(k - lo), C{});
            for (long u : support_below(k)) r.coeffs_[u - lo] = coeff_at(u);
            for (long u : o.support_below(k)) r.coeffs_[u - lo] += o.coeff_at(u);
        }
        *this = std::move(r);
        trim();
        return *this;
    }
    PuiseuxSeries& operator-=(const PuiseuxSeries& o) {
        PuiseuxSeries n = o;
        n.negate();
        return *this += n;
    }
    friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
    friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) { return a -= b; }

    void negate() {
        for (auto& c : coeffs_) c = -c;
    }
    PuiseuxSeries operator-() const {
        PuiseuxSeries r = *this;
        r.negate();
        return r;
    }

    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        a.check_ctx(b);
        const long va = a.valuation_units(), vb = b.valuation_units();
        long k = std::min(a.known_ + vb, b.known_ + va);
        PuiseuxSeries r(a.ctx_);
        r.known_ = k;
        long lo = va + vb;
        if (lo >= k) {
            r.offset_ = k;
            return r;
        }
        r.offset_ = lo;
        r.coeffs_.assign(static_cast<std::size_t>(k - lo), C{});
        auto sa = a.support(), sb = b.support();
        for (long ua : sa) {
            const C& ca = a.coeff_at(ua);
            for (long ub : sb) {
                long u = ua + ub;
                if (u >= k) break;
                detail::acc_addmul(r.coeffs_[static_cast<std::size_t>(u - lo)], ca, b.coeff_at(ub));
            }
        }
        r.trim();
        return r;
    }
    PuiseuxSeries& operator*=(const PuiseuxSeries& o) { return *this = *this * o; }

    template <class S>
    PuiseuxSeries& scale(const S& s) {
        for (auto& c : coeffs_) c = c * s;
        trim();
        return *this;
    }

    /// Exact k-th power (k >= 1) by square-and-multiply.
    PuiseuxSeries pow(unsigned k) const {
        if (k == 0) throw std::invalid_argument("PuiseuxSeries: pow needs k >= 1");
        PuiseuxSeries base = *this;
        PuiseuxSeries acc = base;
        k -= 1;
        while (k) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return acc;
    }

    /// Multiply by q^{du/N}.
    PuiseuxSeries shifted(long du) const {
        PuiseuxSeries r = *this;
        r.offset_ += du;
        r.known_ += du;
        return r;
    }

    PuiseuxSeries truncated(long known_bound) const {
        PuiseuxSeries r = *this;
        if (known_bound < r.known_) {
            r.known_ = known_bound;
            if (r.offset_ >= known_bound) {
                r.coeffs_.clear();
                r.offset_ = known_bound;
            } else if (r.offset_ + r.size() > known_bound) {
                r.coeffs_.resize(static_cast<std::size_t>(known_bound - r.offset_));
            }
        }
        return r;
    }

    /// Coefficientwise agreement for all exponents below both known bounds
    /// (and below `through_units` if given).
    bool agrees_with(const PuiseuxSeries& o, std::optional<long> through_units = std::nullopt) const {
        check_ctx(o);
        long bound = std::min(known_, o.known_);
        if (through_units) bound = std::min(bound, *through_units);
        long lo = std::min(valuation_units(), o.valuation_units());
        for (long u = lo; u < bound; ++u)
            if (!(coeff_at(u) == o.coeff_at(u))) return false;
        return true;
    }

    /// Double-precision evaluation of the truncated series at real q > 0.
    double eval_real(double q) const {
        double acc = 0.0;
        for (long u : support()) acc += coeff_double(coeff_at(u)) * std::pow(q, static_cast<double>(u) / ctx_->denominator);
        return acc;
    }

private:
    const SeriesContext* ctx_;
    long offset_;
    long known_;
    std::vector<C> coeffs_;

    static double coeff_double(const Rational& c) { return c.to_double(); }
    static double coeff_double(const FieldElement& c) { return c.embed().real(); }

    void check_ctx(const PuiseuxSeries& o) const {
        if (ctx_->denominator != o.ctx_->denominator)
            throw std::invalid_argument("PuiseuxSeries: mixing series contexts with different denominators");
    }

    std::vector<long> support_below(long bound) const {
        std::vector<long> out;
        for (long i = 0; i < size(); ++i)
            if (offset_ + i < bound && !detail::coeff_zero(coeffs_[i])) out.push_back(offset_ + i);
        return out;
    }

    void ensure_span(long lo, long hi) {
        if (coeffs_.empty()) {
            offset_ = lo;
            coeffs_.assign(static_cast<std::size_t>(hi - lo), C{});
            return;
        }
        if (lo < offset_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(offset_ - lo), C{});
            offset_ = lo;
        }
        if (hi > offset_ + size()) coeffs_.resize(static_cast<std::size_t>(hi - offset_));
    }

    void trim() {
        long i = 0;
        while (i < size() && detail::coeff_zero(coeffs_[static_cast<std::size_t>(i)])) ++i;
        if (i == size()) {
            coeffs_.clear();
            offset_ = known_;
            return;
        }
        if (i > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + i);
            offset_ += i;
        }
    }
};

using RationalSeries = PuiseuxSeries<Rational>;
using ZetaSeries = PuiseuxSeries<FieldElement>;

/// Lift a rational-coefficient series into a field's constant coordinates.
inline ZetaSeries promote(const RationalSeries& s, const FieldSpec* spec) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(static_cast<std::size_t>(std::max<long>(s.known() - s.offset(), 0)));
    for (long u = s.offset(); u < s.known(); ++u) {
        const Rational& c = s.coeff_at(u);
        coeffs.push_back(c.is_zero() ? FieldElement() : FieldElement::from_rational(spec, c));
    }
    return ZetaSeries::assemble(s.context(), s.offset(), s.known(), std::move(coeffs));
}

}  // namespace x13e8
