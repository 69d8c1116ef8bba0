#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "x13e8/field.hpp"
#include "x13e8/matrix.hpp"

namespace x13e8 {

/// Exponent vector, one entry per ring variable.
struct Monomial {
    std::vector<std::uint16_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    Monomial(std::initializer_list<std::uint16_t> init) : e(init) {}

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.e.size());
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
        return r;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : m.e) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Graded lexicographic: total degree first, then lex on exponent vectors.
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
}

struct PolyRing {
    int vars;
    const FieldSpec* coeff;
    friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.vars == b.vars && a.coeff == b.coeff; }
    friend bool operator!=(const PolyRing& a, const PolyRing& b) { return !(a == b); }
};

/// Sparse multivariate polynomial in canonical form: terms sorted in
/// descending graded-lex order, no zero coefficients stored, so structural
/// equality is semantic equality.
class SparsePolynomial {
public:
    using Term = std::pair<Monomial, FieldElement>;

    explicit SparsePolynomial(PolyRing ring) : ring_(ring) {}

    static SparsePolynomial zero(PolyRing ring) { return SparsePolynomial(ring); }

    static SparsePolynomial constant(PolyRing ring, FieldElement c) {
        SparsePolynomial p(ring);
        if (!c.is_zero()) p.terms_.emplace_back(Monomial(ring.vars), std::move(c));
        return p;
    }

    /// z_i with the paper's 1-based variable index.
    static SparsePolynomial variable(PolyRing ring, int i) {
        if (i < 1 || i > ring.vars) throw std::invalid_argument("SparsePolynomial: variable index out of range");
        SparsePolynomial p(ring);
        Monomial m(ring.vars);
        m.e[i - 1] = 1;
        p.terms_.emplace_back(std::move(m), FieldElement::from_int(ring.coeff, 1));
        return p;
    }

    /// Single term c * prod z_i^{exps[i-1]}.
    static SparsePolynomial term(PolyRing ring, const std::vector<std::uint16_t>& exps, FieldElement c) {
        if (static_cast<int>(exps.size()) != ring.vars)
            throw std::invalid_argument("SparsePolynomial: exponent vector length mismatch");
        SparsePolynomial p(ring);
        if (!c.is_zero()) {
            Monomial m;
            m.e = exps;
            p.terms_.emplace_back(std::move(m), std::move(c));
        }
        return p;
    }

    static SparsePolynomial from_terms(PolyRing ring, std::vector<Term> ts) {
        SparsePolynomial p(ring);
        std::unordered_map<Monomial, FieldElement, MonomialHash> acc;
        for (auto& t : ts) acc[t.first] += t.second;
        p.assign_from(std::move(acc));
        return p;
    }

    const PolyRing& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.first.degree());
        return d;
    }

    FieldElement coefficient_of(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.first == m) return t.second;
        return FieldElement::zero(ring_.coeff);
    }

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparsePolynomial& a, const SparsePolynomial& b) { return !(a == b); }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        check_ring(o);
        std::unordered_map<Monomial, FieldElement, MonomialHash> acc;
        acc.reserve(terms_.size() + o.terms_.size());
        for (auto& t : terms_) acc.emplace(std::move(t.first), std::move(t.second));
        for (const auto& t : o.terms_) acc[t.first] += t.second;
        assign_from(std::move(acc));
        return *this;
    }
    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        check_ring(o);
        std::unordered_map<Monomial, FieldElement, MonomialHash> acc;
        acc.reserve(terms_.size() + o.terms_.size());
        for (auto& t : terms_) acc.emplace(std::move(t.first), std::move(t.second));
        for (const auto& t : o.terms_) acc[t.first] -= t.second;
        assign_from(std::move(acc));
        return *this;
    }
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    SparsePolynomial operator-() const {
        SparsePolynomial r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        a.check_ring(b);
        SparsePolynomial r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        // accumulate raw convolution buffers per monomial and reduce modulo
        // the field modulus once per output term
        const FieldSpec* spec = a.ring_.coeff;
        const int d = spec->degree();
        const std::size_t blen = static_cast<std::size_t>(2 * d - 1);
        std::unordered_map<Monomial, std::vector<Rational>, MonomialHash> acc;
        acc.reserve(a.terms_.size() * 2);
        for (const auto& ta : a.terms_) {
            const auto& ca = ta.second.coords();
            for (const auto& tb : b.terms_) {
                const auto& cb = tb.second.coords();
                std::vector<Rational>& buf = acc[ta.first * tb.first];
                if (buf.empty()) buf.resize(blen);
                for (int i = 0; i < d; ++i) {
                    if (ca[i].is_zero()) continue;
                    for (int j = 0; j < d; ++j) {
                        if (cb[j].is_zero()) continue;
                        buf[static_cast<std::size_t>(i + j)].add_mul(ca[i], cb[j]);
                    }
                }
            }
        }
        r.terms_.reserve(acc.size());
        for (auto& [m, buf] : acc) {
            FieldElement::reduce(buf, spec);
            buf.resize(static_cast<std::size_t>(d));
            FieldElement c(spec, std::move(buf));
            if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return graded_lex_less(y.first, x.first); });
        return r;
    }
    SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

    SparsePolynomial& scale(const FieldElement& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.second = t.second * c;
        return *this;
    }
    SparsePolynomial& scale(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.second.scale(c);
        return *this;
    }
    friend SparsePolynomial operator*(SparsePolynomial p, const FieldElement& c) { return p.scale(c); }
    friend SparsePolynomial operator*(const FieldElement& c, SparsePolynomial p) { return p.scale(c); }

    /// Exact k-th power by square-and-multiply.
    SparsePolynomial pow(unsigned k) const {
        SparsePolynomial acc = constant(ring_, FieldElement::from_int(ring_.coeff, 1));
        SparsePolynomial base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return acc;
    }

    /// p compose M: each z_i is replaced by the linear form sum_j M[i][j] z_j.
    SparsePolynomial substitute_linear(const SquareMatrix& m) const {
        if (m.dim() != ring_.vars || m.spec() != ring_.coeff)
            throw std::invalid_argument("substitute_linear: matrix dimension/spec mismatch");
        std::vector<SparsePolynomial> images;
        images.reserve(ring_.vars);
        for (int i = 0; i < ring_.vars; ++i) {
            SparsePolynomial li(ring_);
            std::vector<Term> ts;
            for (int j = 0; j < ring_.vars; ++j) {
                if (m.at(i, j).is_zero()) continue;
                Monomial mo(ring_.vars);
                mo.e[j] = 1;
                ts.emplace_back(std::move(mo), m.at(i, j));
            }
            images.push_back(from_terms(ring_, std::move(ts)));
        }
        return substitute_polys(images);
    }

    /// p with each variable replaced by the given polynomial (shared ring).
    SparsePolynomial substitute_polys(const std::vector<SparsePolynomial>& images) const {
        if (static_cast<int>(images.size()) != ring_.vars)
            throw std::invalid_argument("substitute_polys: wrong number of images");
        // per-variable power cache up to the max exponent that occurs
        std::vector<int> maxe(ring_.vars, 0);
        for (const auto& t : terms_)
            for (int i = 0; i < ring_.vars; ++i) maxe[i] = std::max<int>(maxe[i], t.first.e[i]);
        std::vector<std::vector<SparsePolynomial>> pows(ring_.vars);
        for (int i = 0; i < ring_.vars; ++i) {
            pows[i].push_back(constant(images[i].ring(), FieldElement::from_int(images[i].ring().coeff, 1)));
            for (int e = 1; e <= maxe[i]; ++e) pows[i].push_back(pows[i].back() * images[i]);
        }
        PolyRing target = images.empty() ? ring_ : images[0].ring();
        SparsePolynomial out(target);
        for (const auto& t : terms_) {
            SparsePolynomial prod = constant(target, t.second);
            for (int i = 0; i < ring_.vars; ++i)
                if (t.first.e[i]) prod = prod * pows[i][t.first.e[i]];
            out += prod;
        }
        return out;
    }

    /// Exact evaluation; a ring homomorphism into the coefficient field.
    FieldElement evaluate(const std::vector<FieldElement>& point) const {
        if (static_cast<int>(point.size()) != ring_.vars)
            throw std::invalid_argument("evaluate: point length mismatch");
        std::vector<int> maxe(ring_.vars, 0);
        for (const auto& t : terms_)
            for (int i = 0; i < ring_.vars; ++i) maxe[i] = std::max<int>(maxe[i], t.first.e[i]);
        std::vector<std::vector<FieldElement>> pows(ring_.vars);
        for (int i = 0; i < ring_.vars; ++i) {
            pows[i].push_back(FieldElement::from_int(ring_.coeff, 1));
            for (int e = 1; e <= maxe[i]; ++e) pows[i].push_back(pows[i].back() * point[i]);
        }
        FieldElement acc = FieldElement::zero(ring_.coeff);
        for (const auto& t : terms_) {
            FieldElement v = t.second;
            for (int i = 0; i < ring_.vars; ++i)
                if (t.first.e[i]) v = v * pows[i][t.first.e[i]];
            acc += v;
        }
        return acc;
    }

    /// Partial derivative with respect to z_i (1-based).
    SparsePolynomial derivative(int i) const {
        if (i < 1 || i > ring_.vars) throw std::invalid_argument("derivative: variable index out of range");
        std::vector<Term> ts;
        for (const auto& t : terms_) {
            int e = t.first.e[i - 1];
            if (e == 0) continue;
            Monomial m = t.first;
            m.e[i - 1] = static_cast<std::uint16_t>(e - 1);
            ts.emplace_back(std::move(m), t.second * FieldElement::from_int(ring_.coeff, e));
        }
        return from_terms(ring_, std::move(ts));
    }

    /// Ring map onto fewer variables: target[i] = 0 drops z_{i+1}, otherwise
    /// z_{i+1} maps to variable target[i] (1-based) of the target ring.
    SparsePolynomial project(PolyRing target_ring, const std::vector<int>& target) const {
        if (static_cast<int>(target.size()) != ring_.vars) throw std::invalid_argument("project: map length mismatch");
        std::vector<Term> ts;
        for (const auto& t : terms_) {
            Monomial m(target_ring.vars);
            bool dead = false;
            for (int i = 0; i < ring_.vars && !dead; ++i) {
                if (t.first.e[i] == 0) continue;
                if (target[i] == 0)
                    dead = true;
                else
                    m.e[target[i] - 1] = static_cast<std::uint16_t>(m.e[target[i] - 1] + t.first.e[i]);
            }
            if (!dead) ts.emplace_back(std::move(m), t.second);
        }
        return from_terms(target_ring, std::move(ts));
    }

private:
    PolyRing ring_;
    std::vector<Term> terms_;

    void check_ring(const SparsePolynomial& o) const {
        if (ring_ != o.ring_) throw std::invalid_argument("SparsePolynomial: ring mismatch");
    }

    void assign_from(std::unordered_map<Monomial, FieldElement, MonomialHash> acc) {
        terms_.clear();
        terms_.reserve(acc.size());
        for (auto& kv : acc)
            if (!kv.second.is_zero()) terms_.emplace_back(kv.first, std::move(kv.second));
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return graded_lex_less(b.first, a.first); });
    }
};

/// sum_i family[i]^k.
inline SparsePolynomial power_sum(const std::vector<SparsePolynomial>& family, unsigned k) {
    if (family.empty()) throw std::invalid_argument("power_sum: empty family");
    SparsePolynomial acc = SparsePolynomial::zero(family[0].ring());
    for (const auto& f : family) acc += f.pow(k);
    return acc;
}

}  // namespace x13e8
