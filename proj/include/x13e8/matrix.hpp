#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "x13e8/field.hpp"

namespace x13e8 {

/// Dense n x n matrix of FieldElements sharing one FieldSpec.
class SquareMatrix {
public:
    SquareMatrix(const FieldSpec* spec, int n)
        : spec_(spec), n_(n), e_(static_cast<std::size_t>(n) * n, FieldElement::zero(spec)) {
        if (n <= 0) throw std::invalid_argument("SquareMatrix: dimension must be positive");
    }

    static SquareMatrix identity(const FieldSpec* spec, int n) {
        SquareMatrix m(spec, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::from_int(spec, 1);
        return m;
    }

    int dim() const { return n_; }
    const FieldSpec* spec() const { return spec_; }

    FieldElement& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const FieldElement& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.n_ != b.n_ || a.spec_ != b.spec_) throw std::invalid_argument("SquareMatrix: dimension/spec mismatch");
        SquareMatrix r(a.spec_, a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const FieldElement& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.n_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) += aik * b.at(k, j);
                }
            }
        return r;
    }

    SquareMatrix pow(unsigned k) const {
        SquareMatrix acc = identity(spec_, n_);
        SquareMatrix base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return acc;
    }

    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.n_ != b.n_ || a.spec_ != b.spec_) throw std::invalid_argument("SquareMatrix: dimension/spec mismatch");
        SquareMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }
    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.n_ != b.n_ || a.spec_ != b.spec_) throw std::invalid_argument("SquareMatrix: dimension/spec mismatch");
        SquareMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }
    SquareMatrix operator-() const {
        SquareMatrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }
    SquareMatrix scaled(const FieldElement& s) const {
        SquareMatrix r = *this;
        for (auto& x : r.e_) x = x * s;
        return r;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// If *this = lambda * I, return lambda.
    std::optional<FieldElement> scalar_of_identity() const {
        const FieldElement& lam = at(0, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (i == j) {
                    if (at(i, j) != lam) return std::nullopt;
                } else if (!at(i, j).is_zero()) {
                    return std::nullopt;
                }
            }
        return lam;
    }

    /// If *this = lambda * other (other nonzero), return lambda.
    std::optional<FieldElement> scalar_multiple_of(const SquareMatrix& other) const {
        if (n_ != other.n_ || spec_ != other.spec_) return std::nullopt;
        std::optional<FieldElement> lam;
        for (int i = 0; i < n_ && !lam; ++i)
            for (int j = 0; j < n_ && !lam; ++j)
                if (!other.at(i, j).is_zero()) lam = at(i, j) / other.at(i, j);
        if (!lam) return std::nullopt;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j) != *lam * other.at(i, j)) return std::nullopt;
        return lam;
    }

    /// Gauss-Jordan inverse; throws on singular input.
    SquareMatrix inverse() const {
        SquareMatrix a = *this;
        SquareMatrix inv = identity(spec_, n_);
        for (int col = 0; col < n_; ++col) {
            int piv = -1;
            for (int r = col; r < n_ && piv < 0; ++r)
                if (!a.at(r, col).is_zero()) piv = r;
            if (piv < 0) throw std::domain_error("SquareMatrix: singular matrix");
            if (piv != col) {
                for (int j = 0; j < n_; ++j) {
                    std::swap(a.at(piv, j), a.at(col, j));
                    std::swap(inv.at(piv, j), inv.at(col, j));
                }
            }
            FieldElement d = a.at(col, col).inverse();
            for (int j = 0; j < n_; ++j) {
                a.at(col, j) = a.at(col, j) * d;
                inv.at(col, j) = inv.at(col, j) * d;
            }
            for (int r = 0; r < n_; ++r) {
                if (r == col || a.at(r, col).is_zero()) continue;
                FieldElement f = a.at(r, col);
                for (int j = 0; j < n_; ++j) {
                    a.at(r, j) -= f * a.at(col, j);
                    inv.at(r, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    /// Matrix-vector action v -> M v.
    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const {
        if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("SquareMatrix: vector length mismatch");
        std::vector<FieldElement> out(v.size(), FieldElement::zero(spec_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
        return out;
    }

private:
    const FieldSpec* spec_;
    int n_;
    std::vector<FieldElement> e_;
};

}  // namespace x13e8
