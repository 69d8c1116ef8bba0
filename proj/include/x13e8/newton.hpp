#pragma once

#include <stdexcept>
#include <vector>

#include "x13e8/polynomial.hpp"

namespace x13e8 {

// Newton's identities: k*sigma_k = sum_{i=1}^{k} (-1)^{i-1} sigma_{k-i} p_i.

/// Convert power-sum values p_1..p_k to elementary symmetric values sigma_1..sigma_k.
inline std::vector<FieldElement> newton_sigmas(const std::vector<FieldElement>& powers, const FieldSpec* spec) {
    std::vector<FieldElement> sigma;
    sigma.reserve(powers.size());
    for (std::size_t k = 1; k <= powers.size(); ++k) {
        FieldElement acc = FieldElement::zero(spec);
        for (std::size_t i = 1; i <= k; ++i) {
            FieldElement term = (i == k ? FieldElement::from_int(spec, 1) : sigma[k - i - 1]) * powers[i - 1];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        acc.scale(Rational(1, static_cast<long>(k)));
        sigma.push_back(std::move(acc));
    }
    return sigma;
}

/// Same conversion with polynomial entries (shared ring).
inline std::vector<SparsePolynomial> newton_sigmas(const std::vector<SparsePolynomial>& powers) {
    if (powers.empty()) throw std::invalid_argument("newton_sigmas: empty input");
    const PolyRing ring = powers[0].ring();
    std::vector<SparsePolynomial> sigma;
    sigma.reserve(powers.size());
    for (std::size_t k = 1; k <= powers.size(); ++k) {
        SparsePolynomial acc = SparsePolynomial::zero(ring);
        for (std::size_t i = 1; i <= k; ++i) {
            SparsePolynomial term = i == k ? powers[i - 1] : sigma[k - i - 1] * powers[i - 1];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        acc.scale(Rational(1, static_cast<long>(k)));
        sigma.push_back(std::move(acc));
    }
    return sigma;
}

/// p_k = x_1^k + ... + x_n^k in an n-variable ring.
inline SparsePolynomial power_sum_poly(PolyRing ring, unsigned k) {
    SparsePolynomial acc = SparsePolynomial::zero(ring);
    for (int i = 1; i <= ring.vars; ++i) acc += SparsePolynomial::variable(ring, i).pow(k);
    return acc;
}

/// sigma_k, the k-th elementary symmetric polynomial of the ring variables.
inline SparsePolynomial elementary_symmetric_poly(PolyRing ring, unsigned k) {
    if (k == 0) return SparsePolynomial::constant(ring, FieldElement::from_int(ring.coeff, 1));
    if (static_cast<int>(k) > ring.vars) return SparsePolynomial::zero(ring);
    std::vector<SparsePolynomial::Term> ts;
    std::vector<int> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    while (true) {
        Monomial m(ring.vars);
        for (int v : idx) m.e[v] = 1;
        ts.emplace_back(std::move(m), FieldElement::from_int(ring.coeff, 1));
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && idx[pos] == ring.vars - static_cast<int>(k) + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (unsigned j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return SparsePolynomial::from_terms(ring, std::move(ts));
}

/// Express p_k in the sigma-ring (variables sigma_1..sigma_n, 1-based) by the
/// Newton recursion p_k = sigma_1 p_{k-1} - sigma_2 p_{k-2} + ... + (-1)^{k-1} k sigma_k.
inline std::vector<SparsePolynomial> power_sums_in_sigma_ring(PolyRing sigma_ring, unsigned upto) {
    std::vector<SparsePolynomial> p;
    for (unsigned k = 1; k <= upto; ++k) {
        SparsePolynomial acc = SparsePolynomial::zero(sigma_ring);
        for (unsigned i = 1; i <= k; ++i) {
            SparsePolynomial si = static_cast<int>(i) <= sigma_ring.vars
                                      ? SparsePolynomial::variable(sigma_ring, static_cast<int>(i))
                                      : SparsePolynomial::zero(sigma_ring);
            SparsePolynomial term = i == k ? si.scale(FieldElement::from_int(sigma_ring.coeff, static_cast<long>(k)))
                                           : si * p[k - i - 1];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        p.push_back(std::move(acc));
    }
    return p;
}

}  // namespace x13e8
