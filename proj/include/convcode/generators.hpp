#pragma once

// Seeded random generator matrices for property tests and the acceptance
// harness: random polynomial matrices, minimal encoders, unimodular
// transforms and deliberately non-basic matrices.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "convcode/polyalg.hpp"

namespace convcode {

using Rng = std::mt19937_64;

inline Elem random_elem(const Field& F, Rng& rng, bool nonzero = false) {
    std::uniform_int_distribution<Elem> d(nonzero ? 1 : 0, F.q() - 1);
    return d(rng);
}

/// Uniform coefficients up to degree max_deg (the result may have lower degree).
inline Poly random_poly(const Field& F, int max_deg, Rng& rng) {
    if (max_deg < 0) return {};
    std::vector<Elem> c(static_cast<std::size_t>(max_deg) + 1);
    for (auto& x : c) x = random_elem(F, rng);
    return Poly(std::move(c));
}

inline PolyMatrix random_poly_matrix(const Field& F, std::size_t rows, std::size_t cols, int max_deg, Rng& rng) {
    PolyMatrix M(F, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = random_poly(F, max_deg, rng);
    return M;
}

/// Random row degrees nu_1..nu_k with sum in [min_gamma, max_gamma].
inline std::vector<int> random_row_degrees(std::size_t k, int min_gamma, int max_gamma, Rng& rng) {
    std::uniform_int_distribution<int> total(min_gamma, max_gamma);
    const int gamma = total(rng);
    std::vector<int> nu(k, 0);
    std::uniform_int_distribution<std::size_t> row(0, k - 1);
    for (int t = 0; t < gamma; ++t) ++nu[row(rng)];
    return nu;
}

/// Random minimal k x n encoder with the given row degrees (rejection sampling).
inline PolyMatrix random_minimal_with_degrees(const Field& F, std::size_t n, const std::vector<int>& nu, Rng& rng,
                                              int max_tries = 100000) {
    const std::size_t k = nu.size();
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        PolyMatrix G(F, k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) G(i, j) = random_poly(F, nu[i], rng);
        if (G.row_degrees() != nu) continue;
        if (rank(F, G.highest_coefficient_matrix()) != k) continue;
        if (encoder_info(G).is_minimal) return G;
    }
    throw std::runtime_error("random_minimal_with_degrees: no minimal encoder found");
}

/// Random minimal k x n encoder with overall constraint length in [min_gamma, max_gamma].
inline PolyMatrix random_minimal_code(const Field& F, std::size_t k, std::size_t n, int max_gamma, Rng& rng,
                                      int min_gamma = 1) {
    if (k == 0 || k > n) throw InputError("random_minimal_code: need 1 <= k <= n");
    return random_minimal_with_degrees(F, n, random_row_degrees(k, min_gamma, max_gamma, rng), rng);
}

/// Product of random elementary row operations with polynomial multipliers of
/// degree at most max_deg.
inline PolyMatrix random_unimodular(const Field& F, std::size_t k, int max_deg, Rng& rng, int steps = 6) {
    PolyMatrix U = poly_identity(F, k);
    std::uniform_int_distribution<std::size_t> row(0, k - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = row(rng), j = row(rng);
        switch (kind(rng)) {
            case 0: U.swap_rows(i, j); break;
            case 1: U.scale_row(i, random_elem(F, rng, true)); break;
            default:
                if (i != j) U.add_row_multiple(i, j, random_poly(F, max_deg, rng));
        }
    }
    return U;
}

enum class ElementaryKind { row_swap, scaling, constant_addition, shift_addition };

/// One elementary transformation that keeps a minimal encoder minimal. For
/// shift_addition, row i += c z^l row j with l <= nu_i - nu_j; returns false
/// if no such pair exists.
inline bool apply_minimality_preserving(PolyMatrix& U, const PolyMatrix& G, ElementaryKind kind, Rng& rng) {
    const Field& F = G.field();
    const std::size_t k = G.rows();
    const PolyMatrix cur = mul(U, G);
    const auto nu = cur.row_degrees();
    std::uniform_int_distribution<std::size_t> row(0, k - 1);
    switch (kind) {
        case ElementaryKind::row_swap: {
            if (k < 2) return false;
            const std::size_t i = row(rng);
            std::size_t j = row(rng);
            while (j == i) j = row(rng);
            U.swap_rows(i, j);
            return true;
        }
        case ElementaryKind::scaling:
            U.scale_row(row(rng), random_elem(F, rng, true));
            return true;
        case ElementaryKind::constant_addition:
        case ElementaryKind::shift_addition: {
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    if (i == j) continue;
                    const int slack = nu[i] - nu[j];
                    if (kind == ElementaryKind::constant_addition ? slack >= 0 : slack >= 1) pairs.push_back({i, j});
                }
            if (pairs.empty()) return false;
            const auto [i, j] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
            int l = 0;
            if (kind == ElementaryKind::shift_addition) l = std::uniform_int_distribution<int>(1, nu[i] - nu[j])(rng);
            U.add_row_multiple(i, j, Poly::monomial(random_elem(F, rng, true), l));
            return true;
        }
    }
    return false;
}

/// Random unimodular U such that U G is again minimal.
inline PolyMatrix random_minimality_preserving_unimodular(const PolyMatrix& G, Rng& rng, int steps = 5) {
    PolyMatrix U = poly_identity(G.field(), G.rows());
    std::uniform_int_distribution<int> kind(0, 3);
    for (int s = 0; s < steps; ++s) apply_minimality_preserving(U, G, static_cast<ElementaryKind>(kind(rng)), rng);
    return U;
}

/// Full-rank matrix whose k-minors share a nonconstant factor: a random basic
/// code with one row multiplied by a random polynomial of degree >= 1.
inline PolyMatrix random_nonbasic_full_rank(const Field& F, std::size_t k, std::size_t n, int max_gamma, Rng& rng) {
    PolyMatrix G = random_minimal_code(F, k, n, max_gamma, rng, 0);
    Poly f;
    while (f.degree() < 1) f = random_poly(F, 2, rng);
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
    for (std::size_t j = 0; j < n; ++j) G(i, j) = mul(F, G(i, j), f);
    return G;
}

}  // namespace convcode
