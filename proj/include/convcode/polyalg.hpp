#pragma once

// Generator-matrix algebra: maximal minors, basicness and minimality,
// encoder minimization, a canonical row-module form for code equality,
// polynomial right inverses and dual-code bases.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "convcode/error.hpp"
#include "convcode/matrix.hpp"
#include "convcode/poly.hpp"

namespace convcode {

namespace detail {

inline Poly laplace_det(const PolyMatrix& M, std::size_t row, std::vector<std::size_t>& cols) {
    const Field& F = M.field();
    if (cols.empty()) return Poly::constant(1);
    Poly det;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        const Poly& e = M(row, cols[idx]);
        if (e.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != idx) rest.push_back(cols[t]);
        Poly term = mul(F, e, laplace_det(M, row + 1, rest));
        det = (idx % 2 == 0) ? add(F, det, term) : sub(F, det, term);
    }
    return det;
}

}  // namespace detail

/// Determinant of the square submatrix on the given columns (all rows).
inline Poly minor_on_columns(const PolyMatrix& M, std::vector<std::size_t> cols) {
    if (cols.size() != M.rows()) throw InputError("minor needs as many columns as rows");
    return detail::laplace_det(M, 0, cols);
}

inline Poly determinant(const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw InputError("determinant of a non-square matrix");
    std::vector<std::size_t> cols(M.cols());
    std::iota(cols.begin(), cols.end(), 0);
    return minor_on_columns(M, cols);
}

/// Column subsets of size k from {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> column_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), 0);
    if (k > n) return out;
    while (true) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

/// All C(n,k) maximal minors, column subsets in lexicographic order.
inline std::vector<Poly> k_minors(const PolyMatrix& G) {
    if (G.rows() > G.cols())
        throw InputError("k_minors: k = " + std::to_string(G.rows()) + " exceeds n = " + std::to_string(G.cols()));
    std::vector<Poly> out;
    for (const auto& cols : column_subsets(G.cols(), G.rows())) out.push_back(minor_on_columns(G, cols));
    return out;
}

struct EncoderInfo {
    std::vector<int> row_degrees;  // Forney indices when minimal
    int delta = 0;                 // max degree of the k-minors
    bool is_basic = false;
    bool is_minimal = false;
    int memory = 0;  // max row degree
    Poly minor_gcd;  // monic gcd of the k-minors
};

inline EncoderInfo encoder_info(const PolyMatrix& G) {
    const Field& F = G.field();
    const auto minors = k_minors(G);
    EncoderInfo info;
    info.delta = kNegInfDegree;
    for (const auto& m : minors) {
        info.delta = std::max(info.delta, m.degree());
        info.minor_gcd = gcd(F, info.minor_gcd, m);
    }
    if (info.minor_gcd.is_zero()) throw InputError("generator matrix does not have full row rank");
    info.row_degrees = G.row_degrees();
    info.memory = *std::max_element(info.row_degrees.begin(), info.row_degrees.end());
    info.is_basic = info.minor_gcd.degree() == 0;
    const int sum = std::accumulate(info.row_degrees.begin(), info.row_degrees.end(), 0);

    // Sum of row degrees equals delta exactly when the highest-coefficient
    // matrix has full row rank.
    const bool row_reduced = rank(F, G.highest_coefficient_matrix()) == G.rows();
    if (row_reduced != (sum == info.delta))
        throw std::logic_error("row-reducedness disagrees with the minor-degree criterion");
    info.is_minimal = info.is_basic && row_reduced;
    return info;
}

// ---------------------------------------------------------------------------
// Canonical row-module form

struct HermiteResult {
    PolyMatrix form;       // transform * input
    PolyMatrix transform;  // unimodular
    std::vector<std::size_t> pivot_columns;
};

/// Row echelon form over F[z]: pivots monic, entries above a pivot reduced
/// modulo it, zero rows last. Unique for the row module of the input.
inline HermiteResult hermite_form_with_transform(const PolyMatrix& M) {
    const Field& F = M.field();
    HermiteResult res{M, poly_identity(F, M.rows()), {}};
    PolyMatrix& H = res.form;
    PolyMatrix& U = res.transform;
    std::size_t r = 0;
    for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
        // Euclid on column c below row r until a single nonzero entry remains.
        while (true) {
            std::size_t best = H.rows();
            for (std::size_t i = r; i < H.rows(); ++i) {
                if (H(i, c).is_zero()) continue;
                if (best == H.rows() || H(i, c).degree() < H(best, c).degree()) best = i;
            }
            if (best == H.rows()) break;
            H.swap_rows(r, best);
            U.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < H.rows(); ++i) {
                if (H(i, c).is_zero()) continue;
                const Poly q = neg(F, divmod(F, H(i, c), H(r, c)).first);
                H.add_row_multiple(i, r, q);
                U.add_row_multiple(i, r, q);
                done = done && H(i, c).is_zero();
            }
            if (done) break;
        }
        if (H(r, c).is_zero()) continue;
        const Elem s = F.inv(H(r, c).lead());
        H.scale_row(r, s);
        U.scale_row(r, s);
        for (std::size_t i = 0; i < r; ++i) {
            const Poly q = neg(F, divmod(F, H(i, c), H(r, c)).first);
            if (q.is_zero()) continue;
            H.add_row_multiple(i, r, q);
            U.add_row_multiple(i, r, q);
        }
        res.pivot_columns.push_back(c);
        ++r;
    }
    return res;
}

inline PolyMatrix hermite_form(const PolyMatrix& M) { return hermite_form_with_transform(M).form; }

/// True iff the row modules of G and G2 over F[z] coincide.
inline bool codes_equal(const PolyMatrix& G, const PolyMatrix& G2) {
    if (G.field() != G2.field()) throw InputError("codes_equal: matrices over different fields");
    if (G.rows() != G2.rows() || G.cols() != G2.cols())
        throw InputError("codes_equal: shape mismatch (" + std::to_string(G.rows()) + "x" + std::to_string(G.cols()) +
                         " vs " + std::to_string(G2.rows()) + "x" + std::to_string(G2.cols()) + ")");
    return hermite_form(G) == hermite_form(G2);
}

// ---------------------------------------------------------------------------
// Right inverse and kernel

namespace detail {

// Hermite form of G^T: U G^T = [R; 0] with R k x k upper triangular.
struct ColumnReduction {
    HermiteResult h;
    bool full_rank = false;
    bool unit_pivots = false;
};

inline ColumnReduction column_reduce(const PolyMatrix& G) {
    ColumnReduction cr{hermite_form_with_transform(transpose(G))};
    const std::size_t k = G.rows();
    cr.full_rank = cr.h.pivot_columns.size() == k;
    cr.unit_pivots = cr.full_rank;
    for (std::size_t i = 0; i < cr.h.pivot_columns.size(); ++i)
        cr.unit_pivots = cr.unit_pivots && cr.h.form(i, i).degree() == 0;
    return cr;
}

}  // namespace detail

struct RightInverse {
    PolyMatrix matrix;       // n x k with G * matrix = I_k
    int max_row_degree = 0;  // largest row degree of matrix
};

inline RightInverse right_inverse(const PolyMatrix& G) {
    const Field& F = G.field();
    const std::size_t k = G.rows(), n = G.cols();
    if (k > n) throw InputError("right_inverse: k exceeds n");
    const auto cr = detail::column_reduce(G);
    if (!cr.full_rank) throw InputError("right_inverse: matrix does not have full row rank");
    if (!cr.unit_pivots) throw InputError("right_inverse: matrix is not basic");

    // R is unit upper triangular; invert by back substitution.
    const PolyMatrix& H = cr.h.form;
    PolyMatrix Rinv(F, k, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = k; i-- > 0;) {
            Poly acc = i == j ? Poly::constant(1) : Poly{};
            for (std::size_t l = i + 1; l < k; ++l) acc = sub(F, acc, mul(F, H(i, l), Rinv(l, j)));
            Rinv(i, j) = std::move(acc);
        }

    // G U^T = [R^T 0], so G * U^T[:, :k] * (R^-1)^T = I.
    PolyMatrix Utop(F, k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) Utop(i, j) = cr.h.transform(i, j);
    RightInverse out{transpose(mul(Rinv, Utop)), 0};
    out.max_row_degree = std::max(0, out.matrix.degree());
    if (mul(G, out.matrix) != poly_identity(F, k)) throw std::logic_error("right_inverse: G * Ginv != I");
    return out;
}

// ---------------------------------------------------------------------------
// Minimization

struct MinimizeResult {
    PolyMatrix minimal;    // transform * input
    PolyMatrix transform;  // unimodular
};

/// Reduces G to a minimal encoder of the same code by repeatedly cancelling the
/// leading term of the highest-degree row involved in a left-kernel vector of
/// the highest-coefficient matrix (largest row index on ties).
inline MinimizeResult minimize(const PolyMatrix& G) {
    const Field& F = G.field();
    const auto info = encoder_info(G);
    if (!info.is_basic) throw InputError("minimize: matrix is not basic");
    MinimizeResult res{G, poly_identity(F, G.rows())};
    PolyMatrix& M = res.minimal;
    while (auto c = left_kernel_vector(F, M.highest_coefficient_matrix())) {
        const auto nu = M.row_degrees();
        std::size_t r = 0;
        bool have = false;
        for (std::size_t i = 0; i < c->size(); ++i) {
            if ((*c)[i] == 0) continue;
            if (!have || nu[i] >= nu[r]) r = i;
            have = true;
        }
        const Elem cr_inv = F.inv((*c)[r]);
        for (std::size_t i = 0; i < c->size(); ++i) {
            if (i == r || (*c)[i] == 0) continue;
            const Poly f = Poly::monomial(F.mul((*c)[i], cr_inv), nu[r] - nu[i]);
            M.add_row_multiple(r, i, f);
            res.transform.add_row_multiple(r, i, f);
        }
    }
    const auto out = M.row_degrees();
    if (std::accumulate(out.begin(), out.end(), 0) != info.delta)
        throw std::logic_error("minimize: result is not minimal");
    return res;
}

/// Basic minimal (n-k) x n matrix H with G H^T = 0, canonical for the dual code.
inline PolyMatrix dual_basis(const PolyMatrix& G) {
    const Field& F = G.field();
    const std::size_t k = G.rows(), n = G.cols();
    if (k >= n) throw InputError("dual_basis: k = n, the dual code is trivial");
    const auto cr = detail::column_reduce(G);
    if (!cr.full_rank) throw InputError("dual_basis: matrix does not have full row rank");
    if (!cr.unit_pivots) throw InputError("dual_basis: matrix is not basic");
    PolyMatrix K(F, n - k, n);
    for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) K(i - k, j) = cr.h.transform(i, j);
    PolyMatrix H = minimize(hermite_form(K)).minimal;
    if (mul(G, transpose(H)).degree() != kNegInfDegree) throw std::logic_error("dual_basis: G H^T != 0");
    return H;
}

}  // namespace convcode
