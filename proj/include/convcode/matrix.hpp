#pragma once

// Dense constant matrices over F_q and polynomial matrices over F_q[z].

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "convcode/error.hpp"
#include "convcode/galois.hpp"
#include "convcode/poly.hpp"

namespace convcode {

template <class T>
class Dense {
  public:
    Dense() = default;
    Dense(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    const std::vector<T>& data() const { return data_; }

    friend bool operator==(const Dense&, const Dense&) = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using ConstMatrix = Dense<Elem>;

// ---------------------------------------------------------------------------
// Constant matrices

inline ConstMatrix identity_matrix(std::size_t n) {
    ConstMatrix I(n, n, 0);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

inline ConstMatrix mul(const Field& F, const ConstMatrix& a, const ConstMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
    ConstMatrix r(a.rows(), b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Elem x = a(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = F.add(r(i, j), F.mul(x, b(l, j)));
        }
    return r;
}

/// Row vector times matrix: x * M.
inline std::vector<Elem> vec_mul(const Field& F, std::span<const Elem> x, const ConstMatrix& M) {
    std::vector<Elem> r(M.cols(), 0);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < M.cols(); ++j) r[j] = F.add(r[j], F.mul(x[i], M(i, j)));
    }
    return r;
}

inline ConstMatrix transpose(const ConstMatrix& a) {
    ConstMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

/// Vertical concatenation [top; bottom].
inline ConstMatrix stack(const ConstMatrix& top, const ConstMatrix& bottom) {
    if (top.cols() != bottom.cols() && top.rows() && bottom.rows()) throw InputError("stack: column mismatch");
    const std::size_t cols = top.rows() ? top.cols() : bottom.cols();
    ConstMatrix r(top.rows() + bottom.rows(), cols);
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) r(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) r(top.rows() + i, j) = bottom(i, j);
    return r;
}

/// Reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(const Field& F, ConstMatrix& M) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t piv = r;
        while (piv < M.rows() && M(piv, c) == 0) ++piv;
        if (piv == M.rows()) continue;
        M.swap_rows(r, piv);
        const Elem inv = F.inv(M(r, c));
        for (std::size_t j = 0; j < M.cols(); ++j) M(r, j) = F.mul(M(r, j), inv);
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == r || M(i, c) == 0) continue;
            const Elem f = M(i, c);
            for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = F.sub(M(i, j), F.mul(f, M(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(const Field& F, ConstMatrix M) { return row_reduce(F, M).size(); }

/// First nonzero c (in elimination order) with c * M = 0, if any.
inline std::optional<std::vector<Elem>> left_kernel_vector(const Field& F, const ConstMatrix& M) {
    // Row-reduce [M | I]; a row whose M-part vanishes carries a kernel vector.
    ConstMatrix aug(M.rows(), M.cols() + M.rows(), 0);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) aug(i, j) = M(i, j);
        aug(i, M.cols() + i) = 1;
    }
    row_reduce(F, aug);
    for (std::size_t i = 0; i < aug.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < M.cols() && zero; ++j) zero = aug(i, j) == 0;
        if (!zero) continue;
        std::vector<Elem> c(M.rows());
        for (std::size_t j = 0; j < M.rows(); ++j) c[j] = aug(i, M.cols() + j);
        return c;
    }
    return std::nullopt;
}

inline unsigned hamming_weight(std::span<const Elem> v) {
    unsigned w = 0;
    for (Elem x : v) w += x != 0;
    return w;
}

// ---------------------------------------------------------------------------
// Polynomial matrices

class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(Field F, std::size_t rows, std::size_t cols) : F_(std::move(F)), e_(rows, cols) {}
    PolyMatrix(Field F, std::vector<std::vector<Poly>> rows) : F_(std::move(F)) {
        const std::size_t k = rows.size(), n = k ? rows[0].size() : 0;
        e_ = Dense<Poly>(k, n);
        for (std::size_t i = 0; i < k; ++i) {
            if (rows[i].size() != n) throw InputError("ragged polynomial matrix: row " + std::to_string(i + 1));
            for (std::size_t j = 0; j < n; ++j) {
                check_poly(F_, rows[i][j]);
                e_(i, j) = std::move(rows[i][j]);
            }
        }
    }

    const Field& field() const { return F_; }
    std::size_t rows() const { return e_.rows(); }
    std::size_t cols() const { return e_.cols(); }

    Poly& operator()(std::size_t i, std::size_t j) { return e_(i, j); }
    const Poly& operator()(std::size_t i, std::size_t j) const { return e_(i, j); }

    void swap_rows(std::size_t a, std::size_t b) { e_.swap_rows(a, b); }

    /// deg of row i (max entry degree), kNegInfDegree for a zero row.
    int row_degree(std::size_t i) const {
        int d = kNegInfDegree;
        for (std::size_t j = 0; j < cols(); ++j) d = std::max(d, e_(i, j).degree());
        return d;
    }
    std::vector<int> row_degrees() const {
        std::vector<int> d(rows());
        for (std::size_t i = 0; i < rows(); ++i) d[i] = row_degree(i);
        return d;
    }
    int degree() const {
        int d = kNegInfDegree;
        for (std::size_t i = 0; i < rows(); ++i) d = std::max(d, row_degree(i));
        return d;
    }

    /// Constant matrix of z^d coefficients.
    ConstMatrix coefficient(int d) const {
        ConstMatrix c(rows(), cols(), 0);
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j) c(i, j) = e_(i, j).coeff(static_cast<std::size_t>(d));
        return c;
    }

    /// Row i holds the z^{nu_i} coefficients of row i, nu_i its row degree.
    ConstMatrix highest_coefficient_matrix() const {
        ConstMatrix c(rows(), cols(), 0);
        for (std::size_t i = 0; i < rows(); ++i) {
            const int d = row_degree(i);
            if (d < 0) continue;
            for (std::size_t j = 0; j < cols(); ++j) c(i, j) = e_(i, j).coeff(static_cast<std::size_t>(d));
        }
        return c;
    }

    /// row_dst += f * row_src.
    void add_row_multiple(std::size_t dst, std::size_t src, const Poly& f) {
        for (std::size_t j = 0; j < cols(); ++j) e_(dst, j) = add(F_, e_(dst, j), mul(F_, f, e_(src, j)));
    }
    void scale_row(std::size_t i, Elem s) {
        for (std::size_t j = 0; j < cols(); ++j) e_(i, j) = scale(F_, e_(i, j), s);
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) { return a.F_ == b.F_ && a.e_ == b.e_; }

  private:
    Field F_;
    Dense<Poly> e_;
};

inline PolyMatrix poly_identity(const Field& F, std::size_t n) {
    PolyMatrix I(F, n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = Poly::constant(1);
    return I;
}

inline PolyMatrix from_constant(const Field& F, const ConstMatrix& c) {
    PolyMatrix P(F, c.rows(), c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) P(i, j) = Poly::constant(c(i, j));
    return P;
}

inline PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.field() != b.field()) throw InputError("polynomial matrices over different fields");
    if (a.cols() != b.rows()) throw InputError("polynomial matrix product shape mismatch");
    const Field& F = a.field();
    PolyMatrix r(F, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Poly acc;
            for (std::size_t l = 0; l < a.cols(); ++l) acc = add(F, acc, mul(F, a(i, l), b(l, j)));
            r(i, j) = std::move(acc);
        }
    return r;
}

inline PolyMatrix transpose(const PolyMatrix& a) {
    PolyMatrix t(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

/// Row vector of polynomials times a polynomial matrix.
inline std::vector<Poly> vec_mul(const std::vector<Poly>& u, const PolyMatrix& G) {
    if (u.size() != G.rows()) throw InputError("input length " + std::to_string(u.size()) + " does not match k = " +
                                               std::to_string(G.rows()));
    const Field& F = G.field();
    std::vector<Poly> v(G.cols());
    for (std::size_t i = 0; i < G.rows(); ++i) {
        check_poly(F, u[i]);
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < G.cols(); ++j) v[j] = add(F, v[j], mul(F, u[i], G(i, j)));
    }
    return v;
}

inline int vector_degree(const std::vector<Poly>& v) {
    int d = kNegInfDegree;
    for (const auto& p : v) d = std::max(d, p.degree());
    return d;
}

/// Hamming weight summed over all coefficient vectors.
inline unsigned vector_weight(const std::vector<Poly>& v) {
    unsigned w = 0;
    for (const auto& p : v)
        for (Elem c : p.coeffs()) w += c != 0;
    return w;
}

}  // namespace convcode
