#pragma once

// Weight enumerators (polynomials in W with big-integer coefficients), square
// matrices of them, and power series in L truncated at a fixed order.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "convcode/error.hpp"
#include "convcode/matrix.hpp"

namespace convcode {

using BigInt = boost::multiprecision::cpp_int;

/// sum_a c_a W^a. Coefficients indexed by weight, trailing zeros trimmed.
class WeightEnum {
  public:
    WeightEnum() = default;
    explicit WeightEnum(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static WeightEnum constant(BigInt c) { return WeightEnum(std::vector<BigInt>{std::move(c)}); }
    static WeightEnum monomial(unsigned weight, BigInt count = 1) {
        std::vector<BigInt> c(weight + 1);
        c[weight] = std::move(count);
        return WeightEnum(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// Largest weight with a nonzero coefficient, -1 for zero.
    int max_weight() const { return static_cast<int>(c_.size()) - 1; }
    BigInt coeff(std::size_t a) const { return a < c_.size() ? c_[a] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    void add_term(unsigned weight, const BigInt& count) {
        if (c_.size() <= weight) c_.resize(weight + 1);
        c_[weight] += count;
        trim();
    }

    /// (weight, count) pairs with nonzero count, ascending weight.
    std::vector<std::pair<unsigned, BigInt>> terms() const {
        std::vector<std::pair<unsigned, BigInt>> t;
        for (std::size_t a = 0; a < c_.size(); ++a)
            if (c_[a] != 0) t.emplace_back(static_cast<unsigned>(a), c_[a]);
        return t;
    }
    std::size_t term_count() const {
        return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const BigInt& x) { return x != 0; }));
    }
    BigInt total_count() const {
        BigInt s = 0;
        for (const auto& x : c_) s += x;
        return s;
    }
    std::optional<unsigned> min_weight() const {
        for (std::size_t a = 0; a < c_.size(); ++a)
            if (c_[a] != 0) return static_cast<unsigned>(a);
        return std::nullopt;
    }
    bool nonnegative() const {
        return std::all_of(c_.begin(), c_.end(), [](const BigInt& x) { return x >= 0; });
    }

    WeightEnum& operator+=(const WeightEnum& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t a = 0; a < o.c_.size(); ++a) c_[a] += o.c_[a];
        trim();
        return *this;
    }
    WeightEnum& operator-=(const WeightEnum& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t a = 0; a < o.c_.size(); ++a) c_[a] -= o.c_[a];
        trim();
        return *this;
    }
    friend WeightEnum operator+(WeightEnum a, const WeightEnum& b) { return a += b; }
    friend WeightEnum operator-(WeightEnum a, const WeightEnum& b) { return a -= b; }
    friend WeightEnum operator-(WeightEnum a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    /// *this += a * b without a temporary.
    void add_product(const WeightEnum& a, const WeightEnum& b) {
        if (a.is_zero() || b.is_zero()) return;
        if (c_.size() < a.c_.size() + b.c_.size() - 1) c_.resize(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) c_[i + j] += a.c_[i] * b.c_[j];
        }
        trim();
    }

    friend WeightEnum operator*(const WeightEnum& a, const WeightEnum& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) r[i + j] += a.c_[i] * b.c_[j];
        }
        return WeightEnum(std::move(r));
    }

    friend bool operator==(const WeightEnum&, const WeightEnum&) = default;
    /// Total order (length first, then coefficients from weight 0), used to
    /// sort and key invariants.
    friend bool operator<(const WeightEnum& a, const WeightEnum& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

/// "W + W^3", "2W^2", "1 + W^2"; zero prints as "0".
inline std::string to_string(const WeightEnum& w) {
    if (w.is_zero()) return "0";
    std::string s;
    for (const auto& [a, c] : w.terms()) {
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (a == 0) {
            s += mag.str();
            continue;
        }
        if (mag != 1) s += mag.str();
        s += "W";
        if (a > 1) s += "^" + std::to_string(a);
    }
    return s;
}

/// s x s matrix of weight enumerators. extended marks Gamma = Lambda + E_00.
class AdjMatrix {
  public:
    AdjMatrix() = default;
    AdjMatrix(std::size_t s, unsigned q, std::size_t n, bool extended = false)
        : q_(q), n_(n), extended_(extended), e_(s, s) {}

    std::size_t size() const { return e_.rows(); }
    unsigned q() const { return q_; }
    std::size_t n() const { return n_; }
    bool extended() const { return extended_; }
    void set_extended(bool x) { extended_ = x; }

    WeightEnum& operator()(std::size_t i, std::size_t j) { return e_(i, j); }
    const WeightEnum& operator()(std::size_t i, std::size_t j) const { return e_(i, j); }

    /// Number of nonzero entries in row i.
    std::size_t row_support(std::size_t i) const {
        std::size_t c = 0;
        for (std::size_t j = 0; j < size(); ++j) c += !e_(i, j).is_zero();
        return c;
    }

    friend bool operator==(const AdjMatrix&, const AdjMatrix&) = default;

  private:
    unsigned q_ = 2;
    std::size_t n_ = 0;
    bool extended_ = false;
    Dense<WeightEnum> e_;
};

inline AdjMatrix mul(const AdjMatrix& a, const AdjMatrix& b) {
    if (a.size() != b.size()) throw InputError("adjacency product: size mismatch");
    AdjMatrix r(a.size(), a.q(), a.n(), a.extended() && b.extended());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t l = 0; l < a.size(); ++l) {
            if (a(i, l).is_zero()) continue;
            for (std::size_t j = 0; j < a.size(); ++j)
                if (!b(l, j).is_zero()) r(i, j) += a(i, l) * b(l, j);
        }
    return r;
}

/// Power series sum_{l=0}^{T} c_l L^l with WeightEnum coefficients.
class LSeries {
  public:
    LSeries() = default;
    explicit LSeries(std::size_t T) : c_(T + 1) {}

    static LSeries one(std::size_t T) {
        LSeries s(T);
        s.c_[0] = WeightEnum::constant(1);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    WeightEnum& operator[](std::size_t l) { return c_[l]; }
    const WeightEnum& operator[](std::size_t l) const { return c_[l]; }
    const std::vector<WeightEnum>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const WeightEnum& w) { return w.is_zero(); });
    }

    friend LSeries operator+(const LSeries& a, const LSeries& b) {
        LSeries r(std::min(a.order(), b.order()));
        for (std::size_t l = 0; l <= r.order(); ++l) r.c_[l] = a.c_[l] + b.c_[l];
        return r;
    }
    friend LSeries operator-(const LSeries& a, const LSeries& b) {
        LSeries r(std::min(a.order(), b.order()));
        for (std::size_t l = 0; l <= r.order(); ++l) r.c_[l] = a.c_[l] - b.c_[l];
        return r;
    }
    friend LSeries operator*(const LSeries& a, const LSeries& b) {
        LSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= r.order(); ++j)
                if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend bool operator==(const LSeries&, const LSeries&) = default;

  private:
    std::vector<WeightEnum> c_{WeightEnum{}};
};

/// Multiplicative inverse; requires c_0 = 1 so every step stays integral.
inline LSeries inverse(const LSeries& a) {
    if (a[0] != WeightEnum::constant(1)) throw InputError("series inverse requires constant term 1");
    LSeries r(a.order());
    r[0] = WeightEnum::constant(1);
    for (std::size_t l = 1; l <= a.order(); ++l) {
        WeightEnum acc;
        for (std::size_t j = 1; j <= l; ++j)
            if (!a[j].is_zero() && !r[l - j].is_zero()) acc += a[j] * r[l - j];
        r[l] = -acc;
    }
    return r;
}

/// "L^2W^4 + L^3W^6 + 2L^4W^8", grouped by length; zero prints as "0".
inline std::string to_string(const LSeries& f) {
    std::string s;
    for (std::size_t l = 0; l <= f.order(); ++l)
        for (const auto& [a, c] : f[l].terms()) {
            const bool negative = c < 0;
            const BigInt mag = negative ? BigInt(-c) : c;
            if (s.empty())
                s += negative ? "-" : "";
            else
                s += negative ? " - " : " + ";
            std::string mono;
            if (l > 0) mono += l > 1 ? "L^" + std::to_string(l) : "L";
            if (a > 0) mono += a > 1 ? "W^" + std::to_string(a) : "W";
            if (mono.empty()) {
                s += mag.str();
            } else {
                if (mag != 1) s += mag.str();
                s += mono;
            }
        }
    return s.empty() ? "0" : s;
}

}  // namespace convcode
