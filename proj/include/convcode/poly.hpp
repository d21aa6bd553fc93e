#pragma once

// Univariate polynomials over F_q in the delay operator z.

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "convcode/error.hpp"
#include "convcode/galois.hpp"

namespace convcode {

/// deg 0 = -infinity.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Coefficients low degree first; the zero polynomial has no coefficients and
/// a nonzero polynomial never ends in a zero coefficient.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<Elem> coeffs) : c_(coeffs) { normalize(); }

    static Poly constant(Elem c) { return Poly(std::vector<Elem>{c}); }
    static Poly monomial(Elem c, int degree) {
        if (c == 0) return {};
        std::vector<Elem> v(static_cast<std::size_t>(degree) + 1, 0);
        v.back() = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_constant() const { return c_.size() <= 1; }

    friend bool operator==(const Poly&, const Poly&) = default;
    friend auto operator<=>(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
        return std::lexicographical_compare_three_way(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Elem> c_;
};

inline void check_poly(const Field& F, const Poly& a) {
    for (Elem c : a.coeffs())
        if (!F.contains(c)) throw InputError("polynomial coefficient " + std::to_string(c) + " outside " + F.name());
}

inline Poly add(const Field& F, const Poly& a, const Poly& b) {
    std::vector<Elem> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(r));
}

inline Poly sub(const Field& F, const Poly& a, const Poly& b) {
    std::vector<Elem> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(r));
}

inline Poly neg(const Field& F, const Poly& a) {
    std::vector<Elem> r(a.coeffs());
    for (auto& c : r) c = F.neg(c);
    return Poly(std::move(r));
}

inline Poly scale(const Field& F, const Poly& a, Elem s) {
    std::vector<Elem> r(a.coeffs());
    for (auto& c : r) c = F.mul(c, s);
    return Poly(std::move(r));
}

/// a * z^k.
inline Poly shift(const Poly& a, int k) {
    if (a.is_zero() || k == 0) return a;
    std::vector<Elem> r(static_cast<std::size_t>(k), 0);
    r.insert(r.end(), a.coeffs().begin(), a.coeffs().end());
    return Poly(std::move(r));
}

inline Poly mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Elem> r(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Elem ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] = F.add(r[i + j], F.mul(ai, b.coeffs()[j]));
    }
    return Poly(std::move(r));
}

/// a = quot * b + rem with deg rem < deg b.
inline std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Elem> rem(a.coeffs());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Elem> quot(rem.size() - db, 0);
    const Elem lead_inv = F.inv(b.lead());
    for (std::size_t d = rem.size(); d-- > db;) {
        const Elem c = F.mul(rem[d], lead_inv);
        if (c == 0) continue;
        quot[d - db] = c;
        for (std::size_t i = 0; i <= db; ++i) rem[d - db + i] = F.sub(rem[d - db + i], F.mul(c, b.coeffs()[i]));
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline Poly monic(const Field& F, const Poly& a) { return a.is_zero() ? a : scale(F, a, F.inv(a.lead())); }

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(const Field& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

inline Elem evaluate(const Field& F, const Poly& a, Elem x) {
    Elem r = 0;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) r = F.add(F.mul(r, x), a.coeffs()[i]);
    return r;
}

/// "1 + z + 3z^2" style; coefficients are printed as their integer encoding.
inline std::string to_string(const Poly& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Elem c = a.coeffs()[i];
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += std::to_string(c);
            continue;
        }
        if (c != 1) s += std::to_string(c);
        s += "z";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace convcode
