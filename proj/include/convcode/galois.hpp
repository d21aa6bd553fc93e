#pragma once

// Arithmetic in F_q, q = p^m, for small q.
//
// Elements are integers 0..q-1 read as base-p digit vectors in the polynomial
// basis 1, a, a^2, ..., a^(m-1), where a is a root of the modulus. So the
// residue class of x (the generator a) is the integer p, and 0 / 1 are the
// additive / multiplicative identities.
//
// The modulus is encoded the same way, including its leading coefficient:
// x^4 + x + 1 over F_2 is 0b10011 = 19.

#include <cstdint>
#include <stdexcept>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "convcode/error.hpp"

namespace convcode {

using Elem = std::uint32_t;

class FieldElement;

class Field {
  public:
    static constexpr unsigned kDefaultMaxOrder = 256;

    /// F_2.
    Field() : Field(binary()) {}

    static const Field& binary() {
        static const Field f2 = make(2, 1);
        return f2;
    }

    /// Builds F_{p^m}. Without an explicit modulus the default is the monic
    /// irreducible polynomial of degree m with the smallest integer encoding
    /// (for (2,4) that is x^4 + x + 1 = 19; for m = 1 it is x).
    static Field make(unsigned p, unsigned m, std::optional<unsigned> modulus = std::nullopt,
                      unsigned max_order = kDefaultMaxOrder);

    static unsigned default_modulus(unsigned p, unsigned m, unsigned max_order = kDefaultMaxOrder);

    unsigned p() const { return t_->p; }
    unsigned m() const { return t_->m; }
    unsigned q() const { return t_->q; }
    unsigned modulus() const { return t_->modulus; }
    bool is_prime_field() const { return t_->m == 1; }

    /// The class of x, i.e. the root of the modulus (integer p for m > 1).
    Elem generator() const { return t_->m == 1 ? Elem{0} : Elem{t_->p}; }
    /// A generator of the multiplicative group, found by search.
    Elem primitive() const { return t_->exp[1 % (t_->q - 1)]; }

    Elem add(Elem a, Elem b) const { return t_->add[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const { return t_->add[idx(a, t_->neg[check(b)])]; }
    Elem neg(Elem a) const { return t_->neg[check(a)]; }
    Elem mul(Elem a, Elem b) const { return t_->mul[idx(a, b)]; }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    bool contains(Elem a) const { return a < t_->q; }
    FieldElement element(Elem value) const;

    std::vector<unsigned> digits(Elem a) const;
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->m == b.t_->m && a.t_->modulus == b.t_->modulus);
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  private:
    struct Tables {
        unsigned p = 0, m = 0, q = 0, modulus = 0;
        std::vector<std::uint16_t> add, mul;
        std::vector<std::uint16_t> neg, inv;
        std::vector<std::uint16_t> exp, log;
    };

    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

    Elem check(Elem a) const {
        if (a >= t_->q) throw InputError("field element " + std::to_string(a) + " out of range for " + name());
        return a;
    }
    std::size_t idx(Elem a, Elem b) const { return std::size_t{check(a)} * t_->q + check(b); }

    static std::optional<std::shared_ptr<Tables>> build(unsigned p, unsigned m, unsigned modulus);

    std::shared_ptr<const Tables> t_;

    friend class FieldElement;
};

/// An element bound to its field. Mixing elements of different fields throws.
class FieldElement {
  public:
    FieldElement(Field f, Elem v) : f_(std::move(f)), v_(v) {
        if (!f_.contains(v)) throw InputError("field element " + std::to_string(v) + " out of range for " + f_.name());
    }

    Elem value() const { return v_; }
    const Field& field() const { return f_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        return {a.f_, a.f_.add(a.v_, same(a, b).v_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        return {a.f_, a.f_.sub(a.v_, same(a, b).v_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        return {a.f_, a.f_.mul(a.v_, same(a, b).v_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return {a.f_, a.f_.div(a.v_, same(a, b).v_)};
    }
    FieldElement operator-() const { return {f_, f_.neg(v_)}; }
    FieldElement inv() const { return {f_, f_.inv(v_)}; }
    FieldElement pow(std::uint64_t e) const { return {f_, f_.pow(v_, e)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.f_ == b.f_ && a.v_ == b.v_; }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    static const FieldElement& same(const FieldElement& a, const FieldElement& b) {
        if (a.f_ != b.f_) throw InputError("operands belong to different fields: " + a.f_.name() + " vs " + b.f_.name());
        return b;
    }

    Field f_;
    Elem v_;
};

// ---------------------------------------------------------------------------

namespace detail {

inline bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::vector<unsigned> to_digits(unsigned v, unsigned p, unsigned len) {
    std::vector<unsigned> d(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

inline unsigned from_digits(const std::vector<unsigned>& d, unsigned p) {
    unsigned v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
    return v;
}

// Remainder of a by the monic polynomial f over F_p (coefficients low degree first).
inline std::vector<unsigned> rem_monic(std::vector<unsigned> a, const std::vector<unsigned>& f, unsigned p) {
    const std::size_t df = f.size() - 1;
    for (std::size_t d = a.size(); d-- > df;) {
        const unsigned c = a[d];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= df; ++i) a[d - df + i] = (a[d - df + i] + p - (c * f[i]) % p) % p;
    }
    a.resize(df);
    return a;
}

// Trial division by every monic polynomial of degree 1..m/2.
inline bool is_irreducible(unsigned p, unsigned m, unsigned modulus) {
    const auto f = to_digits(modulus, p, m + 1);
    unsigned count = 1;
    for (unsigned d = 1; 2 * d <= m; ++d) {
        count *= p;
        for (unsigned low = 0; low < count; ++low) {
            auto g = to_digits(low, p, d);
            g.push_back(1);
            const auto r = rem_monic(f, g, p);
            bool zero = true;
            for (unsigned c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace detail

inline std::optional<std::shared_ptr<Field::Tables>> Field::build(unsigned p, unsigned m, unsigned modulus) {
    auto t = std::make_shared<Tables>();
    unsigned q = 1;
    for (unsigned i = 0; i < m; ++i) q *= p;
    t->p = p;
    t->m = m;
    t->q = q;
    t->modulus = modulus;
    const auto mod = detail::to_digits(modulus, p, m + 1);

    t->add.resize(std::size_t{q} * q);
    t->mul.resize(std::size_t{q} * q);
    t->neg.resize(q);
    std::vector<std::vector<unsigned>> dig(q);
    for (unsigned a = 0; a < q; ++a) dig[a] = detail::to_digits(a, p, m);

    for (unsigned a = 0; a < q; ++a) {
        std::vector<unsigned> n(m);
        for (unsigned i = 0; i < m; ++i) n[i] = (p - dig[a][i]) % p;
        t->neg[a] = static_cast<std::uint16_t>(detail::from_digits(n, p));
        for (unsigned b = 0; b < q; ++b) {
            std::vector<unsigned> s(m);
            for (unsigned i = 0; i < m; ++i) s[i] = (dig[a][i] + dig[b][i]) % p;
            t->add[std::size_t{a} * q + b] = static_cast<std::uint16_t>(detail::from_digits(s, p));

            // Schoolbook product followed by reduction with the monic modulus.
            std::vector<unsigned> prod(2 * m, 0);
            for (unsigned i = 0; i < m; ++i)
                for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + dig[a][i] * dig[b][j]) % p;
            for (unsigned d = 2 * m - 1; d >= m; --d) {
                const unsigned c = prod[d];
                if (c == 0) continue;
                for (unsigned i = 0; i <= m; ++i) {
                    const unsigned sub = (c * mod[i]) % p;
                    prod[d - m + i] = (prod[d - m + i] + p - sub) % p;
                }
            }
            prod.resize(m);
            t->mul[std::size_t{a} * q + b] = static_cast<std::uint16_t>(detail::from_digits(prod, p));
        }
    }

    // Field iff every nonzero element has an inverse.
    t->inv.assign(q, 0);
    for (unsigned a = 1; a < q; ++a) {
        bool found = false;
        for (unsigned b = 1; b < q && !found; ++b) {
            if (t->mul[std::size_t{a} * q + b] == 1) {
                t->inv[a] = static_cast<std::uint16_t>(b);
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }

    // exp/log with respect to the first primitive element in value order.
    t->exp.assign(q - 1, 0);
    t->log.assign(q, 0);
    for (unsigned g = 1; g < q; ++g) {
        unsigned x = 1, order = 0;
        do {
            x = t->mul[std::size_t{x} * q + g];
            ++order;
        } while (x != 1);
        if (order != q - 1) continue;
        x = 1;
        for (unsigned i = 0; i < q - 1; ++i) {
            t->exp[i] = static_cast<std::uint16_t>(x);
            t->log[x] = static_cast<std::uint16_t>(i);
            x = t->mul[std::size_t{x} * q + g];
        }
        break;
    }
    return t;
}

inline unsigned Field::default_modulus(unsigned p, unsigned m, unsigned max_order) {
    if (!detail::is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw InputError("extension degree must be at least 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > max_order) throw InputError("field order exceeds ceiling " + std::to_string(max_order));
    }
    for (unsigned mod = static_cast<unsigned>(q); mod < 2 * q; ++mod)
        if (detail::is_irreducible(p, m, mod)) return mod;
    throw InputError("no irreducible polynomial found");  // unreachable for prime p
}

inline Field Field::make(unsigned p, unsigned m, std::optional<unsigned> modulus, unsigned max_order) {
    if (!detail::is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw InputError("extension degree must be at least 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > max_order)
            throw InputError("field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds ceiling " +
                             std::to_string(max_order));
    }
    if (!modulus) return Field(*build(p, m, default_modulus(p, m, max_order)));

    if (*modulus < q || *modulus >= 2 * q)
        throw InputError("modulus " + std::to_string(*modulus) + " is not a monic polynomial of degree " +
                         std::to_string(m) + " over F_" + std::to_string(p));
    if (!detail::is_irreducible(p, m, *modulus))
        throw InputError("modulus " + std::to_string(*modulus) + " is reducible over F_" + std::to_string(p));
    auto t = build(p, m, *modulus);
    if (!t) throw std::logic_error("irreducible modulus produced a ring with zero divisors");
    return Field(*t);
}

inline Elem Field::inv(Elem a) const {
    if (check(a) == 0) throw InputError("inverse of zero in " + name());
    return t_->inv[a];
}

inline Elem Field::pow(Elem a, std::uint64_t e) const {
    if (check(a) == 0) return e == 0 ? 1 : 0;
    const std::uint64_t order = t_->q - 1;
    return t_->exp[(std::uint64_t{t_->log[a]} * (e % order)) % order];
}

inline FieldElement Field::element(Elem value) const { return FieldElement(*this, value); }

inline std::vector<unsigned> Field::digits(Elem a) const { return detail::to_digits(check(a), t_->p, t_->m); }

inline std::string Field::name() const {
    std::string s = "F_" + std::to_string(t_->q);
    if (t_->m > 1) s += "[modulus=" + std::to_string(t_->modulus) + "]";
    return s;
}

}  // namespace convcode
