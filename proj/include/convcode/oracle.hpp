#pragma once

// Brute-force ground truth for the spectrum: enumerate every input with
// u_0 != 0 whose codeword is short enough, compute v = uG by polynomial
// multiplication, classify v twice (state returns to zero / explicit split
// into two codewords) and tally atomic and molecular words by length and
// weight. Nothing here looks at the adjacency matrix.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "convcode/encoder.hpp"
#include "convcode/polyalg.hpp"
#include "convcode/spectrum.hpp"
#include "convcode/weight_enum.hpp"

namespace convcode {

inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 24;
inline constexpr std::size_t kMaxOracleLength = 64;

namespace detail {

inline std::vector<Poly> truncate_below(const std::vector<Poly>& v, std::size_t L) {
    std::vector<Poly> r;
    for (const auto& p : v) {
        std::vector<Elem> c(p.coeffs().begin(), p.coeffs().begin() + static_cast<std::ptrdiff_t>(std::min(L, p.coeffs().size())));
        r.emplace_back(std::move(c));
    }
    return r;
}

inline std::vector<Elem> coefficient_vector(const std::vector<Poly>& v, std::size_t t) {
    std::vector<Elem> c(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) c[j] = v[j].coeff(t);
    return c;
}

}  // namespace detail

/// Split times L in 1..deg v at which v = v~ + v^ with v~ = v mod z^L and both
/// parts nonzero codewords. Membership is decided with a right inverse.
inline std::vector<std::size_t> split_times(const PolyMatrix& G, const PolyMatrix& right_inv,
                                            const std::vector<Poly>& v) {
    std::vector<std::size_t> out;
    const int N = vector_degree(v);
    for (int L = 1; L <= N; ++L) {
        const auto head = detail::truncate_below(v, static_cast<std::size_t>(L));
        if (vector_degree(head) == kNegInfDegree) continue;  // v^ is nonzero since L <= deg v
        const auto u = vec_mul(head, right_inv);
        if (vec_mul(u, G) == head) out.push_back(static_cast<std::size_t>(L));
    }
    return out;
}

struct OracleTables {
    LSeries atomic;     // omega_{l, alpha}, constant term 0
    LSeries molecular;  // lambda_00^{(l, alpha)}, constant term 1
    std::uint64_t inputs = 0;
    std::uint64_t atomic_words = 0, molecular_words = 0;
};

namespace detail {

/// Calls f(u) (returning false to stop) for every input with u_0 != 0 and deg u^(i) <= l_max - 1 - gamma_i,
/// which yields exactly the codewords of length at most l_max.
template <class F>
void for_each_short_input(const PolyMatrix& G, const std::vector<int>& row_degrees, std::size_t l_max,
                          std::uint64_t budget, F&& f) {
    if (l_max > kMaxOracleLength) throw LimitError("oracle: length cap is " + std::to_string(kMaxOracleLength));
    const unsigned q = G.field().q();
    const std::size_t k = G.rows();
    std::vector<int> bound(k);  // max degree of u^(i), negative if it must vanish
    std::size_t digits = 0;
    for (std::size_t i = 0; i < k; ++i) {
        bound[i] = static_cast<int>(l_max) - 1 - row_degrees[i];
        if (bound[i] >= 0) digits += static_cast<std::size_t>(bound[i]) + 1;
    }
    std::uint64_t total = 1;
    for (std::size_t d = 0; d < digits; ++d)
        if ((total *= q) > budget)
            throw LimitError("oracle: " + std::to_string(q) + "^" + std::to_string(digits) +
                             " inputs exceed the budget of " + std::to_string(budget));
    if (digits == 0) return;

    std::vector<Elem> digit(digits, 0);
    std::vector<Poly> u(k);
    while (true) {
        std::size_t pos = 0;
        bool u0 = false;
        for (std::size_t i = 0; i < k; ++i) {
            if (bound[i] < 0) continue;
            const auto len = static_cast<std::size_t>(bound[i]) + 1;
            std::vector<Elem> c(digit.begin() + static_cast<std::ptrdiff_t>(pos),
                                digit.begin() + static_cast<std::ptrdiff_t>(pos + len));
            u0 = u0 || c[0] != 0;
            pos += len;
            u[i] = Poly(std::move(c));
        }
        if (u0 && !f(u)) return;
        std::size_t d = 0;
        while (d < digits && digit[d] == q - 1) digit[d++] = 0;
        if (d == digits) break;
        ++digit[d];
    }
}

}  // namespace detail

inline OracleTables enumerate_codewords(const PolyMatrix& G, std::size_t l_max,
                                        std::uint64_t budget = kDefaultOracleBudget) {
    const auto info = encoder_info(G);
    if (!info.is_minimal) throw InputError("oracle: generator matrix must be minimal");
    OracleTables t{LSeries(l_max), LSeries::one(l_max)};
    const std::optional<ControllerForm> cf =
        info.delta > 0 ? std::optional<ControllerForm>(controller_form(G)) : std::nullopt;
    const PolyMatrix Ginv = right_inverse(G).matrix;

    detail::for_each_short_input(G, info.row_degrees, l_max, budget, [&](const std::vector<Poly>& u) {
        ++t.inputs;
        const auto v = vec_mul(u, G);
        const int N = vector_degree(v);
        if (N < 0 || static_cast<std::size_t>(N) + 1 > l_max)
            throw std::logic_error("oracle: codeword length outside the enumeration window");
        const auto splits = split_times(G, Ginv, v);
        std::vector<std::size_t> tight;
        for (std::size_t L : splits)
            if (hamming_weight(detail::coefficient_vector(v, L)) != 0) tight.push_back(L);
        if (cf) {  // delta = 0 has no state to compare against
            const auto cl = classify(*cf, u);
            if (cl.concat_times != splits || cl.tight_times != tight)
                throw std::logic_error("oracle: state criterion and splitting search disagree");
        }
        const auto l = static_cast<std::size_t>(N) + 1;
        const unsigned w = vector_weight(v);
        if (splits.empty()) {
            t.atomic[l].add_term(w, 1);
            ++t.atomic_words;
        }
        if (tight.size() == splits.size()) {
            t.molecular[l].add_term(w, 1);
            ++t.molecular_words;
        }
        return true;
    });
    return t;
}

inline LSeries enumerate_atomic(const PolyMatrix& G, std::size_t l_max, std::uint64_t budget = kDefaultOracleBudget) {
    return enumerate_codewords(G, l_max, budget).atomic;
}

inline LSeries enumerate_molecular(const PolyMatrix& G, std::size_t l_max,
                                   std::uint64_t budget = kDefaultOracleBudget) {
    return enumerate_codewords(G, l_max, budget).molecular;
}

/// Classifier used by gap_bound_check: true iff the codeword of u is atomic.
using AtomicPredicate = std::function<bool(const ControllerForm&, const std::vector<Poly>&)>;

struct GapReport {
    bool ok = true;
    std::size_t bound = 0;  // m + m_hat - 1
    std::size_t checked = 0;
    std::vector<Poly> violating_input;
    std::vector<Poly> violating_word;
};

/// Longest run of zero coefficient vectors strictly inside v.
inline std::size_t longest_zero_run(const std::vector<Poly>& v) {
    const int N = vector_degree(v);
    std::size_t best = 0, run = 0;
    for (int t = 0; t <= N; ++t) {
        if (hamming_weight(detail::coefficient_vector(v, static_cast<std::size_t>(t))) == 0) {
            best = std::max(best, ++run);
        } else {
            run = 0;
        }
    }
    return best;
}

/// Checks that no atomic word of length at most l_max has more than
/// m + m_hat - 1 consecutive zero coefficient vectors.
inline GapReport gap_bound_check(const PolyMatrix& G, std::size_t l_max, AtomicPredicate is_atomic = {},
                                 std::uint64_t budget = kDefaultOracleBudget) {
    const auto info = encoder_info(G);
    if (!info.is_minimal || info.delta == 0) throw InputError("gap_bound_check: needs a minimal encoder with delta > 0");
    if (!is_atomic)
        is_atomic = [](const ControllerForm& cf, const std::vector<Poly>& u) {
            return classify(cf, u).kind == CodewordKind::atomic;
        };
    const auto cf = controller_form(G);
    GapReport rep;
    rep.bound = atomic_gap_bound(G);
    detail::for_each_short_input(G, info.row_degrees, l_max, budget, [&](const std::vector<Poly>& u) {
        if (!is_atomic(cf, u)) return true;
        ++rep.checked;
        const auto v = vec_mul(u, G);
        if (longest_zero_run(v) <= rep.bound) return true;
        rep.ok = false;
        rep.violating_input = u;
        rep.violating_word = v;
        return false;
    });
    return rep;
}

}  // namespace convcode
