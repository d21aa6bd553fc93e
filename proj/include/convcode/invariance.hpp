#pragma once

// Code invariants carried by the adjacency matrix: equality up to conjugation
// by a permutation fixing state 0, recovery of k and the Forney indices,
// monomial equivalence of encoders, the delta = 1 binary MacWilliams
// transform and an exhaustive check of the shift-permutation lemma.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "convcode/encoder.hpp"
#include "convcode/error.hpp"
#include "convcode/polyalg.hpp"
#include "convcode/weight_enum.hpp"

namespace convcode {

/// Lambda'(i, j) == Lambda(perm[i], perm[j]) with perm[0] == 0.
using PermWitness = std::vector<std::size_t>;

/// Lambda'(i, j) = Lambda(perm[i], perm[j]).
inline AdjMatrix conjugate(const AdjMatrix& a, const PermWitness& perm) {
    const std::size_t s = a.size();
    if (perm.size() != s) throw InputError("conjugate: permutation has wrong length");
    std::vector<bool> seen(s, false);
    for (std::size_t x : perm) {
        if (x >= s || seen[x]) throw InputError("conjugate: not a permutation");
        seen[x] = true;
    }
    if (s > 0 && perm[0] != 0) throw InputError("conjugate: permutation must fix state 0");
    AdjMatrix r(s, a.q(), a.n(), a.extended());
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) r(i, j) = a(perm[i], perm[j]);
    return r;
}

namespace detail {

// Joint colour refinement of two matrices. Signatures are mapped to colours
// through one shared ordered map, so colours are comparable across both sides.
class JointRefiner {
  public:
    JointRefiner(const AdjMatrix& a, const AdjMatrix& b) : m_{&a, &b} {}

    using Colors = std::vector<std::size_t>;

    /// Refines until stable. False if the colour histograms diverge.
    bool refine(Colors& ca, Colors& cb) const {
        std::size_t classes = count_classes(ca, cb);
        while (true) {
            using Entry = std::pair<std::size_t, const WeightEnum*>;
            using Sig = std::tuple<std::size_t, std::vector<Entry>, std::vector<Entry>>;
            const auto less_entry = [](const Entry& x, const Entry& y) {
                if (x.first != y.first) return x.first < y.first;
                return *x.second < *y.second;
            };
            const auto less_sig = [&](const Sig& x, const Sig& y) {
                if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
                for (int part = 0; part < 2; ++part) {
                    const auto& vx = part ? std::get<2>(x) : std::get<1>(x);
                    const auto& vy = part ? std::get<2>(y) : std::get<1>(y);
                    if (std::lexicographical_compare(vx.begin(), vx.end(), vy.begin(), vy.end(), less_entry)) return true;
                    if (std::lexicographical_compare(vy.begin(), vy.end(), vx.begin(), vx.end(), less_entry)) return false;
                }
                return false;
            };
            std::map<Sig, std::size_t, decltype(less_sig)> ids(less_sig);
            std::vector<Sig> sigs[2];
            Colors* cs[2] = {&ca, &cb};
            for (int side = 0; side < 2; ++side) {
                const AdjMatrix& m = *m_[side];
                const Colors& c = *cs[side];
                for (std::size_t v = 0; v < m.size(); ++v) {
                    Sig sig{c[v], {}, {}};
                    for (std::size_t w = 0; w < m.size(); ++w) {
                        if (!m(v, w).is_zero()) std::get<1>(sig).push_back({c[w], &m(v, w)});
                        if (!m(w, v).is_zero()) std::get<2>(sig).push_back({c[w], &m(w, v)});
                    }
                    std::sort(std::get<1>(sig).begin(), std::get<1>(sig).end(), less_entry);
                    std::sort(std::get<2>(sig).begin(), std::get<2>(sig).end(), less_entry);
                    sigs[side].push_back(std::move(sig));
                }
            }
            for (int side = 0; side < 2; ++side)
                for (const auto& sig : sigs[side]) ids.emplace(sig, 0);
            std::size_t next = 0;
            for (auto& [sig, id] : ids) id = next++;
            for (int side = 0; side < 2; ++side)
                for (std::size_t v = 0; v < sigs[side].size(); ++v) (*cs[side])[v] = ids.at(sigs[side][v]);
            if (!same_histogram(ca, cb)) return false;
            const std::size_t now = count_classes(ca, cb);
            if (now == classes) return true;
            classes = now;
        }
    }

    static bool same_histogram(const Colors& ca, const Colors& cb) {
        std::vector<std::size_t> ha, hb;
        for (std::size_t c : ca) {
            if (c >= ha.size()) ha.resize(c + 1);
            ++ha[c];
        }
        for (std::size_t c : cb) {
            if (c >= hb.size()) hb.resize(c + 1);
            ++hb[c];
        }
        ha.resize(std::max(ha.size(), hb.size()));
        hb.resize(ha.size());
        return ha == hb;
    }

  private:
    static std::size_t count_classes(const Colors& ca, const Colors& cb) {
        std::vector<std::size_t> all(ca);
        all.insert(all.end(), cb.begin(), cb.end());
        std::sort(all.begin(), all.end());
        return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
    }

    const AdjMatrix* m_[2];
};

// Individualisation-refinement search. Colours index vertices of a (= Lambda)
// and b (= Lambda'); on success perm maps b-vertices to a-vertices.
inline bool search_isomorphism(const JointRefiner& jr, const AdjMatrix& a, const AdjMatrix& b,
                               JointRefiner::Colors ca, JointRefiner::Colors cb, PermWitness& perm) {
    if (!jr.refine(ca, cb)) return false;
    const std::size_t s = a.size();
    // Smallest colour class with more than one member on the b side.
    std::map<std::size_t, std::vector<std::size_t>> cls_b;
    for (std::size_t v = 0; v < s; ++v) cls_b[cb[v]].push_back(v);
    const std::vector<std::size_t>* branch = nullptr;
    for (const auto& [c, members] : cls_b)
        if (members.size() > 1 && (!branch || members.size() < branch->size())) branch = &members;

    if (!branch) {
        std::vector<std::size_t> where(s);
        for (std::size_t v = 0; v < s; ++v) where[ca[v]] = v;
        for (std::size_t v = 0; v < s; ++v) perm[v] = where[cb[v]];
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                if (b(i, j) != a(perm[i], perm[j])) return false;
        return true;
    }

    const std::size_t x = branch->front();
    const std::size_t fresh = 2 * s + 1;  // above every colour id in use
    for (std::size_t y = 0; y < s; ++y) {
        if (ca[y] != cb[x]) continue;
        auto ca2 = ca, cb2 = cb;
        ca2[y] = fresh;
        cb2[x] = fresh;
        if (search_isomorphism(jr, a, b, std::move(ca2), std::move(cb2), perm)) return true;
    }
    return false;
}

}  // namespace detail

inline constexpr std::size_t kMaxIsomorphismStates = 256;

/// A permutation pi fixing 0 with Lambda' = Pi Lambda Pi^{-1}, if one exists.
/// The witness satisfies Lambda'(i, j) == Lambda(perm[i], perm[j]).
inline std::optional<PermWitness> gen_adj_equal(const AdjMatrix& a, const AdjMatrix& b,
                                                std::size_t max_states = kMaxIsomorphismStates) {
    if (a.size() != b.size() || a.q() != b.q() || a.n() != b.n() || a.extended() != b.extended())
        throw InputError("gen_adj_equal: matrices differ in size, alphabet, length or extension");
    const std::size_t s = a.size();
    if (s > max_states)
        throw LimitError("gen_adj_equal: " + std::to_string(s) + " states exceed the search bound " +
                         std::to_string(max_states));
    if (s == 0) return PermWitness{};
    // Colour 1 for state 0, colour 0 elsewhere; refinement keeps it apart.
    detail::JointRefiner::Colors ca(s, 0), cb(s, 0);
    ca[0] = cb[0] = 1;
    const detail::JointRefiner jr(a, b);
    PermWitness perm(s);
    if (!detail::search_isomorphism(jr, a, b, ca, cb, perm)) return std::nullopt;
    if (perm[0] != 0 || conjugate(a, perm) != b) throw std::logic_error("gen_adj_equal: witness does not verify");
    return perm;
}

// ---------------------------------------------------------------------------
// Recovering code parameters from the adjacency matrix

namespace detail {

inline std::optional<std::size_t> log_q(BigInt x, unsigned q) {
    if (x < 1) return std::nullopt;
    std::size_t e = 0;
    while (x > 1) {
        if (x % q != 0) return std::nullopt;
        x /= q;
        ++e;
    }
    return e;
}

}  // namespace detail

/// k from q^k = total edge count of row 0 of Gamma.
inline std::size_t recover_dimension(const AdjMatrix& m) {
    if (m.size() == 0) throw InputError("recover_dimension: empty matrix");
    BigInt total = m.extended() ? BigInt(0) : BigInt(1);
    for (std::size_t j = 0; j < m.size(); ++j) total += m(0, j).total_count();
    const auto k = detail::log_q(total, m.q());
    if (!k) throw InputError("recover_dimension: row-0 count " + total.str() + " is not a power of q = " +
                             std::to_string(m.q()));
    return *k;
}

struct ForneyRecovery {
    std::size_t k = 0;
    std::size_t gamma = 0;
    std::vector<std::size_t> rho;      // rho_0, rho_1, ... until stable
    std::vector<int> indices;          // ascending
};

/// Forney indices from the supports of the first rows of Gamma, Gamma^2, ...
/// Coefficients are nonnegative, so the support of e_0 Gamma^r is plain
/// reachability in r steps.
inline ForneyRecovery recover_forney(const AdjMatrix& m) {
    const std::size_t s = m.size();
    ForneyRecovery fr;
    fr.k = recover_dimension(m);
    const auto gamma = detail::log_q(BigInt(s), m.q());
    if (!gamma) throw InputError("recover_forney: state count is not a power of q");
    fr.gamma = *gamma;

    std::vector<bool> reach(s, false);
    reach[0] = true;
    while (true) {
        std::vector<bool> next(s, false);
        for (std::size_t i = 0; i < s; ++i) {
            if (!reach[i]) continue;
            for (std::size_t j = 0; j < s; ++j)
                if (!m(i, j).is_zero() || (i == 0 && j == 0)) next[j] = true;
        }
        const auto cnt = static_cast<std::size_t>(std::count(next.begin(), next.end(), true));
        const auto rho = detail::log_q(BigInt(cnt), m.q());
        if (!rho) throw InputError("recover_forney: reachable-state count " + std::to_string(cnt) + " is not a power of q");
        if (!fr.rho.empty() && *rho == fr.rho.back()) break;
        fr.rho.push_back(*rho);
        reach = std::move(next);
        if (fr.rho.size() > s + 1) throw std::logic_error("recover_forney: reachability did not stabilise");
    }
    if (fr.rho.back() != fr.gamma)
        throw InputError("recover_forney: reachable space has dimension " + std::to_string(fr.rho.back()) +
                         " but q^gamma = " + std::to_string(s));
    // greater[r] = #{i : gamma_i > r} = rho_r - rho_{r-1}, greater[0] = rho_0.
    std::vector<std::size_t> greater;
    for (std::size_t r = 0; r < fr.rho.size(); ++r) {
        const std::size_t prev = r ? fr.rho[r - 1] : 0;
        if (fr.rho[r] < prev || (r && fr.rho[r] - prev > greater.back()))
            throw InputError("recover_forney: rank sequence is not that of a controller form");
        greater.push_back(fr.rho[r] - prev);
    }
    if (greater[0] > fr.k) throw InputError("recover_forney: more nonzero indices than k");
    fr.indices.assign(fr.k - greater[0], 0);
    for (std::size_t r = 0; r < greater.size(); ++r) {
        const std::size_t above = r + 1 < greater.size() ? greater[r + 1] : 0;
        fr.indices.insert(fr.indices.end(), greater[r] - above, static_cast<int>(r + 1));
    }
    if (std::accumulate(fr.indices.begin(), fr.indices.end(), std::size_t{0}) != fr.gamma)
        throw InputError("recover_forney: indices do not sum to gamma");
    return fr;
}

// ---------------------------------------------------------------------------
// Monomial equivalence

/// Column j of G' equals scale[j] times column perm[j] of G.
struct MonomialWitness {
    std::vector<std::size_t> perm;
    std::vector<Elem> scale;
    friend bool operator==(const MonomialWitness&, const MonomialWitness&) = default;
};

inline constexpr std::uint64_t kDefaultMonomialBudget = std::uint64_t{1} << 24;

inline PolyMatrix apply_monomial(const PolyMatrix& G, const MonomialWitness& w) {
    const Field& F = G.field();
    PolyMatrix r(F, G.rows(), G.cols());
    for (std::size_t i = 0; i < G.rows(); ++i)
        for (std::size_t j = 0; j < G.cols(); ++j) r(i, j) = scale(F, G(i, w.perm[j]), w.scale[j]);
    return r;
}

namespace detail {

inline std::uint64_t monomial_search_size(std::size_t n, unsigned q, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        total *= i * static_cast<std::uint64_t>(q - 1);
        if (total > budget) return budget + 1;
    }
    return total;
}

}  // namespace detail

/// Exhaustive search over column permutations (lexicographic) and scalings
/// (value order); returns the first (P, R) with im(G P R) = im(G').
inline std::optional<MonomialWitness> monomial_equiv(const PolyMatrix& G, const PolyMatrix& G2,
                                                     std::uint64_t budget = kDefaultMonomialBudget) {
    if (G.field() != G2.field() || G.rows() != G2.rows() || G.cols() != G2.cols())
        throw InputError("monomial_equiv: matrices differ in field or shape");
    const Field& F = G.field();
    const std::size_t n = G.cols();
    if (detail::monomial_search_size(n, F.q(), budget) > budget)
        throw LimitError("monomial_equiv: n! (q-1)^n exceeds the budget of " + std::to_string(budget));
    const PolyMatrix target = hermite_form(G2);
    MonomialWitness w{std::vector<std::size_t>(n), std::vector<Elem>(n, 1)};
    std::iota(w.perm.begin(), w.perm.end(), 0);
    do {
        std::fill(w.scale.begin(), w.scale.end(), 1);
        while (true) {
            if (hermite_form(apply_monomial(G, w)) == target) return w;
            std::size_t j = n;
            while (j > 0 && w.scale[j - 1] == F.q() - 1) w.scale[--j] = 1;
            if (j == 0) break;
            ++w.scale[j - 1];
        }
    } while (std::next_permutation(w.perm.begin(), w.perm.end()));
    return std::nullopt;
}

inline constexpr std::size_t kMaxWeightCheckInputs = std::size_t{1} << 24;

/// wt(u M) == wt(u M') for every u in F^k.
inline bool weight_preserving_equiv_check(const Field& F, const ConstMatrix& M, const ConstMatrix& M2) {
    if (M.rows() != M2.rows() || M.cols() != M2.cols()) throw InputError("weight check: shape mismatch");
    const StateCodec inputs(F.q(), M.rows());
    if (M.rows() > 24 || inputs.count() > kMaxWeightCheckInputs) throw LimitError("weight check: too many inputs");
    for (std::size_t u = 0; u < inputs.count(); ++u) {
        const auto x = inputs.unpack(u);
        if (hamming_weight(vec_mul(F, x, M)) != hamming_weight(vec_mul(F, x, M2))) return false;
    }
    return true;
}

/// Column permutation and scaling with M' = M P R for constant matrices, by
/// backtracking over column assignments.
inline std::optional<MonomialWitness> constant_monomial_equiv(const Field& F, const ConstMatrix& M,
                                                              const ConstMatrix& M2) {
    if (M.rows() != M2.rows() || M.cols() != M2.cols()) throw InputError("monomial check: shape mismatch");
    const std::size_t n = M.cols(), k = M.rows();
    // fits[j][c] = s != 0 with M2[:, j] = s * M[:, c], or 0.
    std::vector<std::vector<Elem>> fits(n, std::vector<Elem>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c < n; ++c)
            for (Elem s = 1; s < F.q(); ++s) {
                bool ok = true;
                for (std::size_t i = 0; i < k && ok; ++i) ok = M2(i, j) == F.mul(s, M(i, c));
                if (ok) {
                    fits[j][c] = s;
                    break;
                }
            }
    MonomialWitness w{std::vector<std::size_t>(n), std::vector<Elem>(n)};
    std::vector<bool> used(n, false);
    const auto assign = [&](auto&& self, std::size_t j) -> bool {
        if (j == n) return true;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || fits[j][c] == 0) continue;
            used[c] = true;
            w.perm[j] = c;
            w.scale[j] = fits[j][c];
            if (self(self, j + 1)) return true;
            used[c] = false;
        }
        return false;
    };
    if (!assign(assign, 0)) return std::nullopt;
    return w;
}

// ---------------------------------------------------------------------------
// MacWilliams transform for binary codes with delta = 1

/// Gamma of the dual code from Gamma: 2^{-k-1} (1+W)^n M^T evaluated at
/// (1-W)/(1+W), M = S Gamma S, S = [[1, 1], [1, -1]]. Every division must be
/// exact and every coefficient nonnegative.
inline AdjMatrix macwilliams_delta1(const AdjMatrix& gamma, std::size_t n, std::size_t k) {
    if (gamma.q() != 2) throw InputError("macwilliams_delta1: field must be binary");
    if (gamma.size() != 2) throw InputError("macwilliams_delta1: requires s = 2 (delta = 1)");
    if (!gamma.extended()) throw InputError("macwilliams_delta1: requires the extended matrix Gamma");
    if (k > n) throw InputError("macwilliams_delta1: k exceeds n");
    const int S[2][2] = {{1, 1}, {1, -1}};
    WeightEnum M[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const WeightEnum t = gamma(a, b) * WeightEnum::constant(S[i][a] * S[b][j]);
                    M[i][j] += t;
                }

    // (1 - W)^i (1 + W)^{n - i} for i = 0..n.
    std::vector<WeightEnum> kernel(n + 1);
    const WeightEnum one_minus(std::vector<BigInt>{1, -1}), one_plus(std::vector<BigInt>{1, 1});
    for (std::size_t i = 0; i <= n; ++i) {
        WeightEnum t = WeightEnum::constant(1);
        for (std::size_t e = 0; e < i; ++e) t = t * one_minus;
        for (std::size_t e = i; e < n; ++e) t = t * one_plus;
        kernel[i] = t;
    }
    const BigInt denom = BigInt(1) << (k + 1);

    AdjMatrix out(2, 2, n, true);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const WeightEnum& f = M[j][i];  // transpose
            if (f.max_weight() > static_cast<int>(n))
                throw InputError("macwilliams_delta1: entry degree exceeds n");
            WeightEnum acc;
            for (std::size_t a = 0; a < f.coeffs().size(); ++a)
                if (f.coeffs()[a] != 0) acc += kernel[a] * WeightEnum::constant(f.coeffs()[a]);
            std::vector<BigInt> c = acc.coeffs();
            for (auto& x : c) {
                if (x % denom != 0) throw InputError("macwilliams_delta1: coefficient not divisible by 2^(k+1)");
                x /= denom;
                if (x < 0) throw InputError("macwilliams_delta1: negative coefficient after transform");
            }
            out(i, j) = WeightEnum(std::move(c));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Shift-permutation lemma

struct ShiftLemmaReport {
    std::size_t gamma = 0;
    std::size_t bijections = 0;     // (2^gamma)!
    std::size_t fixing_zero = 0;    // with pi(0) = 0
    std::size_t satisfying = 0;     // additionally satisfying the shift condition
    bool holds = false;             // the identity is the only solution
};

/// Enumerates every bijection pi of F_2^gamma and checks that the only one with
/// pi(0) = 0 and pi(u, X_1..X_{gamma-1})_{2..gamma} = pi(X)_{1..gamma-1} for all
/// X, u is the identity. States are packed with X_1 as the most significant bit.
inline ShiftLemmaReport verify_shift_permutation_lemma(std::size_t gamma) {
    if (gamma != 2 && gamma != 3) throw InputError("verify_shift_permutation_lemma: gamma must be 2 or 3");
    const std::size_t s = std::size_t{1} << gamma;
    const std::size_t low = (std::size_t{1} << (gamma - 1)) - 1;  // mask of the last gamma-1 bits
    ShiftLemmaReport rep;
    rep.gamma = gamma;
    std::vector<std::size_t> pi(s);
    std::iota(pi.begin(), pi.end(), 0);
    bool only_identity = true;
    do {
        ++rep.bijections;
        if (pi[0] != 0) continue;
        ++rep.fixing_zero;
        bool ok = true;
        for (std::size_t X = 0; X < s && ok; ++X)
            for (std::size_t u = 0; u < 2 && ok; ++u) {
                const std::size_t shifted = (u << (gamma - 1)) | (X >> 1);
                ok = (pi[shifted] & low) == (pi[X] >> 1);
            }
        if (!ok) continue;
        ++rep.satisfying;
        for (std::size_t x = 0; x < s; ++x) only_identity = only_identity && pi[x] == x;
    } while (std::next_permutation(pi.begin(), pi.end()));
    rep.holds = only_identity && rep.satisfying == 1;
    return rep;
}

}  // namespace convcode
