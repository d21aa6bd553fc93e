#pragma once

// Adjacency matrix of the state diagram, path-count powers, the molecular
// series Phi = ((I - L Lambda)^{-1})_{00}, the weight distribution
// Omega = 1 - Phi^{-1}, and the distance profiles read off them.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "convcode/encoder.hpp"
#include "convcode/polyalg.hpp"
#include "convcode/statediag.hpp"
#include "convcode/weight_enum.hpp"

namespace convcode {

/// Lambda: entry (i, j) is sum over edges i -> j of W^{wt(v)}.
inline AdjMatrix adjacency(const StateDiagram& sd) {
    AdjMatrix L(sd.size(), sd.q(), sd.n(), false);
    for (const Edge& e : sd.edges()) L(e.from, e.to).add_term(e.weight, 1);
    return L;
}

/// Gamma = Lambda + E_00.
inline AdjMatrix extend(const AdjMatrix& lambda) {
    if (lambda.extended()) throw InputError("extend: matrix is already extended");
    AdjMatrix g = lambda;
    g(0, 0).add_term(0, 1);
    g.set_extended(true);
    return g;
}

/// Inverse of extend.
inline AdjMatrix restrict_to_lambda(const AdjMatrix& gamma) {
    if (!gamma.extended()) throw InputError("matrix is not extended");
    AdjMatrix l = gamma;
    l(0, 0).add_term(0, -1);
    l.set_extended(false);
    return l;
}

inline AdjMatrix adj_power(const AdjMatrix& a, std::size_t l) {
    if (l == 0) throw InputError("adj_power: exponent must be at least 1");
    AdjMatrix r = a;
    for (std::size_t i = 1; i < l; ++i) r = mul(r, a);
    return r;
}

inline constexpr std::size_t kMaxBlockInputs = std::size_t{1} << 24;

/// 1 x 1 adjacency of a constant encoder: the block-code enumerator with the
/// zero word removed.
inline AdjMatrix block_adjacency(const PolyMatrix& G) {
    if (G.degree() > 0) throw InputError("block_adjacency: generator matrix is not constant");
    const Field& F = G.field();
    const StateCodec inputs(F.q(), G.rows());
    if (G.rows() > 24 || inputs.count() > kMaxBlockInputs)
        throw LimitError("block code has too many inputs to enumerate");
    const ConstMatrix D = G.coefficient(0);
    AdjMatrix L(1, F.q(), G.cols(), false);
    for (std::size_t u = 1; u < inputs.count(); ++u)
        L(0, 0).add_term(hamming_weight(vec_mul(F, inputs.unpack(u), D)), 1);
    return L;
}

/// Adjacency of a minimal encoder, routing delta = 0 through the block path.
inline AdjMatrix code_adjacency(const PolyMatrix& G) {
    const auto info = encoder_info(G);
    if (!info.is_minimal) throw InputError("adjacency requires a minimal generator matrix");
    if (info.delta == 0) return block_adjacency(G);
    return adjacency(build_state_diagram(controller_form(G)));
}

inline std::size_t default_truncation(std::size_t gamma) { return 4 * gamma + 8; }

/// Phi up to L^T via the row vector e_0 Lambda^l; c_l = (Lambda^l)_{00}.
inline LSeries phi_series(const AdjMatrix& lambda, std::size_t T) {
    if (lambda.extended()) throw InputError("phi_series expects the non-extended adjacency matrix");
    if (T < 1) throw InputError("phi_series: truncation must be at least 1");
    const std::size_t s = lambda.size();
    std::vector<std::vector<std::size_t>> support(s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (!lambda(i, j).is_zero()) support[i].push_back(j);
    LSeries phi = LSeries::one(T);
    std::vector<WeightEnum> row(s), next(s);
    row[0] = WeightEnum::constant(1);
    for (std::size_t l = 1; l <= T; ++l) {
        for (auto& w : next) w = WeightEnum{};
        for (std::size_t i = 0; i < s; ++i) {
            if (row[i].is_zero()) continue;
            for (std::size_t j : support[i]) next[j].add_product(row[i], lambda(i, j));
        }
        std::swap(row, next);
        phi[l] = row[0];
    }
    return phi;
}

inline LSeries omega_series(const LSeries& phi) {
    LSeries omega = LSeries::one(phi.order()) - inverse(phi);
    for (const auto& c : omega.coeffs())
        if (!c.nonnegative()) throw std::logic_error("omega_series: negative coefficient in the weight distribution");
    return omega;
}

/// Longest length l (number of coefficient vectors) an atomic word of weight
/// at most alpha can have, given at most `gap` consecutive zero vectors.
inline std::size_t atomic_length_bound(std::size_t alpha, std::size_t gap) {
    if (alpha == 0) return 0;
    return alpha + (alpha - 1) * gap;
}

/// Largest run of zero coefficient vectors inside an atomic word: m + m_hat - 1.
inline std::size_t atomic_gap_bound(const PolyMatrix& G) {
    const auto info = encoder_info(G);
    const int mhat = right_inverse(G).max_row_degree;
    return static_cast<std::size_t>(std::max(0, info.memory + mhat - 1));
}

struct FreeDistance {
    std::optional<unsigned> value;  // empty: no atomic word up to the truncation
    bool certified = false;         // no lighter atomic word can lie beyond the truncation
    std::size_t required_truncation = 0;
};

/// Smallest weight in Omega. Certified when every atomic word lighter than the
/// candidate is short enough to have been counted, i.e. T >= bound(d - 1).
inline FreeDistance free_distance(const LSeries& omega, std::optional<std::size_t> gap = std::nullopt) {
    FreeDistance fd;
    for (std::size_t l = 1; l <= omega.order(); ++l) {
        const auto w = omega[l].min_weight();
        if (w && (!fd.value || *w < *fd.value)) fd.value = *w;
    }
    if (fd.value && gap) {
        fd.required_truncation = atomic_length_bound(*fd.value - 1, *gap);
        fd.certified = omega.order() >= fd.required_truncation;
    }
    return fd;
}

inline constexpr std::size_t kMaxAutoTruncation = 512;

struct CertifiedSpectrum {
    std::size_t truncation = 0;
    LSeries phi, omega;
    FreeDistance free;
};

/// Starts at T0 and, if the free distance is not yet certified, recomputes
/// once at the required truncation. A lighter word found there only lowers
/// the requirement, so the second pass is certified.
inline CertifiedSpectrum certified_spectrum(const AdjMatrix& lambda, std::size_t gap, std::size_t T0,
                                            std::size_t cap = kMaxAutoTruncation) {
    CertifiedSpectrum r;
    r.truncation = T0;
    while (true) {
        r.phi = phi_series(lambda, r.truncation);
        r.omega = omega_series(r.phi);
        r.free = free_distance(r.omega, gap);
        if (r.free.certified || !r.free.value) return r;
        if (r.free.required_truncation > cap)
            throw LimitError("certifying the free distance needs T = " + std::to_string(r.free.required_truncation) +
                             ", above the cap of " + std::to_string(cap));
        r.truncation = r.free.required_truncation;
    }
}

/// d^r_l for l = 0..T-1: min weight of an atomic word of degree l, read off
/// L^{l+1} of Omega; empty when there is none within the truncation.
inline std::vector<std::optional<unsigned>> extended_row_distances(const LSeries& omega) {
    std::vector<std::optional<unsigned>> d;
    for (std::size_t l = 0; l < omega.order(); ++l) d.push_back(omega[l + 1].min_weight());
    return d;
}

/// a^b_l for l = 0..T-1: min weight of a molecular word of degree l, read off
/// L^{l+1} of Phi.
inline std::vector<std::optional<unsigned>> active_burst_distances(const LSeries& phi) {
    std::vector<std::optional<unsigned>> d;
    for (std::size_t l = 0; l < phi.order(); ++l) d.push_back(phi[l + 1].min_weight());
    return d;
}

}  // namespace convcode
