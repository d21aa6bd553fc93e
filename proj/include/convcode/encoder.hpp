#pragma once

// Controller canonical form (A, B, C, D) of a polynomial encoder and the
// shift-register recursion x_{t+1} = x_t A + u_t B, v_t = x_t C + u_t D.

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "convcode/error.hpp"
#include "convcode/matrix.hpp"
#include "convcode/polyalg.hpp"

namespace convcode {

/// Bijection F_q^len <-> {0..q^len - 1}: base-q value with the first
/// coordinate as the most significant digit. Index 0 is the zero vector.
class StateCodec {
  public:
    StateCodec(unsigned q, std::size_t len) : q_(q), len_(len) {
        count_ = 1;
        for (std::size_t i = 0; i < len; ++i) count_ *= q;
    }

    std::size_t count() const { return count_; }
    std::size_t length() const { return len_; }

    std::size_t pack(std::span<const Elem> x) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < len_; ++i) idx = idx * q_ + x[i];
        return idx;
    }
    std::vector<Elem> unpack(std::size_t idx) const {
        std::vector<Elem> x(len_);
        for (std::size_t i = len_; i-- > 0;) {
            x[i] = static_cast<Elem>(idx % q_);
            idx /= q_;
        }
        return x;
    }

  private:
    unsigned q_;
    std::size_t len_;
    std::size_t count_;
};

struct ControllerForm {
    Field field;
    PolyMatrix source;
    std::vector<int> block_degrees;  // gamma_1..gamma_k
    std::size_t gamma = 0;           // sum of block degrees
    ConstMatrix A;                   // gamma x gamma
    ConstMatrix B;                   // k x gamma
    ConstMatrix C;                   // gamma x n
    ConstMatrix D;                   // k x n, equals G(0)

    std::size_t k() const { return source.rows(); }
    std::size_t n() const { return source.cols(); }
    std::size_t memory() const {
        return static_cast<std::size_t>(*std::max_element(block_degrees.begin(), block_degrees.end()));
    }
};

/// Assembles (A, B, C, D) from the row degrees of G without checking
/// minimality. Needed for the catastrophicity diagnostics on non-basic input.
inline ControllerForm controller_form_unchecked(const PolyMatrix& G) {
    const Field& F = G.field();
    const std::size_t k = G.rows(), n = G.cols();
    ControllerForm cf;
    cf.field = F;
    cf.source = G;
    cf.block_degrees = G.row_degrees();
    for (std::size_t i = 0; i < k; ++i)
        if (cf.block_degrees[i] < 0) throw InputError("controller form: row " + std::to_string(i + 1) + " is zero");
    cf.gamma = static_cast<std::size_t>(std::accumulate(cf.block_degrees.begin(), cf.block_degrees.end(), 0));
    if (cf.gamma == 0) throw InputError("controller form requires gamma > 0 (constant generator matrix)");

    cf.A = ConstMatrix(cf.gamma, cf.gamma, 0);
    cf.B = ConstMatrix(k, cf.gamma, 0);
    cf.C = ConstMatrix(cf.gamma, n, 0);
    cf.D = G.coefficient(0);
    std::size_t off = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto gi = static_cast<std::size_t>(cf.block_degrees[i]);
        if (gi == 0) continue;  // no block, zero row in B
        for (std::size_t t = 0; t + 1 < gi; ++t) cf.A(off + t, off + t + 1) = 1;
        cf.B(i, off) = 1;
        for (std::size_t t = 1; t <= gi; ++t)
            for (std::size_t j = 0; j < n; ++j) cf.C(off + t - 1, j) = G(i, j).coeff(t);
        off += gi;
    }
    return cf;
}

inline ControllerForm controller_form(const PolyMatrix& G) {
    const auto info = encoder_info(G);
    if (!info.is_minimal) throw InputError("controller form requires a minimal generator matrix");
    if (info.delta == 0) throw InputError("controller form requires gamma > 0 (constant generator matrix)");
    return controller_form_unchecked(G);
}

/// Checks G = D + sum_{j=0}^{T-1} z^{j+1} B A^j C. Exact because A is nilpotent.
inline bool realization_check(const ControllerForm& cf, std::size_t T) {
    if (T < cf.gamma) throw InputError("realization_check: truncation below gamma");
    const Field& F = cf.field;
    if (cf.source.degree() > static_cast<int>(T)) return false;
    if (cf.source.coefficient(0) != cf.D) return false;
    ConstMatrix BA = cf.B;  // B A^j
    for (std::size_t j = 0; j < T; ++j) {
        if (cf.source.coefficient(static_cast<int>(j + 1)) != mul(F, BA, cf.C)) return false;
        BA = mul(F, BA, cf.A);
    }
    return true;
}

struct StateSequence {
    std::vector<std::vector<Elem>> states;   // x_0 .. x_{N+1}
    std::vector<std::vector<Elem>> outputs;  // v_0 .. v_N
    std::vector<Poly> codeword;              // v as n polynomials
    int degree = kNegInfDegree;              // N
};

/// Runs the recursion for a polynomial input u (k polynomials).
inline StateSequence state_sequence(const ControllerForm& cf, const std::vector<Poly>& u) {
    const Field& F = cf.field;
    if (u.size() != cf.k())
        throw InputError("input has " + std::to_string(u.size()) + " components, expected k = " + std::to_string(cf.k()));
    for (const auto& p : u) check_poly(F, p);

    const int du = vector_degree(u);
    StateSequence seq;
    std::vector<Elem> x(cf.gamma, 0);
    seq.states.push_back(x);
    if (du == kNegInfDegree) return seq;

    const std::size_t horizon = static_cast<std::size_t>(du) + cf.memory() + 1;
    std::vector<std::vector<Elem>> outs;
    for (std::size_t t = 0; t < horizon; ++t) {
        std::vector<Elem> ut(cf.k());
        for (std::size_t i = 0; i < cf.k(); ++i) ut[i] = u[i].coeff(t);
        auto xa = vec_mul(F, x, cf.A);
        auto ub = vec_mul(F, ut, cf.B);
        auto xc = vec_mul(F, x, cf.C);
        auto ud = vec_mul(F, ut, cf.D);
        std::vector<Elem> v(cf.n());
        for (std::size_t j = 0; j < cf.n(); ++j) v[j] = F.add(xc[j], ud[j]);
        for (std::size_t j = 0; j < cf.gamma; ++j) x[j] = F.add(xa[j], ub[j]);
        outs.push_back(std::move(v));
        seq.states.push_back(x);
    }
    int N = kNegInfDegree;
    for (std::size_t t = 0; t < outs.size(); ++t)
        if (hamming_weight(outs[t]) > 0) N = static_cast<int>(t);
    seq.degree = N;
    if (N == kNegInfDegree) {
        seq.states.resize(1);
        return seq;
    }
    outs.resize(static_cast<std::size_t>(N) + 1);
    seq.states.resize(static_cast<std::size_t>(N) + 2);
    seq.codeword.assign(cf.n(), Poly{});
    for (std::size_t j = 0; j < cf.n(); ++j) {
        std::vector<Elem> c(outs.size());
        for (std::size_t t = 0; t < outs.size(); ++t) c[t] = outs[t][j];
        seq.codeword[j] = Poly(std::move(c));
    }
    seq.outputs = std::move(outs);
    return seq;
}

enum class CodewordKind { atomic, molecular_tight, concatenated_loose };

inline const char* to_string(CodewordKind k) {
    switch (k) {
        case CodewordKind::atomic: return "atomic";
        case CodewordKind::molecular_tight: return "molecular-tight";
        case CodewordKind::concatenated_loose: return "concatenated-loose";
    }
    return "?";
}

struct Classification {
    CodewordKind kind = CodewordKind::atomic;
    std::vector<std::size_t> concat_times;  // L in 1..N with x_L = 0
    std::vector<std::size_t> tight_times;   // those with v_L != 0
    bool molecular() const { return kind != CodewordKind::concatenated_loose; }
};

/// Splits are detected by the state returning to zero. Inputs must start at
/// time 0 (u_0 != 0); shifted inputs are rejected, not normalized.
inline Classification classify_sequence(const StateSequence& seq) {
    Classification c;
    if (seq.degree == kNegInfDegree) throw InputError("classify: zero codeword");
    const auto N = static_cast<std::size_t>(seq.degree);
    for (std::size_t L = 1; L <= N; ++L) {
        if (hamming_weight(seq.states[L]) != 0) continue;
        c.concat_times.push_back(L);
        if (hamming_weight(seq.outputs[L]) != 0) c.tight_times.push_back(L);
    }
    if (c.concat_times.empty())
        c.kind = CodewordKind::atomic;
    else if (c.tight_times.size() == c.concat_times.size())
        c.kind = CodewordKind::molecular_tight;
    else
        c.kind = CodewordKind::concatenated_loose;
    return c;
}

inline Classification classify(const ControllerForm& cf, const std::vector<Poly>& u) {
    bool u0 = false;
    for (const auto& p : u) u0 = u0 || p.coeff(0) != 0;
    if (vector_degree(u) == kNegInfDegree) throw InputError("classify: input is zero");
    if (!u0) throw InputError("classify: input must satisfy u_0 != 0");
    return classify_sequence(state_sequence(cf, u));
}

}  // namespace convcode
