#pragma once

// Explicit state diagram over F_q^gamma. Edges X_i --(u|v)--> X_j with
// X_j = X_i A + u B, v = X_i C + u D for every (X_i, u) != (0, 0).

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "convcode/encoder.hpp"
#include "convcode/error.hpp"

namespace convcode {

struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t input = 0;  // packed u, same digit order as states
    unsigned weight = 0;    // wt(v)
};

class StateDiagram {
  public:
    static constexpr std::size_t kDefaultMaxStates = std::size_t{1} << 20;

    unsigned q() const { return q_; }
    std::size_t k() const { return k_; }
    std::size_t n() const { return n_; }
    std::size_t gamma() const { return gamma_; }
    std::size_t size() const { return offsets_.size() - 1; }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t rank_d() const { return rank_d_; }

    std::span<const Edge> edges() const { return edges_; }
    /// Edges leaving vertex i, ordered by input.
    std::span<const Edge> out_edges(std::size_t i) const {
        return std::span<const Edge>(edges_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
    }
    std::size_t edge_index(const Edge& e) const { return static_cast<std::size_t>(&e - edges_.data()); }
    std::span<const Elem> output(std::size_t edge) const { return {outputs_.data() + edge * n_, n_}; }

    std::vector<Elem> state(std::size_t i) const { return StateCodec(q_, gamma_).unpack(i); }
    std::vector<Elem> input(const Edge& e) const { return StateCodec(q_, k_).unpack(e.input); }

    friend StateDiagram build_state_diagram(const ControllerForm& cf, std::size_t max_states);
    /// Test hook: adds an edge outside the shift-register dynamics.
    void plant_edge(Edge e, std::vector<Elem> v);

  private:
    unsigned q_ = 2;
    std::size_t k_ = 0, n_ = 0, gamma_ = 0, rank_d_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Edge> edges_;
    std::vector<Elem> outputs_;
};

inline StateDiagram build_state_diagram(const ControllerForm& cf,
                                        std::size_t max_states = StateDiagram::kDefaultMaxStates) {
    const Field& F = cf.field;
    const unsigned q = F.q();
    const StateCodec states(q, cf.gamma), inputs(q, cf.k());
    if (cf.gamma > 64 || states.count() > max_states || states.count() == 0)
        throw LimitError("state space q^gamma = " + std::to_string(q) + "^" + std::to_string(cf.gamma) +
                         " exceeds the ceiling of " + std::to_string(max_states) + " states");

    StateDiagram sd;
    sd.q_ = q;
    sd.k_ = cf.k();
    sd.n_ = cf.n();
    sd.gamma_ = cf.gamma;
    sd.rank_d_ = rank(F, cf.D);

    std::vector<std::vector<Elem>> uB(inputs.count()), uD(inputs.count());
    for (std::size_t u = 0; u < inputs.count(); ++u) {
        const auto uv = inputs.unpack(u);
        uB[u] = vec_mul(F, uv, cf.B);
        uD[u] = vec_mul(F, uv, cf.D);
    }
    const std::size_t s = states.count();
    sd.offsets_.assign(1, 0);
    sd.edges_.reserve(s * inputs.count());
    sd.outputs_.reserve(s * inputs.count() * cf.n());
    std::vector<Elem> next(cf.gamma), v(cf.n());
    for (std::size_t i = 0; i < s; ++i) {
        const auto X = states.unpack(i);
        const auto XA = vec_mul(F, X, cf.A);
        const auto XC = vec_mul(F, X, cf.C);
        for (std::size_t u = (i == 0 ? 1 : 0); u < inputs.count(); ++u) {
            for (std::size_t t = 0; t < cf.gamma; ++t) next[t] = F.add(XA[t], uB[u][t]);
            for (std::size_t j = 0; j < cf.n(); ++j) v[j] = F.add(XC[j], uD[u][j]);
            sd.edges_.push_back({i, states.pack(next), u, hamming_weight(v)});
            sd.outputs_.insert(sd.outputs_.end(), v.begin(), v.end());
        }
        sd.offsets_.push_back(sd.edges_.size());
    }
    return sd;
}

inline void StateDiagram::plant_edge(Edge e, std::vector<Elem> v) {
    if (v.size() != n_) throw InputError("plant_edge: output length mismatch");
    const std::size_t pos = offsets_[e.from + 1];
    edges_.insert(edges_.begin() + static_cast<std::ptrdiff_t>(pos), e);
    outputs_.insert(outputs_.begin() + static_cast<std::ptrdiff_t>(pos * n_), v.begin(), v.end());
    for (std::size_t i = e.from + 1; i < offsets_.size(); ++i) ++offsets_[i];
}

namespace detail {

// Directed cycle detection restricted to edges accepted by keep().
template <class Keep>
bool has_cycle(const StateDiagram& sd, Keep keep) {
    enum : unsigned char { white, grey, black };
    std::vector<unsigned char> color(sd.size(), white);
    std::vector<std::pair<std::size_t, std::size_t>> stack;  // vertex, next edge offset
    for (std::size_t root = 0; root < sd.size(); ++root) {
        if (color[root] != white) continue;
        stack.push_back({root, 0});
        color[root] = grey;
        while (!stack.empty()) {
            auto& [v, pos] = stack.back();
            const auto out = sd.out_edges(v);
            if (pos == out.size()) {
                color[v] = black;
                stack.pop_back();
                continue;
            }
            const Edge& e = out[pos++];
            if (!keep(e)) continue;
            if (color[e.to] == grey) return true;
            if (color[e.to] == white) {
                color[e.to] = grey;
                stack.push_back({e.to, 0});
            }
        }
    }
    return false;
}

}  // namespace detail

/// A directed cycle made of weight-0 edges exists (catastrophic encoder).
inline bool zero_weight_cycle_exists(const StateDiagram& sd) {
    return detail::has_cycle(sd, [](const Edge& e) { return e.weight == 0; });
}

/// A directed cycle whose edges all carry u = 0 and v = 0. Never exists for a
/// diagram built from a controller form.
inline bool zero_label_cycle_exists(const StateDiagram& sd) {
    return detail::has_cycle(sd, [](const Edge& e) { return e.weight == 0 && e.input == 0; });
}

/// True iff no edge 0 --(u|0)--> X with u != 0 exists, i.e. rank G(0) = k.
inline bool delay_free_check(const StateDiagram& sd) {
    bool ok = true;
    for (const Edge& e : sd.out_edges(0))
        if (e.input != 0 && e.weight == 0) ok = false;
    if (ok != (sd.rank_d() == sd.k())) throw std::logic_error("delay_free_check disagrees with rank of D");
    return ok;
}

namespace detail {

inline std::string format_vector(std::span<const Elem> x, unsigned q) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (q > 10 && i) s += ",";
        s += std::to_string(x[i]);
    }
    return q > 10 ? "(" + s + ")" : s;
}

}  // namespace detail

inline constexpr std::size_t kDotMaxStates = 4096;

/// Graphviz rendering. Vertex labels are state vectors, edge labels "u|v (w)".
inline std::string export_dot(const StateDiagram& sd, bool allow_large = false) {
    if (sd.size() > kDotMaxStates && !allow_large)
        throw LimitError("diagram has " + std::to_string(sd.size()) + " states; DOT export is limited to " +
                         std::to_string(kDotMaxStates) + " without override");
    std::ostringstream os;
    os << "digraph state_diagram {\n";
    os << "  rankdir=LR;\n";
    for (std::size_t i = 0; i < sd.size(); ++i)
        os << "  s" << i << " [label=\"" << detail::format_vector(sd.state(i), sd.q()) << "\"];\n";
    for (const Edge& e : sd.edges()) {
        os << "  s" << e.from << " -> s" << e.to << " [label=\"" << detail::format_vector(sd.input(e), sd.q()) << "|"
           << detail::format_vector(sd.output(sd.edge_index(e)), sd.q()) << " (" << e.weight << ")\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace convcode
