// convcode: command-line front end for the convcode library.
//
// Exit codes: 0 success, 1 negative decision, 2 input error, 3 budget or
// size limit, 4 internal inconsistency.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "convcode/convcode.hpp"
#include "convcode/generators.hpp"
#include "convcode/json_io.hpp"

using namespace convcode;

namespace {

enum Exit : int { kOk = 0, kNegative = 1, kInput = 2, kLimit = 3, kInternal = 4 };

struct Options {
    std::optional<std::size_t> trunc;
    bool json = false;
    bool dot = false;
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> files;
    bool extended = false;
    bool allow_large = false;
    std::size_t l_max = 8;
    std::size_t gamma = 2;
};

PolyMatrix load(const std::string& path) {
    try {
        return read_gm_file(path);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class T>
std::string list(const std::vector<T>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

std::string profile(const std::vector<std::optional<unsigned>>& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + (d[i] ? std::to_string(*d[i]) : std::string("-"));
    return s + "]";
}

Json profile_json(const std::vector<std::optional<unsigned>>& d) {
    Json j = Json::array();
    for (const auto& x : d) j.push_back(json_optional(x));
    return j;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_matrix(const char* name, const ConstMatrix& m) {
    std::cout << name << " (" << m.rows() << "x" << m.cols() << ")\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << " ";
        for (Elem x : m.row(i)) std::cout << ' ' << x;
        std::cout << '\n';
    }
}

void print_adjacency(const AdjMatrix& a) {
    std::cout << (a.extended() ? "Gamma" : "Lambda") << " (" << a.size() << "x" << a.size() << ")\n";
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::cout << "  [";
        for (std::size_t j = 0; j < a.size(); ++j) std::cout << (j ? ", " : "") << to_string(a(i, j));
        std::cout << "]\n";
    }
}

std::size_t truncation_for(const Options& o, const PolyMatrix& G) {
    if (o.trunc) {
        if (*o.trunc == 0) throw InputError("--trunc must be at least 1");
        return *o.trunc;
    }
    return default_truncation(static_cast<std::size_t>(encoder_info(G).delta));
}

// ---------------------------------------------------------------------------

int cmd_info(const Options& o) {
    const auto G = load(o.files[0]);
    const auto info = encoder_info(G);
    if (o.json) {
        Json j = json_envelope("info");
        j.update({{"field", field_json(G.field())}, {"n", G.cols()}, {"k", G.rows()}, {"delta", info.delta},
                  {"indices", info.row_degrees}, {"basic", info.is_basic}, {"minimal", info.is_minimal},
                  {"memory", info.memory}});
        print_json(j);
    } else {
        std::cout << "n=" << G.cols() << " k=" << G.rows() << " delta=" << info.delta
                  << " indices=" << list(info.row_degrees) << " basic=" << yes_no(info.is_basic)
                  << " minimal=" << yes_no(info.is_minimal) << " memory=" << info.memory << '\n';
    }
    return kOk;
}

int cmd_ccf(const Options& o) {
    const auto G = load(o.files[0]);
    if (encoder_info(G).delta == 0) throw InputError("ccf: delta = 0 (block code) has no state space");
    const auto cf = controller_form(G);
    if (o.json) {
        Json j = json_envelope("ccf");
        j.update({{"gamma", cf.gamma}, {"block_degrees", cf.block_degrees}, {"A", cf.A}, {"B", cf.B}, {"C", cf.C},
                  {"D", cf.D}});
        print_json(j);
        return kOk;
    }
    std::cout << "gamma=" << cf.gamma << " block_degrees=" << list(cf.block_degrees) << '\n';
    print_matrix("A", cf.A);
    print_matrix("B", cf.B);
    print_matrix("C", cf.C);
    print_matrix("D", cf.D);
    return kOk;
}

int cmd_diagram(const Options& o) {
    const auto G = load(o.files[0]);
    const auto info = encoder_info(G);
    if (info.delta == 0) throw InputError("diagram: delta = 0 (block code) has no state space");
    // Non-minimal input is allowed here so catastrophic encoders can be inspected.
    const auto cf = info.is_minimal ? controller_form(G) : controller_form_unchecked(G);
    const auto sd = build_state_diagram(cf);
    if (o.dot) {
        std::cout << export_dot(sd, o.allow_large);
        return kOk;
    }
    const bool zw = zero_weight_cycle_exists(sd);
    const bool df = delay_free_check(sd);
    if (o.json) {
        Json edges = Json::array();
        for (const Edge& e : sd.edges()) {
            const auto v = sd.output(sd.edge_index(e));
            edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"u", sd.input(e)},
                                 {"v", std::vector<Elem>(v.begin(), v.end())}, {"w", e.weight}});
        }
        Json j = json_envelope("diagram");
        j.update({{"states", sd.size()}, {"minimal", info.is_minimal}, {"zero_weight_cycle", zw},
                  {"delay_free", df}, {"edges", std::move(edges)}});
        print_json(j);
        return kOk;
    }
    std::cout << "states=" << sd.size() << " edges=" << sd.edge_count() << " zero_weight_cycle=" << yes_no(zw)
              << " delay_free=" << yes_no(df) << '\n';
    if (!info.is_minimal) std::cout << "note: generator matrix is not minimal\n";
    for (const Edge& e : sd.edges())
        std::cout << "  s" << e.from << " -> s" << e.to << "  " << detail::format_vector(sd.input(e), sd.q()) << '|'
                  << detail::format_vector(sd.output(sd.edge_index(e)), sd.q()) << " (" << e.weight << ")\n";
    return kOk;
}

constexpr std::size_t kPrintMaxStates = 256;

int cmd_adjacency(const Options& o) {
    const auto G = load(o.files[0]);
    auto a = code_adjacency(G);
    if (a.size() > kPrintMaxStates && !o.allow_large)
        throw LimitError("Lambda has " + std::to_string(a.size()) + " states; printing is limited to " +
                         std::to_string(kPrintMaxStates) + " without --allow-large");
    if (o.extended) a = extend(a);
    if (o.json) {
        Json j = json_envelope("adjacency");
        j["matrix"] = a;
        print_json(j);
    } else {
        print_adjacency(a);
    }
    return kOk;
}

int cmd_spectrum(const Options& o) {
    const auto G = load(o.files[0]);
    const std::size_t T = truncation_for(o, G);
    const auto phi = phi_series(code_adjacency(G), T);
    const auto omega = omega_series(phi);
    if (o.json) {
        Json j = json_envelope("spectrum");
        j.update({{"truncation", T}, {"omega", omega}, {"phi", phi}});
        print_json(j);
    } else {
        std::cout << "T=" << T << '\n' << "Omega = " << to_string(omega) << '\n' << "Phi = " << to_string(phi) << '\n';
    }
    return kOk;
}

int cmd_distances(const Options& o) {
    const auto G = load(o.files[0]);
    const auto lambda = code_adjacency(G);
    const std::size_t gap = atomic_gap_bound(G);
    CertifiedSpectrum cs;
    if (o.trunc) {
        cs.truncation = truncation_for(o, G);
        cs.phi = phi_series(lambda, cs.truncation);
        cs.omega = omega_series(cs.phi);
        cs.free = free_distance(cs.omega, gap);
    } else {
        cs = certified_spectrum(lambda, gap, truncation_for(o, G));  // grows T until certified
    }
    const std::size_t T = cs.truncation;
    const auto& phi = cs.phi;
    const auto& omega = cs.omega;
    const auto& fd = cs.free;
    const auto dr = extended_row_distances(omega);
    const auto ab = active_burst_distances(phi);
    if (o.json) {
        Json j = json_envelope("distances");
        j.update({{"truncation", T},
                  {"free_distance", Json{{"value", json_optional(fd.value)},
                                         {"certified", fd.certified},
                                         {"required_truncation", fd.required_truncation}}},
                  {"extended_row", profile_json(dr)},
                  {"active_burst", profile_json(ab)}});
        print_json(j);
        return kOk;
    }
    std::cout << "T=" << T << '\n';
    if (fd.value)
        std::cout << "free_distance=" << *fd.value << " certified=" << yes_no(fd.certified)
                  << " required_truncation=" << fd.required_truncation << '\n';
    else
        std::cout << "free_distance=- (no atomic word up to T)\n";
    std::cout << "extended_row=" << profile(dr) << '\n' << "active_burst=" << profile(ab) << '\n';
    return kOk;
}

int cmd_dual(const Options& o) {
    const auto G = load(o.files[0]);
    const auto H = dual_basis(G);
    if (o.json) {
        Json j = json_envelope("dual");
        j["matrix"] = H;
        print_json(j);
    } else {
        std::cout << print_gm(H);
    }
    return kOk;
}

int cmd_macwilliams(const Options& o) {
    const auto G = load(o.files[0]);
    const auto info = encoder_info(G);
    if (info.delta != 1) throw InputError("macwilliams: requires delta = 1, got " + std::to_string(info.delta));
    const auto gamma = extend(code_adjacency(G));
    const auto predicted = macwilliams_delta1(gamma, G.cols(), G.rows());
    const auto actual = extend(code_adjacency(dual_basis(G)));
    const bool match = predicted == actual;
    if (o.json) {
        Json j = json_envelope("macwilliams");
        j.update({{"gamma", gamma}, {"dual_gamma", predicted}, {"matches_dual_basis", match}});
        print_json(j);
    } else {
        print_adjacency(gamma);
        std::cout << "dual ";
        print_adjacency(predicted);
        std::cout << "matches dual basis: " << yes_no(match) << '\n';
    }
    return match ? kOk : kNegative;
}

int cmd_equal(const Options& o) {
    const auto G = load(o.files[0]), G2 = load(o.files[1]);
    if (G.field() != G2.field()) throw InputError("equal: codes are over different fields");
    const auto a = code_adjacency(G), b = code_adjacency(G2);
    std::optional<PermWitness> w;
    if (a.size() == b.size() && a.n() == b.n()) w = gen_adj_equal(a, b);
    if (o.json) {
        Json j = json_envelope("equal");
        j["equal"] = w.has_value();
        j["witness"] = w ? Json{{"perm", *w}} : Json(nullptr);
        print_json(j);
    } else if (w) {
        std::cout << "generalized adjacency matrices are equal; perm=" << list(*w) << '\n';
    } else {
        std::cout << "generalized adjacency matrices differ\n";
    }
    return w ? kOk : kNegative;
}

int cmd_mono_equiv(const Options& o) {
    const auto G = load(o.files[0]), G2 = load(o.files[1]);
    const auto w = monomial_equiv(G, G2, o.budget.value_or(kDefaultMonomialBudget));
    if (o.json) {
        Json j = json_envelope("mono-equiv");
        j["equivalent"] = w.has_value();
        j["witness"] = w ? Json{{"perm", w->perm}, {"scale", w->scale}} : Json(nullptr);
        print_json(j);
    } else if (w) {
        std::cout << "monomially equivalent; perm=" << list(w->perm) << " scale=" << list(w->scale) << '\n';
    } else {
        std::cout << "not monomially equivalent\n";
    }
    return w ? kOk : kNegative;
}

int cmd_recover(const Options& o) {
    const auto G = load(o.files[0]);
    const auto info = encoder_info(G);
    const auto fr = recover_forney(code_adjacency(G));
    auto expect = info.row_degrees;
    std::sort(expect.begin(), expect.end());
    const bool match = fr.k == G.rows() && fr.indices == expect;
    if (o.json) {
        Json j = json_envelope("recover");
        j.update({{"k", fr.k}, {"gamma", fr.gamma}, {"rho", fr.rho}, {"indices", fr.indices},
                  {"matches_encoder", match}});
        print_json(j);
    } else {
        std::cout << "k=" << fr.k << " gamma=" << fr.gamma << " indices=" << list(fr.indices) << " rho=" << list(fr.rho)
                  << " matches_encoder=" << yes_no(match) << '\n';
    }
    return match ? kOk : kNegative;
}

int cmd_oracle(const Options& o) {
    const auto G = load(o.files[0]);
    if (o.l_max == 0) throw InputError("--lmax must be at least 1");
    const auto t = enumerate_codewords(G, o.l_max, o.budget.value_or(kDefaultOracleBudget));
    const auto phi = phi_series(code_adjacency(G), o.l_max);
    const bool match = t.atomic == omega_series(phi) && t.molecular == phi;
    if (o.json) {
        Json j = json_envelope("oracle");
        j.update({{"l_max", o.l_max}, {"inputs", t.inputs}, {"atomic", t.atomic}, {"molecular", t.molecular},
                  {"matches_spectrum", match}});
        print_json(j);
    } else {
        std::cout << "l_max=" << o.l_max << " inputs=" << t.inputs << " atomic_words=" << t.atomic_words
                  << " molecular_words=" << t.molecular_words << '\n'
                  << "atomic = " << to_string(t.atomic) << '\n'
                  << "molecular = " << to_string(t.molecular) << '\n'
                  << "matches spectrum: " << yes_no(match) << '\n';
    }
    return match ? kOk : kNegative;
}

int cmd_lemma_a1(const Options& o) {
    const auto r = verify_shift_permutation_lemma(o.gamma);
    if (o.json) {
        Json j = json_envelope("lemma-a1");
        j.update({{"gamma", r.gamma}, {"bijections", r.bijections}, {"fixing_zero", r.fixing_zero},
                  {"satisfying", r.satisfying}, {"holds", r.holds}});
        print_json(j);
    } else {
        std::cout << "gamma=" << r.gamma << " bijections=" << r.bijections << " fixing_zero=" << r.fixing_zero
                  << " satisfying=" << r.satisfying << " holds=" << yes_no(r.holds) << '\n';
    }
    return r.holds ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convolutional codes: canonical forms, state diagrams, weight distributions and invariants"};
    app.require_subcommand(1);
    Options o;
    int (*handler)(const Options&) = nullptr;

    auto add = [&](const char* name, const char* help, int (*fn)(const Options&), std::size_t files) {
        auto* sub = app.add_subcommand(name, help);
        if (files > 0) sub->add_option("files", o.files, files == 1 ? "generator matrix (.gm)" : "two generator matrices (.gm)")
                           ->required()
                           ->expected(static_cast<int>(files));
        sub->add_option("--trunc", o.trunc, "truncation order T in L (default 4*delta + 8)");
        sub->add_flag("--json", o.json, "machine-readable output");
        sub->add_flag("--dot", o.dot, "Graphviz output (diagram)");
        sub->add_option("--budget", o.budget, "work budget for exhaustive searches");
        sub->add_option("--seed", o.seed, "seed for randomized commands");
        sub->callback([&handler, fn] { handler = fn; });
        return sub;
    };
    add("info", "dimensions, degree, Forney indices, basic/minimal", cmd_info, 1);
    add("ccf", "controller canonical form (A, B, C, D)", cmd_ccf, 1);
    add("diagram", "state diagram", cmd_diagram, 1)->add_flag("--allow-large", o.allow_large, "lift the DOT size guard");
    {
        auto* sub = add("adjacency", "adjacency matrix Lambda", cmd_adjacency, 1);
        sub->add_flag("--extended", o.extended, "print Gamma = Lambda + E_00");
        sub->add_flag("--allow-large", o.allow_large, "lift the size guard");
    }
    add("spectrum", "weight distribution Omega and molecular series Phi", cmd_spectrum, 1);
    add("distances", "free distance, extended row and active burst distances", cmd_distances, 1);
    add("dual", "canonical basis of the dual code", cmd_dual, 1);
    add("macwilliams", "MacWilliams transform of Gamma for delta = 1", cmd_macwilliams, 1);
    add("equal", "compare generalized adjacency matrices", cmd_equal, 2);
    add("mono-equiv", "search for a monomial equivalence", cmd_mono_equiv, 2);
    add("recover", "recover k and Forney indices from Lambda", cmd_recover, 1);
    add("oracle", "brute-force atomic and molecular tallies", cmd_oracle, 1)->add_option("--lmax", o.l_max, "maximal word length (default 8)");
    add("lemma-a1", "exhaustive check of the shift-permutation lemma", cmd_lemma_a1, 0)
        ->add_option("gamma", o.gamma, "gamma, 2 or 3 (default 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }
    try {
        return handler(o);
    } catch (const LimitError& e) {
        std::cerr << "convcode: limit: " << e.what() << '\n';
        return kLimit;
    } catch (const InputError& e) {
        std::cerr << "convcode: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "convcode: internal error: " << e.what() << '\n';
        return kInternal;
    }
}
