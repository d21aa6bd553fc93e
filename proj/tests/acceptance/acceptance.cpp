// Acceptance gate: one line per criterion, "[PASS]" or "[FAIL]", with the
// measured time against its limit. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "convcode/convcode.hpp"
#include "convcode/generators.hpp"

using namespace convcode;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream note;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) note << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Check&)>& body) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.note << "exception: " << e.what() << "; ";
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt >= limit_s) {
        c.ok = false;
        c.note << "over time; ";
    }
    if (!c.ok) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s, limit %g s", dt, limit_s);
    std::string note = c.note.str();
    if (note.size() >= 2) note.resize(note.size() - 2);
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << id << ". " << name << " (" << timing << ")"
              << (note.empty() ? "" : ": " + note) << std::endl;
}

PolyMatrix gm(const char* text) { return parse_gm(text); }

const char* const kE213 = "field p=2 m=1\nk=1 n=2\n1 1 1 1 ; 1 0 1 1\n";
const char* const kELambda1 = "field p=2 m=1\nk=2 n=3\n1 ; 1 ; 0\n0 ; 1 1 ; 0 1\n";
const char* const kG1 = "field p=2 m=1\nk=1 n=3\n1 ; 0 1 ; 1 1\n";
const char* const kG2 = "field p=2 m=1\nk=1 n=3\n0 1 ; 0 1 ; 1 1\n";

WeightEnum W(std::initializer_list<std::pair<unsigned, int>> terms) {
    WeightEnum w;
    for (const auto& [a, c] : terms) w.add_term(a, c);
    return w;
}

/// Series from (l, alpha, count) triples.
LSeries series(std::size_t T, std::initializer_list<std::tuple<std::size_t, unsigned, int>> terms) {
    LSeries f(T);
    for (const auto& [l, a, c] : terms) f[l].add_term(a, c);
    return f;
}

/// num / den expanded to order T.
LSeries rational(const LSeries& num, const LSeries& den) { return num * inverse(den); }

std::string first_difference(const LSeries& a, const LSeries& b) {
    for (std::size_t l = 0; l <= std::min(a.order(), b.order()); ++l) {
        const int top = std::max(a[l].max_weight(), b[l].max_weight());
        for (int w = 0; w <= top; ++w)
            if (a[l].coeff(static_cast<unsigned>(w)) != b[l].coeff(static_cast<unsigned>(w)))
                return "L^" + std::to_string(l) + "W^" + std::to_string(w) + ": " +
                       a[l].coeff(static_cast<unsigned>(w)).str() + " vs " + b[l].coeff(static_cast<unsigned>(w)).str();
    }
    return "";
}

std::vector<int> sorted_degrees(const PolyMatrix& G) {
    auto d = G.row_degrees();
    std::sort(d.begin(), d.end());
    return d;
}

// Codes shared between criteria 3, 6 and 7.
std::vector<PolyMatrix> oracle_codes, invariance_codes;

}  // namespace

int main() {
    std::cout << "convcode acceptance" << std::endl;

    criterion(1, "adjacency reproduction", 1.0, [](Check& c) {
        const auto L1 = code_adjacency(gm(kELambda1));
        c.expect(L1.size() == 2 && L1(0, 0) == W({{2, 1}}) && L1(0, 1) == W({{1, 2}}) && L1(1, 0) == W({{2, 2}}) &&
                     L1(1, 1) == W({{1, 1}, {3, 1}}),
                 "two-input example");
        const WeightEnum O, one = W({{0, 1}}), w1 = W({{1, 1}}), w2 = W({{2, 1}});
        const std::vector<std::vector<WeightEnum>> table = {
            {O, O, O, O, w2, O, O, O},  {w2, O, O, O, one, O, O, O}, {O, w2, O, O, O, one, O, O},
            {O, one, O, O, O, w2, O, O}, {O, O, w1, O, O, O, w1, O},  {O, O, w1, O, O, O, w1, O},
            {O, O, O, w1, O, O, O, w1}, {O, O, O, w1, O, O, O, w1}};
        const auto L = code_adjacency(gm(kE213));
        AdjMatrix expect(8, 2, 2, false);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) expect(i, j) = table[i][j];
        c.expect(L == expect, "8x8 matrix under the documented ordering");
        const auto w = gen_adj_equal(L, expect);
        c.expect(w.has_value() && conjugate(L, *w) == expect, "witness");
        c.note << "8x8 exact, witness identity=" << (w && std::is_sorted(w->begin(), w->end()) ? "yes" : "no") << "; ";
    });

    criterion(2, "weight distribution reproduction (T = 12)", 1.0, [](Check& c) {
        const auto omega = omega_series(phi_series(code_adjacency(gm(kE213)), 12));
        const auto table = series(12, {{5, 6, 1},
                                       {4, 7, 1}, {6, 7, 1}, {7, 7, 1},
                                       {6, 8, 1}, {7, 8, 1}, {8, 8, 1}, {9, 8, 2},
                                       {8, 9, 4}, {9, 9, 1}, {10, 9, 3}, {11, 9, 3}});
        std::size_t compared = 0;
        for (std::size_t l = 0; l <= 12; ++l)
            for (unsigned a = 0; a <= 9; ++a, ++compared)
                c.expect(omega[l].coeff(a) == table[l].coeff(a), "L^" + std::to_string(l) + "W^" + std::to_string(a));
        c.note << compared << " coefficients with weight <= 9 exact; ";
    });

    criterion(3, "oracle equivalence (l <= 8)", 120.0, [](Check& c) {
        Rng rng(20240601);
        std::vector<PolyMatrix> codes = {gm(kG1), gm(kG2)};
        for (int it = 0; it < 24; ++it) {
            const std::size_t k = 1 + it % 2;
            const std::size_t n = k + 1 + (it / 2) % (4 - k);
            codes.push_back(random_minimal_code(Field::binary(), k, n, 4, rng));
        }
        std::uint64_t inputs = 0;
        for (const auto& G : codes) {
            const auto t = enumerate_codewords(G, 8);
            const auto phi = phi_series(code_adjacency(G), 8);
            c.expect(t.atomic == omega_series(phi), "atomic tally of " + print_gm(G));
            c.expect(t.molecular == phi, "molecular tally of " + print_gm(G));
            inputs += t.inputs;
        }
        oracle_codes = codes;
        c.note << codes.size() << " codes (22 random), " << inputs << " inputs enumerated; ";
    });

    criterion(4, "G1/G2 pair end-to-end", 1.0, [](Check& c) {
        const std::size_t T = 12;
        const auto G1 = gm(kG1), G2 = gm(kG2);
        const auto L1 = code_adjacency(G1), L2 = code_adjacency(G2);
        const auto o1 = omega_series(phi_series(L1, T)), o2 = omega_series(phi_series(L2, T));
        const auto expect = rational(series(T, {{2, 4, 1}}), series(T, {{0, 0, 1}, {1, 2, -1}}));
        c.expect(o1 == expect && o2 == expect, "Omega = L^2W^4 / (1 - LW^2)");
        c.expect(!gen_adj_equal(L1, L2).has_value(), "generalized adjacency matrices differ");

        const auto d1 = restrict_to_lambda(macwilliams_delta1(extend(L1), 3, 1));
        const auto d2 = restrict_to_lambda(macwilliams_delta1(extend(L2), 3, 1));
        const auto od1 = omega_series(phi_series(d1, T)), od2 = omega_series(phi_series(d2, T));
        const auto p1 = rational(series(T, {{2, 2, 1}, {1, 3, 1}, {2, 3, 2}, {2, 5, -1}}),
                                 series(T, {{0, 0, 1}, {1, 1, -1}, {1, 2, -1}}));
        const auto p2 = rational(series(T, {{1, 2, 1}, {2, 3, 3}, {2, 5, -1}}),
                                 series(T, {{0, 0, 1}, {1, 1, -1}, {1, 3, -1}}));
        c.expect(od1 == p1, "Omega of the first dual");
        c.expect(od2 == p2, "Omega of the second dual");
        const auto diff = first_difference(od1, od2);
        c.expect(!diff.empty(), "dual series differ");
        c.note << "duals first differ at " << diff << "; ";
    });

    criterion(5, "MacWilliams transform for delta = 1", 5.0, [](Check& c) {
        const auto G1 = gm(kG1), G2 = gm(kG2);
        const auto t1 = macwilliams_delta1(extend(code_adjacency(G1)), 3, 1);
        const auto t2 = macwilliams_delta1(extend(code_adjacency(G2)), 3, 1);
        AdjMatrix p1(2, 2, 3, false), p2(2, 2, 3, false);
        p1(0, 0) = W({{3, 1}});
        p1(0, 1) = p1(1, 0) = p1(1, 1) = W({{1, 1}, {2, 1}});
        p2(0, 0) = W({{2, 1}});
        p2(0, 1) = W({{1, 2}});
        p2(1, 0) = W({{2, 2}});
        p2(1, 1) = W({{1, 1}, {3, 1}});
        c.expect(t1 == extend(p1) && t2 == extend(p2), "displayed dual matrices");
        c.expect(t1 == extend(code_adjacency(dual_basis(G1))), "first dual basis");
        c.expect(t2 == extend(code_adjacency(dual_basis(G2))), "second dual basis");
        Rng rng(5);
        int random = 0;
        for (int it = 0; it < 50; ++it) {
            const std::size_t n = 2 + it % 4;
            const std::size_t k = 1 + (it / 4) % (n - 1);
            const auto G = random_minimal_code(Field::binary(), k, n, 1, rng);
            const auto gamma = extend(code_adjacency(G));
            c.expect(macwilliams_delta1(gamma, n, k) == extend(code_adjacency(dual_basis(G))), "random " + print_gm(G));
            ++random;
        }
        c.note << "G1/G2 duals exact, " << random << " random (n,k,1) codes; ";
    });

    criterion(6, "invariance under minimality-preserving unimodular transforms", 60.0, [](Check& c) {
        Rng rng(66);
        int pairs = 0;
        for (int it = 0; it < 100; ++it) {
            const Field F = it % 2 ? Field::make(3, 1) : Field::binary();
            const std::size_t k = 1 + it % 3 / 2 + (it % 5 == 0);
            const std::size_t n = std::min<std::size_t>(4, k + 1 + it % 2);
            const auto G = random_minimal_code(F, k, n, 3, rng);
            const auto U = random_minimality_preserving_unimodular(G, rng);
            const auto UG = mul(U, G);
            c.expect(encoder_info(UG).is_minimal && codes_equal(G, UG), "U G is a minimal encoder of the same code");
            const auto a = code_adjacency(G), b = code_adjacency(UG);
            const auto w = gen_adj_equal(a, b);
            c.expect(w.has_value() && (*w)[0] == 0 && conjugate(a, *w) == b, "verified witness for " + print_gm(G));
            invariance_codes.push_back(G);
            invariance_codes.push_back(UG);
            ++pairs;
        }
        c.note << pairs << " pairs over F_2 and F_3; ";
    });

    criterion(7, "Forney recovery from Lambda alone", 60.0, [](Check& c) {
        std::size_t checked = 0;
        for (const auto* set : {&oracle_codes, &invariance_codes})
            for (const auto& G : *set) {
                const auto L = code_adjacency(G);
                const auto fr = recover_forney(L);
                c.expect(recover_dimension(L) == G.rows(), "dimension of " + print_gm(G));
                c.expect(fr.k == G.rows() && fr.indices == sorted_degrees(G), "indices of " + print_gm(G));
                ++checked;
            }
        c.expect(checked >= 200, "codes from criteria 3 and 6 available");
        c.note << checked << " codes; ";
    });

    criterion(8, "adjacency equality iff monomial equivalence (binary, k = 1)", 300.0, [](Check& c) {
        const Field& F = Field::binary();
        std::size_t pairs = 0, equivalent = 0;
        auto sweep = [&](std::size_t n, int max_gamma) {
            // All basic rows of degree <= max_gamma, grouped by degree.
            std::vector<std::vector<PolyMatrix>> by_gamma(static_cast<std::size_t>(max_gamma) + 1);
            const std::size_t per_entry = std::size_t{1} << (max_gamma + 1);
            std::size_t total = 1;
            for (std::size_t j = 0; j < n; ++j) total *= per_entry;
            for (std::size_t code = 1; code < total; ++code) {
                std::vector<Poly> row;
                std::size_t x = code;
                for (std::size_t j = 0; j < n; ++j, x /= per_entry) {
                    std::vector<Elem> cs;
                    for (int t = 0; t <= max_gamma; ++t) cs.push_back((x % per_entry >> t) & 1);
                    row.emplace_back(std::move(cs));
                }
                PolyMatrix G(F, {row});
                if (!encoder_info(G).is_minimal) continue;
                by_gamma[static_cast<std::size_t>(G.degree())].push_back(std::move(G));
            }
            for (const auto& group : by_gamma) {
                std::vector<AdjMatrix> lambdas;
                for (const auto& G : group) lambdas.push_back(code_adjacency(G));
                for (std::size_t i = 0; i < group.size(); ++i)
                    for (std::size_t j = i; j < group.size(); ++j) {
                        const bool adj = gen_adj_equal(lambdas[i], lambdas[j]).has_value();
                        const bool mono = monomial_equiv(group[i], group[j]).has_value();
                        c.expect(adj == mono, print_gm(group[i]) + " vs " + print_gm(group[j]));
                        ++pairs;
                        equivalent += mono;
                    }
            }
        };
        sweep(2, 3);
        sweep(3, 2);  // exhaustive here as well, which covers any sample
        c.note << pairs << " pairs (n = 2, gamma <= 3 and n = 3, gamma <= 2), " << equivalent << " equivalent; ";
    });

    criterion(9, "shift-permutation lemma by exhaustion", 60.0, [](Check& c) {
        const auto two = verify_shift_permutation_lemma(2);
        const auto three = verify_shift_permutation_lemma(3);
        c.expect(two.holds && two.bijections == 24 && two.fixing_zero == 6 && two.satisfying == 1, "gamma = 2");
        c.expect(three.holds && three.bijections == 40320 && three.fixing_zero == 5040 && three.satisfying == 1,
                 "gamma = 3");
        c.note << "gamma=2: " << two.satisfying << "/" << two.fixing_zero << ", gamma=3: " << three.satisfying << "/"
               << three.fixing_zero << " satisfying/0-fixing; ";
    });

    criterion(10, "catastrophicity and delay-freeness", 60.0, [](Check& c) {
        Rng rng(10);
        int nonbasic = 0, basic = 0, diagrams = 0;
        for (int it = 0; it < 50; ++it) {
            const std::size_t k = 1 + it % 2, n = k + 1 + it % 2;
            const auto G = random_nonbasic_full_rank(Field::binary(), k, n, 2, rng);
            c.expect(!encoder_info(G).is_basic, "generator is non-basic");
            const auto sd = build_state_diagram(controller_form_unchecked(G));
            c.expect(zero_weight_cycle_exists(sd) || !delay_free_check(sd), "non-basic detected: " + print_gm(G));
            c.expect(!zero_label_cycle_exists(sd), "no all-zero-label cycle");
            ++nonbasic;
            ++diagrams;
        }
        for (int it = 0; it < 50; ++it) {
            const Field F = it % 2 ? Field::make(3, 1) : Field::binary();
            const std::size_t k = 1 + it % 2, n = k + 1 + it % 2;
            const auto G = random_minimal_code(F, k, n, 3, rng);
            const auto sd = build_state_diagram(controller_form(G));
            c.expect(!zero_weight_cycle_exists(sd) && delay_free_check(sd), "basic minimal passes: " + print_gm(G));
            c.expect(!zero_label_cycle_exists(sd), "no all-zero-label cycle");
            ++basic;
            ++diagrams;
        }
        c.note << nonbasic << " non-basic flagged, " << basic << " basic clean, " << diagrams
               << " diagrams without zero-label cycles; ";
    });

    std::cout << (10 - failures) << "/10 criteria passed" << std::endl;
    return failures;
}
