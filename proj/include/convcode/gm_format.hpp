#pragma once

// The .gm generator-matrix text format:
//
//   # comment
//   field p=2 m=4 modulus=19
//   k=2 n=3
//   2 2 1 ; 12 2 7 ; 14 2 6
//   1 1 ; 7 6 ; 6 7
//
// One line per row, entries separated by ';', each entry a list of
// coefficients (low degree first) in the integer encoding of the field.

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "convcode/error.hpp"
#include "convcode/galois.hpp"
#include "convcode/matrix.hpp"

namespace convcode {

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> split_ws(std::string_view s, std::size_t col0) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        const std::size_t b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > b) out.push_back({s.substr(b, i - b), col0 + b});
    }
    return out;
}

inline unsigned parse_uint(const Token& t, std::size_t line, const char* what) {
    unsigned v = 0;
    const auto* end = t.text.data() + t.text.size();
    const auto [p, ec] = std::from_chars(t.text.data(), end, v);
    if (ec != std::errc{} || p != end)
        throw ParseError(line, t.column, std::string("expected a nonnegative integer for ") + what + ", got '" +
                                             std::string(t.text) + "'");
    return v;
}

/// key=value tokens; every key in `keys` may appear at most once.
inline std::vector<std::optional<unsigned>> parse_assignments(const std::vector<Token>& toks, std::size_t first,
                                                              std::size_t line,
                                                              const std::vector<std::string_view>& keys) {
    std::vector<std::optional<unsigned>> vals(keys.size());
    for (std::size_t i = first; i < toks.size(); ++i) {
        const auto& t = toks[i];
        const auto eq = t.text.find('=');
        if (eq == std::string_view::npos) throw ParseError(line, t.column, "expected key=value, got '" + std::string(t.text) + "'");
        const auto key = t.text.substr(0, eq);
        std::size_t slot = keys.size();
        for (std::size_t j = 0; j < keys.size(); ++j)
            if (keys[j] == key) slot = j;
        if (slot == keys.size()) throw ParseError(line, t.column, "unknown key '" + std::string(key) + "'");
        if (vals[slot]) throw ParseError(line, t.column, "duplicate key '" + std::string(key) + "'");
        const Token v{t.text.substr(eq + 1), t.column + eq + 1};
        vals[slot] = parse_uint(v, line, std::string(key).c_str());
    }
    return vals;
}

}  // namespace detail

inline PolyMatrix parse_gm(std::string_view text) {
    struct Line {
        std::size_t number;
        std::string_view body;
    };
    std::vector<Line> lines;
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        auto body = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++number;
        if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        if (!detail::split_ws(body, 1).empty()) lines.push_back({number, body});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    if (lines.empty()) throw ParseError(1, 1, "empty input, expected a 'field' header");

    const auto& fl = lines[0];
    const auto ftoks = detail::split_ws(fl.body, 1);
    if (ftoks[0].text != "field") throw ParseError(fl.number, ftoks[0].column, "expected 'field p=<p> m=<m> [modulus=<int>]'");
    const auto fv = detail::parse_assignments(ftoks, 1, fl.number, {"p", "m", "modulus"});
    if (!fv[0] || !fv[1]) throw ParseError(fl.number, ftoks[0].column, "field header needs both p= and m=");
    std::optional<Field> field;
    try {
        field = Field::make(*fv[0], *fv[1], fv[2]);
    } catch (const InputError& e) {
        throw ParseError(fl.number, ftoks[0].column, e.what());
    } catch (const LimitError& e) {
        throw ParseError(fl.number, ftoks[0].column, e.what());
    }
    const Field& F = *field;

    if (lines.size() < 2) throw ParseError(fl.number + 1, 1, "missing 'k=<k> n=<n>' line");
    const auto& sl = lines[1];
    const auto stoks = detail::split_ws(sl.body, 1);
    const auto sv = detail::parse_assignments(stoks, 0, sl.number, {"k", "n"});
    if (!sv[0] || !sv[1]) throw ParseError(sl.number, stoks[0].column, "shape line needs both k= and n=");
    const std::size_t k = *sv[0], n = *sv[1];
    if (k == 0 || n == 0) throw ParseError(sl.number, stoks[0].column, "k and n must be positive");
    if (k > n) throw ParseError(sl.number, stoks[0].column, "k must not exceed n");

    std::vector<std::vector<Poly>> rows;
    for (std::size_t r = 0; r < k; ++r) {
        if (lines.size() < 3 + r)
            throw ParseError(lines.back().number + 1, 1, "expected " + std::to_string(k) + " rows, found " + std::to_string(r));
        const auto& rl = lines[2 + r];
        std::vector<Poly> row;
        std::size_t b = 0;
        while (true) {
            const auto semi = rl.body.find(';', b);
            const auto entry = rl.body.substr(b, semi == std::string_view::npos ? std::string_view::npos : semi - b);
            const auto toks = detail::split_ws(entry, b + 1);
            std::vector<Elem> c;
            for (const auto& t : toks) {
                const unsigned v = detail::parse_uint(t, rl.number, "a coefficient");
                if (!F.contains(v))
                    throw ParseError(rl.number, t.column, "coefficient " + std::to_string(v) + " out of range 0.." +
                                                              std::to_string(F.q() - 1) + " for " + F.name());
                c.push_back(v);
            }
            if (c.empty()) throw ParseError(rl.number, b + 1, "empty entry in row " + std::to_string(r + 1));
            row.emplace_back(std::move(c));
            if (semi == std::string_view::npos) break;
            b = semi + 1;
        }
        if (row.size() != n)
            throw ParseError(rl.number, 1, "row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                                               " entries, expected n = " + std::to_string(n));
        rows.push_back(std::move(row));
    }
    if (lines.size() > 2 + k) throw ParseError(lines[2 + k].number, 1, "unexpected content after " + std::to_string(k) + " rows");
    return PolyMatrix(F, std::move(rows));
}

inline std::string print_gm(const PolyMatrix& G) {
    const Field& F = G.field();
    std::ostringstream os;
    os << "field p=" << F.p() << " m=" << F.m();
    if (F.m() > 1) os << " modulus=" << F.modulus();
    os << "\nk=" << G.rows() << " n=" << G.cols() << '\n';
    for (std::size_t i = 0; i < G.rows(); ++i) {
        for (std::size_t j = 0; j < G.cols(); ++j) {
            if (j) os << " ; ";
            const auto& c = G(i, j).coeffs();
            if (c.empty()) os << '0';
            for (std::size_t t = 0; t < c.size(); ++t) os << (t ? " " : "") << c[t];
        }
        os << '\n';
    }
    return os.str();
}

inline PolyMatrix read_gm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_gm(ss.str());
}

}  // namespace convcode
