#pragma once

#include <initializer_list>
#include <vector>

#include "convcode/matrix.hpp"

namespace testutil {

using convcode::Elem;
using convcode::Field;
using convcode::Poly;
using convcode::PolyMatrix;

/// Rows of polynomials, each polynomial given low degree first.
inline PolyMatrix pm(const Field& F, std::initializer_list<std::initializer_list<std::initializer_list<Elem>>> rows) {
    std::vector<std::vector<Poly>> r;
    for (const auto& row : rows) {
        std::vector<Poly> v;
        for (const auto& e : row) v.emplace_back(std::vector<Elem>(e));
        r.push_back(std::move(v));
    }
    return PolyMatrix(F, std::move(r));
}

inline PolyMatrix pm2(std::initializer_list<std::initializer_list<std::initializer_list<Elem>>> rows) {
    return pm(Field::binary(), rows);
}

inline Field f16() { return Field::make(2, 4, 19); }

// Example generator matrices used across suites.
inline PolyMatrix e213() { return pm2({{{1, 1, 1, 1}, {1, 0, 1, 1}}}); }
inline PolyMatrix elambda1() { return pm2({{{1}, {1}, {}}, {{}, {1, 1}, {0, 1}}}); }
inline PolyMatrix g1() { return pm2({{{1}, {0, 1}, {1, 1}}}); }
inline PolyMatrix g2() { return pm2({{{0, 1}, {0, 1}, {1, 1}}}); }

}  // namespace testutil
