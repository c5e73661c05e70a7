#pragma once

#include <vector>

#include "logres/rational.hpp"

namespace logres {

using QRow = std::vector<Rational>;
using QMatrix = std::vector<QRow>;

// In-place reduced row echelon form; returns the rank. Zero rows are
// removed, so the result is the canonical form of the row space.
inline int rref(QMatrix& m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        Rational inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return r;
}

inline int matrix_rank(QMatrix m) { return rref(m); }

// Is v in the row space of the RREF matrix m?
inline bool in_row_space(const QMatrix& rref_m, QRow v) {
    for (const QRow& row : rref_m) {
        int lead = -1;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) {
                lead = static_cast<int>(j);
                break;
            }
        if (lead < 0 || v[lead] == 0) continue;
        Rational f = v[lead];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
    }
    for (const Rational& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace logres
