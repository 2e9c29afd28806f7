/*
   Copyright 2026 The tamecurves Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TAMECURVES_LINALG_HPP
#define TAMECURVES_LINALG_HPP

#include <optional>
#include <vector>

#include "field.hpp"

namespace tamecurves {

using Matrix = std::vector<std::vector<Elem>>;

/// Row-reduced echelon form of a matrix over a field.
struct Echelon {
    Matrix rows;                    // reduced rows, pivots normalized to 1
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t cols = 0;
};

inline Echelon row_reduce(const Field& F, Matrix A, std::size_t cols) {
    Echelon E;
    E.cols = cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < A.size(); ++c) {
        std::size_t piv = r;
        while (piv < A.size() && A[piv][c] == 0) ++piv;
        if (piv == A.size()) continue;
        std::swap(A[piv], A[r]);
        Elem li = F.inv(A[r][c]);
        for (auto& v : A[r]) v = F.mul(v, li);
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (i == r || A[i][c] == 0) continue;
            Elem f = A[i][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[r][j]));
        }
        E.pivots.push_back(c);
        ++r;
    }
    A.resize(r);
    E.rows = std::move(A);
    return E;
}

/// Basis of {x : A x = 0}, one free variable set to 1 per vector.
inline Matrix kernel(const Field& F, const Matrix& A, std::size_t cols) {
    Echelon E = row_reduce(F, A, cols);
    std::vector<bool> is_piv(cols, false);
    for (auto c : E.pivots) is_piv[c] = true;
    Matrix out;
    for (std::size_t fcol = 0; fcol < cols; ++fcol) {
        if (is_piv[fcol]) continue;
        std::vector<Elem> v(cols, 0);
        v[fcol] = 1;
        for (std::size_t i = 0; i < E.rows.size(); ++i) v[E.pivots[i]] = F.neg(E.rows[i][fcol]);
        out.push_back(std::move(v));
    }
    return out;
}

/// Some solution of A x = b with free variables zero, or nullopt.
inline std::optional<std::vector<Elem>> solve(const Field& F, const Matrix& A, const std::vector<Elem>& b,
                                              std::size_t cols) {
    Matrix aug = A;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Echelon E = row_reduce(F, aug, cols + 1);
    std::vector<Elem> x(cols, 0);
    for (std::size_t i = 0; i < E.rows.size(); ++i) {
        if (E.pivots[i] == cols) return std::nullopt;
        x[E.pivots[i]] = E.rows[i][cols];
    }
    return x;
}

inline std::size_t rank(const Field& F, const Matrix& A, std::size_t cols) { return row_reduce(F, A, cols).rows.size(); }

}  // namespace tamecurves

#endif  // TAMECURVES_LINALG_HPP
