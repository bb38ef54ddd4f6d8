#include "crsym/linalg.hpp"

#include <utility>

namespace crsym {

std::optional<std::vector<Rational>> solve_exact(RationalMatrix A, std::vector<Rational> b) {
    const int n = A.rows;
    if (A.cols != n || static_cast<int>(b.size()) != n) return std::nullopt;

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!is_zero(A.at(r, col))) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(A.at(pivot, c), A.at(col, c));
            std::swap(b[pivot], b[col]);
        }
        const Rational p = A.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (is_zero(A.at(r, col))) continue;
            Rational factor = A.at(r, col) / p;
            A.at(r, col) = 0;
            for (int c = col + 1; c < n; ++c) A.at(r, c) -= factor * A.at(col, c);
            b[r] -= factor * b[col];
        }
    }

    std::vector<Rational> x(n, Rational(0));
    for (int r = n - 1; r >= 0; --r) {
        Rational acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= A.at(r, c) * x[c];
        x[r] = acc / A.at(r, r);
    }
    return x;
}

}  // namespace crsym
