#pragma once

#include <optional>
#include <vector>

#include "crsym/rational.hpp"

namespace crsym {

// Dense exact rational matrix, row major.
struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rational(0)) {}

    Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Solves A x = b exactly. Returns nullopt when the system is singular or
// inconsistent. A must be square.
std::optional<std::vector<Rational>> solve_exact(RationalMatrix A, std::vector<Rational> b);

}  // namespace crsym
