#pragma once

#include <optional>
#include <vector>

#include "crsym/gaussian.hpp"

namespace crsym {

// Dense integer matrix, row major, exact.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Integer> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Integer(0)) {}

    Integer& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Integer& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Basis of the left integer kernel {n : n^T M = 0}, computed by Hermite-style
// integer row elimination with a unimodular transform tracked alongside.
std::vector<std::vector<Integer>> kernel_lattice(const IntMatrix& M);

// True iff prod values[i]^{n_i} = 1 for every kernel basis vector n of the
// exponent rows; equivalent to solvability of X^{d_i} Y^{e_i} = values_i over
// the positive reals. Values must be positive.
bool rational_power_consistent(const std::vector<Rational>& values, const IntMatrix& exponent_rows);

// Same check, but returns a violated kernel vector instead of a flag.
std::optional<std::vector<Integer>> rational_power_inconsistency(const std::vector<Rational>& values,
                                                                 const IntMatrix& exponent_rows);

Rational power_product(const std::vector<Rational>& values, const std::vector<Integer>& exponents);

// One multiplicative condition zeta^phi * s^parity = unit(t) on a unit
// zeta in S^1 and a sign s, with t a nonzero Gaussian rational standing for
// its unit part t/|t|.
struct UnitRow {
    long phi = 0;
    int parity = 0;  // exponent of the sign, taken mod 2
    GaussianRational t;
};

struct UnitSystemBranch {
    bool solvable = false;
    // gcd of nonzero phi rows; 0 means the phase is unconstrained (full S^1).
    long coset_order = 0;
    // When constrained and solvable: e^{i * relation_order * theta} equals
    // relation_value / |relation_value| (unit part of an exact value).
    long relation_order = 0;
    GaussianRational relation_value;
    // A violated kernel vector when unsolvable.
    std::vector<Integer> obstruction;
};

// Decides solvability of {zeta^phi_r s^parity_r = unit(t_r)} for a fixed
// sign s, exactly: for every kernel vector n of [phi_r], the power product
// prod (t_r s^parity_r)^{n_r} must be real and positive.
UnitSystemBranch solve_unit_system(const std::vector<UnitRow>& rows, int sign);

}  // namespace crsym
