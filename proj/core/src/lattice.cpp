#include "crsym/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace crsym {

std::vector<std::vector<Integer>> kernel_lattice(const IntMatrix& M) {
    const int rows = M.rows;
    const int cols = M.cols;
    IntMatrix A = M;
    // U tracks the unimodular row transform: U * M = A at all times.
    IntMatrix U(rows, rows);
    for (int i = 0; i < rows; ++i) U.at(i, i) = 1;

    auto swap_rows = [&](IntMatrix& X, int a, int b) {
        if (a == b) return;
        for (int c = 0; c < X.cols; ++c) std::swap(X.at(a, c), X.at(b, c));
    };
    auto submul_row = [&](IntMatrix& X, int dst, int src, const Integer& q) {
        for (int c = 0; c < X.cols; ++c) X.at(dst, c) -= q * X.at(src, c);
    };

    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        while (true) {
            int pivot = -1;
            for (int i = r; i < rows; ++i) {
                if (A.at(i, col) == 0) continue;
                if (pivot < 0 || cmp(abs(A.at(i, col)), abs(A.at(pivot, col))) < 0) pivot = i;
            }
            if (pivot < 0) break;
            swap_rows(A, pivot, r);
            swap_rows(U, pivot, r);
            bool reduced = true;
            for (int i = r + 1; i < rows; ++i) {
                if (A.at(i, col) == 0) continue;
                Integer q = A.at(i, col) / A.at(r, col);  // truncated division
                if (q != 0) {
                    submul_row(A, i, r, q);
                    submul_row(U, i, r, q);
                }
                if (A.at(i, col) != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (A.at(r, col) != 0) ++r;
    }

    std::vector<std::vector<Integer>> basis;
    for (int i = r; i < rows; ++i) {
        std::vector<Integer> v(rows);
        bool nonzero = false;
        for (int j = 0; j < rows; ++j) {
            v[j] = U.at(i, j);
            if (v[j] != 0) nonzero = true;
        }
        if (!nonzero) continue;  // zero input matrix rows of size 0 edge
        // Deterministic sign: first nonzero entry positive.
        for (const Integer& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (Integer& y : v) y = -y;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational power_product(const std::vector<Rational>& values, const std::vector<Integer>& exponents) {
    Rational acc(1);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!exponents[i].fits_slong_p())
            fail(ErrorCode::DomainError, "kernel exponent out of range");
        acc *= pow_int(values[i], exponents[i].get_si());
    }
    return acc;
}

std::optional<std::vector<Integer>> rational_power_inconsistency(const std::vector<Rational>& values,
                                                                 const IntMatrix& exponent_rows) {
    for (const Rational& v : values)
        if (sgn(v) <= 0) fail(ErrorCode::DomainError, "power consistency needs positive values");
    for (auto& n : kernel_lattice(exponent_rows)) {
        if (power_product(values, n) != 1) return n;
    }
    return std::nullopt;
}

bool rational_power_consistent(const std::vector<Rational>& values, const IntMatrix& exponent_rows) {
    return !rational_power_inconsistency(values, exponent_rows).has_value();
}

UnitSystemBranch solve_unit_system(const std::vector<UnitRow>& rows, int sign) {
    UnitSystemBranch out;
    const int n = static_cast<int>(rows.size());

    // Fold the sign into the right-hand units: zeta^phi = t_r * s^parity_r.
    std::vector<GaussianRational> rhs(n);
    for (int i = 0; i < n; ++i) {
        if (rows[i].t.is_zero()) fail(ErrorCode::DomainError, "unit system needs nonzero values");
        rhs[i] = rows[i].t;
        if (sign < 0 && (rows[i].parity % 2 != 0)) rhs[i] = -rhs[i];
    }

    IntMatrix phis(n, 1);
    for (int i = 0; i < n; ++i) phis.at(i, 0) = rows[i].phi;

    for (auto& vec : kernel_lattice(phis)) {
        GaussianRational prod(1);
        for (int i = 0; i < n; ++i) {
            if (vec[i] == 0) continue;
            if (!vec[i].fits_slong_p()) fail(ErrorCode::DomainError, "kernel exponent out of range");
            prod *= pow_int(rhs[i], vec[i].get_si());
        }
        // unit part is 1 iff the product is a positive real.
        if (!prod.is_real() || sgn(prod.re) <= 0) {
            out.solvable = false;
            out.obstruction = vec;
            return out;
        }
    }
    out.solvable = true;

    long g = 0;
    for (const UnitRow& r : rows) g = std::gcd(g, std::abs(r.phi));
    out.coset_order = g;
    if (g != 0) {
        // Bezout combination sum x_r phi_r = g gives the defining relation
        // for zeta^g.
        std::vector<long> x(n, 0);
        long cur = 0;
        for (int i = 0; i < n; ++i) {
            if (rows[i].phi == 0) continue;
            if (cur == 0) {
                cur = std::abs(rows[i].phi);
                x[i] = rows[i].phi > 0 ? 1 : -1;
                continue;
            }
            long a = cur, b = rows[i].phi;
            long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            while (b != 0) {
                long q = a / b;
                std::tie(a, b) = std::make_pair(b, a - q * b);
                std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
                std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
            }
            // a = s0 * cur + t0 * phi_i
            long flip = a < 0 ? -1 : 1;
            for (int j = 0; j < i; ++j) x[j] *= s0 * flip;
            x[i] = t0 * flip;
            cur = std::abs(a);
        }
        GaussianRational omega(1);
        for (int i = 0; i < n; ++i)
            if (x[i] != 0) omega *= pow_int(rhs[i], x[i]);
        out.relation_order = g;
        out.relation_value = omega;
    }
    return out;
}

}  // namespace crsym
