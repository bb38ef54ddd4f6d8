#include "crsym/symmetry.hpp"

#include <algorithm>
#include <numeric>

#include "crsym/lattice.hpp"

namespace crsym {

const char* to_string(SymmetryTag tag) {
    switch (tag) {
        case SymmetryTag::Dim3: return "Dim3";
        case SymmetryTag::RPlusCrossCyclic: return "RPlusCrossCyclic";
        case SymmetryTag::Circle: return "Circle";
        case SymmetryTag::Cyclic: return "Cyclic";
    }
    return "?";
}

bool diagonal_preserves(const Hypersurface& M, const DiagonalGenerator& gen) {
    const int k = M.k;
    // Phase as an exact rotation t/n of the full turn.
    long pn = 1, pt = 0;
    if (auto u = gen.phase.materialize()) {
        if (*u == GaussianRational(1)) {
            pn = 1;
        } else if (*u == GaussianRational(-1)) {
            pn = 2, pt = 1;
        } else if (*u == gauss_i()) {
            pn = 4, pt = 1;
        } else if (*u == -gauss_i()) {
            pn = 4, pt = 3;
        } else {
            // a non-root unit: fall back to direct coefficient equations
            const GaussianRational c = GaussianRational(gen.dilation) * *u;
            const Rational lam =
                Rational(gen.lambda_sign) * pow_int(gen.dilation, k);
            for (const auto& [idx, a] : M.F.terms()) {
                GaussianRational factor = pow_int(c, idx.alpha) * pow_int(conj(c), idx.beta) *
                                          GaussianRational(pow_int(lam, idx.gamma - 1));
                if (factor != GaussianRational(1)) return false;
            }
            return true;
        }
    } else {
        const auto& r = std::get<RootOfUnity>(gen.phase.value());
        pn = r.n;
        pt = r.t;
    }

    for (const auto& [idx, a] : M.F.terms()) {
        const int w = weight(idx, k);
        // modulus: dilation^(w - k) = 1
        if (gen.dilation != 1 && w != k) return false;
        // sign: lambda_sign^(gamma - 1) must be compensated by the phase part
        long num = (idx.alpha - idx.beta) * pt;  // phase exponent numerator over pn
        bool phase_half;                         // does the phase part equal -1 mod full turns?
        long two = 2 * pn;
        long m = ((num * 2) % two + two) % two;  // (alpha-beta)*t/n mod 1, in half-turn units
        if (m == 0)
            phase_half = false;
        else if (m == pn)
            phase_half = true;
        else
            return false;  // phase lands off the real axis: cannot equal +-1
        bool sign_half = gen.lambda_sign < 0 && ((idx.gamma - 1) % 2 != 0);
        if (phase_half != sign_half) return false;
    }
    return true;
}

namespace {

struct StabilizerRows {
    std::vector<UnitRow> rows;
    long rotation_gcd = 0;
    bool all_diagonal = true;
    bool all_weight_k = true;
};

StabilizerRows collect_rows(const Hypersurface& M) {
    StabilizerRows out;
    for (const auto& [idx, a] : M.F.terms()) {
        if (idx.alpha < idx.beta) continue;  // conjugate rows are redundant
        UnitRow r;
        r.phi = idx.alpha - idx.beta;
        r.parity = ((idx.gamma - 1) % 2 + 2) % 2;
        r.t = GaussianRational(1);
        out.rows.push_back(r);
        out.rotation_gcd = std::gcd(out.rotation_gcd, r.phi);
        if (idx.alpha != idx.beta) out.all_diagonal = false;
        if (weight(idx, M.k) != M.k) out.all_weight_k = false;
    }
    return out;
}

DiagonalGenerator rotation_generator(long order, long t, int sign) {
    DiagonalGenerator g;
    g.lambda_sign = sign;
    g.phase = ExactPhase::root(order, t);
    return g;
}

// Brute-force phase enumeration over e^(2 pi i t / (2 g)): all solutions of
// the rotation system live there, so this independently counts each branch.
std::vector<long> scan_rotation_solutions(const std::vector<UnitRow>& rows, int sign, long g) {
    std::vector<long> hits;
    const long two_g = 2 * g;
    for (long t = 0; t < two_g; ++t) {
        bool ok = true;
        for (const UnitRow& r : rows) {
            long extra = (sign < 0 && r.parity % 2 != 0) ? g : 0;
            long lhs = ((r.phi * t - extra) % two_g + two_g) % two_g;
            if (lhs != 0) {
                ok = false;
                break;
            }
        }
        if (ok) hits.push_back(t);
    }
    return hits;
}

}  // namespace

SymmetryGroup diagonal_stabilizer(const Hypersurface& M_nf, bool assume_normal_coordinates) {
    const int k = M_nf.k;
    ModelInfo info = model_of(M_nf);
    const bool model = is_model_surface(M_nf);

    if (info.circular) {
        if (!check_normal_form(M_nf))
            fail(ErrorCode::NotNormalized, "circular surface must be in normal form");
    } else if (!model && !assume_normal_coordinates) {
        fail(ErrorCode::NotNormalized,
             "noncircular non-model surface: assert normal coordinates to proceed");
    }

    SymmetryGroup out;

    if (info.circular && model) {
        out.tag = SymmetryTag::Dim3;
        out.generators.push_back(rotation_generator(4, 1, 1));  // z -> i z
        out.generators.push_back(DiagonalGenerator{ExactPhase::one(), 1, Rational(2)});
        return out;
    }

    StabilizerRows rows = collect_rows(M_nf);

    if (rows.all_diagonal) {
        out.tag = SymmetryTag::Circle;
        out.generators.push_back(rotation_generator(4, 1, 1));
        return out;
    }

    // Rotation part: zeta^(alpha-beta) sign^(gamma-1) = 1, with sign(lambda)
    // ranging over {-1} only when delta in the family (delta e^(i theta) z,
    // delta^k w) can be negative, i.e. for odd k. The kernel solve and the
    // brute-force scan must agree.
    const long g = rows.rotation_gcd;
    auto plus = solve_unit_system(rows.rows, 1);
    auto plus_scan = scan_rotation_solutions(rows.rows, 1, g);
    if (!plus.solvable || plus.coset_order != g || static_cast<long>(plus_scan.size()) != g)
        fail(ErrorCode::DomainError, "stabilizer rotation solve disagrees with the gcd order");
    long n = g;
    std::optional<long> minus_t;
    if (k % 2 != 0) {
        auto minus = solve_unit_system(rows.rows, -1);
        auto minus_scan = scan_rotation_solutions(rows.rows, -1, g);
        if (minus.solvable != !minus_scan.empty() ||
            (minus.solvable && static_cast<long>(minus_scan.size()) != g))
            fail(ErrorCode::DomainError, "stabilizer scan disagrees with the kernel solve");
        if (minus.solvable) {
            n += g;
            // The plus solutions are exactly the even t and the minus coset
            // the odd t, so the smallest scan hit generates the order-2g
            // cyclic group.
            minus_t = minus_scan.front();
        }
    }

    if (model) {
        // Prop 4.1 case 2 cross-check: m = kappa for even k, 2 kappa for odd k.
        int kappa = kappa_invariant(info);
        long expected = k % 2 == 0 ? kappa : 2 * kappa;
        if (n != expected)
            fail(ErrorCode::DomainError,
                 "model stabilizer order disagrees with the kappa formula");
        out.tag = SymmetryTag::RPlusCrossCyclic;
        out.order = static_cast<int>(n);
        out.generators.push_back(DiagonalGenerator{ExactPhase::one(), 1, Rational(2)});
        if (minus_t)
            out.generators.push_back(rotation_generator(2 * g, *minus_t, -1));
        else if (g > 1)
            out.generators.push_back(rotation_generator(g, 1, 1));
    } else {
        out.tag = SymmetryTag::Cyclic;
        out.order = static_cast<int>(std::max(n, 1L));
        if (minus_t)
            out.generators.push_back(rotation_generator(2 * g, *minus_t, -1));
        else if (g > 1)
            out.generators.push_back(rotation_generator(g, 1, 1));
    }

    for (const auto& gen : out.generators) {
        if (!diagonal_preserves(M_nf, gen))
            fail(ErrorCode::DomainError, "emitted generator fails the character equations");
    }
    return out;
}

SymmetryGroup classify(const Hypersurface& M, bool assume_normal_coordinates) {
    auto [noharm, m1] = absorb_harmonic(M.F);
    auto [scaled, m2] = leading_rescale(noharm);
    Hypersurface S = validate_surface(scaled);
    ModelInfo info = model_of(S);
    if (info.circular) {
        auto nf = normalize(S).nf;
        return diagonal_stabilizer(nf);
    }
    if (is_model_surface(S)) return diagonal_stabilizer(S);
    if (assume_normal_coordinates) return diagonal_stabilizer(S, true);
    fail(ErrorCode::OutOfScope,
         "noncircular non-model surfaces have no normal form here; pass "
         "assume_normal_coordinates if the coordinates are already normal");
}

}  // namespace crsym
