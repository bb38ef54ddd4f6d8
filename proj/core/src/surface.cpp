#include "crsym/surface.hpp"

#include <numeric>

namespace crsym {

Hypersurface validate_surface(const WeightedSeries& F) {
    if (!series_is_real(F)) fail(ErrorCode::DomainError, "defining function must be real");
    for (const auto& [idx, c] : F.terms()) {
        if (idx.alpha + idx.beta + idx.gamma < 2)
            fail(ErrorCode::NotPrepared, "terms of total degree < 2 violate the graph normalization");
    }

    // Candidate type: minimal (z, zbar)-degree of a mixed gamma=0 term.
    int k = -1;
    for (const auto& [idx, c] : F.terms()) {
        if (idx.gamma == 0 && idx.alpha >= 1 && idx.beta >= 1) {
            int d = idx.alpha + idx.beta;
            if (k < 0 || d < k) k = d;
        }
    }
    if (k < 0) {
        for (const auto& [idx, c] : F.terms()) {
            if (idx.gamma == 0)
                fail(ErrorCode::NotPrepared,
                     "purely harmonic leading part; absorb harmonic terms first");
        }
        fail(ErrorCode::NotFiniteType, "no mixed (z, zbar) term up to the truncation");
    }

    for (const auto& [idx, c] : F.terms()) {
        if (idx.gamma == 0 && idx.alpha + idx.beta < k)
            fail(ErrorCode::NotPrepared,
                 "harmonic terms below the candidate type; absorb harmonic terms first");
        if (idx.gamma == 0 && idx.alpha + idx.beta == k && (idx.alpha == 0 || idx.beta == 0))
            fail(ErrorCode::NotPrepared,
                 "harmonic terms at the type weight; absorb harmonic terms first");
    }

    if (F.grading() == k) return Hypersurface{F, k};

    // Regrade to the detected type, keeping the truncation weight.
    WeightedSeries regraded(k, F.truncation());
    for (const auto& [idx, c] : F.terms()) regraded.add_term(idx, c);
    return Hypersurface{regraded, k};
}

ModelInfo model_of(const Hypersurface& M) {
    ModelInfo info;
    info.k = M.k;
    for (const auto& [idx, c] : M.F.terms()) {
        if (idx.gamma == 0 && idx.alpha + idx.beta == M.k && idx.alpha >= 1 && idx.beta >= 1)
            info.model_coeffs[idx.alpha] = c;
    }
    info.l = M.k;  // min over nonzero a_j below
    for (const auto& [j, a] : info.model_coeffs)
        if (j < info.l) info.l = j;

    info.circular =
        (M.k % 2 == 0) && info.model_coeffs.size() == 1 && info.model_coeffs.count(M.k / 2) == 1;

    if (2 * info.l < M.k) {
        int g = 0;
        for (const auto& [j, a] : info.model_coeffs)
            if (2 * j < M.k) g = std::gcd(g, M.k - 2 * j);
        info.kappa = g;
    }
    return info;
}

int kappa_invariant(const ModelInfo& info) {
    if (!info.kappa)
        fail(ErrorCode::DomainError, "kappa is undefined when l = k/2");
    return *info.kappa;
}

WeightedSeries model_series(const ModelInfo& info, int truncation) {
    WeightedSeries s(info.k, truncation);
    for (const auto& [j, a] : info.model_coeffs) s.add_term({j, info.k - j, 0}, a);
    return s;
}

WeightedSeries perturbation(const Hypersurface& M) {
    return series_sub(M.F, model_series(model_of(M), M.truncation()));
}

bool is_model_surface(const Hypersurface& M) { return perturbation(M).is_zero(); }

AnchorIndex anchor_index(const Hypersurface& M) {
    WeightedSeries N = perturbation(M);
    if (N.is_zero()) fail(ErrorCode::ModelSurface, "model surface has no anchor index");
    int p = min_weight(N);
    std::optional<MultiIndex> best;
    for (const auto& [idx, c] : N.terms()) {
        if (weight(idx, M.k) != p) continue;
        if (!best || inv_lex_less(idx, *best)) best = idx;
    }
    return AnchorIndex{*best, p};
}

bool is_weakly_spherical(const Hypersurface& M) {
    for (const auto& [idx, c] : M.F.terms())
        if (idx.alpha != idx.beta) return false;
    return true;
}

std::pair<WeightedSeries, HoloMapPair> leading_rescale(const WeightedSeries& F) {
    const int k = F.grading();
    const int W = F.truncation();
    HoloMapPair id = HoloMapPair::identity(k, W);
    if (k % 2 != 0) return {F, id};

    // Leading part must be exactly c*(z zbar)^{k/2} for the rescale to apply.
    GaussianRational c;
    bool circular_shape = true;
    for (const auto& [idx, v] : F.terms()) {
        if (weight(idx, k) != k) continue;
        if (idx.gamma == 0 && idx.alpha == k / 2 && idx.beta == k / 2)
            c = v;
        else
            circular_shape = false;
    }
    if (!circular_shape || c.is_zero() || !c.is_real() || c.re == 1) return {F, id};

    Rational lambda = Rational(1) / c.re;
    HoloMapPair map = HoloMapPair::diagonal(GaussianRational(1), lambda, k, W);
    // Under z -> z, w -> lambda w the coefficients scale by lambda^(1-gamma).
    WeightedSeries out(k, W);
    for (const auto& [idx, v] : F.terms())
        out.add_term(idx, v * GaussianRational(pow_int(lambda, 1 - idx.gamma)));
    return {out, map};
}

}  // namespace crsym
