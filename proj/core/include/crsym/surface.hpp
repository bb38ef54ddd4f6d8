#pragma once

#include <map>
#include <optional>

#include "crsym/holo_map.hpp"
#include "crsym/series.hpp"

namespace crsym {

// A validated defining function v = F(z, zbar, u) of finite type k at the
// origin: F real, no terms of weight < k, weight-k part a nonzero mixed
// polynomial in (z, zbar) alone.
struct Hypersurface {
    WeightedSeries F;
    int k;

    int truncation() const { return F.truncation(); }
    bool operator==(const Hypersurface&) const = default;
};

// Discrete invariants of the model: the weight-k coefficients a_j of
// z^j zbar^{k-j}, essential type l, kappa (defined only when l < k/2) and
// circularity (model equals |z|^k after the leading rescale).
struct ModelInfo {
    int k = 0;
    std::map<int, GaussianRational> model_coeffs;  // j -> a_j, 1 <= j <= k-1
    int l = 0;
    std::optional<int> kappa;
    bool circular = false;
};

// Inverse-lex minimal index of the lowest-weight nonzero perturbation term.
struct AnchorIndex {
    MultiIndex idx;
    int p = 0;  // weight of the carrying level
};

// Detects the type and validates the prepared form. Throws NotPrepared when
// low or leading weights carry harmonic-only or u-dependent parts, and
// NotFiniteType when no mixed term exists up to the truncation.
Hypersurface validate_surface(const WeightedSeries& F);

ModelInfo model_of(const Hypersurface& M);

// gcd of k - 2m over nonzero model indices m < k/2; rejected when l = k/2.
int kappa_invariant(const ModelInfo& info);

// The model polynomial as a series.
WeightedSeries model_series(const ModelInfo& info, int truncation);
// F minus its model part.
WeightedSeries perturbation(const Hypersurface& M);
bool is_model_surface(const Hypersurface& M);

// Throws ModelSurface when the perturbation vanishes up to the truncation.
AnchorIndex anchor_index(const Hypersurface& M);

// True iff every nonzero coefficient has alpha = beta.
bool is_weakly_spherical(const Hypersurface& M);

// Brings a circular leading part c*(z zbar)^{k/2} to coefficient 1 via
// w -> w/c (a sign flip for c < 0 is absorbed the same way); a no-op for
// noncircular leading parts. Returns the rescaled series and the map used.
std::pair<WeightedSeries, HoloMapPair> leading_rescale(const WeightedSeries& F);

}  // namespace crsym
