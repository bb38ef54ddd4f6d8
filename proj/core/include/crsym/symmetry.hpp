#pragma once

#include <optional>
#include <vector>

#include "crsym/normal_form.hpp"

namespace crsym {

enum class SymmetryTag { Dim3, RPlusCrossCyclic, Circle, Cyclic };

// An exact diagonal symmetry z -> dilation * phase * z, w -> lambda w with
// lambda = lambda_sign * dilation^k.
struct DiagonalGenerator {
    ExactPhase phase;
    int lambda_sign = 1;
    Rational dilation = Rational(1);
};

struct SymmetryGroup {
    SymmetryTag tag = SymmetryTag::Cyclic;
    int order = 0;  // m for RPlusCrossCyclic, n for Cyclic; 0 for Dim3/Circle
    std::vector<DiagonalGenerator> generators;
};

const char* to_string(SymmetryTag tag);

// Exact check that a diagonal map given by a generator preserves M, via the
// character equations (valid for arbitrary root-of-unity phases).
bool diagonal_preserves(const Hypersurface& M, const DiagonalGenerator& gen);

// Stability group of a normalized surface (circular case) or of a model
// surface; set assume_normal_coordinates to accept a noncircular non-model
// surface whose coordinates the caller asserts to be normal.
SymmetryGroup diagonal_stabilizer(const Hypersurface& M_nf, bool assume_normal_coordinates = false);

// End-to-end classification: absorb harmonics, rescale, normalize (circular
// case), then read off the stabilizer.
SymmetryGroup classify(const Hypersurface& M, bool assume_normal_coordinates = false);

}  // namespace crsym
