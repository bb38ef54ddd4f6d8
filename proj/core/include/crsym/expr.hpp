#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crsym/holo_map.hpp"
#include "crsym/series.hpp"

namespace crsym {

// A parsed defining-equation expression together with the resolved grading
// and truncation.
struct SurfaceSpec {
    std::string expression;
    int truncation = 0;
    std::optional<int> declared_k;
    int k = 0;
    WeightedSeries series{1, 1};
};

// Grammar: sums of terms coeff * z^a * zb^b * u^c, with Gaussian-rational
// coefficient literals like 3/2 or (1+1/4i); i is a literal only inside
// coefficient parentheses. The type k is detected from the mixed leading
// terms unless declared; truncation 0 selects the default 4k.
SurfaceSpec parse_surface(const std::string& text, int truncation = 0,
                          std::optional<int> declared_k = std::nullopt);

// Map components for verify-map: polynomials in z and w, same coefficient
// grammar, no reality requirement.
std::vector<std::pair<MapIndex, GaussianRational>> parse_map_component(const std::string& text);

// Reparseable deterministic rendering (weight-major term order).
std::string print_surface(const WeightedSeries& s);

}  // namespace crsym
