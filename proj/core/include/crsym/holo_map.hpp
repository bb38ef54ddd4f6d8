#pragma once

#include <map>
#include <utility>
#include <vector>

#include "crsym/series.hpp"

namespace crsym {

// Exponent pair of a monomial z^i w^j, weighted by i + k*j.
struct MapIndex {
    int i = 0;
    int j = 0;
    friend bool operator==(const MapIndex&, const MapIndex&) = default;
    friend auto operator<=>(const MapIndex& a, const MapIndex& b) {
        if (a.j != b.j) return a.j <=> b.j;
        return a.i <=> b.i;
    }
};

// Truncated holomorphic coordinate change (z, w) -> (f(z,w), g(z,w))
// normalized so that the origin is fixed and {v=0} stays tangent:
// f(0,0) = g(0,0) = 0, g_z(0) = 0, Im g_w(0) = 0. f is kept to weight
// W-(k-1) and g to weight W, which is what an exact weight-W pushforward
// consumes.
class HoloMapPair {
  public:
    using TermMap = std::map<MapIndex, GaussianRational>;

    HoloMapPair(int k, int truncation);

    static HoloMapPair identity(int k, int truncation);
    // Decoupled linear map z -> c z, w -> lambda w (lambda real nonzero).
    static HoloMapPair diagonal(const GaussianRational& c, const Rational& lambda, int k,
                                int truncation);

    int grading() const { return k_; }
    int truncation() const { return trunc_; }
    int f_truncation() const { return trunc_ - (k_ - 1); }

    const TermMap& f() const { return f_; }
    const TermMap& g() const { return g_; }

    GaussianRational f_coeff(int i, int j) const;
    GaussianRational g_coeff(int i, int j) const;

    void add_f(int i, int j, const GaussianRational& c);
    void add_g(int i, int j, const GaussianRational& c);

    // Checks the normalization block; throws NormalizationViolation.
    void check_normalized() const;

    bool operator==(const HoloMapPair&) const = default;

  private:
    int k_;
    int trunc_;
    TermMap f_;
    TermMap g_;
};

// Evaluates one component at (z, w = u + i F): a series in (z, zbar, u) where
// zbar enters only through F. F must be real with no terms of weight < 2.
enum class MapComponent { F, G };
WeightedSeries map_component_eval(const HoloMapPair& m, MapComponent which,
                                  const WeightedSeries& F);

// Same evaluation against a precomputed power table of (u + iF); used by the
// solvers that evaluate many components against one surface.
std::vector<WeightedSeries> w_image_powers(const WeightedSeries& F, int max_power);
WeightedSeries eval_on_powers(const HoloMapPair::TermMap& comp, const std::vector<WeightedSeries>& wpow,
                              int k, int truncation);

// Composition b after a: z -> f_b(f_a, g_a), w -> g_b(f_a, g_a), truncated.
HoloMapPair compose(const HoloMapPair& a, const HoloMapPair& b);

std::string to_string_f(const HoloMapPair& m);
std::string to_string_g(const HoloMapPair& m);

}  // namespace crsym
