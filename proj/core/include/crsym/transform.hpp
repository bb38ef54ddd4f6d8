#pragma once

#include <optional>
#include <string>
#include <variant>

#include "crsym/surface.hpp"

namespace crsym {

// e^{2 pi i t / n}, stored reduced with 0 <= t < n.
struct RootOfUnity {
    long n = 1;
    long t = 0;
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

RootOfUnity reduce_root(long n, long t);

// An exact phase: either a unit Gaussian rational or a root-of-unity token.
// Tokens whose value happens to be Gaussian rational (n | 4) materialize.
class ExactPhase {
  public:
    ExactPhase() : v_(GaussianRational(1)) {}

    static ExactPhase one() { return ExactPhase(); }
    static ExactPhase from_unit(const GaussianRational& u);
    static ExactPhase root(long n, long t);

    bool is_trivial() const;
    std::optional<GaussianRational> materialize() const;
    const std::variant<GaussianRational, RootOfUnity>& value() const { return v_; }

    friend bool operator==(const ExactPhase&, const ExactPhase&) = default;

  private:
    std::variant<GaussianRational, RootOfUnity> v_;
};

std::string to_string(const ExactPhase& p);

// Initial data (delta, theta, mu) of a normal-form-preserving transformation:
// linear dilation, rotation and Re g_ww.
struct InitialData {
    Rational delta = Rational(1);
    ExactPhase theta;
    Rational mu = Rational(0);
};

// Core of the transformation formula: given the composed argument series
// Z = f(z, u+iF), Zbar, U = Re g(z, u+iF) and S = Im g(z, u+iF), solves
// Fstar(Z, Zbar, U) = S for Fstar degree by degree against the invertible
// triangular linear part.
WeightedSeries solve_defining_identity(const WeightedSeries& Z, const WeightedSeries& Zbar,
                                       const WeightedSeries& U, const WeightedSeries& S);

// Pushforward of a defining series under a normalized map with invertible
// linear part. The series-level variant does not revalidate preparedness.
WeightedSeries pushforward_series(const WeightedSeries& F, const HoloMapPair& map);
Hypersurface pushforward(const Hypersurface& M, const HoloMapPair& map);

// The three-parameter stability family of the circular model v = |z|^k:
// f = delta e^{i theta} z (1 + mu w)^{-1/l}, g = delta^k w (1 + mu w)^{-1}
// with l = k/2, expanded exactly. k must be even and the phase Gaussian
// rational (materializable).
HoloMapPair ok_model_automorphism(const InitialData& d, int k, int truncation);

bool is_automorphism(const Hypersurface& M, const HoloMapPair& map);

// Exact binomial coefficient with rational upper argument.
Rational rational_binomial(const Rational& q, int m);

}  // namespace crsym
