#pragma once

#include "crsym/transform.hpp"

namespace crsym {

// Result of the canonical normalization run (trivial initial data).
struct NormalFormResult {
    Hypersurface nf;
    HoloMapPair map;
    InitialData initial;
};

// Residual linear freedom left after the mu-normalization; the anchor value
// stands in for the dilation normalization (the exact dilation is irrational
// in general, so equivalence testing works with the anchor invariantly).
struct ResidualGroupNote {
    AnchorIndex anchor;
    GaussianRational anchor_value;
    bool theta_free = false;  // S^1 residual (single |z|^(2m) u^s perturbation level)
    int theta_order = 1;      // rotation order of the diagonal stabilizer otherwise
};

// True for perturbation indices annihilated by the normal form conditions:
// the harmonic block (alpha or beta zero), the slices (l, l+j) with j >= 0
// and conjugates, and the u-series at (2l,2l), (3l,3l), (2l,2l-1).
bool forbidden_slice(int alpha, int beta, int l);

// Normal form test for surfaces with circular model and leading coefficient
// one. The conditions apply to the perturbation N = F - (z zbar)^l.
bool check_normal_form(const Hypersurface& M);

// Removes all pure-z / pure-zbar terms of weight <= W by a map of the form
// g = w + sum c_j z^j, solving weight by weight. F must be real with no
// terms of total degree < 2.
std::pair<WeightedSeries, HoloMapPair> absorb_harmonic(const WeightedSeries& F);

// The unique formal transformation with trivial initial data
// (f_z = Re g_w = 1, Re g_ww = 0) taking M into normal form, solved weight
// by weight as exact square linear systems. Raises RankDefect if a system
// fails to be uniquely solvable.
NormalFormResult normalize(const Hypersurface& M);

// Normal form associated to general initial data: applies the model
// automorphism for d and re-normalizes.
Hypersurface renormalize_with_initial_data(const Hypersurface& M_nf, const InitialData& d);

// The unique mu killing the designated real coefficient of the special
// normal form; found by affine interpolation with a third-point affineness
// assertion.
Rational special_mu(const Hypersurface& M_nf);

// Applies mu = special_mu and reports the residual linear freedom.
std::pair<Hypersurface, ResidualGroupNote> special_normalize(const Hypersurface& M_nf);

// True when the designated special-normal-form coefficient already vanishes
// (models count as compliant).
bool is_special_normalized(const Hypersurface& M_nf);

}  // namespace crsym
