#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crsym/lattice.hpp"
#include "crsym/normal_form.hpp"

namespace crsym {

// One coefficient-ratio condition induced by the diagonal action on a pair
// of normalized surfaces: |lambda|^d |c|^e sign(lambda)^s e^{i phi theta}
// = ratio, at the recorded index.
struct CharacterRow {
    MultiIndex idx;
    int d = 0;    // 1 - gamma, exponent of |lambda|
    int e = 0;    // -(alpha + beta), exponent of |c|
    int phi = 0;  // -(alpha - beta), exponent of e^{i theta}
    int s = 0;    // (1 - gamma) mod 2, exponent of sign(lambda)
    GaussianRational ratio;  // target coefficient over source coefficient
};

// X^a Y^b = q with X = |lambda|^2 and Y = |c|^2.
struct ModulusRelation {
    Integer a;
    Integer b;
    Rational q;
};

struct Witness {
    std::optional<Rational> lambda_abs;  // solved |lambda| when rational
    std::optional<Rational> c_abs;       // solved |c| when rational
    std::vector<ModulusRelation> modulus_relations;
    int lambda_sign = 1;
    bool theta_free = false;
    std::optional<ExactPhase> phase;  // concrete phase when a root of unity fits
    long phase_relation_order = 0;    // e^{i * order * theta} = unit(phase_relation_value)
    GaussianRational phase_relation_value;
    bool verified_by_pushforward = false;
};

struct Refutation {
    enum class Kind { TypeMismatch, InvariantMismatch, SupportMismatch, ModulusKernel, PhaseObstruction };
    Kind kind;
    std::optional<MultiIndex> index;
    std::vector<Integer> kernel_vector;
    std::string detail;
};

const char* to_string(Refutation::Kind k);

struct EquivalenceCertificate {
    bool equivalent = false;
    std::optional<Witness> witness;
    std::optional<Refutation> refutation;
    // The l < k/2 model comparison decides the linear action only.
    bool linear_only = false;
    std::vector<CharacterRow> rows;
};

// Decides whether a diagonal map (z,w) -> (c z, lambda w), lambda real
// (negative lambda admitted for odd k only), carries A onto B, both already
// in (special) normal form or both model surfaces. Throws
// NotSpecialNormalized when the mu condition fails on a non-model input.
EquivalenceCertificate linear_equivalent(const Hypersurface& A_nf, const Hypersurface& B_nf);

// Full pipeline: absorb harmonics, rescale, validate, normalize (circular
// case), fix mu, then decide. Noncircular non-model inputs are out of scope.
EquivalenceCertificate equivalent(const Hypersurface& A, const Hypersurface& B);

}  // namespace crsym
