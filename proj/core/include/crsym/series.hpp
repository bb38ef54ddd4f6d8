#pragma once

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "crsym/gaussian.hpp"

namespace crsym {

// Exponent triple of a monomial z^alpha zbar^beta u^gamma.
struct MultiIndex {
    int alpha = 0;
    int beta = 0;
    int gamma = 0;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

// Inverse-lexicographic order: last components compared first. This is also
// the tie-break order used for anchor selection within a weight level.
inline bool inv_lex_less(const MultiIndex& a, const MultiIndex& b) {
    if (a.gamma != b.gamma) return a.gamma < b.gamma;
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.alpha < b.alpha;
}

struct InvLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const { return inv_lex_less(a, b); }
};

inline int weight(const MultiIndex& idx, int k) { return idx.alpha + idx.beta + k * idx.gamma; }

inline MultiIndex conj_index(const MultiIndex& idx) { return {idx.beta, idx.alpha, idx.gamma}; }

// Truncated formal power series in (z, zbar, u) with the grading
// wt z = wt zbar = 1, wt u = k. Indices of weight > W are not representable;
// zero coefficients are never stored.
class WeightedSeries {
  public:
    using TermMap = std::map<MultiIndex, GaussianRational, InvLexLess>;

    WeightedSeries(int k, int truncation);

    int grading() const { return k_; }
    int truncation() const { return trunc_; }

    const TermMap& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }

    GaussianRational coeff(const MultiIndex& idx) const;
    // Adds c at idx, dropping the result if it exceeds the truncation weight
    // or cancels to zero.
    void add_term(const MultiIndex& idx, const GaussianRational& c);

    friend bool operator==(const WeightedSeries& a, const WeightedSeries& b) {
        return a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
    }

  private:
    int k_;
    int trunc_;
    TermMap coeffs_;
};

// Construction from a term list; duplicates are summed, overweight terms
// dropped, zeros pruned. Negative exponents are rejected.
WeightedSeries series_make(const std::vector<std::pair<MultiIndex, GaussianRational>>& terms, int k,
                           int truncation);

WeightedSeries series_zero(int k, int truncation);
// The monomial series for z, zbar or u respectively.
WeightedSeries series_z(int k, int truncation);
WeightedSeries series_zbar(int k, int truncation);
WeightedSeries series_u(int k, int truncation);

WeightedSeries series_add(const WeightedSeries& a, const WeightedSeries& b);
WeightedSeries series_sub(const WeightedSeries& a, const WeightedSeries& b);
WeightedSeries series_neg(const WeightedSeries& a);
WeightedSeries series_scale(const GaussianRational& c, const WeightedSeries& a);
WeightedSeries series_mul(const WeightedSeries& a, const WeightedSeries& b);
WeightedSeries series_pow(const WeightedSeries& a, int e);

WeightedSeries operator+(const WeightedSeries& a, const WeightedSeries& b);
WeightedSeries operator-(const WeightedSeries& a, const WeightedSeries& b);
WeightedSeries operator*(const WeightedSeries& a, const WeightedSeries& b);

// Coefficientwise conjugate-transpose: result(alpha,beta,gamma) =
// conj(input(beta,alpha,gamma)).
WeightedSeries series_conjugate(const WeightedSeries& a);
bool series_is_real(const WeightedSeries& a);

// Real and imaginary parts in the series sense: re = (a + conj a)/2.
WeightedSeries series_re(const WeightedSeries& a);
WeightedSeries series_im(const WeightedSeries& a);

// Terms of weight exactly nu.
WeightedSeries weight_part(const WeightedSeries& a, int nu);
// Terms of total degree alpha+beta+gamma exactly d.
WeightedSeries degree_part(const WeightedSeries& a, int d);
// Re-truncates to a smaller weight bound.
WeightedSeries retruncate(const WeightedSeries& a, int truncation);

// Lowest weight carrying a nonzero term, or -1 for the zero series.
int min_weight(const WeightedSeries& a);

// Formal composition F(Z, Zbar, U), truncated at the common truncation.
// Z, Zbar and U must have zero constant term; Z and Zbar must have no
// weight-0 part and U no part of weight below the grading k. (This is the
// weight-filtered substitution; the solver in transform.hpp uses the laxer
// internal variant below.)
WeightedSeries series_substitute(const WeightedSeries& F, const WeightedSeries& Z,
                                 const WeightedSeries& Zbar, const WeightedSeries& U);

// Substitution without the weight-filtration preconditions; arguments still
// need vanishing constant terms so the composition is well defined on
// truncated series.
WeightedSeries substitute_unchecked(const WeightedSeries& F, const WeightedSeries& Z,
                                    const WeightedSeries& Zbar, const WeightedSeries& U);

// Formal partials with respect to the three slots.
WeightedSeries series_dz(const WeightedSeries& a);
WeightedSeries series_dzbar(const WeightedSeries& a);
WeightedSeries series_du(const WeightedSeries& a);

std::string to_string(const WeightedSeries& a);

}  // namespace crsym
