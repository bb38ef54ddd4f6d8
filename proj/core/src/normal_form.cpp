#include "crsym/normal_form.hpp"

#include <algorithm>
#include <numeric>

#include "crsym/linalg.hpp"

namespace crsym {

bool forbidden_slice(int alpha, int beta, int l) {
    if (alpha == 0 || beta == 0) return true;
    if (alpha == l && beta >= l) return true;
    if (beta == l && alpha >= l) return true;
    if (alpha == 2 * l && beta == 2 * l) return true;
    if (alpha == 3 * l && beta == 3 * l) return true;
    if ((alpha == 2 * l && beta == 2 * l - 1) || (alpha == 2 * l - 1 && beta == 2 * l)) return true;
    return false;
}

namespace {

int require_unit_circular(const Hypersurface& M) {
    ModelInfo info = model_of(M);
    if (!info.circular)
        fail(ErrorCode::NotCircular, "the model is not the circular hypersurface v = |z|^k");
    if (info.model_coeffs.at(M.k / 2) != GaussianRational(1))
        fail(ErrorCode::NotCircular, "leading coefficient must be 1; apply leading_rescale first");
    return M.k / 2;
}

}  // namespace

bool check_normal_form(const Hypersurface& M) {
    const int l = require_unit_circular(M);
    WeightedSeries N = perturbation(M);
    for (const auto& [idx, c] : N.terms())
        if (forbidden_slice(idx.alpha, idx.beta, l)) return false;
    return true;
}

std::pair<WeightedSeries, HoloMapPair> absorb_harmonic(const WeightedSeries& F) {
    if (!series_is_real(F)) fail(ErrorCode::DomainError, "defining function must be real");
    for (const auto& [idx, c] : F.terms())
        if (idx.alpha + idx.beta + idx.gamma < 2)
            fail(ErrorCode::DomainError, "terms of total degree < 2 violate the graph normalization");

    const int k = F.grading();
    const int W = F.truncation();
    WeightedSeries cur = F;
    HoloMapPair total = HoloMapPair::identity(k, W);

    int guard = 0;
    while (true) {
        int lowest = -1;
        GaussianRational a;
        for (const auto& [idx, c] : cur.terms()) {
            if (idx.beta != 0 || idx.gamma != 0) continue;
            if (lowest < 0 || idx.alpha < lowest) {
                lowest = idx.alpha;
                a = c;
            }
        }
        if (lowest < 0) break;
        if (++guard > W + 1)
            fail(ErrorCode::DomainError, "harmonic absorption failed to terminate");

        // Im(c z^d) = -(h + conj h) for h = a z^d needs c = -2i a.
        GaussianRational c = GaussianRational(Rational(0), Rational(-2)) * a;
        HoloMapPair step = HoloMapPair::identity(k, W);
        step.add_g(lowest, 0, c);
        cur = pushforward_series(cur, step);
        total = compose(total, step);
    }
    return {cur, total};
}

namespace {

enum class UnknownKind { FRe, FIm, GRe, GIm, NRe, NIm };

struct Unknown {
    UnknownKind kind;
    int i = 0;  // map exponents for the f/g kinds
    int j = 0;
    MultiIndex idx;  // series index for the N* kinds
};

// Deterministic enumeration of the weight-nu indices with alpha >= beta.
std::vector<MultiIndex> level_indices(int nu, int k) {
    std::vector<MultiIndex> out;
    for (int gamma = 0; k * gamma <= nu; ++gamma) {
        int rem = nu - k * gamma;
        for (int alpha = rem; 2 * alpha >= rem; --alpha) out.push_back({alpha, rem - alpha, gamma});
    }
    return out;
}

}  // namespace

NormalFormResult normalize(const Hypersurface& M) {
    const int k = M.k;
    const int l = require_unit_circular(M);
    const int W = M.truncation();

    int max_j = W / k;
    auto wpow = w_image_powers(M.F, max_j);

    HoloMapPair map = HoloMapPair::identity(k, W);
    WeightedSeries model = model_series(model_of(M), W);
    WeightedSeries nstar(k, W);

    for (int nu = 1; nu + k <= W; ++nu) {
        const int target = k + nu;

        std::vector<Unknown> unknowns;
        for (int j = 0; k * j <= nu + 1; ++j) {
            int i = nu + 1 - k * j;
            unknowns.push_back({UnknownKind::FRe, i, j, {}});
            unknowns.push_back({UnknownKind::FIm, i, j, {}});
        }
        for (int j = 0; k * j <= target; ++j) {
            int i = target - k * j;
            const bool mu_slot = (i == 0 && j == 2);  // Re g_ww = 0 is initial data
            if (!mu_slot) unknowns.push_back({UnknownKind::GRe, i, j, {}});
            unknowns.push_back({UnknownKind::GIm, i, j, {}});
        }
        std::vector<MultiIndex> level = level_indices(target, k);
        for (const MultiIndex& idx : level) {
            if (forbidden_slice(idx.alpha, idx.beta, l)) continue;
            unknowns.push_back({UnknownKind::NRe, 0, 0, idx});
            if (idx.alpha > idx.beta) unknowns.push_back({UnknownKind::NIm, 0, 0, idx});
        }

        // Base point of the affine residual.
        WeightedSeries Z0 = retruncate(eval_on_powers(map.f(), wpow, k, W), target);
        WeightedSeries Z0b = series_conjugate(Z0);
        WeightedSeries G0 = retruncate(eval_on_powers(map.g(), wpow, k, W), target);
        WeightedSeries U0 = series_re(G0);
        WeightedSeries S0 = series_im(G0);
        WeightedSeries fstar_known = retruncate(series_add(model, nstar), target);
        WeightedSeries base =
            weight_part(series_sub(substitute_unchecked(fstar_known, Z0, Z0b, U0), S0), target);

        // Partials of the known part at the base point; each column is one or
        // two series multiplications against these.
        WeightedSeries D1 = substitute_unchecked(series_dz(fstar_known), Z0, Z0b, U0);
        WeightedSeries D2 = substitute_unchecked(series_dzbar(fstar_known), Z0, Z0b, U0);
        WeightedSeries D3 = substitute_unchecked(series_du(fstar_known), Z0, Z0b, U0);

        int need_a = 0, need_g = 0;
        for (const Unknown& un : unknowns) {
            if (un.kind == UnknownKind::NRe) {
                need_a = std::max({need_a, un.idx.alpha, un.idx.beta});
                need_g = std::max(need_g, un.idx.gamma);
            }
        }
        std::vector<WeightedSeries> pz{series_make({{{0, 0, 0}, GaussianRational(1)}}, k, target)};
        for (int i = 1; i <= need_a; ++i) pz.push_back(series_mul(pz.back(), Z0));
        std::vector<WeightedSeries> pzb{series_make({{{0, 0, 0}, GaussianRational(1)}}, k, target)};
        for (int i = 1; i <= need_a; ++i) pzb.push_back(series_mul(pzb.back(), Z0b));
        std::vector<WeightedSeries> pu{series_make({{{0, 0, 0}, GaussianRational(1)}}, k, target)};
        for (int i = 1; i <= need_g; ++i) pu.push_back(series_mul(pu.back(), U0));

        const GaussianRational I = gauss_i();
        auto column_for = [&](const Unknown& un) -> WeightedSeries {
            switch (un.kind) {
                case UnknownKind::FRe:
                case UnknownKind::FIm: {
                    WeightedSeries zi(k, target);
                    zi.add_term({un.i, 0, 0}, GaussianRational(1));
                    WeightedSeries dz = series_mul(zi, retruncate(wpow[un.j], target));
                    WeightedSeries dzb = series_conjugate(dz);
                    if (un.kind == UnknownKind::FIm) {
                        dz = series_scale(I, dz);
                        dzb = series_scale(-I, dzb);
                    }
                    return series_add(series_mul(D1, dz), series_mul(D2, dzb));
                }
                case UnknownKind::GRe:
                case UnknownKind::GIm: {
                    WeightedSeries zi(k, target);
                    zi.add_term({un.i, 0, 0}, GaussianRational(1));
                    WeightedSeries dg = series_mul(zi, retruncate(wpow[un.j], target));
                    if (un.kind == UnknownKind::GIm) dg = series_scale(I, dg);
                    return series_sub(series_mul(D3, series_re(dg)), series_im(dg));
                }
                case UnknownKind::NRe:
                case UnknownKind::NIm: {
                    WeightedSeries T = series_mul(series_mul(pz[un.idx.alpha], pzb[un.idx.beta]),
                                                  pu[un.idx.gamma]);
                    if (un.idx.alpha == un.idx.beta) return T;
                    WeightedSeries Tc = series_conjugate(T);
                    if (un.kind == UnknownKind::NRe) return series_add(T, Tc);
                    return series_scale(I, series_sub(T, Tc));
                }
            }
            fail(ErrorCode::DomainError, "unreachable");
        };

        // Rows: a real equation per alpha >= beta index, plus an imaginary
        // one when alpha > beta (conjugate indices are not independent).
        std::vector<std::pair<MultiIndex, bool>> rows;
        for (const MultiIndex& idx : level) {
            rows.emplace_back(idx, false);
            if (idx.alpha > idx.beta) rows.emplace_back(idx, true);
        }
        if (rows.size() != unknowns.size())
            fail(ErrorCode::RankDefect,
                 "normal form system is not square at weight " + std::to_string(target));

        const int n = static_cast<int>(rows.size());
        RationalMatrix A(n, n);
        std::vector<Rational> rhs(n);
        for (int r = 0; r < n; ++r) {
            const GaussianRational b = base.coeff(rows[r].first);
            rhs[r] = -(rows[r].second ? b.im : b.re);
        }
        for (int c = 0; c < n; ++c) {
            WeightedSeries col = weight_part(column_for(unknowns[c]), target);
            for (int r = 0; r < n; ++r) {
                const GaussianRational v = col.coeff(rows[r].first);
                A.at(r, c) = rows[r].second ? v.im : v.re;
            }
        }

        auto x = solve_exact(A, rhs);
        if (!x)
            fail(ErrorCode::RankDefect,
                 "normal form system is singular at weight " + std::to_string(target));

        for (int c = 0; c < n; ++c) {
            const Rational& v = (*x)[c];
            if (is_zero(v)) continue;
            const Unknown& un = unknowns[c];
            switch (un.kind) {
                case UnknownKind::FRe: map.add_f(un.i, un.j, GaussianRational(v)); break;
                case UnknownKind::FIm: map.add_f(un.i, un.j, {Rational(0), v}); break;
                case UnknownKind::GRe: map.add_g(un.i, un.j, GaussianRational(v)); break;
                case UnknownKind::GIm: map.add_g(un.i, un.j, {Rational(0), v}); break;
                case UnknownKind::NRe:
                    nstar.add_term(un.idx, GaussianRational(v));
                    if (un.idx.alpha != un.idx.beta)
                        nstar.add_term(conj_index(un.idx), GaussianRational(v));
                    break;
                case UnknownKind::NIm:
                    nstar.add_term(un.idx, {Rational(0), v});
                    nstar.add_term(conj_index(un.idx), {Rational(0), -v});
                    break;
            }
        }
    }

    WeightedSeries fstar = series_add(model, nstar);
    if (pushforward_series(M.F, map) != fstar)
        fail(ErrorCode::RankDefect, "normal form verification against the pushforward failed");
    Hypersurface nf{fstar, k};
    if (!check_normal_form(nf))
        fail(ErrorCode::RankDefect, "solver output violates the normal form conditions");
    return NormalFormResult{nf, map, InitialData{Rational(1), ExactPhase::one(), Rational(0)}};
}

Hypersurface renormalize_with_initial_data(const Hypersurface& M_nf, const InitialData& d) {
    if (!check_normal_form(M_nf))
        fail(ErrorCode::NotNormalized, "expected a surface in normal form");
    auto aut = ok_model_automorphism(d, M_nf.k, M_nf.truncation());
    Hypersurface moved = pushforward(M_nf, aut);
    return normalize(moved).nf;
}

namespace {

struct MuTarget {
    AnchorIndex anchor;
    GaussianRational anchor_value;
    MultiIndex target;
};

MuTarget mu_target(const Hypersurface& M_nf, int l) {
    AnchorIndex a = anchor_index(M_nf);  // throws ModelSurface on models
    MuTarget t;
    t.anchor = a;
    t.anchor_value = M_nf.F.coeff(a.idx);
    if (a.idx.alpha + a.idx.beta + l * a.idx.gamma != 2 * l) {
        t.target = {a.idx.alpha, a.idx.beta, a.idx.gamma + 1};
    } else {
        // the remaining case: gamma0 = 1 and alpha0 + beta0 = l
        t.target = {a.idx.alpha + 2 * l, a.idx.beta + 2 * l, 0};
    }
    return t;
}

// The condition reads Re(a_T / a_anchor) = 0: dividing by the anchor value
// stands in for the anchor normalization a_anchor = 1, whose dilation part
// is irrational in general.
Rational mu_indicator(const Hypersurface& M, const MuTarget& t) {
    return (M.F.coeff(t.target) / t.anchor_value).re;
}

}  // namespace

Rational special_mu(const Hypersurface& M_nf) {
    const int l = require_unit_circular(M_nf);
    MuTarget t = mu_target(M_nf, l);
    if (weight(t.target, M_nf.k) > M_nf.truncation())
        fail(ErrorCode::DomainError,
             "truncation too small to evaluate the mu normalization condition");

    auto evaluate = [&](const Rational& mu) {
        Hypersurface R =
            renormalize_with_initial_data(M_nf, InitialData{Rational(1), ExactPhase::one(), mu});
        if (R.F.coeff(t.anchor.idx) != t.anchor_value)
            fail(ErrorCode::NonAffine, "anchor coefficient moved under mu renormalization");
        return mu_indicator(R, t);
    };

    const Rational h0 = mu_indicator(M_nf, t);
    const Rational h1 = evaluate(Rational(1));
    const Rational h2 = evaluate(Rational(2));
    const Rational slope = h1 - h0;
    if (h2 - h1 != slope) fail(ErrorCode::NonAffine, "target coefficient is not affine in mu");
    if (is_zero(slope)) {
        if (is_zero(h0)) return Rational(0);
        fail(ErrorCode::NonAffine, "mu does not move the target coefficient");
    }
    return -h0 / slope;
}

bool is_special_normalized(const Hypersurface& M_nf) {
    const int l = require_unit_circular(M_nf);
    if (is_model_surface(M_nf)) return true;
    MuTarget t = mu_target(M_nf, l);
    // Beyond the truncation the mu action is invisible, so the condition is
    // vacuous at this order.
    if (weight(t.target, M_nf.k) > M_nf.truncation()) return true;
    return is_zero(mu_indicator(M_nf, t));
}

std::pair<Hypersurface, ResidualGroupNote> special_normalize(const Hypersurface& M_nf) {
    const int l = require_unit_circular(M_nf);
    Rational mu = special_mu(M_nf);
    Hypersurface out =
        is_zero(mu) ? M_nf
                    : renormalize_with_initial_data(
                          M_nf, InitialData{Rational(1), ExactPhase::one(), mu});
    MuTarget t = mu_target(out, l);
    if (!is_zero(mu_indicator(out, t)))
        fail(ErrorCode::NonAffine, "mu normalization failed to kill the target coefficient");

    ResidualGroupNote note;
    note.anchor = t.anchor;
    note.anchor_value = t.anchor_value;
    WeightedSeries Q = weight_part(perturbation(out), t.anchor.p);
    note.theta_free =
        Q.term_count() == 1 && Q.terms().begin()->first.alpha == Q.terms().begin()->first.beta;
    int g = 0;
    for (const auto& [idx, c] : out.F.terms()) g = std::gcd(g, std::abs(idx.alpha - idx.beta));
    note.theta_order = g;  // 0 when every term is diagonal (full circle)
    return {out, note};
}

}  // namespace crsym
