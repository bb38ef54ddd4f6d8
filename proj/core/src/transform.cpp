#include "crsym/transform.hpp"

#include <algorithm>
#include <numeric>

namespace crsym {

RootOfUnity reduce_root(long n, long t) {
    if (n <= 0) fail(ErrorCode::DomainError, "root-of-unity order must be positive");
    t %= n;
    if (t < 0) t += n;
    long g = std::gcd(n, t == 0 ? n : t);
    return RootOfUnity{n / g, t / g};
}

ExactPhase ExactPhase::from_unit(const GaussianRational& u) {
    if (norm_sq(u) != 1) fail(ErrorCode::DomainError, "phase must have unit norm");
    ExactPhase p;
    p.v_ = u;
    return p;
}

ExactPhase ExactPhase::root(long n, long t) {
    RootOfUnity r = reduce_root(n, t);
    ExactPhase p;
    if (r.n == 1)
        p.v_ = GaussianRational(1);
    else if (r.n == 2)
        p.v_ = GaussianRational(-1);
    else if (r.n == 4)
        p.v_ = r.t == 1 ? gauss_i() : -gauss_i();
    else
        p.v_ = r;
    return p;
}

bool ExactPhase::is_trivial() const {
    if (auto* u = std::get_if<GaussianRational>(&v_)) return *u == GaussianRational(1);
    return false;
}

std::optional<GaussianRational> ExactPhase::materialize() const {
    if (auto* u = std::get_if<GaussianRational>(&v_)) return *u;
    return std::nullopt;
}

std::string to_string(const ExactPhase& p) {
    if (auto* u = std::get_if<GaussianRational>(&p.value())) return to_string(*u);
    const auto& r = std::get<RootOfUnity>(p.value());
    return "e^(2*pi*i*" + std::to_string(r.t) + "/" + std::to_string(r.n) + ")";
}

Rational rational_binomial(const Rational& q, int m) {
    Rational acc(1);
    for (int t = 0; t < m; ++t) {
        acc *= (q - Rational(t));
        acc /= Rational(t + 1);
    }
    return acc;
}

WeightedSeries solve_defining_identity(const WeightedSeries& Z, const WeightedSeries& Zbar,
                                       const WeightedSeries& U, const WeightedSeries& S) {
    const int k = S.grading();
    const int W = std::min(std::min(Z.truncation(), Zbar.truncation()),
                           std::min(U.truncation(), S.truncation()));

    const GaussianRational c = Z.coeff({1, 0, 0});
    const GaussianRational e = Z.coeff({0, 0, 1});
    const GaussianRational lam = U.coeff({0, 0, 1});
    if (c.is_zero() || lam.is_zero())
        fail(ErrorCode::SingularLinearPart, "map linear part is not invertible");
    if (!lam.is_real()) fail(ErrorCode::NormalizationViolation, "Re g_w must be the only w-linear part");
    if (!Z.coeff({0, 1, 0}).is_zero() || !U.coeff({1, 0, 0}).is_zero() ||
        !U.coeff({0, 1, 0}).is_zero())
        fail(ErrorCode::NormalizationViolation, "unexpected linear part in substituted arguments");

    // Inverse of the triangular linear part z -> c z + e u, u -> lam u.
    const GaussianRational cinv = inverse(c);
    const GaussianRational laminv = inverse(lam);
    WeightedSeries linv_z(k, W), linv_zbar(k, W), linv_u(k, W);
    linv_z.add_term({1, 0, 0}, cinv);
    linv_z.add_term({0, 0, 1}, -(e * cinv * laminv));
    linv_zbar.add_term({0, 1, 0}, conj(cinv));
    linv_zbar.add_term({0, 0, 1}, -(conj(e) * conj(cinv) * laminv));
    linv_u.add_term({0, 0, 1}, laminv);

    WeightedSeries result(k, W);
    WeightedSeries residual = S;
    for (int d = 0; d <= W; ++d) {
        WeightedSeries H = degree_part(residual, d);
        if (H.is_zero()) continue;
        WeightedSeries P = substitute_unchecked(H, linv_z, linv_zbar, linv_u);
        result = series_add(result, P);
        residual = series_sub(residual, substitute_unchecked(P, Z, Zbar, U));
    }
    if (!residual.is_zero())
        fail(ErrorCode::DomainError, "defining identity solver left a nonzero residual");
    return result;
}

WeightedSeries pushforward_series(const WeightedSeries& F, const HoloMapPair& map) {
    map.check_normalized();
    if (!series_is_real(F)) fail(ErrorCode::DomainError, "defining function must be real");
    const int k = F.grading();
    if (map.grading() != k) fail(ErrorCode::DomainError, "mismatched grading parameters k");
    const int W = std::min(F.truncation(), map.truncation());
    if (map.f_coeff(1, 0).is_zero() || map.g_coeff(0, 1).is_zero())
        fail(ErrorCode::SingularLinearPart, "map linear part is not invertible");

    int max_j = 0;
    for (const auto& [idx, v] : map.f()) max_j = std::max(max_j, idx.j);
    for (const auto& [idx, v] : map.g()) max_j = std::max(max_j, idx.j);
    auto wpow = w_image_powers(retruncate(F, W), max_j);

    WeightedSeries Z = eval_on_powers(map.f(), wpow, k, W);
    WeightedSeries Zbar = series_conjugate(Z);
    WeightedSeries G = eval_on_powers(map.g(), wpow, k, W);
    WeightedSeries U = series_re(G);
    WeightedSeries S = series_im(G);

    WeightedSeries out = solve_defining_identity(Z, Zbar, U, S);
    if (!series_is_real(out))
        fail(ErrorCode::DomainError, "pushforward produced a non-real defining function");
    return out;
}

Hypersurface pushforward(const Hypersurface& M, const HoloMapPair& map) {
    return validate_surface(pushforward_series(M.F, map));
}

HoloMapPair ok_model_automorphism(const InitialData& d, int k, int truncation) {
    if (k % 2 != 0)
        fail(ErrorCode::DomainError, "the circular model requires even k");
    if (sgn(d.delta) <= 0) fail(ErrorCode::DomainError, "delta must be positive");
    auto phase = d.theta.materialize();
    if (!phase)
        fail(ErrorCode::DomainError,
             "phase token is not Gaussian rational; cannot expand the automorphism exactly");
    const int l = k / 2;

    HoloMapPair m(k, truncation);
    const GaussianRational lead = GaussianRational(d.delta) * *phase;
    const Rational exponent = rat(-1, l);
    for (int j = 0; 1 + k * j <= m.f_truncation(); ++j)
        m.add_f(1, j, lead * GaussianRational(rational_binomial(exponent, j) * pow_int(d.mu, j)));
    const Rational scale = pow_int(d.delta, k);
    for (int j = 1; k * j <= truncation; ++j) {
        Rational c = scale * pow_int(-d.mu, j - 1);
        m.add_g(0, j, GaussianRational(c));
    }
    return m;
}

bool is_automorphism(const Hypersurface& M, const HoloMapPair& map) {
    return pushforward_series(M.F, map) == retruncate(M.F, std::min(M.truncation(), map.truncation()));
}

}  // namespace crsym
