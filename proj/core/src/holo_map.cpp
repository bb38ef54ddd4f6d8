#include "crsym/holo_map.hpp"

#include <algorithm>

namespace crsym {

HoloMapPair::HoloMapPair(int k, int truncation) : k_(k), trunc_(truncation) {
    if (k < 1) fail(ErrorCode::DomainError, "grading parameter k must be >= 1");
    if (truncation < k) fail(ErrorCode::DomainError, "map truncation must be >= k");
}

HoloMapPair HoloMapPair::identity(int k, int truncation) {
    HoloMapPair m(k, truncation);
    m.add_f(1, 0, GaussianRational(1));
    m.add_g(0, 1, GaussianRational(1));
    return m;
}

HoloMapPair HoloMapPair::diagonal(const GaussianRational& c, const Rational& lambda, int k,
                                  int truncation) {
    if (c.is_zero() || is_zero(lambda))
        fail(ErrorCode::SingularLinearPart, "diagonal map needs nonzero scales");
    HoloMapPair m(k, truncation);
    m.add_f(1, 0, c);
    m.add_g(0, 1, GaussianRational(lambda));
    return m;
}

GaussianRational HoloMapPair::f_coeff(int i, int j) const {
    auto it = f_.find({i, j});
    return it == f_.end() ? GaussianRational() : it->second;
}

GaussianRational HoloMapPair::g_coeff(int i, int j) const {
    auto it = g_.find({i, j});
    return it == g_.end() ? GaussianRational() : it->second;
}

void HoloMapPair::add_f(int i, int j, const GaussianRational& c) {
    if (i < 0 || j < 0) fail(ErrorCode::DomainError, "negative exponent in map term");
    if (c.is_zero()) return;
    if (i + k_ * j > f_truncation()) return;
    auto [it, inserted] = f_.emplace(MapIndex{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) f_.erase(it);
    }
}

void HoloMapPair::add_g(int i, int j, const GaussianRational& c) {
    if (i < 0 || j < 0) fail(ErrorCode::DomainError, "negative exponent in map term");
    if (c.is_zero()) return;
    if (i + k_ * j > trunc_) return;
    auto [it, inserted] = g_.emplace(MapIndex{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) g_.erase(it);
    }
}

void HoloMapPair::check_normalized() const {
    if (!f_coeff(0, 0).is_zero() || !g_coeff(0, 0).is_zero())
        fail(ErrorCode::NormalizationViolation, "map must fix the origin");
    if (!g_coeff(1, 0).is_zero())
        fail(ErrorCode::NormalizationViolation, "g_z(0) must vanish");
    if (!g_coeff(0, 1).is_real())
        fail(ErrorCode::NormalizationViolation, "g_w(0) must be real");
}

std::vector<WeightedSeries> w_image_powers(const WeightedSeries& F, int max_power) {
    const int k = F.grading();
    const int W = F.truncation();
    // w |-> u + iF
    WeightedSeries wimg = series_add(series_u(k, W), series_scale(gauss_i(), F));
    std::vector<WeightedSeries> table;
    table.reserve(max_power + 1);
    table.push_back(series_make({{{0, 0, 0}, GaussianRational(1)}}, k, W));
    for (int j = 1; j <= max_power; ++j) table.push_back(series_mul(table.back(), wimg));
    return table;
}

WeightedSeries eval_on_powers(const HoloMapPair::TermMap& comp,
                              const std::vector<WeightedSeries>& wpow, int k, int truncation) {
    WeightedSeries out(k, truncation);
    for (const auto& [idx, c] : comp) {
        const WeightedSeries& wj = wpow.at(idx.j);
        for (const auto& [t, v] : wj.terms()) {
            MultiIndex m{t.alpha + idx.i, t.beta, t.gamma};
            out.add_term(m, c * v);
        }
    }
    return out;
}

WeightedSeries map_component_eval(const HoloMapPair& m, MapComponent which,
                                  const WeightedSeries& F) {
    if (!series_is_real(F)) fail(ErrorCode::DomainError, "F must be real");
    if (!F.is_zero() && min_weight(F) < 2)
        fail(ErrorCode::DomainError, "F must have no terms of weight < 2");
    const auto& comp = which == MapComponent::F ? m.f() : m.g();
    int max_j = 0;
    for (const auto& [idx, c] : comp) max_j = std::max(max_j, idx.j);
    auto wpow = w_image_powers(retruncate(F, std::min(F.truncation(), m.truncation())), max_j);
    return eval_on_powers(comp, wpow, m.grading(), std::min(F.truncation(), m.truncation()));
}

HoloMapPair compose(const HoloMapPair& a, const HoloMapPair& b) {
    if (a.grading() != b.grading()) fail(ErrorCode::DomainError, "mismatched grading parameters k");
    const int k = a.grading();
    const int W = std::min(a.truncation(), b.truncation());

    // Power tables of (f_a, g_a) as 2-variable truncated polynomials, kept as
    // WeightedSeries in (z, u) with u standing in for w (same weights).
    auto as_series = [&](const HoloMapPair::TermMap& comp) {
        WeightedSeries s(k, W);
        for (const auto& [idx, c] : comp) s.add_term({idx.i, 0, idx.j}, c);
        return s;
    };
    WeightedSeries fa = as_series(a.f());
    WeightedSeries ga = as_series(a.g());

    int max_i = 0, max_j = 0;
    for (const auto& [idx, c] : b.f()) {
        max_i = std::max(max_i, idx.i);
        max_j = std::max(max_j, idx.j);
    }
    for (const auto& [idx, c] : b.g()) {
        max_i = std::max(max_i, idx.i);
        max_j = std::max(max_j, idx.j);
    }
    std::vector<WeightedSeries> pf{series_make({{{0, 0, 0}, GaussianRational(1)}}, k, W)};
    for (int i = 1; i <= max_i; ++i) pf.push_back(series_mul(pf.back(), fa));
    std::vector<WeightedSeries> pg{series_make({{{0, 0, 0}, GaussianRational(1)}}, k, W)};
    for (int j = 1; j <= max_j; ++j) pg.push_back(series_mul(pg.back(), ga));

    HoloMapPair out(k, W);
    auto emit = [&](const HoloMapPair::TermMap& comp, bool into_f) {
        for (const auto& [idx, c] : comp) {
            WeightedSeries t = series_mul(pf[idx.i], pg[idx.j]);
            for (const auto& [ti, tv] : t.terms()) {
                if (into_f)
                    out.add_f(ti.alpha, ti.gamma, c * tv);
                else
                    out.add_g(ti.alpha, ti.gamma, c * tv);
            }
        }
    };
    emit(b.f(), true);
    emit(b.g(), false);
    return out;
}

namespace {

std::string render_map_component(const HoloMapPair::TermMap& comp) {
    if (comp.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : comp) {
        if (!first) out += " + ";
        first = false;
        std::string mono;
        auto append_power = [&](const char* name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e != 1) mono += "^" + std::to_string(e);
        };
        append_power("z", idx.i);
        append_power("w", idx.j);
        std::string cs = to_string(c);
        if (mono.empty())
            out += cs;
        else if (cs == "1")
            out += mono;
        else if (cs == "-1")
            out += "-" + mono;
        else
            out += cs + "*" + mono;
    }
    return out;
}

}  // namespace

std::string to_string_f(const HoloMapPair& m) { return render_map_component(m.f()); }
std::string to_string_g(const HoloMapPair& m) { return render_map_component(m.g()); }

}  // namespace crsym
