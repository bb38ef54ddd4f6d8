#include "crsym/series.hpp"

#include <algorithm>

namespace crsym {

namespace {

void require_same_grading(const WeightedSeries& a, const WeightedSeries& b) {
    if (a.grading() != b.grading())
        fail(ErrorCode::DomainError, "mismatched grading parameters k");
}

int common_truncation(const WeightedSeries& a, const WeightedSeries& b) {
    return std::min(a.truncation(), b.truncation());
}

}  // namespace

WeightedSeries::WeightedSeries(int k, int truncation) : k_(k), trunc_(truncation) {
    if (k < 1) fail(ErrorCode::DomainError, "grading parameter k must be >= 1");
    if (truncation < 1) fail(ErrorCode::DomainError, "truncation weight must be >= 1");
}

GaussianRational WeightedSeries::coeff(const MultiIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? GaussianRational() : it->second;
}

void WeightedSeries::add_term(const MultiIndex& idx, const GaussianRational& c) {
    if (idx.alpha < 0 || idx.beta < 0 || idx.gamma < 0)
        fail(ErrorCode::DomainError, "negative exponent in multi-index");
    if (c.is_zero()) return;
    if (weight(idx, k_) > trunc_) return;
    auto [it, inserted] = coeffs_.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

WeightedSeries series_make(const std::vector<std::pair<MultiIndex, GaussianRational>>& terms, int k,
                           int truncation) {
    WeightedSeries s(k, truncation);
    for (const auto& [idx, c] : terms) s.add_term(idx, c);
    return s;
}

WeightedSeries series_zero(int k, int truncation) { return WeightedSeries(k, truncation); }

WeightedSeries series_z(int k, int truncation) {
    return series_make({{{1, 0, 0}, GaussianRational(1)}}, k, truncation);
}

WeightedSeries series_zbar(int k, int truncation) {
    return series_make({{{0, 1, 0}, GaussianRational(1)}}, k, truncation);
}

WeightedSeries series_u(int k, int truncation) {
    return series_make({{{0, 0, 1}, GaussianRational(1)}}, k, truncation);
}

WeightedSeries series_add(const WeightedSeries& a, const WeightedSeries& b) {
    require_same_grading(a, b);
    WeightedSeries out(a.grading(), common_truncation(a, b));
    for (const auto& [idx, c] : a.terms()) out.add_term(idx, c);
    for (const auto& [idx, c] : b.terms()) out.add_term(idx, c);
    return out;
}

WeightedSeries series_sub(const WeightedSeries& a, const WeightedSeries& b) {
    require_same_grading(a, b);
    WeightedSeries out(a.grading(), common_truncation(a, b));
    for (const auto& [idx, c] : a.terms()) out.add_term(idx, c);
    for (const auto& [idx, c] : b.terms()) out.add_term(idx, -c);
    return out;
}

WeightedSeries series_neg(const WeightedSeries& a) {
    WeightedSeries out(a.grading(), a.truncation());
    for (const auto& [idx, c] : a.terms()) out.add_term(idx, -c);
    return out;
}

WeightedSeries series_scale(const GaussianRational& c, const WeightedSeries& a) {
    WeightedSeries out(a.grading(), a.truncation());
    if (c.is_zero()) return out;
    for (const auto& [idx, v] : a.terms()) out.add_term(idx, c * v);
    return out;
}

WeightedSeries series_mul(const WeightedSeries& a, const WeightedSeries& b) {
    require_same_grading(a, b);
    const int k = a.grading();
    const int W = common_truncation(a, b);
    WeightedSeries out(k, W);
    for (const auto& [ia, ca] : a.terms()) {
        const int wa = weight(ia, k);
        for (const auto& [ib, cb] : b.terms()) {
            if (wa + weight(ib, k) > W) continue;
            out.add_term({ia.alpha + ib.alpha, ia.beta + ib.beta, ia.gamma + ib.gamma}, ca * cb);
        }
    }
    return out;
}

WeightedSeries series_pow(const WeightedSeries& a, int e) {
    if (e < 0) fail(ErrorCode::DomainError, "negative series power");
    WeightedSeries acc = series_make({{{0, 0, 0}, GaussianRational(1)}}, a.grading(), a.truncation());
    for (int i = 0; i < e; ++i) acc = series_mul(acc, a);
    return acc;
}

WeightedSeries operator+(const WeightedSeries& a, const WeightedSeries& b) { return series_add(a, b); }
WeightedSeries operator-(const WeightedSeries& a, const WeightedSeries& b) { return series_sub(a, b); }
WeightedSeries operator*(const WeightedSeries& a, const WeightedSeries& b) { return series_mul(a, b); }

WeightedSeries series_conjugate(const WeightedSeries& a) {
    WeightedSeries out(a.grading(), a.truncation());
    for (const auto& [idx, c] : a.terms()) out.add_term(conj_index(idx), conj(c));
    return out;
}

bool series_is_real(const WeightedSeries& a) { return a == series_conjugate(a); }

WeightedSeries series_re(const WeightedSeries& a) {
    GaussianRational half(rat(1, 2));
    return series_scale(half, series_add(a, series_conjugate(a)));
}

WeightedSeries series_im(const WeightedSeries& a) {
    // (a - conj a) / (2i)
    GaussianRational c(Rational(0), rat(-1, 2));
    return series_scale(c, series_sub(a, series_conjugate(a)));
}

WeightedSeries weight_part(const WeightedSeries& a, int nu) {
    WeightedSeries out(a.grading(), a.truncation());
    for (const auto& [idx, c] : a.terms())
        if (weight(idx, a.grading()) == nu) out.add_term(idx, c);
    return out;
}

WeightedSeries degree_part(const WeightedSeries& a, int d) {
    WeightedSeries out(a.grading(), a.truncation());
    for (const auto& [idx, c] : a.terms())
        if (idx.alpha + idx.beta + idx.gamma == d) out.add_term(idx, c);
    return out;
}

WeightedSeries retruncate(const WeightedSeries& a, int truncation) {
    WeightedSeries out(a.grading(), truncation);
    for (const auto& [idx, c] : a.terms()) out.add_term(idx, c);
    return out;
}

int min_weight(const WeightedSeries& a) {
    int best = -1;
    for (const auto& [idx, c] : a.terms()) {
        int w = weight(idx, a.grading());
        if (best < 0 || w < best) best = w;
    }
    return best;
}

namespace {

// Shared power-table substitution core.
WeightedSeries substitute_core(const WeightedSeries& F, const WeightedSeries& Z,
                               const WeightedSeries& Zbar, const WeightedSeries& U) {
    const int k = F.grading();
    int W = std::min(std::min(F.truncation(), Z.truncation()),
                     std::min(Zbar.truncation(), U.truncation()));
    for (const WeightedSeries* arg : {&Z, &Zbar, &U}) {
        if (arg->grading() != k) fail(ErrorCode::DomainError, "mismatched grading in substitution");
        if (!arg->coeff({0, 0, 0}).is_zero())
            fail(ErrorCode::DomainError, "substituted argument has a nonzero constant term");
    }

    int max_a = 0, max_b = 0, max_g = 0;
    for (const auto& [idx, c] : F.terms()) {
        max_a = std::max(max_a, idx.alpha);
        max_b = std::max(max_b, idx.beta);
        max_g = std::max(max_g, idx.gamma);
    }

    auto powers = [&](const WeightedSeries& base, int n) {
        std::vector<WeightedSeries> table;
        table.reserve(n + 1);
        table.push_back(series_make({{{0, 0, 0}, GaussianRational(1)}}, k, W));
        for (int i = 1; i <= n; ++i) table.push_back(series_mul(table.back(), base));
        return table;
    };
    auto pz = powers(Z, max_a);
    auto pzb = powers(Zbar, max_b);
    auto pu = powers(U, max_g);

    WeightedSeries out(k, W);
    for (const auto& [idx, c] : F.terms()) {
        WeightedSeries t = series_mul(pz[idx.alpha], pzb[idx.beta]);
        t = series_mul(t, pu[idx.gamma]);
        out = series_add(out, series_scale(c, t));
    }
    return out;
}

}  // namespace

WeightedSeries series_substitute(const WeightedSeries& F, const WeightedSeries& Z,
                                 const WeightedSeries& Zbar, const WeightedSeries& U) {
    const int k = F.grading();
    if (!Z.is_zero() && min_weight(Z) < 1)
        fail(ErrorCode::DomainError, "Z image must have weight >= 1");
    if (!Zbar.is_zero() && min_weight(Zbar) < 1)
        fail(ErrorCode::DomainError, "Zbar image must have weight >= 1");
    if (!U.is_zero() && min_weight(U) < k)
        fail(ErrorCode::DomainError, "U image must have weight >= k");
    return substitute_core(F, Z, Zbar, U);
}

WeightedSeries substitute_unchecked(const WeightedSeries& F, const WeightedSeries& Z,
                                    const WeightedSeries& Zbar, const WeightedSeries& U) {
    return substitute_core(F, Z, Zbar, U);
}

WeightedSeries series_dz(const WeightedSeries& a) {
    WeightedSeries out(a.grading(), a.truncation());
    for (const auto& [idx, c] : a.terms())
        if (idx.alpha > 0)
            out.add_term({idx.alpha - 1, idx.beta, idx.gamma}, c * GaussianRational(idx.alpha));
    return out;
}

WeightedSeries series_dzbar(const WeightedSeries& a) {
    WeightedSeries out(a.grading(), a.truncation());
    for (const auto& [idx, c] : a.terms())
        if (idx.beta > 0)
            out.add_term({idx.alpha, idx.beta - 1, idx.gamma}, c * GaussianRational(idx.beta));
    return out;
}

WeightedSeries series_du(const WeightedSeries& a) {
    WeightedSeries out(a.grading(), a.truncation());
    for (const auto& [idx, c] : a.terms())
        if (idx.gamma > 0)
            out.add_term({idx.alpha, idx.beta, idx.gamma - 1}, c * GaussianRational(idx.gamma));
    return out;
}

std::string to_string(const WeightedSeries& a) {
    if (a.is_zero()) return "0";
    // Stable display order: weight, then inverse-lex.
    std::vector<std::pair<MultiIndex, GaussianRational>> sorted(a.terms().begin(), a.terms().end());
    std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
        int wx = weight(x.first, a.grading());
        int wy = weight(y.first, a.grading());
        if (wx != wy) return wx < wy;
        return inv_lex_less(x.first, y.first);
    });
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : sorted) {
        if (!first) out += " + ";
        first = false;
        std::string mono;
        auto append_power = [&](const char* name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e != 1) mono += "^" + std::to_string(e);
        };
        append_power("z", idx.alpha);
        append_power("zb", idx.beta);
        append_power("u", idx.gamma);
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

}  // namespace crsym
