#include "crsym/equivalence.hpp"

#include <algorithm>

#include "crsym/symmetry.hpp"

namespace crsym {

const char* to_string(Refutation::Kind k) {
    switch (k) {
        case Refutation::Kind::TypeMismatch: return "type-mismatch";
        case Refutation::Kind::InvariantMismatch: return "invariant-mismatch";
        case Refutation::Kind::SupportMismatch: return "support-mismatch";
        case Refutation::Kind::ModulusKernel: return "modulus-kernel";
        case Refutation::Kind::PhaseObstruction: return "phase-obstruction";
    }
    return "?";
}

namespace {

EquivalenceCertificate refuted(Refutation r) {
    EquivalenceCertificate cert;
    cert.equivalent = false;
    cert.refutation = std::move(r);
    return cert;
}

// Exact integer square root test for rationals.
std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    Integer num = q.get_num(), den = q.get_den();
    Integer rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn) / Rational(rd);
}

// Exact rational n-th root when it exists.
std::optional<Rational> rational_root(const Rational& q, long n) {
    if (n == 0) return std::nullopt;
    if (n < 0) {
        auto r = rational_root(q, -n);
        if (!r || is_zero(*r)) return std::nullopt;
        return Rational(1) / *r;
    }
    if (sgn(q) <= 0) return std::nullopt;
    Integer num = q.get_num(), den = q.get_den();
    Integer rn, rd;
    mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n));
    Integer pn(1), pd(1);
    for (long i = 0; i < n; ++i) {
        pn *= rn;
        pd *= rd;
    }
    if (pn != num || pd != den) return std::nullopt;
    return Rational(rn) / Rational(rd);
}

// Hermite reduction of the 2-column modulus system with tracked values:
// returns up to two pivot relations; the zero rows reproduce the kernel
// consistency checks performed separately.
std::vector<ModulusRelation> modulus_relations(std::vector<std::array<Integer, 2>> rows,
                                               std::vector<Rational> vals) {
    const int n = static_cast<int>(rows.size());
    for (int col = 0, r = 0; col < 2 && r < n; ++col) {
        while (true) {
            int pivot = -1;
            for (int i = r; i < n; ++i) {
                if (rows[i][col] == 0) continue;
                if (pivot < 0 || cmp(abs(rows[i][col]), abs(rows[pivot][col])) < 0) pivot = i;
            }
            if (pivot < 0) break;
            std::swap(rows[pivot], rows[r]);
            std::swap(vals[pivot], vals[r]);
            bool reduced = true;
            for (int i = r + 1; i < n; ++i) {
                if (rows[i][col] == 0) continue;
                Integer q = rows[i][col] / rows[r][col];
                if (q != 0) {
                    rows[i][0] -= q * rows[r][0];
                    rows[i][1] -= q * rows[r][1];
                    if (!q.fits_slong_p()) fail(ErrorCode::DomainError, "exponent overflow");
                    vals[i] /= pow_int(vals[r], q.get_si());
                }
                if (rows[i][col] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (rows[r][col] != 0) ++r;
    }
    std::vector<ModulusRelation> out;
    for (int i = 0; i < n; ++i) {
        if (rows[i][0] == 0 && rows[i][1] == 0) continue;
        out.push_back(ModulusRelation{rows[i][0], rows[i][1], vals[i]});
    }
    return out;
}

bool surfaces_model_compatible(const ModelInfo& a, const ModelInfo& b) {
    return a.l == b.l && a.circular == b.circular;
}

}  // namespace

EquivalenceCertificate linear_equivalent(const Hypersurface& A_nf, const Hypersurface& B_nf) {
    if (A_nf.k != B_nf.k)
        return refuted({Refutation::Kind::TypeMismatch, std::nullopt, {},
                        "types k differ: " + std::to_string(A_nf.k) + " vs " +
                            std::to_string(B_nf.k)});
    const int k = A_nf.k;
    ModelInfo ia = model_of(A_nf), ib = model_of(B_nf);
    const bool model_a = is_model_surface(A_nf), model_b = is_model_surface(B_nf);

    if (ia.circular) {
        if (!check_normal_form(A_nf) || !is_special_normalized(A_nf))
            fail(ErrorCode::NotSpecialNormalized, "left surface is not special-normalized");
    } else if (!model_a) {
        fail(ErrorCode::NotSpecialNormalized, "left surface must be a model or circular normal form");
    }
    if (ib.circular) {
        if (!check_normal_form(B_nf) || !is_special_normalized(B_nf))
            fail(ErrorCode::NotSpecialNormalized, "right surface is not special-normalized");
    } else if (!model_b) {
        fail(ErrorCode::NotSpecialNormalized, "right surface must be a model or circular normal form");
    }

    if (!surfaces_model_compatible(ia, ib) || model_a != model_b)
        return refuted({Refutation::Kind::InvariantMismatch, std::nullopt, {},
                        "essential type / circularity / model-ness differ"});

    EquivalenceCertificate cert;
    cert.linear_only = !ia.circular;

    // Support comparison over alpha >= beta indices (conjugates carry no
    // independent information).
    const int W = std::min(A_nf.truncation(), B_nf.truncation());
    std::vector<MultiIndex> support;
    for (const auto& [idx, c] : A_nf.F.terms()) {
        if (weight(idx, k) > W || idx.alpha < idx.beta) continue;
        if (B_nf.F.coeff(idx).is_zero())
            return refuted({Refutation::Kind::SupportMismatch, idx, {},
                            "coefficient present on the left only"});
        support.push_back(idx);
    }
    for (const auto& [idx, c] : B_nf.F.terms()) {
        if (weight(idx, k) > W || idx.alpha < idx.beta) continue;
        if (A_nf.F.coeff(idx).is_zero())
            return refuted({Refutation::Kind::SupportMismatch, idx, {},
                            "coefficient present on the right only"});
    }

    for (const MultiIndex& idx : support) {
        CharacterRow row;
        row.idx = idx;
        row.d = 1 - idx.gamma;
        row.e = -(idx.alpha + idx.beta);
        row.phi = -(idx.alpha - idx.beta);
        row.s = ((1 - idx.gamma) % 2 + 2) % 2;
        row.ratio = B_nf.F.coeff(idx) / A_nf.F.coeff(idx);
        cert.rows.push_back(row);
    }

    // Modulus stage over X = |lambda|^2, Y = |c|^2.
    const int n = static_cast<int>(cert.rows.size());
    IntMatrix expo(n, 2);
    std::vector<Rational> nsq_vals(n);
    for (int i = 0; i < n; ++i) {
        expo.at(i, 0) = cert.rows[i].d;
        expo.at(i, 1) = cert.rows[i].e;
        nsq_vals[i] = norm_sq(cert.rows[i].ratio);
    }
    if (auto bad = rational_power_inconsistency(nsq_vals, expo)) {
        Refutation r{Refutation::Kind::ModulusKernel, std::nullopt, *bad,
                     "kernel power product of squared moduli differs from 1"};
        return refuted(std::move(r));
    }

    // Phase stage, branching over sign(lambda) = sign(delta)^k.
    std::vector<UnitRow> urows(n);
    for (int i = 0; i < n; ++i) {
        urows[i].phi = cert.rows[i].phi;
        urows[i].parity = cert.rows[i].s;
        urows[i].t = cert.rows[i].ratio;
    }
    UnitSystemBranch chosen;
    int chosen_sign = 0;
    for (int sign : {1, -1}) {
        if (sign < 0 && k % 2 == 0) continue;
        auto branch = solve_unit_system(urows, sign);
        if (branch.solvable) {
            chosen = branch;
            chosen_sign = sign;
            break;
        }
        if (sign > 0) chosen = branch;  // keep the + obstruction for reporting
    }
    if (chosen_sign == 0) {
        Refutation r{Refutation::Kind::PhaseObstruction, std::nullopt, chosen.obstruction,
                     "unit-part kernel product is not 1 for any admissible sign"};
        return refuted(std::move(r));
    }

    cert.equivalent = true;
    Witness w;
    w.lambda_sign = chosen_sign;

    // Solved modulus relations; extract rational moduli when the pivot
    // relations admit exact roots.
    std::vector<std::array<Integer, 2>> mrows(n);
    for (int i = 0; i < n; ++i) mrows[i] = {Integer(cert.rows[i].d), Integer(cert.rows[i].e)};
    w.modulus_relations = modulus_relations(mrows, nsq_vals);
    {
        std::optional<Rational> X2, Y2;  // |lambda|^2, |c|^2
        for (const auto& rel : w.modulus_relations) {
            if (rel.a == 0 && rel.b != 0 && rel.b.fits_slong_p())
                Y2 = rational_root(rel.q, rel.b.get_si());
        }
        // A free |c| direction is fixed canonically at 1.
        if (!Y2) Y2 = Rational(1);
        for (const auto& rel : w.modulus_relations) {
            if (rel.a == 0 || !rel.a.fits_slong_p() || !rel.b.fits_slong_p()) continue;
            Rational rhs = rel.q;
            if (rel.b != 0) {
                if (!Y2) break;
                rhs /= pow_int(*Y2, rel.b.get_si());
            }
            X2 = rational_root(rhs, rel.a.get_si());
        }
        if (!X2 && w.modulus_relations.empty()) X2 = Rational(1);
        if (!X2) {
            bool lambda_constrained = false;
            for (const auto& rel : w.modulus_relations)
                if (rel.a != 0) lambda_constrained = true;
            if (!lambda_constrained) X2 = Rational(1);
        }
        if (Y2) w.c_abs = rational_sqrt(*Y2);
        if (X2) w.lambda_abs = rational_sqrt(*X2);
    }

    // Phase witness.
    if (chosen.coset_order == 0) {
        w.theta_free = true;
        w.phase = ExactPhase::one();
    } else {
        w.phase_relation_order = chosen.relation_order;
        w.phase_relation_value = chosen.relation_value;
        // Try to express the relation as a root-of-unity token:
        // e^{i g theta} = omega with omega in {1, -1, i, -i} (exact when the
        // relation value has rational modulus).
        const GaussianRational& t = chosen.relation_value;
        auto mod = rational_sqrt(norm_sq(t));
        if (mod) {
            GaussianRational omega = t / GaussianRational(*mod);
            long G = chosen.relation_order;
            if (omega == GaussianRational(1))
                w.phase = ExactPhase::root(G, 0);
            else if (omega == GaussianRational(-1))
                w.phase = ExactPhase::root(2 * G, 1);
            else if (omega == gauss_i())
                w.phase = ExactPhase::root(4 * G, 1);
            else if (omega == -gauss_i())
                w.phase = ExactPhase::root(4 * G, 3);
        }
    }

    // Re-verify by pushforward when the full map is exactly representable.
    if (w.c_abs && w.lambda_abs && w.phase) {
        if (auto unit = w.phase->materialize()) {
            GaussianRational c = GaussianRational(*w.c_abs) * *unit;
            Rational lambda = Rational(w.lambda_sign) * *w.lambda_abs;
            // candidate phases solve the relation only up to the stabilizer;
            // test the candidate and its composites with i when 4 | order.
            for (int quarter = 0; quarter < 4; ++quarter) {
                GaussianRational cc = c * pow_int(gauss_i(), quarter);
                HoloMapPair m = HoloMapPair::diagonal(cc, lambda, k, W);
                if (pushforward_series(retruncate(A_nf.F, W), m) == retruncate(B_nf.F, W)) {
                    w.verified_by_pushforward = true;
                    if (quarter != 0) {
                        // fold the quarter turns into the reported phase
                        w.phase = ExactPhase::from_unit(*unit * pow_int(gauss_i(), quarter));
                    }
                    break;
                }
            }
        }
    }

    cert.witness = std::move(w);
    return cert;
}

EquivalenceCertificate equivalent(const Hypersurface& A, const Hypersurface& B) {
    auto prepare = [](const Hypersurface& M) {
        auto [noharm, m1] = absorb_harmonic(M.F);
        auto [scaled, m2] = leading_rescale(noharm);
        return validate_surface(scaled);
    };
    Hypersurface a = prepare(A);
    Hypersurface b = prepare(B);
    if (a.k != b.k)
        return refuted({Refutation::Kind::TypeMismatch, std::nullopt, {},
                        "types k differ: " + std::to_string(a.k) + " vs " + std::to_string(b.k)});

    ModelInfo ia = model_of(a), ib = model_of(b);
    if (!ia.circular && !is_model_surface(a))
        fail(ErrorCode::OutOfScope, "noncircular non-model surface on the left");
    if (!ib.circular && !is_model_surface(b))
        fail(ErrorCode::OutOfScope, "noncircular non-model surface on the right");
    if (!surfaces_model_compatible(ia, ib))
        return refuted({Refutation::Kind::InvariantMismatch, std::nullopt, {},
                        "essential type / circularity differ"});

    auto into_special_form = [](Hypersurface M, const ModelInfo& info) {
        if (!info.circular) return M;
        Hypersurface nf = normalize(M).nf;
        if (is_model_surface(nf) || is_special_normalized(nf)) return nf;
        return special_normalize(nf).first;
    };
    Hypersurface a_nf = into_special_form(a, ia);
    Hypersurface b_nf = into_special_form(b, ib);
    return linear_equivalent(a_nf, b_nf);
}

}  // namespace crsym
