#include "crsym/report.hpp"

#include <sstream>

#include "crsym/expr.hpp"

namespace crsym {

namespace {

Json json_gaussian(const GaussianRational& c) {
    Json j = Json::object();
    j["re"] = to_string(c.re);
    j["im"] = to_string(c.im);
    return j;
}

Json json_index(const MultiIndex& idx) {
    return Json::array({idx.alpha, idx.beta, idx.gamma});
}

Json json_phase(const ExactPhase& p) {
    Json j = Json::object();
    if (auto u = p.materialize()) {
        j["kind"] = "unit";
        j["value"] = to_string(*u);
    } else {
        const auto& r = std::get<RootOfUnity>(p.value());
        j["kind"] = "root-of-unity";
        j["order"] = r.n;
        j["power"] = r.t;
    }
    j["display"] = to_string(p);
    return j;
}

}  // namespace

Json report_terms(const WeightedSeries& s) {
    Json arr = Json::array();
    std::vector<std::pair<MultiIndex, GaussianRational>> sorted(s.terms().begin(), s.terms().end());
    std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
        int wx = weight(x.first, s.grading());
        int wy = weight(y.first, s.grading());
        if (wx != wy) return wx < wy;
        return inv_lex_less(x.first, y.first);
    });
    for (const auto& [idx, c] : sorted) {
        Json t = Json::object();
        t["index"] = json_index(idx);
        t["weight"] = weight(idx, s.grading());
        t["coeff"] = json_gaussian(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

Json report_invariants(const Hypersurface& M) {
    ModelInfo info = model_of(M);
    Json j = Json::object();
    j["k"] = M.k;
    j["l"] = info.l;
    if (info.kappa)
        j["kappa"] = *info.kappa;
    else
        j["kappa"] = nullptr;
    j["circular"] = info.circular;
    Json model = Json::array();
    for (const auto& [jj, a] : info.model_coeffs) {
        Json t = Json::object();
        t["j"] = jj;
        t["coeff"] = json_gaussian(a);
        model.push_back(std::move(t));
    }
    j["model_coeffs"] = std::move(model);
    j["model_surface"] = is_model_surface(M);
    j["weakly_spherical"] = is_weakly_spherical(M);
    if (!is_model_surface(M)) {
        AnchorIndex a = anchor_index(M);
        Json anchor = Json::object();
        anchor["index"] = json_index(a.idx);
        anchor["p"] = a.p;
        anchor["coeff"] = json_gaussian(M.F.coeff(a.idx));
        j["anchor"] = std::move(anchor);
    } else {
        j["anchor"] = nullptr;
    }
    return j;
}

Json report_map(const HoloMapPair& m) {
    auto component = [](const HoloMapPair::TermMap& comp) {
        Json arr = Json::array();
        for (const auto& [idx, c] : comp) {
            Json t = Json::object();
            t["index"] = Json::array({idx.i, idx.j});
            t["coeff"] = json_gaussian(c);
            arr.push_back(std::move(t));
        }
        return arr;
    };
    Json j = Json::object();
    j["f"] = component(m.f());
    j["g"] = component(m.g());
    return j;
}

Json report_initial_data(const InitialData& d) {
    Json j = Json::object();
    j["delta"] = to_string(d.delta);
    j["theta"] = json_phase(d.theta);
    j["mu"] = to_string(d.mu);
    return j;
}

Json report_symmetry(const SymmetryGroup& g) {
    Json j = Json::object();
    j["tag"] = to_string(g.tag);
    switch (g.tag) {
        case SymmetryTag::Dim3: j["description"] = "three-dimensional stability group"; break;
        case SymmetryTag::RPlusCrossCyclic:
            j["description"] = "R+ x Z_" + std::to_string(g.order);
            break;
        case SymmetryTag::Circle: j["description"] = "S^1"; break;
        case SymmetryTag::Cyclic: j["description"] = "Z_" + std::to_string(g.order); break;
    }
    if (g.tag == SymmetryTag::RPlusCrossCyclic || g.tag == SymmetryTag::Cyclic)
        j["order"] = g.order;
    else
        j["order"] = nullptr;
    Json gens = Json::array();
    for (const auto& gen : g.generators) {
        Json t = Json::object();
        t["phase"] = json_phase(gen.phase);
        t["lambda_sign"] = gen.lambda_sign;
        t["dilation"] = to_string(gen.dilation);
        gens.push_back(std::move(t));
    }
    j["generators"] = std::move(gens);
    return j;
}

Json report_certificate(const EquivalenceCertificate& c) {
    Json j = Json::object();
    j["verdict"] = c.equivalent ? "equivalent" : "inequivalent";
    j["linear_only"] = c.linear_only;
    if (c.witness) {
        const Witness& w = *c.witness;
        Json wj = Json::object();
        wj["lambda_sign"] = w.lambda_sign;
        wj["lambda_abs"] = w.lambda_abs ? Json(to_string(*w.lambda_abs)) : Json(nullptr);
        wj["c_abs"] = w.c_abs ? Json(to_string(*w.c_abs)) : Json(nullptr);
        Json rel = Json::array();
        for (const auto& r : w.modulus_relations) {
            Json t = Json::object();
            t["lambda_sq_exp"] = r.a.get_str();
            t["c_sq_exp"] = r.b.get_str();
            t["value"] = to_string(r.q);
            rel.push_back(std::move(t));
        }
        wj["modulus_relations"] = std::move(rel);
        wj["theta_free"] = w.theta_free;
        wj["phase"] = w.phase ? json_phase(*w.phase) : Json(nullptr);
        if (w.phase_relation_order != 0) {
            Json pr = Json::object();
            pr["order"] = w.phase_relation_order;
            pr["value"] = json_gaussian(w.phase_relation_value);
            wj["phase_relation"] = std::move(pr);
        } else {
            wj["phase_relation"] = nullptr;
        }
        wj["verified_by_pushforward"] = w.verified_by_pushforward;
        j["witness"] = std::move(wj);
    } else {
        j["witness"] = nullptr;
    }
    if (c.refutation) {
        const Refutation& r = *c.refutation;
        Json rj = Json::object();
        rj["kind"] = to_string(r.kind);
        rj["index"] = r.index ? json_index(*r.index) : Json(nullptr);
        Json kv = Json::array();
        for (const auto& x : r.kernel_vector) kv.push_back(x.get_str());
        rj["kernel_vector"] = std::move(kv);
        rj["detail"] = r.detail;
        j["refutation"] = std::move(rj);
    } else {
        j["refutation"] = nullptr;
    }
    Json rows = Json::array();
    for (const auto& row : c.rows) {
        Json t = Json::object();
        t["index"] = json_index(row.idx);
        t["d"] = row.d;
        t["e"] = row.e;
        t["phi"] = row.phi;
        t["s"] = row.s;
        t["ratio"] = json_gaussian(row.ratio);
        rows.push_back(std::move(t));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json report_envelope(const std::string& command, int truncation) {
    Json j = Json::object();
    j["schema"] = "crsym-report/1";
    j["command"] = command;
    j["truncation"] = truncation;
    return j;
}

namespace {

void render_node(std::ostringstream& out, const Json& node, const std::string& key, int depth) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (node.is_object()) {
        out << pad << key << ":\n";
        for (auto it = node.begin(); it != node.end(); ++it)
            render_node(out, it.value(), it.key(), depth + 1);
    } else if (node.is_array()) {
        if (node.empty()) {
            out << pad << key << ": []\n";
            return;
        }
        bool scalar = true;
        for (const auto& el : node)
            if (el.is_object() || el.is_array()) scalar = false;
        if (scalar) {
            out << pad << key << ": [";
            bool first = true;
            for (const auto& el : node) {
                if (!first) out << ", ";
                first = false;
                out << (el.is_string() ? el.get<std::string>() : el.dump());
            }
            out << "]\n";
        } else {
            out << pad << key << ":\n";
            int i = 0;
            for (const auto& el : node) render_node(out, el, "- " + std::to_string(i++), depth + 1);
        }
    } else if (node.is_string()) {
        out << pad << key << ": " << node.get<std::string>() << "\n";
    } else {
        out << pad << key << ": " << node.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream out;
    for (auto it = report.begin(); it != report.end(); ++it)
        render_node(out, it.value(), it.key(), 0);
    return out.str();
}

}  // namespace crsym
