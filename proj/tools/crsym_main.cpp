#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "crsym/equivalence.hpp"
#include "crsym/expr.hpp"
#include "crsym/report.hpp"
#include "crsym/symmetry.hpp"

namespace {

using crsym::Json;

struct CommonOpts {
    std::vector<std::string> surfaces;
    std::vector<std::string> files;
    int truncation = 0;
    int declared_k = 0;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--surface", opts.surfaces,
                    "defining equation, e.g. \"z^2*zb^2 + z^5*zb^3 + z^3*zb^5\"");
    cmd->add_option("--file", opts.files, "file containing the defining equation");
    cmd->add_option("--truncation", opts.truncation, "truncation weight (default 4k)");
    cmd->add_option("--k", opts.declared_k, "declare the type k instead of detecting it");
    cmd->add_option("--format", opts.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) crsym::fail(crsym::ErrorCode::DomainError, "cannot read file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> gather_inputs(const CommonOpts& opts, std::size_t expected) {
    std::vector<std::string> texts = opts.surfaces;
    for (const auto& f : opts.files) texts.push_back(read_file(f));
    if (texts.size() != expected)
        crsym::fail(crsym::ErrorCode::DomainError,
                    "expected " + std::to_string(expected) + " surface(s), got " +
                        std::to_string(texts.size()));
    return texts;
}

crsym::SurfaceSpec parse_input(const CommonOpts& opts, const std::string& text) {
    std::optional<int> k;
    if (opts.declared_k > 0) k = opts.declared_k;
    return crsym::parse_surface(text, opts.truncation, k);
}

void emit(const Json& report, const CommonOpts& opts) {
    if (opts.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << crsym::render_text(report);
}

int run_analyze(const CommonOpts& opts) {
    auto spec = parse_input(opts, gather_inputs(opts, 1)[0]);
    auto M = crsym::validate_surface(spec.series);
    Json report = crsym::report_envelope("analyze", spec.truncation);
    report["surface"] = crsym::report_terms(M.F);
    report["invariants"] = crsym::report_invariants(M);
    emit(report, opts);
    return 0;
}

int run_normalize(const CommonOpts& opts) {
    auto spec = parse_input(opts, gather_inputs(opts, 1)[0]);
    auto [noharm, m1] = crsym::absorb_harmonic(spec.series);
    auto [scaled, m2] = crsym::leading_rescale(noharm);
    auto M = crsym::validate_surface(scaled);
    auto result = crsym::normalize(M);
    auto full_map = crsym::compose(crsym::compose(m1, m2), result.map);

    Json report = crsym::report_envelope("normalize", spec.truncation);
    report["surface"] = crsym::report_terms(spec.series);
    report["invariants"] = crsym::report_invariants(result.nf);
    report["normal_form"] = crsym::report_terms(result.nf.F);
    report["normal_form_expr"] = crsym::print_surface(result.nf.F);
    report["map"] = crsym::report_map(full_map);
    report["initial_data"] = crsym::report_initial_data(result.initial);
    emit(report, opts);
    return 0;
}

int run_classify(const CommonOpts& opts, bool assume_normal) {
    auto spec = parse_input(opts, gather_inputs(opts, 1)[0]);
    auto M = crsym::validate_surface(spec.series);
    auto group = crsym::classify(M, assume_normal);
    Json report = crsym::report_envelope("classify", spec.truncation);
    report["surface"] = crsym::report_terms(M.F);
    report["invariants"] = crsym::report_invariants(M);
    report["symmetry"] = crsym::report_symmetry(group);
    emit(report, opts);
    return 0;
}

int run_equiv(const CommonOpts& opts) {
    auto texts = gather_inputs(opts, 2);
    auto A = parse_input(opts, texts[0]);
    auto B = parse_input(opts, texts[1]);
    auto cert = crsym::equivalent(crsym::validate_surface(A.series),
                                  crsym::validate_surface(B.series));
    Json report = crsym::report_envelope("equiv", std::max(A.truncation, B.truncation));
    report["left"] = crsym::report_terms(A.series);
    report["right"] = crsym::report_terms(B.series);
    report["certificate"] = crsym::report_certificate(cert);
    emit(report, opts);
    return 0;
}

int run_verify_map(const CommonOpts& opts, const std::string& f_expr, const std::string& g_expr) {
    auto spec = parse_input(opts, gather_inputs(opts, 1)[0]);
    auto M = crsym::validate_surface(spec.series);
    crsym::HoloMapPair map(M.k, M.truncation());
    for (const auto& [idx, c] : crsym::parse_map_component(f_expr)) map.add_f(idx.i, idx.j, c);
    for (const auto& [idx, c] : crsym::parse_map_component(g_expr)) map.add_g(idx.i, idx.j, c);
    map.check_normalized();

    auto image = crsym::pushforward_series(M.F, map);
    bool preserves = image == M.F;

    Json report = crsym::report_envelope("verify-map", spec.truncation);
    report["surface"] = crsym::report_terms(M.F);
    report["map"] = crsym::report_map(map);
    report["is_automorphism"] = preserves;
    report["pushforward"] = crsym::report_terms(image);
    report["pushforward_expr"] = crsym::print_surface(image);
    emit(report, opts);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact invariants, normal forms and symmetries of finite type hypersurfaces in C^2"};
    app.require_subcommand(1);

    CommonOpts analyze_opts, normalize_opts, classify_opts, equiv_opts, verify_opts;
    bool assume_normal = false;
    std::string map_f, map_g;

    auto* analyze = app.add_subcommand("analyze", "validate a surface and report its invariants");
    add_common(analyze, analyze_opts);
    auto* normalize =
        app.add_subcommand("normalize", "compute the normal form and the map achieving it");
    add_common(normalize, normalize_opts);
    auto* classify = app.add_subcommand("classify", "classify the stability group");
    add_common(classify, classify_opts);
    classify->add_flag("--assume-normal-coordinates", assume_normal,
                       "accept a noncircular non-model surface as already normalized");
    auto* equiv = app.add_subcommand("equiv", "decide local linear equivalence of two surfaces");
    add_common(equiv, equiv_opts);
    auto* verify = app.add_subcommand("verify-map", "check whether a map preserves the surface");
    add_common(verify, verify_opts);
    verify->add_option("--map-f", map_f, "f component, polynomial in z and w")->required();
    verify->add_option("--map-g", map_g, "g component, polynomial in z and w")->required();

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return run_analyze(analyze_opts);
        if (normalize->parsed()) return run_normalize(normalize_opts);
        if (classify->parsed()) return run_classify(classify_opts, assume_normal);
        if (equiv->parsed()) return run_equiv(equiv_opts);
        if (verify->parsed()) return run_verify_map(verify_opts, map_f, map_g);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const crsym::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
