#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#ifndef CRSYM_CLI_PATH
#define CRSYM_CLI_PATH "crsym"
#endif

namespace {

struct CliResult {
    int status;
    std::string out;
};

CliResult run(const std::string& args) {
    std::string cmd = std::string(CRSYM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("analyze reports invariants") {
    auto r = run("analyze --surface \"z^2*zb^2 + z^6*zb^2 + z^2*zb^6\" --format json");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"k\": 4") != std::string::npos);
    CHECK(r.out.find("\"circular\": true") != std::string::npos);
    CHECK(r.out.find("crsym-report/1") != std::string::npos);
    // anchor of the raw surface: (6,2,0) at weight 8
    CHECK(r.out.find("\"p\": 8") != std::string::npos);
}

TEST_CASE("normalize emits the map and the normal form") {
    auto r = run("normalize --surface \"z^2*zb^2 + z^5 + zb^5\" --format json");
    CHECK(r.status == 0);
    CHECK(r.out.find("normal_form_expr") != std::string::npos);
    CHECK(r.out.find("\"normal_form_expr\": \"z^2*zb^2\"") != std::string::npos);
}

TEST_CASE("classify text output") {
    auto r = run("classify --surface \"z^4*zb + z*zb^4\"");
    CHECK(r.status == 0);
    CHECK(r.out.find("RPlusCrossCyclic") != std::string::npos);
    CHECK(r.out.find("R+ x Z_6") != std::string::npos);
}

TEST_CASE("equiv verdicts") {
    auto r = run(
        "equiv --surface \"z^2*zb^2\" --surface \"z^2*zb^2 + z^5 + zb^5\" --format json");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"verdict\": \"equivalent\"") != std::string::npos);
}

TEST_CASE("verify-map echoes the pushforward") {
    // the mu = 1 stability map of v = |z|^4, expanded to the truncation
    const std::string f = "z - 1/2*z*w + 3/8*z*w^2 - 5/16*z*w^3";
    const std::string g = "w - w^2 + w^3 - w^4";
    auto r = run("verify-map --surface \"z^2*zb^2\" --map-f \"" + f + "\" --map-g \"" + g +
                 "\" --format json");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"is_automorphism\": true") != std::string::npos);

    auto r2 = run("verify-map --surface \"z^2*zb^2 + z^6*zb^2 + z^2*zb^6\" --map-f \"" + f +
                  "\" --map-g \"" + g + "\" --format json");
    CHECK(r2.status == 0);
    CHECK(r2.out.find("\"is_automorphism\": false") != std::string::npos);

    // rotations preserve the same surface
    auto r3 = run("verify-map --surface \"z^2*zb^2 + z^6*zb^2 + z^2*zb^6\" "
                  "--map-f \"(i)*z\" --map-g \"w\" --format json");
    CHECK(r3.status == 0);
    CHECK(r3.out.find("\"is_automorphism\": true") != std::string::npos);
}

TEST_CASE("error classes map to stable exit codes") {
    CHECK(run("analyze --surface \"z^2*zb^2 +\"").status == 2);       // SyntaxError
    CHECK(run("analyze --surface \"z^3*zb\"").status == 3);            // RealityViolation
    CHECK(run("analyze --surface \"z^5 + zb^5\" --k 5").status == 4);  // NotPrepared
    CHECK(run("analyze --surface \"z*zb*u\" --k 4").status == 5);      // NotFiniteType
    CHECK(run("normalize --surface \"z^3*zb + z*zb^3\"").status == 6); // NotCircular
    CHECK(run("classify --surface \"z^3*zb + z*zb^3 + z^5*zb + z*zb^5\"").status == 8);  // OutOfScope
}
