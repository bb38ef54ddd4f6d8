#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crsym/equivalence.hpp"
#include "crsym/symmetry.hpp"

using namespace crsym;

namespace {

GaussianRational g(long re, long im = 0) { return {Rational(re), Rational(im)}; }

WeightedSeries make(std::vector<std::pair<MultiIndex, GaussianRational>> t, int k = 4, int W = 16) {
    return series_make(t, k, W);
}

Hypersurface e5(int W = 16) {
    return validate_surface(make({{{2, 2, 0}, g(1)}, {{6, 2, 0}, g(1)}, {{2, 6, 0}, g(1)}}, 4, W));
}

IntMatrix rows_of(std::vector<std::vector<long>> rows) {
    IntMatrix M(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c) M.at(r, c) = rows[r][c];
    return M;
}

}  // namespace

TEST_CASE("kernel_lattice") {
    auto b1 = kernel_lattice(rows_of({{2, 4}, {1, 2}}));
    REQUIRE(b1.size() == 1);
    CHECK(((b1[0][0] == 1 && b1[0][1] == -2)));

    CHECK(kernel_lattice(rows_of({{1, -8}, {1, -10}})).empty());

    auto b3 = kernel_lattice(rows_of({{0, 0}}));
    REQUIRE(b3.size() == 1);
    CHECK(b3[0][0] == 1);

    // every basis vector annihilates the rows
    auto M = rows_of({{3, 1}, {6, 2}, {1, 5}, {2, 10}});
    for (auto& v : kernel_lattice(M)) {
        for (int c = 0; c < M.cols; ++c) {
            Integer acc(0);
            for (int r = 0; r < M.rows; ++r) acc += v[r] * M.at(r, c);
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("rational_power_consistent") {
    CHECK(rational_power_consistent({Rational(1), Rational(4)}, rows_of({{1, -8}, {1, -10}})));
    CHECK_FALSE(rational_power_consistent({Rational(2), Rational(5)}, rows_of({{1, 0}, {2, 0}})));
    CHECK(rational_power_consistent({Rational(2), Rational(4)}, rows_of({{1, 0}, {2, 0}})));
}

TEST_CASE("solve_unit_system") {
    // zeta^2 = -1 is solvable; zeta^2 = -1 and zeta^4 = -1 is not.
    std::vector<UnitRow> a = {{2, 0, g(-1)}};
    CHECK(solve_unit_system(a, 1).solvable);
    std::vector<UnitRow> b = {{2, 0, g(-1)}, {4, 0, g(-1)}};
    auto rb = solve_unit_system(b, 1);
    CHECK_FALSE(rb.solvable);
    CHECK_FALSE(rb.obstruction.empty());

    // sign branch: zeta^0 * s = -1 needs s = -1
    std::vector<UnitRow> c = {{0, 1, g(-1)}};
    CHECK_FALSE(solve_unit_system(c, 1).solvable);
    CHECK(solve_unit_system(c, -1).solvable);
}

TEST_CASE("equivalence: reflexivity and identity witness") {
    auto cert = equivalent(e5(), e5());
    CHECK(cert.equivalent);
    REQUIRE(cert.witness);
    CHECK(cert.witness->verified_by_pushforward);
}

TEST_CASE("harmonic perturbations of the model are equivalent to it") {
    auto O4 = validate_surface(make({{{2, 2, 0}, g(1)}}));
    auto H = validate_surface(make({{{2, 2, 0}, g(1)}, {{5, 0, 0}, g(1)}, {{0, 5, 0}, g(1)}}));
    auto cert = equivalent(O4, H);
    CHECK(cert.equivalent);
    REQUIRE(cert.witness);
    CHECK(cert.witness->verified_by_pushforward);
}

TEST_CASE("equivalence with exact diagonal pushforwards") {
    auto A = e5();
    auto B = pushforward(A, HoloMapPair::diagonal(g(2), Rational(16), 4, 16));
    auto cert = equivalent(A, B);
    CHECK(cert.equivalent);
    REQUIRE(cert.witness);
    CHECK(cert.witness->verified_by_pushforward);
    REQUIRE(cert.witness->c_abs);
    REQUIRE(cert.witness->lambda_abs);
    CHECK(*cert.witness->c_abs == Rational(2));
    CHECK(*cert.witness->lambda_abs == Rational(16));

    // symmetric verdict
    CHECK(equivalent(B, A).equivalent);
}

TEST_CASE("modulus obstruction pair is inequivalent with a kernel refutation") {
    auto A = validate_surface(make({{{2, 2, 0}, g(1)},
                                    {{6, 2, 0}, g(1)},
                                    {{2, 6, 0}, g(1)},
                                    {{7, 3, 0}, g(1)},
                                    {{3, 7, 0}, g(1)}}));
    auto B = validate_surface(make({{{2, 2, 0}, g(1)},
                                    {{6, 2, 0}, g(1)},
                                    {{2, 6, 0}, g(1)},
                                    {{7, 3, 0}, g(2)},
                                    {{3, 7, 0}, g(2)}}));
    auto cert = equivalent(A, B);
    CHECK_FALSE(cert.equivalent);
    REQUIRE(cert.refutation);
    CHECK(cert.refutation->kind == Refutation::Kind::ModulusKernel);
    CHECK_FALSE(cert.refutation->kernel_vector.empty());
    CHECK(equivalent(B, A).equivalent == false);
}

TEST_CASE("sign-flipped surface is equivalent via an eighth root of unity") {
    auto A = e5();
    auto B = validate_surface(make({{{2, 2, 0}, g(1)}, {{6, 2, 0}, g(-1)}, {{2, 6, 0}, g(-1)}}));
    auto cert = equivalent(A, B);
    CHECK(cert.equivalent);
    REQUIRE(cert.witness);
    // the phase witness is a root-of-unity token beyond the Gaussian units:
    // e^{i 4 theta} = -1
    REQUIRE(cert.witness->phase);
    auto mat = cert.witness->phase->materialize();
    CHECK_FALSE(mat.has_value());
    const auto& root = std::get<RootOfUnity>(cert.witness->phase->value());
    CHECK(root.n == 8);
    CHECK(root.t % 2 == 1);
}

TEST_CASE("the weight-16 invariant separates E5 from the circular model") {
    auto O4 = validate_surface(make({{{2, 2, 0}, g(1)}}, 4, 16));
    // to weight 12 the two are indistinguishable
    auto c12 = equivalent(validate_surface(make({{{2, 2, 0}, g(1)}}, 4, 12)), e5(12));
    CHECK(c12.equivalent);
    // at weight 16 the normal form residue separates them
    auto c16 = equivalent(O4, e5(16));
    CHECK_FALSE(c16.equivalent);
    REQUIRE(c16.refutation);
    CHECK(c16.refutation->kind == Refutation::Kind::InvariantMismatch);
}

TEST_CASE("different anchor weights refute by support") {
    auto A = e5();
    auto B = validate_surface(make({{{2, 2, 0}, g(1)}, {{7, 3, 0}, g(1)}, {{3, 7, 0}, g(1)}}));
    auto cert = equivalent(A, B);
    CHECK_FALSE(cert.equivalent);
    REQUIRE(cert.refutation);
    CHECK(cert.refutation->kind == Refutation::Kind::SupportMismatch);
}

TEST_CASE("type mismatch is inequivalent, not an error") {
    auto A = validate_surface(make({{{2, 2, 0}, g(1)}}, 4, 16));
    auto B = validate_surface(make({{{3, 3, 0}, g(1)}}, 6, 24));
    auto cert = equivalent(A, B);
    CHECK_FALSE(cert.equivalent);
    CHECK(cert.refutation->kind == Refutation::Kind::TypeMismatch);
}

TEST_CASE("verdicts stable under a common pushforward") {
    auto A = e5();
    auto B = validate_surface(make({{{2, 2, 0}, g(1)}, {{6, 2, 0}, g(-1)}, {{2, 6, 0}, g(-1)}}));
    auto common = HoloMapPair::diagonal(GaussianRational(rat(1, 2)), Rational(3), 4, 16);
    auto cert1 = equivalent(A, B);
    auto cert2 = equivalent(pushforward(A, common), pushforward(B, common));
    CHECK(cert1.equivalent == cert2.equivalent);

    auto C = validate_surface(make({{{2, 2, 0}, g(1)}, {{7, 3, 0}, g(1)}, {{3, 7, 0}, g(1)}}));
    auto cert3 = equivalent(A, C);
    auto cert4 = equivalent(pushforward(A, common), pushforward(C, common));
    CHECK(cert3.equivalent == cert4.equivalent);
}

TEST_CASE("model surfaces compare by the linear action") {
    auto A = validate_surface(make({{{3, 1, 0}, g(1)}, {{1, 3, 0}, g(1)}}, 4, 16));
    auto B = validate_surface(make({{{3, 1, 0}, g(8)}, {{1, 3, 0}, g(8)}}, 4, 16));
    auto cert = equivalent(A, B);
    CHECK(cert.equivalent);
    CHECK(cert.linear_only);
    REQUIRE(cert.witness);
    CHECK(cert.witness->verified_by_pushforward);

    // sign-flipped noncircular model: c = i, lambda = 1 works for k = 4
    auto C = validate_surface(make({{{3, 1, 0}, g(-1)}, {{1, 3, 0}, g(-1)}}, 4, 16));
    auto cert2 = equivalent(A, C);
    CHECK(cert2.equivalent);

    // l mismatch between models refutes
    auto D = validate_surface(make({{{2, 2, 0}, g(1)}}, 4, 16));
    CHECK_FALSE(equivalent(A, D).equivalent);
}

TEST_CASE("self equivalence recovers the stabilizer structure") {
    auto M = validate_surface(make({{{2, 2, 0}, g(1)}, {{7, 3, 0}, g(1)}, {{3, 7, 0}, g(1)}}));
    auto nf = normalize(M).nf;
    auto cert = linear_equivalent(nf, nf);
    CHECK(cert.equivalent);
    // the residual phase relation order must match the cyclic stabilizer
    auto grp = diagonal_stabilizer(nf);
    CHECK(grp.tag == SymmetryTag::Cyclic);
    REQUIRE(cert.witness);
    CHECK(cert.witness->phase_relation_order == grp.order);
}

TEST_CASE("out of scope inputs are rejected") {
    auto NC = validate_surface(
        make({{{3, 1, 0}, g(1)}, {{1, 3, 0}, g(1)}, {{5, 1, 0}, g(1)}, {{1, 5, 0}, g(1)}}, 4, 16));
    auto O4 = validate_surface(make({{{2, 2, 0}, g(1)}}, 4, 16));
    CHECK_THROWS_AS(equivalent(NC, O4), Error);
}

TEST_CASE("linear_equivalent demands special normalization") {
    // normal form whose mu condition is violated (target coefficient real
    // nonzero): anchor (7,3,0), target (7,3,1)
    auto M = validate_surface(make({{{2, 2, 0}, g(1)},
                                    {{7, 3, 0}, g(1)},
                                    {{3, 7, 0}, g(1)},
                                    {{7, 3, 1}, g(1)},
                                    {{3, 7, 1}, g(1)}},
                                   4, 16));
    auto nf = normalize(M).nf;
    CHECK_FALSE(is_special_normalized(nf));
    CHECK_THROWS_AS(linear_equivalent(nf, nf), Error);
    // the pipeline applies special_mu itself
    CHECK(equivalent(M, M).equivalent);
}
