#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgcy/higgs.hpp"
#include "lgcy/monodromy.hpp"
#include "lgcy/parse.hpp"

using namespace lgcy;

namespace {

std::vector<std::string> zvars(int n) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back("z" + std::to_string(i));
    return v;
}

Polynomial fermat_poly(int nvars, int d) {
    std::string text;
    for (int i = 0; i < nvars; ++i) {
        if (i) text += "+";
        text += "z" + std::to_string(i) + "^" + std::to_string(d);
    }
    return parse_polynomial(text, zvars(nvars));
}

std::shared_ptr<const MilnorRing> fermat(int nvars, int d) {
    return build_milnor_ring(fermat_poly(nvars, d), WeightSystem::homogeneous(nvars, d));
}

Monomial mono(std::vector<std::uint32_t> e) { return Monomial{std::move(e)}; }

Rational Q(long n, unsigned long d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("quintic at u=0: C maps 1 to phi") {
    auto phi = parse_polynomial("z0*z1*z2*z3*z4", zvars(5));
    auto h = higgs_matrices(fermat_poly(5, 5), {phi}, {Q(0)});
    REQUIRE(h.blocks.size() == 1);
    REQUIRE(h.blocks[0].size() == 3);
    const auto& block0 = h.blocks[0][0];  // level 0 -> 1, 101 x 1
    REQUIRE(block0.rows() == 101);
    REQUIRE(block0.cols() == 1);
    // the column is the coordinate vector of phi in the level-1 basis
    std::size_t hits = 0;
    for (std::size_t r = 0; r < 101; ++r) {
        if (h.sub->level(1)[r] == mono({1, 1, 1, 1, 1})) {
            CHECK(block0.at(r, 0) == Q(1));
            ++hits;
        } else {
            CHECK(block0.at(r, 0) == Q(0));
        }
    }
    CHECK(hits == 1);
}

TEST_CASE("cubic at u=0: 2x2 nilpotent") {
    auto phi = parse_polynomial("x*y*z", {"x", "y", "z"});
    auto f = parse_polynomial("x^3+y^3+z^3", {"x", "y", "z"});
    auto h = higgs_matrices(f, {phi}, {Q(0)});
    REQUIRE(h.blocks[0].size() == 1);
    CHECK(h.blocks[0][0].rows() == 1);
    CHECK(h.blocks[0][0].at(0, 0) == Q(1));  // C(1) = xyz
    auto rep = verify_higgs_structure(h);
    CHECK(rep.pass());
    CHECK(rep.max_nilpotency_index == 2);  // C(xyz) = 0: (xyz)^2 in the ideal
}

TEST_CASE("quintic structure checks at u = 0 and deformed points") {
    auto phi1 = parse_polynomial("z0*z1*z2*z3*z4", zvars(5));
    auto phi2 = parse_polynomial("z0^3*z1*z2", zvars(5));
    for (auto u : std::vector<std::vector<Rational>>{
             {Q(0), Q(0)}, {Q(1, 10), Q(0)}, {Q(1, 13), Q(1, 17)}}) {
        auto h = higgs_matrices(fermat_poly(5, 5), {phi1, phi2}, u);
        auto rep = verify_higgs_structure(h);
        CHECK(rep.commuting);
        CHECK(rep.level_raising);
        CHECK(rep.eta_symmetric);
        CHECK(rep.max_nilpotency_index == 4);
    }
}

TEST_CASE("deformed quartic: structure at the oracle point") {
    auto phi1 = parse_polynomial("z0*z1*z2*z3", zvars(4));
    auto phi2 = parse_polynomial("z0^2*z1*z2", zvars(4));
    auto h = higgs_matrices(fermat_poly(4, 4), {phi1, phi2}, {Q(1, 7), Q(1, 9)});
    CHECK(h.ring->mu == 81);
    auto rep = verify_higgs_structure(h);
    CHECK(rep.pass());
    CHECK(rep.max_nilpotency_index == 3);
}

TEST_CASE("non-marginal directions and degenerate members are rejected") {
    CHECK_THROWS_AS(
        higgs_matrices(fermat_poly(5, 5), {parse_polynomial("z0", zvars(5))}, {Q(0)}),
        std::invalid_argument);
    // Dwork point: f - 5 phi with phi the full product is degenerate
    auto phi = parse_polynomial("z0*z1*z2*z3*z4", zvars(5));
    CHECK_THROWS_AS(higgs_matrices(fermat_poly(5, 5), {phi}, {Q(-5)}), DegenerateMember);
}

TEST_CASE("transported sign per level") {
    auto phi = parse_polynomial("z0*z1*z2*z3*z4", zvars(5));
    auto h = higgs_matrices(fermat_poly(5, 5), {phi}, {Q(0)});
    auto rep = transported_higgs_check(h);
    REQUIRE(rep.levels.size() == 3);
    CHECK(rep.levels[0].lhs == Q(1));
    CHECK(rep.levels[1].lhs == Q(-1));
    CHECK(rep.levels[2].lhs == Q(1));
    CHECK(rep.pass());
    // defined at u = 0 only
    auto hd = higgs_matrices(fermat_poly(5, 5), {phi}, {Q(1, 10)});
    CHECK_THROWS_AS(transported_higgs_check(hd), std::invalid_argument);
}

TEST_CASE("potentiality: single direction is vacuous") {
    auto phi = parse_polynomial("x*y*z", {"x", "y", "z"});
    auto f = parse_polynomial("x^3+y^3+z^3", {"x", "y", "z"});
    auto rep = potentiality_check(f, {phi}, {{Q(0)}}, Q(1, 100));
    CHECK(rep.entries.empty());
    CHECK(rep.vanishes_where_defined());
}

TEST_CASE("potentiality: quintic pair at u=0 is a basis jump") {
    auto phi1 = parse_polynomial("z0*z1*z2*z3*z4", zvars(5));
    auto phi2 = parse_polynomial("z0^3*z1*z2", zvars(5));
    auto rep = potentiality_check(fermat_poly(5, 5), {phi1, phi2}, {{Q(0), Q(0)}}, Q(1, 100));
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].status == PotentialityStatus::BasisJump);
}

TEST_CASE("potentiality: quartic pair at a generic center, frozen oracle") {
    // independent computation (exact, run before the build): at center
    // (1/7, 1/9) with step 1/101 the antisymmetrized divided difference is
    // nonzero; entry (z0 z3^3 <- 1) of the level 0->1 block is 499849/2538.
    auto phi1 = parse_polynomial("z0*z1*z2*z3", zvars(4));
    auto phi2 = parse_polynomial("z0^2*z1*z2", zvars(4));
    auto rep = potentiality_check(fermat_poly(4, 4), {phi1, phi2}, {{Q(1, 7), Q(1, 9)}},
                                  Q(1, 101));
    REQUIRE(rep.entries.size() == 1);
    const auto& e = rep.entries[0];
    CHECK(e.status == PotentialityStatus::NonZero);
    CHECK(e.sample_level == 0);
    CHECK(e.sample_row == mono({1, 0, 0, 3}));
    CHECK(e.sample_col == mono({0, 0, 0, 0}));
    CHECK(e.sample_value == Rational(499849, 2538));
    CHECK_FALSE(rep.vanishes_where_defined());
}

TEST_CASE("monodromy spectrum of the quintic") {
    auto ring = fermat(5, 5);
    auto spec = monodromy_spectrum(*ring);
    CHECK(spec.entries.size() == 1024);
    CHECK(spec.invariant_dimension == 204);
    for (const auto& e : spec.entries) {
        if (e.monomial.is_one()) {
            CHECK(e.exponent == Q(0));
            CHECK(e.invariant);
        }
        if (e.monomial.degree() == 7) {
            CHECK(e.exponent == Q(7, 5));
            CHECK(e.angle == Q(2, 5));
            CHECK_FALSE(e.invariant);
        }
        // congruence: invariant iff deg = -N mod d, which is deg = 0 mod 5 here
        CHECK(e.invariant == (e.monomial.degree() % 5 == 0));
    }
    CHECK(spectrum_symmetric_about(spec, spectrum_duality_point(*ring)));
    CHECK(spectrum_duality_point(*ring) == Q(3));  // = central charge for d = N
}

TEST_CASE("monodromy duality for non-CY members reflects about N-2") {
    // x^5: exponents (k+1)/5 - 1, symmetric about -1, not about c-hat = 3/5
    auto r5 = build_milnor_ring(parse_polynomial("x^5", {"x"}),
                                WeightSystem::homogeneous(1, 5));
    auto spec = monodromy_spectrum(*r5);
    CHECK(spec.invariant_dimension == 0);
    CHECK(spectrum_duality_point(*r5) == Q(-1));
    CHECK(spectrum_symmetric_about(spec, Q(-1)));
    CHECK_FALSE(spectrum_symmetric_about(spec, r5->weights.central_charge()));

    // quasi-homogeneous x^3 + x y^3: reflection at N - 2 = 0
    auto rq = build_milnor_ring(parse_polynomial("x^3+x*y^3", {"x", "y"}),
                                WeightSystem({Q(1, 3), Q(2, 9)}));
    auto specq = monodromy_spectrum(*rq);
    CHECK(spectrum_symmetric_about(specq, Q(0)));
}

TEST_CASE("invariance set equality") {
    auto q = fermat(5, 5);
    auto repq = invariance_realness_report(*q, GradedSubring(q));
    CHECK(repq.sets_equal);
    CHECK(repq.invariant_dim == 204);
    CHECK(repq.subring_dim == 204);

    auto c = fermat(3, 3);
    auto repc = invariance_realness_report(*c, GradedSubring(c));
    CHECK(repc.sets_equal);
    CHECK(repc.invariant_dim == 2);

    auto k3 = fermat(4, 4);
    auto repk = invariance_realness_report(*k3, GradedSubring(k3));
    CHECK(repk.sets_equal);
    CHECK(repk.invariant_dim == 21);
}
