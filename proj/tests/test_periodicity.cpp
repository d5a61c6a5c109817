#include "catch_amalgamated.hpp"

#include <algorithm>
#include <set>

#include "qperiod/catalog.hpp"
#include "qperiod/periodicity.hpp"

using namespace qperiod;

TEST_CASE("jones criterion") {
    for (long long p : {3, 5, 7}) CHECK(jones_periodicity_test(catalog::unknot().pd, p).pass);

    // The standard (2,5) torus knot diagram is 5-periodic.
    CHECK(jones_periodicity_test(catalog::torus2(5).pd, 5).pass);
    CHECK(jones_periodicity_test(catalog::torus2(-5).pd, 5).pass);
    CHECK(jones_periodicity_test(catalog::torus2(7).pd, 7).pass);

    // The trefoil is certified not 5-periodic.
    auto fail = jones_periodicity_test(catalog::trefoil_left().pd, 5);
    CHECK(!fail.pass);
    CHECK(!fail.residue.is_zero());
    CHECK(jones_periodicity_test(catalog::trefoil_right().pd, 5).pass == false);
}

TEST_CASE("bracket criterion") {
    for (auto mode : {BracketMode::with_writhe, BracketMode::framed})
        for (long long p : {3, 5, 7})
            CHECK(bracket_periodicity_test(catalog::unknot(), p, mode).pass);

    CHECK(bracket_periodicity_test(catalog::torus2(5), 5, BracketMode::with_writhe).pass);
    CHECK(bracket_periodicity_test(catalog::torus2(5), 5, BracketMode::framed).pass);
    CHECK(bracket_periodicity_test(catalog::torus2(7), 7, BracketMode::with_writhe).pass);
    CHECK(!bracket_periodicity_test(catalog::trefoil_left(), 5, BracketMode::with_writhe).pass);
    CHECK(!bracket_periodicity_test(catalog::trefoil_left(), 5, BracketMode::framed).pass);
}

TEST_CASE("framed criterion follows the writhe criterion when w = 0 mod p") {
    std::vector<FramedLinkDiagram> corpus = {
        catalog::unknot(),       catalog::unlink(3),     catalog::figure_eight(),
        catalog::torus2(5),      catalog::torus2(-5),    catalog::hopf_positive(),
        catalog::trefoil_left(), catalog::trefoil_right()};
    for (long long p : {5, 7})
        for (const auto& d : corpus) {
            if (imod(writhe(d.pd), p) != 0) continue;
            bool with_writhe = bracket_periodicity_test(d, p, BracketMode::with_writhe).pass;
            bool framed = bracket_periodicity_test(d, p, BracketMode::framed).pass;
            if (with_writhe) CHECK(framed);
        }
}

TEST_CASE("manifold criterion phases") {
    SO3Context c5(5), c7(7);
    auto r5 = manifold_periodicity_test(brieskorn_invariant(3, c5), 5);
    CHECK(r5.pass);
    CHECK(std::count(r5.passing_j.begin(), r5.passing_j.end(), 4) == 1);  // j = -1 mod 5
    CHECK(r5.passing_j == std::vector<long long>{4});

    auto r7 = manifold_periodicity_test(brieskorn_invariant(3, c7), 7);
    CHECK(!r7.pass);
    CHECK(r7.passing_j.empty());
    CHECK(!r7.residue.is_zero());

    // The sphere itself passes with phase 0.
    auto s3 = surgery_invariant(SurgeryPresentation::from_diagram(catalog::unknot(1)), c5);
    auto rs = manifold_periodicity_test(s3, 5);
    CHECK(rs.pass);
    CHECK(rs.passing_j == std::vector<long long>{0});
}

TEST_CASE("degenerate invariant passes vacuously with every phase") {
    SO3Context ctx(5);
    InvariantValue fake;
    fake.p = 5;
    fake.homology_sphere = true;
    fake.value2p = Int(5) * CycloZ::one(ctx.ring2p());
    fake.value4p = promote(Int(5) * CycloZ::one(ctx.ring4p()));
    auto r = manifold_periodicity_test(fake, 5);
    CHECK(r.pass);
    CHECK(r.degenerate);
    CHECK(r.passing_j == std::vector<long long>{0, 1, 2, 3, 4});
}

TEST_CASE("criterion is vacuous at p = 3") {
    SO3Context c3(3);
    for (long long n : {3, 5, 7, 9, -3, -5}) {
        auto r = manifold_periodicity_test(brieskorn_invariant(n, c3), 3);
        CHECK(r.pass);
    }
}

TEST_CASE("passing phase sets observed are singletons or everything") {
    SO3Context c5(5), c7(7);
    for (long long n = 3; n <= 19; n += 2)
        for (auto* ctx : {&c5, &c7})
            for (long long sign : {1, -1}) {
                auto r = manifold_periodicity_test(brieskorn_invariant(sign * n, *ctx), ctx->p());
                if (r.pass)
                    CHECK((r.passing_j.size() == 1 ||
                           r.passing_j.size() == static_cast<std::size_t>(ctx->p())));
            }
}

TEST_CASE("grid experiment totals and exceptional set") {
    GridExperiment ex = grid_experiment(2);
    CHECK(ex.total == 108);
    CHECK(ex.passes == 37);
    CHECK(ex.flagged_count == 27);
    CHECK(ex.flagged_passes == 27);  // every divisibility pair must pass

    std::set<std::pair<long long, long long>> expect = {
        {9, 5},  {-9, 5},  {11, 5},  {-11, 5},  {13, 7}, {-13, 7},
        {15, 7}, {-15, 7}, {19, 5},  {-19, 5}};
    std::set<std::pair<long long, long long>> got(ex.exceptional.begin(), ex.exceptional.end());
    CHECK(got == expect);

    // Deterministic row order: |n| ascending, positive first, p ascending.
    REQUIRE(ex.cells.size() >= 13);
    CHECK(ex.cells[0].n == 3);
    CHECK(ex.cells[0].p == 5);
    CHECK(ex.cells[6].n == -3);
    CHECK(ex.cells[12].n == 5);
}

TEST_CASE("the closed form is 4p-periodic in the surgery parameter") {
    // Consequence: I_5(M_{+-19}) equals the invariant of the +-1-surgery
    // unknot degenerations (the 3-sphere), and I_7(M_{-19}) = I_7(M_9).
    SO3Context c5(5), c7(7);
    CHECK(*brieskorn_invariant(19, c5).value2p == CycloZ::one(c5.ring2p()));
    CHECK(*brieskorn_invariant(-19, c5).value2p == CycloZ::one(c5.ring2p()));
    CHECK(brieskorn_invariant(-19, c7).value2p == brieskorn_invariant(9, c7).value2p);
    CHECK(brieskorn_invariant(23, c5).value2p == brieskorn_invariant(3, c5).value2p);
}

TEST_CASE("poincare scan over a small prime range") {
    auto rows = poincare_scan(13);
    REQUIRE(rows.size() == 4);  // p = 5, 7, 11, 13
    CHECK(rows[0].p == 5);
    CHECK(rows[0].report.pass);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(!rows[i].report.pass);
}
