#include <doctest.h>

#include <stdexcept>

#include <urd/search.hpp>
#include <urd/solver.hpp>
#include <urd/spectrum.hpp>
#include <urd/verify.hpp>

using namespace urd;
namespace sp = urd::spectrum;

namespace {

solver::Builder& builder() {
    static solver::Builder b{search::Cache(std::string(URD_SOURCE_DIR) + "/data/cache")};
    return b;
}

void check_urd(int v, const Profile& p) {
    Design d = builder().build_urd(v, p);
    CHECK(d.v == v);
    CHECK(d.profile == p);
    CHECK(verify::verify_design(d).valid());
    CHECK(verify::verify_counts(v, d.profile));
}

} // namespace

TEST_CASE("URGDD builders cover their spectra") {
    for (const Profile& p : TripleSet{{6, 0, 0}, {3, 0, 2}, {0, 0, 4}, {2, 3, 0}}) {
        const Design& d = builder().build_urgdd(solver::GddType::G6x2, p);
        CHECK(d.profile == p);
        CHECK(verify::verify_design(d).valid());
    }
    { // (5,3,2) = (3,0,2) + (2,3,0) through the doubled 6^2 route
        const Design& d = builder().build_urgdd(solver::GddType::G12x2, {5, 3, 2});
        CHECK(d.v == 24);
        CHECK(d.layout.groups.size() == 2);
        CHECK(verify::verify_design(d).valid());
    }
    for (const Profile& p : sp::dbar(1, 2)) {
        const Design& d = builder().build_urgdd(solver::GddType::G12x2, p);
        CHECK(d.profile == p);
        CHECK(verify::verify_design(d).valid());
    }
    for (const Profile& p : TripleSet{{4, 15, 0}, {0, 18, 0}, {5, 12, 2}, {13, 6, 2}}) {
        const Design& d = builder().build_urgdd(solver::GddType::G12x3, p);
        CHECK(d.v == 36);
        CHECK(d.profile == p);
        CHECK(verify::verify_design(d).valid());
    }
    { // the two 12^5 showcase profiles
        const Design& d = builder().build_urgdd(solver::GddType::G12x5, {0, 36, 0});
        CHECK(d.v == 60);
        CHECK(verify::verify_design(d).valid());
        const Design& e = builder().build_urgdd(solver::GddType::G12x5, {48, 0, 0});
        CHECK(e.profile == Profile{48, 0, 0});
        const Design& f = builder().build_urgdd(solver::GddType::G12x5, {18, 9, 12});
        CHECK(f.profile == Profile{18, 9, 12});
    }
    {
        const Design& d = builder().build_urgdd(solver::GddType::G20x3, {0, 30, 0});
        CHECK(d.v == 60);
        CHECK(d.layout.groups.size() == 3);
        CHECK(verify::verify_design(d).valid());
    }
    CHECK_THROWS_AS((void)builder().build_urgdd(solver::GddType::G6x2, {5, 0, 0}),
                    solver::SpectrumError);
}

TEST_CASE("URD(20) family") {
    for (int x = 0; x <= 6; ++x) {
        Design d = builder().build_urd20({19 - 3 * x, 0, 2 * x});
        CHECK(d.v == 20);
        CHECK(verify::verify_design(d).valid());
    }
    CHECK_THROWS_AS((void)builder().build_urd20({18, 0, 2}), solver::SpectrumError);
}

TEST_CASE("spectrum errors carry reasons and route checks hold") {
    CHECK_THROWS_AS((void)builder().build_urd(12, {9, 0, 1}), solver::SpectrumError);
    CHECK_THROWS_AS((void)builder().build_urd(26, {20, 3, 0}), solver::SpectrumError);
    check_urd(24, {23, 0, 0}); // the spec routes pure matchings through the expansion
    CHECK(solver::Builder::last_route() == "urd24k-expand");
    check_urd(14, {13, 0, 0});
    CHECK(solver::Builder::last_route() == "one-factorization");
}

TEST_CASE("exhaustive v = 12") {
    for (const Profile& p : sp::d_of(12)) {
        check_urd(12, p);
        CHECK(solver::Builder::last_route() == "urd12");
    }
}

TEST_CASE("exhaustive v = 24") {
    for (const Profile& p : sp::d_of(24)) {
        check_urd(24, p);
        CHECK(solver::Builder::last_route() == "urd24k-expand");
    }
}

TEST_CASE("exhaustive v = 36") {
    for (const Profile& p : sp::d_of(36)) {
        check_urd(36, p);
        CHECK(solver::Builder::last_route() == "urd36-expand");
    }
}

TEST_CASE("v = 60 samples across the dispatch") {
    check_urd(60, {59, 0, 0});
    check_urd(60, {2, 0, 38});
    check_urd(60, {44, 9, 2});  // I3 row
    check_urd(60, {19, 30, 0}); // 20^3 route
    CHECK(solver::Builder::last_route() == "urd60-iset");
    check_urd(60, {1, 30, 12}); // 20^3 route, filled with URD(20;1,0,12)
    check_urd(60, {6, 33, 6});  // I8 row
    check_urd(60, {8, 36, 2});  // I7 row
    check_urd(60, {2, 36, 6});  // I7 row
    check_urd(60, {0, 33, 10}); // the searched profile
    CHECK(solver::Builder::last_route() == "urd60-search");
}

TEST_CASE("v = 84 frame route samples") {
    check_urd(84, {83, 0, 0});
    CHECK(solver::Builder::last_route() == "frame");
    check_urd(84, {1, 39, 20});
    check_urd(84, {40, 21, 10});
}

TEST_CASE("v = 108 frame route sample") {
    check_urd(108, {19, 48, 16});
    CHECK(solver::Builder::last_route() == "frame");
    check_urd(108, {1, 30, 44});
}
