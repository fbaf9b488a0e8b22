#include <doctest.h>

#include <stdexcept>

#include <urd/certificate.hpp>
#include <urd/compose.hpp>
#include <urd/ingredients.hpp>
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

} // namespace

TEST_CASE("select_profiles: forced assignments") {
    SUBCASE("all matchings") {
        auto asg = compose::select_profiles({47, 0, 0}, sp::d_of(12), sp::dbar(1, 2), 3);
        REQUIRE(asg.has_value());
        CHECK(asg->base == Profile{11, 0, 0});
        REQUIRE(asg->parts.size() == 3);
        for (const auto& p : asg->parts) CHECK(p == Profile{12, 0, 0});
    }
    SUBCASE("forced base (0,6,2)") {
        auto asg = compose::select_profiles({0, 33, 2}, sp::d_of(12), sp::dbar(1, 2), 3);
        REQUIRE(asg.has_value());
        CHECK(asg->base == Profile{0, 6, 2});
        for (const auto& p : asg->parts) CHECK(p == Profile{0, 9, 0});
    }
    SUBCASE("h = 0 degenerate") {
        auto asg = compose::select_profiles({1, 6, 2}, sp::dbar(1, 2), sp::dbar(1, 2), 0);
        REQUIRE(asg.has_value());
        CHECK(asg->base == Profile{1, 6, 2});
        CHECK(asg->parts.empty());
    }
    SUBCASE("infeasible target") {
        CHECK(!compose::select_profiles({100, 0, 0}, sp::d_of(12), sp::dbar(1, 2), 3));
    }
}

TEST_CASE("select_profiles is total on the spectrum sums") {
    // every target reachable by the v = 0 mod 24 route decomposes
    for (int v : {24, 48, 72}) {
        const int h = v / 12 - 1;
        for (const Profile& target : sp::d_of(v)) {
            auto asg = compose::select_profiles(target, sp::d_of(12), sp::dbar(1, 2), h);
            REQUIRE_MESSAGE(asg.has_value(), "target ", target.str(), " at v=", v);
            Profile sum = asg->base;
            CHECK(sp::d_of(12).count(asg->base) == 1);
            for (const auto& p : asg->parts) {
                CHECK(sp::dbar(1, 2).count(p) == 1);
                sum += p;
            }
            CHECK(sum == target);
        }
    }
}

TEST_CASE("expand_rgdd: single triple expansion gives URD(36)") {
    Design d = compose::expand_rgdd(
        ingredients::rgdd(3, 1, 3), 12, {Profile{1, 6, 10}},
        [&](const Profile& p) -> const Design& { return builder().build_urgdd(solver::GddType::G12x3, p); },
        Profile{11, 0, 0},
        [&](const Profile& p) -> const Design& { return builder().urd12(p); });
    CHECK(d.v == 36);
    CHECK(d.profile == Profile{12, 6, 10});
    CHECK(verify::verify_design(d).valid());
    CHECK(sp::d_of(36).count(d.profile) == 1);
}

TEST_CASE("expand_rgdd: K_4 factorization route gives URD(48)") {
    const std::vector<Profile> parts = {{12, 0, 0}, {0, 9, 0}, {0, 0, 8}};
    Design d = compose::expand_rgdd(
        ingredients::rgdd(2, 1, 4), 12, parts,
        [&](const Profile& p) -> const Design& { return builder().build_urgdd(solver::GddType::G12x2, p); },
        Profile{11, 0, 0},
        [&](const Profile& p) -> const Design& { return builder().urd12(p); });
    CHECK(d.v == 48);
    CHECK(d.profile == Profile{23, 9, 8});
    CHECK(verify::verify_design(d).valid());
    CHECK(sp::oracle_enumerate(48).count(d.profile) == 1);
}

TEST_CASE("expand_rgdd: triple system blow-up gives a type 12^3 URGDD") {
    const std::vector<Profile> parts = {{0, 6, 0}, {4, 3, 0}, {1, 3, 2}};
    Design d = compose::expand_rgdd(
        ingredients::rgdd(3, 3, 3), 4, parts, [&](const Profile& p) -> const Design& {
            return builder().build_urgdd(solver::GddType::G4x3, p);
        });
    CHECK(d.v == 36);
    CHECK(d.kind == DesignKind::Urgdd);
    CHECK(d.profile == Profile{5, 12, 2});
    CHECK(verify::verify_design(d).valid());
}

TEST_CASE("fill_groups: URGDD 6^2 (2,3,0) + URD(6;1,3,0) = URD(12;3,6,0)") {
    const Design& gdd = builder().build_urgdd(solver::GddType::G6x2, {2, 3, 0});
    search::Cache cache(std::string(URD_SOURCE_DIR) + "/data/cache");
    auto fill = cache.get_by_name("urd6-1-3-0");
    REQUIRE(fill.has_value());
    Design d = compose::fill_groups(gdd, {1, 3, 0},
                                    [&](const Profile&) -> const Design& { return *fill; });
    CHECK(d.v == 12);
    CHECK(d.profile == Profile{3, 6, 0});
    CHECK(verify::verify_design(d).valid());
}

TEST_CASE("fill_groups: all-matching 12^2 gives the K_24 factorization") {
    const Design& gdd = builder().build_urgdd(solver::GddType::G12x2, {12, 0, 0});
    const Design fill = ingredients::one_factorization(12);
    Design d = compose::fill_groups(gdd, {11, 0, 0},
                                    [&](const Profile&) -> const Design& { return fill; });
    CHECK(d.v == 24);
    CHECK(d.profile == Profile{23, 0, 0});
    CHECK(verify::verify_design(d).valid());
}

TEST_CASE("fill_groups rejects unequal groups") {
    Design gdd = builder().build_urgdd(solver::GddType::G6x2, {6, 0, 0});
    gdd.layout.groups[0].push_back(100);
    CHECK_THROWS_AS((void)compose::fill_groups(
                        gdd, {5, 0, 0},
                        [&](const Profile&) -> const Design& {
                            static Design d = ingredients::one_factorization(6);
                            return d;
                        }),
                    compose::CompositionError);
}

TEST_CASE("IURD(36,12) for three profile pairs") {
    struct Case {
        Profile full, partial;
    };
    for (const Case c : {Case{{0, 9, 8}, {11, 0, 0}}, Case{{24, 0, 0}, {0, 6, 2}},
                         Case{{1, 6, 10}, {2, 0, 6}}}) {
        Design d = builder().build_iurd(c.full, c.partial);
        CHECK(d.v == 36);
        CHECK(d.layout.hole.size() == 12);
        CHECK(d.profile == c.full);
        CHECK(verify::verify_design(d).valid());
        Profile partial_count;
        for (const auto& cls : d.classes) {
            if (cls.scope != Scope::PartialHole) continue;
            if (cls.kind == BlockKind::P2) partial_count.r++;
            if (cls.kind == BlockKind::P3) partial_count.s++;
            if (cls.kind == BlockKind::P4) partial_count.t++;
        }
        CHECK(partial_count == c.partial);
    }
}

TEST_CASE("composition errors: provider profile and kind mismatches") {
    SUBCASE("expand_rgdd rejects a provider returning the wrong profile") {
        const std::vector<Profile> parts = {{12, 0, 0}};
        CHECK_THROWS_AS((void)compose::expand_rgdd(
                            ingredients::rgdd(2, 1, 2), 12, parts,
                            [&](const Profile&) -> const Design& {
                                return builder().build_urgdd(solver::GddType::G12x2, {0, 9, 0});
                            }),
                        compose::CompositionError);
    }
    SUBCASE("frame_compose rejects an IURD whose kinds cannot match") {
        Design frame = ingredients::two_frame(3);
        std::vector<std::array<Profile, 2>> profiles(3,
                                                     {Profile{12, 0, 0}, Profile{12, 0, 0}});
        CHECK_THROWS_AS(
            (void)compose::frame_compose(
                frame, 12, profiles,
                [&](const Profile& p) -> const Design& {
                    return builder().build_urgdd(solver::GddType::G12x2, p);
                },
                [&](const Profile&, const Profile& partial) {
                    return builder().build_iurd({0, 9, 8}, partial); // kinds cannot pair
                },
                Profile{11, 0, 0},
                [&](const Profile& p) -> const Design& { return builder().urd12(p); }),
            compose::CompositionError);
    }
}

TEST_CASE("IURD certificates round trip") {
    Design d = builder().build_iurd({1, 6, 10}, {7, 3, 0});
    const std::string bytes = certificate::to_json(d);
    Design back = certificate::from_json(bytes);
    CHECK(back.kind == DesignKind::Iurd);
    CHECK(back.layout.hole.size() == 12);
    CHECK(certificate::to_json(back) == bytes);
    CHECK(verify::verify_design(back).valid());
}

TEST_CASE("frame_compose: all matchings give the K_84 factorization") {
    Design frame = ingredients::two_frame(3);
    std::vector<std::array<Profile, 2>> profiles(3, {Profile{12, 0, 0}, Profile{12, 0, 0}});
    Design d = compose::frame_compose(
        frame, 12, profiles,
        [&](const Profile& p) -> const Design& { return builder().build_urgdd(solver::GddType::G12x2, p); },
        [&](const Profile& full, const Profile& partial) {
            return builder().build_iurd(full, partial);
        },
        Profile{11, 0, 0},
        [&](const Profile& p) -> const Design& { return builder().urd12(p); });
    CHECK(d.v == 84);
    CHECK(d.profile == Profile{83, 0, 0});
    CHECK(verify::verify_design(d).valid());
}

TEST_CASE("frame_compose: mixed path profiles at v = 84") {
    Design frame = ingredients::two_frame(3);
    std::vector<std::array<Profile, 2>> profiles(3, {Profile{0, 9, 0}, Profile{0, 0, 8}});
    Design d = compose::frame_compose(
        frame, 12, profiles,
        [&](const Profile& p) -> const Design& { return builder().build_urgdd(solver::GddType::G12x2, p); },
        [&](const Profile& full, const Profile& partial) {
            return builder().build_iurd(full, partial);
        },
        Profile{0, 6, 2},
        [&](const Profile& p) -> const Design& { return builder().urd12(p); });
    CHECK(d.v == 84);
    CHECK(d.profile == Profile{0, 33, 26});
    CHECK(verify::verify_design(d).valid());
    CHECK(8 * 33 + 9 * 26 == 6 * 83);
}
