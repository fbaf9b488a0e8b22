#include <doctest.h>

#include <stdexcept>

#include <urd/atlas.hpp>
#include <urd/certificate.hpp>
#include <urd/verify.hpp>

#include <fstream>
#include <sstream>

using namespace urd;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("every atlas entry verifies and matches its claimed classes") {
    struct Expect {
        const char* id;
        Profile profile;
        int c5_classes;
    };
    const std::vector<Expect> expected = {
        {"urgdd-6x2-(2,3,0)", {2, 3, 0}, 0},  {"urgdd-4x3-(4,3,0)", {4, 3, 0}, 0},
        {"urgdd-4x3-(1,3,2)", {1, 3, 2}, 0},  {"urgdd-12x2-(1,6,2)", {1, 6, 2}, 0},
        {"urgdd-12x3-(1,6,10)", {1, 6, 10}, 0}, {"c5x6-p3-factorization", {0, 9, 0}, 0},
        {"p2c5-2x5-(6,1)", {6, 0, 0}, 1},     {"p2c5-2x5-(4,2)", {4, 0, 0}, 2},
    };
    CHECK(atlas::ids().size() == expected.size());
    for (const auto& e : expected) {
        const auto& entry = atlas::get(e.id);
        CHECK(verify::verify_design(entry.design).valid());
        CHECK(entry.design.profile == e.profile);
        int c5 = 0;
        for (const auto& c : entry.design.classes)
            if (c.kind == BlockKind::C5) c5++;
        CHECK(c5 == e.c5_classes);
    }
    CHECK_THROWS_AS((void)atlas::get("no-such-entry"), std::out_of_range);
}

TEST_CASE("the blown-cycle factorization has nine classes of ten paths") {
    const Design& d = atlas::get("c5x6-p3-factorization").design;
    CHECK(d.classes.size() == 9);
    for (const auto& c : d.classes) {
        CHECK(c.kind == BlockKind::P3);
        CHECK(c.blocks.size() == 10);
    }
    REQUIRE(d.cycle.has_value());
    CHECK(d.cycle->positions == 5);
    CHECK(d.cycle->copies == 6);
}

TEST_CASE("serialized atlas files match the in-code transcriptions") {
    for (const std::string& id : atlas::ids()) {
        const std::string path = std::string(URD_SOURCE_DIR) + "/data/atlas/" + id + ".json";
        CHECK(certificate::to_json(atlas::get(id).design) == slurp(path));
    }
}

TEST_CASE("develop rejects colliding translates") {
    atlas::OrbitClassSpec spec;
    spec.kind = BlockKind::P2;
    spec.base_blocks = {{BlockKind::P2, {0, 3}}};
    spec.step = 3;
    spec.count = 3;
    spec.modulus = 9; // translates {0,3},{3,6},{6,0} collide on every point
    CHECK_THROWS_AS((void)atlas::develop(spec), atlas::TranscriptionError);
}

TEST_CASE("develop reproduces comprehension classes") {
    atlas::OrbitClassSpec spec;
    spec.kind = BlockKind::P2;
    spec.base_blocks = {{BlockKind::P2, {1, 2}}, {BlockKind::P2, {3, 8}}};
    spec.step = 4;
    spec.count = 9;
    spec.modulus = 36;
    auto cls = atlas::develop(spec);
    CHECK(cls.blocks.size() == 18);
    CHECK(cls.blocks[2].verts == std::vector<Vertex>{5, 6});  // {1,2}+4
    CHECK(cls.blocks[3].verts == std::vector<Vertex>{7, 12}); // {3,8}+4
}

TEST_CASE("errata regressions: the literal readings fail") {
    SUBCASE("cycle base written with the misprint drops a vertex") {
        // (i, 2+i, 4+i, 6+1, 8+i) at i=1 repeats the vertex 7
        Block literal{BlockKind::C5, {1, 3, 5, 7, 9}};
        Block misprint{BlockKind::C5, {1, 3, 5, 7, 9}};
        misprint.verts[3] = 6 + 1; // "6+1" instead of 6+i
        CHECK(misprint.verts[3] == 7);
        CHECK_NOTHROW((void)edges_of(literal));
        // at i = 1 the misprinted block is [1,3,5,7,9] -> same; at i = 0 it
        // reads [0,2,4,7,8]: a valid block but the class no longer covers 6
        Block at0{BlockKind::C5, {0, 2, 4, 7, 8}};
        Design d;
        d.kind = DesignKind::Ingredient;
        d.v = 10;
        d.profile = {0, 0, 0};
        for (int i = 0; i < 5; ++i) d.layout.groups.push_back({i, i + 5});
        d.classes = {{BlockKind::C5, Scope::Full, -1, {at0, {BlockKind::C5, {1, 3, 5, 7, 9}}}}};
        CHECK(!verify::verify_design(d).valid());
    }
    SUBCASE("pairing translate i with translate 3i double-covers at i=0") {
        // B_0 u B_0 covers only half the points, each twice
        const auto& entry = atlas::get("c5x6-p3-factorization");
        Design bad = entry.design;
        bad.classes[0].blocks.erase(bad.classes[0].blocks.begin() + 5,
                                    bad.classes[0].blocks.end());
        auto first_five = bad.classes[0].blocks;
        for (const Block& b : first_five) bad.classes[0].blocks.push_back(b);
        CHECK(!verify::verify_design(bad).valid());
        CHECK(entry.errata.size() == 1);
    }
}
