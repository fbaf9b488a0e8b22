#include <doctest.h>

#include <stdexcept>

#include <urd/atlas.hpp>
#include <urd/ingredients.hpp>
#include <urd/verify.hpp>

#include <random>

using namespace urd;

TEST_CASE("verify_counts") {
    CHECK(verify::verify_counts(12, {11, 0, 0}));
    CHECK(verify::verify_counts(12, {2, 0, 6}));
    CHECK(!verify::verify_counts(12, {3, 0, 5}));
    CHECK(!verify::verify_counts(12, {11, 0, 1}));
}

TEST_CASE("accepts a clean 1-factorization and flags a swapped edge") {
    Design d = ingredients::one_factorization(6);
    CHECK(verify::verify_design(d).valid());

    // replace one edge endpoint: breaks coverage and the edge partition
    Design bad = d;
    bad.classes[0].blocks[0].verts[1] = bad.classes[0].blocks[1].verts[0];
    auto report = verify::verify_design(bad);
    CHECK(!report.valid());
    bool saw_coverage = false, saw_edges = false;
    for (const auto& v : report.violations) {
        if (v.code == "coverage") saw_coverage = true;
        if (v.code == "duplicate-edge" || v.code == "missing-edge") saw_edges = true;
    }
    CHECK(saw_coverage);
    CHECK(saw_edges);
}

TEST_CASE("flags a class whose paths share a vertex") {
    Design d;
    d.kind = DesignKind::Urd;
    d.v = 6;
    d.profile = {0, 2, 0}; // nonsense on purpose
    d.classes = {{BlockKind::P3,
                  Scope::Full,
                  -1,
                  {{BlockKind::P3, {0, 1, 2}}, {BlockKind::P3, {2, 3, 4}}}},
                 {BlockKind::P3,
                  Scope::Full,
                  -1,
                  {{BlockKind::P3, {0, 2, 4}}, {BlockKind::P3, {1, 3, 5}}}}};
    auto report = verify::verify_design(d);
    CHECK(!report.valid());
    bool multiplicity = false;
    for (const auto& v : report.violations)
        if (v.code == "coverage" && v.class_index == 0) multiplicity = true;
    CHECK(multiplicity);
}

TEST_CASE("profile mismatches are reported") {
    Design d = ingredients::one_factorization(4);
    d.profile = {2, 1, 0};
    auto report = verify::verify_design(d);
    bool profile_violation = false;
    for (const auto& v : report.violations)
        if (v.code == "profile-mismatch") profile_violation = true;
    CHECK(profile_violation);
}

TEST_CASE("frame missing-class rule") {
    Design f = ingredients::two_frame(5);
    CHECK(verify::verify_design(f).valid());
    // retag one class to the wrong group: both groups now violate the rule
    Design bad = f;
    bad.classes[0].missing_group = 1;
    auto report = verify::verify_design(bad);
    bool frame_rule = false;
    for (const auto& v : report.violations)
        if (v.code == "frame-missing-count") frame_rule = true;
    CHECK(frame_rule);
}

TEST_CASE("C5 classes are rejected outside ingredient designs") {
    Design d = atlas::get("p2c5-2x5-(4,2)").design;
    CHECK(verify::verify_design(d).valid());
    Design bad = d;
    bad.kind = DesignKind::Urgdd;
    auto report = verify::verify_design(bad);
    bool kind_violation = false;
    for (const auto& v : report.violations)
        if (v.code == "kind-not-allowed") kind_violation = true;
    CHECK(kind_violation);
}

TEST_CASE("single-vertex mutations never slip through") {
    // a light version of the acceptance robustness gate
    std::mt19937_64 rng(7);
    Design d = ingredients::one_factorization(12);
    for (int trial = 0; trial < 60; ++trial) {
        Design bad = d;
        auto& cls = bad.classes[rng() % bad.classes.size()];
        auto& blk = cls.blocks[rng() % cls.blocks.size()];
        auto& vert = blk.verts[rng() % blk.verts.size()];
        const Vertex other = (vert + 1 + (Vertex)(rng() % (d.v - 1))) % d.v;
        vert = other;
        CHECK(!verify::verify_design(bad).valid());
    }
}
