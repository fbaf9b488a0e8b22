#include <doctest.h>

#include <urd/spectrum.hpp>

using namespace urd;
namespace sp = urd::spectrum;

namespace {

const TripleSet kQ = {{6, 0, 0}, {3, 0, 2}, {0, 0, 4}, {2, 3, 0}};
const TripleSet kA = {{0, 6, 0}, {4, 3, 0}, {1, 3, 2}};

} // namespace

TEST_CASE("Table 1 bounds") {
    CHECK(sp::r_max(12, 0) == 3);
    CHECK(sp::r_max(12, 1) == 2);
    CHECK(sp::r_max(12, 2) == 1);
    CHECK(sp::r_max(60, 11) == 5);
    CHECK(sp::r_max(12, 3) < 0); // D_3(12) is empty
}

TEST_CASE("D(12) frozen") {
    const TripleSet want = {{11, 0, 0}, {8, 0, 2}, {5, 0, 4}, {2, 0, 6}, {7, 3, 0},
                            {4, 3, 2},  {1, 3, 4}, {3, 6, 0}, {0, 6, 2}};
    CHECK(sp::d_of(12) == want);
    CHECK(sp::d_i(12, 2) == TripleSet{{3, 6, 0}, {0, 6, 2}});
}

TEST_CASE("D_0 contains the 1-factorization point") {
    for (int v = 12; v <= 240; v += 12) CHECK(sp::d_i(v, 0).count({v - 1, 0, 0}) == 1);
}

TEST_CASE("dbar(1,2) frozen") {
    const TripleSet want = {{12, 0, 0}, {9, 0, 2}, {6, 0, 4}, {3, 0, 6}, {0, 0, 8}, {8, 3, 0},
                            {5, 3, 2},  {2, 3, 4}, {4, 6, 0}, {1, 6, 2}, {0, 9, 0}};
    CHECK(sp::dbar(1, 2) == want);
    CHECK(sp::dbar(1, 3).count({1, 6, 10}) == 1);
    CHECK(sp::dbar(1, 2).count({0, 9, 0}) == 1);
}

TEST_CASE("D(v) equals the Diophantine oracle") {
    for (int v = 12; v <= 360; v += 12) CHECK(sp::d_of(v) == sp::oracle_enumerate(v));
}

TEST_CASE("oracle excludes odd t") {
    CHECK(sp::oracle_enumerate(12).count({9, 0, 1}) == 0);
    CHECK(sp::oracle_enumerate(12).size() == 9);
}

TEST_CASE("set addition") {
    CHECK(sp::add({{1, 0, 0}}, {{0, 3, 2}}) == TripleSet{{1, 3, 2}});
}

TEST_CASE("repeated sums reproduce larger GDD spectra") {
    // h * dbar(12^2) = dbar((12h)^2) = dbar(12^(h+1))
    for (int h = 1; h <= 8; ++h) {
        const TripleSet lhs = sp::repeat(h, sp::dbar(1, 2));
        CHECK(lhs == sp::dbar(h, 2));
        CHECK(lhs == sp::dbar(1, h + 1));
    }
}

TEST_CASE("slice sums match the 24k recursion") {
    // dbar_j((v-12)^2) + D_2(12) = D_{j+2}(v); dbar_0 + D_i(12) = D_i(v), i=0,1
    for (int v : {24, 36, 48, 60, 96}) {
        const int k = (v - 12) / 12;
        for (int j = 0; j <= 3 * k; ++j)
            CHECK(sp::add(sp::dbar_j(k, 2, j), sp::d_i(12, 2)) == sp::d_i(v, j + 2));
        for (int i = 0; i <= 1; ++i)
            CHECK(sp::add(sp::dbar_j(k, 2, 0), sp::d_i(12, i)) == sp::d_i(v, i));
    }
}

TEST_CASE("profile edge identity holds across the spectrum") {
    for (int v = 12; v <= 120; v += 12)
        for (const Profile& p : sp::d_of(v))
            CHECK(6 * p.r + 8 * p.s + 9 * p.t == 6 * (v - 1));
}

TEST_CASE("I-set generators") {
    CHECK(sp::i_set(1).size() == 17);
    CHECK(sp::i_set(1).count({48, 0, 0}) == 1);
    CHECK(sp::i_set(1).count({0, 0, 32}) == 1);
    CHECK(sp::i_set(7) == TripleSet{{0, 36, 0}});
    CHECK(sp::i_set(8) == TripleSet{{4, 33, 0}, {1, 33, 2}});
    CHECK(sp::i_set(9) == TripleSet{{0, 30, 0}});
}

TEST_CASE("I-set containments in the blown 2^5 profile sums") {
    const TripleSet a1 = sp::repeat(8, kQ);
    const TripleSet a2 = sp::add(sp::repeat(6, kQ), {{0, 9, 0}});
    const TripleSet a3 = sp::add(sp::repeat(4, kQ), {{0, 18, 0}});
    const TripleSet a78 = sp::repeat(6, kA);
    auto subset = [](const TripleSet& x, const TripleSet& y) {
        for (const Profile& p : x)
            if (!y.count(p)) return false;
        return true;
    };
    CHECK(subset(sp::i_set(1), a1));
    CHECK(subset(sp::i_set(2), a1));
    CHECK(subset(sp::i_set(3), a2));
    CHECK(subset(sp::i_set(4), a2));
    CHECK(subset(sp::i_set(5), a3));
    CHECK(subset(sp::i_set(6), a3));
    CHECK(subset(sp::i_set(7), a78));
    CHECK(subset(sp::i_set(8), a78));
}

TEST_CASE("v=60 dispatch rows cover D(60)") {
    TripleSet covered;
    auto take = [&](int iset, int di) { covered.merge(sp::add(sp::i_set(iset), sp::d_i(12, di))); };
    for (int i = 0; i <= 2; ++i) take(1, i);
    take(2, 2);
    take(3, 1);
    take(3, 2);
    for (int i = 0; i <= 2; ++i) take(5, i);
    take(6, 2);
    { // I9 + D(20)
        TripleSet d20;
        for (int x = 0; x <= 6; ++x) d20.insert({19 - 3 * x, 0, 2 * x});
        covered.merge(sp::add(sp::i_set(9), d20));
    }
    take(8, 0);
    for (int i = 0; i <= 2; ++i) take(7, i);
    covered.insert({0, 33, 10}); // the searched case
    CHECK(covered == sp::d_of(60));
}

TEST_CASE("necessity oracle") {
    CHECK(sp::necessary_ok(12, {2, 0, 6}).ok);
    CHECK(sp::necessary_ok(12, {11, 0, 0}).ok);
    {
        auto n = sp::necessary_ok(12, {9, 0, 1});
        CHECK(!n.ok);
        CHECK(n.reason == "t must be even");
    }
    {
        auto n = sp::necessary_ok(14, {13, 0, 0});
        CHECK(n.ok);
        CHECK(n.reason == "pure 1-factorization");
    }
    CHECK(sp::necessary_ok(20, {16, 0, 2}).ok);   // (P2,P4) residue rule, v = 8 mod 12
    CHECK(!sp::necessary_ok(20, {16, 3, 2}).ok);  // s > 0, t > 0 forces 12 | v
    CHECK(!sp::necessary_ok(13, {12, 0, 0}).ok);  // odd v
    CHECK(sp::necessary_ok(18, {13, 3, 0}).ok);   // (P2,P3) rule, v = 6 mod 12
    CHECK(!sp::necessary_ok(18, {12, 3, 0}).ok);
    for (int v = 12; v <= 120; v += 12)
        for (const Profile& p : sp::d_of(v)) CHECK(sp::necessary_ok(v, p).ok);
}
