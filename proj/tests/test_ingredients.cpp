#include <doctest.h>

#include <stdexcept>

#include <urd/ingredients.hpp>
#include <urd/verify.hpp>

using namespace urd;
namespace ing = urd::ingredients;

TEST_CASE("one_factorization") {
    CHECK_THROWS_AS((void)ing::one_factorization(5), std::domain_error);
    {
        Design d = ing::one_factorization(2);
        CHECK(d.classes.size() == 1);
        CHECK(d.classes[0].blocks[0].verts == std::vector<Vertex>{0, 1});
    }
    for (int n : {4, 6, 12, 20}) {
        Design d = ing::one_factorization(n);
        CHECK((int)d.classes.size() == n - 1);
        CHECK(verify::verify_design(d).valid());
    }
}

TEST_CASE("near_one_factorization") {
    CHECK_THROWS_AS((void)ing::near_one_factorization(4), std::domain_error);
    {
        Design d = ing::near_one_factorization(3);
        REQUIRE(d.classes.size() == 3);
        CHECK(d.classes[0].blocks[0].verts == std::vector<Vertex>{1, 2});
        CHECK(verify::verify_design(d).valid());
    }
    for (int u : {5, 7}) {
        Design d = ing::near_one_factorization(u);
        CHECK((int)d.classes.size() == u);
        for (const auto& c : d.classes) CHECK((int)c.blocks.size() == (u - 1) / 2);
        CHECK(verify::verify_design(d).valid());
    }
}

TEST_CASE("bipartite_one_factorization") {
    {
        Design d = ing::bipartite_one_factorization(1);
        CHECK(d.classes.size() == 1);
    }
    for (int n : {6, 12}) {
        Design d = ing::bipartite_one_factorization(n);
        CHECK((int)d.classes.size() == n);
        CHECK(d.profile == Profile{n, 0, 0});
        CHECK(verify::verify_design(d).valid());
    }
}

TEST_CASE("algebraic RGDDs") {
    CHECK_THROWS_AS((void)ing::rgdd(4, 1, 5), std::domain_error);
    {
        Design d = ing::rgdd(3, 1, 3);
        CHECK(d.classes.size() == 1);
        CHECK(d.classes[0].blocks.size() == 1);
        CHECK(verify::verify_design(d).valid());
    }
    { // class count g(u-1)/(k-1)
        Design d = ing::rgdd(3, 5, 3);
        CHECK(d.classes.size() == 5);
        for (const auto& c : d.classes) CHECK(c.blocks.size() == 5);
        CHECK(verify::verify_design(d).valid());
    }
    {
        Design d = ing::rgdd(3, 3, 3);
        CHECK(d.classes.size() == 3);
        CHECK(verify::verify_design(d).valid());
    }
    {
        Design d = ing::rgdd(2, 2, 3);
        CHECK(d.classes.size() == 4);
        CHECK(verify::verify_design(d).valid());
    }
    {
        Design d = ing::rgdd(2, 2, 2);
        CHECK(d.classes.size() == 2);
        CHECK(verify::verify_design(d).valid());
    }
    for (int u : {2, 4, 6, 10}) {
        Design d = ing::rgdd(2, 1, u);
        CHECK((int)d.classes.size() == u - 1);
        CHECK(verify::verify_design(d).valid());
    }
    // cache-backed signature without a cache
    CHECK_THROWS_AS((void)ing::rgdd(3, 3, 5), std::domain_error);
}

TEST_CASE("odd 2-frames from modular sum classes") {
    CHECK_THROWS_AS((void)ing::two_frame(2), std::domain_error);
    for (int u : {3, 5, 7, 9}) {
        Design d = ing::two_frame(u);
        CHECK((int)d.classes.size() == 2 * u);
        for (const auto& c : d.classes) CHECK((int)c.blocks.size() == u - 1);
        CHECK(verify::verify_design(d).valid()); // includes the missing-count rule
    }
}

TEST_CASE("the eight matchings of K_{5x2}") {
    Design d = ing::p2c5_8_0();
    CHECK(d.classes.size() == 8);
    CHECK(d.profile == Profile{8, 0, 0});
    CHECK(verify::verify_design(d).valid());
}
