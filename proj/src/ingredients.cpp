#include <urd/ingredients.hpp>

#include <stdexcept>

namespace urd::ingredients {

namespace {

Block edge_block(Vertex a, Vertex b) { return Block{BlockKind::P2, {a, b}}; }

ResolutionClass matching(std::vector<Block> blocks) {
    return ResolutionClass{BlockKind::P2, Scope::Full, -1, std::move(blocks)};
}

} // namespace

Design one_factorization(int n) {
    if (n < 2 || n % 2 != 0) throw std::domain_error("1-factorization requires n even, n >= 2");
    Design d;
    d.kind = DesignKind::Urd;
    d.v = n;
    d.profile = {n - 1, 0, 0};
    if (n == 2) {
        d.classes.push_back(matching({edge_block(0, 1)}));
        return d;
    }
    const int m = n - 1; // points 0..m-1 on the circle, point m fixed
    for (int i = 0; i < m; ++i) {
        std::vector<Block> blocks;
        blocks.push_back(edge_block(m, i));
        for (int k = 1; k <= n / 2 - 1; ++k)
            blocks.push_back(edge_block((i + k) % m, (i - k + m) % m));
        d.classes.push_back(matching(std::move(blocks)));
    }
    return d;
}

Design near_one_factorization(int u) {
    if (u < 3 || u % 2 == 0)
        throw std::domain_error("near-1-factorization requires u odd, u >= 3");
    Design d;
    d.kind = DesignKind::Frame;
    d.v = u;
    d.profile = {u, 0, 0};
    for (int i = 0; i < u; ++i) d.layout.groups.push_back({i});
    for (int i = 0; i < u; ++i) {
        std::vector<Block> blocks;
        for (int k = 1; k <= (u - 1) / 2; ++k)
            blocks.push_back(edge_block((i + k) % u, (i - k + u) % u));
        d.classes.push_back({BlockKind::P2, Scope::PartialGroup, i, std::move(blocks)});
    }
    return d;
}

Design bipartite_one_factorization(int n) {
    if (n < 1) throw std::domain_error("bipartite 1-factorization requires n >= 1");
    Design d;
    d.kind = DesignKind::Urgdd;
    d.v = 2 * n;
    d.profile = {n, 0, 0};
    std::vector<Vertex> left, right;
    for (int i = 0; i < n; ++i) left.push_back(i), right.push_back(n + i);
    d.layout.groups = {left, right};
    for (int diff = 0; diff < n; ++diff) {
        std::vector<Block> blocks;
        for (int j = 0; j < n; ++j) blocks.push_back(edge_block(j, n + (j + diff) % n));
        d.classes.push_back(matching(std::move(blocks)));
    }
    return d;
}

namespace {

Design rgdd_from_one_factorization(int u) {
    Design f = one_factorization(u);
    f.kind = DesignKind::Ingredient;
    for (int i = 0; i < u; ++i) f.layout.groups.push_back({i});
    return f;
}

Design rgdd_2_2_2() {
    Design d;
    d.kind = DesignKind::Ingredient;
    d.v = 4;
    d.profile = {2, 0, 0};
    d.layout.groups = {{0, 1}, {2, 3}};
    d.classes.push_back(matching({edge_block(0, 2), edge_block(1, 3)}));
    d.classes.push_back(matching({edge_block(0, 3), edge_block(1, 2)}));
    return d;
}

Design rgdd_2_2_3() {
    Design d;
    d.kind = DesignKind::Ingredient;
    d.v = 6;
    d.profile = {4, 0, 0};
    d.layout.groups = {{0, 3}, {1, 4}, {2, 5}};
    d.classes.push_back(matching({edge_block(0, 1), edge_block(2, 3), edge_block(4, 5)}));
    d.classes.push_back(matching({edge_block(0, 2), edge_block(1, 5), edge_block(3, 4)}));
    d.classes.push_back(matching({edge_block(0, 4), edge_block(1, 2), edge_block(3, 5)}));
    d.classes.push_back(matching({edge_block(0, 5), edge_block(1, 3), edge_block(2, 4)}));
    return d;
}

// Resolvable transversal design RTD(3,g) for odd g: class d is
// {x, g + (x+d mod g), 2g + (2x+d mod g)} over x in Z_g.
Design rgdd_rtd3(int g) {
    Design d;
    d.kind = DesignKind::Ingredient;
    d.v = 3 * g;
    d.profile = {0, 0, 0};
    for (int a = 0; a < 3; ++a) {
        std::vector<Vertex> grp;
        for (int x = 0; x < g; ++x) grp.push_back(a * g + x);
        d.layout.groups.push_back(std::move(grp));
    }
    for (int diff = 0; diff < g; ++diff) {
        ResolutionClass c{BlockKind::K3, Scope::Full, -1, {}};
        for (int x = 0; x < g; ++x)
            c.blocks.push_back(
                Block{BlockKind::K3,
                      {x, g + (x + diff) % g, 2 * g + (2 * x + diff) % g}});
        d.classes.push_back(std::move(c));
    }
    return d;
}

Design fetch_or_throw(const CacheFetch& fetch, const std::string& name) {
    if (fetch)
        if (auto got = fetch(name)) return *got;
    throw std::domain_error("ingredient " + name + " requires the search cache");
}

} // namespace

Design rgdd(int k, int g, int u, const CacheFetch& fetch) {
    if (k == 2 && g == 1 && u >= 2 && u % 2 == 0) return rgdd_from_one_factorization(u);
    if (k == 2 && g == 2 && u == 2) return rgdd_2_2_2();
    if (k == 2 && g == 2 && u == 3) return rgdd_2_2_3();
    if (k == 3 && g == 1 && u == 3) {
        Design d;
        d.kind = DesignKind::Ingredient;
        d.v = 3;
        d.layout.groups = {{0}, {1}, {2}};
        d.classes.push_back({BlockKind::K3, Scope::Full, -1, {Block{BlockKind::K3, {0, 1, 2}}}});
        return d;
    }
    if (k == 3 && (g == 3 || g == 5) && u == 3) return rgdd_rtd3(g);
    if (k == 3 && g == 3 && u == 5) return fetch_or_throw(fetch, "rgdd-3x5");
    throw std::domain_error("unsupported RGDD signature (" + std::to_string(k) + "," +
                            std::to_string(g) + "," + std::to_string(u) + ")");
}

Design two_frame(int u, const CacheFetch& fetch) {
    if (u < 3) throw std::domain_error("2-frame of type 2^u requires u >= 3");
    if (u % 2 == 0) return fetch_or_throw(fetch, "two-frame-2x" + std::to_string(u));
    Design d;
    d.kind = DesignKind::Frame;
    d.v = 2 * u;
    d.profile = {2 * u, 0, 0};
    for (int i = 0; i < u; ++i) d.layout.groups.push_back({i, i + u});
    const int n = 2 * u;
    for (int i = 0; i < u; ++i) {
        // Even-sum class: pairs {x, y} with x + y = 2i (mod 2u); the two
        // self-paired solutions are exactly i and i+u, the missing group.
        std::vector<Block> even_cls;
        for (int x = 0; x < n; ++x) {
            const int y = ((2 * i - x) % n + n) % n;
            if (x < y) even_cls.push_back(edge_block(x, y));
        }
        d.classes.push_back({BlockKind::P2, Scope::PartialGroup, i, std::move(even_cls)});
        // Odd-sum class: x + y = 2i + u, minus the within-group pair {i, i+u}.
        std::vector<Block> odd_cls;
        for (int x = 0; x < n; ++x) {
            const int y = ((2 * i + u - x) % n + n) % n;
            if (x < y && !(x == i && y == i + u)) odd_cls.push_back(edge_block(x, y));
        }
        d.classes.push_back({BlockKind::P2, Scope::PartialGroup, i, std::move(odd_cls)});
    }
    return d;
}

Design p2c5_8_0() {
    Design d;
    d.kind = DesignKind::Ingredient;
    d.v = 10;
    d.profile = {8, 0, 0};
    for (int i = 0; i < 5; ++i) d.layout.groups.push_back({i, i + 5});
    // Five mixed factors: near-1-factor of the even K_5 missing 2i, the odd
    // K_5 missing 2i+1, and the connector {2i, 2i+1}.
    for (int i = 0; i < 5; ++i) {
        std::vector<Block> blocks;
        blocks.push_back(edge_block(2 * i, 2 * i + 1));
        for (int k = 1; k <= 2; ++k) {
            blocks.push_back(edge_block(2 * ((i + k) % 5), 2 * ((i - k + 5) % 5)));
            blocks.push_back(edge_block(2 * ((i + k) % 5) + 1, 2 * ((i - k + 5) % 5) + 1));
        }
        d.classes.push_back(matching(std::move(blocks)));
    }
    { // remaining difference-1 edges
        std::vector<Block> blocks;
        for (int i = 0; i < 5; ++i) blocks.push_back(edge_block(2 * i + 1, (2 * i + 2) % 10));
        d.classes.push_back(matching(std::move(blocks)));
    }
    { // the difference-3 ten-cycle splits into two matchings
        std::vector<Block> m1, m2;
        int x = 0;
        for (int step = 0; step < 5; ++step) {
            m1.push_back(edge_block(x, (x + 3) % 10));
            m2.push_back(edge_block((x + 3) % 10, (x + 6) % 10));
            x = (x + 6) % 10;
        }
        d.classes.push_back(matching(std::move(m1)));
        d.classes.push_back(matching(std::move(m2)));
    }
    return d;
}

} // namespace urd::ingredients
