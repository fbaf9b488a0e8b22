#include <urd/atlas.hpp>
#include <urd/verify.hpp>

#include <map>
#include <set>
#include <stdexcept>

namespace urd::atlas {

namespace {

Vertex translate(Vertex p, int shift, int modulus) {
    return (p / modulus) * modulus + ((p % modulus) + shift) % modulus;
}

std::vector<Block> translate_blocks(const std::vector<Block>& blocks, int shift, int modulus) {
    std::vector<Block> out = blocks;
    for (auto& b : out)
        for (auto& p : b.verts) p = translate(p, shift, modulus);
    return out;
}

} // namespace

ResolutionClass develop(const OrbitClassSpec& spec, Scope scope, int missing_group) {
    ResolutionClass out{spec.kind, scope, missing_group, {}};
    std::set<Vertex> seen;
    for (int i = 0; i < spec.count; ++i) {
        for (Block b : translate_blocks(spec.base_blocks, (spec.step * i) % spec.modulus,
                                        spec.modulus)) {
            for (Vertex p : b.verts)
                if (!seen.insert(p).second)
                    throw TranscriptionError("develop: translates collide on vertex " +
                                             std::to_string(p));
            out.blocks.push_back(std::move(b));
        }
    }
    return out;
}

namespace {

Block blk(BlockKind k, std::initializer_list<Vertex> vs) { return Block{k, vs}; }

ResolutionClass cls(BlockKind k, std::initializer_list<Block> blocks) {
    return ResolutionClass{k, Scope::Full, -1, blocks};
}

constexpr BlockKind P2 = BlockKind::P2;
constexpr BlockKind P3 = BlockKind::P3;
constexpr BlockKind P4 = BlockKind::P4;
constexpr BlockKind C5 = BlockKind::C5;

Block e(Vertex a, Vertex b) { return blk(P2, {a, b}); }
Block p3(Vertex a, Vertex b, Vertex c) { return blk(P3, {a, b, c}); }
Block p4(Vertex a, Vertex b, Vertex c, Vertex d) { return blk(P4, {a, b, c, d}); }

std::vector<std::pair<std::string, Vertex>> letters_labeling() {
    std::vector<std::pair<std::string, Vertex>> lab;
    for (int i = 1; i <= 6; ++i) lab.push_back({std::to_string(i), i - 1});
    for (int i = 0; i < 6; ++i) lab.push_back({std::string(1, char('a' + i)), 6 + i});
    return lab;
}

// URGDD(2,3,0) of type 6^2 on groups {1..6} -> 0..5 and {a..f} -> 6..11.
AtlasEntry make_6x2_230() {
    AtlasEntry entry;
    entry.id = "urgdd-6x2-(2,3,0)";
    entry.source = "explicit class listing: URGDD(2,3,0) of type 6^2";
    entry.labeling = letters_labeling();
    Design& d = entry.design;
    d.kind = DesignKind::Urgdd;
    d.v = 12;
    d.profile = {2, 3, 0};
    d.layout.groups = {{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}};
    d.classes = {
        cls(P2, {e(0, 10), e(1, 11), e(2, 8), e(3, 9), e(4, 7), e(5, 6)}),
        cls(P2, {e(0, 9), e(1, 7), e(2, 6), e(3, 10), e(4, 11), e(5, 8)}),
        cls(P3, {p3(6, 0, 7), p3(11, 3, 8), p3(2, 9, 4), p3(1, 10, 5)}),
        cls(P3, {p3(8, 1, 9), p3(6, 4, 10), p3(2, 7, 3), p3(0, 11, 5)}),
        cls(P3, {p3(10, 2, 11), p3(7, 5, 9), p3(1, 6, 3), p3(0, 8, 4)}),
    };
    return entry;
}

std::vector<std::pair<std::string, Vertex>> one_based_labeling(int n) {
    std::vector<std::pair<std::string, Vertex>> lab;
    for (int i = 1; i <= n; ++i) lab.push_back({std::to_string(i), i - 1});
    return lab;
}

// The four matchings and three P3 classes of the type-4^3 URGDD(4,3,0),
// on groups {1..4},{5..8},{9..12} shifted to 0-based.
AtlasEntry make_4x3_430() {
    AtlasEntry entry;
    entry.id = "urgdd-4x3-(4,3,0)";
    entry.source = "explicit class listing: URGDD(4,3,0) of type 4^3";
    entry.labeling = one_based_labeling(12);
    Design& d = entry.design;
    d.kind = DesignKind::Urgdd;
    d.v = 12;
    d.profile = {4, 3, 0};
    d.layout.groups = {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
    d.classes = {
        cls(P2, {e(0, 5), e(1, 4), e(2, 9), e(3, 8), e(6, 11), e(7, 10)}),
        cls(P2, {e(0, 4), e(1, 5), e(2, 8), e(3, 9), e(6, 10), e(7, 11)}),
        cls(P2, {e(0, 8), e(1, 9), e(2, 6), e(3, 7), e(5, 11), e(4, 10)}),
        cls(P2, {e(0, 9), e(1, 8), e(2, 7), e(3, 6), e(4, 11), e(5, 10)}),
        cls(P3, {p3(7, 0, 10), p3(6, 1, 11), p3(3, 4, 8), p3(2, 5, 9)}),
        cls(P3, {p3(10, 2, 4), p3(11, 3, 5), p3(0, 6, 8), p3(1, 7, 9)}),
        cls(P3, {p3(5, 8, 7), p3(4, 9, 6), p3(1, 10, 3), p3(0, 11, 2)}),
    };
    return entry;
}

AtlasEntry make_4x3_132() {
    AtlasEntry entry;
    entry.id = "urgdd-4x3-(1,3,2)";
    entry.source = "explicit class listing: URGDD(1,3,2) of type 4^3";
    entry.labeling = one_based_labeling(12);
    Design& d = entry.design;
    d.kind = DesignKind::Urgdd;
    d.v = 12;
    d.profile = {1, 3, 2};
    d.layout.groups = {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
    d.classes = {
        cls(P2, {e(0, 5), e(1, 4), e(2, 9), e(3, 8), e(6, 11), e(7, 10)}),
        cls(P3, {p3(7, 0, 10), p3(6, 1, 11), p3(3, 4, 8), p3(2, 5, 9)}),
        cls(P3, {p3(10, 2, 4), p3(11, 3, 5), p3(0, 6, 8), p3(1, 7, 9)}),
        cls(P3, {p3(5, 8, 7), p3(4, 9, 6), p3(1, 10, 3), p3(0, 11, 2)}),
        cls(P4, {p4(8, 0, 9, 3), p4(1, 5, 10, 4), p4(11, 7, 2, 6)}),
        cls(P4, {p4(0, 4, 11, 5), p4(2, 8, 1, 9), p4(7, 3, 6, 10)}),
    };
    return entry;
}

std::vector<std::pair<std::string, Vertex>> primes_labeling(int n) {
    std::vector<std::pair<std::string, Vertex>> lab;
    for (int i = 0; i < n; ++i) lab.push_back({std::to_string(i), i});
    for (int i = 0; i < n; ++i) lab.push_back({std::to_string(i) + "'", n + i});
    return lab;
}

// URGDD(1,6,2) of type 12^2 on groups {0..11} and {0'..11'} -> 12..23.
AtlasEntry make_12x2_162() {
    AtlasEntry entry;
    entry.id = "urgdd-12x2-(1,6,2)";
    entry.source = "explicit class listing: URGDD(1,6,2) of type 12^2";
    entry.labeling = primes_labeling(12);
    Design& d = entry.design;
    d.kind = DesignKind::Urgdd;
    d.v = 24;
    d.profile = {1, 6, 2};
    std::vector<Vertex> g0, g1;
    for (int i = 0; i < 12; ++i) g0.push_back(i), g1.push_back(12 + i);
    d.layout.groups = {g0, g1};
    d.classes = {
        cls(P2, {e(0, 23), e(1, 16), e(2, 18), e(3, 19), e(4, 13), e(5, 12), e(6, 22), e(7, 17),
                 e(8, 15), e(9, 20), e(10, 14), e(11, 21)}),
        cls(P3, {p3(12, 0, 13), p3(14, 1, 15), p3(18, 6, 19), p3(20, 7, 21), p3(2, 16, 3),
                 p3(4, 17, 5), p3(8, 22, 9), p3(10, 23, 11)}),
        cls(P3, {p3(13, 2, 17), p3(14, 5, 16), p3(19, 8, 23), p3(20, 11, 22), p3(1, 12, 3),
                 p3(7, 18, 9), p3(0, 15, 4), p3(6, 21, 10)}),
        cls(P3, {p3(16, 4, 12), p3(17, 3, 15), p3(22, 10, 18), p3(23, 9, 21), p3(1, 13, 5),
                 p3(0, 14, 2), p3(7, 19, 11), p3(6, 20, 8)}),
        cls(P3, {p3(12, 6, 13), p3(14, 7, 15), p3(18, 0, 19), p3(20, 1, 21), p3(2, 22, 3),
                 p3(4, 23, 5), p3(8, 16, 9), p3(10, 17, 11)}),
        cls(P3, {p3(13, 8, 17), p3(14, 11, 16), p3(19, 2, 23), p3(20, 5, 22), p3(1, 18, 3),
                 p3(7, 12, 9), p3(0, 21, 4), p3(6, 15, 10)}),
        cls(P3, {p3(16, 10, 12), p3(17, 9, 15), p3(22, 4, 18), p3(23, 3, 21), p3(1, 19, 5),
                 p3(0, 20, 2), p3(7, 13, 11), p3(6, 14, 8)}),
        cls(P4, {p4(16, 0, 17, 1), p4(6, 23, 7, 22), p4(12, 2, 15, 5), p4(11, 18, 8, 21),
                 p4(13, 3, 14, 4), p4(9, 19, 10, 20)}),
        cls(P4, {p4(7, 16, 6, 17), p4(0, 22, 1, 23), p4(8, 12, 11, 15), p4(2, 21, 5, 18),
                 p4(3, 20, 4, 19), p4(10, 13, 9, 14)}),
    };
    return entry;
}

// URGDD(1,6,10) of type 12^3 on Z_36 with groups 3Z_36 + i, every class
// developed from base blocks.
AtlasEntry make_12x3_1610() {
    AtlasEntry entry;
    entry.id = "urgdd-12x3-(1,6,10)";
    entry.source = "base blocks developed mod 36: URGDD(1,6,10) of type 12^3";
    Design& d = entry.design;
    d.kind = DesignKind::Urgdd;
    d.v = 36;
    d.profile = {1, 6, 10};
    for (int i = 0; i < 3; ++i) {
        std::vector<Vertex> g;
        for (int x = i; x < 36; x += 3) g.push_back(x);
        d.layout.groups.push_back(std::move(g));
    }
    d.classes.push_back(develop({P2, {e(1, 2), e(3, 8)}, 4, 9, 36}));
    const std::vector<std::vector<Vertex>> p3_bases = {
        {0, 2, 4}, {1, 3, 11}, {0, 4, 8}, {6, 2, 10}, {9, 1, 17}, {34, 18, 2}};
    for (const auto& b : p3_bases)
        d.classes.push_back(develop({P3, {Block{P3, b}}, 3, 12, 36}));
    const std::vector<std::vector<Vertex>> p4_bases = {
        {2, 3, 4, 5},    {0, 5, 10, 15}, {0, 7, 14, 1},  {11, 1, 8, 18}, {12, 2, 9, 23},
        {14, 3, 13, 0},  {11, 0, 14, 25}, {12, 1, 18, 31}, {2, 19, 32, 13}, {17, 3, 20, 6}};
    for (const auto& b : p4_bases)
        d.classes.push_back(develop({P4, {Block{P4, b}}, 4, 9, 36}));
    return entry;
}

// Resolvable P3-decomposition of the blown 5-cycle C_5(6).  Points are
// (position j, copy n) -> 6*j + n; base blocks are developed on the copy
// coordinate (mod 6), and class (j,i) is the union of translates i and i+3.
AtlasEntry make_c5x6() {
    AtlasEntry entry;
    entry.id = "c5x6-p3-factorization";
    entry.source = "base blocks developed mod 6: P3-factorization of C_5(6)";
    for (int j = 0; j < 5; ++j)
        for (int n = 0; n < 6; ++n)
            entry.labeling.push_back({std::to_string(n) + "_" + std::to_string(j), 6 * j + n});
    entry.errata.push_back("class pairing read as translates i and i+3; the translate-pair "
                           "(i, 3i) double-covers points at i = 0");
    Design& d = entry.design;
    d.kind = DesignKind::Ingredient;
    d.v = 30;
    d.profile = {0, 9, 0};
    d.cycle = CycleContext{5, 6};
    for (int j = 0; j < 5; ++j) {
        std::vector<Vertex> g;
        for (int n = 0; n < 6; ++n) g.push_back(6 * j + n);
        d.layout.groups.push_back(std::move(g));
    }
    const std::vector<std::vector<Block>> bases = {
        {p3(6, 0, 7), p3(14, 8, 15), p3(19, 13, 20), p3(26, 18, 27), p3(1, 25, 2)},
        {p3(8, 0, 9), p3(15, 7, 16), p3(22, 14, 23), p3(28, 18, 29), p3(4, 24, 5)},
        {p3(10, 0, 11), p3(16, 6, 17), p3(22, 12, 23), p3(24, 18, 25), p3(4, 26, 5)},
    };
    for (const auto& base : bases) {
        for (int i = 0; i < 3; ++i) {
            ResolutionClass c{P3, Scope::Full, -1, {}};
            for (const Block& b : translate_blocks(base, i, 6)) c.blocks.push_back(b);
            for (const Block& b : translate_blocks(base, i + 3, 6)) c.blocks.push_back(b);
            d.classes.push_back(std::move(c));
        }
    }
    return entry;
}

// (P2,C5)-URGDD(6,1) of type 2^5 on Z_10 with groups {i, i+5}.
AtlasEntry make_p2c5_61() {
    AtlasEntry entry;
    entry.id = "p2c5-2x5-(6,1)";
    entry.source = "explicit class listing: (P2,C5)-URGDD(6,1) of type 2^5";
    entry.errata.push_back("cycle base block read as (i,2+i,4+i,6+i,8+i); the printed "
                           "'6+1' leaves a malformed vertex");
    Design& d = entry.design;
    d.kind = DesignKind::Ingredient;
    d.v = 10;
    d.profile = {6, 0, 0};
    for (int i = 0; i < 5; ++i) d.layout.groups.push_back({i, i + 5});
    d.classes = {
        cls(P2, {e(2, 3), e(4, 5), e(8, 9), e(0, 6), e(1, 7)}),
        develop({P2, {e(1, 2)}, 2, 5, 10}),
        develop({P2, {e(0, 3)}, 2, 5, 10}),
        develop({P2, {e(1, 4)}, 2, 5, 10}),
        cls(P2, {e(0, 4), e(8, 2), e(1, 5), e(9, 3), e(6, 7)}),
        cls(P2, {e(4, 8), e(2, 6), e(5, 9), e(3, 7), e(0, 1)}),
        develop({C5, {blk(C5, {0, 2, 4, 6, 8})}, 1, 2, 10}),
    };
    return entry;
}

AtlasEntry make_p2c5_42() {
    AtlasEntry entry;
    entry.id = "p2c5-2x5-(4,2)";
    entry.source = "explicit class listing: (P2,C5)-URGDD(4,2) of type 2^5";
    Design& d = entry.design;
    d.kind = DesignKind::Ingredient;
    d.v = 10;
    d.profile = {4, 0, 0};
    for (int i = 0; i < 5; ++i) d.layout.groups.push_back({i, i + 5});
    d.classes = {
        develop({P2, {e(0, 1)}, 2, 5, 10}),
        develop({P2, {e(1, 2)}, 2, 5, 10}),
        develop({P2, {e(0, 3)}, 2, 5, 10}),
        develop({P2, {e(1, 4)}, 2, 5, 10}),
        develop({C5, {blk(C5, {0, 2, 4, 6, 8})}, 1, 2, 10}),
        develop({C5, {blk(C5, {0, 4, 8, 2, 6})}, 1, 2, 10}),
    };
    return entry;
}

const std::map<std::string, AtlasEntry>& registry() {
    static const std::map<std::string, AtlasEntry> entries = [] {
        std::map<std::string, AtlasEntry> m;
        for (AtlasEntry entry : {make_6x2_230(), make_4x3_430(), make_4x3_132(), make_12x2_162(),
                                 make_12x3_1610(), make_c5x6(), make_p2c5_61(), make_p2c5_42()}) {
            auto report = verify::verify_design(entry.design);
            if (!report.valid())
                throw TranscriptionError("atlas entry " + entry.id +
                                         " fails verification:\n" + report.summary());
            m.emplace(entry.id, std::move(entry));
        }
        return m;
    }();
    return entries;
}

} // namespace

const AtlasEntry& get(const std::string& id) {
    const auto& m = registry();
    auto it = m.find(id);
    if (it == m.end()) throw std::out_of_range("unknown atlas id: " + id);
    return it->second;
}

std::vector<std::string> ids() {
    std::vector<std::string> out;
    for (const auto& [id, entry] : registry()) out.push_back(id);
    return out;
}

} // namespace urd::atlas
