#include <urd/verify.hpp>

#include <algorithm>
#include <sstream>

namespace urd::verify {

namespace {

std::string vstr(Vertex a) { return std::to_string(a); }
std::string estr(const Edge& e) { return "{" + vstr(e.first) + "," + vstr(e.second) + "}"; }

struct Checker {
    const Design& d;
    Report report;
    std::vector<int> group_of;   // -1 = no group
    std::vector<char> in_hole;

    explicit Checker(const Design& design) : d(design) {
        group_of.assign(std::max(d.v, 0), -1);
        in_hole.assign(std::max(d.v, 0), 0);
    }

    void add(std::string code, std::string msg, int ci = -1, int bi = -1) {
        report.violations.push_back({std::move(code), std::move(msg), ci, bi});
    }

    bool check_layout() {
        if (d.v <= 0) {
            add("bad-point-count", "v must be positive");
            return false;
        }
        bool ok = true;
        std::vector<char> used(d.v, 0);
        for (std::size_t g = 0; g < d.layout.groups.size(); ++g) {
            for (Vertex p : d.layout.groups[g]) {
                if (p < 0 || p >= d.v) {
                    add("bad-layout", "group vertex " + vstr(p) + " out of range");
                    ok = false;
                    continue;
                }
                if (used[p]) {
                    add("bad-layout", "vertex " + vstr(p) + " in two groups");
                    ok = false;
                }
                used[p] = 1;
                group_of[p] = static_cast<int>(g);
            }
        }
        for (Vertex p : d.layout.hole) {
            if (p < 0 || p >= d.v) {
                add("bad-layout", "hole vertex " + vstr(p) + " out of range");
                ok = false;
                continue;
            }
            if (used[p]) {
                add("bad-layout", "vertex " + vstr(p) + " in a group and the hole");
                ok = false;
            }
            used[p] = 1;
            in_hole[p] = 1;
        }
        if (d.cycle) {
            if (d.kind != DesignKind::Ingredient)
                add("bad-layout", "cycle context is only valid for ingredient designs");
            if (d.cycle->positions < 3 || d.cycle->copies < 1 ||
                d.cycle->positions * d.cycle->copies != d.v) {
                add("bad-layout", "cycle context does not match v");
                ok = false;
            }
        }
        return ok;
    }

    // Target edge multiset of the context, as counts indexed by a*v+b (a<b).
    std::vector<int> target_edges() const {
        std::vector<int> want(static_cast<std::size_t>(d.v) * d.v, 0);
        auto mark = [&](Vertex a, Vertex b) { want[static_cast<std::size_t>(a) * d.v + b] = 1; };
        if (d.cycle) {
            const int m = d.cycle->positions, n = d.cycle->copies;
            for (int j = 0; j < m; ++j) {
                const int jn = (j + 1) % m;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        Edge e = make_edge(j * n + a, jn * n + b);
                        mark(e.first, e.second);
                    }
            }
            return want;
        }
        const bool has_hole = !d.layout.hole.empty();
        const bool has_groups = !d.layout.groups.empty();
        for (Vertex a = 0; a < d.v; ++a)
            for (Vertex b = a + 1; b < d.v; ++b) {
                if (has_hole && in_hole[a] && in_hole[b]) continue;
                if (!has_hole && has_groups && group_of[a] >= 0 && group_of[a] == group_of[b])
                    continue;
                mark(a, b);
            }
        return want;
    }

    void check_class_structure(int ci, const ResolutionClass& c) {
        for (std::size_t bi = 0; bi < c.blocks.size(); ++bi) {
            const Block& b = c.blocks[bi];
            if (b.kind != c.kind)
                add("kind-mismatch", "block kind differs from class kind", ci, (int)bi);
            const int n = block_size(b.kind);
            if (static_cast<int>(b.verts.size()) != n) {
                add("malformed-block", "wrong vertex count for " + std::string(kind_name(b.kind)),
                    ci, (int)bi);
                continue;
            }
            for (int i = 0; i < n; ++i) {
                if (b.verts[i] < 0 || b.verts[i] >= d.v)
                    add("malformed-block", "vertex " + vstr(b.verts[i]) + " out of range", ci,
                        (int)bi);
                for (int j = i + 1; j < n; ++j)
                    if (b.verts[i] == b.verts[j])
                        add("malformed-block", "repeated vertex " + vstr(b.verts[i]), ci, (int)bi);
            }
        }
    }

    void check_class_coverage(int ci, const ResolutionClass& c) {
        std::vector<int> cover(d.v, 0);
        for (const Block& b : c.blocks)
            for (Vertex p : b.verts)
                if (p >= 0 && p < d.v) cover[p]++;
        std::vector<char> expected(d.v, 1);
        switch (c.scope) {
        case Scope::Full: break;
        case Scope::PartialGroup:
            if (c.missing_group < 0 ||
                c.missing_group >= static_cast<int>(d.layout.groups.size())) {
                add("bad-scope", "missing_group index out of range", ci);
                return;
            }
            for (Vertex p : d.layout.groups[c.missing_group]) expected[p] = 0;
            break;
        case Scope::PartialHole:
            if (d.layout.hole.empty()) {
                add("bad-scope", "partial-hole class in a design without a hole", ci);
                return;
            }
            for (Vertex p : d.layout.hole) expected[p] = 0;
            break;
        }
        for (Vertex p = 0; p < d.v; ++p) {
            if (cover[p] != (expected[p] ? 1 : 0))
                add("coverage", "class covers vertex " + vstr(p) + " " +
                                    std::to_string(cover[p]) + " times (expected " +
                                    (expected[p] ? "1" : "0") + ")",
                    ci);
        }
    }

    void check_edges() {
        std::vector<int> want = target_edges();
        std::vector<int> have(want.size(), 0);
        for (std::size_t ci = 0; ci < d.classes.size(); ++ci) {
            for (std::size_t bi = 0; bi < d.classes[ci].blocks.size(); ++bi) {
                const Block& b = d.classes[ci].blocks[bi];
                if (static_cast<int>(b.verts.size()) != block_size(b.kind)) continue;
                bool sane = true;
                for (Vertex p : b.verts) sane = sane && p >= 0 && p < d.v;
                if (!sane) continue;
                const int n = static_cast<int>(b.verts.size());
                for (int i = 0; i + 1 < n; ++i) {
                    Edge e = make_edge(b.verts[i], b.verts[i + 1]);
                    if (e.first != e.second) have[(std::size_t)e.first * d.v + e.second]++;
                }
                if (kind_is_cycle(b.kind)) {
                    Edge e = make_edge(b.verts.front(), b.verts.back());
                    if (e.first != e.second) have[(std::size_t)e.first * d.v + e.second]++;
                }
            }
        }
        for (Vertex a = 0; a < d.v; ++a)
            for (Vertex b = a + 1; b < d.v; ++b) {
                const std::size_t idx = (std::size_t)a * d.v + b;
                if (have[idx] > want[idx])
                    add(want[idx] ? "duplicate-edge" : "foreign-edge",
                        "edge " + estr({a, b}) + " covered " + std::to_string(have[idx]) +
                            " times (target " + std::to_string(want[idx]) + ")");
                else if (have[idx] < want[idx])
                    add("missing-edge", "edge " + estr({a, b}) + " not covered");
            }
    }

    void check_profile_and_kinds() {
        Profile counted;
        for (std::size_t ci = 0; ci < d.classes.size(); ++ci) {
            switch (d.classes[ci].kind) {
            case BlockKind::P2: counted.r++; break;
            case BlockKind::P3: counted.s++; break;
            case BlockKind::P4: counted.t++; break;
            default:
                if (d.kind != DesignKind::Ingredient)
                    add("kind-not-allowed",
                        std::string(kind_name(d.classes[ci].kind)) +
                            " classes may only appear in ingredient designs",
                        (int)ci);
                break;
            }
        }
        Profile expected = d.profile;
        if (d.kind == DesignKind::Iurd) {
            counted = {};
            for (const auto& c : d.classes) {
                if (c.scope != Scope::Full) continue;
                switch (c.kind) {
                case BlockKind::P2: counted.r++; break;
                case BlockKind::P3: counted.s++; break;
                case BlockKind::P4: counted.t++; break;
                default: break;
                }
            }
        }
        if (counted != expected)
            add("profile-mismatch", "claimed profile " + expected.str() + " but classes count " +
                                        counted.str());
    }

    void check_scopes_by_kind() {
        for (std::size_t ci = 0; ci < d.classes.size(); ++ci) {
            const Scope sc = d.classes[ci].scope;
            switch (d.kind) {
            case DesignKind::Urd:
            case DesignKind::Urgdd:
                if (sc != Scope::Full)
                    add("bad-scope", "non-full class in a complete design", (int)ci);
                break;
            case DesignKind::Frame:
                if (sc != Scope::PartialGroup)
                    add("bad-scope", "frame classes must be partial-group", (int)ci);
                break;
            default: break;
            }
        }
        if (d.kind == DesignKind::Urd && (!d.layout.groups.empty() || !d.layout.hole.empty()))
            add("bad-layout", "a URD has no groups or hole");
        if (d.kind == DesignKind::Urgdd && d.layout.groups.size() < 2)
            add("bad-layout", "a URGDD needs at least two groups");
        if (d.kind == DesignKind::Iurd && d.layout.hole.empty())
            add("bad-layout", "an IURD needs a hole");
    }

    void check_frame_rule() {
        if (d.kind != DesignKind::Frame) return;
        std::vector<int> missed(d.layout.groups.size(), 0);
        for (const auto& c : d.classes) {
            if (c.kind != BlockKind::P2) {
                add("kind-not-allowed", "2-frame classes must be perfect matchings");
                return;
            }
            if (c.scope == Scope::PartialGroup && c.missing_group >= 0 &&
                c.missing_group < static_cast<int>(missed.size()))
                missed[c.missing_group]++;
        }
        for (std::size_t g = 0; g < missed.size(); ++g) {
            const int want = static_cast<int>(d.layout.groups[g].size()); // |G|/(n-1), n = 2
            if (missed[g] != want)
                add("frame-missing-count", "group " + std::to_string(g) + " missed by " +
                                               std::to_string(missed[g]) + " classes (expected " +
                                               std::to_string(want) + ")");
        }
    }
};

} // namespace

Report verify_design(const Design& d) {
    Checker ck(d);
    if (!ck.check_layout()) return std::move(ck.report);
    ck.check_scopes_by_kind();
    for (std::size_t ci = 0; ci < d.classes.size(); ++ci) {
        ck.check_class_structure((int)ci, d.classes[ci]);
        ck.check_class_coverage((int)ci, d.classes[ci]);
    }
    ck.check_edges();
    ck.check_profile_and_kinds();
    ck.check_frame_rule();
    return std::move(ck.report);
}

bool verify_counts(int v, const Profile& p) {
    if (p.r < 0 || p.s < 0 || p.t < 0) return false;
    return 6 * p.r + 8 * p.s + 9 * p.t == 6 * (v - 1);
}

std::string Report::summary(std::size_t max_lines) const {
    if (violations.empty()) return "valid";
    std::ostringstream out;
    out << violations.size() << " violation(s)\n";
    for (std::size_t i = 0; i < violations.size() && i < max_lines; ++i) {
        const auto& vi = violations[i];
        out << "  [" << vi.code << "]";
        if (vi.class_index >= 0) out << " class " << vi.class_index;
        if (vi.block_index >= 0) out << " block " << vi.block_index;
        out << ": " << vi.message << "\n";
    }
    if (violations.size() > max_lines)
        out << "  ... " << (violations.size() - max_lines) << " more\n";
    return out.str();
}

} // namespace urd::verify
