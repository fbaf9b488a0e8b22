#include <urd/compose.hpp>

#include <urd/verify.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace urd::compose {

namespace {

void verified(Design& d, const char* what) {
    canonicalize(d);
    auto report = verify::verify_design(d);
    if (!report.valid())
        throw CompositionError(std::string(what) + " produced an invalid design:\n" +
                               report.summary());
}

// position of every point inside a layout's groups: point -> (group, offset)
std::vector<std::pair<int, int>> group_positions(const Design& d) {
    std::vector<std::pair<int, int>> pos(d.v, {-1, -1});
    for (std::size_t g = 0; g < d.layout.groups.size(); ++g)
        for (std::size_t o = 0; o < d.layout.groups[g].size(); ++o)
            pos[d.layout.groups[g][o]] = {(int)g, (int)o};
    return pos;
}

std::vector<Block> map_blocks(const std::vector<Block>& blocks,
                              const std::vector<Vertex>& vmap) {
    std::vector<Block> out = blocks;
    for (auto& b : out)
        for (auto& x : b.verts) x = vmap[x];
    return out;
}

Profile count_profile(const std::vector<ResolutionClass>& classes, bool full_only) {
    Profile p;
    for (const auto& c : classes) {
        if (full_only && c.scope != Scope::Full) continue;
        switch (c.kind) {
        case BlockKind::P2: p.r++; break;
        case BlockKind::P3: p.s++; break;
        case BlockKind::P4: p.t++; break;
        default: break;
        }
    }
    return p;
}

int kind_rank(BlockKind k) {
    switch (k) {
    case BlockKind::P2: return 0;
    case BlockKind::P3: return 1;
    case BlockKind::P4: return 2;
    default: return 3;
    }
}

} // namespace

std::optional<ProfileAssignment> select_profiles(const Profile& target,
                                                 const TripleSet& base_set,
                                                 const TripleSet& part_set, int h) {
    if (h < 0) return std::nullopt;
    for (const Profile& base : base_set) {
        const int rr = target.r - base.r, sr = target.s - base.s, tr = target.t - base.t;
        if (rr < 0 || sr < 0 || tr < 0) continue;
        if (h == 0) {
            if (rr == 0 && sr == 0 && tr == 0) return ProfileAssignment{base, {}};
            continue;
        }
        // DP over (s,t) remainders; r is validated on reconstruction.
        const int S = sr, T = tr;
        std::vector<std::vector<std::vector<char>>> can(
            h + 1, std::vector<std::vector<char>>(S + 1, std::vector<char>(T + 1, 0)));
        can[0][0][0] = 1;
        for (int i = 1; i <= h; ++i)
            for (int s = 0; s <= S; ++s)
                for (int t = 0; t <= T; ++t) {
                    for (const Profile& p : part_set) {
                        if (p.s <= s && p.t <= t && can[i - 1][s - p.s][t - p.t]) {
                            can[i][s][t] = 1;
                            break;
                        }
                    }
                }
        if (!can[h][S][T]) continue;
        ProfileAssignment out{base, {}};
        int s = S, t = T, rsum = 0;
        for (int i = h; i >= 1; --i) {
            for (const Profile& p : part_set) {
                if (p.s <= s && p.t <= t && can[i - 1][s - p.s][t - p.t]) {
                    out.parts.push_back(p);
                    s -= p.s;
                    t -= p.t;
                    rsum += p.r;
                    break;
                }
            }
        }
        if ((int)out.parts.size() != h || rsum != rr) continue;
        return out;
    }
    return std::nullopt;
}

Design expand_rgdd(const Design& rgdd, int t, const std::vector<Profile>& class_profiles,
                   const DesignProvider& class_provider,
                   const std::optional<Profile>& group_fill,
                   const DesignProvider& group_provider) {
    if (t < 1) throw CompositionError("expansion factor must be positive");
    if (class_profiles.size() != rgdd.classes.size())
        throw CompositionError("one profile per parallel class required");
    Design out;
    out.v = rgdd.v * t;
    Profile total;

    for (std::size_t ci = 0; ci < rgdd.classes.size(); ++ci) {
        const ResolutionClass& cls = rgdd.classes[ci];
        if (cls.scope != Scope::Full)
            throw CompositionError("expand_rgdd expects full parallel classes");
        const int k = block_size(cls.kind);
        const Design& sub = class_provider(class_profiles[ci]);
        if (sub.v != k * t || (int)sub.layout.groups.size() != k)
            throw CompositionError("class design has the wrong shape for a type t^k URGDD");
        if (count_profile(sub.classes, false) != class_profiles[ci])
            throw CompositionError("class design profile mismatch");
        const auto pos = group_positions(sub);
        std::vector<ResolutionClass> united(sub.classes.size());
        for (std::size_t m = 0; m < sub.classes.size(); ++m)
            united[m] = {sub.classes[m].kind, Scope::Full, -1, {}};
        for (const Block& b : cls.blocks) {
            std::vector<Vertex> vmap(sub.v);
            for (Vertex q = 0; q < sub.v; ++q) {
                auto [grp, off] = pos[q];
                if (grp < 0) throw CompositionError("class design groups do not cover it");
                vmap[q] = b.verts[grp] * t + off;
            }
            for (std::size_t m = 0; m < sub.classes.size(); ++m)
                for (Block nb : map_blocks(sub.classes[m].blocks, vmap))
                    united[m].blocks.push_back(std::move(nb));
        }
        for (auto& u : united) out.classes.push_back(std::move(u));
        total += class_profiles[ci];
    }

    if (group_fill) {
        const Design& w = group_provider(*group_fill);
        if (count_profile(w.classes, false) != *group_fill)
            throw CompositionError("group fill profile mismatch");
        std::vector<ResolutionClass> united(w.classes.size());
        for (std::size_t m = 0; m < w.classes.size(); ++m)
            united[m] = {w.classes[m].kind, Scope::Full, -1, {}};
        for (const auto& grp : rgdd.layout.groups) {
            if ((int)grp.size() * t != w.v)
                throw CompositionError("group fill design has the wrong point count");
            std::vector<Vertex> vmap(w.v);
            for (Vertex q = 0; q < w.v; ++q) vmap[q] = grp[q / t] * t + q % t;
            for (std::size_t m = 0; m < w.classes.size(); ++m)
                for (Block nb : map_blocks(w.classes[m].blocks, vmap))
                    united[m].blocks.push_back(std::move(nb));
        }
        for (auto& u : united) out.classes.push_back(std::move(u));
        total += *group_fill;
        out.kind = DesignKind::Urd;
    } else {
        out.kind = DesignKind::Urgdd;
        for (const auto& grp : rgdd.layout.groups) {
            std::vector<Vertex> blown;
            for (Vertex p : grp)
                for (int c = 0; c < t; ++c) blown.push_back(p * t + c);
            out.layout.groups.push_back(std::move(blown));
        }
    }
    out.profile = total;
    verified(out, "expand_rgdd");
    return out;
}

Design fill_groups(const Design& gdd, const Profile& fill_profile,
                   const DesignProvider& provider) {
    if (gdd.layout.groups.empty()) throw CompositionError("fill_groups needs a grouped design");
    const std::size_t w = gdd.layout.groups.front().size();
    for (const auto& g : gdd.layout.groups)
        if (g.size() != w) throw CompositionError("fill_groups requires equal group sizes");
    const Design& fill = provider(fill_profile);
    if (fill.v != (int)w) throw CompositionError("fill design has the wrong point count");
    if (count_profile(fill.classes, false) != fill_profile)
        throw CompositionError("fill design profile mismatch");
    Design out;
    out.kind = DesignKind::Urd;
    out.v = gdd.v;
    out.classes = gdd.classes;
    std::vector<ResolutionClass> united(fill.classes.size());
    for (std::size_t m = 0; m < fill.classes.size(); ++m)
        united[m] = {fill.classes[m].kind, Scope::Full, -1, {}};
    for (const auto& grp : gdd.layout.groups) {
        std::vector<Vertex> vmap(fill.v);
        for (Vertex q = 0; q < fill.v; ++q) vmap[q] = grp[q];
        for (std::size_t m = 0; m < fill.classes.size(); ++m)
            for (Block nb : map_blocks(fill.classes[m].blocks, vmap))
                united[m].blocks.push_back(std::move(nb));
    }
    for (auto& u : united) out.classes.push_back(std::move(u));
    out.profile = gdd.profile + fill_profile;
    verified(out, "fill_groups");
    return out;
}

Design build_iurd_36_12(const Profile& full, const Profile& partial,
                        const DesignProvider& urgdd_12x3_provider,
                        const DesignProvider& urd12_provider) {
    const Design& base = urgdd_12x3_provider(full);
    if (base.v != 36 || base.layout.groups.size() != 3)
        throw CompositionError("IURD base must be a type 12^3 URGDD");
    const Design& fill = urd12_provider(partial);
    if (fill.v != 12) throw CompositionError("IURD group fill must be a URD(12)");
    if (count_profile(fill.classes, false) != partial)
        throw CompositionError("IURD fill profile mismatch");
    Design out;
    out.kind = DesignKind::Iurd;
    out.v = 36;
    out.layout.groups = {base.layout.groups[0], base.layout.groups[1]};
    out.layout.hole = base.layout.groups[2];
    out.classes = base.classes;
    std::vector<ResolutionClass> united(fill.classes.size());
    for (std::size_t m = 0; m < fill.classes.size(); ++m)
        united[m] = {fill.classes[m].kind, Scope::PartialHole, -1, {}};
    for (int a = 0; a < 2; ++a) {
        std::vector<Vertex> vmap(12);
        for (Vertex q = 0; q < 12; ++q) vmap[q] = base.layout.groups[a][q];
        for (std::size_t m = 0; m < fill.classes.size(); ++m)
            for (Block nb : map_blocks(fill.classes[m].blocks, vmap))
                united[m].blocks.push_back(std::move(nb));
    }
    for (auto& u : united) out.classes.push_back(std::move(u));
    out.profile = full; // IURD certificates carry the full-class profile
    verified(out, "build_iurd_36_12");
    return out;
}

Design frame_compose(const Design& frame, int t,
                     const std::vector<std::array<Profile, 2>>& per_class_profiles,
                     const DesignProvider& urgdd_12x2_provider, const IurdProvider& iurd_provider,
                     const Profile& hole_fill, const DesignProvider& hole_provider) {
    if (t != 12) throw CompositionError("frame_compose is specific to t = 12, h = 12");
    const int u = (int)frame.layout.groups.size();
    if (per_class_profiles.size() != (std::size_t)u)
        throw CompositionError("one profile pair per frame group required");
    for (const auto& g : frame.layout.groups)
        if (g.size() != 2) throw CompositionError("frame_compose expects a frame of type 2^u");
    const int hole_base = frame.v * t;
    Design out;
    out.kind = DesignKind::Urd;
    out.v = frame.v * t + 12;

    // partial classes of the frame, indexed by missing group
    std::vector<std::vector<const ResolutionClass*>> partials(u);
    for (const auto& c : frame.classes) {
        if (c.scope != Scope::PartialGroup || c.missing_group < 0 || c.missing_group >= u)
            throw CompositionError("frame classes must be partial-group");
        partials[c.missing_group].push_back(&c);
    }
    for (int i = 0; i < u; ++i)
        if (partials[i].size() != 2)
            throw CompositionError("each group must be missed by exactly two classes");

    std::vector<ResolutionClass> hole_united; // IURD partial classes + hole URD, by kind
    {
        const Design& hole_urd = hole_provider(hole_fill);
        if (hole_urd.v != 12) throw CompositionError("hole fill must be a URD(12)");
        if (count_profile(hole_urd.classes, false) != hole_fill)
            throw CompositionError("hole fill profile mismatch");
        hole_united.resize(hole_urd.classes.size());
        std::vector<Vertex> vmap(12);
        for (Vertex q = 0; q < 12; ++q) vmap[q] = hole_base + q;
        for (std::size_t m = 0; m < hole_urd.classes.size(); ++m) {
            hole_united[m] = {hole_urd.classes[m].kind, Scope::Full, -1,
                              map_blocks(hole_urd.classes[m].blocks, vmap)};
        }
    }

    Profile total = hole_fill;
    for (int i = 0; i < u; ++i) {
        // blow the two partial classes missing group i
        std::vector<ResolutionClass> blown; // partial big classes, kind-tagged
        for (int j = 0; j < 2; ++j) {
            const ResolutionClass& pc = *partials[i][j];
            const Design& sub = urgdd_12x2_provider(per_class_profiles[i][j]);
            if (sub.v != 2 * t || sub.layout.groups.size() != 2)
                throw CompositionError("edge designs must be type 12^2 URGDDs");
            if (count_profile(sub.classes, false) != per_class_profiles[i][j])
                throw CompositionError("edge design profile mismatch");
            const auto pos = group_positions(sub);
            std::vector<ResolutionClass> united(sub.classes.size());
            for (std::size_t m = 0; m < sub.classes.size(); ++m)
                united[m] = {sub.classes[m].kind, Scope::Full, -1, {}};
            for (const Block& b : pc.blocks) {
                std::vector<Vertex> vmap(sub.v);
                for (Vertex q = 0; q < sub.v; ++q) {
                    auto [grp, off] = pos[q];
                    vmap[q] = b.verts[grp] * t + off;
                }
                for (std::size_t m = 0; m < sub.classes.size(); ++m)
                    for (Block nb : map_blocks(sub.classes[m].blocks, vmap))
                        united[m].blocks.push_back(std::move(nb));
            }
            for (auto& c : united) blown.push_back(std::move(c));
        }

        const Profile full_i = per_class_profiles[i][0] + per_class_profiles[i][1];
        Design iurd = iurd_provider(full_i, hole_fill);
        if (iurd.v != 36 || iurd.layout.groups.size() != 2 || iurd.layout.hole.size() != 12)
            throw CompositionError("IURD(36,12) expected");
        // embed: IURD groups onto the two blown frame points, hole onto the hole
        std::vector<Vertex> vmap(36, -1);
        const Vertex a = frame.layout.groups[i][0], b = frame.layout.groups[i][1];
        for (int q = 0; q < 12; ++q) {
            vmap[iurd.layout.groups[0][q]] = a * t + q;
            vmap[iurd.layout.groups[1][q]] = b * t + q;
            vmap[iurd.layout.hole[q]] = hole_base + q;
        }

        // full IURD classes complete the blown partial classes, kind by kind
        std::vector<ResolutionClass*> blown_by_kind[3];
        for (auto& c : blown) blown_by_kind[kind_rank(c.kind)].push_back(&c);
        int used[3] = {0, 0, 0};
        std::size_t hole_next = 0;
        for (const auto& c : iurd.classes) {
            if (c.scope == Scope::Full) {
                auto& bucket = blown_by_kind[kind_rank(c.kind)];
                if (used[kind_rank(c.kind)] >= (int)bucket.size())
                    throw CompositionError("kind mismatch while combining frame classes");
                ResolutionClass* target = bucket[used[kind_rank(c.kind)]++];
                for (Block nb : map_blocks(c.blocks, vmap))
                    target->blocks.push_back(std::move(nb));
            } else {
                // partial (hole-missing) classes join the hole URD classes;
                // all groups share the hole_fill profile so the m-th partial
                // class has the kind of the m-th hole class
                if (hole_next >= hole_united.size())
                    throw CompositionError("too many partial classes in the IURD");
                if (hole_united[hole_next].kind != c.kind)
                    throw CompositionError("partial class kind mismatch");
                for (Block nb : map_blocks(c.blocks, vmap))
                    hole_united[hole_next].blocks.push_back(std::move(nb));
                hole_next++;
            }
        }
        for (int kr = 0; kr < 3; ++kr)
            if (used[kr] != (int)blown_by_kind[kr].size())
                throw CompositionError("unmatched blown classes remain");
        for (auto& c : blown) out.classes.push_back(std::move(c));
        total += full_i;
    }
    for (auto& c : hole_united) out.classes.push_back(std::move(c));
    out.profile = total;
    verified(out, "frame_compose");
    return out;
}

} // namespace urd::compose
