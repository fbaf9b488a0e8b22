#include <urd/model.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace urd {

std::string_view kind_name(BlockKind k) {
    switch (k) {
    case BlockKind::P2: return "P2";
    case BlockKind::P3: return "P3";
    case BlockKind::P4: return "P4";
    case BlockKind::C5: return "C5";
    case BlockKind::K3: return "K3";
    }
    return "?";
}

std::optional<BlockKind> kind_from_name(std::string_view name) {
    if (name == "P2") return BlockKind::P2;
    if (name == "P3") return BlockKind::P3;
    if (name == "P4") return BlockKind::P4;
    if (name == "C5") return BlockKind::C5;
    if (name == "K3") return BlockKind::K3;
    return std::nullopt;
}

std::string_view scope_name(Scope s) {
    switch (s) {
    case Scope::Full: return "full";
    case Scope::PartialGroup: return "partial-group";
    case Scope::PartialHole: return "partial-hole";
    }
    return "?";
}

std::optional<Scope> scope_from_name(std::string_view name) {
    if (name == "full") return Scope::Full;
    if (name == "partial-group") return Scope::PartialGroup;
    if (name == "partial-hole") return Scope::PartialHole;
    return std::nullopt;
}

std::string_view design_kind_name(DesignKind k) {
    switch (k) {
    case DesignKind::Urd: return "urd";
    case DesignKind::Urgdd: return "urgdd";
    case DesignKind::Iurd: return "iurd";
    case DesignKind::Frame: return "frame";
    case DesignKind::Ingredient: return "ingredient";
    }
    return "?";
}

std::optional<DesignKind> design_kind_from_name(std::string_view name) {
    if (name == "urd") return DesignKind::Urd;
    if (name == "urgdd") return DesignKind::Urgdd;
    if (name == "iurd") return DesignKind::Iurd;
    if (name == "frame") return DesignKind::Frame;
    if (name == "ingredient") return DesignKind::Ingredient;
    return std::nullopt;
}

std::vector<Edge> edges_of(const Block& b) {
    const int n = block_size(b.kind);
    if (static_cast<int>(b.verts.size()) != n)
        throw std::invalid_argument("block of kind " + std::string(kind_name(b.kind)) +
                                    " must have " + std::to_string(n) + " vertices");
    for (int i = 0; i < n; ++i) {
        if (b.verts[i] < 0) throw std::invalid_argument("negative vertex id in block");
        for (int j = i + 1; j < n; ++j)
            if (b.verts[i] == b.verts[j])
                throw std::invalid_argument("repeated vertex " + std::to_string(b.verts[i]) +
                                            " in block");
    }
    std::vector<Edge> out;
    out.reserve(kind_is_cycle(b.kind) ? n : n - 1);
    for (int i = 0; i + 1 < n; ++i) out.push_back(make_edge(b.verts[i], b.verts[i + 1]));
    if (kind_is_cycle(b.kind)) out.push_back(make_edge(b.verts.front(), b.verts.back()));
    return out;
}

Design relabel(const Design& d, std::span<const Vertex> perm) {
    if (d.cycle)
        throw std::invalid_argument(
            "cycle-context designs have positional edge targets and cannot be relabeled");
    if (static_cast<int>(perm.size()) != d.v)
        throw std::invalid_argument("permutation size does not match point count");
    std::vector<bool> seen(d.v, false);
    for (Vertex img : perm) {
        if (img < 0 || img >= d.v || seen[img])
            throw std::invalid_argument("relabeling map is not a bijection on 0..v-1");
        seen[img] = true;
    }
    auto map_all = [&](std::vector<Vertex>& vs) {
        for (Vertex& x : vs) x = perm[x];
    };
    Design out = d;
    for (auto& g : out.layout.groups) map_all(g);
    map_all(out.layout.hole);
    for (auto& c : out.classes)
        for (auto& b : c.blocks) map_all(b.verts);
    return out;
}

Design blow_up(const Design& d, int n, const std::function<const Design&(int)>& replacer) {
    if (n < 1) throw std::invalid_argument("blow-up factor must be positive");
    Design out;
    out.kind = d.kind;
    out.v = d.v * n;
    if (d.cycle) out.cycle = CycleContext{d.cycle->positions, d.cycle->copies * n};
    for (const auto& g : d.layout.groups) {
        std::vector<Vertex> blown;
        for (Vertex p : g)
            for (int c = 0; c < n; ++c) blown.push_back(p * n + c);
        out.layout.groups.push_back(std::move(blown));
    }
    for (Vertex p : d.layout.hole)
        for (int c = 0; c < n; ++c) out.layout.hole.push_back(p * n + c);

    for (int ci = 0; ci < static_cast<int>(d.classes.size()); ++ci) {
        const ResolutionClass& cls = d.classes[ci];
        const Design& sub = replacer(ci);
        const int bsize = block_size(cls.kind);
        if (sub.v != bsize * n)
            throw std::invalid_argument("replacer design for class " + std::to_string(ci) +
                                        " has " + std::to_string(sub.v) + " points, expected " +
                                        std::to_string(bsize * n));
        std::vector<ResolutionClass> united(sub.classes.size());
        for (std::size_t m = 0; m < sub.classes.size(); ++m) {
            united[m].kind = sub.classes[m].kind;
            united[m].scope = cls.scope;
            united[m].missing_group = cls.missing_group;
        }
        for (const Block& b : cls.blocks) {
            // sub point (position j, copy c) lands on b.verts[j]*n + c
            for (std::size_t m = 0; m < sub.classes.size(); ++m) {
                if (sub.classes[m].scope != Scope::Full)
                    throw std::invalid_argument("blow-up replacer classes must be full");
                for (const Block& sb : sub.classes[m].blocks) {
                    Block nb;
                    nb.kind = sb.kind;
                    nb.verts.reserve(sb.verts.size());
                    for (Vertex q : sb.verts) nb.verts.push_back(b.verts[q / n] * n + q % n);
                    united[m].blocks.push_back(std::move(nb));
                }
            }
        }
        for (auto& u : united) out.classes.push_back(std::move(u));
    }
    for (const auto& c : out.classes) {
        switch (c.kind) {
        case BlockKind::P2: out.profile.r++; break;
        case BlockKind::P3: out.profile.s++; break;
        case BlockKind::P4: out.profile.t++; break;
        default: break;
        }
    }
    return out;
}

namespace {

void canonicalize_block(Block& b) {
    if (b.kind == BlockKind::K3) {
        std::sort(b.verts.begin(), b.verts.end());
        return;
    }
    if (b.kind == BlockKind::C5) {
        auto mn = std::min_element(b.verts.begin(), b.verts.end());
        std::rotate(b.verts.begin(), mn, b.verts.end());
        if (b.verts.back() < b.verts[1]) std::reverse(b.verts.begin() + 1, b.verts.end());
        return;
    }
    if (b.verts.back() < b.verts.front()) std::reverse(b.verts.begin(), b.verts.end());
}

int kind_rank(BlockKind k) {
    switch (k) {
    case BlockKind::P2: return 0;
    case BlockKind::P3: return 1;
    case BlockKind::P4: return 2;
    case BlockKind::C5: return 3;
    case BlockKind::K3: return 4;
    }
    return 5;
}

} // namespace

void canonicalize(Design& d) {
    // Group order is preserved: partial classes reference groups by index.
    for (auto& g : d.layout.groups) std::sort(g.begin(), g.end());
    std::sort(d.layout.hole.begin(), d.layout.hole.end());
    for (auto& c : d.classes) {
        for (auto& b : c.blocks) canonicalize_block(b);
        std::sort(c.blocks.begin(), c.blocks.end(),
                  [](const Block& a, const Block& b) { return a.verts < b.verts; });
    }
    std::stable_sort(d.classes.begin(), d.classes.end(),
                     [](const ResolutionClass& a, const ResolutionClass& b) {
                         return kind_rank(a.kind) < kind_rank(b.kind);
                     });
}

} // namespace urd
