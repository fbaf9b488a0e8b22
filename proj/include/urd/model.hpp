#ifndef URD_MODEL_HPP
#define URD_MODEL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <urd/profile.hpp>

namespace urd {

using Vertex = std::int32_t;

/// Block shapes that occur anywhere in the pipeline.  P2/P3/P4 are the path
/// blocks of the final decompositions; C5 and K3 occur only inside
/// ingredient designs (cycle factorizations and 3-RGDDs).
enum class BlockKind : std::uint8_t { P2, P3, P4, C5, K3 };

constexpr int block_size(BlockKind k) {
    switch (k) {
    case BlockKind::P2: return 2;
    case BlockKind::P3: return 3;
    case BlockKind::P4: return 4;
    case BlockKind::C5: return 5;
    case BlockKind::K3: return 3;
    }
    return 0;
}

/// Cycle kinds carry the wrap-around edge in addition to consecutive pairs.
constexpr bool kind_is_cycle(BlockKind k) { return k == BlockKind::C5 || k == BlockKind::K3; }

std::string_view kind_name(BlockKind k);
std::optional<BlockKind> kind_from_name(std::string_view name);

/// Unordered vertex pair, canonicalized low id first.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Block {
    BlockKind kind;
    std::vector<Vertex> verts;
};

/// Edge set of a block: consecutive pairs, plus the wrap-around pair for
/// cycle kinds.  Throws std::invalid_argument on malformed blocks
/// (wrong length, repeated or negative vertex).
std::vector<Edge> edges_of(const Block& b);

enum class Scope : std::uint8_t { Full, PartialGroup, PartialHole };

std::string_view scope_name(Scope s);
std::optional<Scope> scope_from_name(std::string_view name);

/// Kind-uniform set of vertex-disjoint blocks covering a stated point set:
/// all points (Full), all points outside one group (PartialGroup), or all
/// points outside the hole (PartialHole).
struct ResolutionClass {
    BlockKind kind;
    Scope scope = Scope::Full;
    int missing_group = -1; // valid only for PartialGroup
    std::vector<Block> blocks;
};

struct GroupLayout {
    std::vector<std::vector<Vertex>> groups;
    std::vector<Vertex> hole;
};

enum class DesignKind : std::uint8_t { Urd, Urgdd, Iurd, Frame, Ingredient };

std::string_view design_kind_name(DesignKind k);
std::optional<DesignKind> design_kind_from_name(std::string_view name);

/// Target edge set override for ingredient designs whose context is a blown
/// cycle C_{m(n)} rather than a complete or complete multipartite graph.
struct CycleContext {
    int positions = 0; // cycle length m
    int copies = 0;    // blow-up factor n; point (j, c) has id j*copies + c
};

/// A design certificate.  The context edge set is E(K_v) when the layout is
/// empty, the cross edges of the multipartite graph when groups are present,
/// E(K_v) - E(K_hole) when a hole is present, and the blown cycle edges when
/// `cycle` is set.  `profile` counts P2/P3/P4 classes; C5 and K3 classes are
/// outside the triple vocabulary and are not counted.
struct Design {
    DesignKind kind = DesignKind::Urd;
    int v = 0;
    GroupLayout layout;
    std::vector<ResolutionClass> classes;
    Profile profile;
    std::optional<CycleContext> cycle;
};

/// Relabels every vertex through a bijection on 0..v-1.  Throws
/// std::invalid_argument if the map is not a bijection of the right size.
Design relabel(const Design& d, std::span<const Vertex> perm);

/// Blows every point up n times: point p becomes {p*n, .., p*n + n - 1} and
/// every class is rebuilt by placing `replacer(class_index)` — a design on
/// block_size*n points whose groups are the n-sets of the block positions —
/// on b x {0..n-1} for each block b, then uniting the copies' classes across
/// the blocks of the class.  Scopes carry over.  Throws on shape mismatch.
Design blow_up(const Design& d, int n, const std::function<const Design&(int)>& replacer);

/// Orients paths (reverse when last < first), rotates cycles to a fixed
/// form, sorts blocks by first vertex and classes by kind.  Serialization
/// byte-stability relies on this.
void canonicalize(Design& d);

} // namespace urd

#endif
